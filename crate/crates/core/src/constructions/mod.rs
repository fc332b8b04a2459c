//! Constructions of Hopf-Galois structures and their behaviour under
//! ρ-conjugation: holomorph translation, fixed-point-free pairs, abelian
//! maps, and induced structures.

mod byott;
mod induced;
mod maps;

pub(crate) use byott::translate_embedding;
pub use byott::{
    conjugation_precomposition_check, embeddings_equivalent, from_hol_embedding, to_hol_embedding,
    to_hol_embedding_any, HolEmbedding,
};
pub use induced::{
    complemented_subgroups, coset_stable_regular_subgroups, induced_hgs, induced_structures_for,
    subgroup_as_group, transport_induced_input, transport_quotient_structure,
    transport_subgroup_structure, InducedInput, COSET_SEARCH_LIMIT,
};
pub use maps::{
    abelian_map_element, abelian_map_transport_check, abelian_maps, fpf_check, fpf_embedding,
    fpf_transport_check, hgs_from_abelian_map, hgs_from_fpf, AbelianMap,
};
