use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{inner_automorphism, ElementId, FiniteGroup, GroupHom, Holomorph};
use crate::hgs::{certify, RegularSubgroup};
use crate::perm::{Perm, PermGroup};
use crate::rho::rho_conjugate;

/// A regular embedding `β : G → Hol(M)`, stored elementwise.
#[derive(Debug, Clone)]
pub struct HolEmbedding {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    beta: Vec<Perm>,
}

impl HolEmbedding {
    /// Validates that `beta` is an injective homomorphism into `Hol(M)` with
    /// regular image.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, beta: Vec<Perm>) -> Result<Self> {
        let (n, m) = (source.order(), target.order());
        if n != m {
            return Err(Error::InvalidEmbedding(format!("|G| = {n} but |M| = {m}")));
        }
        if beta.len() != n || beta.iter().any(|p| p.base() != m) {
            return Err(Error::InvalidEmbedding("wrong number or size of images".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if beta[source.mul(a, b)] != beta[a].compose(&beta[b]) {
                    return Err(Error::InvalidEmbedding(format!(
                        "not a homomorphism at ({}, {})",
                        source.name(a),
                        source.name(b)
                    )));
                }
            }
        }
        let mut hit = vec![false; m];
        for p in &beta {
            if std::mem::replace(&mut hit[p.apply(0)], true) {
                return Err(Error::InvalidEmbedding("image is not regular".into()));
            }
        }
        if let Some(g) = beta.iter().position(|p| !Holomorph::is_holomorph_element(&target, p)) {
            return Err(Error::InvalidEmbedding(format!(
                "image of {} is not in the holomorph",
                source.name(g)
            )));
        }
        Ok(HolEmbedding { source, target, beta })
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn beta(&self) -> &[Perm] {
        &self.beta
    }

    pub fn image(&self, g: ElementId) -> &Perm {
        &self.beta[g]
    }

    /// `β ∘ φ` for an automorphism `φ` of `G`.
    pub fn precompose(&self, phi: &GroupHom) -> Result<HolEmbedding> {
        let beta = self.source.elements().map(|g| self.beta[phi.apply(g)].clone()).collect();
        HolEmbedding::new(Arc::clone(&self.source), Arc::clone(&self.target), beta)
    }

    /// `g ↦ θ β(g) θ⁻¹` for an automorphism `θ` of `M`.
    pub fn conjugate_by_automorphism(&self, theta: &GroupHom) -> HolEmbedding {
        let t = Perm::from_hom(theta);
        let beta = self.beta.iter().map(|p| p.conjugate_by(&t)).collect();
        HolEmbedding { source: Arc::clone(&self.source), target: Arc::clone(&self.target), beta }
    }
}

/// The subgroup of `Perm(G)` translated from generator-level embedding data.
///
/// With `a⁻¹(g) = β(g)[e_M]`, returns `{a ∘ λ(μ) ∘ a⁻¹ : μ ∈ M}`.
pub(crate) fn translate_embedding(group: &FiniteGroup, m: &FiniteGroup, beta: &[Perm]) -> PermGroup {
    let n = group.order();
    let mut a = vec![0; n];
    for (g, p) in beta.iter().enumerate() {
        a[p.apply(0)] = g;
    }
    let a_inv: Vec<ElementId> = beta.iter().map(|p| p.apply(0)).collect();
    let eta = |mu: ElementId| -> Perm {
        Perm::from_images_unchecked((0..n).map(|x| a[m.mul(mu, a_inv[x])]).collect())
    };
    let mut elements: Vec<Perm> = m.elements().map(eta).collect();
    elements.sort();
    let generators = m.generators().iter().map(|&mu| eta(mu)).collect();
    PermGroup::from_parts(n, generators, elements)
}

/// The G-stable regular subgroup corresponding to `β`.
pub fn from_hol_embedding(embedding: &HolEmbedding) -> Result<RegularSubgroup> {
    let perms = translate_embedding(&embedding.source, &embedding.target, &embedding.beta);
    let n = certify(&embedding.source, perms)?;
    Ok(match embedding.target.spec() {
        Some(spec) => n.with_type_label(spec.clone()),
        None => n,
    })
}

/// The embedding attached to `N` and an isomorphism `ι : M → N`.
///
/// `ι` is given on indices: `ι(μ) = a` means `ι(μ) = η_a`. Then
/// `a(μ) = ι(μ)[e]` and `β(g) = a⁻¹ ∘ λ(g) ∘ a`.
pub fn to_hol_embedding(n: &RegularSubgroup, m: &Arc<FiniteGroup>, iota: &GroupHom) -> Result<HolEmbedding> {
    let abstract_n = n.abstract_group();
    if iota.images().len() != m.order() || !iota.is_bijective() || !iota.is_homomorphism(m, &abstract_n) {
        return Err(Error::NotIsomorphism("ι is not an isomorphism onto N".into()));
    }
    let a = iota.images();
    let mut a_inv = vec![0; a.len()];
    for (mu, &x) in a.iter().enumerate() {
        a_inv[x] = mu;
    }
    let group = n.group();
    let beta = group
        .elements()
        .map(|g| Perm::from_images_unchecked(m.elements().map(|mu| a_inv[group.mul(g, a[mu])]).collect()))
        .collect();
    HolEmbedding::new(Arc::clone(group), Arc::clone(m), beta)
}

/// `to_hol_embedding` with some isomorphism from `m` onto `N`.
pub fn to_hol_embedding_any(n: &RegularSubgroup, m: &Arc<FiniteGroup>) -> Result<HolEmbedding> {
    let iota = crate::group::are_isomorphic(m, &n.abstract_group())
        .ok_or_else(|| Error::NotIsomorphism("N is not of the requested type".into()))?;
    to_hol_embedding(n, m, &iota)
}

/// Whether `β₂ = θ β₁ θ⁻¹` for some `θ ∈ Aut(M)`.
pub fn embeddings_equivalent(b1: &HolEmbedding, b2: &HolEmbedding) -> bool {
    if b1.source.order() != b2.source.order() || b1.target != b2.target {
        return false;
    }
    let gens = b1.source.generators();
    crate::group::automorphisms(&b1.target).iter().any(|theta| {
        let t = Perm::from_hom(theta);
        gens.iter().all(|&g| b1.beta[g].conjugate_by(&t) == b2.beta[g])
    })
}

/// Translating `β ∘ φ_{g⁻¹}` gives the ρ-conjugate `N_g` of the translate of `β`.
pub fn conjugation_precomposition_check(embedding: &HolEmbedding, g: ElementId) -> Result<bool> {
    let group = &embedding.source;
    let shifted = embedding.precompose(&inner_automorphism(group, group.inv(g)))?;
    let lhs = from_hol_embedding(&shifted)?;
    let rhs = rho_conjugate(&from_hol_embedding(embedding)?, g);
    Ok(lhs == rhs)
}
