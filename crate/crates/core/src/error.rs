use thiserror::Error;

use crate::group::ElementId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("permutation base mismatch: {left} vs {right}")]
    BaseMismatch { left: usize, right: usize },

    #[error("closure exceeded the cap of {cap} elements")]
    ClosureCap { cap: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("subgroup is not regular: {0}")]
    NotRegular(String),

    #[error("subgroup is not G-stable: conjugating generator #{eta} by lambda({g}) leaves the subgroup")]
    NotStable { g: ElementId, eta: usize },

    #[error("permutation is not an element of the subgroup")]
    NotInSubgroup,

    #[error("no catalog guarantee for order {0}; pass an explicit type filter")]
    UnsupportedOrder(usize),

    #[error("type of order {0} is not in the catalog")]
    UnknownType(usize),

    #[error("order {order} exceeds the limit {limit} of this routine")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("skew brace axiom fails: {0}")]
    BraceAxiom(String),

    #[error("braid relation fails at ({0}, {1}, {2})")]
    BraidFailure(usize, usize, usize),

    #[error("map is not a group homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("map is not an isomorphism onto the subgroup: {0}")]
    NotIsomorphism(String),

    #[error("homomorphisms are not a fixed point free pair (they agree at {0})")]
    NotFixedPointFree(ElementId),

    #[error("invalid holomorph embedding: {0}")]
    InvalidEmbedding(String),

    #[error("abelian map construction failed: {0}")]
    ConstructionFailure(String),

    #[error("subgroup has no normal complement")]
    NoNormalComplement,

    #[error("invalid induction data: {0}")]
    IdentificationFailure(String),

    #[error("coset space degree {0} is neither prime nor at most 8")]
    DegreeTooLarge(usize),

    #[error("automorphism does not preserve the normal complement")]
    DoesNotPreserveComplement,

    #[error("subgroup of N is not G-stable")]
    StabilityViolation,

    #[error("fixed subgroup has order {fixed}, expected {expected}")]
    RealizabilityDefect { fixed: usize, expected: usize },

    #[error("{0}")]
    Invalid(String),
}
