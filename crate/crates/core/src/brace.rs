//! Skew braces `(B, ⋆, ∘)` extracted from Hopf-Galois structures, and the
//! criteria relating them to ρ-conjugation.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{automorphisms, isomorphisms, ElementId, FiniteGroup, GroupHom, Subgroup};
use crate::hgs::{certify, RegularSubgroup};
use crate::perm::{rho, Perm, PermGroup};

/// A skew brace on `{0, …, n-1}` with shared identity 0.
///
/// `star_inverse[x]` is `x⁻¹` in `(B, ⋆)`; `circ_inverse[x]` is `x̄` in `(B, ∘)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkewBrace {
    size: usize,
    star: Vec<ElementId>,
    circ: Vec<ElementId>,
    #[serde(skip)]
    star_inverse: Vec<ElementId>,
    #[serde(skip)]
    circ_inverse: Vec<ElementId>,
}

fn inverses_of(size: usize, table: &[ElementId]) -> Vec<ElementId> {
    (0..size).map(|x| (0..size).find(|&y| table[x * size + y] == 0).unwrap_or(0)).collect()
}

impl SkewBrace {
    /// Checks both group tables and the brace relation on every triple.
    pub fn from_tables(size: usize, star: Vec<ElementId>, circ: Vec<ElementId>) -> Result<Self> {
        for (name, table) in [("⋆", &star), ("∘", &circ)] {
            FiniteGroup::from_table(size, table.clone(), None, None)
                .map_err(|e| Error::BraceAxiom(format!("({name}) is not a group: {e}")))?;
        }
        let brace = Self::from_tables_unchecked(size, star, circ);
        if let Some((x, y, z)) = brace.axiom_violation() {
            return Err(Error::BraceAxiom(format!("x∘(y⋆z) relation fails at ({x}, {y}, {z})")));
        }
        Ok(brace)
    }

    /// Wraps tables without validation. Meant for negative tests and for
    /// callers that have already certified the tables.
    pub fn from_tables_unchecked(size: usize, star: Vec<ElementId>, circ: Vec<ElementId>) -> Self {
        let star_inverse = inverses_of(size, &star);
        let circ_inverse = inverses_of(size, &circ);
        SkewBrace { size, star, circ, star_inverse, circ_inverse }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn star(&self, x: ElementId, y: ElementId) -> ElementId {
        self.star[x * self.size + y]
    }

    pub fn circ(&self, x: ElementId, y: ElementId) -> ElementId {
        self.circ[x * self.size + y]
    }

    /// `x⁻¹` in `(B, ⋆)`.
    pub fn star_inv(&self, x: ElementId) -> ElementId {
        self.star_inverse[x]
    }

    /// `x̄` in `(B, ∘)`.
    pub fn circ_inv(&self, x: ElementId) -> ElementId {
        self.circ_inverse[x]
    }

    pub fn star_table(&self) -> &[ElementId] {
        &self.star
    }

    pub fn circ_table(&self) -> &[ElementId] {
        &self.circ
    }

    pub fn star_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::from_table(self.size, self.star.clone(), None, None)
    }

    pub fn circ_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::from_table(self.size, self.circ.clone(), None, None)
    }

    /// First triple violating `x ∘ (y ⋆ z) = (x ∘ y) ⋆ x⁻¹ ⋆ (x ∘ z)`.
    pub fn axiom_violation(&self) -> Option<(ElementId, ElementId, ElementId)> {
        let n = self.size;
        (0..n).into_par_iter().find_map_first(|x| {
            let xi = self.star_inv(x);
            for y in 0..n {
                let xy = self.circ(x, y);
                for z in 0..n {
                    let lhs = self.circ(x, self.star(y, z));
                    let rhs = self.star(self.star(xy, xi), self.circ(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
            None
        })
    }

    /// Whether `θ(x ⋆ y) = θ(x) ⋆ θ(y)` for all `x, y`.
    pub fn preserves_star(&self, theta: &GroupHom) -> bool {
        let n = self.size;
        (0..n).all(|x| (0..n).all(|y| theta.apply(self.star(x, y)) == self.star(theta.apply(x), theta.apply(y))))
    }
}

/// `(G, ⋆, ∘)` with `∘` the product of `G` and `a ⋆ b = η_a[b]`.
pub fn brace_from_subgroup(n: &RegularSubgroup) -> Result<SkewBrace> {
    let size = n.group().order();
    SkewBrace::from_tables(size, n.star_table(), n.group().table().to_vec())
}

/// `{x ↦ a ⋆ x}` as a `(B, ∘)`-stable regular subgroup of `Perm(B)`.
pub fn subgroup_from_brace(brace: &SkewBrace) -> Result<RegularSubgroup> {
    let group = Arc::new(brace.circ_group()?);
    subgroup_from_brace_over(brace, &group)
}

/// As [`subgroup_from_brace`], reusing a group whose table is `brace`'s `∘`.
pub fn subgroup_from_brace_over(brace: &SkewBrace, group: &Arc<FiniteGroup>) -> Result<RegularSubgroup> {
    if group.table() != brace.circ_table() {
        return Err(Error::Invalid("group table differs from the brace's ∘".into()));
    }
    let n = brace.size();
    let mut elements: Vec<Perm> =
        (0..n).map(|a| Perm::new((0..n).map(|x| brace.star(a, x)).collect())).collect::<Result<_>>()?;
    elements.sort();
    certify(group, PermGroup::from_sorted_closed(n, elements))
}

/// Whether `(y ⋆ z) ∘ g = (y ∘ g) ⋆ g⁻¹ ⋆ (z ∘ g)` for all `y, z` at this `g`.
pub fn right_distributive_at(brace: &SkewBrace, g: ElementId) -> bool {
    let n = brace.size();
    let gi = brace.star_inv(g);
    (0..n).all(|y| {
        let yg = brace.circ(y, g);
        (0..n).all(|z| brace.circ(brace.star(y, z), g) == brace.star(brace.star(yg, gi), brace.circ(z, g)))
    })
}

/// Whether the mirrored brace relation holds for every `g`.
pub fn is_two_sided(brace: &SkewBrace) -> bool {
    (0..brace.size()).into_par_iter().all(|g| right_distributive_at(brace, g))
}

/// Automorphisms of `(B, ∘)` that also respect `⋆`.
pub fn brace_automorphisms(brace: &SkewBrace) -> Result<Vec<GroupHom>> {
    let circ = brace.circ_group()?;
    Ok(automorphisms(&circ).into_iter().filter(|t| brace.preserves_star(t)).collect())
}

/// The inner automorphism `x ↦ g ∘ x ∘ ḡ` of `(B, ∘)`.
fn circ_inner(brace: &SkewBrace, g: ElementId) -> GroupHom {
    let gb = brace.circ_inv(g);
    GroupHom::from_images((0..brace.size()).map(|x| brace.circ(brace.circ(g, x), gb)).collect())
}

/// `G′ = {g : φ_g preserves ⋆}`.
pub fn g_prime(brace: &SkewBrace) -> Result<Subgroup> {
    let circ = brace.circ_group()?;
    let elements = (0..brace.size()).filter(|&g| brace.preserves_star(&circ_inner(brace, g))).collect();
    Subgroup::from_elements(&circ, elements).ok_or_else(|| Error::Invalid("G′ is not closed".into()))
}

/// The three equivalent normaliser conditions at one `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalizerCriteria {
    /// `ρ(g)` normalises `N`.
    pub rho_normalizes: bool,
    /// `φ_g` is a brace automorphism.
    pub inner_is_brace_automorphism: bool,
    /// The mirrored brace relation holds at `g`.
    pub right_distributive: bool,
}

impl NormalizerCriteria {
    pub fn agree(&self) -> bool {
        self.rho_normalizes == self.inner_is_brace_automorphism
            && self.inner_is_brace_automorphism == self.right_distributive
    }
}

/// Evaluates the three conditions for `N` and its brace at `g`.
pub fn normalizer_criteria(n: &RegularSubgroup, brace: &SkewBrace, g: ElementId) -> NormalizerCriteria {
    NormalizerCriteria {
        rho_normalizes: n.perms().is_normalized_by(&rho(n.group(), g)),
        inner_is_brace_automorphism: brace.preserves_star(&circ_inner(brace, g)),
        right_distributive: right_distributive_at(brace, g),
    }
}

/// Whether `ḡ⁻¹ ⋆ (ḡ ∘ g⁻¹) ⋆ ḡ⁻¹ = e` for every `g`.
pub fn inverse_identity_check(brace: &SkewBrace) -> bool {
    (0..brace.size()).all(|g| {
        let gb = brace.circ_inv(g);
        let gbi = brace.star_inv(gb);
        brace.star(brace.star(gbi, brace.circ(gb, brace.star_inv(g))), gbi) == 0
    })
}

/// An isomorphism `B1 → B2` of skew braces, if any.
pub fn braces_isomorphic(b1: &SkewBrace, b2: &SkewBrace) -> Result<Option<GroupHom>> {
    if b1.size() != b2.size() {
        return Ok(None);
    }
    let (c1, c2) = (b1.circ_group()?, b2.circ_group()?);
    let n = b1.size();
    Ok(isomorphisms(&c1, &c2).into_iter().find(|f| {
        (0..n).all(|x| (0..n).all(|y| f.apply(b1.star(x, y)) == b2.star(f.apply(x), f.apply(y))))
    }))
}

/// Outcome of comparing two structures on the same group at brace level and
/// at subgroup level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BraceComparison {
    /// The extracted braces are isomorphic.
    pub braces_isomorphic: bool,
    /// `N2 = φ⁻¹ N1 φ` for some automorphism `φ` of `G`.
    pub conjugate_by_automorphism: bool,
}

impl BraceComparison {
    pub fn agree(&self) -> bool {
        self.braces_isomorphic == self.conjugate_by_automorphism
    }
}

pub fn compare_structures(n1: &RegularSubgroup, n2: &RegularSubgroup) -> Result<BraceComparison> {
    if n1.group().table() != n2.group().table() {
        return Err(Error::Invalid("structures live on different groups".into()));
    }
    let braces_iso = braces_isomorphic(&brace_from_subgroup(n1)?, &brace_from_subgroup(n2)?)?.is_some();
    let conj = automorphisms(n1.group()).iter().any(|phi| {
        let p = Perm::from_hom(phi);
        n1.perms().conjugate_by(&p.inverse()) == *n2.perms()
    });
    Ok(BraceComparison { braces_isomorphic: braces_iso, conjugate_by_automorphism: conj })
}

/// A set-theoretic solution `r : B × B → B × B` of the Yang-Baxter equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YbeMap {
    size: usize,
    table: Vec<(ElementId, ElementId)>,
}

impl YbeMap {
    /// `r(x, y) = (u, ū ∘ x ∘ y)` with `u = x⁻¹ ⋆ (x ∘ y)`.
    pub fn from_brace(brace: &SkewBrace) -> Self {
        let n = brace.size();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let xy = brace.circ(x, y);
                let u = brace.star(brace.star_inv(x), xy);
                table.push((u, brace.circ(brace.circ_inv(u), xy)));
            }
        }
        YbeMap { size: n, table }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, x: ElementId, y: ElementId) -> (ElementId, ElementId) {
        self.table[x * self.size + y]
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.table.len()];
        self.table.iter().all(|&(a, b)| !std::mem::replace(&mut hit[a * self.size + b], true))
    }

    /// First `(x, y, z)` where `(r×id)(id×r)(r×id) ≠ (id×r)(r×id)(id×r)`.
    pub fn braid_violation(&self) -> Option<(ElementId, ElementId, ElementId)> {
        let n = self.size;
        (0..n).into_par_iter().find_map_first(|x| {
            for y in 0..n {
                for z in 0..n {
                    // Left side: r12 r23 r12, applied right to left.
                    let (a, b) = self.apply(x, y);
                    let (b, c) = self.apply(b, z);
                    let (a, b) = self.apply(a, b);
                    let lhs = (a, b, c);
                    let (b2, c2) = self.apply(y, z);
                    let (a2, b2) = self.apply(x, b2);
                    let (b2, c2) = self.apply(b2, c2);
                    if lhs != (a2, b2, c2) {
                        return Some((x, y, z));
                    }
                }
            }
            None
        })
    }
}

/// The Yang-Baxter map of a brace, checked bijective and braid-valid.
pub fn ybe_map(brace: &SkewBrace) -> Result<YbeMap> {
    let r = YbeMap::from_brace(brace);
    if !r.is_bijective() {
        return Err(Error::Invalid("the Yang-Baxter map is not bijective".into()));
    }
    if let Some((x, y, z)) = r.braid_violation() {
        return Err(Error::BraidFailure(x, y, z));
    }
    Ok(r)
}
