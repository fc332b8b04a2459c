use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group::{
    all_subgroups, build_group, catalog, is_prime, normal_complement, ElementId, FiniteGroup,
    GroupHom, Subgroup,
};
use crate::hgs::{certify, enumerate_hgs, RegularSubgroup};
use crate::perm::{CosetSpace, Perm, PermGroup};

/// Data for the induced construction: `T ≤ G` with normal complement `S`,
/// a regular subgroup `A` of `Perm(G/T)` normalised by left translation, and
/// a `T`-stable regular subgroup `B` of `Perm(T)`.
///
/// Cosets are indexed as in [`CosetSpace`]; points of `T` are indexed by
/// their position in `T`'s sorted element list.
#[derive(Debug, Clone)]
pub struct InducedInput {
    group: Arc<FiniteGroup>,
    t: Subgroup,
    s: Subgroup,
    cosets: CosetSpace,
    a: PermGroup,
    b: PermGroup,
}

impl InducedInput {
    /// Finds the normal complement of `t` and validates `a` and `b`.
    pub fn new(group: &Arc<FiniteGroup>, t: Subgroup, a: PermGroup, b: PermGroup) -> Result<Self> {
        let s = normal_complement(group, &t).ok_or(Error::NoNormalComplement)?;
        Self::with_complement(group, t, s, a, b)
    }

    pub fn with_complement(
        group: &Arc<FiniteGroup>,
        t: Subgroup,
        s: Subgroup,
        a: PermGroup,
        b: PermGroup,
    ) -> Result<Self> {
        if !s.is_normal(group) || !s.intersects_trivially(&t) || s.order() * t.order() != group.order() {
            return Err(Error::NoNormalComplement);
        }
        let cosets = CosetSpace::new(group, &t);
        if a.base() != cosets.len() || !a.is_regular() {
            return Err(Error::NotRegular("A is not regular on the coset space".into()));
        }
        let translations = cosets.translation_group(group);
        if !translations.generators().iter().all(|l| a.is_normalized_by(l)) {
            return Err(Error::StabilityViolation);
        }
        let t_group = subgroup_as_group(group, &t);
        if b.base() != t.order() || !b.is_regular() {
            return Err(Error::NotRegular("B is not regular on T".into()));
        }
        let t_lambda: Vec<Perm> =
            t_group.generators().iter().map(|&x| crate::perm::lambda(&t_group, x)).collect();
        if !t_lambda.iter().all(|l| b.is_normalized_by(l)) {
            return Err(Error::StabilityViolation);
        }
        Ok(InducedInput { group: Arc::clone(group), t, s, cosets, a, b })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn t(&self) -> &Subgroup {
        &self.t
    }

    pub fn s(&self) -> &Subgroup {
        &self.s
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    pub fn a(&self) -> &PermGroup {
        &self.a
    }

    pub fn b(&self) -> &PermGroup {
        &self.b
    }
}

/// `T` as a table group; element `i` is `T.elements()[i]`.
pub fn subgroup_as_group(group: &FiniteGroup, t: &Subgroup) -> FiniteGroup {
    let k = t.order();
    let elems = t.elements();
    let pos = |x: ElementId| elems.binary_search(&x).expect("closed subgroup");
    let table = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| pos(group.mul(elems[i], elems[j])));
    let names = elems.iter().map(|&x| group.name(x).to_string()).collect();
    FiniteGroup::from_table(k, table.collect(), Some(names), None).expect("subgroup table")
}

/// The structure `N = {η(a, b)}` with `η(a, b)[s t] = a_S[s] · b[t]`, where
/// `a_S` is `a` read on `S` through the bijection `s ↦ sT`.
pub fn induced_hgs(input: &InducedInput) -> Result<RegularSubgroup> {
    let group = &input.group;
    let n = group.order();
    let cosets = &input.cosets;
    let mut sigma = vec![usize::MAX; cosets.len()];
    for &s in input.s.elements() {
        let c = cosets.coset_of(s);
        if sigma[c] != usize::MAX {
            return Err(Error::IdentificationFailure(format!("two elements of S lie in coset {c}")));
        }
        sigma[c] = s;
    }
    if sigma.contains(&usize::MAX) {
        return Err(Error::IdentificationFailure("S does not meet every coset".into()));
    }
    let t_elems = input.t.elements();
    let t_pos = |x: ElementId| t_elems.binary_search(&x).expect("x lies in T");
    // x = s t with s ∈ S, t ∈ T.
    let split: Vec<(ElementId, usize)> = group
        .elements()
        .map(|x| {
            let s = sigma[cosets.coset_of(x)];
            (s, t_pos(group.mul(group.inv(s), x)))
        })
        .collect();
    let mut elements = Vec::with_capacity(n);
    for a in input.a.elements() {
        for b in input.b.elements() {
            let images = split
                .iter()
                .map(|&(s, t)| {
                    let a_s = sigma[a.apply(cosets.coset_of(s))];
                    group.mul(a_s, t_elems[b.apply(t)])
                })
                .collect();
            elements.push(Perm::new(images)?);
        }
    }
    let perms = PermGroup::from_elements(n, elements)
        .map_err(|e| Error::ConstructionFailure(format!("induced set does not close: {e}")))?;
    certify(group, perms)
}

fn check_preserves(group: &FiniteGroup, s: &Subgroup, phi: &GroupHom) -> Result<()> {
    if phi.images().len() != group.order() || !phi.is_bijective() || !phi.is_homomorphism(group, group) {
        return Err(Error::NotIsomorphism("φ is not an automorphism of G".into()));
    }
    if s.map(group, |x| phi.apply(x)) != *s {
        return Err(Error::DoesNotPreserveComplement);
    }
    Ok(())
}

/// `φ A φ⁻¹` on the cosets of `φ(T)`, via `xT ↦ φ(x)φ(T)`.
pub fn transport_quotient_structure(input: &InducedInput, phi: &GroupHom) -> Result<PermGroup> {
    let group = &input.group;
    check_preserves(group, &input.s, phi)?;
    let new_t = input.t.map(group, |x| phi.apply(x));
    let new_cosets = CosetSpace::new(group, &new_t);
    let old = &input.cosets;
    let forward: Vec<usize> =
        (0..old.len()).map(|c| new_cosets.coset_of(phi.apply(old.representative(c)))).collect();
    let mut backward = vec![0; forward.len()];
    for (c, &d) in forward.iter().enumerate() {
        backward[d] = c;
    }
    let move_perm = |a: &Perm| -> Perm {
        Perm::from_images_unchecked((0..forward.len()).map(|d| forward[a.apply(backward[d])]).collect())
    };
    let gens: Vec<Perm> = input.a.generators().iter().map(move_perm).collect();
    let mut elements: Vec<Perm> = input.a.elements().iter().map(move_perm).collect();
    elements.sort();
    Ok(PermGroup::from_parts(new_cosets.len(), gens, elements))
}

/// `φ B φ⁻¹` on `φ(T)`.
pub fn transport_subgroup_structure(input: &InducedInput, phi: &GroupHom) -> Result<PermGroup> {
    let group = &input.group;
    check_preserves(group, &input.s, phi)?;
    let new_t = input.t.map(group, |x| phi.apply(x));
    let (old, new) = (input.t.elements(), new_t.elements());
    let forward: Vec<usize> =
        old.iter().map(|&x| new.binary_search(&phi.apply(x)).expect("φ(T) contains φ(x)")).collect();
    let mut backward = vec![0; forward.len()];
    for (i, &j) in forward.iter().enumerate() {
        backward[j] = i;
    }
    let move_perm = |b: &Perm| -> Perm {
        Perm::from_images_unchecked((0..forward.len()).map(|j| forward[b.apply(backward[j])]).collect())
    };
    let gens: Vec<Perm> = input.b.generators().iter().map(move_perm).collect();
    let mut elements: Vec<Perm> = input.b.elements().iter().map(move_perm).collect();
    elements.sort();
    Ok(PermGroup::from_parts(new.len(), gens, elements))
}

/// The induced input moved along an automorphism preserving `S`.
pub fn transport_induced_input(input: &InducedInput, phi: &GroupHom) -> Result<InducedInput> {
    let a = transport_quotient_structure(input, phi)?;
    let b = transport_subgroup_structure(input, phi)?;
    let t = input.t.map(&input.group, |x| phi.apply(x));
    InducedInput::with_complement(&input.group, t, input.s.clone(), a, b)
}

/// Largest coset-space degree handled by exhaustive search.
pub const COSET_SEARCH_LIMIT: usize = 8;

/// Regular subgroups of `Perm(G/T)` normalised by the left-translation image.
///
/// Prime degree `p`: such a subgroup is cyclic of order `p` and contains every
/// `p`-element of the translation image, so it is generated by any one of
/// them. Degree at most 8: exhaustive search over bijections from each
/// abstract type onto the coset set.
pub fn coset_stable_regular_subgroups(group: &FiniteGroup, t: &Subgroup) -> Result<Vec<PermGroup>> {
    let cosets = CosetSpace::new(group, t);
    let d = cosets.len();
    let translations = cosets.translation_group(group);
    if is_prime(d) {
        let Some(c) = translations.elements().iter().find(|p| p.order() == d) else {
            return Ok(Vec::new());
        };
        let a = PermGroup::generate(d, std::slice::from_ref(c))?;
        let normal = translations.generators().iter().all(|l| a.is_normalized_by(l));
        return Ok(if normal { vec![a] } else { Vec::new() });
    }
    if d > COSET_SEARCH_LIMIT {
        return Err(Error::DegreeTooLarge(d));
    }
    regular_normalized_brute_force(d, translations.generators())
}

/// Exhaustive list of regular subgroups of `Sym(d)` normalised by `gens`.
pub(crate) fn regular_normalized_brute_force(d: usize, gens: &[Perm]) -> Result<Vec<PermGroup>> {
    let mut found = BTreeSet::new();
    for spec in catalog::types_of_order(d) {
        let m = build_group(&spec)?;
        for tail in (1..d).permutations(d.saturating_sub(1)) {
            let mut b = vec![0];
            b.extend(tail);
            let mut b_inv = vec![0; d];
            for (x, &y) in b.iter().enumerate() {
                b_inv[y] = x;
            }
            let eta = |mu: ElementId| {
                Perm::from_images_unchecked((0..d).map(|x| b[m.mul(mu, b_inv[x])]).collect())
            };
            let member = |p: &Perm| *p == eta(b_inv[p.apply(0)]);
            if gens.iter().all(|l| m.generators().iter().all(|&mu| member(&eta(mu).conjugate_by(l)))) {
                let mut elements: Vec<Perm> = m.elements().map(eta).collect();
                elements.sort();
                found.insert(elements);
            }
        }
    }
    Ok(found.into_iter().map(|e| PermGroup::from_sorted_closed(d, e)).collect())
}

/// Subgroups `T` with a normal complement, paired with that complement.
/// The trivial subgroup and `G` itself are skipped.
pub fn complemented_subgroups(group: &FiniteGroup) -> Vec<(Subgroup, Subgroup)> {
    all_subgroups(group)
        .into_iter()
        .filter(|t| t.order() > 1 && t.order() < group.order())
        .filter_map(|t| normal_complement(group, &t).map(|s| (t, s)))
        .collect()
}

/// Every induced structure obtainable from `T`: all pairs `(A, B)`.
pub fn induced_structures_for(group: &Arc<FiniteGroup>, t: &Subgroup) -> Result<Vec<RegularSubgroup>> {
    let s = normal_complement(group, t).ok_or(Error::NoNormalComplement)?;
    let quotient = coset_stable_regular_subgroups(group, t)?;
    let t_group = Arc::new(subgroup_as_group(group, t));
    let on_t: Vec<PermGroup> =
        enumerate_hgs(&t_group, None)?.structures.iter().map(|n| n.perms().clone()).collect();
    let mut out = BTreeSet::new();
    for a in &quotient {
        for b in &on_t {
            let input = InducedInput::with_complement(group, t.clone(), s.clone(), a.clone(), b.clone())?;
            out.insert(induced_hgs(&input)?);
        }
    }
    Ok(out.into_iter().collect())
}
