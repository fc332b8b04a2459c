//! Permutations of a finite point set and the groups they generate.
//!
//! Permutations compose right-to-left: `p.compose(q)` applies `q` first.
//! The regular representations of a table group `G` on its own elements are
//! `λ(g)[x] = g·x` and `ρ(g)[x] = x·g⁻¹`; both are homomorphisms and they
//! commute with each other.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup, GroupHom, Subgroup};

/// A permutation stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Perm::new(images.clone()).is_ok());
        Perm { images }
    }

    pub fn identity(base: usize) -> Self {
        Perm { images: (0..base).collect() }
    }

    /// A bijective group map viewed as a permutation of the elements.
    pub fn from_hom(hom: &GroupHom) -> Self {
        Perm::from_images_unchecked(hom.images().to_vec())
    }

    pub fn base(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`. Panics on a base mismatch; see [`compose`] for the
    /// checked form.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.base(), other.base(), "permutation base mismatch");
        Perm { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Perm { images: inv }
    }

    /// `q ∘ self ∘ q⁻¹`.
    pub fn conjugate_by(&self, q: &Perm) -> Perm {
        assert_eq!(self.base(), q.base(), "permutation base mismatch");
        let mut images = vec![0; self.images.len()];
        for x in 0..self.images.len() {
            images[q.images[x]] = q.images[self.images[x]];
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut lcm = 1;
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            if len > 0 {
                lcm = lcm / gcd(lcm, len) * len;
            }
        }
        lcm
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| other.images[y] == self.images[other.images[x]])
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_base(p: &Perm, q: &Perm) -> Result<()> {
    if p.base() != q.base() {
        return Err(Error::BaseMismatch { left: p.base(), right: q.base() });
    }
    Ok(())
}

/// `p ∘ q`, erroring on a base mismatch.
pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
    check_base(p, q)?;
    Ok(p.compose(q))
}

pub fn invert(p: &Perm) -> Perm {
    p.inverse()
}

/// `q p q⁻¹`, i.e. `x ↦ q[p[q⁻¹[x]]]`.
pub fn conjugate(p: &Perm, q: &Perm) -> Result<Perm> {
    check_base(p, q)?;
    Ok(p.conjugate_by(q))
}

/// Left regular representation: `λ(g)[x] = g·x`.
pub fn lambda(group: &FiniteGroup, g: ElementId) -> Perm {
    Perm { images: group.elements().map(|x| group.mul(g, x)).collect() }
}

/// Right regular representation: `ρ(g)[x] = x·g⁻¹`.
pub fn rho(group: &FiniteGroup, g: ElementId) -> Perm {
    let gi = group.inv(g);
    Perm { images: group.elements().map(|x| group.mul(x, gi)).collect() }
}

/// A permutation group in canonical form: its elements sorted
/// lexicographically by image sequence, plus a generating list.
#[derive(Debug, Clone, Serialize)]
pub struct PermGroup {
    base: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl std::hash::Hash for PermGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.base.hash(state);
        self.elements.hash(state);
    }
}

impl PartialOrd for PermGroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PermGroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.base, &self.elements).cmp(&(other.base, &other.elements))
    }
}

/// Default closure cap for a base of `n` points.
pub fn default_cap(base: usize) -> usize {
    10 * base * base
}

impl PermGroup {
    /// Closure of `gens` with the default cap `10·n²`.
    pub fn generate(base: usize, gens: &[Perm]) -> Result<Self> {
        Self::generate_with_cap(base, gens, default_cap(base).max(1))
    }

    pub fn generate_with_cap(base: usize, gens: &[Perm], cap: usize) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.base() != base) {
            return Err(Error::BaseMismatch { left: base, right: g.base() });
        }
        let generators: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Perm::identity(base);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::ClosureCap { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup { base, generators, elements })
    }

    /// Wraps a full element list after checking closure; generators are
    /// picked greedily from the canonical order.
    pub fn from_elements(base: usize, mut elements: Vec<Perm>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        if elements.iter().any(|p| p.base() != base) {
            return Err(Error::Invalid("element with the wrong base".into()));
        }
        if elements.binary_search(&Perm::identity(base)).is_err() {
            return Err(Error::Invalid("element set lacks the identity".into()));
        }
        let closed = elements
            .iter()
            .all(|a| elements.iter().all(|b| elements.binary_search(&a.compose(b)).is_ok()));
        if !closed {
            return Err(Error::Invalid("element set is not closed".into()));
        }
        Ok(Self::from_sorted_closed(base, elements))
    }

    /// Trusted: `elements` is sorted and closed.
    pub(crate) fn from_sorted_closed(base: usize, elements: Vec<Perm>) -> Self {
        let mut generators = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([Perm::identity(base)]);
        for p in &elements {
            if span.len() == elements.len() {
                break;
            }
            if !span.contains(p) {
                generators.push(p.clone());
                span = Self::generate_with_cap(base, &generators, usize::MAX)
                    .expect("closure of group elements")
                    .elements
                    .into_iter()
                    .collect();
            }
        }
        PermGroup { base, generators, elements }
    }

    /// Trusted: `elements` is sorted, closed, and generated by `generators`.
    pub(crate) fn from_parts(base: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        PermGroup { base, generators, elements }
    }

    pub fn trivial(base: usize) -> Self {
        PermGroup { base, generators: Vec::new(), elements: vec![Perm::identity(base)] }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Canonical element order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// `q G q⁻¹`, re-sorted.
    pub fn conjugate_by(&self, q: &Perm) -> PermGroup {
        let generators = self.generators.iter().map(|g| g.conjugate_by(q)).collect();
        let mut elements: Vec<Perm> = self.elements.iter().map(|p| p.conjugate_by(q)).collect();
        elements.sort();
        PermGroup { base: self.base, generators, elements }
    }

    /// Whether conjugation by `q` maps the group onto itself (generator test).
    pub fn is_normalized_by(&self, q: &Perm) -> bool {
        let gens = if self.generators.is_empty() { &self.elements } else { &self.generators };
        gens.iter().all(|g| self.contains(&g.conjugate_by(q)))
    }

    /// Regular: order equals the base and the orbit of 0 is everything.
    pub fn is_regular(&self) -> bool {
        self.regular_section().is_some()
    }

    /// For a regular group, `section[a]` is the index of the unique element
    /// sending 0 to `a`.
    pub fn regular_section(&self) -> Option<Vec<usize>> {
        if self.order() != self.base {
            return None;
        }
        let mut section = vec![usize::MAX; self.base];
        for (i, p) in self.elements.iter().enumerate() {
            let a = p.apply(0);
            if section[a] != usize::MAX {
                return None;
            }
            section[a] = i;
        }
        Some(section)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = if self.generators.is_empty() { &self.elements } else { &self.generators };
        gens.iter().all(|a| gens.iter().all(|b| a.commutes_with(b)))
    }
}

/// `⟨gens⟩` with the default closure cap.
pub fn generated_perm_group(gens: &[Perm]) -> Result<PermGroup> {
    let base = gens.first().map_or(0, Perm::base);
    PermGroup::generate(base, gens)
}

/// Centraliser of a regular group in the full symmetric group of its base.
///
/// For regular `N` with `η_x` the element sending 0 to `x`, the centraliser
/// is `{κ_c : x ↦ η_x[c]}`; no search over `Sym(n)` is needed.
pub fn centralizer_of_regular(group: &PermGroup) -> Result<PermGroup> {
    let section = group
        .regular_section()
        .ok_or_else(|| Error::NotRegular("centraliser requires a regular group".into()))?;
    let n = group.base();
    let eta = |x: usize| &group.elements()[section[x]];
    let kappa = |c: usize| Perm::from_images_unchecked((0..n).map(|x| eta(x).apply(c)).collect());
    let mut elements: Vec<Perm> = (0..n).map(kappa).collect();
    elements.sort();
    // η ↦ κ_{η[0]} is an anti-isomorphism, so generator images generate.
    let generators = group.generators().iter().map(|g| kappa(g.apply(0))).collect();
    Ok(PermGroup::from_parts(n, generators, elements))
}

/// Brute-force centraliser in `Sym(n)` (test oracle; `n ≤ 8`).
pub fn centralizer_brute_force(group: &PermGroup) -> Vec<Perm> {
    use itertools::Itertools;
    let n = group.base();
    assert!(n <= 8, "brute-force centraliser is limited to 8 points");
    let gens = if group.generators().is_empty() { group.elements() } else { group.generators() };
    (0..n)
        .permutations(n)
        .map(Perm::from_images_unchecked)
        .filter(|p| gens.iter().all(|g| g.commutes_with(p)))
        .sorted()
        .collect()
}

/// Left cosets `xT` of a subgroup, ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetSpace {
    subgroup: Subgroup,
    cosets: Vec<Vec<ElementId>>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(group: &FiniteGroup, subgroup: &Subgroup) -> Self {
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut cosets = Vec::new();
        for x in group.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let mut coset: Vec<ElementId> =
                subgroup.elements().iter().map(|&t| group.mul(x, t)).collect();
            coset.sort_unstable();
            for &y in &coset {
                coset_of[y] = cosets.len();
            }
            cosets.push(coset);
        }
        CosetSpace { subgroup: subgroup.clone(), cosets, coset_of }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn cosets(&self) -> &[Vec<ElementId>] {
        &self.cosets
    }

    /// Least element of coset `i`.
    pub fn representative(&self, i: usize) -> ElementId {
        self.cosets[i][0]
    }

    /// Index of the coset containing `x`.
    pub fn coset_of(&self, x: ElementId) -> usize {
        self.coset_of[x]
    }

    /// `λ(h)[xT] = hxT`.
    pub fn left_translation(&self, group: &FiniteGroup, h: ElementId) -> Perm {
        Perm::from_images_unchecked(
            (0..self.len())
                .map(|i| self.coset_of[group.mul(h, self.representative(i))])
                .collect(),
        )
    }

    /// Image of `G` under left translation.
    pub fn translation_group(&self, group: &FiniteGroup) -> PermGroup {
        let gens: Vec<Perm> =
            group.generators().iter().map(|&g| self.left_translation(group, g)).collect();
        PermGroup::generate_with_cap(self.len(), &gens, usize::MAX).expect("bases agree")
    }
}

/// Free-function form of [`CosetSpace::new`].
pub fn coset_space(group: &FiniteGroup, subgroup: &Subgroup) -> CosetSpace {
    CosetSpace::new(group, subgroup)
}

/// Free-function form of [`CosetSpace::left_translation`].
pub fn left_translation(group: &FiniteGroup, subgroup: &Subgroup, h: ElementId) -> Perm {
    CosetSpace::new(group, subgroup).left_translation(group, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, catalog, GroupSpec};

    fn group(spec: &str) -> FiniteGroup {
        build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap()
    }

    #[test]
    fn regular_representations_are_commuting_homomorphisms() {
        for spec in catalog::complete_groups_up_to(12) {
            let g = build_group(&spec).unwrap();
            let lam: Vec<Perm> = g.elements().map(|a| lambda(&g, a)).collect();
            let rh: Vec<Perm> = g.elements().map(|a| rho(&g, a)).collect();
            assert!(lam[0].is_identity() && rh[0].is_identity());
            assert_eq!(lam.iter().collect::<HashSet<_>>().len(), g.order(), "{spec}");
            assert_eq!(rh.iter().collect::<HashSet<_>>().len(), g.order(), "{spec}");
            for a in g.elements() {
                assert_eq!(lam[a].inverse(), lam[g.inv(a)]);
                for b in g.elements() {
                    assert_eq!(lam[a].compose(&lam[b]), lam[g.mul(a, b)]);
                    assert_eq!(rh[a].compose(&rh[b]), rh[g.mul(a, b)]);
                    assert_eq!(lam[a].compose(&rh[b]), rh[b].compose(&lam[a]));
                    assert_eq!(lam[b].conjugate_by(&rh[a]), lam[b]);
                }
            }
        }
    }

    #[test]
    fn abelian_lambda_equals_rho_inverse() {
        let g = group("product:cyclic:2,cyclic:4");
        for a in g.elements() {
            assert_eq!(lambda(&g, a), rho(&g, g.inv(a)));
        }
    }

    #[test]
    fn checked_ops_reject_base_mismatch() {
        let p = Perm::identity(3);
        let q = Perm::identity(4);
        assert!(matches!(compose(&p, &q), Err(Error::BaseMismatch { .. })));
        assert!(conjugate(&p, &q).is_err());
        let r = Perm::new(vec![1, 2, 0]).unwrap();
        assert_eq!(conjugate(&r, &p).unwrap(), r);
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert_eq!(r.order(), 3);
    }

    #[test]
    fn generated_groups() {
        let g = group("metacyclic:7:3:2");
        let (s, t) = (g.element_named("s").unwrap(), g.element_named("t").unwrap());
        let eta = lambda(&g, s).compose(&rho(&g, t));
        let n = generated_perm_group(&[eta]).unwrap();
        assert_eq!(n.order(), 21);
        assert!(n.is_regular());

        assert_eq!(generated_perm_group(&[Perm::identity(5)]).unwrap().order(), 1);

        let d8 = group("dihedral:4");
        let (r, s) = (d8.element_named("r").unwrap(), d8.element_named("s").unwrap());
        let n = generated_perm_group(&[lambda(&d8, r).compose(&rho(&d8, s)), lambda(&d8, s)])
            .unwrap();
        assert_eq!(n.order(), 8);
    }

    #[test]
    fn closure_cap_triggers() {
        // Sym(5) on 5 points has 120 elements; a cap of 50 must stop it.
        let a = Perm::new(vec![1, 2, 3, 4, 0]).unwrap();
        let b = Perm::new(vec![1, 0, 2, 3, 4]).unwrap();
        assert_eq!(
            PermGroup::generate_with_cap(5, &[a.clone(), b.clone()], 50),
            Err(Error::ClosureCap { cap: 50 })
        );
        assert_eq!(PermGroup::generate(5, &[a, b]).unwrap().order(), 120);
    }

    #[test]
    fn centralizer_of_lambda_is_rho() {
        for spec in ["cyclic:6", "sym:3", "dihedral:4", "quaternion:8"] {
            let g = group(spec);
            let lam = PermGroup::generate(g.order(), &g.generators().iter().map(|&x| lambda(&g, x)).collect::<Vec<_>>()).unwrap();
            let rh = PermGroup::generate(g.order(), &g.generators().iter().map(|&x| rho(&g, x)).collect::<Vec<_>>()).unwrap();
            let c = centralizer_of_regular(&lam).unwrap();
            assert_eq!(c, rh, "{spec}");
            assert_eq!(c.elements(), centralizer_brute_force(&lam).as_slice());
            assert_eq!(centralizer_of_regular(&c).unwrap(), lam);
            // Generators really generate.
            assert_eq!(PermGroup::generate(g.order(), c.generators()).unwrap(), c);
        }
    }

    #[test]
    fn centralizer_requires_regular() {
        let g = PermGroup::generate(4, &[Perm::new(vec![1, 0, 2, 3]).unwrap()]).unwrap();
        assert!(matches!(centralizer_of_regular(&g), Err(Error::NotRegular(_))));
    }

    #[test]
    fn coset_spaces() {
        let g = group("metacyclic:7:3:2");
        let t = Subgroup::closure(&g, &[g.element_named("t").unwrap()]);
        let cs = coset_space(&g, &t);
        assert_eq!(cs.len(), 7);
        assert!(cs.cosets()[0].contains(&0));

        let whole = Subgroup::whole(&g);
        let one = coset_space(&g, &whole);
        assert_eq!(one.len(), 1);
        assert!(g.elements().all(|h| one.left_translation(&g, h).is_identity()));

        let triv = Subgroup::trivial();
        let cs = coset_space(&g, &triv);
        for h in g.elements() {
            assert_eq!(cs.left_translation(&g, h), lambda(&g, h));
        }
    }

    #[test]
    fn left_translation_kernel_is_core() {
        let s4 = group("sym:4");
        let t = Subgroup::closure(&s4, &[s4.element_named("(1 2)").unwrap(), s4.element_named("(3 4)").unwrap()]);
        let cs = coset_space(&s4, &t);
        let kernel: Vec<ElementId> =
            s4.elements().filter(|&h| cs.left_translation(&s4, h).is_identity()).collect();
        let core: Vec<ElementId> = s4
            .elements()
            .filter(|&x| s4.elements().all(|g| t.contains(s4.conj(g, x))))
            .collect();
        assert_eq!(kernel, core);
        for a in s4.elements() {
            for b in s4.elements() {
                assert_eq!(
                    cs.left_translation(&s4, s4.mul(a, b)),
                    cs.left_translation(&s4, a).compose(&cs.left_translation(&s4, b))
                );
            }
        }
    }
}
