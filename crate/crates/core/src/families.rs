//! Explicit structure families on metacyclic, dihedral and symmetric groups,
//! written with the element normal forms of [`crate::group::build_group`].

use std::sync::Arc;

use crate::constructions::AbelianMap;
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup, GroupHom, GroupSpec, Subgroup};
use crate::hgs::{certify_generated, RegularSubgroup};
use crate::perm::{lambda, rho, Perm};

/// `(p, q, d)` of a metacyclic group, with `s = s^1` and `t = t^1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metacyclic {
    pub p: usize,
    pub q: usize,
    pub d: usize,
}

impl Metacyclic {
    pub fn of(group: &FiniteGroup) -> Result<Self> {
        match group.spec() {
            Some(&GroupSpec::Metacyclic { p, q, d }) => Ok(Metacyclic { p, q, d }),
            _ => Err(Error::Invalid("expected a metacyclic group".into())),
        }
    }

    /// Index of `s^i t^j`.
    pub fn element(&self, i: i64, j: i64) -> ElementId {
        let (p, q) = (self.p as i64, self.q as i64);
        (self.q as i64 * i.rem_euclid(p) + j.rem_euclid(q)) as ElementId
    }

    pub fn s(&self) -> ElementId {
        self.element(1, 0)
    }

    pub fn t(&self) -> ElementId {
        self.element(0, 1)
    }

    /// `i (1 - d)` reduced mod `p`.
    pub fn shift(&self, i: i64) -> i64 {
        (i * (1 - self.d as i64)).rem_euclid(self.p as i64)
    }
}

/// `⟨λ(s) ρ(s^{i(1-d)} t)⟩`, a cyclic structure of order `pq`.
pub fn metacyclic_cyclic_member(group: &Arc<FiniteGroup>, i: i64) -> Result<RegularSubgroup> {
    let m = Metacyclic::of(group)?;
    let gen = lambda(group, m.s()).compose(&rho(group, m.element(m.shift(i), 1)));
    certify_generated(group, &[gen])
}

/// The members for `i = 0, …, p-1`.
pub fn metacyclic_cyclic_family(group: &Arc<FiniteGroup>) -> Result<Vec<RegularSubgroup>> {
    let m = Metacyclic::of(group)?;
    (0..m.p as i64).map(|i| metacyclic_cyclic_member(group, i)).collect()
}

/// `N_k = ⟨λ(s), λ(t) ρ((s^k t)⁻¹)⟩`, of the same type as `G`.
///
/// The second generator is `x ↦ t·x·s^k t`. With the right factor read as
/// `x ↦ x·(s^k t)⁻¹` instead, the orbit of `e` is only `⟨s⟩`.
pub fn metacyclic_nk_member(group: &Arc<FiniteGroup>, k: i64) -> Result<RegularSubgroup> {
    let m = Metacyclic::of(group)?;
    let right = rho(group, group.inv(m.element(k, 1)));
    let gens = [lambda(group, m.s()), lambda(group, m.t()).compose(&right)];
    certify_generated(group, &gens)
}

pub fn metacyclic_nk_family(group: &Arc<FiniteGroup>) -> Result<Vec<RegularSubgroup>> {
    let m = Metacyclic::of(group)?;
    (0..m.p as i64).map(|k| metacyclic_nk_member(group, k)).collect()
}

/// The `n` of `dihedral:n`; `r^i s^j` sits at index `2i + j`.
pub fn dihedral_n(group: &FiniteGroup) -> Result<usize> {
    match group.spec() {
        Some(&GroupSpec::Dihedral(n)) => Ok(n),
        _ => Err(Error::Invalid("expected a dihedral group".into())),
    }
}

fn dihedral_element(n: usize, i: i64, j: usize) -> ElementId {
    2 * i.rem_euclid(n as i64) as usize + j
}

/// `N_{r^k} = ⟨λ(r) ρ(r^{2k} s), λ(s)⟩`.
pub fn dihedral_member(group: &Arc<FiniteGroup>, k: i64) -> Result<RegularSubgroup> {
    let n = dihedral_n(group)?;
    let (r, s) = (dihedral_element(n, 1, 0), dihedral_element(n, 0, 1));
    let gens = [lambda(group, r).compose(&rho(group, dihedral_element(n, 2 * k, 1))), lambda(group, s)];
    certify_generated(group, &gens)
}

/// `μ_k[r^i s^j] = r^{i + (-1)^{i+j+k}} s^j`.
pub fn dihedral_mu(group: &FiniteGroup, k: i64) -> Result<Perm> {
    let n = dihedral_n(group)?;
    let images = (0..2 * n)
        .map(|x| {
            let (i, j) = (x / 2, x % 2);
            let sign = if (i as i64 + j as i64 + k).rem_euclid(2) == 0 { 1 } else { -1 };
            dihedral_element(n, i as i64 + sign, j)
        })
        .collect();
    Perm::new(images)
}

/// `⟨ρ(s), μ_k⟩`, the stated opposite of `N_{r^k}`.
pub fn dihedral_opposite_member(group: &Arc<FiniteGroup>, k: i64) -> Result<RegularSubgroup> {
    let n = dihedral_n(group)?;
    certify_generated(group, &[rho(group, dihedral_element(n, 0, 1)), dihedral_mu(group, k)?])
}

/// `f1(r^i s^j) = μ^i π^j` and `f2(r^i s^j) = (μ^{2k} π)^i` between two
/// copies of the dihedral group of order `2n`.
pub fn dihedral_fpf_pair(group: &FiniteGroup, k: i64) -> Result<(GroupHom, GroupHom)> {
    let n = dihedral_n(group)?;
    let f1 = GroupHom::identity(2 * n);
    let reflection = dihedral_element(n, 2 * k, 1);
    let f2 = GroupHom::from_images((0..2 * n).map(|x| if (x / 2) % 2 == 1 { reflection } else { 0 }).collect());
    if !f2.is_homomorphism(group, group) {
        return Err(Error::NotHomomorphism("f2 needs n even".into()));
    }
    Ok((f1, f2))
}

/// The index-2 subgroup generated by squares (the alternating group inside
/// a symmetric group).
pub fn square_subgroup(group: &FiniteGroup) -> Subgroup {
    let squares: Vec<ElementId> = group.elements().map(|h| group.mul(h, h)).collect();
    Subgroup::closure(group, &squares)
}

/// `ψ_x(h) = e` on the square subgroup and `x` off it, for each `x` with
/// `x² = e`. Requires the square subgroup to have index 2.
pub fn parity_abelian_maps(group: &FiniteGroup) -> Result<Vec<(ElementId, AbelianMap)>> {
    let even = square_subgroup(group);
    if 2 * even.order() != group.order() {
        return Err(Error::Invalid("the squares do not generate an index-2 subgroup".into()));
    }
    group
        .elements()
        .filter(|&x| group.element_order(x) <= 2)
        .map(|x| {
            let images = group.elements().map(|h| if even.contains(h) { 0 } else { x }).collect();
            AbelianMap::new(group, GroupHom::from_images(images)).map(|psi| (x, psi))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::hgs::type_of;

    fn group(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap())
    }

    #[test]
    fn metacyclic_indices() {
        let g = group("metacyclic:7:3:2");
        let m = Metacyclic::of(&g).unwrap();
        assert_eq!((m.s(), m.t()), (3, 1));
        assert_eq!(g.name(m.element(2, 1)), "s^2t");
        assert_eq!(m.shift(1), 6);
    }

    #[test]
    fn families_have_expected_types() {
        let g = group("metacyclic:7:3:2");
        for n in metacyclic_cyclic_family(&g).unwrap() {
            assert_eq!(type_of(&n).unwrap(), GroupSpec::Cyclic(21));
        }
        for n in metacyclic_nk_family(&g).unwrap() {
            assert!(crate::group::are_isomorphic(&n.abstract_group(), &g).is_some());
        }
        let d = group("dihedral:4");
        for k in 0..2 {
            let n = dihedral_member(&d, k).unwrap();
            assert_eq!(type_of(&n).unwrap(), GroupSpec::Dihedral(4));
        }
    }

    #[test]
    fn mu_zero_formula() {
        let d = group("dihedral:4");
        let mu = dihedral_mu(&d, 0).unwrap();
        // r^0 s^0 ↦ r^1, r^0 s ↦ r^{-1} s, r s ↦ r^2 s.
        assert_eq!(mu.apply(0), 2);
        assert_eq!(mu.apply(1), 7);
        assert_eq!(mu.apply(3), 5);
    }

    #[test]
    fn parity_maps_on_s4() {
        let g = group("sym:4");
        assert_eq!(square_subgroup(&g).order(), 12);
        assert_eq!(parity_abelian_maps(&g).unwrap().len(), 1 + 6 + 3);
        assert!(parity_abelian_maps(&group("cyclic:3")).is_err());
    }
}
