//! ρ-conjugation `N ↦ N_g = ρ(g) N ρ(g)⁻¹` and its orbits.

use std::collections::BTreeSet;

use crate::group::{inner_automorphism, ElementId, Subgroup};
use crate::hgs::{certify, opposite, HgsInventory, RegularSubgroup};
use crate::perm::{rho, Perm};

/// `N_g`. Certified again on construction; keeps the type label.
pub fn rho_conjugate(n: &RegularSubgroup, g: ElementId) -> RegularSubgroup {
    let moved = n.perms().conjugate_by(&rho(n.group(), g));
    let out = certify(n.group(), moved).expect("ρ-conjugates of structures are structures");
    match n.type_label() {
        Some(l) => out.with_type_label(l.clone()),
        None => out,
    }
}

/// `φ_g N φ_g⁻¹`, computed with the inner automorphism as a permutation.
pub fn inner_conjugate(n: &RegularSubgroup, g: ElementId) -> RegularSubgroup {
    let phi = Perm::from_hom(&inner_automorphism(n.group(), g));
    let moved = n.perms().conjugate_by(&phi);
    certify(n.group(), moved).expect("conjugation by an inner automorphism preserves structures")
}

/// `{g : N_g = N}`.
pub fn rho_stabilizer(n: &RegularSubgroup) -> Subgroup {
    let group = n.group();
    let elements = group.elements().filter(|&g| n.perms().is_normalized_by(&rho(group, g))).collect();
    Subgroup::from_elements(group, elements).expect("a stabiliser is a subgroup")
}

/// A ρ-conjugacy class with the stabiliser of its base structure.
#[derive(Debug, Clone)]
pub struct RhoOrbit {
    pub base: RegularSubgroup,
    /// Distinct conjugates in canonical order.
    pub members: Vec<RegularSubgroup>,
    pub stabilizer: Subgroup,
}

impl RhoOrbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The least member, which keys the orbit.
    pub fn least(&self) -> &RegularSubgroup {
        &self.members[0]
    }

    pub fn contains(&self, n: &RegularSubgroup) -> bool {
        self.members.binary_search(n).is_ok()
    }
}

pub fn rho_orbit(n: &RegularSubgroup) -> RhoOrbit {
    let members: BTreeSet<RegularSubgroup> = n.group().elements().map(|g| rho_conjugate(n, g)).collect();
    RhoOrbit { base: n.clone(), members: members.into_iter().collect(), stabilizer: rho_stabilizer(n) }
}

/// Orbits partitioning the inventory, keyed and ordered by least member.
/// Each orbit's base is its least member.
pub fn rho_partition(inventory: &HgsInventory) -> Vec<RhoOrbit> {
    let mut assigned = vec![false; inventory.len()];
    let mut orbits = Vec::new();
    for (i, n) in inventory.structures.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let orbit = rho_orbit(n);
        for m in &orbit.members {
            if let Some(j) = inventory.position(m) {
                assigned[j] = true;
            }
        }
        orbits.push(orbit);
    }
    orbits
}

/// Whether `N_g = N_h`, by comparing canonical forms.
pub fn same_conjugate(n: &RegularSubgroup, g: ElementId, h: ElementId) -> bool {
    rho_conjugate(n, g) == rho_conjugate(n, h)
}

/// Whether `ρ(g⁻¹h)` normalises `N`.
pub fn normalizer_criterion(n: &RegularSubgroup, g: ElementId, h: ElementId) -> bool {
    let group = n.group();
    n.perms().is_normalized_by(&rho(group, group.mul(group.inv(g), h)))
}

/// Whether `(N_g)^opp = (N^opp)_g`, with both sides computed independently.
pub fn opp_of_conjugate_check(n: &RegularSubgroup, g: ElementId) -> bool {
    opposite(&rho_conjugate(n, g)) == rho_conjugate(&opposite(n), g)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::{build_group, FiniteGroup, GroupSpec};
    use crate::hgs::{enumerate_hgs, lambda_subgroup};

    fn group(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap())
    }

    #[test]
    fn rho_conjugation_agrees_with_inner_automorphisms() {
        let g = group("sym:3");
        for n in enumerate_hgs(&g, None).unwrap().structures {
            for x in g.elements() {
                assert_eq!(rho_conjugate(&n, x), inner_conjugate(&n, x));
            }
        }
    }

    #[test]
    fn composition_order() {
        let g = group("dihedral:4");
        for n in enumerate_hgs(&g, None).unwrap().structures {
            for a in g.elements() {
                for b in g.elements() {
                    assert_eq!(rho_conjugate(&rho_conjugate(&n, a), b), rho_conjugate(&n, g.mul(b, a)));
                }
            }
        }
    }

    #[test]
    fn stabilizer_contains_centre() {
        let g = group("dihedral:4");
        for n in enumerate_hgs(&g, None).unwrap().structures {
            let stab = rho_stabilizer(&n);
            assert!(g.center().is_subgroup_of(&stab));
            assert_eq!(rho_orbit(&n).len() * stab.order(), 8);
        }
    }

    #[test]
    fn lambda_is_fixed_only_when_abelian() {
        // ρ(g) normalises λ(G) for every g because the two commute.
        let g = group("sym:3");
        assert_eq!(rho_orbit(&lambda_subgroup(&g)).len(), 1);
    }

    #[test]
    fn partition_covers_inventory() {
        let g = group("alt:4");
        let inv = enumerate_hgs(&g, None).unwrap();
        let orbits = rho_partition(&inv);
        let total: usize = orbits.iter().map(RhoOrbit::len).sum();
        assert_eq!(total, inv.len());
        let mut keys: Vec<_> = orbits.iter().map(|o| o.least().clone()).collect();
        let sorted = {
            let mut k = keys.clone();
            k.sort();
            k
        };
        assert_eq!(keys, sorted);
        keys.dedup();
        assert_eq!(keys.len(), orbits.len());
        for o in &orbits {
            let t = o.members[0].type_label().cloned();
            assert!(o.members.iter().all(|m| m.type_label().cloned() == t));
        }
    }
}
