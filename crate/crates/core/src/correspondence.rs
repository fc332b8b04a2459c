//! G-stable subgroups `P ≤ N` and the subgroups `U ≤ G` they realise.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{all_subgroups, ElementId, Subgroup};
use crate::hgs::RegularSubgroup;
use crate::perm::{lambda, rho, Perm, PermGroup};
use crate::rho::rho_conjugate;

/// Subgroups of `N` stable under `η ↦ λ(g) η λ(g)⁻¹`, sorted by order, then
/// canonical form.
pub fn g_stable_subgroups(n: &RegularSubgroup) -> Vec<PermGroup> {
    let group = n.group();
    let abstract_n = n.abstract_group();
    // λ(g) η_a λ(g)⁻¹ sends e to g·η_a[g⁻¹], so it is η of that index.
    let action: Vec<Vec<ElementId>> = group
        .generators()
        .iter()
        .map(|&g| group.elements().map(|a| group.mul(g, n.eta(a).apply(group.inv(g)))).collect())
        .collect();
    let mut out: Vec<PermGroup> = all_subgroups(&abstract_n)
        .into_iter()
        .filter(|p| action.iter().all(|act| p.generators().iter().all(|&a| p.contains(act[a]))))
        .map(|p| {
            let mut elements: Vec<Perm> = p.elements().iter().map(|&a| n.eta(a).clone()).collect();
            elements.sort();
            let gens = p.generators().iter().map(|&a| n.eta(a).clone()).collect();
            PermGroup::from_parts(group.order(), gens, elements)
        })
        .collect();
    out.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    out
}

fn is_g_stable_subgroup_of(n: &RegularSubgroup, p: &PermGroup) -> bool {
    let group = n.group();
    p.elements().iter().all(|eta| n.contains(eta))
        && group.generators().iter().all(|&g| p.is_normalized_by(&lambda(group, g)))
}

/// `U = ⟨η⁻¹[e] : η ∈ P⟩`, checked to have order `|P|`.
pub fn fixed_subgroup(n: &RegularSubgroup, p: &PermGroup) -> Result<Subgroup> {
    if !is_g_stable_subgroup_of(n, p) {
        return Err(Error::StabilityViolation);
    }
    let group = n.group();
    let points: Vec<ElementId> = p.elements().iter().map(|eta| eta.inverse().apply(0)).collect();
    let u = Subgroup::closure(group, &points);
    if u.order() != p.order() {
        return Err(Error::RealizabilityDefect { fixed: u.order(), expected: p.order() });
    }
    Ok(u)
}

/// All `(P, U)` pairs for a structure.
#[derive(Debug, Clone, Serialize)]
pub struct RealizableLattice {
    #[serde(skip)]
    pub structure: RegularSubgroup,
    pub entries: Vec<(PermGroup, Subgroup)>,
}

impl RealizableLattice {
    /// The realised subgroups of `G`, sorted.
    pub fn realized(&self) -> Vec<&Subgroup> {
        let mut us: Vec<&Subgroup> = self.entries.iter().map(|(_, u)| u).collect();
        us.sort();
        us
    }

    pub fn fixed_of(&self, p: &PermGroup) -> Option<&Subgroup> {
        self.entries.iter().find(|(q, _)| q == p).map(|(_, u)| u)
    }

    /// Orders of the entries together with the inclusion relation between
    /// them, as a comparable invariant.
    pub fn shape(&self) -> (Vec<usize>, Vec<(usize, usize)>) {
        let mut entries: Vec<&Subgroup> = self.entries.iter().map(|(_, u)| u).collect();
        entries.sort_by_key(|u| (u.order(), u.elements().to_vec()));
        let orders = entries.iter().map(|u| u.order()).collect();
        let mut pattern: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for a in &entries {
            for b in &entries {
                if a != b && a.is_subgroup_of(b) {
                    *pattern.entry((a.order(), b.order())).or_default() += 1;
                }
            }
        }
        let mut incl: Vec<(usize, usize)> = Vec::new();
        for ((a, b), count) in pattern {
            incl.extend(std::iter::repeat_n((a, b), count));
        }
        (orders, incl)
    }
}

/// Every G-stable `P ≤ N` with its fixed subgroup. Checks that `P ↦ U` is
/// injective and inclusion-preserving.
pub fn realizable_lattice(n: &RegularSubgroup) -> Result<RealizableLattice> {
    let entries = g_stable_subgroups(n)
        .into_iter()
        .map(|p| fixed_subgroup(n, &p).map(|u| (p, u)))
        .collect::<Result<Vec<_>>>()?;
    for (i, (p1, u1)) in entries.iter().enumerate() {
        for (p2, u2) in &entries[i + 1..] {
            if u1 == u2 {
                return Err(Error::Invalid("two stable subgroups realise the same U".into()));
            }
            let p_incl = p1.elements().iter().all(|x| p2.contains(x));
            if p_incl != u1.is_subgroup_of(u2) {
                return Err(Error::Invalid("P ↦ U does not preserve inclusion".into()));
            }
        }
    }
    Ok(RealizableLattice { structure: n.clone(), entries })
}

/// Checks that `P ↦ ρ(g) P ρ(g)⁻¹` pairs the lattice of `N` with that of
/// `N_g`, sending `U` to `g U g⁻¹`.
pub fn transport_check(n: &RegularSubgroup, g: ElementId) -> Result<bool> {
    let group = n.group();
    let moved = rho_conjugate(n, g);
    let before = realizable_lattice(n)?;
    let after = realizable_lattice(&moved)?;
    if before.entries.len() != after.entries.len() {
        return Ok(false);
    }
    let r = rho(group, g);
    Ok(before.entries.iter().all(|(p, u)| {
        let p2 = p.conjugate_by(&r);
        after.fixed_of(&p2) == Some(&u.conjugate(group, g))
    }))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::{build_group, FiniteGroup, GroupSpec};
    use crate::hgs::{lambda_subgroup, rho_subgroup};

    fn group(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap())
    }

    #[test]
    fn lambda_realises_normal_subgroups() {
        let g = group("sym:3");
        let lat = realizable_lattice(&lambda_subgroup(&g)).unwrap();
        let normal: Vec<Subgroup> = all_subgroups(&g).into_iter().filter(|h| h.is_normal(&g)).collect();
        let mut got: Vec<Subgroup> = lat.realized().into_iter().cloned().collect();
        got.sort();
        let mut want = normal;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn rho_realises_everything() {
        for spec in ["sym:3", "dihedral:4"] {
            let g = group(spec);
            let lat = realizable_lattice(&rho_subgroup(&g)).unwrap();
            assert_eq!(lat.entries.len(), all_subgroups(&g).len());
        }
    }

    #[test]
    fn trivial_and_whole_entries() {
        let g = group("alt:4");
        let n = lambda_subgroup(&g);
        let lat = realizable_lattice(&n).unwrap();
        assert_eq!(lat.fixed_of(&PermGroup::trivial(12)), Some(&Subgroup::trivial()));
        assert_eq!(lat.fixed_of(n.perms()), Some(&Subgroup::whole(&g)));
        let stray = PermGroup::generate(12, &[crate::perm::rho(&g, 1)]).unwrap();
        assert!(fixed_subgroup(&n, &stray).is_err());
    }
}
