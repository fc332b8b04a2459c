//! Finite groups as Cayley tables.
//!
//! Every group stores its multiplication table row-major with the identity
//! at index 0. The presented families (see [`GroupSpec`]) fix a normal form
//! for their elements, so element indices are stable and meaningful:
//! `metacyclic:p:q:d` puts `s^i t^j` at index `q*i + j`, `dihedral:n` puts
//! `r^i s^j` at `2*i + j`.

mod build;
pub mod catalog;
mod holomorph;
mod hom;
mod spec;
mod subgroup;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

pub use build::build_group;
pub use holomorph::Holomorph;
pub use hom::{
    abelian_endomorphisms, are_isomorphic, automorphisms, endomorphisms, inner_automorphism,
    isomorphisms, GroupHom,
};
pub use spec::{GroupSpec, MAX_ORDER};
pub use subgroup::{all_subgroups, normal_complement, Subgroup};

pub(crate) use hom::extend_generator_images;
pub(crate) use spec::is_prime;

/// Index of a group element; 0 is always the identity.
pub type ElementId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<ElementId>,
    inverse: Vec<ElementId>,
    element_orders: Vec<usize>,
    generators: Vec<ElementId>,
    names: Vec<String>,
    spec: Option<GroupSpec>,
}

/// JSON export form: `{order, table (row-major), names, spec}`.
#[derive(Debug, Clone, Serialize)]
pub struct GroupExport<'a> {
    pub order: usize,
    pub table: &'a [ElementId],
    pub names: &'a [String],
    pub spec: Option<&'a GroupSpec>,
}

/// Associativity is checked exhaustively up to this order in [`FiniteGroup::from_table`].
const ASSOCIATIVITY_CHECK_LIMIT: usize = 128;

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table.
    ///
    /// Checks that 0 is a two-sided identity and that the table is a Latin
    /// square; associativity is checked for orders up to 128.
    pub fn from_table(
        order: usize,
        table: Vec<ElementId>,
        names: Option<Vec<String>>,
        spec: Option<GroupSpec>,
    ) -> Result<Self> {
        let invalid = |m: String| Err(Error::Invalid(format!("bad Cayley table: {m}")));
        if order == 0 || table.len() != order * order {
            return invalid(format!("expected {} entries, got {}", order * order, table.len()));
        }
        if table.iter().any(|&x| x >= order) {
            return invalid("entry out of range".into());
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return invalid(format!("0 is not an identity at {a}"));
            }
        }
        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let x = table[a * order + b];
                if seen[x] == a {
                    return invalid(format!("row {a} repeats {x}"));
                }
                seen[x] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..order {
            for a in 0..order {
                let x = table[a * order + b];
                if seen[x] == b {
                    return invalid(format!("column {b} repeats {x}"));
                }
                seen[x] = b;
            }
        }
        if order <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b];
                    for c in 0..order {
                        let bc = table[b * order + c];
                        if table[ab * order + c] != table[a * order + bc] {
                            return invalid(format!("({a}{b}){c} != {a}({b}{c})"));
                        }
                    }
                }
            }
        }
        let names = match names {
            Some(n) if n.len() == order => n,
            Some(_) => return invalid("names have the wrong length".into()),
            None => (0..order).map(|a| a.to_string()).collect(),
        };
        Ok(Self::assemble(order, table, names, spec))
    }

    /// Trusted constructor for tables that are correct by construction.
    pub(crate) fn assemble(
        order: usize,
        table: Vec<ElementId>,
        names: Vec<String>,
        spec: Option<GroupSpec>,
    ) -> Self {
        let mut inverse = vec![0; order];
        for a in 0..order {
            inverse[a] = (0..order).find(|&b| table[a * order + b] == 0).expect("latin square");
        }
        let mut element_orders = vec![1; order];
        for (a, slot) in element_orders.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = table[x * order + a];
                *slot += 1;
            }
        }
        let mut group = FiniteGroup {
            order,
            table,
            inverse,
            element_orders,
            generators: Vec::new(),
            names,
            spec,
        };
        group.generators = group.find_small_generating_set();
        group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverse[a]
    }

    /// `a^k` for a possibly negative exponent.
    pub fn pow(&self, a: ElementId, k: i64) -> ElementId {
        let m = self.element_orders[a] as i64;
        let k = k.rem_euclid(m);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `g h g^-1`.
    pub fn conj(&self, g: ElementId, h: ElementId) -> ElementId {
        self.mul(self.mul(g, h), self.inverse[g])
    }

    pub fn element_order(&self, a: ElementId) -> usize {
        self.element_orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p = self.element_orders.clone();
        p.sort_unstable();
        p
    }

    pub fn table(&self) -> &[ElementId] {
        &self.table
    }

    pub fn inverses(&self) -> &[ElementId] {
        &self.inverse
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: ElementId) -> &str {
        &self.names[a]
    }

    /// Looks an element up by its label.
    pub fn element_named(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    /// A small generating set, fixed at construction.
    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commutes(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn center(&self) -> Subgroup {
        let elements = self
            .elements()
            .filter(|&z| self.generators.iter().all(|&g| self.commutes(z, g)))
            .collect();
        Subgroup::from_sorted_elements(self, elements)
    }

    /// Conjugacy classes ordered by their least element; each class is sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElementId>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for a in self.elements() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut class: Vec<ElementId> = self.elements().map(|g| self.conj(g, a)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                class_of[x] = classes.len();
            }
            classes.push(class);
        }
        classes
    }

    /// Elements reachable from `gens`, in breadth-first discovery order.
    pub(crate) fn closure_bfs(&self, gens: &[ElementId]) -> Vec<ElementId> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut order = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        order
    }

    fn find_small_generating_set(&self) -> Vec<ElementId> {
        if self.order == 1 {
            return Vec::new();
        }
        // Candidates by decreasing element order, then index.
        let mut candidates: Vec<ElementId> = (1..self.order).collect();
        candidates.sort_by_key(|&a| (std::cmp::Reverse(self.element_orders[a]), a));
        for k in 1..=self.order {
            if let Some(set) = self.search_generating_set(&candidates, k, 0, &mut Vec::new()) {
                return set;
            }
        }
        unreachable!("the whole group generates itself")
    }

    fn search_generating_set(
        &self,
        candidates: &[ElementId],
        k: usize,
        start: usize,
        chosen: &mut Vec<ElementId>,
    ) -> Option<Vec<ElementId>> {
        if chosen.len() == k {
            return (self.closure_bfs(chosen).len() == self.order).then(|| chosen.clone());
        }
        if k > 1 && !chosen.is_empty() {
            // Each added generator must enlarge the subgroup.
            let last = chosen.len();
            let before = self.closure_bfs(&chosen[..last - 1]);
            if before.contains(&chosen[last - 1]) {
                return None;
            }
        }
        for i in start..candidates.len() {
            chosen.push(candidates[i]);
            let found = self.search_generating_set(candidates, k, i + 1, chosen);
            chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    pub fn export(&self) -> GroupExport<'_> {
        GroupExport {
            order: self.order,
            table: &self.table,
            names: &self.names,
            spec: self.spec.as_ref(),
        }
    }

    /// Exhaustive associativity check (`n^3` products).
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize) -> FiniteGroup {
        build_group(&GroupSpec::Cyclic(n)).unwrap()
    }

    #[test]
    fn from_table_rejects_non_groups() {
        // Latin square with identity 0 that is not associative (order 5 loop).
        let t = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(FiniteGroup::from_table(5, t, None, None).is_err());
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 1], None, None).is_err());
        let ok = FiniteGroup::from_table(2, vec![0, 1, 1, 0], None, None).unwrap();
        assert_eq!(ok.inv(1), 1);
    }

    #[test]
    fn conjugacy_classes_of_cyclic_are_singletons() {
        let g = cyc(6);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn involution_classes_in_s5() {
        let g = build_group(&GroupSpec::Sym(5)).unwrap();
        let mut sizes: Vec<usize> = g
            .conjugacy_classes()
            .into_iter()
            .filter(|c| g.element_order(c[0]) == 2)
            .map(|c| c.len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![10, 15]);
    }

    #[test]
    fn r_squared_is_central_in_d8() {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        let r2 = g.element_named("r^2").unwrap();
        let classes = g.conjugacy_classes();
        assert!(classes.iter().any(|c| c == &vec![r2]));
        assert_eq!(g.center().elements(), &[0, r2]);
    }

    #[test]
    fn generating_sets_generate() {
        for spec in ["cyclic:12", "sym:4", "elemab:2:3", "dicyclic:12", "metacyclic:7:3:2"] {
            let g = build_group(&spec.parse().unwrap()).unwrap();
            assert_eq!(g.closure_bfs(g.generators()).len(), g.order(), "{spec}");
        }
        let v = build_group(&"elemab:2:3".parse().unwrap()).unwrap();
        assert_eq!(v.generators().len(), 3);
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = cyc(7);
        assert_eq!(g.pow(1, -1), 6);
        assert_eq!(g.pow(3, 5), 1);
    }
}
