use std::collections::BTreeSet;

use serde::Serialize;

use super::{ElementId, FiniteGroup};

/// A subgroup stored as its sorted element set plus the generators it was
/// built from. Equality and ordering look at the element set only.
#[derive(Debug, Clone, Serialize)]
pub struct Subgroup {
    elements: Vec<ElementId>,
    generators: Vec<ElementId>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl Subgroup {
    /// Smallest subgroup of `group` containing `gens`.
    pub fn closure(group: &FiniteGroup, gens: &[ElementId]) -> Self {
        let mut elements = group.closure_bfs(gens);
        elements.sort_unstable();
        let mut generators: Vec<ElementId> = gens.iter().copied().filter(|&g| g != 0).collect();
        generators.sort_unstable();
        generators.dedup();
        Subgroup { elements, generators }
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0], generators: Vec::new() }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { elements: group.elements().collect(), generators: group.generators().to_vec() }
    }

    /// Wraps a sorted element list already known to be a subgroup and picks
    /// generators greedily.
    pub(crate) fn from_sorted_elements(group: &FiniteGroup, elements: Vec<ElementId>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut generators = Vec::new();
        let mut span = vec![0];
        for &x in &elements {
            if span.binary_search(&x).is_err() {
                generators.push(x);
                span = group.closure_bfs(&generators);
                span.sort_unstable();
            }
        }
        debug_assert_eq!(span, elements, "element set is not a subgroup");
        Subgroup { elements, generators }
    }

    /// Checks closure of an arbitrary element set and wraps it.
    pub fn from_elements(group: &FiniteGroup, mut elements: Vec<ElementId>) -> Option<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) || elements.iter().any(|&x| x >= group.order()) {
            return None;
        }
        let closed = elements
            .iter()
            .all(|&a| elements.iter().all(|&b| elements.binary_search(&group.mul(a, b)).is_ok()));
        closed.then(|| Self::from_sorted_elements(group, elements))
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        group
            .generators()
            .iter()
            .all(|&g| self.generators.iter().all(|&h| self.contains(group.conj(g, h))))
    }

    /// `g H g^-1`.
    pub fn conjugate(&self, group: &FiniteGroup, g: ElementId) -> Subgroup {
        let mut elements: Vec<_> = self.elements.iter().map(|&h| group.conj(g, h)).collect();
        elements.sort_unstable();
        let generators = self.generators.iter().map(|&h| group.conj(g, h)).collect();
        Subgroup { elements, generators }
    }

    /// Image under an element map (an automorphism, typically).
    pub fn map(&self, group: &FiniteGroup, f: impl Fn(ElementId) -> ElementId) -> Subgroup {
        let mut elements: Vec<_> = self.elements.iter().map(|&h| f(h)).collect();
        elements.sort_unstable();
        elements.dedup();
        Subgroup::from_sorted_elements(group, elements)
    }

    pub fn intersects_trivially(&self, other: &Subgroup) -> bool {
        self.elements.iter().filter(|&&x| other.contains(x)).count() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// Every subgroup of `group`, sorted by (order, element set).
///
/// Built by joining cyclic subgroups onto known subgroups until nothing new
/// appears; fine for the orders handled here (S5 has 156 subgroups).
pub fn all_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<ElementId>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut frontier = vec![Subgroup::trivial()];
    let mut subgroups = vec![Subgroup::trivial()];
    while let Some(h) = frontier.pop() {
        for x in group.elements() {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.generators.clone();
            gens.push(x);
            let mut k = group.closure_bfs(&gens);
            k.sort_unstable();
            if found.insert(k.clone()) {
                let sub = Subgroup { elements: k, generators: gens };
                frontier.push(sub.clone());
                subgroups.push(sub);
            }
        }
    }
    subgroups.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    subgroups
}

/// A normal subgroup `S` with `S ∩ T = {e}` and `|S||T| = |G|`.
///
/// When several exist, the one with the lexicographically smallest element
/// set is returned.
pub fn normal_complement(group: &FiniteGroup, t: &Subgroup) -> Option<Subgroup> {
    if !group.order().is_multiple_of(t.order()) {
        return None;
    }
    let target = group.order() / t.order();
    all_subgroups(group)
        .into_iter()
        .filter(|s| s.order() == target && s.intersects_trivially(t) && s.is_normal(group))
        .min_by(|a, b| a.elements.cmp(&b.elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn group(spec: &str) -> FiniteGroup {
        build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let c6 = group("cyclic:6");
        assert_eq!(Subgroup::closure(&c6, &[2]).elements(), &[0, 2, 4]);

        let g = group("metacyclic:7:3:2");
        let s = g.element_named("s").unwrap();
        assert_eq!(Subgroup::closure(&g, &[s]).order(), 7);

        let d8 = group("dihedral:4");
        let r2 = d8.element_named("r^2").unwrap();
        let sref = d8.element_named("s").unwrap();
        let h = Subgroup::closure(&d8, &[r2, sref]);
        assert_eq!(h.order(), 4);
        assert_eq!(h.elements(), &[0, 1, 4, 5]);
    }

    #[test]
    fn normal_complement_examples() {
        let g = group("metacyclic:7:3:2");
        let t = Subgroup::closure(&g, &[g.element_named("t").unwrap()]);
        let s = normal_complement(&g, &t).unwrap();
        assert_eq!(s, Subgroup::closure(&g, &[g.element_named("s").unwrap()]));

        let c6 = group("cyclic:6");
        let t = Subgroup::closure(&c6, &[3]);
        assert_eq!(normal_complement(&c6, &t).unwrap().elements(), &[0, 2, 4]);
    }

    #[test]
    fn klein_four_in_s4_has_no_normal_complement() {
        let s4 = group("sym:4");
        let v = Subgroup::closure(
            &s4,
            &[s4.element_named("(1 2)(3 4)").unwrap(), s4.element_named("(1 3)(2 4)").unwrap()],
        );
        assert_eq!(v.order(), 4);
        assert!(v.is_normal(&s4));
        // Oracle: S4 has four subgroups of order 6 (point stabilisers, each
        // a copy of S3) and none of them is normal.
        let order_six: Vec<_> = all_subgroups(&s4).into_iter().filter(|h| h.order() == 6).collect();
        assert_eq!(order_six.len(), 4);
        assert!(order_six.iter().all(|h| !h.is_normal(&s4)));
        assert!(normal_complement(&s4, &v).is_none());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&group("sym:3")).len(), 6);
        assert_eq!(all_subgroups(&group("sym:4")).len(), 30);
        assert_eq!(all_subgroups(&group("dihedral:4")).len(), 10);
        assert_eq!(all_subgroups(&group("cyclic:12")).len(), 6);
    }

    #[test]
    fn from_elements_checks_closure() {
        let c6 = group("cyclic:6");
        assert!(Subgroup::from_elements(&c6, vec![0, 3]).is_some());
        assert!(Subgroup::from_elements(&c6, vec![0, 2]).is_none());
        assert!(Subgroup::from_elements(&c6, vec![1, 2]).is_none());
    }
}
