//! Isomorphism types by order.
//!
//! [`types_of_order`] lists one representative of every isomorphism type for
//! the orders where the list is known to be complete (1 through 15, and 21).
//! Anything else is available through [`extras`] and explicit specs, but
//! inventories built from them are never marked complete.

use super::GroupSpec;

use GroupSpec::*;

fn prod(a: GroupSpec, b: GroupSpec) -> GroupSpec {
    GroupSpec::product(a, b)
}

/// Orders for which [`types_of_order`] is a complete list of isomorphism types.
pub fn is_complete(order: usize) -> bool {
    (1..=15).contains(&order) || order == 21
}

/// Every isomorphism type of the given order, or an empty list when the
/// catalog makes no completeness claim for it.
pub fn types_of_order(order: usize) -> Vec<GroupSpec> {
    match order {
        1 | 2 | 3 | 5 | 7 | 11 | 13 | 15 => vec![Cyclic(order)],
        4 => vec![Cyclic(4), prod(Cyclic(2), Cyclic(2))],
        6 => vec![Cyclic(6), Sym(3)],
        8 => vec![
            Cyclic(8),
            prod(Cyclic(2), Cyclic(4)),
            ElementaryAbelian { p: 2, k: 3 },
            Dihedral(4),
            Quaternion,
        ],
        9 => vec![Cyclic(9), prod(Cyclic(3), Cyclic(3))],
        10 => vec![Cyclic(10), Dihedral(5)],
        12 => vec![
            Cyclic(12),
            prod(Cyclic(2), Cyclic(6)),
            Alt(4),
            Dihedral(6),
            Dicyclic(12),
        ],
        14 => vec![Cyclic(14), Dihedral(7)],
        21 => vec![Cyclic(21), Metacyclic { p: 7, q: 3, d: 2 }],
        _ => Vec::new(),
    }
}

/// Further buildable groups of an order without a completeness guarantee.
pub fn extras(order: usize) -> Vec<GroupSpec> {
    match order {
        16 => vec![Cyclic(16), Dihedral(8), Dicyclic(16), ElementaryAbelian { p: 2, k: 4 }],
        18 => vec![Cyclic(18), Dihedral(9), prod(Cyclic(3), Sym(3))],
        20 => vec![Cyclic(20), Dihedral(10), Dicyclic(20)],
        24 => vec![Cyclic(24), Sym(4), Dihedral(12), prod(Cyclic(2), Alt(4))],
        120 => vec![Sym(5), Cyclic(120)],
        _ => Vec::new(),
    }
}

/// All catalog groups of order at most `max_order` with a completeness guarantee.
pub fn complete_groups_up_to(max_order: usize) -> Vec<GroupSpec> {
    (1..=max_order).flat_map(types_of_order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{are_isomorphic, build_group};

    #[test]
    fn listed_types_are_pairwise_non_isomorphic() {
        for order in 1..=21 {
            let groups: Vec<_> =
                types_of_order(order).iter().map(|s| build_group(s).unwrap()).collect();
            for (i, a) in groups.iter().enumerate() {
                assert_eq!(a.order(), order);
                for b in &groups[i + 1..] {
                    assert!(are_isomorphic(a, b).is_none(), "{:?} ~ {:?}", a.spec(), b.spec());
                }
            }
        }
    }

    #[test]
    fn completeness_flags() {
        assert!(is_complete(12));
        assert!(is_complete(21));
        assert!(!is_complete(16));
        assert!(types_of_order(16).is_empty());
        // Number of isomorphism types of each complete order.
        let counts: Vec<usize> = (1..=15).map(|n| types_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1]);
    }
}
