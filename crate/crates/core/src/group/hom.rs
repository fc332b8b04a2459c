use std::collections::VecDeque;

use serde::Serialize;

use super::{ElementId, FiniteGroup};

/// A homomorphism between two table groups, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GroupHom {
    images: Vec<ElementId>,
}

impl GroupHom {
    /// Wraps an image sequence without checking anything.
    pub fn from_images(images: Vec<ElementId>) -> Self {
        GroupHom { images }
    }

    /// Wraps an image sequence after checking the homomorphism property.
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, images: Vec<ElementId>) -> Option<Self> {
        let hom = GroupHom { images };
        hom.is_homomorphism(domain, codomain).then_some(hom)
    }

    /// Extends images of `domain.generators()` to a homomorphism, if one exists.
    pub fn from_generator_images(domain: &FiniteGroup, codomain: &FiniteGroup, images: &[ElementId]) -> Option<Self> {
        if images.len() != domain.generators().len() || images.iter().any(|&x| x >= codomain.order()) {
            return None;
        }
        let map = extend_generator_images(domain, domain.generators(), images, 0, |&a, &b| codomain.mul(a, b))?;
        map.into_iter().collect::<Option<Vec<_>>>().map(|images| GroupHom { images })
    }

    pub fn identity(order: usize) -> Self {
        GroupHom { images: (0..order).collect() }
    }

    /// The map sending everything to the identity.
    pub fn trivial(order: usize) -> Self {
        GroupHom { images: vec![0; order] }
    }

    pub fn images(&self) -> &[ElementId] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, a: ElementId) -> ElementId {
        self.images[a]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupHom) -> GroupHom {
        GroupHom { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Option<GroupHom> {
        let mut inv = vec![usize::MAX; self.images.len()];
        for (a, &b) in self.images.iter().enumerate() {
            if b >= inv.len() || inv[b] != usize::MAX {
                return None;
            }
            inv[b] = a;
        }
        Some(GroupHom { images: inv })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &b)| a == b)
    }

    pub fn is_bijective(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn is_homomorphism(&self, domain: &FiniteGroup, codomain: &FiniteGroup) -> bool {
        self.images.len() == domain.order()
            && self.images.iter().all(|&x| x < codomain.order())
            && domain.elements().all(|a| {
                domain.elements().all(|b| {
                    self.images[domain.mul(a, b)] == codomain.mul(self.images[a], self.images[b])
                })
            })
    }

    /// Sorted image set.
    pub fn image_set(&self) -> Vec<ElementId> {
        let mut im = self.images.clone();
        im.sort_unstable();
        im.dedup();
        im
    }
}

/// Extends generator images to the subgroup they generate, checking every
/// Cayley-graph edge.
///
/// Returns `None` on an inconsistency (no homomorphism with these generator
/// images exists); otherwise entry `a` holds the image of `a` for every `a`
/// in `<gens>` and `None` elsewhere.
pub(crate) fn extend_generator_images<T: Clone + PartialEq>(
    group: &FiniteGroup,
    gens: &[ElementId],
    images: &[T],
    identity: T,
    mul: impl Fn(&T, &T) -> T,
) -> Option<Vec<Option<T>>> {
    let mut map: Vec<Option<T>> = vec![None; group.order()];
    map[0] = Some(identity);
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x].clone().expect("queued elements are assigned");
        for (&g, img) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let candidate = mul(&fx, img);
            match &map[y] {
                Some(existing) if *existing != candidate => return None,
                Some(_) => {}
                None => {
                    map[y] = Some(candidate);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

/// Backtracking over images of `domain.generators()`.
///
/// `candidates[k]` lists the allowed images of generator `k`. With
/// `injective`, partial maps with a nontrivial kernel are pruned. `visit`
/// receives each complete homomorphism and returns `false` to stop.
fn search_homs(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    candidates: &[Vec<ElementId>],
    injective: bool,
    visit: &mut dyn FnMut(GroupHom) -> bool,
) {
    fn go(
        domain: &FiniteGroup,
        codomain: &FiniteGroup,
        candidates: &[Vec<ElementId>],
        injective: bool,
        chosen: &mut Vec<ElementId>,
        visit: &mut dyn FnMut(GroupHom) -> bool,
    ) -> bool {
        let k = chosen.len();
        let gens = &domain.generators()[..k];
        let Some(map) = extend_generator_images(domain, gens, chosen, 0, |&a, &b| codomain.mul(a, b))
        else {
            return true;
        };
        if injective {
            let mut seen = vec![false; codomain.order()];
            for img in map.iter().flatten() {
                if std::mem::replace(&mut seen[*img], true) {
                    return true;
                }
            }
        }
        if k == candidates.len() {
            let images = map.into_iter().map(|x| x.expect("generators span the domain")).collect();
            return visit(GroupHom { images });
        }
        for &c in &candidates[k] {
            chosen.push(c);
            let keep_going = go(domain, codomain, candidates, injective, chosen, visit);
            chosen.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    go(domain, codomain, candidates, injective, &mut Vec::new(), visit);
}

fn same_order_candidates(domain: &FiniteGroup, codomain: &FiniteGroup) -> Vec<Vec<ElementId>> {
    domain
        .generators()
        .iter()
        .map(|&g| {
            codomain
                .elements()
                .filter(|&x| codomain.element_order(x) == domain.element_order(g))
                .collect()
        })
        .collect()
}

/// All isomorphisms `domain -> codomain`, sorted by image sequence.
pub fn isomorphisms(domain: &FiniteGroup, codomain: &FiniteGroup) -> Vec<GroupHom> {
    if domain.order() != codomain.order() || domain.order_profile() != codomain.order_profile() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let candidates = same_order_candidates(domain, codomain);
    search_homs(domain, codomain, &candidates, true, &mut |h| {
        out.push(h);
        true
    });
    out.sort();
    out
}

/// The full automorphism group, sorted by image sequence (identity first).
pub fn automorphisms(group: &FiniteGroup) -> Vec<GroupHom> {
    isomorphisms(group, group)
}

/// Some isomorphism, if the groups are isomorphic.
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return None;
    }
    let mut found = None;
    let candidates = same_order_candidates(a, b);
    search_homs(a, b, &candidates, true, &mut |h| {
        found = Some(h);
        false
    });
    found
}

/// All endomorphisms, sorted by image sequence.
pub fn endomorphisms(group: &FiniteGroup) -> Vec<GroupHom> {
    let candidates: Vec<Vec<ElementId>> = group
        .generators()
        .iter()
        .map(|&g| {
            group
                .elements()
                .filter(|&x| group.element_order(g).is_multiple_of(group.element_order(x)))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    search_homs(group, group, &candidates, false, &mut |h| {
        out.push(h);
        true
    });
    out.sort();
    out
}

/// Endomorphisms whose image is abelian.
pub fn abelian_endomorphisms(group: &FiniteGroup) -> Vec<GroupHom> {
    endomorphisms(group)
        .into_iter()
        .filter(|h| {
            let gens: Vec<ElementId> = group.generators().iter().map(|&g| h.apply(g)).collect();
            gens.iter().all(|&a| gens.iter().all(|&b| group.commutes(a, b)))
        })
        .collect()
}

/// `h ↦ g h g^-1`.
pub fn inner_automorphism(group: &FiniteGroup, g: ElementId) -> GroupHom {
    GroupHom { images: group.elements().map(|h| group.conj(g, h)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use itertools::Itertools;

    fn group(spec: &str) -> FiniteGroup {
        build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap()
    }

    /// Oracle: every assignment of generator images, checked against the
    /// whole table (no pruning, no incremental extension).
    fn brute_force_automorphism_count(g: &FiniteGroup) -> usize {
        let gens = g.generators();
        (0..gens.len())
            .map(|_| g.elements())
            .multi_cartesian_product()
            .filter(|imgs| {
                // Evaluate the map on words by closing over pairs (x, f(x)).
                let mut map = vec![usize::MAX; g.order()];
                map[0] = 0;
                let mut changed = true;
                while changed {
                    changed = false;
                    for x in g.elements() {
                        if map[x] == usize::MAX {
                            continue;
                        }
                        for (k, &gen) in gens.iter().enumerate() {
                            let y = g.mul(x, gen);
                            if map[y] == usize::MAX {
                                map[y] = g.mul(map[x], imgs[k]);
                                changed = true;
                            }
                        }
                    }
                }
                let h = GroupHom::from_images(map);
                h.is_bijective() && h.is_homomorphism(g, g)
            })
            .count()
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&group("cyclic:6")).len(), 2);
        let meta = group("metacyclic:7:3:2");
        let auts = automorphisms(&meta);
        assert_eq!(auts.len(), 42);
        assert_eq!(brute_force_automorphism_count(&meta), 42);
        assert_eq!(automorphisms(&group("elemab:2:3")).len(), 168);
        assert_eq!(automorphisms(&group("dihedral:4")).len(), 8);
        assert_eq!(automorphisms(&group("quaternion:8")).len(), 24);
        assert_eq!(automorphisms(&group("alt:4")).len(), 24);
        assert!(auts[0].is_identity());
    }

    #[test]
    fn s5_automorphisms_are_inner() {
        let s5 = group("sym:5");
        let auts = automorphisms(&s5);
        assert_eq!(auts.len(), 120);
        let mut inner: Vec<GroupHom> = s5.elements().map(|g| inner_automorphism(&s5, g)).collect();
        inner.sort();
        inner.dedup();
        // Trivial centre: g ↦ φ_g is injective.
        assert_eq!(inner.len(), 120);
        assert_eq!(inner, auts);
    }

    #[test]
    fn automorphisms_form_a_group() {
        for spec in ["dihedral:4", "cyclic:12", "sym:3", "product:cyclic:2,cyclic:4"] {
            let g = group(spec);
            let auts = automorphisms(&g);
            for a in &auts {
                assert!(a.is_homomorphism(&g, &g));
                assert!(auts.binary_search(&a.inverse().unwrap()).is_ok());
                for b in &auts {
                    assert!(auts.binary_search(&a.compose(b)).is_ok(), "{spec}");
                }
            }
        }
    }

    #[test]
    fn inner_automorphisms() {
        let g = group("metacyclic:7:3:2");
        assert!(inner_automorphism(&g, 0).is_identity());
        let (s, t) = (g.element_named("s").unwrap(), g.element_named("t").unwrap());
        let phi = inner_automorphism(&g, t);
        assert_eq!(phi.apply(s), g.pow(s, 2));
        assert_eq!(phi.apply(t), t);
        let c6 = group("cyclic:6");
        assert!(c6.elements().all(|x| inner_automorphism(&c6, x).is_identity()));
    }

    #[test]
    fn inner_automorphism_properties() {
        for spec in ["sym:4", "dihedral:6", "metacyclic:7:3:2", "quaternion:8"] {
            let g = group(spec);
            let centre = g.center();
            for a in g.elements() {
                let pa = inner_automorphism(&g, a);
                assert_eq!(pa.is_identity(), centre.contains(a));
                for b in g.elements() {
                    let pab = inner_automorphism(&g, g.mul(a, b));
                    assert_eq!(pab, pa.compose(&inner_automorphism(&g, b)));
                }
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = group("cyclic:4");
        let v4 = group("product:cyclic:2,cyclic:2");
        assert!(are_isomorphic(&c4, &v4).is_none());
        let c6 = group("cyclic:6");
        let iso = are_isomorphic(&c6, &group("cyclic:6")).unwrap();
        assert!(iso.is_homomorphism(&c6, &c6) && iso.is_bijective());
        let s3 = group("sym:3");
        let d3 = group("dihedral:3");
        let iso = are_isomorphic(&s3, &d3).unwrap();
        assert!(iso.is_homomorphism(&s3, &d3));
        assert!(are_isomorphic(&d3, &s3).is_some());
        let c2c3 = group("product:cyclic:2,cyclic:3");
        assert!(are_isomorphic(&c2c3, &c6).is_some());
        assert_eq!(isomorphisms(&c6, &c2c3).len(), 2);
    }

    #[test]
    fn endomorphism_examples() {
        assert_eq!(endomorphisms(&group("cyclic:6")).len(), 6);
        assert_eq!(abelian_endomorphisms(&group("cyclic:2")).len(), 2);
        // S3: trivial, 3 maps onto involution subgroups, 6 automorphisms.
        assert_eq!(endomorphisms(&group("sym:3")).len(), 10);
        assert_eq!(abelian_endomorphisms(&group("sym:3")).len(), 4);
    }
}
