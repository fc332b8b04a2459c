use std::collections::HashMap;

use super::{automorphisms, ElementId, FiniteGroup, GroupHom};
use crate::perm::{lambda, Perm};

/// `Hol(M) = λ(M) Aut(M)` realised as permutations of `M`.
///
/// Element `λ(m) θ` acts by `x ↦ m θ(x)`; since `θ(e) = e`, the translation
/// part of `p` is `p[0]` and the automorphism part is `λ(p[0])^-1 p`.
#[derive(Debug, Clone)]
pub struct Holomorph {
    base: usize,
    elements: Vec<Perm>,
    automorphisms: Vec<GroupHom>,
    factors: HashMap<Perm, (ElementId, usize)>,
}

impl Holomorph {
    pub fn new(m: &FiniteGroup) -> Self {
        let automorphisms = automorphisms(m);
        let mut factors = HashMap::with_capacity(m.order() * automorphisms.len());
        for x in m.elements() {
            for (k, theta) in automorphisms.iter().enumerate() {
                let images = theta.images().iter().map(|&y| m.mul(x, y)).collect();
                factors.insert(Perm::from_images_unchecked(images), (x, k));
            }
        }
        let mut elements: Vec<Perm> = factors.keys().cloned().collect();
        elements.sort();
        Holomorph { base: m.order(), elements, automorphisms, factors }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Elements in canonical (lexicographic image) order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn automorphisms(&self) -> &[GroupHom] {
        &self.automorphisms
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.factors.contains_key(p)
    }

    /// `(m, k)` with `p = λ(m) ∘ automorphisms()[k]`.
    pub fn factor(&self, p: &Perm) -> Option<(ElementId, usize)> {
        self.factors.get(p).copied()
    }

    /// Direct membership test from the table of `m`, without the lookup map.
    pub fn is_holomorph_element(m: &FiniteGroup, p: &Perm) -> bool {
        if p.base() != m.order() {
            return false;
        }
        let shift = m.inv(p.apply(0));
        let theta: Vec<ElementId> = (0..m.order()).map(|x| m.mul(shift, p.apply(x))).collect();
        GroupHom::from_images(theta).is_homomorphism(m, m)
    }

    /// `λ(m) ∘ θ` for the `k`-th automorphism.
    pub fn element(&self, m: &FiniteGroup, x: ElementId, k: usize) -> Perm {
        lambda(m, x).compose(&Perm::from_hom(&self.automorphisms[k]))
    }

    /// The holomorph as an abstract table group; element `i` is `elements()[i]`.
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.order();
        let index: HashMap<&Perm, usize> =
            self.elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = vec![0; n * n];
        for (a, pa) in self.elements.iter().enumerate() {
            for (b, pb) in self.elements.iter().enumerate() {
                table[a * n + b] = index[&pa.compose(pb)];
            }
        }
        let names = (0..n).map(|i| format!("h{i}")).collect();
        FiniteGroup::assemble(n, table, names, None)
    }
}
