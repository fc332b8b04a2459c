use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{abelian_endomorphisms, inner_automorphism, ElementId, FiniteGroup, GroupHom};
use crate::hgs::{certify, RegularSubgroup};
use crate::perm::{lambda, rho, Perm, PermGroup};
use crate::rho::rho_conjugate;

use super::byott::{from_hol_embedding, HolEmbedding};

/// Whether `f1(h) = f2(h)` only for `h = e`.
pub fn fpf_check(f1: &GroupHom, f2: &GroupHom) -> bool {
    f1.images().len() == f2.images().len()
        && f1.images().iter().zip(f2.images()).skip(1).all(|(a, b)| a != b)
}

/// The embedding `h ↦ λ(f1(h)) ρ(f2(h))` of `G` into `Hol(M)`.
pub fn fpf_embedding(
    group: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    f1: &GroupHom,
    f2: &GroupHom,
) -> Result<HolEmbedding> {
    for (name, f) in [("f1", f1), ("f2", f2)] {
        if f.images().len() != group.order() || !f.is_homomorphism(group, target) {
            return Err(Error::NotHomomorphism(format!("{name} is not a homomorphism G → M")));
        }
    }
    if let Some(h) = (1..group.order()).find(|&h| f1.apply(h) == f2.apply(h)) {
        return Err(Error::NotFixedPointFree(h));
    }
    if group.order() != target.order() {
        return Err(Error::NotRegular(format!("|G| = {} but |M| = {}", group.order(), target.order())));
    }
    let beta = group
        .elements()
        .map(|h| lambda(target, f1.apply(h)).compose(&rho(target, f2.apply(h))))
        .collect();
    HolEmbedding::new(Arc::clone(group), Arc::clone(target), beta)
        .map_err(|e| Error::NotRegular(e.to_string()))
}

/// The structure attached to a fixed-point-free pair.
pub fn hgs_from_fpf(
    group: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    f1: &GroupHom,
    f2: &GroupHom,
) -> Result<RegularSubgroup> {
    from_hol_embedding(&fpf_embedding(group, target, f1, f2)?)
}

/// Precomposing both maps with `φ_g` yields the ρ-conjugate by `g⁻¹`.
///
/// Translating `(f1 φ_g, f2 φ_g)` gives the embedding `β ∘ φ_g`, which by the
/// precomposition law corresponds to `N_{g⁻¹}`.
pub fn fpf_transport_check(
    group: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    f1: &GroupHom,
    f2: &GroupHom,
    g: ElementId,
) -> Result<bool> {
    let phi = inner_automorphism(group, g);
    let (f1g, f2g) = (f1.compose(&phi), f2.compose(&phi));
    if !fpf_check(&f1g, &f2g) {
        return Ok(false);
    }
    let moved = hgs_from_fpf(group, target, &f1g, &f2g)?;
    let base = hgs_from_fpf(group, target, f1, f2)?;
    Ok(moved == rho_conjugate(&base, group.inv(g)))
}

/// An endomorphism of `G` with abelian image.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianMap(GroupHom);

impl AbelianMap {
    pub fn new(group: &FiniteGroup, hom: GroupHom) -> Result<Self> {
        if hom.images().len() != group.order() || !hom.is_homomorphism(group, group) {
            return Err(Error::NotHomomorphism("not an endomorphism".into()));
        }
        let image = hom.image_set();
        let abelian = image.iter().all(|&a| image.iter().all(|&b| group.commutes(a, b)));
        if !abelian {
            return Err(Error::Invalid("image is not abelian".into()));
        }
        Ok(AbelianMap(hom))
    }

    pub fn hom(&self) -> &GroupHom {
        &self.0
    }

    pub fn apply(&self, h: ElementId) -> ElementId {
        self.0.apply(h)
    }

    /// `φ ψ φ⁻¹` for an automorphism `φ`.
    pub fn conjugate_by(&self, phi: &GroupHom) -> AbelianMap {
        let inv = phi.inverse().expect("automorphisms are invertible");
        AbelianMap(phi.compose(&self.0).compose(&inv))
    }
}

/// All abelian maps on `G`, in a deterministic order.
pub fn abelian_maps(group: &FiniteGroup) -> Vec<AbelianMap> {
    abelian_endomorphisms(group).into_iter().map(AbelianMap).collect()
}

/// `η_ψ(h) = λ(h ψ(h)⁻¹) ρ(ψ(h)⁻¹)`, i.e. `x ↦ h ψ(h)⁻¹ x ψ(h)`.
pub fn abelian_map_element(group: &FiniteGroup, psi: &AbelianMap, h: ElementId) -> Perm {
    let p = psi.apply(h);
    lambda(group, group.mul(h, group.inv(p))).compose(&rho(group, group.inv(p)))
}

/// `N_ψ = {η_ψ(h) : h ∈ G}`, checked closed and certified.
pub fn hgs_from_abelian_map(group: &Arc<FiniteGroup>, psi: &AbelianMap) -> Result<RegularSubgroup> {
    let elements: Vec<Perm> = group.elements().map(|h| abelian_map_element(group, psi, h)).collect();
    let perms = PermGroup::from_elements(group.order(), elements)
        .map_err(|e| Error::ConstructionFailure(format!("η_ψ does not close: {e}")))?;
    certify(group, perms).map_err(|e| Error::ConstructionFailure(e.to_string()))
}

/// `N_ψ` conjugated by `ρ(g)` is `N_{φ_g ψ φ_g⁻¹}`.
pub fn abelian_map_transport_check(
    group: &Arc<FiniteGroup>,
    psi: &AbelianMap,
    g: ElementId,
) -> Result<bool> {
    let moved = psi.conjugate_by(&inner_automorphism(group, g));
    Ok(rho_conjugate(&hgs_from_abelian_map(group, psi)?, g) == hgs_from_abelian_map(group, &moved)?)
}
