//! G-stable regular subgroups of `Perm(G)`, i.e. Hopf-Galois structures on a
//! Galois extension with group `G`, and their enumeration.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::constructions::translate_embedding;
use crate::error::{Error, Result};
use crate::group::{
    are_isomorphic, build_group, catalog, extend_generator_images, ElementId, FiniteGroup,
    GroupSpec, Holomorph,
};
use crate::perm::{centralizer_of_regular, lambda, rho, Perm, PermGroup};

/// A certified G-stable regular subgroup `N ≤ Perm(G)`.
///
/// `eta[a]` indexes the unique element of `N` sending the identity to `a`.
/// Equality and ordering use the canonical element list only.
#[derive(Clone)]
pub struct RegularSubgroup {
    group: Arc<FiniteGroup>,
    perms: PermGroup,
    eta: Vec<usize>,
    type_label: Option<GroupSpec>,
}

impl fmt::Debug for RegularSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RegularSubgroup")
            .field("group", &self.group.spec())
            .field("generators", &self.perms.generators())
            .field("type", &self.type_label)
            .finish()
    }
}

impl PartialEq for RegularSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.perms == other.perms
    }
}

impl Eq for RegularSubgroup {}

impl PartialOrd for RegularSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RegularSubgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.perms.cmp(&other.perms)
    }
}

/// Checks regularity and G-stability of `perms` and wraps it.
///
/// Stability is tested on generators: `λ(x) η λ(x)⁻¹ ∈ N` for every
/// generator `x` of `G` and every generator `η` of `N`.
pub fn certify(group: &Arc<FiniteGroup>, perms: PermGroup) -> Result<RegularSubgroup> {
    let n = group.order();
    if perms.base() != n {
        return Err(Error::NotRegular(format!("base {} but |G| = {n}", perms.base())));
    }
    if perms.order() != n {
        return Err(Error::NotRegular(format!("order {} but |G| = {n}", perms.order())));
    }
    let eta = perms.regular_section().ok_or_else(|| {
        let dup = perms.elements().iter().map(|p| p.apply(0)).duplicates().next().unwrap_or(0);
        Error::NotRegular(format!("two elements send the identity to {dup}"))
    })?;
    for &g in group.generators() {
        let lg = lambda(group, g);
        for (i, gen) in perms.generators().iter().enumerate() {
            if !perms.contains(&gen.conjugate_by(&lg)) {
                return Err(Error::NotStable { g, eta: i });
            }
        }
    }
    Ok(RegularSubgroup { group: Arc::clone(group), perms, eta, type_label: None })
}

/// Certifies the closure of `gens`.
pub fn certify_generated(group: &Arc<FiniteGroup>, gens: &[Perm]) -> Result<RegularSubgroup> {
    certify(group, PermGroup::generate(group.order(), gens)?)
}

impl RegularSubgroup {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn perms(&self) -> &PermGroup {
        &self.perms
    }

    pub fn order(&self) -> usize {
        self.perms.order()
    }

    pub fn generators(&self) -> &[Perm] {
        self.perms.generators()
    }

    pub fn elements(&self) -> &[Perm] {
        self.perms.elements()
    }

    /// The element `η_a` with `η_a[e] = a`.
    pub fn eta(&self, a: ElementId) -> &Perm {
        &self.perms.elements()[self.eta[a]]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.perms.contains(p)
    }

    pub fn type_label(&self) -> Option<&GroupSpec> {
        self.type_label.as_ref()
    }

    pub fn with_type_label(mut self, label: GroupSpec) -> Self {
        self.type_label = Some(label);
        self
    }

    /// Product table of `N` transported to `G`'s index set:
    /// `star[a][b] = (η_a η_b)[e] = η_a[b]`.
    pub fn star_table(&self) -> Vec<ElementId> {
        let n = self.group.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            table.extend_from_slice(self.eta(a).images());
        }
        table
    }

    /// `N` as an abstract table group (its element `a` is `η_a`).
    pub fn abstract_group(&self) -> FiniteGroup {
        let n = self.group.order();
        FiniteGroup::from_table(n, self.star_table(), None, None)
            .expect("a regular subgroup yields a group table")
    }

    /// A generating set depending only on the element set: each element, in
    /// canonical order, that is not generated by those before it.
    pub fn canonical_generators(&self) -> Vec<Perm> {
        let base = self.group.order();
        let mut gens: Vec<Perm> = Vec::new();
        let mut span = PermGroup::trivial(base);
        for p in self.perms.elements() {
            if span.order() == self.order() {
                break;
            }
            if !span.contains(p) {
                gens.push(p.clone());
                span = PermGroup::generate(base, &gens).expect("a subgroup of N");
            }
        }
        gens
    }

    /// First 16 hex digits of a SHA-256 over the canonical element list.
    pub fn canonical_hash(&self) -> String {
        canonical_hash(&self.perms)
    }

    /// Exhaustive stability check over all `g ∈ G` and all `η ∈ N`.
    pub fn is_stable_exhaustive(&self) -> bool {
        self.group.elements().all(|g| {
            let lg = lambda(&self.group, g);
            self.perms.elements().iter().all(|eta| self.perms.contains(&eta.conjugate_by(&lg)))
        })
    }

    /// Whether `ρ(G)` normalises `N`.
    pub fn is_rho_normalized(&self) -> bool {
        self.group.generators().iter().all(|&g| self.perms.is_normalized_by(&rho(&self.group, g)))
    }
}

pub fn canonical_hash(perms: &PermGroup) -> String {
    let mut hasher = Sha256::new();
    hasher.update((perms.base() as u64).to_le_bytes());
    for p in perms.elements() {
        for &x in p.images() {
            hasher.update((x as u32).to_le_bytes());
        }
    }
    hex::encode(hasher.finalize())[..16].to_string()
}

/// `λ(G)`, the canonical nonclassical structure.
pub fn lambda_subgroup(group: &Arc<FiniteGroup>) -> RegularSubgroup {
    let gens: Vec<Perm> = group.generators().iter().map(|&g| lambda(group, g)).collect();
    let label = group.spec().cloned();
    let n = certify_generated(group, &gens).expect("λ(G) is G-stable and regular");
    match label {
        Some(l) => n.with_type_label(l),
        None => n,
    }
}

/// `ρ(G)`, the classical structure.
pub fn rho_subgroup(group: &Arc<FiniteGroup>) -> RegularSubgroup {
    let gens: Vec<Perm> = group.generators().iter().map(|&g| rho(group, g)).collect();
    let label = group.spec().cloned();
    let n = certify_generated(group, &gens).expect("ρ(G) is G-stable and regular");
    match label {
        Some(l) => n.with_type_label(l),
        None => n,
    }
}

/// `g ∗ η = λ(g) η λ(g)⁻¹`.
pub fn g_star_action(n: &RegularSubgroup, g: ElementId, eta: &Perm) -> Result<Perm> {
    if !n.contains(eta) {
        return Err(Error::NotInSubgroup);
    }
    Ok(eta.conjugate_by(&lambda(&n.group, g)))
}

/// `N^opp = Cent_{Perm(G)}(N)`.
pub fn opposite(n: &RegularSubgroup) -> RegularSubgroup {
    let cent = centralizer_of_regular(&n.perms).expect("certified subgroups are regular");
    let opp = certify(&n.group, cent).expect("the opposite of a G-stable regular subgroup is one");
    match &n.type_label {
        // N^opp ≅ N via the anti-isomorphism composed with inversion.
        Some(l) => opp.with_type_label(l.clone()),
        None => opp,
    }
}

/// Catalog label of the abstract isomorphism type of `N`.
pub fn type_of(n: &RegularSubgroup) -> Result<GroupSpec> {
    let abstract_n = n.abstract_group();
    let order = abstract_n.order();
    for spec in catalog::types_of_order(order).into_iter().chain(catalog::extras(order)) {
        let candidate = build_group(&spec)?;
        if are_isomorphic(&abstract_n, &candidate).is_some() {
            return Ok(spec);
        }
    }
    Err(Error::UnknownType(order))
}

/// A set of structures on one group, in canonical order.
#[derive(Debug, Clone)]
pub struct HgsInventory {
    pub group: Arc<FiniteGroup>,
    pub structures: Vec<RegularSubgroup>,
    /// Set only when the list provably holds every G-stable regular subgroup.
    pub complete: bool,
    pub type_filter: Option<GroupSpec>,
}

impl HgsInventory {
    pub fn len(&self) -> usize {
        self.structures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.structures.is_empty()
    }

    pub fn position(&self, n: &RegularSubgroup) -> Option<usize> {
        self.structures.binary_search(n).ok()
    }

    /// Canonical element lists, for set comparisons.
    pub fn canonical_set(&self) -> BTreeSet<Vec<Perm>> {
        self.structures.iter().map(|n| n.elements().to_vec()).collect()
    }

    pub fn find_by_hash(&self, prefix: &str) -> Option<&RegularSubgroup> {
        self.structures.iter().find(|n| n.canonical_hash().starts_with(prefix))
    }
}

fn types_for(group: &FiniteGroup, type_filter: Option<&GroupSpec>) -> Result<Vec<GroupSpec>> {
    let n = group.order();
    match type_filter {
        Some(spec) => {
            spec.validate()?;
            if spec.order() != Some(n) {
                return Err(Error::InvalidSpec(format!("type {spec} does not have order {n}")));
            }
            Ok(vec![spec.clone()])
        }
        None if catalog::is_complete(n) => Ok(catalog::types_of_order(n)),
        None => Err(Error::UnsupportedOrder(n)),
    }
}

/// All G-stable regular subgroups of `Perm(G)` of the requested types.
///
/// For each type `M`, every regular embedding `β : G → Hol(M)` is found by
/// backtracking over generator images (the first image only up to
/// `Aut(M)`-conjugacy, which leaves the translated subgroup unchanged), then
/// translated back to `Perm(G)` and deduplicated by canonical form.
pub fn enumerate_hgs(group: &Arc<FiniteGroup>, type_filter: Option<&GroupSpec>) -> Result<HgsInventory> {
    let types = types_for(group, type_filter)?;
    let mut found: BTreeMap<Vec<Perm>, (PermGroup, GroupSpec)> = BTreeMap::new();
    for spec in &types {
        let m = build_group(spec)?;
        for perms in embeddings_into_holomorph(group, &m) {
            found.entry(perms.elements().to_vec()).or_insert((perms, spec.clone()));
        }
    }
    let structures = found
        .into_values()
        .map(|(perms, spec)| certify(group, perms).map(|n| n.with_type_label(spec)))
        .collect::<Result<Vec<_>>>()?;
    Ok(HgsInventory {
        group: Arc::clone(group),
        structures,
        complete: type_filter.is_none(),
        type_filter: type_filter.cloned(),
    })
}

/// Translated subgroups of every regular embedding `G → Hol(M)`, deduplicated.
fn embeddings_into_holomorph(group: &FiniteGroup, m: &FiniteGroup) -> Vec<PermGroup> {
    let hol = Holomorph::new(m);
    let gens = group.generators();
    if gens.is_empty() {
        return vec![translate_embedding(group, m, &[Perm::identity(m.order())])];
    }
    let orders: Vec<usize> = hol.elements().iter().map(Perm::order).collect();
    let candidates: Vec<Vec<&Perm>> = gens
        .iter()
        .map(|&g| {
            hol.elements()
                .iter()
                .zip(&orders)
                .filter(|(_, &o)| o == group.element_order(g))
                .map(|(p, _)| p)
                .collect()
        })
        .collect();

    let aut_perms: Vec<Perm> = hol.automorphisms().iter().map(Perm::from_hom).collect();
    let mut seen: HashSet<&Perm> = HashSet::new();
    let mut first_reps: Vec<&Perm> = Vec::new();
    for &c in &candidates[0] {
        if seen.contains(c) {
            continue;
        }
        first_reps.push(c);
        for theta in &aut_perms {
            let conj = c.conjugate_by(theta);
            if let Some(&q) = candidates[0].iter().find(|q| ***q == conj) {
                seen.insert(q);
            }
        }
    }

    let per_seed: Vec<BTreeMap<Vec<Perm>, PermGroup>> = first_reps
        .par_iter()
        .map(|&rep| {
            let mut out = BTreeMap::new();
            let mut chosen = vec![rep.clone()];
            search_embeddings(group, m, &candidates, &mut chosen, &mut out);
            out
        })
        .collect();
    let mut merged = BTreeMap::new();
    for part in per_seed {
        for (k, v) in part {
            merged.entry(k).or_insert(v);
        }
    }
    merged.into_values().collect()
}

fn search_embeddings(
    group: &FiniteGroup,
    m: &FiniteGroup,
    candidates: &[Vec<&Perm>],
    chosen: &mut Vec<Perm>,
    out: &mut BTreeMap<Vec<Perm>, PermGroup>,
) {
    let k = chosen.len();
    let base = m.order();
    let Some(map) = extend_generator_images(
        group,
        &group.generators()[..k],
        chosen,
        Perm::identity(base),
        |a, b| a.compose(b),
    ) else {
        return;
    };
    let mut hit = vec![false; base];
    for p in map.iter().flatten() {
        if std::mem::replace(&mut hit[p.apply(0)], true) {
            return;
        }
    }
    if k == candidates.len() {
        let beta: Vec<Perm> = map.into_iter().map(|p| p.expect("generators span G")).collect();
        let perms = translate_embedding(group, m, &beta);
        out.entry(perms.elements().to_vec()).or_insert(perms);
        return;
    }
    for &c in &candidates[k] {
        chosen.push(c.clone());
        search_embeddings(group, m, candidates, chosen, out);
        chosen.pop();
    }
}

/// Largest order accepted by [`brute_force_inventory`].
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// Independent enumeration by transport of structure.
///
/// For every catalog type `M` and every bijection `b : M → G` fixing the
/// identity, `N_b = {x ↦ b(m · b⁻¹(x))}` is regular; keep those normalised by
/// `λ(G)`. No holomorph or automorphism computation is involved.
pub fn brute_force_inventory(group: &Arc<FiniteGroup>) -> Result<HgsInventory> {
    let n = group.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::OrderTooLarge { order: n, limit: BRUTE_FORCE_LIMIT });
    }
    let types = types_for(group, None)?;
    let lambdas: Vec<Perm> = group.generators().iter().map(|&g| lambda(group, g)).collect();
    let mut found: BTreeMap<Vec<Perm>, GroupSpec> = BTreeMap::new();
    for spec in &types {
        let m = build_group(spec)?;
        for tail in (1..n).permutations(n - 1) {
            let mut b = vec![0];
            b.extend(tail);
            let mut b_inv = vec![0; n];
            for (x, &y) in b.iter().enumerate() {
                b_inv[y] = x;
            }
            let eta = |mu: ElementId| -> Perm {
                Perm::new((0..n).map(|x| b[m.mul(mu, b_inv[x])]).collect()).expect("bijection")
            };
            let member = |p: &Perm| *p == eta(b_inv[p.apply(0)]);
            let stable = lambdas.iter().all(|l| {
                m.generators().iter().all(|&mu| member(&eta(mu).conjugate_by(l)))
            });
            if stable {
                let mut elements: Vec<Perm> = m.elements().map(eta).collect();
                elements.sort();
                found.entry(elements).or_insert_with(|| spec.clone());
            }
        }
    }
    let structures = found
        .into_iter()
        .map(|(elements, spec)| {
            let perms = PermGroup::from_sorted_closed(n, elements);
            certify(group, perms).map(|s| s.with_type_label(spec))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HgsInventory { group: Arc::clone(group), structures, complete: true, type_filter: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn group(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap())
    }

    #[test]
    fn lambda_and_rho_certify() {
        for spec in ["sym:3", "cyclic:5", "dihedral:4"] {
            let g = group(spec);
            assert!(lambda_subgroup(&g).is_stable_exhaustive());
            assert!(rho_subgroup(&g).is_stable_exhaustive());
        }
    }

    #[test]
    fn metacyclic_cyclic_structure_certifies() {
        let g = group("metacyclic:7:3:2");
        let (s, t) = (g.element_named("s").unwrap(), g.element_named("t").unwrap());
        let n = certify_generated(&g, &[lambda(&g, s).compose(&rho(&g, t))]).unwrap();
        assert!(n.is_stable_exhaustive());
        assert_eq!(type_of(&n).unwrap(), GroupSpec::Cyclic(21));
    }

    #[test]
    fn certify_reports_witnesses() {
        let g = group("sym:3");
        let c3 = g.element_named("(1 2 3)").unwrap();
        let tr = g.element_named("(1 2)").unwrap();
        // <λ((123)), ρ((12))> has order 6 but is not G-stable: conjugating
        // ρ((12)) by λ of a transposition gives λ(x)ρ((12))λ(x)⁻¹ = ρ((12)),
        // while λ((123)) conjugated by λ((12)) is λ((132)), which is fine;
        // the oracle below decides membership directly.
        let gens = [lambda(&g, c3), rho(&g, tr)];
        let perms = PermGroup::generate(6, &gens).unwrap();
        let exhaustive_stable = g.elements().all(|x| {
            let lx = lambda(&g, x);
            perms.elements().iter().all(|p| perms.contains(&p.conjugate_by(&lx)))
        });
        let regular = perms.is_regular();
        let res = certify(&g, perms);
        assert_eq!(res.is_ok(), exhaustive_stable && regular);

        // A non-regular group: the stabiliser of a point.
        let fix = PermGroup::generate(6, &[Perm::new(vec![0, 2, 1, 3, 4, 5]).unwrap()]).unwrap();
        assert!(matches!(certify(&g, fix), Err(Error::NotRegular(_))));

        // A regular group that is not G-stable: λ(S3) conjugated by a random
        // permutation of the points.
        let q = Perm::new(vec![0, 1, 3, 2, 5, 4]).unwrap();
        let moved = lambda_subgroup(&g).perms().conjugate_by(&q);
        match certify(&g, moved.clone()) {
            Err(Error::NotStable { .. }) => {}
            Ok(n) => assert!(n.is_stable_exhaustive()),
            Err(e) => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn g_star_action_examples() {
        let g = group("metacyclic:7:3:2");
        let (s, t) = (g.element_named("s").unwrap(), g.element_named("t").unwrap());
        let eta = lambda(&g, s).compose(&rho(&g, t));
        let n = certify_generated(&g, std::slice::from_ref(&eta)).unwrap();
        assert_eq!(g_star_action(&n, 0, &eta).unwrap(), eta);
        assert!(g_star_action(&n, t, &Perm::identity(21)).unwrap().is_identity());
        // λ(t) λ(s) ρ(t) λ(t)⁻¹ = λ(t s t⁻¹) ρ(t) = λ(s^2) ρ(t).
        let expected = lambda(&g, g.pow(s, 2)).compose(&rho(&g, t));
        assert_eq!(g_star_action(&n, t, &eta).unwrap(), expected);
        assert!(g_star_action(&n, t, &lambda(&g, t)).is_err());
    }

    #[test]
    fn opposite_examples() {
        let g = group("sym:3");
        assert_eq!(opposite(&lambda_subgroup(&g)), rho_subgroup(&g));
        let inv = enumerate_hgs(&g, None).unwrap();
        for n in &inv.structures {
            let opp = opposite(n);
            assert_eq!(opposite(&opp), *n);
            assert!(inv.position(&opp).is_some());
        }
    }

    #[test]
    fn small_inventories() {
        let c2 = group("cyclic:2");
        assert_eq!(enumerate_hgs(&c2, None).unwrap().len(), 1);
        assert_eq!(brute_force_inventory(&c2).unwrap().len(), 1);
        let c1 = group("cyclic:1");
        assert_eq!(enumerate_hgs(&c1, None).unwrap().len(), 1);

        let c4 = group("cyclic:4");
        let inv = enumerate_hgs(&c4, None).unwrap();
        assert!(inv.position(&lambda_subgroup(&c4)).is_some());
        let klein = GroupSpec::product(GroupSpec::Cyclic(2), GroupSpec::Cyclic(2));
        assert!(inv.structures.iter().any(|n| n.type_label() == Some(&klein)));
        assert_eq!(inv.canonical_set(), brute_force_inventory(&c4).unwrap().canonical_set());
        // S3: λ and ρ of type S3, three of cyclic type.
        let s3 = enumerate_hgs(&group("sym:3"), None).unwrap();
        let cyclic = s3.structures.iter().filter(|n| n.type_label() == Some(&GroupSpec::Cyclic(6)));
        assert_eq!((s3.len(), cyclic.count()), (5, 3));
    }

    #[test]
    fn unsupported_orders() {
        let g = group("cyclic:16");
        assert_eq!(enumerate_hgs(&g, None).unwrap_err(), Error::UnsupportedOrder(16));
        let inv = enumerate_hgs(&g, Some(&GroupSpec::Cyclic(16))).unwrap();
        assert!(!inv.complete);
        assert!(!inv.is_empty());
        assert!(enumerate_hgs(&g, Some(&GroupSpec::Cyclic(8))).is_err());
        assert!(matches!(brute_force_inventory(&group("cyclic:9")), Err(Error::OrderTooLarge { .. })));
    }
}
