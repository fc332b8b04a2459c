use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use hgslab::brace::{
    brace_automorphisms, brace_from_subgroup, g_prime, inverse_identity_check, is_two_sided, ybe_map, SkewBrace, YbeMap,
};
use hgslab::constructions::{
    abelian_maps, complemented_subgroups, fpf_check, hgs_from_abelian_map, hgs_from_fpf, induced_structures_for,
};
use hgslab::correspondence::{realizable_lattice, transport_check};
use hgslab::rho::{rho_conjugate, rho_orbit, rho_partition};
use hgslab::suite::{self, Status};
use hgslab::{build_group, enumerate_hgs, rho, FiniteGroup, GroupHom, GroupSpec, HgsInventory, RegularSubgroup, Result, Subgroup};
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{cycles, elapsed_line, names, perm_images, subgroup_names, table, Envelope, StructureView};
use crate::{input, BraceCommand, Cli, Command, ConstructCommand, HgsCommand, InventoryArgs, StructureArgs};

/// Exit code for a failed check.
const CHECK_FAILED: u8 = 3;

struct Output<T: Serialize> {
    schema: &'static str,
    group: Option<String>,
    complete: Option<bool>,
    result: T,
    text: String,
    code: u8,
}

impl<T: Serialize> Output<T> {
    fn new(schema: &'static str, group: Option<&GroupSpec>, result: T, text: String) -> Self {
        Output { schema, group: group.map(|g| g.to_string()), complete: None, result, text, code: 0 }
    }

    fn complete(mut self, complete: bool) -> Self {
        self.complete = Some(complete);
        self
    }

    fn code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }

    fn emit(self, cli: &Cli, echo: &str, start: Instant) -> Result<u8> {
        let elapsed = start.elapsed();
        if cli.json {
            let envelope = Envelope {
                schema: format!("hgslab.{}.v1", self.schema),
                version: env!("CARGO_PKG_VERSION"),
                command: echo,
                group: self.group,
                complete: self.complete,
                result: self.result,
                elapsed_ms: cli.timing.then_some(elapsed.as_millis()),
            };
            let text = serde_json::to_string_pretty(&envelope).map_err(|e| hgslab::Error::Invalid(e.to_string()))?;
            println!("{text}");
        } else {
            print!("{}", self.text);
            if cli.timing {
                print!("{}", elapsed_line(elapsed));
            }
        }
        Ok(self.code)
    }
}

fn group_of(spec: &GroupSpec) -> Result<Arc<FiniteGroup>> {
    Ok(Arc::new(build_group(spec)?))
}

fn inventory(args: &InventoryArgs) -> Result<(Arc<FiniteGroup>, HgsInventory)> {
    let g = group_of(&args.group)?;
    let inv = enumerate_hgs(&g, args.type_filter.as_ref())?;
    Ok((g, inv))
}

fn resolve(args: &StructureArgs) -> Result<(Arc<FiniteGroup>, RegularSubgroup, Option<usize>)> {
    let g = group_of(&args.inventory.group)?;
    let mut inv_cache = None;
    let n = input::structure(&g, &args.structure, || {
        let inv = enumerate_hgs(&g, args.inventory.type_filter.as_ref())?;
        inv_cache = Some(inv.clone());
        Ok(inv)
    })?;
    let index = inv_cache.and_then(|inv| inv.position(&n));
    Ok((g, n, index))
}

pub fn run(cli: &Cli, echo: &str) -> Result<u8> {
    let start = Instant::now();
    match &cli.command {
        Command::Group(args) => group(&args.group)?.emit(cli, echo, start),
        Command::Hgs(HgsCommand::Enumerate(args)) => enumerate(args)?.emit(cli, echo, start),
        Command::Hgs(HgsCommand::RhoOrbits(args)) => orbits(args)?.emit(cli, echo, start),
        Command::Brace(cmd) => brace(cmd, cli, echo, start),
        Command::Construct(ConstructCommand::Fpf(args)) => fpf(args)?.emit(cli, echo, start),
        Command::Construct(ConstructCommand::AbelianMaps(args)) => maps(args)?.emit(cli, echo, start),
        Command::Construct(ConstructCommand::Induced(args)) => induced(args)?.emit(cli, echo, start),
        Command::Correspondence(args) => correspondence(args)?.emit(cli, echo, start),
        Command::Verify(args) => verify(args.only.as_deref()).emit(cli, echo, start),
    }
}

#[derive(Serialize)]
struct GroupResult<'a> {
    #[serde(flatten)]
    export: hgslab::group::GroupExport<'a>,
    generators: Vec<String>,
    element_orders: &'a [usize],
    abelian: bool,
}

fn group(spec: &GroupSpec) -> Result<Output<serde_json::Value>> {
    let g = build_group(spec)?;
    let result = GroupResult {
        export: g.export(),
        generators: names(&g, g.generators()),
        element_orders: g.element_orders(),
        abelian: g.is_abelian(),
    };
    let mut text = format!(
        "group {spec}: order {}, generators {}{}\n",
        g.order(),
        result.generators.join(", "),
        if g.is_abelian() { ", abelian" } else { "" }
    );
    let rows: Vec<Vec<String>> =
        g.elements().map(|x| vec![x.to_string(), g.name(x).to_string(), g.element_order(x).to_string()]).collect();
    text.push_str(&table(&["index", "element", "order"], &rows));
    if g.order() <= 16 {
        text.push_str("\nCayley table (row · column):\n");
        let header: Vec<String> = std::iter::once(String::new()).chain(g.elements().map(|x| g.name(x).to_string())).collect();
        let rows: Vec<Vec<String>> = g
            .elements()
            .map(|a| std::iter::once(g.name(a).to_string()).chain(g.elements().map(|b| g.name(g.mul(a, b)).to_string())).collect())
            .collect();
        text.push_str(&table(&header.iter().map(String::as_str).collect::<Vec<_>>(), &rows));
    }
    let value = serde_json::to_value(&result).map_err(|e| hgslab::Error::Invalid(e.to_string()))?;
    Ok(Output::new("group", Some(spec), value, text))
}

#[derive(Serialize)]
struct InventoryResult {
    type_filter: Option<String>,
    count: usize,
    structures: Vec<StructureView>,
}

fn enumerate(args: &InventoryArgs) -> Result<Output<InventoryResult>> {
    let (_, inv) = inventory(args)?;
    let views: Vec<StructureView> = inv.structures.par_iter().enumerate().map(|(i, n)| StructureView::of(n, Some(i))).collect();
    let mut text = format!(
        "{} structure(s) on {}{}{}\n",
        views.len(),
        args.group,
        args.type_filter.as_ref().map(|t| format!(" of type {t}")).unwrap_or_default(),
        match (&args.type_filter, inv.complete) {
            (Some(_), _) => " (every structure of this type)",
            (None, true) => "",
            (None, false) => " (completeness not guaranteed)",
        }
    );
    let rows: Vec<Vec<String>> = views
        .iter()
        .map(|v| vec![v.index.unwrap_or_default().to_string(), v.canonical_hash.clone(), v.type_label.clone().unwrap_or_default(), v.generators_text()])
        .collect();
    text.push_str(&table(&["index", "hash", "type", "generators"], &rows));
    let result = InventoryResult { type_filter: args.type_filter.as_ref().map(|t| t.to_string()), count: views.len(), structures: views };
    Ok(Output::new("inventory", Some(&args.group), result, text).complete(inv.complete))
}

#[derive(Serialize)]
struct OrbitView {
    orbit: usize,
    size: usize,
    stabilizer_order: usize,
    stabilizer: Vec<String>,
    members: Vec<usize>,
    base: StructureView,
}

#[derive(Serialize)]
struct OrbitsResult {
    type_filter: Option<String>,
    structures: usize,
    orbits: Vec<OrbitView>,
}

fn orbits(args: &InventoryArgs) -> Result<Output<OrbitsResult>> {
    let (g, inv) = inventory(args)?;
    let views: Vec<OrbitView> = rho_partition(&inv)
        .iter()
        .enumerate()
        .map(|(i, orbit)| OrbitView {
            orbit: i,
            size: orbit.len(),
            stabilizer_order: orbit.stabilizer.order(),
            stabilizer: names(&g, orbit.stabilizer.elements()),
            members: orbit.members.iter().filter_map(|n| inv.position(n)).collect(),
            base: StructureView::of(orbit.least(), inv.position(orbit.least())),
        })
        .collect();
    let mut text = format!("{} structure(s) on {} in {} ρ-orbit(s)\n", inv.len(), args.group, views.len());
    let rows: Vec<Vec<String>> = views
        .iter()
        .map(|o| {
            vec![
                format!("o:{}", o.orbit),
                o.size.to_string(),
                o.stabilizer_order.to_string(),
                o.base.type_label.clone().unwrap_or_default(),
                o.members.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","),
                o.base.generators_text(),
            ]
        })
        .collect();
    text.push_str(&table(&["orbit", "size", "|stab|", "type", "members", "least member generators"], &rows));
    let result = OrbitsResult { type_filter: args.type_filter.as_ref().map(|t| t.to_string()), structures: inv.len(), orbits: views };
    Ok(Output::new("rho-orbits", Some(&args.group), result, text).complete(inv.complete))
}

fn render_square(g: &FiniteGroup, rows_of: impl Fn(usize, usize) -> usize) -> String {
    let header: Vec<String> = std::iter::once(String::new()).chain(g.elements().map(|x| g.name(x).to_string())).collect();
    let rows: Vec<Vec<String>> = g
        .elements()
        .map(|a| std::iter::once(g.name(a).to_string()).chain(g.elements().map(|b| g.name(rows_of(a, b)).to_string())).collect())
        .collect();
    table(&header.iter().map(String::as_str).collect::<Vec<_>>(), &rows)
}

#[derive(Serialize)]
struct BraceTables<'a> {
    structure: StructureView,
    size: usize,
    star: &'a [usize],
    circ: &'a [usize],
}

#[derive(Serialize)]
struct BraceCheck {
    structure: StructureView,
    axioms_hold: bool,
    two_sided: bool,
    rho_normalized: bool,
    inverse_identity: bool,
    orbit_size: usize,
}

#[derive(Serialize)]
struct BraceAut {
    structure: StructureView,
    count: usize,
    automorphisms: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct GPrime {
    structure: StructureView,
    order: usize,
    elements: Vec<String>,
    index: usize,
    orbit_size: usize,
    equals_stabilizer: bool,
}

#[derive(Serialize)]
struct Ybe {
    structure: StructureView,
    size: usize,
    bijective: bool,
    braid_relation: bool,
    /// `r(x, y)` for `x, y` in row-major order.
    table: Vec<(usize, usize)>,
}

fn brace(cmd: &BraceCommand, cli: &Cli, echo: &str, start: Instant) -> Result<u8> {
    let args = match cmd {
        BraceCommand::Extract(a) | BraceCommand::Check(a) | BraceCommand::Aut(a) | BraceCommand::Gprime(a) | BraceCommand::Ybe(a) => a,
    };
    let spec = &args.inventory.group;
    let (g, n, index) = resolve(args)?;
    let view = StructureView::of(&n, index);
    let b: SkewBrace = brace_from_subgroup(&n)?;
    let head = format!("structure {} on {spec}\n", view.canonical_hash);
    match cmd {
        BraceCommand::Extract(_) => {
            let text = format!(
                "{head}⋆ (the structure's group, transported to G):\n{}\n∘ (the group G):\n{}",
                render_square(&g, |x, y| b.star(x, y)),
                render_square(&g, |x, y| b.circ(x, y))
            );
            let result = BraceTables { structure: view, size: b.size(), star: b.star_table(), circ: b.circ_table() };
            Output::new("brace", Some(spec), result, text).emit(cli, echo, start)
        }
        BraceCommand::Check(_) => {
            let result = BraceCheck {
                structure: view,
                axioms_hold: b.axiom_violation().is_none(),
                two_sided: is_two_sided(&b),
                rho_normalized: n.is_rho_normalized(),
                inverse_identity: inverse_identity_check(&b),
                orbit_size: rho_orbit(&n).len(),
            };
            let text = format!(
                "{head}brace relation: {}\ntwo-sided: {}\nρ(G) normalises N: {}\ninverse identity: {}\nρ-orbit size: {}\n",
                yes(result.axioms_hold), yes(result.two_sided), yes(result.rho_normalized), yes(result.inverse_identity), result.orbit_size
            );
            let code = if result.axioms_hold && result.inverse_identity && result.two_sided == result.rho_normalized { 0 } else { CHECK_FAILED };
            Output::new("brace-check", Some(spec), result, text).code(code).emit(cli, echo, start)
        }
        BraceCommand::Aut(_) => {
            let auts = brace_automorphisms(&b)?;
            let images: Vec<Vec<usize>> = auts.iter().map(|a| a.images().to_vec()).collect();
            let mut text = format!("{head}{} brace automorphism(s), as images of the generators {}:\n", auts.len(), names(&g, g.generators()).join(", "));
            for a in &auts {
                text.push_str(&format!("  {}\n", names(&g, &g.generators().iter().map(|&x| a.apply(x)).collect::<Vec<_>>()).join(", ")));
            }
            let result = BraceAut { structure: view, count: auts.len(), automorphisms: images };
            Output::new("brace-aut", Some(spec), result, text).emit(cli, echo, start)
        }
        BraceCommand::Gprime(_) => {
            let gp: Subgroup = g_prime(&b)?;
            let orbit = rho_orbit(&n);
            let result = GPrime {
                structure: view,
                order: gp.order(),
                elements: names(&g, gp.elements()),
                index: g.order() / gp.order(),
                orbit_size: orbit.len(),
                equals_stabilizer: gp == orbit.stabilizer,
            };
            let text = format!(
                "{head}G′ = {} (order {}, index {})\nρ-orbit size {}; G′ equals the ρ-stabiliser: {}\n",
                subgroup_names(&g, &gp), result.order, result.index, result.orbit_size, yes(result.equals_stabilizer)
            );
            let code = if result.equals_stabilizer && result.index == result.orbit_size { 0 } else { CHECK_FAILED };
            Output::new("brace-gprime", Some(spec), result, text).code(code).emit(cli, echo, start)
        }
        BraceCommand::Ybe(_) => {
            let r: YbeMap = ybe_map(&b)?;
            let size = r.size();
            let pairs: Vec<(usize, usize)> = (0..size).flat_map(|x| (0..size).map(move |y| (x, y))).map(|(x, y)| r.apply(x, y)).collect();
            let result = Ybe { structure: view, size, bijective: r.is_bijective(), braid_relation: r.braid_violation().is_none(), table: pairs };
            let text = format!(
                "{head}r(x, y) = (x⁻¹ ⋆ (x ∘ y), (x⁻¹ ⋆ (x ∘ y))‾ ∘ x ∘ y) on {size} elements\nbijective: {}\nbraid relation: {}\n",
                yes(result.bijective), yes(result.braid_relation)
            );
            let code = if result.bijective && result.braid_relation { 0 } else { CHECK_FAILED };
            Output::new("brace-ybe", Some(spec), result, text).code(code).emit(cli, echo, start)
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn hom_from_generators(domain: &FiniteGroup, codomain: &FiniteGroup, list: &str, label: &str) -> Result<GroupHom> {
    let images = input::elements(codomain, list)?;
    GroupHom::from_generator_images(domain, codomain, &images).ok_or_else(|| {
        hgslab::Error::NotHomomorphism(format!(
            "{label}: images {list} of generators {} do not extend to a homomorphism",
            names(domain, domain.generators()).join(", ")
        ))
    })
}

#[derive(Serialize)]
struct FpfResult {
    target: String,
    f1: Vec<usize>,
    f2: Vec<usize>,
    fixed_point_free: bool,
    structure: StructureView,
}

fn fpf(args: &crate::FpfArgs) -> Result<Output<FpfResult>> {
    let g = group_of(&args.group)?;
    let m = group_of(&args.target)?;
    let f1 = hom_from_generators(&g, &m, &args.f1, "f1")?;
    let f2 = hom_from_generators(&g, &m, &args.f2, "f2")?;
    let n = hgs_from_fpf(&g, &m, &f1, &f2)?;
    let view = StructureView::of(&n, None);
    let text = format!(
        "fixed-point-free pair into {}: {}\nstructure {} of order {}\ngenerators: {}\n",
        args.target,
        yes(fpf_check(&f1, &f2)),
        view.canonical_hash,
        n.order(),
        view.generators_text()
    );
    let result = FpfResult { target: args.target.to_string(), f1: f1.images().to_vec(), f2: f2.images().to_vec(), fixed_point_free: fpf_check(&f1, &f2), structure: view };
    Ok(Output::new("construct-fpf", Some(&args.group), result, text))
}

#[derive(Serialize)]
struct MapView {
    /// Images of every element, by index.
    images: Vec<usize>,
    generator_images: Vec<String>,
    structure: String,
}

#[derive(Serialize)]
struct MapsResult {
    count: usize,
    distinct_structures: usize,
    maps: Vec<MapView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_sizes: Option<Vec<usize>>,
}

fn maps(args: &crate::AbelianMapsArgs) -> Result<Output<MapsResult>> {
    let g = group_of(&args.group)?;
    let psis = abelian_maps(&g);
    let structures: Vec<RegularSubgroup> = psis.par_iter().map(|psi| hgs_from_abelian_map(&g, psi)).collect::<Result<_>>()?;
    let views: Vec<MapView> = psis
        .iter()
        .zip(&structures)
        .map(|(psi, n)| MapView {
            images: psi.hom().images().to_vec(),
            generator_images: names(&g, &g.generators().iter().map(|&x| psi.apply(x)).collect::<Vec<_>>()),
            structure: n.canonical_hash(),
        })
        .collect();
    let distinct: std::collections::BTreeSet<&RegularSubgroup> = structures.iter().collect();
    let orbit_sizes = args.orbits.then(|| {
        let mut remaining: std::collections::BTreeSet<RegularSubgroup> = distinct.iter().map(|n| (*n).clone()).collect();
        let mut sizes = Vec::new();
        while let Some(n) = remaining.pop_first() {
            let orbit = rho_orbit(&n);
            for m in &orbit.members {
                remaining.remove(m);
            }
            sizes.push(orbit.len());
        }
        sizes.sort();
        sizes
    });
    let mut text = format!("{} abelian map(s) on {}, {} distinct structure(s)\n", views.len(), args.group, distinct.len());
    let gens = names(&g, g.generators());
    let header = format!("ψ({})", gens.join(", "));
    let rows: Vec<Vec<String>> = views.iter().map(|v| vec![v.generator_images.join(", "), v.structure.clone()]).collect();
    text.push_str(&table(&[&header, "structure"], &rows));
    if let Some(sizes) = &orbit_sizes {
        text.push_str(&format!("ρ-orbit sizes: {sizes:?}\n"));
    }
    let result = MapsResult { count: views.len(), distinct_structures: distinct.len(), maps: views, orbit_sizes };
    Ok(Output::new("construct-abelian-maps", Some(&args.group), result, text))
}

#[derive(Serialize)]
struct InducedEntry {
    t: Vec<String>,
    complement: Vec<String>,
    structures: Vec<StructureView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn induced(args: &crate::InducedArgs) -> Result<Output<Vec<InducedEntry>>> {
    let g = group_of(&args.group)?;
    let pairs: Vec<(Subgroup, Option<Subgroup>)> = match &args.t {
        Some(list) => {
            let t = Subgroup::closure(&g, &input::elements(&g, list)?);
            let s = hgslab::group::normal_complement(&g, &t).ok_or(hgslab::Error::NoNormalComplement)?;
            vec![(t, Some(s))]
        }
        None => complemented_subgroups(&g).into_iter().map(|(t, s)| (t, Some(s))).collect(),
    };
    let single = args.t.is_some();
    let entries: Vec<InducedEntry> = pairs
        .par_iter()
        .map(|(t, s)| {
            let (structures, error) = match induced_structures_for(&g, t) {
                Ok(list) => (list.iter().map(|n| StructureView::of(n, None)).collect(), None),
                Err(e) => (Vec::new(), Some(e.to_string())),
            };
            InducedEntry {
                t: names(&g, t.elements()),
                complement: s.as_ref().map(|s| names(&g, s.elements())).unwrap_or_default(),
                structures,
                error,
            }
        })
        .collect();
    if single {
        if let Some(e) = &entries[0].error {
            return Err(hgslab::Error::Invalid(e.clone()));
        }
    }
    let mut text = String::new();
    for e in &entries {
        text.push_str(&format!("T = {{{}}}, complement {{{}}}: ", e.t.join(", "), e.complement.join(", ")));
        match &e.error {
            Some(err) => text.push_str(&format!("skipped ({err})\n")),
            None => {
                text.push_str(&format!("{} induced structure(s)\n", e.structures.len()));
                for v in &e.structures {
                    text.push_str(&format!("  {}  {}\n", v.canonical_hash, v.generators_text()));
                }
            }
        }
    }
    Ok(Output::new("construct-induced", Some(&args.group), entries, text))
}

#[derive(Serialize)]
struct LatticeEntry {
    p_order: usize,
    p_generators: Vec<Vec<usize>>,
    u: Vec<String>,
}

#[derive(Serialize)]
struct TransportPair {
    u: Vec<String>,
    conjugate: Vec<String>,
}

#[derive(Serialize)]
struct TransportView {
    element: String,
    conjugate_structure: String,
    holds: bool,
    pairs: Vec<TransportPair>,
}

#[derive(Serialize)]
struct CorrespondenceResult {
    structure: StructureView,
    entries: Vec<LatticeEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transport: Option<TransportView>,
}

fn correspondence(args: &crate::CorrespondenceArgs) -> Result<Output<CorrespondenceResult>> {
    let spec = &args.structure.inventory.group;
    let (g, n, index) = resolve(&args.structure)?;
    let lattice = realizable_lattice(&n)?;
    let view = StructureView::of(&n, index);
    let entries: Vec<LatticeEntry> = lattice
        .entries
        .iter()
        .map(|(p, u)| LatticeEntry {
            p_order: p.order(),
            p_generators: p.generators().iter().map(perm_images).collect(),
            u: names(&g, u.elements()),
        })
        .collect();
    let mut text = format!("structure {} on {spec}: {} G-stable subgroup(s)\n", view.canonical_hash, entries.len());
    let rows: Vec<Vec<String>> = lattice
        .entries
        .iter()
        .map(|(p, u)| {
            vec![
                p.order().to_string(),
                p.generators().iter().map(|x| cycles(x.images())).collect::<Vec<_>>().join(", "),
                subgroup_names(&g, u),
            ]
        })
        .collect();
    text.push_str(&table(&["|P|", "P generators", "realised U"], &rows));
    let mut code = 0;
    let transport = match &args.transport {
        None => None,
        Some(token) => {
            let x = input::element(&g, token)?;
            let holds = transport_check(&n, x)?;
            let moved = rho_conjugate(&n, x);
            let r = rho(&g, x);
            let after = realizable_lattice(&moved)?;
            let pairs: Vec<TransportPair> = lattice
                .entries
                .iter()
                .map(|(p, u)| {
                    let target = after.fixed_of(&p.conjugate_by(&r)).cloned().unwrap_or_else(Subgroup::trivial);
                    TransportPair { u: names(&g, u.elements()), conjugate: names(&g, target.elements()) }
                })
                .collect();
            text.push_str(&format!("\ntransport by {} (U ↦ gUg⁻¹ on the lattice of N_g): {}\n", g.name(x), yes(holds)));
            let rows: Vec<Vec<String>> = pairs.iter().map(|p| vec![format!("{{{}}}", p.u.join(", ")), format!("{{{}}}", p.conjugate.join(", "))]).collect();
            text.push_str(&table(&["U", "realised by ρ(g)Pρ(g)⁻¹"], &rows));
            if !holds {
                code = CHECK_FAILED;
            }
            Some(TransportView { element: g.name(x).to_string(), conjugate_structure: moved.canonical_hash(), holds, pairs })
        }
    };
    let result = CorrespondenceResult { structure: view, entries, transport };
    Ok(Output::new("correspondence", Some(spec), result, text).code(code))
}

#[derive(Serialize)]
struct VerifyResult {
    passed: usize,
    failed: usize,
    discrepancies: usize,
    checks: Vec<suite::CheckResult>,
}

fn verify(only: Option<&str>) -> Output<VerifyResult> {
    let results = suite::run(only);
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let (passed, failed, discrepancies) = (count(Status::Pass), count(Status::Fail), count(Status::Discrepancy));
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Discrepancy => "discrepancy",
            };
            vec![status.to_string(), r.id.to_string(), r.description.to_string(), r.detail.clone()]
        })
        .collect();
    let mut by_family: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &results {
        *by_family.entry(r.family).or_default() += 1;
    }
    let mut text = table(&["status", "check", "statement", "detail"], &rows);
    text.push_str(&format!(
        "{passed} passed, {failed} failed, {discrepancies} discrepancies across {} families\n",
        by_family.len()
    ));
    let code = if failed > 0 { CHECK_FAILED } else { 0 };
    Output::new("verify", None, VerifyResult { passed, failed, discrepancies, checks: results }, text).code(code)
}
