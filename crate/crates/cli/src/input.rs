use std::sync::Arc;

use hgslab::hgs::{certify_generated, RegularSubgroup};
use hgslab::rho::rho_partition;
use hgslab::{ElementId, Error, FiniteGroup, GroupSpec, HgsInventory, Perm, Result};

/// Parses and validates a group spec.
pub fn parse_spec(text: &str) -> std::result::Result<GroupSpec, String> {
    let spec: GroupSpec = text.parse().map_err(|e: Error| e.to_string())?;
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

/// Sizes the worker pool from `HGSLAB_THREADS` when set.
pub fn configure_threads() -> std::result::Result<(), String> {
    let Ok(value) = std::env::var("HGSLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("HGSLAB_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

/// An element given by name (`s^2t`) or index.
pub fn element(group: &FiniteGroup, token: &str) -> Result<ElementId> {
    let token = token.trim();
    if let Some(x) = group.element_named(token) {
        return Ok(x);
    }
    match token.parse::<usize>() {
        Ok(x) if x < group.order() => Ok(x),
        _ => Err(Error::Invalid(format!("`{token}` is not an element of the group"))),
    }
}

/// A comma-separated list of elements.
pub fn elements(group: &FiniteGroup, list: &str) -> Result<Vec<ElementId>> {
    list.split(',').filter(|t| !t.trim().is_empty()).map(|t| element(group, t)).collect()
}

/// Resolves a structure reference against an inventory (built lazily).
pub fn structure(
    group: &Arc<FiniteGroup>,
    reference: &str,
    inventory: impl FnOnce() -> Result<HgsInventory>,
) -> Result<RegularSubgroup> {
    let reference = reference.trim();
    if reference.starts_with('[') {
        let images: Vec<Vec<usize>> = serde_json::from_str(reference)
            .map_err(|e| Error::Invalid(format!("structure generators: {e}")))?;
        let gens = images.into_iter().map(Perm::new).collect::<Result<Vec<_>>>()?;
        return certify_generated(group, &gens);
    }
    let inv = inventory()?;
    let missing = || Error::Invalid(format!("no structure matches `{reference}`"));
    if let Some(i) = reference.strip_prefix("i:") {
        let i: usize = i.parse().map_err(|_| missing())?;
        return inv.structures.get(i).cloned().ok_or_else(missing);
    }
    if let Some(o) = reference.strip_prefix("o:") {
        let o: usize = o.parse().map_err(|_| missing())?;
        return rho_partition(&inv).get(o).map(|orbit| orbit.least().clone()).ok_or_else(missing);
    }
    let matches: Vec<&RegularSubgroup> =
        inv.structures.iter().filter(|n| n.canonical_hash().starts_with(reference)).collect();
    match matches.as_slice() {
        [n] => Ok((*n).clone()),
        [] => Err(missing()),
        _ => Err(Error::Invalid(format!("hash prefix `{reference}` is ambiguous"))),
    }
}
