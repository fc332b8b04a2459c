use std::fmt::Write as _;
use std::time::Duration;

use hgslab::{FiniteGroup, Perm, RegularSubgroup, Subgroup};
use serde::Serialize;

/// Top-level JSON document. Field order is fixed and every list inside is
/// canonically ordered, so identical commands give identical bytes.
#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema: String,
    pub version: &'static str,
    pub command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Serialize, Clone)]
pub struct StructureView {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub canonical_hash: String,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_label: Option<String>,
    pub generators: Vec<Vec<usize>>,
}

impl StructureView {
    pub fn of(n: &RegularSubgroup, index: Option<usize>) -> Self {
        StructureView {
            index,
            canonical_hash: n.canonical_hash(),
            type_label: n.type_label().map(|t| t.to_string()),
            generators: n.canonical_generators().iter().map(|p| p.images().to_vec()).collect(),
        }
    }

    pub fn generators_text(&self) -> String {
        self.generators.iter().map(|g| cycles(g)).collect::<Vec<_>>().join(", ")
    }
}

/// Cycle notation, fixed points omitted.
pub fn cycles(images: &[usize]) -> String {
    let mut seen = vec![false; images.len()];
    let mut out = String::new();
    for start in 0..images.len() {
        if seen[start] || images[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = images[x];
        }
        let _ = write!(out, "({})", cycle.join(" "));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

pub fn perm_images(p: &Perm) -> Vec<usize> {
    p.images().to_vec()
}

pub fn names(group: &FiniteGroup, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&x| group.name(x).to_string()).collect()
}

pub fn subgroup_names(group: &FiniteGroup, h: &Subgroup) -> String {
    format!("{{{}}}", names(group, h.elements()).join(", "))
}

/// Left-aligned text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell}{}  ", " ".repeat(w - cell.chars().count()));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn elapsed_line(elapsed: Duration) -> String {
    format!("elapsed: {} ms\n", elapsed.as_millis())
}
