use std::collections::HashMap;

use itertools::Itertools;

use super::{ElementId, FiniteGroup, GroupSpec};
use crate::error::Result;

/// Builds the Cayley table of a catalog group.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    spec.validate()?;
    let (order, table, names) = tables(spec);
    Ok(FiniteGroup::assemble(order, table, names, Some(spec.clone())))
}

type Tables = (usize, Vec<ElementId>, Vec<String>);

fn tables(spec: &GroupSpec) -> Tables {
    match spec {
        GroupSpec::Cyclic(n) => cyclic(*n),
        GroupSpec::Dihedral(n) => dihedral(*n),
        GroupSpec::Metacyclic { p, q, d } => metacyclic(*p, *q, *d),
        GroupSpec::Sym(n) => permutations(*n, false),
        GroupSpec::Alt(n) => permutations(*n, true),
        GroupSpec::Quaternion => dicyclic(8),
        GroupSpec::Dicyclic(n) => dicyclic(*n),
        GroupSpec::ElementaryAbelian { p, k } => elementary_abelian(*p, *k),
        GroupSpec::Product(a, b) => product(tables(a), tables(b)),
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn word(parts: &[String]) -> String {
    let w: String = parts.concat();
    if w.is_empty() {
        "e".to_string()
    } else {
        w
    }
}

fn cyclic(n: usize) -> Tables {
    let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    let names = (0..n).map(|k| word(&[power_name("a", k)])).collect();
    (n, table, names)
}

/// `r^i s^j` at index `2i + j`; `(r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j + l)`.
fn dihedral(n: usize) -> Tables {
    let order = 2 * n;
    let mut table = vec![0; order * order];
    for (i, j, k, l) in itertools::iproduct!(0..n, 0..2, 0..n, 0..2) {
        let exp = if j == 0 { i + k } else { i + n - k };
        table[(2 * i + j) * order + 2 * k + l] = 2 * (exp % n) + (j + l) % 2;
    }
    let names = (0..order)
        .map(|x| word(&[power_name("r", x / 2), power_name("s", x % 2)]))
        .collect();
    (order, table, names)
}

/// `s^i t^j` at index `q i + j`; `t^j s^k = s^(d^j k) t^j`.
fn metacyclic(p: usize, q: usize, d: usize) -> Tables {
    let order = p * q;
    let d_pow: Vec<usize> = (0..q).scan(1, |x, _| {
        let cur = *x;
        *x = *x * d % p;
        Some(cur)
    })
    .collect();
    let mut table = vec![0; order * order];
    for (i, j, k, l) in itertools::iproduct!(0..p, 0..q, 0..p, 0..q) {
        let s_exp = (i + d_pow[j] * k) % p;
        table[(q * i + j) * order + q * k + l] = q * s_exp + (j + l) % q;
    }
    let names = (0..order)
        .map(|x| word(&[power_name("s", x / q), power_name("t", x % q)]))
        .collect();
    (order, table, names)
}

/// `a^i x^j` at index `2i + j` with `a` of order `n/2`, `x^2 = a^(n/4)`,
/// `x a x^-1 = a^-1`.
fn dicyclic(n: usize) -> Tables {
    let m = n / 2;
    let half = n / 4;
    let mut table = vec![0; n * n];
    for (i, j, k, l) in itertools::iproduct!(0..m, 0..2, 0..m, 0..2) {
        let mut exp = if j == 0 { i + k } else { i + m - k };
        if j == 1 && l == 1 {
            exp += half;
        }
        table[(2 * i + j) * n + 2 * k + l] = 2 * (exp % m) + (j + l) % 2;
    }
    let names = (0..n)
        .map(|x| word(&[power_name("a", x / 2), power_name("x", x % 2)]))
        .collect();
    (n, table, names)
}

fn elementary_abelian(p: usize, k: u32) -> Tables {
    let order = p.pow(k);
    let digits = |mut x: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let mut table = vec![0; order * order];
    for a in 0..order {
        let da = digits(a);
        for b in 0..order {
            let db = digits(b);
            table[a * order + b] = da
                .iter()
                .zip(&db)
                .rev()
                .fold(0, |acc, (x, y)| acc * p + (x + y) % p);
        }
    }
    let names = (0..order)
        .map(|a| {
            if a == 0 {
                "e".to_string()
            } else {
                format!("({})", digits(a).iter().join(","))
            }
        })
        .collect();
    (order, table, names)
}

fn is_even(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

/// Cycle notation on the points `1..=n`.
fn cycle_name(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x + 1);
            x = perm[x];
        }
        out.push_str(&format!("({})", cycle.iter().join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// Symmetric (or alternating) group on `n` points; elements sorted
/// lexicographically by image sequence; `(a b)(x) = a(b(x))`.
fn permutations(n: usize, even_only: bool) -> Tables {
    let elements: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .filter(|p| !even_only || is_even(p))
        .collect();
    let index: HashMap<&[usize], usize> =
        elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let order = elements.len();
    let mut table = vec![0; order * order];
    let mut buf = vec![0; n];
    for (a, pa) in elements.iter().enumerate() {
        for (b, pb) in elements.iter().enumerate() {
            for x in 0..n {
                buf[x] = pa[pb[x]];
            }
            table[a * order + b] = index[buf.as_slice()];
        }
    }
    let names = elements.iter().map(|p| cycle_name(p)).collect();
    (order, table, names)
}

fn product((na, ta, names_a): Tables, (nb, tb, names_b): Tables) -> Tables {
    let order = na * nb;
    let mut table = vec![0; order * order];
    for (a1, b1, a2, b2) in itertools::iproduct!(0..na, 0..nb, 0..na, 0..nb) {
        table[(a1 * nb + b1) * order + a2 * nb + b2] = ta[a1 * na + a2] * nb + tb[b1 * nb + b2];
    }
    let names = itertools::iproduct!(0..na, 0..nb)
        .map(|(a, b)| {
            if a == 0 && b == 0 {
                "e".to_string()
            } else {
                format!("({},{})", names_a[a], names_b[b])
            }
        })
        .collect();
    (order, table, names)
}
