use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group order the table-based constructors accept.
pub const MAX_ORDER: usize = 2048;

/// Descriptor of a group in the constructor catalog.
///
/// The text form is `family:params`, e.g. `cyclic:6`, `dihedral:4` (order 8),
/// `metacyclic:7:3:2`, `sym:5`, `product:cyclic:2,cyclic:2`. Nested products
/// are parenthesised: `product:(product:cyclic:2,cyclic:2),cyclic:2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of order `2n`, generated by `r` (order `n`) and `s`.
    Dihedral(usize),
    /// `<s, t | s^p = t^q = e, t s t^-1 = s^d>`.
    Metacyclic { p: usize, q: usize, d: usize },
    Sym(usize),
    Alt(usize),
    /// The quaternion group of order 8.
    Quaternion,
    /// Dicyclic group; the parameter is the group order (a multiple of 4, at least 8).
    Dicyclic(usize),
    ElementaryAbelian { p: usize, k: u32 },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Multiplicative order of `d` modulo `p`, if `d` is a unit.
pub(crate) fn multiplicative_order(d: usize, p: usize) -> Option<usize> {
    if p < 2 || gcd(d % p, p) != 1 {
        return None;
    }
    let mut x = d % p;
    let mut k = 1;
    while x != 1 {
        x = x * d % p;
        k += 1;
    }
    Some(k)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }

    /// Group order, or `None` if it overflows.
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::Metacyclic { p, q, .. } => p.checked_mul(*q),
            GroupSpec::Sym(n) => factorial(*n),
            GroupSpec::Alt(n) => factorial(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            GroupSpec::Quaternion => Some(8),
            GroupSpec::Dicyclic(n) => Some(*n),
            GroupSpec::ElementaryAbelian { p, k } => p.checked_pow(*k),
            GroupSpec::Product(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }

    /// Checks the parameter constraints of each family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            GroupSpec::Cyclic(n) if *n == 0 => return bad("cyclic order must be positive".into()),
            GroupSpec::Dihedral(n) if *n == 0 => {
                return bad("dihedral parameter must be positive".into())
            }
            GroupSpec::Metacyclic { p, q, d } => {
                if !is_prime(*p) || !is_prime(*q) {
                    return bad(format!("metacyclic:{p}:{q}:{d}: p and q must be prime"));
                }
                match multiplicative_order(*d, *p) {
                    Some(k) if k == *q => {}
                    Some(k) => {
                        return bad(format!(
                            "metacyclic:{p}:{q}:{d}: {d} has multiplicative order {k} mod {p}, not {q}"
                        ))
                    }
                    None => return bad(format!("metacyclic:{p}:{q}:{d}: {d} is not a unit mod {p}")),
                }
            }
            GroupSpec::Sym(n) | GroupSpec::Alt(n) if *n == 0 => {
                return bad("degree must be positive".into())
            }
            GroupSpec::Dicyclic(n) if *n % 4 != 0 || *n < 8 => {
                return bad(format!("dicyclic:{n}: order must be a multiple of 4 and at least 8"))
            }
            GroupSpec::ElementaryAbelian { p, k } if !is_prime(*p) || *k == 0 => {
                return bad(format!("elemab:{p}:{k}: p must be prime and k positive"))
            }
            GroupSpec::Product(a, b) => {
                a.validate()?;
                b.validate()?;
            }
            _ => {}
        }
        match self.order() {
            Some(n) if n <= MAX_ORDER => Ok(()),
            _ => bad(format!("{self}: order exceeds {MAX_ORDER}")),
        }
    }

    /// Family keyword of the text form.
    pub fn family(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::Dihedral(_) => "dihedral",
            GroupSpec::Metacyclic { .. } => "metacyclic",
            GroupSpec::Sym(_) => "sym",
            GroupSpec::Alt(_) => "alt",
            GroupSpec::Quaternion => "quaternion",
            GroupSpec::Dicyclic(_) => "dicyclic",
            GroupSpec::ElementaryAbelian { .. } => "elemab",
            GroupSpec::Product(..) => "product",
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Metacyclic { p, q, d } => write!(f, "metacyclic:{p}:{q}:{d}"),
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::Quaternion => write!(f, "quaternion:8"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "elemab:{p}:{k}"),
            GroupSpec::Product(a, b) => {
                let wrap = |s: &GroupSpec| match s {
                    GroupSpec::Product(..) => format!("({s})"),
                    _ => s.to_string(),
                };
                write!(f, "product:{},{}", wrap(a), wrap(b))
            }
        }
    }
}

fn split_top_level_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = strip_parens(text);
        let bad = || Error::InvalidSpec(format!("cannot parse group spec `{text}`"));
        let (family, rest) = text.split_once(':').unwrap_or((text, ""));
        if family == "product" {
            let (a, b) = split_top_level_comma(rest).ok_or_else(bad)?;
            let spec = GroupSpec::product(strip_parens(a).parse()?, strip_parens(b).parse()?);
            spec.validate()?;
            return Ok(spec);
        }
        let nums: Vec<usize> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(':')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        let spec = match (family, nums.as_slice()) {
            ("cyclic", [n]) => GroupSpec::Cyclic(*n),
            ("dihedral", [n]) => GroupSpec::Dihedral(*n),
            ("metacyclic", [p, q, d]) => GroupSpec::Metacyclic { p: *p, q: *q, d: *d },
            ("sym", [n]) => GroupSpec::Sym(*n),
            ("alt", [n]) => GroupSpec::Alt(*n),
            ("quaternion", []) | ("quaternion", [8]) => GroupSpec::Quaternion,
            ("quaternion", [n]) => {
                return Err(Error::InvalidSpec(format!("quaternion:{n}: only order 8 is supported")))
            }
            ("dicyclic", [n]) => GroupSpec::Dicyclic(*n),
            ("elemab", [p, k]) => GroupSpec::ElementaryAbelian {
                p: *p,
                k: u32::try_from(*k).map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl From<GroupSpec> for String {
    fn from(spec: GroupSpec) -> String {
        spec.to_string()
    }
}

impl TryFrom<String> for GroupSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cli_forms() {
        assert_eq!("cyclic:6".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(6));
        assert_eq!("dihedral:4".parse::<GroupSpec>().unwrap().order(), Some(8));
        assert_eq!(
            "metacyclic:7:3:2".parse::<GroupSpec>().unwrap(),
            GroupSpec::Metacyclic { p: 7, q: 3, d: 2 }
        );
        let p: GroupSpec = "product:cyclic:2,cyclic:2".parse().unwrap();
        assert_eq!(p, GroupSpec::product(GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)));
        let nested: GroupSpec = "product:(product:cyclic:2,cyclic:2),cyclic:3".parse().unwrap();
        assert_eq!(nested.order(), Some(12));
        assert_eq!(nested.to_string().parse::<GroupSpec>().unwrap(), nested);
    }

    #[test]
    fn metacyclic_needs_exact_order() {
        // 3 has order 6 modulo 7: 3, 2, 6, 4, 5, 1.
        let err = "metacyclic:7:3:3".parse::<GroupSpec>().unwrap_err();
        assert!(matches!(err, Error::InvalidSpec(ref m) if m.contains("order 6")));
        assert!("metacyclic:7:3:4".parse::<GroupSpec>().is_ok());
        assert!("metacyclic:6:3:2".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn rejects_bad_dicyclic_and_garbage() {
        assert!("dicyclic:12".parse::<GroupSpec>().is_ok());
        assert!("dicyclic:7".parse::<GroupSpec>().is_err());
        assert!("dicyclic:10".parse::<GroupSpec>().is_err());
        assert!("cyclic".parse::<GroupSpec>().is_err());
        assert!("torus:3".parse::<GroupSpec>().is_err());
        assert!("sym:9".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(3, 7), Some(6));
        assert_eq!(multiplicative_order(7, 7), None);
    }
}
