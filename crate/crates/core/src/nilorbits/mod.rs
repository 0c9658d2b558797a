//! Weighted Dynkin diagrams of complex nilpotent orbits.
//!
//! Classical types go through partitions; exceptional types read the frozen
//! tables in [`exceptional`], which are reproduced independently by
//! [`balacarter::bala_carter_orbits`] in the test suite.

pub mod balacarter;
mod exceptional;

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootcore::{Family, SimpleType, WeightedDiagram};

/// A partition, stored as a weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?}: parts must be positive")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Builds a partition from `(part, multiplicity)` pairs, skipping zero
    /// multiplicities.
    pub fn from_powers(powers: &[(usize, usize)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(p, m) in powers {
            parts.extend(std::iter::repeat_n(p, m));
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// `(part, multiplicity)` pairs in decreasing order of the part.
    pub fn powers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All parts even, each with even multiplicity.
    pub fn is_very_even(&self) -> bool {
        self.powers().iter().all(|&(p, m)| p % 2 == 0 && m % 2 == 0)
    }

    /// All partitions of `n`, in reverse-lexicographic order (`[n]` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .powers()
            .into_iter()
            .map(|(p, m)| {
                if m == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{m}")
                }
            })
            .collect();
        write!(f, "[{}]", items.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1^2]`, `3,1,1` and `[3^2,1^4]` style input.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut powers = Vec::new();
        for item in body.split(',') {
            let item = item.trim();
            let (p, m) = match item.split_once('^') {
                Some((p, m)) => (p, m),
                None => (item, "1"),
            };
            let p: usize = p.trim().parse().map_err(|_| bad())?;
            let m: usize = m.trim().parse().map_err(|_| bad())?;
            powers.push((p, m));
        }
        Partition::from_powers(&powers)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VeryEvenTag {
    I,
    II,
}

impl fmt::Display for VeryEvenTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VeryEvenTag::I => "I",
            VeryEvenTag::II => "II",
        })
    }
}

/// The name of a complex nilpotent orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrbitLabel {
    Classical {
        partition: Partition,
        tag: Option<VeryEvenTag>,
    },
    Exceptional(String),
}

impl OrbitLabel {
    pub fn classical(partition: Partition) -> Self {
        OrbitLabel::Classical {
            partition,
            tag: None,
        }
    }

    pub fn very_even(partition: Partition, tag: VeryEvenTag) -> Self {
        OrbitLabel::Classical {
            partition,
            tag: Some(tag),
        }
    }

    pub fn exceptional(name: &str) -> Self {
        OrbitLabel::Exceptional(name.to_string())
    }

    /// Whether two labels name the same orbit, ignoring cosmetic differences
    /// in Bala–Carter spelling (`3A_1''` vs `(3A_1)''`, `~A_2` vs `Ã_2`).
    pub fn same_orbit(&self, other: &OrbitLabel) -> bool {
        match (self, other) {
            (OrbitLabel::Exceptional(a), OrbitLabel::Exceptional(b)) => {
                normalize_bala_carter(a) == normalize_bala_carter(b)
            }
            _ => self == other,
        }
    }
}

/// Lookup key for a Bala–Carter name.
pub fn normalize_bala_carter(name: &str) -> String {
    let mut s: String = name
        .chars()
        .filter(|c| !matches!(c, '_' | ' ' | '(' | ')' | '{' | '}' | '$'))
        .collect();
    for (from, to) in [
        ("\\tildeA", "~A"),
        ("\\tilde A", "~A"),
        ("Ã", "~A"),
        ("A~", "~A"),
        ("\u{2032}\u{2032}", "''"),
        ("\u{2033}", "''"),
        ("\u{2032}", "'"),
    ] {
        s = s.replace(from, to);
    }
    s
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Classical {
                partition,
                tag: None,
            } => write!(f, "{partition}"),
            OrbitLabel::Classical {
                partition,
                tag: Some(t),
            } => write!(f, "{partition}_{t}"),
            OrbitLabel::Exceptional(name) => f.write_str(name),
        }
    }
}

impl FromStr for OrbitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            let (body, tag) = match s.rsplit_once("]_") {
                Some((body, "I")) => (format!("{body}]"), Some(VeryEvenTag::I)),
                Some((body, "II")) => (format!("{body}]"), Some(VeryEvenTag::II)),
                Some(_) => return Err(Error::Parse(s.to_string())),
                None => (s.to_string(), None),
            };
            Ok(OrbitLabel::Classical {
                partition: body.parse()?,
                tag,
            })
        } else if s.is_empty() {
            Err(Error::Parse(s.to_string()))
        } else {
            Ok(OrbitLabel::Exceptional(s.to_string()))
        }
    }
}

impl Serialize for OrbitLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A weighted Dynkin diagram together with the orbit it characterizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDiagram {
    pub label: OrbitLabel,
    pub diagram: WeightedDiagram,
}

impl OrbitDiagram {
    pub fn weights(&self) -> Vec<i64> {
        self.diagram
            .integer_weights()
            .expect("characteristics have integer weights")
    }
}

impl Serialize for OrbitDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OrbitDiagram", 2)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("weights", &self.diagram)?;
        st.end()
    }
}

/// Size of the defining representation.
fn natural_dimension(t: SimpleType) -> Result<usize> {
    let l = t.rank();
    match t.family() {
        Family::A => Ok(l + 1),
        Family::B => Ok(2 * l + 1),
        Family::C | Family::D => Ok(2 * l),
        _ => Err(Error::NotClassical(t)),
    }
}

fn parity_violation(t: SimpleType, p: &Partition) -> Option<String> {
    let bad_parity = match t.family() {
        Family::B | Family::D => 0,
        Family::C => 1,
        _ => return None,
    };
    p.powers()
        .into_iter()
        .find(|&(part, m)| part % 2 == bad_parity && m % 2 == 1)
        .map(|(part, m)| format!("part {part} has odd multiplicity {m}"))
}

/// Partitions labelling the nilpotent orbits of a classical type, in
/// reverse-lexicographic order.
pub fn classical_partitions(t: SimpleType) -> Result<Vec<Partition>> {
    let n = natural_dimension(t)?;
    Ok(Partition::all(n)
        .into_iter()
        .filter(|p| parity_violation(t, p).is_none())
        .collect())
}

/// The weighted Dynkin diagram of the orbit with partition `p`.
///
/// Each part `m` contributes `m-1, m-3, ..., 1-m`; the largest values
/// `h_1 >= h_2 >= ...` give the weights `h_i - h_{i+1}` on the chain, with
/// the end rules `h_l` (B), `2 h_l` (C) and `h_{l-1} -+ h_l` on the fork (D).
pub fn diagram_of_partition(
    t: SimpleType,
    p: &Partition,
    tag: Option<VeryEvenTag>,
) -> Result<OrbitDiagram> {
    let n = natural_dimension(t)?;
    let invalid = |reason: String| Error::InvalidPartition {
        ty: t,
        partition: p.to_string(),
        reason,
    };
    if p.size() != n {
        return Err(invalid(format!("size {} differs from {n}", p.size())));
    }
    if let Some(reason) = parity_violation(t, p) {
        return Err(invalid(reason));
    }
    let very_even = t.family() == Family::D && p.is_very_even();
    match (very_even, tag) {
        (true, None) => return Err(invalid("very even partition needs tag I or II".into())),
        (false, Some(_)) => return Err(invalid("only very even partitions carry a tag".into())),
        _ => {}
    }

    let mut h: Vec<i64> = Vec::with_capacity(n);
    for &m in p.parts() {
        let m = m as i64;
        h.extend((0..m).map(|k| m - 1 - 2 * k));
    }
    h.sort_unstable_by(|a, b| b.cmp(a));

    let l = t.rank();
    let mut w = vec![0i64; l];
    match t.family() {
        Family::A => {
            for i in 0..l {
                w[i] = h[i] - h[i + 1];
            }
        }
        Family::B | Family::C => {
            for i in 0..l - 1 {
                w[i] = h[i] - h[i + 1];
            }
            w[l - 1] = if t.family() == Family::B {
                h[l - 1]
            } else {
                2 * h[l - 1]
            };
        }
        Family::D => {
            for i in 0..l - 2 {
                w[i] = h[i] - h[i + 1];
            }
            let (lo, hi) = (h[l - 2] - h[l - 1], h[l - 2] + h[l - 1]);
            if tag == Some(VeryEvenTag::II) {
                w[l - 2] = hi;
                w[l - 1] = lo;
            } else {
                w[l - 2] = lo;
                w[l - 1] = hi;
            }
        }
        _ => unreachable!(),
    }
    Ok(OrbitDiagram {
        label: OrbitLabel::Classical {
            partition: p.clone(),
            tag,
        },
        diagram: WeightedDiagram::from_ints(t, &w)?,
    })
}

/// The Bala–Carter table of an exceptional type, ordered by orbit dimension.
pub fn exceptional_table(t: SimpleType) -> Result<Vec<OrbitDiagram>> {
    let rows = exceptional::rows(t).ok_or(Error::NotExceptional(t))?;
    rows.iter()
        .map(|(name, w)| {
            let w: Vec<i64> = w.iter().map(|&x| x as i64).collect();
            Ok(OrbitDiagram {
                label: OrbitLabel::exceptional(name),
                diagram: WeightedDiagram::from_ints(t, &w)?,
            })
        })
        .collect()
}

/// Characteristics of all nilpotent orbits of `t`, zero orbit included.
pub fn enumerate_complex_characteristics(t: SimpleType) -> Vec<OrbitDiagram> {
    if !t.is_classical() {
        return exceptional_table(t).expect("exceptional type has a table");
    }
    let mut out = Vec::new();
    for p in classical_partitions(t).expect("classical type") {
        if t.family() == Family::D && p.is_very_even() {
            for tag in [VeryEvenTag::I, VeryEvenTag::II] {
                out.push(diagram_of_partition(t, &p, Some(tag)).expect("valid partition"));
            }
        } else {
            out.push(diagram_of_partition(t, &p, None).expect("valid partition"));
        }
    }
    out
}

/// Finds the orbit named `label` among the characteristics of `t`.
pub fn find_orbit(t: SimpleType, label: &OrbitLabel) -> Option<OrbitDiagram> {
    enumerate_complex_characteristics(t)
        .into_iter()
        .find(|o| o.label.same_orbit(label))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_display_roundtrip() {
        let p = part("[3^2,1^4]");
        assert_eq!(p.parts(), &[3, 3, 1, 1, 1, 1]);
        assert_eq!(p.to_string(), "[3^2,1^4]");
        assert_eq!(part("2,1,1").to_string(), "[2,1^2]");
    }

    #[test]
    fn partitions_of_small_numbers() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(10).len(), 42);
        assert_eq!(Partition::all(4)[0], part("[4]"));
    }

    #[test]
    fn c2_partitions() {
        let got: Vec<String> = classical_partitions(SimpleType::c(2))
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(got, ["[4]", "[2^2]", "[2,1^2]", "[1^4]"]);
    }

    #[test]
    fn recipe_examples() {
        let d = |t, p: &str, tag| diagram_of_partition(t, &part(p), tag).unwrap().weights();
        assert_eq!(d(SimpleType::a(3), "[3,1]", None), vec![2, 0, 2]);
        assert_eq!(d(SimpleType::b(4), "[9]", None), vec![2, 2, 2, 2]);
        assert_eq!(d(SimpleType::c(4), "[2^4]", None), vec![0, 0, 0, 2]);
        assert_eq!(
            d(SimpleType::d(6), "[3^2,1^6]", None),
            vec![0, 2, 0, 0, 0, 0]
        );
        assert_eq!(
            d(SimpleType::d(4), "[2^4]", Some(VeryEvenTag::I)),
            vec![0, 0, 0, 2]
        );
        assert_eq!(
            d(SimpleType::d(4), "[2^4]", Some(VeryEvenTag::II)),
            vec![0, 0, 2, 0]
        );
    }

    #[test]
    fn tag_rules_enforced() {
        let d4 = SimpleType::d(4);
        assert!(diagram_of_partition(d4, &part("[2^4]"), None).is_err());
        assert!(diagram_of_partition(d4, &part("[7,1]"), Some(VeryEvenTag::I)).is_err());
        assert!(diagram_of_partition(d4, &part("[2,1^6]"), None).is_err());
        assert!(diagram_of_partition(SimpleType::c(2), &part("[3,1]"), None).is_err());
    }

    #[test]
    fn label_parsing() {
        let l: OrbitLabel = "[2^4]_II".parse().unwrap();
        assert_eq!(l, OrbitLabel::very_even(part("[2^4]"), VeryEvenTag::II));
        assert_eq!(l.to_string(), "[2^4]_II");
        let e: OrbitLabel = "3A_1''".parse().unwrap();
        assert!(e.same_orbit(&OrbitLabel::exceptional("(3A_1)''")));
        assert!(!e.same_orbit(&OrbitLabel::exceptional("(3A_1)'")));
        assert!(OrbitLabel::exceptional("~A_2").same_orbit(&OrbitLabel::exceptional("Ã_2")));
    }

    #[test]
    fn a2_characteristics() {
        let all: Vec<Vec<i64>> = enumerate_complex_characteristics(SimpleType::a(2))
            .iter()
            .map(|o| o.weights())
            .collect();
        assert_eq!(all, vec![vec![2, 2], vec![1, 1], vec![0, 0]]);
    }

    #[test]
    fn classical_rejected_by_exceptional_table() {
        assert!(exceptional_table(SimpleType::a(3)).is_err());
        assert!(classical_partitions(SimpleType::G2).is_err());
    }
}
