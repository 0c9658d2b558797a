//! The matching filter `H^n(a_+)`, the inclusion into `Psi(b)`, and the
//! spanning check, together with the basis tables printed per real form.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::nilorbits::{
    enumerate_complex_characteristics, find_orbit, OrbitDiagram, OrbitLabel, Partition, VeryEvenTag,
};
use crate::rational::{Rational, RationalSubspace};
use crate::rootcore::{build_root_system, iota_fixed_subspace, SimpleType, WeightedDiagram};
use crate::satake::{b_subspace, matches, satake_catalog, ExceptionalForm, RealFormLabel};

/// Characteristics of complex orbits whose diagram matches the Satake
/// diagram of `label`, in enumeration order.
pub fn h_n_a_plus(label: &RealFormLabel) -> Vec<OrbitDiagram> {
    let s = satake_catalog(label);
    enumerate_complex_characteristics(label.simple_type())
        .into_iter()
        .filter(|o| matches(&o.diagram, &s).expect("same type"))
        .collect()
}

/// Every matching characteristic is fixed by the opposition involution.
pub fn check_easy_inclusion(label: &RealFormLabel) -> bool {
    let iota = iota_fixed_subspace(&build_root_system(label.simple_type()));
    h_n_a_plus(label)
        .iter()
        .all(|o| iota.contains(o.diagram.weights()))
}

/// Rational span of diagrams of type `t`.
pub fn span_of(t: SimpleType, diagrams: &[WeightedDiagram]) -> Result<RationalSubspace> {
    if let Some(d) = diagrams.iter().find(|d| d.simple_type() != t) {
        return Err(Error::TypeMismatch {
            expected: t,
            found: d.simple_type(),
        });
    }
    let rows: Vec<Vec<Rational>> = diagrams.iter().map(|d| d.weights().to_vec()).collect();
    Ok(RationalSubspace::span(t.rank(), &rows))
}

/// Keeps each diagram that enlarges the span of those kept before it.
fn greedy_basis(t: SimpleType, orbits: &[OrbitDiagram]) -> (RationalSubspace, Vec<OrbitLabel>) {
    let mut span = RationalSubspace::zero(t.rank());
    let mut basis = Vec::new();
    for o in orbits {
        if !span.contains(o.diagram.weights()) {
            span = span.sum(&RationalSubspace::span(
                t.rank(),
                &[o.diagram.weights().to_vec()],
            ));
            basis.push(o.label.clone());
        }
    }
    (span, basis)
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub label: RealFormLabel,
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub rank: usize,
    pub dim_b: usize,
    pub dim_span: usize,
    pub theorem_holds: bool,
    #[serde(rename = "easy_inclusion")]
    pub easy_inclusion_holds: bool,
    #[serde(rename = "basis")]
    pub greedy_basis: Vec<OrbitLabel>,
    pub paper_basis_verified: Option<bool>,
    #[serde(skip)]
    pub matching_orbits: Vec<OrbitDiagram>,
}

impl VerificationReport {
    /// Whether every check in the report passed.
    pub fn all_ok(&self) -> bool {
        self.theorem_holds && self.easy_inclusion_holds && self.paper_basis_verified != Some(false)
    }

    /// The report as JSON; `verbose` adds the full list of matching orbits.
    pub fn to_json(&self, verbose: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if verbose {
            v["matching_orbits"] = json!(self.matching_orbits);
        }
        v
    }
}

/// Compares the span of `H^n(a_+)` with `Psi(b)` for one label.
pub fn verify_theorem(label: &RealFormLabel) -> VerificationReport {
    let t = label.simple_type();
    let matching = h_n_a_plus(label);
    let b = b_subspace(label);
    let iota = iota_fixed_subspace(&build_root_system(t));
    let (span, greedy) = greedy_basis(t, &matching);
    let easy = matching.iter().all(|o| iota.contains(o.diagram.weights()));
    let paper = paper_basis(label).ok().map(|_| verify_paper_basis(label));
    VerificationReport {
        label: label.clone(),
        simple_type: t,
        rank: t.rank(),
        dim_b: b.dim(),
        dim_span: span.dim(),
        theorem_holds: span.dim() == b.dim() && span.is_subspace_of(&b),
        easy_inclusion_holds: easy,
        greedy_basis: greedy,
        paper_basis_verified: paper.map(|r| r.unwrap_or(false)),
        matching_orbits: matching,
    }
}

fn hook(j: usize, rest: usize) -> OrbitLabel {
    // [2j+1, 1^rest]
    OrbitLabel::classical(Partition::from_powers(&[(2 * j + 1, 1), (1, rest)]).expect("valid"))
}

fn double_hook(j: usize, rest: usize) -> OrbitLabel {
    // [(2j+1)^2, 1^rest]
    OrbitLabel::classical(Partition::from_powers(&[(2 * j + 1, 2), (1, rest)]).expect("valid"))
}

fn single(parts: &[(usize, usize)]) -> OrbitLabel {
    OrbitLabel::classical(Partition::from_powers(parts).expect("valid"))
}

fn very_even_i(parts: &[(usize, usize)]) -> OrbitLabel {
    OrbitLabel::very_even(
        Partition::from_powers(parts).expect("valid"),
        VeryEvenTag::I,
    )
}

fn names(list: &[&str]) -> Vec<OrbitLabel> {
    list.iter().map(|s| OrbitLabel::exceptional(s)).collect()
}

/// The basis of `Psi(b)` printed for `label`, instantiated at its parameters.
/// Complex labels use the row of the split form.
pub fn paper_basis(label: &RealFormLabel) -> Result<Vec<OrbitLabel>> {
    use ExceptionalForm::*;
    use RealFormLabel::*;
    let l = label.rank();
    let rows = match label.reduced() {
        // sl(n,R), n = l+1: [3,1^{n-3}], [5,1^{n-5}], ..., and [n] for n even
        SlR(n) => {
            let mut v: Vec<OrbitLabel> =
                (1..=(n - 1) / 2).map(|j| hook(j, n - 2 * j - 1)).collect();
            if n % 2 == 0 {
                v.push(single(&[(n, 1)]));
            }
            v
        }
        // su*(2k): [3^2,1^{2k-6}], ..., and [k^2] for k even
        SuStar(k) => {
            let mut v: Vec<OrbitLabel> = (1..=(k - 1) / 2)
                .map(|j| double_hook(j, 2 * k - 4 * j - 2))
                .collect();
            if k % 2 == 0 {
                v.push(single(&[(k, 2)]));
            }
            v
        }
        Su(p, q) if p == q => {
            let mut v: Vec<OrbitLabel> = (1..q).map(|j| hook(j, l - 2 * j)).collect();
            v.push(single(&[(2 * q, 1)]));
            v
        }
        Su(_, q) => (1..=q).map(|j| hook(j, l - 2 * j)).collect(),
        So(p, q) if (p + q) % 2 == 1 => (1..=q).map(|j| hook(j, 2 * l - 2 * j)).collect(),
        // D_l, p > q+2 and p = q+2
        So(_, q) if q < l => (1..=q).map(|j| hook(j, 2 * l - 2 * j - 1)).collect(),
        So(..) if l % 2 == 1 => (1..l).map(|j| hook(j, 2 * l - 2 * j - 1)).collect(),
        So(..) => {
            let mut v: Vec<OrbitLabel> = (1..l).map(|j| hook(j, 2 * l - 2 * j - 1)).collect();
            v.push(very_even_i(&[(2, l)]));
            v
        }
        SpR(l) => {
            let mut v = vec![single(&[(2, l)])];
            v.extend((1..l).map(|j| single(&[(2 * j + 2, 1), (2, l - j - 1)])));
            v
        }
        Sp(p, q) if p == q => {
            let mut v: Vec<OrbitLabel> =
                (1..q).map(|j| double_hook(j, 2 * l - 4 * j - 2)).collect();
            v.push(single(&[(2 * q, 2)]));
            v
        }
        Sp(_, q) => (1..=q).map(|j| double_hook(j, 2 * l - 4 * j - 2)).collect(),
        SoStar(n) if n % 2 == 0 => {
            let m = n / 2;
            let mut v: Vec<OrbitLabel> =
                (1..m).map(|j| double_hook(j, 4 * m - 4 * j - 2)).collect();
            v.push(very_even_i(&[(2, 2 * m)]));
            v
        }
        SoStar(n) => {
            let m = (n - 1) / 2;
            (1..=m).map(|j| double_hook(j, 4 * m - 4 * j)).collect()
        }
        Exceptional(form) => match form {
            E6Split | E6Quasi => names(&["A_2", "2A_2", "D_4", "E_6"]),
            E6Hermitian => names(&["A_2", "2A_2"]),
            E6Rank2 => names(&["2A_2"]),
            E7Split => names(&[
                "(3A_1)''",
                "A_2",
                "2A_2",
                "D_4",
                "A_3+A_2+A_1",
                "A_4+A_2",
                "E_7",
            ]),
            E7Quaternionic => names(&["A_2", "2A_2", "D_4", "A_4+A_2"]),
            E7Hermitian => names(&["(3A_1)''", "A_2", "2A_2"]),
            E8Split => names(&[
                "A_2", "2A_2", "D_4", "A_4+A_2", "D_4+A_2", "D_5+A_2", "E_8(a_1)", "E_8",
            ]),
            E8Quaternionic => names(&["A_2", "2A_2", "D_4", "A_4+A_2"]),
            F4Split => names(&["A_2", "Ã_2", "B_3", "F_4"]),
            F4Rank1 => names(&["Ã_2"]),
            G2Split => names(&["G_2(a_1)", "G_2"]),
        },
        Complex(_) => unreachable!("reduced labels are real"),
    };
    if rows.is_empty() && l > 0 && b_subspace(label).dim() > 0 {
        return Err(Error::NoBasisTable(label.to_string()));
    }
    Ok(rows)
}

/// The diagrams of the labels in [`paper_basis`].
pub fn paper_basis_diagrams(label: &RealFormLabel) -> Result<Vec<OrbitDiagram>> {
    let t = label.simple_type();
    paper_basis(label)?
        .iter()
        .map(|name| {
            find_orbit(t, name).ok_or_else(|| Error::InvalidPartition {
                ty: t,
                partition: name.to_string(),
                reason: "no such orbit".into(),
            })
        })
        .collect()
}

/// Checks that the printed basis consists of matching, even characteristics
/// and is a basis of `Psi(b)`.
pub fn verify_paper_basis(label: &RealFormLabel) -> Result<bool> {
    let t = label.simple_type();
    let diagrams = paper_basis_diagrams(label)?;
    let matching = h_n_a_plus(label);
    let all_matching = diagrams
        .iter()
        .all(|d| matching.iter().any(|m| m.diagram == d.diagram));
    let even = diagrams.iter().all(|d| d.diagram.is_even());
    let ds: Vec<WeightedDiagram> = diagrams.iter().map(|d| d.diagram.clone()).collect();
    let span = span_of(t, &ds)?;
    let independent = span.dim() == ds.len();
    Ok(all_matching && even && independent && span == b_subspace(label))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> RealFormLabel {
        s.parse().unwrap()
    }

    #[test]
    fn g2_split() {
        let r = verify_theorem(&label("g2(2)"));
        assert_eq!((r.dim_b, r.dim_span), (2, 2));
        assert!(r.theorem_holds && r.easy_inclusion_holds);
        assert_eq!(r.matching_orbits.len(), 5);
        assert_eq!(r.paper_basis_verified, Some(true));
    }

    #[test]
    fn f4_rank_one_filter() {
        let h = h_n_a_plus(&label("f4(-20)"));
        let ws: Vec<Vec<i64>> = h.iter().map(|o| o.weights()).collect();
        assert!(ws.contains(&vec![0, 0, 0, 2]));
        assert!(ws.iter().all(|w| w[..3] == [0, 0, 0]));
    }

    #[test]
    fn e6_rank_two_filter() {
        let h = h_n_a_plus(&label("e6(-26)"));
        let names: Vec<String> = h.iter().map(|o| o.label.to_string()).collect();
        assert!(names.contains(&"2A_2".to_string()));
        assert!(!names.contains(&"A_2".to_string()));
    }

    #[test]
    fn span_examples() {
        let a3 = SimpleType::a(3);
        let d = |w: &[i64]| WeightedDiagram::from_ints(a3, w).unwrap();
        assert_eq!(span_of(a3, &[]).unwrap().dim(), 0);
        assert_eq!(
            span_of(a3, &[d(&[2, 0, 2]), d(&[2, 2, 2])]).unwrap().dim(),
            2
        );
        let g = WeightedDiagram::from_ints(SimpleType::G2, &[2, 0]).unwrap();
        assert!(span_of(a3, &[g]).is_err());
    }

    #[test]
    fn paper_basis_instantiation() {
        let got: Vec<String> = paper_basis(&label("sp(4,R)"))
            .unwrap()
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(got, ["[2^4]", "[4,2^2]", "[6,2]", "[8]"]);
        let got: Vec<String> = paper_basis(&label("so*(10)"))
            .unwrap()
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(got, ["[3^2,1^4]", "[5^2]"]);
    }

    #[test]
    fn zero_orbit_always_matches() {
        for s in ["su(5,2)", "e7(-25)", "so*(12)"] {
            let h = h_n_a_plus(&label(s));
            assert!(h.iter().any(|o| o.diagram.is_zero()));
            let r = verify_theorem(&label(s));
            assert!(r.greedy_basis.iter().all(|b| {
                h.iter()
                    .find(|o| &o.label == b)
                    .is_some_and(|o| !o.diagram.is_zero())
            }));
        }
    }
}
