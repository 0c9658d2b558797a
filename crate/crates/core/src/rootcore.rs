//! Root systems of the complex simple Lie algebras, weighted diagrams, and the
//! opposition involution `-w0` on the Dynkin diagram.
//!
//! Node numbering is fixed:
//!
//! * `A_l`, `B_l`, `C_l`: a chain `a_1 - ... - a_l` (the double bond of `B`/`C`
//!   sits between `a_{l-1}` and `a_l`; `a_l` is short in `B`, long in `C`).
//! * `D_l`: a chain `a_1 - ... - a_{l-2}` with the fork nodes `a_{l-1}` (upper)
//!   and `a_l` (lower) both attached to `a_{l-2}`.
//! * `E_6`: chain `a_1..a_5`, `a_6` attached to `a_3`.
//! * `E_7`: chain `a_1..a_6`, `a_7` attached to `a_4`.
//! * `E_8`: chain `a_1..a_7`, `a_8` attached to `a_5`.
//! * `F_4`: `a_1 - a_2 => a_3 - a_4` (`a_1`, `a_2` long).
//! * `G_2`: `a_1 => a_2` (`a_1` long).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{q, Rational, RationalSubspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A complex simple Lie algebra type such as `A_3` or `E_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let hint = |h: &str| Some(h.to_string());
        let bad = |hint: Option<String>| {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                hint,
            })
        };
        match (family, rank) {
            (_, 0) => bad(None),
            (Family::A, _) => Ok(SimpleType { family, rank }),
            (Family::B, 1) => bad(hint("B_1 coincides with A_1")),
            (Family::C, 1) => bad(hint("C_1 coincides with A_1")),
            (Family::B | Family::C, _) => Ok(SimpleType { family, rank }),
            (Family::D, 2) => bad(hint("D_2 = A_1 x A_1 is not simple")),
            (Family::D, 3) => bad(hint("D_3 coincides with A_3")),
            (Family::D, 1) => bad(None),
            (Family::D, _) => Ok(SimpleType { family, rank }),
            (Family::E, 6..=8) | (Family::F, 4) | (Family::G, 2) => Ok(SimpleType { family, rank }),
            _ => bad(None),
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("valid A rank")
    }
    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).expect("valid B rank")
    }
    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).expect("valid C rank")
    }
    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("valid D rank")
    }
    pub fn e(rank: usize) -> Self {
        Self::new(Family::E, rank).expect("valid E rank")
    }
    pub const F4: SimpleType = SimpleType {
        family: Family::F,
        rank: 4,
    };
    pub const G2: SimpleType = SimpleType {
        family: Family::G,
        rank: 2,
    };

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_classical(self) -> bool {
        self.family.is_classical()
    }

    /// Every supported type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Squared root lengths per node and the off-diagonal bonds, scaled so
    /// every entry of the Gram matrix is an integer.
    fn gram_matrix(self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut g = vec![vec![0i64; l]; l];
        let bond = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                for i in 0..l.saturating_sub(1) {
                    bond(&mut g, i, i + 1, -1);
                }
            }
            Family::B | Family::C => {
                // long roots have squared length 4, short ones 2
                let (chain, end) = if self.family == Family::B {
                    (4, 2)
                } else {
                    (2, 4)
                };
                for i in 0..l - 1 {
                    g[i][i] = chain;
                }
                g[l - 1][l - 1] = end;
                for i in 0..l - 2 {
                    bond(&mut g, i, i + 1, -chain / 2);
                }
                bond(&mut g, l - 2, l - 1, -2);
            }
            Family::D => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                for i in 0..l - 2 {
                    bond(&mut g, i, i + 1, -1);
                }
                bond(&mut g, l - 3, l - 1, -1);
            }
            Family::E => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                for i in 0..l - 2 {
                    bond(&mut g, i, i + 1, -1);
                }
                // branch node: a_3 (E6), a_4 (E7), a_5 (E8)
                let branch = l - 4;
                bond(&mut g, branch, l - 1, -1);
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                bond(&mut g, 0, 1, -2);
                bond(&mut g, 1, 2, -2);
                bond(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 6;
                g[1][1] = 2;
                bond(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest.parse().map_err(|_| Error::Parse(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A root in the basis of simple roots.
pub type Root = Vec<i64>;

/// The root combinatorics of one simple type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    simple_type: SimpleType,
    gram: Vec<Vec<i64>>,
    cartan_matrix: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    node_labels: Vec<String>,
    index: HashMap<Root, usize>,
}

impl RootSystemData {
    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    /// `cartan_matrix()[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn gram_matrix(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn node_labels(&self) -> &[String] {
        &self.node_labels
    }

    /// Position of a positive root in [`Self::positive_roots`].
    pub fn positive_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if v.iter().all(|&c| c >= 0) {
            self.index.contains_key(v)
        } else if v.iter().all(|&c| c <= 0) {
            let neg: Root = v.iter().map(|c| -c).collect();
            self.index.contains_key(&neg)
        } else {
            false
        }
    }

    /// The invariant form `(u, v)` in the scaled Gram matrix.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                s += ui * vj * self.gram[i][j];
            }
        }
        s
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        2 * self.inner(beta, alpha) / self.inner(alpha, alpha)
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// Moves a coweight, given by its values `alpha_i(H)` on the simple roots,
    /// into the closed dominant chamber by simple reflections.
    pub fn dominant_coweight(&self, values: &[Rational]) -> Vec<Rational> {
        let mut c = values.to_vec();
        while let Some(j) = c.iter().position(|x| x.is_negative()) {
            let cj = c[j].clone();
            for (k, ck) in c.iter_mut().enumerate() {
                // alpha_k(s_j H) = alpha_k(H) - <alpha_k, alpha_j^vee> alpha_j(H)
                let a = self.cartan_matrix[j][k];
                if a != 0 {
                    *ck -= &cj * q(a);
                }
            }
        }
        c
    }

    /// Value `beta(H)` of a root on the element with the given diagram.
    pub fn evaluate(&self, root: &[i64], diagram: &WeightedDiagram) -> Rational {
        let mut s = Rational::zero();
        for (c, w) in root.iter().zip(diagram.weights()) {
            if *c != 0 {
                s += q(*c) * w;
            }
        }
        s
    }
}

/// Builds the positive roots of `t` by the root-string algorithm.
pub fn build_root_system(t: SimpleType) -> RootSystemData {
    let l = t.rank;
    let gram = t.gram_matrix();
    let cartan_matrix: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
        .collect();

    let simple: Vec<Root> = (0..l)
        .map(|i| {
            let mut r = vec![0; l];
            r[i] = 1;
            r
        })
        .collect();
    let mut roots: Vec<Root> = simple.clone();
    let mut known: std::collections::HashSet<Root> = roots.iter().cloned().collect();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..l {
                // p: how far the alpha_i-string through beta extends downward
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] >= 0 && known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| beta[j] * cartan_matrix[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.sort_by(|a, b| {
        RootSystemData::height(a)
            .cmp(&RootSystemData::height(b))
            .then_with(|| b.cmp(a))
    });
    let index = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();
    RootSystemData {
        simple_type: t,
        gram,
        cartan_matrix,
        positive_roots: roots,
        node_labels: (1..=l).map(|i| format!("a_{i}")).collect(),
        index,
    }
}

/// A map from the nodes of a Dynkin diagram to rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedDiagram {
    simple_type: SimpleType,
    weights: Vec<Rational>,
}

impl WeightedDiagram {
    pub fn new(simple_type: SimpleType, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != simple_type.rank {
            return Err(Error::DiagramLength {
                expected: simple_type.rank,
                found: weights.len(),
            });
        }
        Ok(WeightedDiagram {
            simple_type,
            weights,
        })
    }

    pub fn from_ints(simple_type: SimpleType, weights: &[i64]) -> Result<Self> {
        Self::new(simple_type, weights.iter().map(|&w| q(w)).collect())
    }

    pub fn zero(simple_type: SimpleType) -> Self {
        WeightedDiagram {
            simple_type,
            weights: vec![Rational::zero(); simple_type.rank],
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Weight on node `a_{i+1}`.
    pub fn weight(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(Zero::is_zero)
    }

    /// Integer weights, if every weight is an integer that fits in `i64`.
    pub fn integer_weights(&self) -> Option<Vec<i64>> {
        self.weights
            .iter()
            .map(|w| {
                if w.is_integer() {
                    w.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_even(&self) -> bool {
        self.integer_weights()
            .is_some_and(|w| w.iter().all(|&x| x == 0 || x == 2))
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for WeightedDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let values: Vec<serde_json::Value> = self.weights.iter().map(rational_json).collect();
        values.serialize(s)
    }
}

/// Integers serialize as JSON numbers, other rationals as `"p/q"` strings.
pub(crate) fn rational_json(x: &Rational) -> serde_json::Value {
    match x.is_integer().then(|| x.to_integer().to_i64()).flatten() {
        Some(n) => serde_json::Value::from(n),
        None => serde_json::Value::from(x.to_string()),
    }
}

/// A permutation of the Dynkin nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagramInvolution {
    simple_type: SimpleType,
    permutation: Vec<usize>,
}

impl DiagramInvolution {
    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    /// `permutation()[i]` is the image of node `a_{i+1}` (0-based).
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn image(&self, node: usize) -> usize {
        self.permutation[node]
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_involution(&self) -> bool {
        self.permutation
            .iter()
            .enumerate()
            .all(|(i, &j)| self.permutation[j] == i)
    }

    pub fn preserves(&self, cartan: &[Vec<i64>]) -> bool {
        let p = &self.permutation;
        (0..p.len()).all(|i| (0..p.len()).all(|j| cartan[i][j] == cartan[p[i]][p[j]]))
    }

    /// The 2-cycles `(i, j)` with `i < j`.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        self.permutation
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i, j))
            .collect()
    }

    pub fn apply(&self, d: &WeightedDiagram) -> WeightedDiagram {
        let weights = (0..self.permutation.len())
            .map(|i| d.weights[self.permutation[i]].clone())
            .collect();
        WeightedDiagram {
            simple_type: d.simple_type,
            weights,
        }
    }
}

/// The permutation `alpha_i -> -w0(alpha_i)` of the simple roots.
///
/// `-w0` sends the fundamental coweight `w_i` to `w_{sigma(i)}`; the image is
/// found by reflecting `-w_i` into the dominant chamber.
pub fn opposition_involution(rs: &RootSystemData) -> DiagramInvolution {
    let l = rs.rank();
    let permutation = (0..l)
        .map(|i| {
            let mut v = vec![Rational::zero(); l];
            v[i] = q(-1);
            let dom = rs.dominant_coweight(&v);
            dom.iter()
                .position(|x| !x.is_zero())
                .expect("dominant image of a fundamental coweight is nonzero")
        })
        .collect();
    DiagramInvolution {
        simple_type: rs.simple_type(),
        permutation,
    }
}

/// Diagrams held fixed by the opposition involution.
pub fn iota_fixed_subspace(rs: &RootSystemData) -> RationalSubspace {
    let l = rs.rank();
    let iota = opposition_involution(rs);
    let constraints: Vec<Vec<Rational>> = iota
        .two_cycles()
        .into_iter()
        .map(|(i, j)| {
            let mut c = vec![Rational::zero(); l];
            c[i] = q(1);
            c[j] = q(-1);
            c
        })
        .collect();
    RationalSubspace::kernel(l, &constraints)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_ranks() {
        assert!(SimpleType::new(Family::D, 3).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        assert!(SimpleType::new(Family::A, 0).is_err());
        let err = SimpleType::new(Family::D, 3).unwrap_err().to_string();
        assert!(err.contains("A_3"), "{err}");
    }

    #[test]
    fn parse_and_display() {
        let t: SimpleType = "E_8".parse().unwrap();
        assert_eq!(t, SimpleType::e(8));
        assert_eq!(t.to_string(), "E_8");
        assert_eq!("d5".parse::<SimpleType>().unwrap(), SimpleType::d(5));
        assert!("D3".parse::<SimpleType>().is_err());
    }

    #[test]
    fn a1_has_one_root() {
        let rs = build_root_system(SimpleType::a(1));
        assert_eq!(rs.positive_roots(), &[vec![1]]);
    }

    #[test]
    fn cartan_matrices() {
        let g2 = build_root_system(SimpleType::G2);
        assert_eq!(g2.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
        let b3 = build_root_system(SimpleType::b(3));
        assert_eq!(b3.cartan_matrix()[2][1], -2);
        assert_eq!(b3.cartan_matrix()[1][2], -1);
        let c3 = build_root_system(SimpleType::c(3));
        assert_eq!(c3.cartan_matrix()[2][1], -1);
        assert_eq!(c3.cartan_matrix()[1][2], -2);
    }

    #[test]
    fn highest_roots() {
        let e8 = build_root_system(SimpleType::e(8));
        // chain a_1..a_7, a_8 on a_5
        assert_eq!(
            e8.positive_roots().last().unwrap(),
            &vec![2, 3, 4, 5, 6, 4, 2, 3]
        );
        let f4 = build_root_system(SimpleType::F4);
        assert_eq!(f4.positive_roots().last().unwrap(), &vec![2, 3, 4, 2]);
        let g2 = build_root_system(SimpleType::G2);
        assert_eq!(g2.positive_roots().last().unwrap(), &vec![2, 3]);
    }

    #[test]
    fn involution_examples() {
        let a2 = opposition_involution(&build_root_system(SimpleType::a(2)));
        assert_eq!(a2.permutation(), &[1, 0]);
        let d4 = opposition_involution(&build_root_system(SimpleType::d(4)));
        assert!(d4.is_identity());
        let d5 = opposition_involution(&build_root_system(SimpleType::d(5)));
        assert_eq!(d5.permutation(), &[0, 1, 2, 4, 3]);
        let e6 = opposition_involution(&build_root_system(SimpleType::e(6)));
        assert_eq!(e6.permutation(), &[4, 3, 2, 1, 0, 5]);
    }

    #[test]
    fn fixed_subspace_dimensions() {
        let dim = |t| iota_fixed_subspace(&build_root_system(t)).dim();
        assert_eq!(dim(SimpleType::a(3)), 2);
        assert_eq!(dim(SimpleType::F4), 4);
        assert_eq!(dim(SimpleType::d(5)), 4);
        let a3 = iota_fixed_subspace(&build_root_system(SimpleType::a(3)));
        assert!(a3.contains(&[q(1), q(5), q(1)]));
        assert!(!a3.contains(&[q(1), q(0), q(0)]));
    }

    #[test]
    fn diagram_length_checked() {
        assert!(WeightedDiagram::from_ints(SimpleType::a(3), &[1, 2]).is_err());
    }
}
