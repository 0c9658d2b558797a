//! Non-compact real forms, their Satake diagrams, and the diagram subspaces
//! `Psi(a)` (diagrams matching the Satake diagram) and `Psi(b)` (those that
//! are also fixed by the opposition involution).

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{q, Rational, RationalSubspace};
use crate::rootcore::{
    build_root_system, iota_fixed_subspace, Family, SimpleType, WeightedDiagram,
};

/// The twelve non-compact real forms of the exceptional algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalForm {
    E6Split,
    E6Quasi,
    E6Hermitian,
    E6Rank2,
    E7Split,
    E7Quaternionic,
    E7Hermitian,
    E8Split,
    E8Quaternionic,
    F4Split,
    F4Rank1,
    G2Split,
}

impl ExceptionalForm {
    pub const ALL: [ExceptionalForm; 12] = [
        ExceptionalForm::E6Split,
        ExceptionalForm::E6Quasi,
        ExceptionalForm::E6Hermitian,
        ExceptionalForm::E6Rank2,
        ExceptionalForm::E7Split,
        ExceptionalForm::E7Quaternionic,
        ExceptionalForm::E7Hermitian,
        ExceptionalForm::E8Split,
        ExceptionalForm::E8Quaternionic,
        ExceptionalForm::F4Split,
        ExceptionalForm::F4Rank1,
        ExceptionalForm::G2Split,
    ];

    /// `(type, character)`, e.g. `(E_6, -14)` for `e6(-14)`.
    pub fn data(self) -> (SimpleType, i32) {
        use ExceptionalForm::*;
        match self {
            E6Split => (SimpleType::e(6), 6),
            E6Quasi => (SimpleType::e(6), 2),
            E6Hermitian => (SimpleType::e(6), -14),
            E6Rank2 => (SimpleType::e(6), -26),
            E7Split => (SimpleType::e(7), 7),
            E7Quaternionic => (SimpleType::e(7), -5),
            E7Hermitian => (SimpleType::e(7), -25),
            E8Split => (SimpleType::e(8), 8),
            E8Quaternionic => (SimpleType::e(8), -24),
            F4Split => (SimpleType::F4, 4),
            F4Rank1 => (SimpleType::F4, -20),
            G2Split => (SimpleType::G2, 2),
        }
    }

    fn from_data(t: SimpleType, character: i32) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.data() == (t, character))
    }
}

/// A non-compact real simple Lie algebra, or a complex simple Lie algebra
/// viewed as a real one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RealFormLabel {
    /// `sl(n,R)`
    SlR(usize),
    /// `su*(2k)`, stored as `k`
    SuStar(usize),
    /// `su(p,q)` with `p >= q`
    Su(usize, usize),
    /// `so(p,q)` with `p >= q`
    So(usize, usize),
    /// `sp(l,R)`
    SpR(usize),
    /// `sp(p,q)` with `p >= q`
    Sp(usize, usize),
    /// `so*(2n)`, stored as `n`
    SoStar(usize),
    Exceptional(ExceptionalForm),
    Complex(SimpleType),
}

fn invalid(label: String, reason: &str) -> Error {
    Error::InvalidParameters {
        label,
        reason: reason.to_string(),
    }
}

fn alias(label: String, alias: &str) -> Error {
    Error::Alias {
        label,
        alias: alias.to_string(),
    }
}

impl RealFormLabel {
    pub fn sl_r(n: usize) -> Result<Self> {
        match n {
            0 | 1 => Err(invalid(format!("sl({n},R)"), "n must be at least 2")),
            _ => Ok(RealFormLabel::SlR(n)),
        }
    }

    pub fn su_star(k: usize) -> Result<Self> {
        let name = format!("su*({})", 2 * k);
        match k {
            0 => Err(invalid(name, "k must be at least 1")),
            1 => Err(Error::Compact(name)),
            _ => Ok(RealFormLabel::SuStar(k)),
        }
    }

    pub fn su(p: usize, q: usize) -> Result<Self> {
        let (p, q) = (p.max(q), p.min(q));
        if q == 0 {
            return Err(Error::Compact(format!("su({p},{q})")));
        }
        Ok(RealFormLabel::Su(p, q))
    }

    pub fn so(p: usize, q: usize) -> Result<Self> {
        let (p, q) = (p.max(q), p.min(q));
        let name = format!("so({p},{q})");
        if q == 0 {
            return Err(Error::Compact(name));
        }
        match (p, q) {
            (1, 1) | (2, 2) => Err(invalid(name, "not simple")),
            (2, 1) => Err(alias(name, "sl(2,R)")),
            (3, 1) => Err(alias(name, "sl(2,C)")),
            (5, 1) => Err(alias(name, "su*(4)")),
            (4, 2) => Err(alias(name, "su(2,2)")),
            (3, 3) => Err(alias(name, "sl(4,R)")),
            _ => Ok(RealFormLabel::So(p, q)),
        }
    }

    pub fn sp_r(l: usize) -> Result<Self> {
        match l {
            0 => Err(invalid("sp(0,R)".into(), "l must be at least 1")),
            1 => Err(alias("sp(1,R)".into(), "sl(2,R)")),
            _ => Ok(RealFormLabel::SpR(l)),
        }
    }

    pub fn sp(p: usize, q: usize) -> Result<Self> {
        let (p, q) = (p.max(q), p.min(q));
        let name = format!("sp({p},{q})");
        if q == 0 {
            return Err(Error::Compact(name));
        }
        Ok(RealFormLabel::Sp(p, q))
    }

    pub fn so_star(n: usize) -> Result<Self> {
        let name = format!("so*({})", 2 * n);
        match n {
            0 | 1 => Err(invalid(name, "n must be at least 2")),
            2 => Err(invalid(name, "not simple")),
            3 => Err(alias(name, "su(3,1)")),
            _ => Ok(RealFormLabel::SoStar(n)),
        }
    }

    pub fn complex(t: SimpleType) -> Self {
        RealFormLabel::Complex(t)
    }

    /// Type of the complexification (for complex labels, the type itself).
    pub fn simple_type(&self) -> SimpleType {
        use RealFormLabel::*;
        match *self {
            SlR(n) => SimpleType::a(n - 1),
            SuStar(k) => SimpleType::a(2 * k - 1),
            Su(p, q) => SimpleType::a(p + q - 1),
            So(p, q) if (p + q) % 2 == 1 => SimpleType::b((p + q - 1) / 2),
            So(p, q) => SimpleType::d((p + q) / 2),
            SpR(l) => SimpleType::c(l),
            Sp(p, q) => SimpleType::c(p + q),
            SoStar(n) => SimpleType::d(n),
            Exceptional(f) => f.data().0,
            Complex(t) => t,
        }
    }

    pub fn rank(&self) -> usize {
        self.simple_type().rank()
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, RealFormLabel::Complex(_))
    }

    /// The split real form of the same type, which complex labels reduce to.
    pub fn split_form(t: SimpleType) -> RealFormLabel {
        let l = t.rank();
        match t.family() {
            Family::A => RealFormLabel::SlR(l + 1),
            Family::B => RealFormLabel::So(l + 1, l),
            Family::C => RealFormLabel::SpR(l),
            Family::D => RealFormLabel::So(l, l),
            Family::E => RealFormLabel::Exceptional(match l {
                6 => ExceptionalForm::E6Split,
                7 => ExceptionalForm::E7Split,
                _ => ExceptionalForm::E8Split,
            }),
            Family::F => RealFormLabel::Exceptional(ExceptionalForm::F4Split),
            Family::G => RealFormLabel::Exceptional(ExceptionalForm::G2Split),
        }
    }

    /// The label whose Satake diagram and basis tables apply: complex labels
    /// reduce to the split form, everything else to itself.
    pub fn reduced(&self) -> RealFormLabel {
        match self {
            RealFormLabel::Complex(t) => Self::split_form(*t),
            other => other.clone(),
        }
    }

    /// Every label whose underlying type has rank at most `bound`, in a
    /// fixed order. Exceptional labels are always included.
    pub fn catalog(bound: usize) -> Vec<RealFormLabel> {
        use RealFormLabel::*;
        let mut out = Vec::new();
        for n in 2..=bound + 1 {
            out.push(SlR(n));
        }
        for k in 2..=bound.div_ceil(2) {
            out.push(SuStar(k));
        }
        for l in 1..=bound {
            for q in 1..=l.div_ceil(2) {
                out.push(Su(l + 1 - q, q));
            }
        }
        for l in 2..=bound {
            for q in 1..=l {
                out.push(So(2 * l + 1 - q, q));
            }
        }
        for l in 2..=bound {
            out.push(SpR(l));
        }
        for l in 2..=bound {
            for q in 1..=l / 2 {
                out.push(Sp(l - q, q));
            }
        }
        for l in 4..=bound {
            for q in 1..=l {
                out.push(So(2 * l - q, q));
            }
        }
        for n in 4..=bound {
            out.push(SoStar(n));
        }
        out.extend(ExceptionalForm::ALL.into_iter().map(Exceptional));
        for t in SimpleType::all_up_to(bound.max(8)) {
            if t.is_classical() && t.rank() > bound {
                continue;
            }
            out.push(Complex(t));
        }
        out
    }

    /// The label patterns accepted by the parser, with their constraints.
    pub fn patterns() -> Vec<(&'static str, &'static str)> {
        vec![
            ("sl(n,R)", "n >= 2"),
            ("su*(2k)", "k >= 2"),
            ("su(p,q)", "p >= q >= 1"),
            ("so(p,q)", "p >= q >= 1, p+q = 5 or p+q >= 7"),
            ("sp(l,R)", "l >= 2"),
            ("sp(p,q)", "p >= q >= 1"),
            ("so*(2n)", "n >= 4"),
            ("e6(6)", ""),
            ("e6(2)", ""),
            ("e6(-14)", ""),
            ("e6(-26)", ""),
            ("e7(7)", ""),
            ("e7(-5)", ""),
            ("e7(-25)", ""),
            ("e8(8)", ""),
            ("e8(-24)", ""),
            ("f4(4)", ""),
            ("f4(-20)", ""),
            ("g2(2)", ""),
            ("sl(n,C) | slC(n)", "n >= 2"),
            ("so(n,C) | soC(n)", "n = 5 or n >= 7"),
            ("sp(n,C) | spC(n)", "n >= 2"),
            ("e6C, e7C, e8C, f4C, g2C", ""),
        ]
    }
}

impl fmt::Display for RealFormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RealFormLabel::*;
        match *self {
            SlR(n) => write!(f, "sl({n},R)"),
            SuStar(k) => write!(f, "su*({})", 2 * k),
            Su(p, q) => write!(f, "su({p},{q})"),
            So(p, q) => write!(f, "so({p},{q})"),
            SpR(l) => write!(f, "sp({l},R)"),
            Sp(p, q) => write!(f, "sp({p},{q})"),
            SoStar(n) => write!(f, "so*({})", 2 * n),
            Exceptional(form) => {
                let (t, c) = form.data();
                write!(
                    f,
                    "{}{}({c})",
                    t.family().letter().to_ascii_lowercase(),
                    t.rank()
                )
            }
            Complex(t) => {
                let l = t.rank();
                match t.family() {
                    Family::A => write!(f, "sl({},C)", l + 1),
                    Family::B => write!(f, "so({},C)", 2 * l + 1),
                    Family::C => write!(f, "sp({l},C)"),
                    Family::D => write!(f, "so({},C)", 2 * l),
                    fam => write!(f, "{}{l}C", fam.letter().to_ascii_lowercase()),
                }
            }
        }
    }
}

fn complex_classical(family: &str, n: usize, label: &str) -> Result<RealFormLabel> {
    let t = match family {
        "sl" => match n {
            0 | 1 => return Err(invalid(label.into(), "n must be at least 2")),
            _ => SimpleType::a(n - 1),
        },
        "so" => match n {
            0..=2 | 4 => return Err(invalid(label.into(), "not simple")),
            3 => return Err(alias(label.into(), "sl(2,C)")),
            6 => return Err(alias(label.into(), "sl(4,C)")),
            _ if n % 2 == 1 => SimpleType::b((n - 1) / 2),
            _ => SimpleType::d(n / 2),
        },
        _ => match n {
            0 => return Err(invalid(label.into(), "n must be at least 1")),
            1 => return Err(alias(label.into(), "sl(2,C)")),
            _ => SimpleType::c(n),
        },
    };
    Ok(RealFormLabel::Complex(t))
}

impl FromStr for RealFormLabel {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s: String = input
            .trim()
            .replace('\u{2212}', "-")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_' && *c != '{' && *c != '}')
            .collect();
        let lower = s.to_ascii_lowercase();
        let parse_err = || Error::Parse(input.trim().to_string());

        // exceptional: e6(-14), e6C, e6(C)
        if let Some(first) = lower.chars().next() {
            if matches!(first, 'e' | 'f' | 'g') {
                let family = Family::from_letter(first).ok_or_else(parse_err)?;
                let digits: String = lower[1..]
                    .chars()
                    .take_while(char::is_ascii_digit)
                    .collect();
                let rank: usize = digits.parse().map_err(|_| parse_err())?;
                let t = SimpleType::new(family, rank)?;
                let rest = &lower[1 + digits.len()..];
                if rest == "c" || rest == "(c)" {
                    return Ok(RealFormLabel::Complex(t));
                }
                let inner = rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(parse_err)?;
                let c: i32 = inner.parse().map_err(|_| parse_err())?;
                if c == -((build_root_system(t).positive_roots().len() * 2 + t.rank()) as i32) {
                    return Err(Error::Compact(input.trim().to_string()));
                }
                return ExceptionalForm::from_data(t, c)
                    .map(RealFormLabel::Exceptional)
                    .ok_or_else(|| {
                        invalid(input.trim().into(), "no real form with this character")
                    });
            }
        }

        let open = lower.find('(').ok_or_else(parse_err)?;
        let head = &lower[..open];
        let args = lower[open..]
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(parse_err)?;
        let parts: Vec<&str> = args.split(',').collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| parse_err());
        let label = input.trim().to_string();
        match (head, parts.as_slice()) {
            ("slc" | "soc" | "spc", [n]) => complex_classical(&head[..2], num(n)?, &label),
            ("sl" | "so" | "sp", [n, "c"]) => complex_classical(head, num(n)?, &label),
            ("sl", [n, "r"]) => Self::sl_r(num(n)?),
            ("sp", [l, "r"]) => Self::sp_r(num(l)?),
            ("su*", [m]) => {
                let m = num(m)?;
                if m % 2 == 1 {
                    return Err(invalid(label, "su* needs an even argument"));
                }
                Self::su_star(m / 2)
            }
            ("so*", [m]) => {
                let m = num(m)?;
                if m % 2 == 1 {
                    return Err(invalid(label, "so* needs an even argument"));
                }
                Self::so_star(m / 2)
            }
            ("su", [p, q]) => Self::su(num(p)?, num(q)?),
            ("so", [p, q]) => Self::so(num(p)?, num(q)?),
            ("sp", [p, q]) => Self::sp(num(p)?, num(q)?),
            _ => Err(parse_err()),
        }
    }
}

impl Serialize for RealFormLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Black nodes and arrows on the Dynkin diagram of the complexification.
/// Node indices are 0-based internally (`0` is `a_1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SatakeDiagram {
    underlying: SimpleType,
    black: Vec<usize>,
    arrows: Vec<(usize, usize)>,
}

impl SatakeDiagram {
    pub fn new(
        underlying: SimpleType,
        mut black: Vec<usize>,
        arrows: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let l = underlying.rank();
        let bad = |reason: &str| invalid(underlying.to_string(), reason);
        black.sort_unstable();
        black.dedup();
        if black.iter().any(|&b| b >= l) {
            return Err(bad("black node out of range"));
        }
        let mut arrows: Vec<(usize, usize)> = arrows
            .into_iter()
            .map(|(i, j)| (i.min(j), i.max(j)))
            .collect();
        arrows.sort_unstable();
        arrows.dedup();
        let mut seen = vec![false; l];
        for &(i, j) in &arrows {
            if i == j || j >= l {
                return Err(bad("arrow must join two distinct nodes"));
            }
            if black.contains(&i) || black.contains(&j) {
                return Err(bad("arrows join white nodes only"));
            }
            if seen[i] || seen[j] {
                return Err(bad("a node carries at most one arrow"));
            }
            seen[i] = true;
            seen[j] = true;
        }
        Ok(SatakeDiagram {
            underlying,
            black,
            arrows,
        })
    }

    pub fn split(t: SimpleType) -> Self {
        SatakeDiagram {
            underlying: t,
            black: Vec::new(),
            arrows: Vec::new(),
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.underlying
    }

    pub fn black_nodes(&self) -> &[usize] {
        &self.black
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_black(&self, node: usize) -> bool {
        self.black.binary_search(&node).is_ok()
    }

    pub fn is_split(&self) -> bool {
        self.black.is_empty() && self.arrows.is_empty()
    }

    /// Graphviz rendering: filled circles for black nodes, dashed
    /// double-headed edges for arrows, bond multiplicities as edge labels.
    pub fn to_dot(&self, title: &str) -> String {
        let rs = build_root_system(self.underlying);
        let a = rs.cartan_matrix();
        let l = self.underlying.rank();
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", title.replace('"', "'"));
        let _ = writeln!(out, "  label=\"{title} ({})\";", self.underlying);
        let _ = writeln!(out, "  node [shape=circle, label=\"\", width=0.25];");
        for i in 0..l {
            if self.is_black(i) {
                let _ = writeln!(
                    out,
                    "  a{} [xlabel=\"a_{}\", style=filled, fillcolor=black];",
                    i + 1,
                    i + 1
                );
            } else {
                let _ = writeln!(out, "  a{} [xlabel=\"a_{}\"];", i + 1, i + 1);
            }
        }
        for i in 0..l {
            for j in i + 1..l {
                let m = a[i][j] * a[j][i];
                if m == 0 {
                    continue;
                }
                if m == 1 {
                    let _ = writeln!(out, "  a{} -- a{};", i + 1, j + 1);
                } else {
                    // the arrowhead points at the short root
                    let (long, short) = if a[i][j].abs() > a[j][i].abs() {
                        (j, i)
                    } else {
                        (i, j)
                    };
                    let _ = writeln!(
                        out,
                        "  a{} -- a{} [label=\"{m}\", penwidth={m}, dir=forward];",
                        long + 1,
                        short + 1
                    );
                }
            }
        }
        for &(i, j) in &self.arrows {
            let _ = writeln!(
                out,
                "  a{} -- a{} [style=dashed, dir=both, constraint=false];",
                i + 1,
                j + 1
            );
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for SatakeDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let black: Vec<usize> = self.black.iter().map(|b| b + 1).collect();
        let arrows: Vec<[usize; 2]> = self.arrows.iter().map(|&(i, j)| [i + 1, j + 1]).collect();
        let mut st = s.serialize_struct("SatakeDiagram", 4)?;
        st.serialize_field("type", &self.underlying)?;
        st.serialize_field("rank", &self.underlying.rank())?;
        st.serialize_field("black", &black)?;
        st.serialize_field("arrows", &arrows)?;
        st.end()
    }
}

/// The Satake diagram of `label`. Complex labels use the split diagram.
pub fn satake_catalog(label: &RealFormLabel) -> SatakeDiagram {
    use ExceptionalForm::*;
    use RealFormLabel::*;
    let t = label.simple_type();
    let l = t.rank();
    let (black, arrows): (Vec<usize>, Vec<(usize, usize)>) = match *label {
        SlR(_) | SpR(_) | Complex(_) => (vec![], vec![]),
        SuStar(_) => ((0..l).step_by(2).collect(), vec![]),
        Su(_, q) => {
            // a_i <-> a_{l+1-i} for i <= q, black a_{q+1} .. a_{l-q}
            let arrows = (0..q)
                .filter(|&i| i < l - 1 - i)
                .map(|i| (i, l - 1 - i))
                .collect();
            (
                if l >= 2 * q {
                    (q..l - q).collect()
                } else {
                    vec![]
                },
                arrows,
            )
        }
        So(p, q) if (p + q) % 2 == 1 => ((q..l).collect(), vec![]),
        So(_, q) if q + 2 <= l => ((q..l).collect(), vec![]),
        So(_, q) if q + 1 == l => (vec![], vec![(l - 2, l - 1)]),
        So(..) => (vec![], vec![]),
        Sp(_, q) => {
            let mut black: Vec<usize> = (0..2 * q).step_by(2).collect();
            black.extend(2 * q..l);
            (black, vec![])
        }
        SoStar(n) if n % 2 == 0 => ((0..l - 1).step_by(2).collect(), vec![]),
        SoStar(_) => ((0..l - 2).step_by(2).collect(), vec![(l - 2, l - 1)]),
        Exceptional(form) => match form {
            E6Split | E7Split | E8Split | F4Split | G2Split => (vec![], vec![]),
            E6Quasi => (vec![], vec![(0, 4), (1, 3)]),
            E6Hermitian => (vec![1, 2, 3], vec![(0, 4)]),
            E6Rank2 => (vec![1, 2, 3, 5], vec![]),
            E7Quaternionic => (vec![0, 2, 6], vec![]),
            E7Hermitian => (vec![2, 3, 4, 6], vec![]),
            E8Quaternionic => (vec![3, 4, 5, 7], vec![]),
            F4Rank1 => (vec![0, 1, 2], vec![]),
        },
    };
    SatakeDiagram::new(t, black, arrows).expect("catalog data is well formed")
}

/// Whether `d` has weight 0 on every black node and equal weights on every
/// arrow pair.
pub fn matches(d: &WeightedDiagram, s: &SatakeDiagram) -> Result<bool> {
    if d.simple_type() != s.simple_type() {
        return Err(Error::TypeMismatch {
            expected: s.simple_type(),
            found: d.simple_type(),
        });
    }
    let w = d.weights();
    Ok(s.black.iter().all(|&b| w[b].is_zero()) && s.arrows.iter().all(|&(i, j)| w[i] == w[j]))
}

/// `{d : matches(d, s)}` as a subspace of diagram space.
pub fn matching_subspace(s: &SatakeDiagram) -> RationalSubspace {
    let l = s.simple_type().rank();
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); l];
        v[i] = q(1);
        v
    };
    let mut constraints: Vec<Vec<Rational>> = s.black.iter().map(|&b| unit(b)).collect();
    for &(i, j) in &s.arrows {
        let mut v = unit(i);
        v[j] = q(-1);
        constraints.push(v);
    }
    RationalSubspace::kernel(l, &constraints)
}

/// `Psi(b)`: matching diagrams that are fixed by the opposition involution.
pub fn b_subspace(label: &RealFormLabel) -> RationalSubspace {
    let rs = build_root_system(label.simple_type());
    matching_subspace(&satake_catalog(label)).intersect(&iota_fixed_subspace(&rs))
}

/// A diagram pattern: `None` is a forced zero, `Some(j)` the free parameter
/// `b_j`. Equal parameters mean equal weights.
type Pattern = Vec<Option<usize>>;

fn pattern_subspace(pattern: &Pattern) -> RationalSubspace {
    let l = pattern.len();
    let symbols: std::collections::BTreeSet<usize> = pattern.iter().flatten().copied().collect();
    let vectors: Vec<Vec<Rational>> = symbols
        .iter()
        .map(|&s| {
            pattern
                .iter()
                .map(|&x| if x == Some(s) { q(1) } else { q(0) })
                .collect()
        })
        .collect();
    RationalSubspace::span(l, &vectors)
}

/// `(b_1, b_2, ..., b_2, b_1)` on `len` nodes.
fn palindrome(len: usize) -> Pattern {
    (0..len).map(|i| Some(i.min(len - 1 - i))).collect()
}

/// `Psi(b)` as printed in the per-type tables, entry by entry.
pub fn expected_b_pattern(label: &RealFormLabel) -> Vec<Option<usize>> {
    use ExceptionalForm::*;
    use RealFormLabel::*;
    let t = label.simple_type();
    let l = t.rank();
    let b = Some;
    match *label {
        Complex(t) => expected_b_pattern(&RealFormLabel::split_form(t)),
        SlR(_) => palindrome(l),
        // (0, b_1, 0, b_2, ..., b_2, 0, b_1, 0)
        SuStar(_) => palindrome(l)
            .into_iter()
            .enumerate()
            .map(|(i, x)| if i % 2 == 0 { None } else { x })
            .collect(),
        // (b_1, ..., b_q, 0, ..., 0, b_q, ..., b_1)
        Su(_, q) => palindrome(l)
            .into_iter()
            .map(|x| x.filter(|&j| j < q))
            .collect(),
        So(p, q) if (p + q) % 2 == 1 => (0..l).map(|i| if i < q { b(i) } else { None }).collect(),
        So(_, q) if q + 2 <= l => (0..l).map(|i| if i < q { b(i) } else { None }).collect(),
        // (b_1, ..., b_{l-2}, b_{l-1}, b_{l-1}) on D_l
        So(_, q) if q + 1 == l => (0..l).map(|i| b(i.min(l - 2))).collect(),
        So(..) if l.is_multiple_of(2) => (0..l).map(b).collect(),
        So(..) => (0..l).map(|i| b(i.min(l - 2))).collect(),
        SpR(_) => (0..l).map(b).collect(),
        // (0, b_1, 0, b_2, ..., 0, b_q, 0, ..., 0)
        Sp(_, q) => (0..l)
            .map(|i| {
                if i % 2 == 1 && i < 2 * q {
                    b(i / 2)
                } else {
                    None
                }
            })
            .collect(),
        // (0, b_1, 0, ..., b_{m-1}, 0, b_m) with a_{2m-1} = 0 and a_{2m} = b_m
        SoStar(n) if n % 2 == 0 => (0..l)
            .map(|i| match i {
                _ if i == l - 1 => b(l / 2 - 1),
                _ if i % 2 == 1 && i < l - 2 => b(i / 2),
                _ => None,
            })
            .collect(),
        // (0, b_1, 0, ..., b_{m-1}, 0, b_m, b_m)
        SoStar(_) => (0..l)
            .map(|i| match i {
                _ if i >= l - 2 => b((l - 1) / 2 - 1),
                _ if i % 2 == 1 => b(i / 2),
                _ => None,
            })
            .collect(),
        Exceptional(form) => {
            let raw: &[i8] = match form {
                E6Split | E6Quasi => &[1, 2, 3, 2, 1, 4],
                E6Hermitian => &[1, 0, 0, 0, 1, 2],
                E6Rank2 => &[1, 0, 0, 0, 1, 0],
                E7Split => &[1, 2, 3, 4, 5, 6, 7],
                E7Quaternionic => &[0, 1, 0, 2, 3, 4, 0],
                E7Hermitian => &[1, 2, 0, 0, 0, 3, 0],
                E8Split => &[1, 2, 3, 4, 5, 6, 7, 8],
                E8Quaternionic => &[1, 2, 3, 0, 0, 0, 4, 0],
                F4Split => &[1, 2, 3, 4],
                F4Rank1 => &[0, 0, 0, 1],
                G2Split => &[1, 2],
            };
            raw.iter()
                .map(|&x| if x == 0 { None } else { b(x as usize - 1) })
                .collect()
        }
    }
}

/// The golden `Psi(b)` subspace, built from [`expected_b_pattern`].
pub fn expected_b_form(label: &RealFormLabel) -> RationalSubspace {
    pattern_subspace(&expected_b_pattern(label))
}

/// Renders a pattern the way the tables print it, e.g. `(b_1,0,0,0,b_1,b_2)`.
pub fn format_pattern(pattern: &[Option<usize>]) -> String {
    let items: Vec<String> = pattern
        .iter()
        .map(|x| match x {
            None => "0".to_string(),
            Some(j) => format!("b_{}", j + 1),
        })
        .collect();
    format!("({})", items.join(","))
}
