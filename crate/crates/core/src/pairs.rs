//! Symmetric pairs `(g, h)` with `g` simple for which `G/H` admits a proper
//! action of `SL(2,R)`, stored as parameterized rows.
//!
//! Parameters range over `k >= 1`, `m >= 1`, `n >= 2`, `p, q >= 1` and
//! `i, j >= 0`; every argument of `h` must also be nonnegative. A pattern is
//! only instantiated where `g` is a simple noncompact label accepted by
//! [`RealFormLabel`], so aliases such as `so(3,3)` never match.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::satake::RealFormLabel;

/// Names under which the defining condition of the table is referred to.
pub const CONDITION_NAMES: [&str; 2] = ["\u{22c6}", "3"];

type Instantiate = fn(&[i64]) -> (String, String);
type Constraint = fn(&[i64]) -> bool;

/// One row of the table.
#[derive(Clone, Copy)]
pub struct SymmetricPairEntry {
    pub row: usize,
    pub g: &'static str,
    pub h: &'static str,
    /// Constraint as printed, empty when the row has none.
    pub constraint: &'static str,
    pub parameters: &'static [&'static str],
    instantiate: Instantiate,
    holds: Constraint,
}

impl std::fmt::Debug for SymmetricPairEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SymmetricPairEntry")
            .field("row", &self.row)
            .field("g", &self.g)
            .field("h", &self.h)
            .field("constraint", &self.constraint)
            .finish()
    }
}

impl PartialEq for SymmetricPairEntry {
    fn eq(&self, other: &Self) -> bool {
        self.row == other.row
    }
}

impl Eq for SymmetricPairEntry {}

impl SymmetricPairEntry {
    /// `(g, h)` at the given parameter values, in the parameter order of
    /// [`Self::parameters`]. `None` if some parameter or `h` argument is out
    /// of range, or `g` is not a valid label.
    pub fn instantiate(&self, values: &[i64]) -> Option<(RealFormLabel, String)> {
        if values.len() != self.parameters.len() {
            return None;
        }
        let in_range = self
            .parameters
            .iter()
            .zip(values)
            .all(|(&name, &v)| v >= minimum(name));
        if !in_range {
            return None;
        }
        let (g, h) = (self.instantiate)(values);
        if self.is_parameterized() && h_arguments(&h).iter().any(|&x| x < 0) {
            return None;
        }
        let g: RealFormLabel = g.parse().ok()?;
        Some((g, h))
    }

    /// Whether the row's constraint holds at `values`.
    pub fn constraint_holds(&self, values: &[i64]) -> bool {
        (self.holds)(values)
    }

    pub fn is_parameterized(&self) -> bool {
        !self.parameters.is_empty()
    }
}

impl Serialize for SymmetricPairEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SymmetricPairEntry", 5)?;
        st.serialize_field("row", &self.row)?;
        st.serialize_field("g", self.g)?;
        st.serialize_field("h", self.h)?;
        st.serialize_field("constraint", self.constraint)?;
        st.serialize_field("parameters", self.parameters)?;
        st.end()
    }
}

fn minimum(name: &str) -> i64 {
    match name {
        "k" | "m" | "p" | "q" => 1,
        "n" => 2,
        _ => 0,
    }
}

fn h_arguments(h: &str) -> Vec<i64> {
    h.split(|c: char| !(c.is_ascii_digit() || c == '-'))
        .filter_map(|t| t.parse().ok())
        .collect()
}

fn min_sum(v: &[i64]) -> bool {
    let (p, q, i, j) = (v[0], v[1], v[2], v[3]);
    p.min(q) > i.min(j) + (p - i).min(q - j)
}

fn always(_: &[i64]) -> bool {
    true
}

macro_rules! fixed {
    ($row:expr, $g:expr, $h:expr) => {
        SymmetricPairEntry {
            row: $row,
            g: $g,
            h: $h,
            constraint: "",
            parameters: &[],
            instantiate: |_| ($g.to_string(), $h.to_string()),
            holds: always,
        }
    };
}

static TABLE: [SymmetricPairEntry; 45] = [
    SymmetricPairEntry {
        row: 1,
        g: "sl(2k,R)",
        h: "sl(k,C) \u{2295} so(2)",
        constraint: "",
        parameters: &["k"],
        instantiate: |v| {
            (
                format!("sl({},R)", 2 * v[0]),
                format!("sl({},C) \u{2295} so(2)", v[0]),
            )
        },
        holds: always,
    },
    SymmetricPairEntry {
        row: 2,
        g: "sl(n,R)",
        h: "so(n-i,i)",
        constraint: "2i < n-1",
        parameters: &["n", "i"],
        instantiate: |v| {
            (
                format!("sl({},R)", v[0]),
                format!("so({},{})", v[0] - v[1], v[1]),
            )
        },
        holds: |v| 2 * v[1] < v[0] - 1,
    },
    SymmetricPairEntry {
        row: 3,
        g: "su*(2k)",
        h: "sp(k-i,i)",
        constraint: "2i < k-1",
        parameters: &["k", "i"],
        instantiate: |v| {
            (
                format!("su*({})", 2 * v[0]),
                format!("sp({},{})", v[0] - v[1], v[1]),
            )
        },
        holds: |v| 2 * v[1] < v[0] - 1,
    },
    SymmetricPairEntry {
        row: 4,
        g: "su(2p,2q)",
        h: "sp(p,q)",
        constraint: "",
        parameters: &["p", "q"],
        instantiate: |v| {
            (
                format!("su({},{})", 2 * v[0], 2 * v[1]),
                format!("sp({},{})", v[0], v[1]),
            )
        },
        holds: always,
    },
    SymmetricPairEntry {
        row: 5,
        g: "su(n,n)",
        h: "so*(2n)",
        constraint: "",
        parameters: &["n"],
        instantiate: |v| {
            (
                format!("su({},{})", v[0], v[0]),
                format!("so*({})", 2 * v[0]),
            )
        },
        holds: always,
    },
    SymmetricPairEntry {
        row: 6,
        g: "su(p,q)",
        h: "su(i,j) \u{2295} su(p-i,q-j) \u{2295} so(2)",
        constraint: "min{p,q} > min{i,j} + min{p-i,q-j}",
        parameters: &["p", "q", "i", "j"],
        instantiate: |v| {
            (
                format!("su({},{})", v[0], v[1]),
                format!(
                    "su({},{}) \u{2295} su({},{}) \u{2295} so(2)",
                    v[2],
                    v[3],
                    v[0] - v[2],
                    v[1] - v[3]
                ),
            )
        },
        holds: min_sum,
    },
    SymmetricPairEntry {
        row: 7,
        g: "so(p,q)",
        h: "so(i,j) \u{2295} so(p-i,q-j)",
        constraint: "p+q odd, min{p,q} > min{i,j} + min{p-i,q-j}",
        parameters: &["p", "q", "i", "j"],
        instantiate: |v| {
            (
                format!("so({},{})", v[0], v[1]),
                format!(
                    "so({},{}) \u{2295} so({},{})",
                    v[2],
                    v[3],
                    v[0] - v[2],
                    v[1] - v[3]
                ),
            )
        },
        holds: |v| (v[0] + v[1]) % 2 == 1 && min_sum(v),
    },
    SymmetricPairEntry {
        row: 8,
        g: "sp(n,R)",
        h: "su(n-i,i) \u{2295} so(2)",
        constraint: "",
        parameters: &["n", "i"],
        instantiate: |v| {
            (
                format!("sp({},R)", v[0]),
                format!("su({},{}) \u{2295} so(2)", v[0] - v[1], v[1]),
            )
        },
        holds: always,
    },
    SymmetricPairEntry {
        row: 9,
        g: "sp(2k,R)",
        h: "sp(k,C)",
        constraint: "",
        parameters: &["k"],
        instantiate: |v| (format!("sp({},R)", 2 * v[0]), format!("sp({},C)", v[0])),
        holds: always,
    },
    SymmetricPairEntry {
        row: 10,
        g: "sp(p,q)",
        h: "sp(i,j) \u{2295} sp(p-i,q-j)",
        constraint: "min{p,q} > min{i,j} + min{p-i,q-j}",
        parameters: &["p", "q", "i", "j"],
        instantiate: |v| {
            (
                format!("sp({},{})", v[0], v[1]),
                format!(
                    "sp({},{}) \u{2295} sp({},{})",
                    v[2],
                    v[3],
                    v[0] - v[2],
                    v[1] - v[3]
                ),
            )
        },
        holds: min_sum,
    },
    SymmetricPairEntry {
        row: 11,
        g: "so(p,q)",
        h: "so(i,j) \u{2295} so(p-i,q-j)",
        constraint: "p+q even, min{p,q} > min{i,j} + min{p-i,q-j}, unless p=q=2m+1 and |i-j|=1",
        parameters: &["p", "q", "i", "j"],
        instantiate: |v| {
            (
                format!("so({},{})", v[0], v[1]),
                format!(
                    "so({},{}) \u{2295} so({},{})",
                    v[2],
                    v[3],
                    v[0] - v[2],
                    v[1] - v[3]
                ),
            )
        },
        holds: |v| {
            let excluded = v[0] == v[1] && v[0] % 2 == 1 && v[0] >= 3 && (v[2] - v[3]).abs() == 1;
            (v[0] + v[1]) % 2 == 0 && min_sum(v) && !excluded
        },
    },
    SymmetricPairEntry {
        row: 12,
        g: "so(2p,2q)",
        h: "su(p,q) \u{2295} so(2)",
        constraint: "",
        parameters: &["p", "q"],
        instantiate: |v| {
            (
                format!("so({},{})", 2 * v[0], 2 * v[1]),
                format!("su({},{}) \u{2295} so(2)", v[0], v[1]),
            )
        },
        holds: always,
    },
    SymmetricPairEntry {
        row: 13,
        g: "so*(2k)",
        h: "su(k-i,i) \u{2295} so(2)",
        constraint: "2i < k-1",
        parameters: &["k", "i"],
        instantiate: |v| {
            (
                format!("so*({})", 2 * v[0]),
                format!("su({},{}) \u{2295} so(2)", v[0] - v[1], v[1]),
            )
        },
        holds: |v| 2 * v[1] < v[0] - 1,
    },
    SymmetricPairEntry {
        row: 14,
        g: "so(k,k)",
        h: "so(k,C) \u{2295} so(2)",
        constraint: "",
        parameters: &["k"],
        instantiate: |v| {
            (
                format!("so({},{})", v[0], v[0]),
                format!("so({},C) \u{2295} so(2)", v[0]),
            )
        },
        holds: always,
    },
    SymmetricPairEntry {
        row: 15,
        g: "so*(4m)",
        h: "so*(4m-4i+2) \u{2295} so*(4i-2)",
        constraint: "",
        parameters: &["m", "i"],
        instantiate: |v| {
            (
                format!("so*({})", 4 * v[0]),
                format!(
                    "so*({}) \u{2295} so*({})",
                    4 * v[0] - 4 * v[1] + 2,
                    4 * v[1] - 2
                ),
            )
        },
        holds: always,
    },
    fixed!(16, "e6(6)", "sp(2,2)"),
    fixed!(17, "e6(6)", "su*(6) \u{2295} su(2)"),
    fixed!(18, "e6(2)", "so*(10) \u{2295} so(2)"),
    fixed!(19, "e6(2)", "su(4,2) \u{2295} su(2)"),
    fixed!(20, "e6(2)", "sp(3,1)"),
    fixed!(21, "e6(-14)", "f4(-20)"),
    fixed!(22, "e7(7)", "e6(2) \u{2295} so(2)"),
    fixed!(23, "e7(7)", "su(4,4)"),
    fixed!(24, "e7(7)", "so*(12) \u{2295} su(2)"),
    fixed!(25, "e7(7)", "su*(8)"),
    fixed!(26, "e7(-5)", "e6(-14) \u{2295} so(2)"),
    fixed!(27, "e7(-5)", "su(6,2)"),
    fixed!(28, "e7(-25)", "e6(-14) \u{2295} so(2)"),
    fixed!(29, "e7(-25)", "su(6,2)"),
    fixed!(30, "e8(8)", "e7(-5) \u{2295} su(2)"),
    fixed!(31, "e8(8)", "so*(16)"),
    fixed!(32, "f4(4)", "sp(2,1) \u{2295} su(2)"),
    SymmetricPairEntry {
        row: 33,
        g: "sl(2k,C)",
        h: "su*(2k)",
        constraint: "",
        parameters: &["k"],
        instantiate: |v| (format!("sl({},C)", 2 * v[0]), format!("su*({})", 2 * v[0])),
        holds: always,
    },
    SymmetricPairEntry {
        row: 34,
        g: "sl(n,C)",
        h: "su(n-i,i)",
        constraint: "2i < n-1",
        parameters: &["n", "i"],
        instantiate: |v| {
            (
                format!("sl({},C)", v[0]),
                format!("su({},{})", v[0] - v[1], v[1]),
            )
        },
        holds: |v| 2 * v[1] < v[0] - 1,
    },
    SymmetricPairEntry {
        row: 35,
        g: "so(2k+1,C)",
        h: "so(2k+1-i,i)",
        constraint: "i < k",
        parameters: &["k", "i"],
        instantiate: |v| {
            (
                format!("so({},C)", 2 * v[0] + 1),
                format!("so({},{})", 2 * v[0] + 1 - v[1], v[1]),
            )
        },
        holds: |v| v[1] < v[0],
    },
    SymmetricPairEntry {
        row: 36,
        g: "sp(n,C)",
        h: "sp(n-i,i)",
        constraint: "",
        parameters: &["n", "i"],
        instantiate: |v| {
            (
                format!("sp({},C)", v[0]),
                format!("sp({},{})", v[0] - v[1], v[1]),
            )
        },
        holds: always,
    },
    SymmetricPairEntry {
        row: 37,
        g: "so(2k,C)",
        h: "so(2k-i,i)",
        constraint: "i < k, unless k=i+1=2m+1",
        parameters: &["k", "i"],
        instantiate: |v| {
            (
                format!("so({},C)", 2 * v[0]),
                format!("so({},{})", 2 * v[0] - v[1], v[1]),
            )
        },
        holds: |v| v[1] < v[0] && !(v[0] == v[1] + 1 && v[0] % 2 == 1 && v[0] >= 3),
    },
    SymmetricPairEntry {
        row: 38,
        g: "so(4m,C)",
        h: "so(4m-2i+1,C) \u{2295} so(2i-1,C)",
        constraint: "",
        parameters: &["m", "i"],
        instantiate: |v| {
            (
                format!("so({},C)", 4 * v[0]),
                format!(
                    "so({},C) \u{2295} so({},C)",
                    4 * v[0] - 2 * v[1] + 1,
                    2 * v[1] - 1
                ),
            )
        },
        holds: always,
    },
    SymmetricPairEntry {
        row: 39,
        g: "so(2k,C)",
        h: "so*(2k)",
        constraint: "",
        parameters: &["k"],
        instantiate: |v| (format!("so({},C)", 2 * v[0]), format!("so*({})", 2 * v[0])),
        holds: always,
    },
    fixed!(40, "e6C", "e6(-14)"),
    fixed!(41, "e6C", "e6(-26)"),
    fixed!(42, "e7C", "e7(-5)"),
    fixed!(43, "e7C", "e7(-25)"),
    fixed!(44, "e8C", "e8(-24)"),
    fixed!(45, "f4C", "f4(-20)"),
];

/// The full table.
pub fn proper_sl2_pairs() -> &'static [SymmetricPairEntry] {
    &TABLE
}

/// Canonical form of an `h` description: lowercase, no whitespace, `+` for
/// direct sums, ASCII minus, summands sorted.
pub fn normalize_subalgebra(h: &str) -> String {
    let cleaned: String = h
        .replace('\u{2295}', "+")
        .replace("\\oplus", "+")
        .replace('\u{2212}', "-")
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}' | '$' | '\\'))
        .collect::<String>()
        .to_ascii_lowercase();
    let mut parts: Vec<&str> = cleaned.split('+').filter(|p| !p.is_empty()).collect();
    parts.sort_unstable();
    parts.join("+")
}

/// A successful [`lookup_pair`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairMatch {
    pub entry: &'static SymmetricPairEntry,
    pub parameters: Vec<(&'static str, i64)>,
}

/// Finds the row containing `(g, h)` with its constraint satisfied.
///
/// Parameters are searched up to the largest integer in the query (plus a
/// margin), which covers every row since each parameter is bounded by some
/// argument of `g` or `h`.
pub fn lookup_pair(g: &str, h: &str) -> Result<Option<PairMatch>> {
    let label: RealFormLabel = g.parse()?;
    let target_h = normalize_subalgebra(h);
    if target_h.is_empty() || !target_h.contains('(') {
        return Err(Error::Parse(h.to_string()));
    }
    let bound = h_arguments(&format!("{label} {target_h}"))
        .into_iter()
        .map(i64::abs)
        .max()
        .unwrap_or(0)
        + 2;
    for entry in proper_sl2_pairs() {
        let arity = entry.parameters.len();
        let mut values = vec![0i64; arity];
        loop {
            if let Some((g_inst, h_inst)) = entry.instantiate(&values) {
                if g_inst == label
                    && normalize_subalgebra(&h_inst) == target_h
                    && entry.constraint_holds(&values)
                {
                    return Ok(Some(PairMatch {
                        entry,
                        parameters: entry.parameters.iter().copied().zip(values).collect(),
                    }));
                }
            }
            let mut k = 0;
            while k < arity {
                values[k] += 1;
                if values[k] <= bound {
                    break;
                }
                values[k] = 0;
                k += 1;
            }
            if k == arity {
                break;
            }
        }
    }
    Ok(None)
}

/// Rows whose `g` pattern can instantiate to `g`.
pub fn rows_for(g: &str) -> Result<Vec<&'static SymmetricPairEntry>> {
    let label: RealFormLabel = g.parse()?;
    let text = label.to_string();
    let bound = h_arguments(&text)
        .into_iter()
        .map(i64::abs)
        .max()
        .unwrap_or(0)
        + 2;
    let rows = proper_sl2_pairs()
        .iter()
        .filter(|entry| {
            let arity = entry.parameters.len();
            let mut values = vec![0i64; arity];
            loop {
                if (entry.instantiate)(&values).0 == text
                    && entry
                        .parameters
                        .iter()
                        .zip(&values)
                        .all(|(&n, &v)| v >= minimum(n))
                {
                    return true;
                }
                let mut k = 0;
                while k < arity {
                    values[k] += 1;
                    if values[k] <= bound {
                        break;
                    }
                    values[k] = 0;
                    k += 1;
                }
                if k == arity {
                    return false;
                }
            }
        })
        .collect();
    Ok(rows)
}

/// The table as CSV with a header row.
pub fn to_csv(entries: &[&SymmetricPairEntry]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["row", "g", "h", "constraint"])
        .expect("in-memory write");
    for e in entries {
        w.write_record([e.row.to_string().as_str(), e.g, e.h, e.constraint])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
