//! Exact rational vectors and subspaces.
//!
//! Subspaces are stored in reduced row-echelon form with unit pivots, so two
//! subspaces are equal exactly when their stored bases are equal.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Brings `rows` into reduced row-echelon form in place, drops zero rows and
/// returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..ncols {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of a list of vectors of common length `ncols`.
pub fn rank(vectors: &[Vec<Rational>], ncols: usize) -> usize {
    let mut rows = vectors.to_vec();
    rref(&mut rows, ncols).len()
}

/// Solves `a x = b` for one solution, or `None` if the system is inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &c) in rows.iter().zip(&pivots) {
        x[c] = row[ncols].clone();
    }
    Some(x)
}

/// A subspace of `Q^n`, kept in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSubspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl RationalSubspace {
    pub fn zero(ambient: usize) -> Self {
        RationalSubspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        RationalSubspace { ambient, basis }
    }

    /// The span of `vectors`. Every vector must have length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut rows: Vec<Vec<Rational>> = vectors.to_vec();
        assert!(rows.iter().all(|v| v.len() == ambient));
        rref(&mut rows, ambient);
        RationalSubspace {
            ambient,
            basis: rows,
        }
    }

    /// The common kernel `{x : c . x = 0 for every row c}`.
    pub fn kernel(ambient: usize, constraints: &[Vec<Rational>]) -> Self {
        let mut rows = constraints.to_vec();
        let pivots = rref(&mut rows, ambient);
        let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); ambient];
                v[f] = Rational::one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect();
        Self::span(ambient, &vectors)
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Linear functionals vanishing exactly on this subspace.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        Self::kernel(self.ambient, &self.basis).basis
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        let mut constraints = self.annihilator();
        constraints.extend(other.annihilator());
        Self::kernel(self.ambient, &constraints)
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &rows)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank(&rows, self.ambient) == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Debug for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis.iter().map(|v| fmt_vec(v)).collect();
        write!(f, "span[{}]{{{}}}", self.ambient, rows.join(", "))
    }
}

impl fmt::Display for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for RationalSubspace {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(|x| x.to_string()).collect())
            .collect();
        let mut st = s.serialize_struct("RationalSubspace", 2)?;
        st.serialize_field("ambient_dimension", &self.ambient)?;
        st.serialize_field("basis", &rows)?;
        st.end()
    }
}

/// Parses `"3"`, `"-1/2"` style rationals.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn is_nonnegative_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}
