//! A Chevalley-basis model of a complex simple Lie algebra and a randomized
//! test for whether a weighted diagram is the characteristic of an sl2-triple.
//!
//! Structure constants follow the extraspecial-pair convention: for every
//! non-simple positive root the extraspecial pair gets `N = +(p+1)`, and all
//! other constants are forced by the standard identities.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::rational::{q, q_frac, solve, Rational};
use crate::rootcore::{
    build_root_system, rational_json, Root, RootSystemData, SimpleType, WeightedDiagram,
};

/// Default rank above which [`build_chevalley`] refuses to build a model.
pub const DEFAULT_RANK_BOUND: usize = 6;

/// Coordinates are `h_1..h_l` (simple coroots), then `e_alpha` for the
/// positive roots, then `e_{-alpha}` in the same order.
#[derive(Debug, Clone)]
pub struct ChevalleyModel {
    root_system: RootSystemData,
    roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    structure_constants: HashMap<(usize, usize), i64>,
    table: Vec<Vec<Vec<(usize, i64)>>>,
}

/// Sparse element of the model, as a dense coefficient vector.
pub type Element = Vec<Rational>;

impl ChevalleyModel {
    pub fn root_system(&self) -> &RootSystemData {
        &self.root_system
    }

    pub fn dimension(&self) -> usize {
        self.rank() + self.roots.len()
    }

    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    /// All roots: positive ones first, then their negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Coordinate of `e_alpha`.
    pub fn root_coordinate(&self, alpha: &[i64]) -> Option<usize> {
        self.root_index.get(alpha).map(|i| self.rank() + i)
    }

    /// `N_{alpha,beta}` with `[e_alpha, e_beta] = N e_{alpha+beta}`.
    pub fn structure_constant(&self, alpha: &[i64], beta: &[i64]) -> Option<i64> {
        let a = *self.root_index.get(alpha)?;
        let b = *self.root_index.get(beta)?;
        self.structure_constants.get(&(a, b)).copied()
    }

    pub fn zero(&self) -> Element {
        vec![Rational::zero(); self.dimension()]
    }

    pub fn basis_bracket(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a][b]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Element {
        let mut out = self.zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for &(k, n) in &self.table[a][b] {
                    out[k] += &c * q(n);
                }
            }
        }
        out
    }

    /// Cartan element `H` with `alpha_i(H)` equal to the diagram weights.
    pub fn cartan_element(&self, d: &WeightedDiagram) -> Element {
        let l = self.rank();
        let a = self.root_system.cartan_matrix();
        // sum_k x_k <alpha_i, alpha_k^vee> = d_i
        let rows: Vec<Vec<Rational>> = (0..l)
            .map(|i| (0..l).map(|k| q(a[k][i])).collect())
            .collect();
        let x = solve(&rows, d.weights(), l).expect("Cartan matrix is invertible");
        let mut h = self.zero();
        h[..l].clone_from_slice(&x);
        h
    }

    /// Checks antisymmetry and the Jacobi identity on basis triples: all of
    /// them when `samples` is `None`, otherwise that many random ones.
    pub fn check_axioms(&self, samples: Option<usize>, seed: u64) -> bool {
        let n = self.dimension();
        let unit = |i: usize| {
            let mut v = self.zero();
            v[i] = Rational::one();
            v
        };
        for a in 0..n {
            for b in 0..n {
                let mut ab = self.table[a][b].clone();
                let mut ba: Vec<(usize, i64)> =
                    self.table[b][a].iter().map(|&(k, c)| (k, -c)).collect();
                ab.sort_unstable();
                ba.sort_unstable();
                if ab != ba {
                    return false;
                }
            }
        }
        let jacobi = |a: usize, b: usize, c: usize| {
            let (x, y, z) = (unit(a), unit(b), unit(c));
            let t1 = self.bracket(&x, &self.bracket(&y, &z));
            let t2 = self.bracket(&y, &self.bracket(&z, &x));
            let t3 = self.bracket(&z, &self.bracket(&x, &y));
            t1.iter()
                .zip(&t2)
                .zip(&t3)
                .all(|((p, q2), r)| (p + q2 + r).is_zero())
        };
        match samples {
            None => (0..n).all(|a| (0..n).all(|b| (b..n).all(|c| jacobi(a, b, c)))),
            Some(k) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let idx: Vec<usize> = (0..n).collect();
                (0..k).all(|_| {
                    let a = *idx.choose(&mut rng).unwrap();
                    let b = *idx.choose(&mut rng).unwrap();
                    let c = *idx.choose(&mut rng).unwrap();
                    jacobi(a, b, c)
                })
            }
        }
    }
}

/// Builds the model for `t`, refusing ranks above [`DEFAULT_RANK_BOUND`].
pub fn build_chevalley(t: SimpleType) -> Result<ChevalleyModel> {
    build_chevalley_with_bound(t, DEFAULT_RANK_BOUND)
}

pub fn build_chevalley_with_bound(t: SimpleType, bound: usize) -> Result<ChevalleyModel> {
    if t.rank() > bound {
        return Err(Error::OracleBound {
            rank: t.rank(),
            bound,
        });
    }
    let rs = build_root_system(t);
    let l = rs.rank();
    let pos = rs.positive_roots().to_vec();
    let np = pos.len();
    let mut roots = pos.clone();
    roots.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Root>()));
    let root_index: HashMap<Root, usize> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();
    let add = |a: &Root, b: &Root| -> Root { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let sub = |a: &Root, b: &Root| -> Root { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let len = |a: &Root| rs.inner(a, a);

    // N for positive pairs, filled by increasing height of the sum
    let mut npos: HashMap<(usize, usize), i64> = HashMap::new();
    let string_p = |alpha: &Root, beta: &Root| -> i64 {
        // largest p with beta - p alpha a root
        let mut p = 0;
        let mut v = sub(beta, alpha);
        while root_index.contains_key(&v) {
            p += 1;
            v = sub(&v, alpha);
        }
        p
    };

    // N_{x,y} for any x, y whose sum is a root, using only positive pairs
    // with smaller sums
    fn general(
        npos: &HashMap<(usize, usize), i64>,
        root_index: &HashMap<Root, usize>,
        np: usize,
        len: &dyn Fn(&Root) -> i64,
        x: &Root,
        y: &Root,
    ) -> Rational {
        let ix = root_index[x];
        let iy = root_index[y];
        let neg = |r: &Root| -> Root { r.iter().map(|c| -c).collect() };
        let sum: Root = x.iter().zip(y).map(|(a, b)| a + b).collect();
        match (ix < np, iy < np) {
            (true, true) => q(npos[&(ix, iy)]),
            (false, false) => -general(npos, root_index, np, len, &neg(x), &neg(y)),
            (false, true) => -general(npos, root_index, np, len, y, x),
            (true, false) => {
                // x + y + z = 0 with z = -(x+y)
                let z = neg(&sum);
                let rho_pos = root_index[&sum] < np;
                if rho_pos {
                    // x = b + rho with b = -y: N_{x,y} = (z,z)/(x,x) N_{y,z}
                    let nyz = general(npos, root_index, np, len, y, &z);
                    q_frac(len(&z), len(x)) * nyz
                } else {
                    // N_{x,y} = (z,z)/(y,y) N_{z,x}
                    let nzx = general(npos, root_index, np, len, &z, x);
                    q_frac(len(&z), len(y)) * nzx
                }
            }
        }
    }

    for xi_idx in 0..np {
        let xi = &pos[xi_idx];
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..np {
            for b in a + 1..np {
                if add(&pos[a], &pos[b]) == *xi {
                    pairs.push((a, b));
                }
            }
        }
        let Some(&(g, d)) = pairs.first() else {
            continue;
        };
        let p = string_p(&pos[g], &pos[d]);
        npos.insert((g, d), p + 1);
        npos.insert((d, g), -(p + 1));
        let (gamma, delta) = (pos[g].clone(), pos[d].clone());
        let neg = |r: &Root| -> Root { r.iter().map(|c| -c).collect() };
        let n_gd = q(p + 1);
        for &(a, b) in &pairs[1..] {
            let (alpha, beta) = (pos[a].clone(), pos[b].clone());
            let mut s = Rational::zero();
            let bg = sub(&beta, &gamma);
            if root_index.contains_key(&bg) {
                let t = general(&npos, &root_index, np, &len, &beta, &neg(&gamma))
                    * general(&npos, &root_index, np, &len, &alpha, &neg(&delta));
                s += t / q(len(&bg));
            }
            let ag = sub(&alpha, &gamma);
            if root_index.contains_key(&ag) {
                let t = general(&npos, &root_index, np, &len, &neg(&gamma), &alpha)
                    * general(&npos, &root_index, np, &len, &beta, &neg(&delta));
                s += t / q(len(&ag));
            }
            // N_{-gamma,-delta} = -N_{gamma,delta}
            let value = q(len(xi)) * s / n_gd.clone();
            assert!(value.is_integer(), "non-integral structure constant");
            let v: i64 = value.to_integer().try_into().expect("small constant");
            npos.insert((a, b), v);
            npos.insert((b, a), -v);
        }
    }

    let mut structure_constants = HashMap::new();
    for (i, x) in roots.iter().enumerate() {
        for (j, y) in roots.iter().enumerate() {
            let s = add(x, y);
            if root_index.contains_key(&s) {
                let v = general(&npos, &root_index, np, &len, x, y);
                let v: i64 = v.to_integer().try_into().expect("small constant");
                structure_constants.insert((i, j), v);
            }
        }
    }

    // basis bracket table
    let dim = l + roots.len();
    let cartan = rs.cartan_matrix();
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for i in 0..l {
        for (r, root) in roots.iter().enumerate() {
            let ev: i64 = (0..l).map(|j| root[j] * cartan[i][j]).sum();
            if ev != 0 {
                table[i][l + r] = vec![(l + r, ev)];
                table[l + r][i] = vec![(l + r, -ev)];
            }
        }
    }
    for (r, root) in roots.iter().enumerate() {
        for (s, other) in roots.iter().enumerate() {
            let sum = add(root, other);
            if sum.iter().all(|&c| c == 0) {
                // [e_a, e_{-a}] = h_a = sum_j c_j (a_j,a_j)/(a,a) h_j
                let la = len(root);
                table[l + r][l + s] = (0..l)
                    .filter(|&j| root[j] != 0)
                    .map(|j| {
                        let unit: Root = (0..l).map(|k| i64::from(k == j)).collect();
                        (j, root[j] * len(&unit) / la)
                    })
                    .collect();
            } else if let Some(&k) = root_index.get(&sum) {
                table[l + r][l + s] = vec![(l + k, structure_constants[&(r, s)])];
            }
        }
    }

    Ok(ChevalleyModel {
        root_system: rs,
        roots,
        root_index,
        structure_constants,
        table,
    })
}

/// An sl2-triple `(H, E, F)` certifying that a diagram is a characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleWitness {
    pub h: WeightedDiagram,
    pub h_element: Element,
    pub e: Element,
    pub f: Element,
}

impl TripleWitness {
    /// `[H,E] = 2E`, `[H,F] = -2F`, `[E,F] = H`, checked exactly.
    pub fn verify(&self, model: &ChevalleyModel) -> bool {
        let scale = |v: &Element, c: i64| -> Element { v.iter().map(|x| x * q(c)).collect() };
        model.bracket(&self.h_element, &self.e) == scale(&self.e, 2)
            && model.bracket(&self.h_element, &self.f) == scale(&self.f, -2)
            && model.bracket(&self.e, &self.f) == self.h_element
    }

    /// `{H: [...], E: {root: coeff}, F: {root: coeff}}`.
    pub fn to_json(&self, model: &ChevalleyModel) -> Value {
        let l = model.rank();
        let part = |v: &Element| -> Value {
            let mut m = Map::new();
            for (i, c) in v.iter().enumerate().skip(l) {
                if !c.is_zero() {
                    let r = &model.roots()[i - l];
                    let key: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                    m.insert(format!("({})", key.join(",")), rational_json(c));
                }
            }
            Value::Object(m)
        };
        json!({ "H": self.h, "E": part(&self.e), "F": part(&self.f) })
    }
}

/// Settings for [`is_characteristic_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub trials: usize,
    pub seed: u64,
    /// Largest `dim g_2` for which the exhaustive {0,1} sweep runs.
    pub sweep_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            trials: 20,
            seed: 0x5eed,
            sweep_cap: 10,
        }
    }
}

/// Searches for an sl2-triple with characteristic `d`. `Some` carries a
/// verified witness; `None` means no triple was found (probabilistic).
pub fn is_characteristic(
    model: &ChevalleyModel,
    d: &WeightedDiagram,
    trials: usize,
) -> Result<Option<TripleWitness>> {
    is_characteristic_with(
        model,
        d,
        OracleConfig {
            trials,
            ..OracleConfig::default()
        },
    )
}

pub fn is_characteristic_with(
    model: &ChevalleyModel,
    d: &WeightedDiagram,
    config: OracleConfig,
) -> Result<Option<TripleWitness>> {
    let rs = model.root_system();
    if d.simple_type() != rs.simple_type() {
        return Err(Error::TypeMismatch {
            expected: rs.simple_type(),
            found: d.simple_type(),
        });
    }
    let w = d
        .integer_weights()
        .filter(|w| w.iter().all(|&x| x >= 0))
        .ok_or_else(|| Error::NonIntegralWeights(d.to_string()))?;
    let l = model.rank();
    let np = rs.positive_roots().len();
    let h = model.cartan_element(d);
    let grade = |r: &Root| -> i64 { r.iter().zip(&w).map(|(c, x)| c * x).sum() };

    let g2: Vec<usize> = (0..np).filter(|&i| grade(&model.roots[i]) == 2).collect();
    let g0: Vec<usize> = (0..l)
        .chain(
            (0..2 * np)
                .filter(|&i| grade(&model.roots[i]) == 0)
                .map(|i| l + i),
        )
        .collect();
    if g2.is_empty() {
        return Ok(if d.is_zero() {
            Some(TripleWitness {
                h: d.clone(),
                h_element: h,
                e: model.zero(),
                f: model.zero(),
            })
        } else {
            None
        });
    }

    let attempt = |coeffs: &[i64]| -> Option<TripleWitness> {
        let mut e = model.zero();
        for (&i, &c) in g2.iter().zip(coeffs) {
            e[l + i] = q(c);
        }
        // columns: [E, e_{-beta}] for beta in g_2, restricted to g_0
        let columns: Vec<Element> = g2
            .iter()
            .map(|&i| {
                let mut f = model.zero();
                f[l + np + i] = Rational::one();
                model.bracket(&e, &f)
            })
            .collect();
        let rows: Vec<Vec<Rational>> = g0
            .iter()
            .map(|&k| columns.iter().map(|c| c[k].clone()).collect())
            .collect();
        let rhs: Vec<Rational> = g0.iter().map(|&k| h[k].clone()).collect();
        let x = solve(&rows, &rhs, g2.len())?;
        let mut f = model.zero();
        for (&i, xi) in g2.iter().zip(x) {
            f[l + np + i] = xi;
        }
        let witness = TripleWitness {
            h: d.clone(),
            h_element: h.clone(),
            e,
            f,
        };
        witness.verify(model).then_some(witness)
    };

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let choices: [i64; 6] = [-3, -2, -1, 1, 2, 3];
    for _ in 0..config.trials {
        let coeffs: Vec<i64> = g2
            .iter()
            .map(|_| *choices.choose(&mut rng).unwrap())
            .collect();
        if let Some(wit) = attempt(&coeffs) {
            return Ok(Some(wit));
        }
    }
    if g2.len() <= config.sweep_cap {
        for mask in 1u64..(1 << g2.len()) {
            let coeffs: Vec<i64> = (0..g2.len()).map(|i| (mask >> i & 1) as i64).collect();
            if let Some(wit) = attempt(&coeffs) {
                return Ok(Some(wit));
            }
        }
    }
    Ok(None)
}

/// Every diagram with weights in `{0,1,2}` accepted by the oracle.
pub fn characteristic_set(model: &ChevalleyModel, config: OracleConfig) -> Vec<Vec<i64>> {
    let t = model.root_system().simple_type();
    let l = t.rank();
    let mut out = Vec::new();
    for code in 0..3usize.pow(l as u32) {
        let w: Vec<i64> = (0..l)
            .map(|i| ((code / 3usize.pow(i as u32)) % 3) as i64)
            .collect();
        let d = WeightedDiagram::from_ints(t, &w).expect("right length");
        if is_characteristic_with(model, &d, config)
            .expect("valid diagram")
            .is_some()
        {
            out.push(w);
        }
    }
    out.sort();
    out
}

/// The structure constants on positive pairs, keyed by root strings (for
/// inspection and debugging).
pub fn positive_structure_constants(model: &ChevalleyModel) -> BTreeMap<(Root, Root), i64> {
    let np = model.root_system().positive_roots().len();
    let mut out = BTreeMap::new();
    for a in 0..np {
        for b in 0..np {
            if let Some(&v) = model.structure_constants.get(&(a, b)) {
                out.insert((model.roots[a].clone(), model.roots[b].clone()), v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(build_chevalley(SimpleType::a(1)).unwrap().dimension(), 3);
        assert_eq!(build_chevalley(SimpleType::G2).unwrap().dimension(), 14);
        assert_eq!(build_chevalley(SimpleType::c(3)).unwrap().dimension(), 21);
    }

    #[test]
    fn rank_bound_enforced() {
        assert!(matches!(
            build_chevalley(SimpleType::e(7)),
            Err(Error::OracleBound { rank: 7, bound: 6 })
        ));
        assert!(build_chevalley_with_bound(SimpleType::e(7), 7).is_ok());
    }

    #[test]
    fn axioms_hold_exhaustively_in_small_rank() {
        for t in [
            SimpleType::a(2),
            SimpleType::b(2),
            SimpleType::G2,
            SimpleType::c(3),
        ] {
            let m = build_chevalley(t).unwrap();
            assert!(m.check_axioms(None, 0), "{t}");
        }
    }

    #[test]
    fn sl2_standard_triple() {
        let m = build_chevalley(SimpleType::a(1)).unwrap();
        let d = WeightedDiagram::from_ints(SimpleType::a(1), &[2]).unwrap();
        let w = is_characteristic(&m, &d, 20).unwrap().unwrap();
        assert!(w.verify(&m));
        let v = w.to_json(&m);
        assert_eq!(v["H"], json!([2]));
    }

    #[test]
    fn g2_examples() {
        let m = build_chevalley(SimpleType::G2).unwrap();
        let d = |w: &[i64]| WeightedDiagram::from_ints(SimpleType::G2, w).unwrap();
        assert!(is_characteristic(&m, &d(&[2, 0]), 20).unwrap().is_some());
        assert!(is_characteristic(&m, &d(&[0, 2]), 20).unwrap().is_none());
    }

    #[test]
    fn rejects_bad_weights() {
        let m = build_chevalley(SimpleType::a(2)).unwrap();
        let d = WeightedDiagram::new(SimpleType::a(2), vec![q_frac(1, 2), q(0)]).unwrap();
        assert!(is_characteristic(&m, &d, 5).is_err());
        let d = WeightedDiagram::from_ints(SimpleType::a(2), &[-1, 0]).unwrap();
        assert!(is_characteristic(&m, &d, 5).is_err());
    }
}
