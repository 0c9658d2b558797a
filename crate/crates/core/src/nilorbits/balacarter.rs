//! Nilpotent orbits from pairs (Levi subalgebra, distinguished orbit).
//!
//! Every standard Levi subalgebra `l_J` (one per subset `J` of the simple
//! roots) contributes, for each distinguished orbit of `l_J`, the dominant
//! conjugate of its characteristic. Distinguished characteristics of a simple
//! component are the even diagrams with `dim l_0 = dim l_2`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{q, solve, Rational};
use crate::rootcore::{build_root_system, Family, RootSystemData, SimpleType};

/// One orbit produced by [`bala_carter_orbits`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedOrbit {
    pub label: String,
    pub weights: Vec<i64>,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Summand {
    // sort key: family priority, then larger rank, then long before short
    priority: u8,
    neg_rank: i64,
    short: bool,
    name: String,
}

/// Dimension of the orbit with characteristic `weights`.
pub fn orbit_dimension(rs: &RootSystemData, weights: &[i64]) -> usize {
    let (mut n0, mut n1) = (0, 0);
    for beta in rs.positive_roots() {
        let v: i64 = beta.iter().zip(weights).map(|(c, w)| c * w).sum();
        match v {
            0 => n0 += 1,
            1 => n1 += 1,
            _ => {}
        }
    }
    let dim_g = rs.rank() + 2 * rs.positive_roots().len();
    dim_g - (rs.rank() + 2 * n0) - n1
}

fn components(rs: &RootSystemData, subset: &[usize]) -> Vec<Vec<usize>> {
    let a = rs.cartan_matrix();
    let mut seen = vec![false; subset.len()];
    let mut out = Vec::new();
    for start in 0..subset.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![subset[start]];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..subset.len() {
                if !seen[v] && a[subset[u]][subset[v]] != 0 {
                    seen[v] = true;
                    comp.push(subset[v]);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Cartan type of a connected set of nodes, with a flag for short roots in a
/// non-simply-laced ambient.
fn component_type(rs: &RootSystemData, comp: &[usize]) -> (Family, usize, bool) {
    let a = rs.cartan_matrix();
    let g = rs.gram_matrix();
    let n = comp.len();
    let max_len = (0..rs.rank()).map(|i| g[i][i]).max().unwrap_or(2);
    let mut max_bond = 1;
    let mut degree = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && a[comp[i]][comp[j]] != 0 {
                degree[i] += 1;
                max_bond = max_bond.max(a[comp[i]][comp[j]].abs() * a[comp[j]][comp[i]].abs());
            }
        }
    }
    match max_bond {
        3 => (Family::G, 2, false),
        2 if n == 4 => (Family::F, 4, false),
        2 if n == 2 => (Family::B, 2, false),
        2 => {
            // the end node of the double bond decides between B and C
            let end = (0..n)
                .find(|&i| {
                    degree[i] == 1 && (0..n).any(|j| a[comp[i]][comp[j]] * a[comp[j]][comp[i]] == 2)
                })
                .expect("double bond at an end of the chain");
            let short_end = g[comp[end]][comp[end]] < max_len;
            (if short_end { Family::B } else { Family::C }, n, false)
        }
        _ => {
            let short = g[comp[0]][comp[0]] < max_len;
            if degree.iter().all(|&d| d <= 2) {
                (Family::A, n, short)
            } else {
                let branch = (0..n).find(|&i| degree[i] == 3).unwrap();
                let leaves = (0..n)
                    .filter(|&i| degree[i] == 1 && a[comp[i]][comp[branch]] != 0)
                    .count();
                if leaves >= 2 {
                    (Family::D, n, false)
                } else {
                    (Family::E, n, false)
                }
            }
        }
    }
}

/// Positive roots supported on `comp`.
fn component_roots<'a>(rs: &'a RootSystemData, comp: &[usize]) -> Vec<&'a Vec<i64>> {
    rs.positive_roots()
        .iter()
        .filter(|r| {
            r.iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || comp.contains(&i))
        })
        .collect()
}

/// Distinguished characteristics of a simple component, each with its name
/// suffix (`""` for the principal orbit, `"(a_i)"` / `"(b_i)"` otherwise).
fn distinguished(rs: &RootSystemData, comp: &[usize]) -> Vec<(String, Vec<i64>)> {
    let roots = component_roots(rs, comp);
    let n = comp.len();
    let mut found: Vec<(usize, usize, Vec<i64>)> = Vec::new();
    for mask in 0u32..(1 << n) {
        let d: Vec<i64> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { 2 } else { 0 })
            .collect();
        let mut full = vec![0i64; rs.rank()];
        for (k, &node) in comp.iter().enumerate() {
            full[node] = d[k];
        }
        let (mut n0, mut n2) = (0, 0);
        for r in &roots {
            let v: i64 = r.iter().zip(&full).map(|(c, w)| c * w).sum();
            if v == 0 {
                n0 += 1;
            } else if v == 2 {
                n2 += 1;
            }
        }
        if n + 2 * n0 == n2 {
            let zeros = d.iter().filter(|&&x| x == 0).count();
            let dim_l = n + 2 * roots.len();
            let dim = dim_l - n - 2 * n0;
            found.push((zeros, dim, d));
        }
    }
    // same number of zeros: the larger orbit gets `a`, the next `b`
    found.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut out = Vec::new();
    let mut i = 0;
    while i < found.len() {
        let zeros = found[i].0;
        let mut letter = b'a';
        while i < found.len() && found[i].0 == zeros {
            let suffix = if zeros == 0 {
                String::new()
            } else {
                format!("({}_{})", letter as char, zeros)
            };
            out.push((suffix, found[i].2.clone()));
            letter += 1;
            i += 1;
        }
    }
    out
}

fn summand_for(rs: &RootSystemData, comp: &[usize], suffix: &str) -> Summand {
    let (family, rank, short) = component_type(rs, comp);
    let priority = match family {
        Family::E => 0,
        Family::F => 1,
        Family::G => 2,
        Family::D => 3,
        Family::C => 4,
        Family::B => 5,
        Family::A => 6,
    };
    let letter = if short {
        "\u{c3}".to_string()
    } else {
        family.letter().to_string()
    };
    Summand {
        priority,
        neg_rank: -(rank as i64),
        short,
        name: format!("{letter}_{rank}{suffix}"),
    }
}

fn join_summands(mut parts: Vec<Summand>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    parts.sort();
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let mult = j - i;
        if mult == 1 {
            out.push(parts[i].name.clone());
        } else {
            out.push(format!("{mult}{}", parts[i].name));
        }
        i = j;
    }
    out.join("+")
}

/// Coweight values `alpha_i(H)` of the element of `span{alpha_j^vee : j in J}`
/// with `alpha_j(H) = d_j` for `j` in `J`.
fn lift(rs: &RootSystemData, subset: &[usize], d: &[i64]) -> Vec<Rational> {
    let a = rs.cartan_matrix();
    let rows: Vec<Vec<Rational>> = subset
        .iter()
        .map(|&j| subset.iter().map(|&k| q(a[k][j])).collect())
        .collect();
    let rhs: Vec<Rational> = d.iter().map(|&x| q(x)).collect();
    let x = solve(&rows, &rhs, subset.len()).expect("Cartan matrix of a Levi is invertible");
    (0..rs.rank())
        .map(|i| {
            subset
                .iter()
                .zip(&x)
                .fold(Rational::zero(), |s, (&k, xk)| s + xk * q(a[k][i]))
        })
        .collect()
}

/// All nilpotent orbits of `t`, labelled in Bala–Carter style and sorted by
/// increasing dimension (ties by label). Labels are unique for exceptional
/// types; in classical types several orbits may share a Levi name.
pub fn bala_carter_orbits(t: SimpleType) -> Vec<GeneratedOrbit> {
    let rs = build_root_system(t);
    let l = rs.rank();
    let mut by_diagram: BTreeMap<Vec<i64>, String> = BTreeMap::new();
    for mask in 0u32..(1 << l) {
        let subset: Vec<usize> = (0..l).filter(|i| mask >> i & 1 == 1).collect();
        let comps = components(&rs, &subset);
        let choices: Vec<Vec<(String, Vec<i64>)>> =
            comps.iter().map(|c| distinguished(&rs, c)).collect();
        let mut idx = vec![0usize; comps.len()];
        loop {
            let mut d_full = vec![0i64; l];
            let mut summands = Vec::new();
            for (ci, comp) in comps.iter().enumerate() {
                let (suffix, d) = &choices[ci][idx[ci]];
                for (k, &node) in comp.iter().enumerate() {
                    d_full[node] = d[k];
                }
                summands.push(summand_for(&rs, comp, suffix));
            }
            let d_sub: Vec<i64> = subset.iter().map(|&j| d_full[j]).collect();
            let values = if subset.is_empty() {
                vec![Rational::zero(); l]
            } else {
                lift(&rs, &subset, &d_sub)
            };
            let dominant = rs.dominant_coweight(&values);
            let weights: Vec<i64> = dominant
                .iter()
                .map(|w| {
                    assert!(w.is_integer(), "non-integral characteristic");
                    w.to_integer().try_into().expect("small weight")
                })
                .collect();
            by_diagram
                .entry(weights)
                .or_insert_with(|| join_summands(summands));

            // odometer over distinguished choices
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break;
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }

    let mut orbits: Vec<GeneratedOrbit> = by_diagram
        .into_iter()
        .map(|(weights, label)| GeneratedOrbit {
            dimension: orbit_dimension(&rs, &weights),
            label,
            weights,
        })
        .collect();

    // non-conjugate Levis of the same type: '' marks the smaller orbit.
    // Classical orbits are named by partitions, so their labels stay as is.
    if t.is_classical() {
        orbits.sort_by(|x, y| {
            x.dimension
                .cmp(&y.dimension)
                .then_with(|| x.label.cmp(&y.label))
        });
        return orbits;
    }
    let mut by_label: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, o) in orbits.iter().enumerate() {
        by_label.entry(o.label.clone()).or_default().push(i);
    }
    for (label, mut ids) in by_label {
        if ids.len() == 2 {
            ids.sort_by_key(|&i| orbits[i].dimension);
            orbits[ids[0]].label = format!("({label})''");
            orbits[ids[1]].label = format!("({label})'");
        } else {
            assert_eq!(ids.len(), 1, "label {label} names {} orbits", ids.len());
        }
    }
    orbits.sort_by(|x, y| {
        x.dimension
            .cmp(&y.dimension)
            .then_with(|| x.label.cmp(&y.label))
    });
    orbits
}
