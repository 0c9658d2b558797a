use std::collections::BTreeSet;

use nilspan::nilorbits::balacarter::{bala_carter_orbits, orbit_dimension};
use nilspan::nilorbits::{
    classical_partitions, diagram_of_partition, enumerate_complex_characteristics,
    exceptional_table, find_orbit, normalize_bala_carter, OrbitLabel, Partition, VeryEvenTag,
};
use nilspan::rootcore::{build_root_system, Family, SimpleType};

/// Partitions of `n` into parts at most `max`, largest part first.
fn brute_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in brute_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn multiplicity_ok(p: &[usize], bad_parity: usize) -> bool {
    p.iter()
        .filter(|&&m| m % 2 == bad_parity)
        .all(|&m| p.iter().filter(|&&x| x == m).count() % 2 == 0)
}

fn transpose(p: &[usize]) -> Vec<usize> {
    let max = p.first().copied().unwrap_or(0);
    (1..=max)
        .map(|i| p.iter().filter(|&&x| x >= i).count())
        .collect()
}

/// Orbit dimension from the partition: `n^2 - sum (p^T_i)^2` for A, and the
/// corresponding orthogonal/symplectic formulas.
fn partition_dimension(t: SimpleType, p: &[usize]) -> usize {
    let sq: usize = transpose(p).iter().map(|x| x * x).sum();
    let odd = p.iter().filter(|&&x| x % 2 == 1).count();
    let n: usize = p.iter().sum();
    match t.family() {
        Family::A => n * n - sq,
        Family::B | Family::D => n * (n - 1) / 2 - (sq - odd) / 2,
        Family::C => n * (n + 1) / 2 - (sq + odd) / 2,
        _ => unreachable!(),
    }
}

fn classical_types(max: usize) -> Vec<SimpleType> {
    SimpleType::all_up_to(max)
        .into_iter()
        .filter(|t| t.is_classical())
        .collect()
}

#[test]
fn partition_counts_match_brute_force() {
    for t in classical_types(12) {
        let l = t.rank();
        let (n, bad) = match t.family() {
            Family::A => (l + 1, None),
            Family::B => (2 * l + 1, Some(0)),
            Family::C => (2 * l, Some(1)),
            Family::D => (2 * l, Some(0)),
            _ => unreachable!(),
        };
        let expected: Vec<Vec<usize>> = brute_partitions(n, n)
            .into_iter()
            .filter(|p| bad.is_none_or(|b| multiplicity_ok(p, b)))
            .collect();
        let got: Vec<Vec<usize>> = classical_partitions(t)
            .unwrap()
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(got, expected, "{t}");
    }
}

#[test]
fn partition_examples() {
    let parts = |t: SimpleType| -> Vec<String> {
        classical_partitions(t)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect()
    };
    assert_eq!(parts(SimpleType::a(3)).len(), 5);
    assert_eq!(
        parts(SimpleType::c(2)),
        vec!["[4]", "[2^2]", "[2,1^2]", "[1^4]"]
    );
    assert_eq!(parts(SimpleType::a(1)), vec!["[2]", "[1^2]"]);
    assert!(classical_partitions(SimpleType::G2).is_err());
    assert!(exceptional_table(SimpleType::a(3)).is_err());
}

#[test]
fn classical_recipe_agrees_with_levi_construction() {
    for t in classical_types(7) {
        let recipe: BTreeSet<Vec<i64>> = enumerate_complex_characteristics(t)
            .iter()
            .map(|o| o.weights())
            .collect();
        let levi: BTreeSet<Vec<i64>> = bala_carter_orbits(t)
            .into_iter()
            .map(|o| o.weights)
            .collect();
        assert_eq!(recipe, levi, "{t}");
    }
}

#[test]
fn orbit_dimensions_match_partition_formulas() {
    for t in classical_types(8) {
        let rs = build_root_system(t);
        for o in enumerate_complex_characteristics(t) {
            let OrbitLabel::Classical { partition, .. } = &o.label else {
                unreachable!()
            };
            assert_eq!(
                orbit_dimension(&rs, &o.weights()),
                partition_dimension(t, partition.parts()),
                "{t} {}",
                o.label
            );
        }
    }
}

#[test]
fn exceptional_tables_agree_with_levi_construction() {
    for (t, count) in [
        (SimpleType::G2, 5),
        (SimpleType::F4, 16),
        (SimpleType::e(6), 21),
        (SimpleType::e(7), 45),
        (SimpleType::e(8), 70),
    ] {
        let table = exceptional_table(t).unwrap();
        assert_eq!(table.len(), count, "{t}");
        let generated = bala_carter_orbits(t);
        assert_eq!(generated.len(), count, "{t}");
        for (row, gen) in table.iter().zip(&generated) {
            assert_eq!(row.label.to_string(), gen.label, "{t}");
            assert_eq!(row.weights(), gen.weights, "{t} {}", gen.label);
        }
        let rs = build_root_system(t);
        let dims: Vec<usize> = table
            .iter()
            .map(|o| orbit_dimension(&rs, &o.weights()))
            .collect();
        assert!(dims.windows(2).all(|w| w[0] <= w[1]), "{t}");
        let principal = 2 * rs.positive_roots().len();
        assert_eq!(*dims.last().unwrap(), principal, "{t}");
    }
}

#[test]
fn printed_rows_present() {
    let w = |t: SimpleType, name: &str| {
        find_orbit(t, &name.parse::<OrbitLabel>().unwrap())
            .unwrap_or_else(|| panic!("{t} {name}"))
            .weights()
    };
    assert_eq!(w(SimpleType::G2, "G_2(a_1)"), vec![2, 0]);
    assert_eq!(w(SimpleType::e(6), "2A_2"), vec![2, 0, 0, 0, 2, 0]);
    assert_eq!(w(SimpleType::e(8), "E_8"), vec![2; 8]);
    assert_eq!(w(SimpleType::F4, "\u{c3}_2"), vec![0, 0, 0, 2]);
    assert_eq!(w(SimpleType::F4, "A~_2"), vec![0, 0, 0, 2]);
    assert_eq!(w(SimpleType::e(7), "(3A_1)''"), vec![2, 0, 0, 0, 0, 0, 0]);
    assert_eq!(w(SimpleType::a(3), "[3,1]"), vec![2, 0, 2]);
    assert_eq!(w(SimpleType::a(5), "[1^6]"), vec![0; 5]);
    for l in 2..=8 {
        let b = SimpleType::b(l);
        assert_eq!(w(b, &format!("[{}]", 2 * l + 1)), vec![2; l]);
        let c = SimpleType::c(l);
        let mut expected = vec![0; l];
        expected[l - 1] = 2;
        assert_eq!(w(c, &format!("[2^{l}]")), expected);
    }
    for m in 2..=5 {
        let d = SimpleType::d(2 * m);
        let mut expected = vec![0; 2 * m];
        expected[1] = 2;
        assert_eq!(w(d, &format!("[3^2,1^{}]", 4 * m - 6)), expected);
    }
}

#[test]
fn type_a_is_injective() {
    for l in 1..=10 {
        let diagrams = enumerate_complex_characteristics(SimpleType::a(l));
        let distinct: BTreeSet<Vec<i64>> = diagrams.iter().map(|o| o.weights()).collect();
        assert_eq!(distinct.len(), diagrams.len());
    }
    let a2: Vec<Vec<i64>> = enumerate_complex_characteristics(SimpleType::a(2))
        .iter()
        .map(|o| o.weights())
        .collect();
    assert_eq!(a2, vec![vec![2, 2], vec![1, 1], vec![0, 0]]);
    let a1: Vec<Vec<i64>> = enumerate_complex_characteristics(SimpleType::a(1))
        .iter()
        .map(|o| o.weights())
        .collect();
    assert_eq!(a1, vec![vec![2], vec![0]]);
}

#[test]
fn very_even_pairs_swap_fork_weights() {
    for l in [4, 6, 8, 10] {
        let t = SimpleType::d(l);
        for p in classical_partitions(t)
            .unwrap()
            .iter()
            .filter(|p| p.is_very_even())
        {
            let one = diagram_of_partition(t, p, Some(VeryEvenTag::I))
                .unwrap()
                .weights();
            let two = diagram_of_partition(t, p, Some(VeryEvenTag::II))
                .unwrap()
                .weights();
            assert_ne!(one, two);
            let mut swapped = one.clone();
            swapped.swap(l - 2, l - 1);
            assert_eq!(swapped, two, "{t} {p}");
            assert!(diagram_of_partition(t, p, None).is_err());
        }
    }
    // [2^{2m}]_I puts the 2 on the lower fork node
    let d = diagram_of_partition(
        SimpleType::d(4),
        &"[2^4]".parse::<Partition>().unwrap(),
        Some(VeryEvenTag::I),
    )
    .unwrap();
    assert_eq!(d.weights(), vec![0, 0, 0, 2]);
}

#[test]
fn invalid_partitions_rejected() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert!(diagram_of_partition(SimpleType::b(2), &p("[2,1^3]"), None).is_err());
    assert!(diagram_of_partition(SimpleType::c(2), &p("[3,1]"), None).is_err());
    assert!(diagram_of_partition(SimpleType::a(2), &p("[2,1^2]"), None).is_err());
    assert!(diagram_of_partition(SimpleType::a(3), &p("[3,1]"), Some(VeryEvenTag::I)).is_err());
}

#[test]
fn label_normalization() {
    assert_eq!(
        normalize_bala_carter("A_4+A_2"),
        normalize_bala_carter("A4 + A2")
    );
    assert_eq!(
        normalize_bala_carter("\\tilde A_1"),
        normalize_bala_carter("\u{c3}_1")
    );
    assert_eq!(
        normalize_bala_carter("E_{7}(a_{1})"),
        normalize_bala_carter("E7(a1)")
    );
    assert_eq!(
        normalize_bala_carter("(3A_1)\u{2033}"),
        normalize_bala_carter("(3A_1)''")
    );
}

#[test]
fn json_export() {
    let rows = enumerate_complex_characteristics(SimpleType::G2);
    let v = serde_json::to_value(&rows[2]).unwrap();
    assert_eq!(v["label"], "\u{c3}_1");
    assert!(v["weights"].is_array());
}
