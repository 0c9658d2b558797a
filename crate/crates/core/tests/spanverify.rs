use nilspan::nilorbits::{enumerate_complex_characteristics, normalize_bala_carter, OrbitLabel};
use nilspan::rational::rank;
use nilspan::rootcore::{SimpleType, WeightedDiagram};
use nilspan::satake::{b_subspace, matches, satake_catalog, RealFormLabel};
use nilspan::spanverify::{
    check_easy_inclusion, h_n_a_plus, paper_basis, paper_basis_diagrams, span_of,
    verify_paper_basis, verify_theorem,
};
use nilspan::Error;

fn label(s: &str) -> RealFormLabel {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn names(v: &[OrbitLabel]) -> Vec<String> {
    v.iter()
        .map(|l| normalize_bala_carter(&l.to_string()))
        .collect()
}

fn norm(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| normalize_bala_carter(s)).collect()
}

#[test]
fn report_invariants_over_catalog() {
    for l in RealFormLabel::catalog(8) {
        let r = verify_theorem(&l);
        assert!(r.all_ok(), "{l}");
        assert_eq!(r.greedy_basis.len(), r.dim_span, "{l}");
        assert!(r.matching_orbits.iter().any(|o| o.diagram.is_zero()), "{l}");
        assert!(!r.greedy_basis.iter().any(|b| {
            r.matching_orbits
                .iter()
                .any(|o| &o.label == b && o.diagram.is_zero())
        }));
        // the greedy basis is independent
        let rows: Vec<_> = r
            .greedy_basis
            .iter()
            .map(|b| {
                r.matching_orbits
                    .iter()
                    .find(|o| &o.label == b)
                    .unwrap()
                    .diagram
                    .weights()
                    .to_vec()
            })
            .collect();
        assert_eq!(rank(&rows, l.rank()), rows.len(), "{l}");
    }
}

#[test]
fn h_n_a_plus_examples() {
    assert_eq!(h_n_a_plus(&label("g2(2)")).len(), 5);
    let f4 = h_n_a_plus(&label("f4(-20)"));
    let all = enumerate_complex_characteristics(SimpleType::F4);
    let expected: Vec<_> = all
        .iter()
        .filter(|o| o.weights()[..3] == [0, 0, 0])
        .cloned()
        .collect();
    assert_eq!(f4, expected);
    assert!(f4.iter().any(|o| o.weights() == vec![0, 0, 0, 2]));
    let e6 = h_n_a_plus(&label("e6(-26)"));
    let has = |n: &str| {
        e6.iter()
            .any(|o| normalize_bala_carter(&o.label.to_string()) == normalize_bala_carter(n))
    };
    assert!(has("2A_2"));
    assert!(!has("A_2"));
}

#[test]
fn filter_is_idempotent() {
    for l in RealFormLabel::catalog(6) {
        let s = satake_catalog(&l);
        let once = h_n_a_plus(&l);
        let again: Vec<_> = once
            .iter()
            .filter(|o| matches(&o.diagram, &s).unwrap())
            .cloned()
            .collect();
        assert_eq!(once, again, "{l}");
    }
}

#[test]
fn easy_inclusion_examples() {
    for s in ["e6(6)", "e7(7)", "e8(8)", "f4(4)", "g2(2)", "sl(5,R)"] {
        assert!(check_easy_inclusion(&label(s)), "{s}");
    }
    for l in 2..=8usize {
        for q in 1..=l.div_ceil(2) {
            assert!(check_easy_inclusion(
                &RealFormLabel::su(l + 1 - q, q).unwrap()
            ));
        }
    }
}

#[test]
fn theorem_examples() {
    let g2 = verify_theorem(&label("g2(2)"));
    assert_eq!((g2.dim_b, g2.dim_span, g2.theorem_holds), (2, 2, true));
    let e8 = verify_theorem(&label("e8(-24)"));
    assert_eq!((e8.dim_b, e8.theorem_holds), (4, true));
    assert_eq!(
        names(&paper_basis(&label("e8(-24)")).unwrap()),
        norm(&["A_2", "2A_2", "D_4", "A_4+A_2"])
    );
    for l in 3..=8 {
        for q in 1..l {
            let p = l + 1 - q;
            if p > q + 1 {
                let r = verify_theorem(&RealFormLabel::su(p, q).unwrap());
                assert_eq!((r.dim_b, r.theorem_holds), (q, true), "su({p},{q})");
            }
        }
    }
}

#[test]
fn tabulated_bases() {
    assert_eq!(
        names(&paper_basis(&label("f4(4)")).unwrap()),
        norm(&["A_2", "\u{c3}_2", "B_3", "F_4"])
    );
    assert_eq!(
        names(&paper_basis(&label("e6(-14)")).unwrap()),
        norm(&["A_2", "2A_2"])
    );
    assert_eq!(
        names(&paper_basis(&label("e7(7)")).unwrap()),
        norm(&[
            "(3A_1)''",
            "A_2",
            "2A_2",
            "D_4",
            "A_3+A_2+A_1",
            "A_4+A_2",
            "E_7"
        ])
    );
    let sp: Vec<String> = paper_basis(&label("sp(4,R)"))
        .unwrap()
        .iter()
        .map(|l| l.to_string())
        .collect();
    assert_eq!(sp, vec!["[2^4]", "[4,2^2]", "[6,2]", "[8]"]);
    let so: Vec<String> = paper_basis(&label("so*(10)"))
        .unwrap()
        .iter()
        .map(|l| l.to_string())
        .collect();
    assert_eq!(so, vec!["[3^2,1^4]", "[5^2]"]);
    for s in ["f4(4)", "e6(-14)", "sp(4,R)", "so*(10)", "e8(8)"] {
        assert_eq!(verify_paper_basis(&label(s)), Ok(true), "{s}");
        let even = paper_basis_diagrams(&label(s))
            .unwrap()
            .iter()
            .all(|o| o.diagram.is_even());
        assert!(even, "{s}");
    }
}

#[test]
fn span_examples() {
    let g2 = SimpleType::G2;
    assert_eq!(span_of(g2, &[]).unwrap().dim(), 0);
    let d = |t: SimpleType, w: &[i64]| WeightedDiagram::from_ints(t, w).unwrap();
    assert_eq!(
        span_of(g2, &[d(g2, &[2, 0]), d(g2, &[2, 2])])
            .unwrap()
            .dim(),
        2
    );
    let a3 = SimpleType::a(3);
    assert_eq!(
        span_of(a3, &[d(a3, &[2, 0, 2]), d(a3, &[2, 2, 2])])
            .unwrap()
            .dim(),
        2
    );
    assert!(matches!(
        span_of(a3, &[d(g2, &[2, 0])]),
        Err(Error::TypeMismatch { .. })
    ));
    assert_eq!(
        span_of(g2, &[d(g2, &[2, 0])]).unwrap(),
        span_of(g2, &[d(g2, &[1, 0])]).unwrap()
    );
    assert!(span_of(g2, &[d(g2, &[2, 2])])
        .unwrap()
        .is_subspace_of(&b_subspace(&label("g2(2)"))));
}

#[test]
fn json_schema() {
    let r = verify_theorem(&label("g2(2)"));
    let v = r.to_json(false);
    for key in [
        "label",
        "type",
        "rank",
        "dim_b",
        "dim_span",
        "theorem_holds",
        "easy_inclusion",
        "basis",
        "paper_basis_verified",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["label"], "g2(2)");
    assert_eq!(v["type"], "G_2");
    assert!(v.get("matching_orbits").is_none());
    assert_eq!(
        r.to_json(true)["matching_orbits"].as_array().unwrap().len(),
        5
    );
}

#[test]
fn complex_labels_use_split_data() {
    for (c, s) in [
        ("e6C", "e6(6)"),
        ("sl(4,C)", "sl(4,R)"),
        ("so(9,C)", "so(5,4)"),
    ] {
        let (rc, rs) = (verify_theorem(&label(c)), verify_theorem(&label(s)));
        assert_eq!(rc.dim_b, rs.dim_b, "{c}");
        assert_eq!(rc.greedy_basis, rs.greedy_basis, "{c}");
        assert_eq!(rc.label.to_string(), label(c).to_string());
    }
}
