use nilspan::rational::{q, Rational};
use nilspan::rootcore::{build_root_system, iota_fixed_subspace, SimpleType, WeightedDiagram};
use nilspan::satake::{
    b_subspace, expected_b_form, expected_b_pattern, format_pattern, matches, matching_subspace,
    satake_catalog, ExceptionalForm, RealFormLabel, SatakeDiagram,
};
use nilspan::spanverify::h_n_a_plus;
use nilspan::{Error, RationalSubspace};
use proptest::prelude::*;

fn label(s: &str) -> RealFormLabel {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Real rank of each form, from the classification of real forms.
fn real_rank(l: &RealFormLabel) -> usize {
    use ExceptionalForm::*;
    use RealFormLabel::*;
    match *l {
        SlR(n) => n - 1,
        SuStar(k) => k - 1,
        Su(_, q) | So(_, q) | Sp(_, q) => q,
        SpR(n) => n,
        SoStar(n) => n / 2,
        Complex(t) => t.rank(),
        Exceptional(f) => match f {
            E6Split => 6,
            E6Quasi => 4,
            E6Hermitian => 2,
            E6Rank2 => 2,
            E7Split => 7,
            E7Quaternionic => 4,
            E7Hermitian => 3,
            E8Split => 8,
            E8Quaternionic => 4,
            F4Split => 4,
            F4Rank1 => 1,
            G2Split => 2,
        },
    }
}

fn white_orbits(s: &SatakeDiagram) -> usize {
    let l = s.simple_type().rank();
    let white = (0..l).filter(|&i| !s.is_black(i)).count();
    white - s.arrows().len()
}

#[test]
fn matching_dimension_is_real_rank() {
    for l in RealFormLabel::catalog(12) {
        let s = satake_catalog(&l);
        let dim = matching_subspace(&s).dim();
        assert_eq!(dim, real_rank(&l), "{l}");
        assert_eq!(dim, white_orbits(&s), "{l}");
    }
}

#[test]
fn split_forms_give_full_and_iota_fixed() {
    for t in SimpleType::all_up_to(10) {
        let l = RealFormLabel::split_form(t);
        let s = satake_catalog(&l);
        assert!(s.is_split(), "{l}");
        assert_eq!(
            matching_subspace(&s),
            RationalSubspace::full(t.rank()),
            "{l}"
        );
        assert_eq!(
            b_subspace(&l),
            iota_fixed_subspace(&build_root_system(t)),
            "{l}"
        );
    }
}

#[test]
fn golden_b_for_catalog() {
    for l in RealFormLabel::catalog(12) {
        assert_eq!(
            b_subspace(&l),
            expected_b_form(&l),
            "{l}: {}",
            format_pattern(&expected_b_pattern(&l))
        );
    }
}

#[test]
fn b_examples() {
    assert_eq!(b_subspace(&label("g2(2)")).dim(), 2);
    let e6 = b_subspace(&label("e6(-26)"));
    assert_eq!(e6.dim(), 1);
    assert!(e6.contains(&[q(1), q(0), q(0), q(0), q(1), q(0)]));
    let e7 = b_subspace(&label("e7(-5)"));
    assert_eq!(e7.dim(), 4);
    assert_eq!(
        format_pattern(&expected_b_pattern(&label("e7(-5)"))),
        "(0,b_1,0,b_2,b_3,b_4,0)"
    );
    for m in 2..=3 {
        let l = label(&format!("so({},{})", 2 * m, 2 * m));
        assert_eq!(b_subspace(&l).dim(), 2 * m, "{l}");
    }
    for k in 1..=5 {
        let l = label(&format!("su({},{k})", k + 1));
        assert_eq!(b_subspace(&l).dim(), k);
        let mut v = vec![q(0); 2 * k];
        v[0] = q(1);
        v[2 * k - 1] = q(1);
        assert!(b_subspace(&l).contains(&v));
    }
    for k in 2..=5 {
        let l = label(&format!("sp({k},{k})"));
        assert_eq!(b_subspace(&l).dim(), k);
    }
}

#[test]
fn catalog_examples() {
    let s = satake_catalog(&label("sl(5,R)"));
    assert!(s.black_nodes().is_empty() && s.arrows().is_empty());
    for k in 2..=5 {
        let s = satake_catalog(&label(&format!("su*({})", 2 * k)));
        let expected: Vec<usize> = (0..k).map(|i| 2 * i).collect();
        assert_eq!(s.black_nodes(), expected.as_slice());
        assert!(s.arrows().is_empty());
    }
    for k in 2..=5 {
        let s = satake_catalog(&label(&format!("su({k},{k})")));
        let expected: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, 2 * k - 2 - i)).collect();
        assert_eq!(s.arrows(), expected.as_slice());
        assert!(s.black_nodes().is_empty());
    }
    assert_eq!(satake_catalog(&label("f4(-20)")).black_nodes(), &[0, 1, 2]);
}

#[test]
fn matching_examples() {
    let su6 = satake_catalog(&label("su*(6)"));
    assert!(matches(&WeightedDiagram::zero(SimpleType::a(5)), &su6).unwrap());
    let d = WeightedDiagram::from_ints(SimpleType::a(5), &[2, 0, 0, 0, 0]).unwrap();
    assert!(!matches(&d, &su6).unwrap());
    let e = WeightedDiagram::from_ints(SimpleType::e(6), &[2, 0, 0, 0, 2, 0]).unwrap();
    assert!(matches(&e, &satake_catalog(&label("e6(-26)"))).unwrap());
    assert!(matches!(
        matches(&e, &satake_catalog(&label("sl(3,R)"))),
        Err(Error::TypeMismatch { .. })
    ));
}

#[test]
fn canonicalization_keeps_dimension() {
    for (a, b) in [
        ("su(3,5)", "su(5,3)"),
        ("so(2,7)", "so(7,2)"),
        ("sp(1,3)", "sp(3,1)"),
    ] {
        let (x, y) = (label(a), label(b));
        assert_eq!(x, y);
        assert_eq!(
            matching_subspace(&satake_catalog(&x)).dim(),
            matching_subspace(&satake_catalog(&y)).dim()
        );
    }
}

#[test]
fn labels_rejected() {
    for s in ["su(3,0)", "so(5,0)", "sp(2,0)", "e7(-133)", "su*(2)"] {
        assert!(s.parse::<RealFormLabel>().is_err(), "{s}");
    }
    let alias = |s: &str| matches!(s.parse::<RealFormLabel>(), Err(Error::Alias { .. }));
    assert!(alias("so(3,3)") && alias("so(2,1)") && alias("sp(1,R)") && alias("so*(6)"));
    assert!(matches!(
        "so(2,2)".parse::<RealFormLabel>(),
        Err(Error::InvalidParameters { .. })
    ));
    assert!(label("so(4,1)").simple_type() == SimpleType::b(2));
    assert!(label("so(4,4)").simple_type() == SimpleType::d(4));
}

#[test]
fn dot_rendering() {
    let split = satake_catalog(&label("sl(4,R)")).to_dot("sl(4,R)");
    assert!(!split.contains("filled") && !split.contains("dashed"));
    let star = satake_catalog(&label("su*(6)")).to_dot("su*(6)");
    assert_eq!(star.matches("fillcolor=black").count(), 3);
    let suk = satake_catalog(&label("su(4,4)")).to_dot("su(4,4)");
    assert_eq!(suk.matches("style=dashed").count(), 3);
    let f4 = satake_catalog(&label("f4(4)")).to_dot("f4(4)");
    assert!(f4.contains("a2 -- a3 [label=\"2\""));
    let g2 = satake_catalog(&label("g2(2)")).to_dot("g2(2)");
    assert!(g2.contains("a1 -- a2 [label=\"3\""));
}

#[test]
fn json_rendering() {
    let v = serde_json::to_value(satake_catalog(&label("su(3,1)"))).unwrap();
    assert_eq!(v["type"], "A_3");
    assert_eq!(v["rank"], 3);
    assert_eq!(v["black"], serde_json::json!([2]));
    assert_eq!(v["arrows"], serde_json::json!([[1, 3]]));
}

#[test]
fn diagram_validation() {
    let t = SimpleType::a(3);
    assert!(SatakeDiagram::new(t, vec![1], vec![(0, 1)]).is_err());
    assert!(SatakeDiagram::new(t, vec![], vec![(0, 0)]).is_err());
    assert!(SatakeDiagram::new(t, vec![5], vec![]).is_err());
    assert!(SatakeDiagram::new(t, vec![1], vec![(0, 2)]).is_ok());
}

fn catalog_label() -> impl Strategy<Value = RealFormLabel> {
    prop::sample::select(RealFormLabel::catalog(6))
}

proptest! {
    #[test]
    fn matching_closed_under_combinations(
        l in catalog_label(),
        coeffs in prop::collection::vec(-5i64..=5, 1..6),
    ) {
        let s = satake_catalog(&l);
        let t = l.simple_type();
        let rows = h_n_a_plus(&l);
        let mut v: Vec<Rational> = vec![q(0); t.rank()];
        for (i, c) in coeffs.iter().enumerate() {
            let d = &rows[i % rows.len()].diagram;
            for (x, w) in v.iter_mut().zip(d.weights()) {
                *x += w * q(*c);
            }
        }
        let d = WeightedDiagram::new(t, v).unwrap();
        prop_assert!(matches(&d, &s).unwrap());
        prop_assert!(matching_subspace(&s).contains(d.weights()));
    }

    #[test]
    fn matching_agrees_with_subspace(
        l in catalog_label(),
        raw in prop::collection::vec(0i64..=2, 8),
    ) {
        let t = l.simple_type();
        let s = satake_catalog(&l);
        let d = WeightedDiagram::from_ints(t, &raw[..t.rank()]).unwrap();
        prop_assert_eq!(matches(&d, &s).unwrap(), matching_subspace(&s).contains(d.weights()));
    }
}
