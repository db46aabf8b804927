use num_rational::BigRational;
use superkm_core::cartan::SuperCartanDatum;
use superkm_core::qhsa::{
    check_associativity, check_relation_suite, graded_rank, necks_sides, serre_sum, serre_terms, Gen, QHElement,
    QuiverHecke, RelationCheck,
};

fn preset(name: &str) -> SuperCartanDatum {
    SuperCartanDatum::preset(name).unwrap()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn failures(checks: &[RelationCheck]) -> Vec<String> {
    checks.iter().filter(|c| !c.passed).map(|c| format!("{} {} {}", c.relation, c.instance, c.detail)).collect()
}

#[test]
fn squared_crossings() {
    let qh = QuiverHecke::new(&preset("odd-sl2"));
    assert!(qh.normal_form(&[Gen::Cross(0), Gen::Cross(0)], &[0, 0]).is_zero());

    let far = SuperCartanDatum::from_json(
        r#"{"indices": [{"name": "a", "parity": 0, "d_i": 1}, {"name": "b", "parity": 1, "d_i": 1}],
            "d": [[-2, 0], [0, -2]], "t": {"a,b": 3, "b,a": 3}, "s": [], "bar_consistent": true}"#,
    )
    .unwrap();
    let qh = QuiverHecke::new(&far);
    let sq = qh.normal_form(&[Gen::Cross(0), Gen::Cross(0)], &[1, 0]);
    assert_eq!(sq, QHElement::idempotent(&[1, 0]).scale(&int(3)));
}

#[test]
fn dot_slide_on_two_odd_strands() {
    let qh = QuiverHecke::new(&preset("odd-sl2"));
    let e = [0, 0];
    // the dot below the crossing on the left strand against the dot above it on the right
    let lower = qh.normal_form(&[Gen::Cross(0), Gen::Dot(1)], &e);
    let upper = qh.normal_form(&[Gen::Dot(0), Gen::Cross(0)], &e);
    assert_eq!(lower.add(&upper), QHElement::idempotent(&e));
    let sl3 = QuiverHecke::new(&preset("sl3"));
    let lower = sl3.normal_form(&[Gen::Cross(0), Gen::Dot(1)], &e);
    let upper = sl3.normal_form(&[Gen::Dot(0), Gen::Cross(0)], &e);
    assert_eq!(lower.sub(&upper), QHElement::idempotent(&e));
}

#[test]
fn braid_relation_with_dots_on_sl3() {
    let qh = QuiverHecke::new(&preset("sl3"));
    let e = [0, 1, 0];
    let a = qh.normal_form(&[Gen::Cross(1), Gen::Cross(0), Gen::Cross(1)], &e);
    let b = qh.normal_form(&[Gen::Cross(0), Gen::Cross(1), Gen::Cross(0)], &e);
    assert_eq!(a.sub(&b), QHElement::idempotent(&e));
}

#[test]
fn nilhecke_elements() {
    for name in ["odd-sl2", "sl3"] {
        let qh = QuiverHecke::new(&preset(name));
        assert_eq!(qh.nilhecke_idempotent(0, 1), QHElement::idempotent(&[0]));
        let d1 = qh.nilhecke_d(0, 2, 1);
        assert_eq!(qh.multiply(&d1, &d1), d1);
        for n in 2..=4 {
            let e = qh.nilhecke_idempotent(0, n);
            assert!(qh.check_idempotent(&e).is_ok(), "{name}, {n} strands");
            assert_eq!(e.grade(qh.datum()), Some((0, 0)));
        }
    }
    // with the opposite sign on odd strands the square changes sign
    let qh = QuiverHecke::new(&preset("odd-sl2"));
    let naive = qh.normal_form(&[Gen::Cross(0), Gen::Dot(0)], &[0, 0]).scale(&int(-1));
    assert_eq!(qh.multiply(&naive, &naive), naive.scale(&int(-1)));
    assert!(qh.check_idempotent(&naive).is_err());
}

#[test]
fn orthogonal_idempotents() {
    let qh = QuiverHecke::new(&preset("sl3"));
    let (a, b) = (QHElement::idempotent(&[0, 1]), QHElement::idempotent(&[1, 0]));
    assert_eq!(qh.multiply(&a, &a), a);
    assert!(qh.multiply(&a, &b).is_zero());
}

#[test]
fn relation_suite_on_every_preset() {
    for name in SuperCartanDatum::preset_names() {
        let checks = check_relation_suite(&preset(name), 3);
        assert!(checks.len() > 20);
        assert_eq!(failures(&checks), Vec::<String>::new(), "{name}");
    }
}

#[test]
fn associativity_and_normal_form() {
    for name in SuperCartanDatum::preset_names() {
        assert_eq!(failures(&check_associativity(&preset(name), 3, 40, 11)), Vec::<String>::new(), "{name}");
        assert_eq!(failures(&check_associativity(&preset(name), 4, 10, 12)), Vec::<String>::new(), "{name}");
    }
}

#[test]
fn one_strand_ranks() {
    let qh = QuiverHecke::new(&preset("odd-sl2"));
    let g = graded_rank(&qh, &QHElement::idempotent(&[0]), 0, 6).unwrap();
    let ints = |s: &superkm_core::scalars::LaurentSeries| -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    };
    assert_eq!(ints(&g.plus), vec![1, 0, 1, 0, 1, 0, 1]);
    assert_eq!(ints(&g.minus), vec![1, 0, -1, 0, 1, 0, -1]);
    assert!(g.plus.zero_below);

    let below = graded_rank(&qh, &QHElement::idempotent(&[0, 0]), -12, -3).unwrap();
    assert!(below.is_zero());
}

#[test]
fn rank_rejects_non_idempotents() {
    let qh = QuiverHecke::new(&preset("sl3"));
    let x = qh.normal_form(&[Gen::Dot(0)], &[0]);
    assert!(graded_rank(&qh, &x, 0, 4).is_err());
}

#[test]
fn divided_powers_split_the_nilhecke_module() {
    for name in ["odd-sl2", "sl3", "odd-b2"] {
        let qh = QuiverHecke::new(&preset(name));
        for i in 0..qh.datum().rank() {
            for n in 1..=3 {
                let (lhs, rhs) = necks_sides(&qh, i, n, -12, 12).unwrap();
                assert_eq!(lhs, rhs, "{name}, index {i}, {n} strands");
            }
        }
    }
}

#[test]
fn serre_sums_vanish() {
    for (name, i, j) in [("sl3", 0, 1), ("sl3", 1, 0), ("odd-b2", 1, 0), ("odd-b2", 0, 1)] {
        let qh = QuiverHecke::new(&preset(name));
        assert!(serre_sum(&qh, i, j, -12, 12).unwrap().is_zero(), "{name} {i} {j}");
    }
}

#[test]
fn serre_terms_are_nontrivial() {
    let qh = QuiverHecke::new(&preset("odd-b2"));
    let terms = serre_terms(&qh, 0, 1, -12, 12).unwrap();
    assert_eq!(terms.len(), 4);
    assert_eq!(terms.iter().map(|t| t.1).collect::<Vec<_>>(), vec![false, false, true, true]);
    assert!(terms.iter().all(|(t, _)| !t.is_zero()));
    assert_ne!(terms[0].0, terms[1].0);
}
