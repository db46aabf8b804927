use proptest::prelude::*;
use superkm_core::cartan::{RootVector, SuperCartanDatum, Weight};
use superkm_core::covering::{CoveringForm, Letter, SignedWord, UExpression};
use superkm_core::diagrams::graphical_form;
use superkm_core::halfquantum::{f_form_oracle, HalfQuantum};
use superkm_core::scalars::{qpi_binom, qpi_int, qpi_int_at, to_series, PiScalar};

const PRESETS: [&str; 3] = ["odd-sl2", "odd-b2", "sl3"];

fn preset(k: usize) -> SuperCartanDatum {
    SuperCartanDatum::preset(PRESETS[k]).unwrap()
}

fn laurent() -> impl Strategy<Value = PiScalar> {
    prop::collection::vec((-3i64..=3, -4i64..=4, 0i64..=1), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(PiScalar::zero(), |acc, (c, e, p)| &acc + &(&PiScalar::from_int(c) * &PiScalar::monomial(e, p)))
    })
}

/// Laurent polynomials divided by `1 - pi^p q^k`, so power series expansions
/// start at a finite degree.
fn scalar() -> impl Strategy<Value = PiScalar> {
    (laurent(), prop::option::of((1i64..=4, 0i64..=1))).prop_map(|(num, den)| match den {
        Some((k, p)) => num.checked_div(&(&PiScalar::one() - &PiScalar::monomial(k, p))).unwrap(),
        None => num,
    })
}

fn letters(rank: usize, max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((any::<bool>(), 0..rank), 0..=max)
        .prop_map(|v| v.into_iter().map(|(up, i)| Letter { up, i }).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn bar_is_an_involutive_ring_map(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn series_of_a_product(a in scalar(), b in scalar()) {
        let (sa, sb) = (to_series(&a, -8, 8), to_series(&b, -8, 8));
        let prod = sa.mul(&sb).expect("expansions vanish below the window");
        let direct = to_series(&(&a * &b), prod.min(), prod.max());
        prop_assert_eq!(direct.restrict(prod.min(), prod.max()), Some(prod));
    }

    #[test]
    fn pairing_shift_is_additive(k in 0..3usize, h in prop::collection::vec(-4i64..=4, 2), v in prop::collection::vec(-3i64..=3, 2), w in prop::collection::vec(-3i64..=3, 2)) {
        let d = preset(k);
        let n = d.rank();
        let lambda = Weight(h[..n].to_vec());
        let (v, w) = (RootVector(v[..n].to_vec()), RootVector(w[..n].to_vec()));
        prop_assert_eq!(d.pairing_shift(&lambda, &v.add(&w)), d.pairing_shift(&d.pairing_shift(&lambda, &v), &w));
    }

    #[test]
    fn form_is_sesquilinear(k in 0..3usize, a in letters(2, 3), b in letters(2, 3), h in -2i64..=2, c in scalar()) {
        let d = preset(k);
        let keep = |w: Vec<Letter>| -> Vec<Letter> { w.into_iter().filter(|l| l.i < d.rank()).collect() };
        let lambda = Weight(vec![h; d.rank()]);
        let x = UExpression::word(&SignedWord::new(keep(a), lambda.clone()));
        let y = UExpression::word(&SignedWord::new(keep(b), lambda));
        let form = CoveringForm::new(&d);
        let v = form.cq_form_expr(&x, &y);
        prop_assert_eq!(form.cq_form_expr(&x.scale(&c), &y), &c.bar() * &v);
        prop_assert_eq!(form.cq_form_expr(&x, &y.scale(&c)), &c * &v);
    }
}

#[test]
fn binomial_bar() {
    for n in 0..=6i64 {
        for r in 0..=n as u32 {
            let b = qpi_binom(n, r);
            let twist = PiScalar::pi_pow(r as i64 * (n - r as i64));
            assert_eq!(b.bar(), &twist * &b, "n={n} r={r}");
        }
    }
}

#[test]
fn negative_quantum_integers() {
    for n in 1..=8 {
        assert_eq!(qpi_int(-n), -&(&PiScalar::pi() * &qpi_int(n).bar()), "n={n}");
    }
}

#[test]
fn parity_is_constant_along_root_shifts() {
    for name in PRESETS {
        let d = SuperCartanDatum::preset(name).unwrap();
        for lambda in d.weights_in_box(-4, 4) {
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    for sign in [1, -1] {
                        let moved = d.shift_simple(&lambda, j, sign);
                        assert_eq!(
                            d.parity_i_lambda(i, &moved),
                            d.parity_i_lambda(i, &lambda),
                            "{name} {lambda} {i} {j}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn f_form_orthogonal_across_degrees() {
    for name in PRESETS {
        let d = SuperCartanDatum::preset(name).unwrap();
        let half = HalfQuantum::new(&d);
        for len in 1..=3 {
            let words = superkm_core::halfquantum::words_of_length(d.rank(), len);
            for a in &words {
                for b in &words {
                    let (mut sa, mut sb) = (a.clone(), b.clone());
                    sa.sort();
                    sb.sort();
                    if sa != sb {
                        assert!(half.f_form(a, b).is_zero(), "{name} {a:?} {b:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn positive_words_match_the_half_form() {
    for name in PRESETS {
        let d = SuperCartanDatum::preset(name).unwrap();
        for lambda in d.weights_in_box(-2, 2) {
            for len in 0..=3 {
                for a in superkm_core::halfquantum::words_of_length(d.rank(), len) {
                    for b in superkm_core::halfquantum::words_of_length(d.rank(), len) {
                        let up =
                            |w: &[usize]| SignedWord::new(w.iter().map(|&i| Letter::up(i)).collect(), lambda.clone());
                        assert_eq!(
                            graphical_form(&d, &up(&a), &up(&b)),
                            f_form_oracle(&d, &a, &b),
                            "{name} {a:?} {b:?}"
                        );
                    }
                }
            }
        }
    }
}

/// `<1, a e f b> - pi_i <1, a f e b> = [<h_i, mu>] <1, a b>`, with `mu` the
/// weight the pair acts on; in the antilinear slot the bracket is conjugated.
#[test]
fn commutator_of_e_and_f() {
    for name in PRESETS {
        let d = SuperCartanDatum::preset(name).unwrap();
        let form = CoveringForm::new(&d);
        for lambda in d.weights_in_box(-2, 2) {
            let empty = SignedWord::empty(lambda.clone());
            for i in 0..d.rank() {
                let pi = PiScalar::pi_pow(d.parity(i) as i64);
                for la in 0..=2 {
                    for lb in 0..=2 - la {
                        for a in superkm_core::covering::signed_words_of_length(d.rank(), la) {
                            for b in superkm_core::covering::signed_words_of_length(d.rank(), lb) {
                                let with = |mid: [Letter; 2]| {
                                    SignedWord::new([a.clone(), mid.to_vec(), b.clone()].concat(), lambda.clone())
                                };
                                let (ef, fe) =
                                    (with([Letter::up(i), Letter::down(i)]), with([Letter::down(i), Letter::up(i)]));
                                let ab = SignedWord::new([a.clone(), b.clone()].concat(), lambda.clone());
                                let mu = ef.source_weight(&d, la + 1);
                                let bracket = qpi_int_at(mu.h(i), d.d_i(i), d.parity(i));
                                let right = &form.cq_form(&empty, &ef) - &(&pi * &form.cq_form(&empty, &fe));
                                assert_eq!(right, &bracket * &form.cq_form(&empty, &ab), "{name} {lambda} {a:?} {b:?}");
                                let left = &graphical_form(&d, &ef, &empty) - &(&pi * &graphical_form(&d, &fe, &empty));
                                assert_eq!(
                                    left,
                                    &bracket.bar() * &graphical_form(&d, &ab, &empty),
                                    "{name} {lambda} {a:?} {b:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
