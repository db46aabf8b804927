use superkm_core::cartan::{SuperCartanDatum, Weight};
use superkm_core::covering::{divided_word, CoveringForm, SignedWord};
use superkm_core::scalars::{theta_norm, PiScalar};

fn word(d: &SuperCartanDatum, text: &str, h: i64) -> SignedWord {
    SignedWord::parse(d, text, Weight(vec![h])).unwrap()
}

#[test]
fn example_values_odd_sl2() {
    let d = SuperCartanDatum::preset("odd-sl2").unwrap();
    let form = CoveringForm::new(&d);
    let norm = theta_norm(1, 1);
    for h in -2..=2 {
        let v = form.cq_form(&word(&d, "+i -i", h), &word(&d, "", h));
        assert_eq!(v, &PiScalar::q_pow(1 - h) * &norm, "h={h}");
        let w = form.cq_form(&word(&d, "+i -i", h), &word(&d, "-i +i", h));
        let expect = &(&PiScalar::pi() + &PiScalar::q_pow(2)) * &norm.pow(2);
        assert_eq!(w, expect, "h={h}");
        let back = form.cq_form(&word(&d, "", h), &word(&d, "+i -i", h));
        let par = d.parity_i_lambda(0, &Weight(vec![h])) as i64;
        assert_eq!(v, &PiScalar::pi_pow(par) * &back, "h={h}");
        let w2 = form.cq_form(&word(&d, "-i +i", h), &word(&d, "+i -i", h));
        assert_eq!(w2, expect, "h={h}");
    }
}

#[test]
fn divided_power_norms() {
    let d = SuperCartanDatum::preset("odd-sl2").unwrap();
    let form = CoveringForm::new(&d);
    for h in -2..=2 {
        let lambda = Weight(vec![h]);
        for r in 1..=3u32 {
            let mut expect = PiScalar::one();
            for s in 1..=r as i64 {
                expect = &expect * &(&PiScalar::one() - &PiScalar::monomial(2 * s, s)).inv().unwrap();
            }
            for up in [true, false] {
                let x = divided_word(&d, up, 0, r, &lambda);
                assert_eq!(form.cq_form_expr(&x, &x), expect, "r={r} up={up} h={h}");
            }
        }
    }
}
