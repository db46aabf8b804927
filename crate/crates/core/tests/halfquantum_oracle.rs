use superkm_core::cartan::SuperCartanDatum;
use superkm_core::halfquantum::{f_form_oracle, f_form_oracle_with, words_of_length, HalfQuantum, InversionColors};

fn presets() -> Vec<SuperCartanDatum> {
    SuperCartanDatum::preset_names().map(|n| SuperCartanDatum::preset(n).unwrap()).collect()
}

#[test]
fn recursion_matches_permutation_sum() {
    for datum in presets() {
        let h = HalfQuantum::new(&datum);
        for len in 0..=4 {
            let words = words_of_length(datum.rank(), len);
            for a in &words {
                for b in &words {
                    assert_eq!(h.f_form(a, b), f_form_oracle(&datum, a, b), "{a:?} {b:?}");
                }
            }
        }
    }
}

#[test]
fn position_colored_inversions_disagree_somewhere() {
    let datum = SuperCartanDatum::preset("odd-b2").unwrap();
    let h = HalfQuantum::new(&datum);
    let words = words_of_length(2, 3);
    let mismatch = words
        .iter()
        .any(|a| words.iter().any(|b| h.f_form(a, b) != f_form_oracle_with(&datum, a, b, InversionColors::Positions)));
    assert!(mismatch);
}

#[test]
fn form_is_symmetric() {
    for datum in presets() {
        let h = HalfQuantum::new(&datum);
        for len in 0..=4 {
            let words = words_of_length(datum.rank(), len);
            for a in &words {
                for b in &words {
                    assert_eq!(h.f_form(a, b), h.f_form(b, a), "{a:?} {b:?}");
                }
            }
        }
    }
}
