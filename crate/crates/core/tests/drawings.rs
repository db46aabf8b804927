use superkm_core::cartan::SuperCartanDatum;
use superkm_core::covering::signed_words_of_length;
use superkm_core::diagrams::{compile, compile_variants, enumerate_pairings, interleaving_count};

#[test]
fn canonical_drawing_is_reduced_up_to_eight_points() {
    for total in (0..=8usize).step_by(2) {
        for la in 0..=total {
            for a in signed_words_of_length(1, la) {
                for b in signed_words_of_length(1, total - la) {
                    for p in enumerate_pairings(&a, &b) {
                        let il = interleaving_count(&p);
                        assert_eq!(compile(&p).crossings(), il, "{:?}", p.partner);
                        for v in compile_variants(&p) {
                            assert_eq!(v.crossings(), il);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn grade_does_not_depend_on_the_drawing() {
    for name in SuperCartanDatum::preset_names() {
        let datum = SuperCartanDatum::preset(name).unwrap();
        for lambda in datum.weights_in_box(-2, 2) {
            for total in (0..=6usize).step_by(2) {
                for la in 0..=total {
                    for a in signed_words_of_length(datum.rank(), la) {
                        for b in signed_words_of_length(datum.rank(), total - la) {
                            for p in enumerate_pairings(&a, &b) {
                                let grades: Vec<_> =
                                    compile_variants(&p).iter().map(|s| s.grade(&datum, &lambda)).collect();
                                assert!(grades.windows(2).all(|w| w[0] == w[1]), "{name} {lambda} {p:?} {grades:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}
