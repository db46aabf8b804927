use superkm_core::cartan::SuperCartanDatum;
use superkm_core::covering::{signed_words_of_length, CoveringForm, SignedWord};
use superkm_core::diagrams::graphical_form_scaled;

#[test]
fn matching_sum_equals_form_up_to_six_letters() {
    for name in SuperCartanDatum::preset_names() {
        let datum = SuperCartanDatum::preset(name).unwrap();
        let form = CoveringForm::new(&datum);
        for lambda in datum.weights_in_box(-2, 2) {
            for total in 0..=6usize {
                for la in 0..=total {
                    for a in signed_words_of_length(datum.rank(), la) {
                        for b in signed_words_of_length(datum.rank(), total - la) {
                            let a = SignedWord::new(a.clone(), lambda.clone());
                            let b = SignedWord::new(b, lambda.clone());
                            let x = form.cq_form_scaled(&a, &b);
                            let y = graphical_form_scaled(&datum, &a, &b);
                            assert_eq!(x, y, "{name} lambda={lambda} a={:?} b={:?}", a.letters, b.letters);
                        }
                    }
                }
            }
        }
    }
}
