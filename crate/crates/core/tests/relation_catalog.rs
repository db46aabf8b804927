use superkm_core::cartan::SuperCartanDatum;
use superkm_core::diagrams::lint::{lint_relation, shipped_catalog};

#[test]
fn shipped_catalog_is_homogeneous() {
    let catalog = shipped_catalog();
    assert!(catalog.len() >= 18);
    let mut failures = Vec::new();
    for name in SuperCartanDatum::preset_names() {
        let datum = SuperCartanDatum::preset(name).unwrap();
        for lambda in datum.weights_in_box(-3, 3) {
            for entry in &catalog {
                let report = lint_relation(&datum, entry, &lambda).unwrap();
                failures.extend(report.mismatches.iter().map(|m| format!("{name} {}: {m}", entry.name)));
            }
        }
    }
    let mut by_entry: Vec<String> = failures.iter().map(|f| f.split(':').next().unwrap().to_string()).collect();
    by_entry.dedup();
    assert!(failures.is_empty(), "{} mismatches in {by_entry:?}; first: {:?}", failures.len(), failures.first());
}

/// Every entry compares at least two graded terms somewhere: perturbing its
/// first term by one extra dot (or a bare bubble) must be caught.
#[test]
fn every_entry_is_exercised() {
    let presets: Vec<SuperCartanDatum> =
        SuperCartanDatum::preset_names().map(|n| SuperCartanDatum::preset(n).unwrap()).collect();
    for entry in shipped_catalog() {
        let mut broken = entry.clone();
        let first = &mut broken.terms[0];
        let color = entry.colors[0].clone();
        let extra = if first.bottom.trim().is_empty() {
            vec![format!("cup 0 {color} cw"), format!("cap 0 {color} cw")]
        } else {
            vec!["dot 0 1".to_string()]
        };
        first.slices.splice(0..0, extra);
        let caught = presets.iter().any(|datum| {
            datum.weights_in_box(-3, 3).iter().any(|lambda| !lint_relation(datum, &broken, lambda).unwrap().passed())
        });
        assert!(caught, "{} is never compared", entry.name);
    }
}
