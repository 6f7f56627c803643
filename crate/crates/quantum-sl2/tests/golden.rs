//! Golden files of the closed forms and split structure tables at `p = 2`.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files.

use std::path::PathBuf;

use gcoalg_core::GradedHopfData;
use quantum_sl2::{ClosedFormBundle, QuantumGroupInstance, Variant};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(name)
}

fn compare_or_update(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}; run with UPDATE_GOLDEN=1", path.display()));
    assert!(expected == actual, "{} differs from the computed value", path.display());
}

#[test]
fn closed_forms_match_golden_files() {
    for (variant, name) in [(Variant::Restricted, "closed_forms_u_p2.json"), (Variant::Tilde, "closed_forms_tilde_p2.json"), (Variant::Small, "closed_forms_small_p2.json")] {
        let inst = QuantumGroupInstance::new(variant, 2).unwrap();
        let bundle = inst.closed_form_bundle().unwrap();
        let text = serde_json::to_string_pretty(&bundle).unwrap();
        compare_or_update(name, &text);
        let back: ClosedFormBundle = serde_json::from_str(&text).unwrap();
        assert_eq!(back, bundle);
    }
}

#[test]
fn split_tables_match_golden_files() {
    for (variant, name) in [(Variant::Restricted, "graded_u_p2.json"), (Variant::Tilde, "graded_tilde_p2.json")] {
        let inst = QuantumGroupInstance::new(variant, 2).unwrap();
        let g = inst.graded().unwrap();
        let text = g.to_json();
        compare_or_update(name, &text);
        assert_eq!(GradedHopfData::from_json(&text).unwrap(), g);
    }
}
