//! The diagram corpus shipped with the tool.
//!
//! Each entry is a small G-Kirby diagram used by the verification suite.

/// Names and source texts of the corpus diagrams.
pub const CORPUS: &[(&str, &str)] = &[
    ("braid3_a", include_str!("../../../corpus/braid3_a.kd")),
    ("braid3_b", include_str!("../../../corpus/braid3_b.kd")),
    ("cancel_pair", include_str!("../../../corpus/cancel_pair.kd")),
    ("dot_pierced_twice", include_str!("../../../corpus/dot_pierced_twice.kd")),
    ("dotted_unknot", include_str!("../../../corpus/dotted_unknot.kd")),
    ("hopf", include_str!("../../../corpus/hopf.kd")),
    ("hopf_01", include_str!("../../../corpus/hopf_01.kd")),
    ("hopf_11", include_str!("../../../corpus/hopf_11.kd")),
    ("hopf_20", include_str!("../../../corpus/hopf_20.kd")),
    ("hopf_braid", include_str!("../../../corpus/hopf_braid.kd")),
    ("minus_one", include_str!("../../../corpus/minus_one.kd")),
    ("minus_one_braid", include_str!("../../../corpus/minus_one_braid.kd")),
    ("plus_one", include_str!("../../../corpus/plus_one.kd")),
    ("plus_one_braid", include_str!("../../../corpus/plus_one_braid.kd")),
    ("plus_one_ccw", include_str!("../../../corpus/plus_one_ccw.kd")),
    ("plus_one_dotted", include_str!("../../../corpus/plus_one_dotted.kd")),
    ("trefoil", include_str!("../../../corpus/trefoil.kd")),
    ("unknot", include_str!("../../../corpus/unknot.kd")),
    ("unknot_ccw", include_str!("../../../corpus/unknot_ccw.kd")),
    ("unknot_plus_one", include_str!("../../../corpus/unknot_plus_one.kd")),
    ("unknot_r2", include_str!("../../../corpus/unknot_r2.kd")),
    ("unknot_snake", include_str!("../../../corpus/unknot_snake.kd")),
];

/// Source text of a corpus diagram.
pub fn source(name: &str) -> Option<&'static str> {
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Parses a corpus diagram.
///
/// # Panics
///
/// Panics if the name is unknown; the corpus is fixed at compile time.
pub fn load(name: &str) -> diagram::GKirbyDiagram {
    let text = source(name).unwrap_or_else(|| panic!("no corpus diagram named {name}"));
    diagram::parse(text).unwrap_or_else(|e| panic!("corpus diagram {name}: {e}"))
}
