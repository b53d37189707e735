#[path = "support/properties.rs"]
mod properties;

#[test]
fn poisson_bracket_satisfies_jacobi() {
    properties::jacobi_identity(100).unwrap();
}

#[test]
fn igusa_invariants_are_homogeneous() {
    properties::igusa_homogeneity(100).unwrap();
}

#[test]
fn igusa_invariants_ignore_translation() {
    properties::igusa_translation(100).unwrap();
}

#[test]
fn igusa_invariants_ignore_reversal() {
    properties::igusa_reversal(100).unwrap();
}

#[test]
fn j10_vanishes_with_the_discriminant() {
    properties::j10_discriminant(100, 20).unwrap();
}

#[test]
fn infinity_models_glue_back() {
    properties::infinity_round_trip(100).unwrap();
}
