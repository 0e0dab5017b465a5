mod common;

#[test]
fn mu_at_zero_equals_tau() {
    common::mu_at_zero_is_tau(200).unwrap();
}

#[test]
fn bdf1_closed_form() {
    common::bdf1_identity(200).unwrap();
}

#[test]
fn bdf2_closed_form_at_half() {
    common::bdf2_identity(200).unwrap();
}

#[test]
fn ab2_closed_form_at_four_ninths() {
    common::ab2_identity(60).unwrap();
}

#[test]
fn intervals_contain_exact_terms() {
    common::interval_contains_exact(2000).unwrap();
}
