use cliffordt::selftest::run_criterion;

fn check(id: u8) {
    let report = run_criterion(id).expect("criterion exists");
    println!("{report}");
    assert!(report.passed, "{report}");
}

#[test]
fn c01_group_cardinalities() {
    check(1);
}

#[test]
fn c02_residue_table() {
    check(2);
}

#[test]
fn c03_uniqueness_census() {
    check(3);
}

#[test]
fn c04_normalization_soundness() {
    check(4);
}

#[test]
fn c05_t_optimality() {
    check(5);
}

#[test]
fn c06_t_count_is_k() {
    check(6);
}

#[test]
fn c07_synthesis_round_trip() {
    check(7);
}

#[test]
fn c08_residue_analytics() {
    check(8);
}

#[test]
fn c09_lemma_suite() {
    check(9);
}

#[test]
fn c10_linearity() {
    check(10);
}

#[test]
fn c11_alternative_forms() {
    check(11);
}
