//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use sesqui::acceptance::{run_criterion, Config};
use std::io::Write;

fn check(id: u8) {
    let result = run_criterion(id, &Config::default()).expect("criterion exists");
    // Written to the raw handle so the line shows without `--nocapture`.
    let _ = writeln!(std::io::stderr(), "{}", result.line());
    assert!(result.passed, "{}", result.line());
}

#[test]
fn criterion_1_sts_block_graph_parameters() {
    check(1);
}

#[test]
fn criterion_2_block_graph_witness_pipeline() {
    check(2);
}

#[test]
fn criterion_3_cycle_complement_and_cube_witnesses() {
    check(3);
}

#[test]
fn criterion_4_closed_form_quotient_eigenvalues() {
    check(4);
}

#[test]
fn criterion_5_figure_fixtures() {
    check(5);
}

#[test]
fn criterion_6_interlacing_property_suite() {
    check(6);
}

#[test]
fn criterion_7_search_oracle_equivalence() {
    check(7);
}

#[test]
fn criterion_8_hoffman_calculus() {
    check(8);
}

#[test]
fn criterion_9_support_law_suite() {
    check(9);
}
