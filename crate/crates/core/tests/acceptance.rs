//! The acceptance suite: one test per criterion, full sweep sizes.
//!
//! Each test prints its pass/fail line (visible with `--nocapture`, and
//! always on failure). `stiefel verify` runs the same checks.

use stiefel_core::acceptance::{run_criterion, Mode};

fn run(id: u32) {
    let report = run_criterion(id, Mode::Full);
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_01_james_constants() {
    run(1);
}

#[test]
fn criterion_02_james_bounds() {
    run(2);
}

#[test]
fn criterion_03_hom_ext_oracle() {
    run(3);
}

#[test]
fn criterion_04_partial_fractions() {
    run(4);
}

#[test]
fn criterion_05_completion_splitting() {
    run(5);
}

#[test]
fn criterion_06_figure_1_chart() {
    run(6);
}

#[test]
fn criterion_07_section_decisions() {
    run(7);
}

#[test]
fn criterion_08_proof_obligations() {
    run(8);
}

#[test]
fn criterion_09_stable_iso_band() {
    run(9);
}

#[test]
fn criterion_10_convention_coherence() {
    run(10);
}
