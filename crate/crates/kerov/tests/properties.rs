mod common;

use common::{runner, suites, CASES};

fn run(name: &str) {
    let suite = suites().into_iter().find(|s| s.name == name).expect("suite exists");
    if let Err(e) = (suite.run)(&mut runner(CASES)) {
        panic!("{name}: {e}");
    }
}

#[test]
fn every_suite_is_listed_once() {
    let names: Vec<_> = suites().iter().map(|s| s.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
}

#[test]
fn p1_vanishes() {
    run("p1 vanishes");
}

#[test]
fn interlacing() {
    run("interlacing");
}

#[test]
fn dilation_homogeneity() {
    run("dilation homogeneity");
}

#[test]
fn basis_conversion_round_trip() {
    run("basis conversion round trip");
}

#[test]
fn moments_agree_with_atoms() {
    run("moments agree with atoms");
}

#[test]
fn r2_equals_size() {
    run("R2 equals size");
}

#[test]
fn jack_orthogonality_and_norms() {
    run("Jack orthogonality and norms");
}

#[test]
fn partition_order_laws() {
    run("partition order laws");
}

#[test]
fn field_arithmetic() {
    run("field arithmetic");
}

#[test]
fn growth_kernel_is_a_probability() {
    run("growth kernel is a probability");
}

#[test]
fn box_adding_update() {
    run("box-adding update");
}

#[test]
fn kerov_polynomial_evaluates_to_ch() {
    run("Kerov polynomial evaluates to Ch");
}
