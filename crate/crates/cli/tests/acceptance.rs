//! The acceptance gate: one test per shipped guarantee, each printing a
//! single `criterion k (...): PASS|FAIL` line (visible under
//! `cargo test --test acceptance -- --nocapture`). Every comparison is
//! coefficient-exact — a check passes only when its defect is identically
//! zero, never merely small.

use std::process::Command;

use serde_json::Value;
use svq_core::generator::generator_grid;
use svq_core::twist::{
    antipode_twisted, closed_form_antipode, closed_form_delta, delta_twisted, twist_axiom_defects,
};
use svq_core::{
    run_suite, CheckStatus, Generator, Report, Suite, SuiteConfig, TwistCase, TwistData, UeaElement,
};

fn conclude(number: usize, label: &str, failures: Vec<String>) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number} ({label}): {verdict}");
    assert!(
        failures.is_empty(),
        "criterion {number} ({label}): {}",
        failures.join("; ")
    );
}

/// Runs `suites` on the default grids (n0 ∈ {1,2,3} filtered odd where a
/// case needs it, |n| <= 3, |p| <= 5/2, a ∈ {0, ±1, 1/2, 1/3}) and returns
/// diagnostics for every failing record, plus a floor on the record count so
/// an accidentally empty grid cannot pass vacuously.
fn suite_failures(suites: &[Suite], order: usize, at_least: usize) -> Vec<String> {
    let cfg = SuiteConfig {
        suites: suites.to_vec(),
        order,
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg);
    let mut failures: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Fail)
        .take(5)
        .map(|c| format!("{} {} {:?}", c.suite, c.name, c.params))
        .collect();
    if report.checks.len() < at_least {
        failures.push(format!(
            "only {} records where at least {at_least} were expected",
            report.checks.len()
        ));
    }
    failures
}

#[test]
fn criterion_1_lie_bialgebra_layer() {
    conclude(
        1,
        "Jacobi, distinguished pairs, Yang-Baxter and cocycle on the full grid",
        suite_failures(&[Suite::Bialgebra], 2, 300),
    );
}

#[test]
fn criterion_2_pbw_and_undeformed_hopf() {
    conclude(
        2,
        "PBW straightening laws and the exact undeformed Hopf axioms",
        suite_failures(&[Suite::PbwHopf], 2, 500),
    );
}

#[test]
fn criterion_3_factorial_commutation_and_transport_lemmas() {
    conclude(
        3,
        "factorial/commutation/straightening/transport identities and inverse pairs at N=4",
        suite_failures(&[Suite::Lemmas], 4, 1500),
    );
}

#[test]
fn criterion_4_twist_axioms() {
    let mut failures = Vec::new();
    for (case_no, n0s) in [(1u8, &[1i64, 2, 3][..]), (2, &[1, 3]), (3, &[1, 2])] {
        for &n0 in n0s {
            let case = TwistCase::new(case_no, n0).expect("a valid case point");
            let data = TwistData::new(case, 4);
            let (cocycle, counit_left, counit_right) = twist_axiom_defects(&data);
            for (name, defect) in [
                ("cocycle", cocycle),
                ("counit-left", counit_left),
                ("counit-right", counit_right),
            ] {
                if !defect.is_zero() {
                    failures.push(format!("case {case_no}, n0 {n0}: {name} defect {defect}"));
                }
            }
        }
    }
    conclude(
        4,
        "both twist axioms to t^4 at all seven case points",
        failures,
    );
}

#[test]
fn criterion_5_closed_forms_match_conjugation() {
    let mut failures = Vec::new();
    for (case_no, n0s) in [(1u8, &[1i64, 2, 3][..]), (2, &[1, 3])] {
        for &n0 in n0s {
            let case = TwistCase::new(case_no, n0).expect("a valid case point");
            let data = TwistData::new(case, 5);
            for g in generator_grid(3) {
                let x = UeaElement::generator(g.clone());
                let delta_defect = delta_twisted(&data, &x)
                    .sub(&closed_form_delta(&data, &g).expect("cases 1 and 2 have closed forms"));
                let antipode_defect = antipode_twisted(&data, &x)
                    .sub(&closed_form_antipode(&data, &g).expect("closed antipode"));
                for (name, defect) in [("delta", delta_defect), ("antipode", antipode_defect)] {
                    if !defect.is_zero() {
                        failures.push(format!("case {case_no}, n0 {n0}, {g}: {name} differs"));
                    }
                }
            }
        }
    }

    // and the deformation is genuine: the twisted coproduct of L(1) is
    // visibly noncocommutative already in its t^1 coefficient
    let data = TwistData::new(TwistCase::new(1, 1).unwrap(), 5);
    let d = delta_twisted(&data, &UeaElement::generator(Generator::l(1)));
    let flipped = d.map_coeffs(2, |c| c.swap());
    if d.sub(&flipped).is_zero() {
        failures.push("the twisted coproduct of L(1) came out cocommutative".into());
    }

    conclude(
        5,
        "closed coproducts/antipodes equal their conjugations at N=5, both cases",
        failures,
    );
}

#[test]
fn criterion_6_twisted_hopf_axioms() {
    let cfg = SuiteConfig {
        suites: vec![Suite::Theorem1, Suite::Theorem2, Suite::Case3Hopf],
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg);
    let mut failures: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Fail)
        .take(5)
        .map(|c| format!("{} {} {:?}", c.suite, c.name, c.params))
        .collect();
    // all three cases must actually be exercised, the third included even
    // though it has no closed forms
    for suite in [Suite::Theorem1, Suite::Theorem2, Suite::Case3Hopf] {
        if !report
            .checks
            .iter()
            .any(|c| c.suite == suite && c.name == "hopf-coassociativity")
        {
            failures.push(format!("{suite} ran no coassociativity record"));
        }
    }
    conclude(6, "twisted Hopf axioms to t^4 in all three cases", failures);
}

#[test]
fn criterion_7_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_svq");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .expect("the binary runs")
    };
    let mut failures = Vec::new();
    fn expect(failures: &mut Vec<String>, ok: bool, what: &str) {
        if !ok {
            failures.push(what.to_string());
        }
    }

    // the default configuration passes end to end and the JSON schema
    // round-trips through the typed report
    let full = run(&["verify", "--format", "json"]);
    expect(
        &mut failures,
        full.status.code() == Some(0),
        "default verify should exit 0",
    );
    let text = String::from_utf8(full.stdout).expect("UTF-8 stdout");
    match serde_json::from_str::<Report>(&text) {
        Ok(report) => {
            let raw: Value = serde_json::from_str(&text).unwrap();
            expect(
                &mut failures,
                serde_json::to_value(&report).unwrap() == raw,
                "JSON round-trip should be lossless",
            );
            expect(
                &mut failures,
                report.all_passed() && !report.checks.is_empty(),
                "default report should be nonempty and all-pass",
            );
        }
        Err(e) => failures.push(format!("stdout is not a Report: {e}")),
    }

    // negative control: theorem2 without an odd n0 is a usage error
    let parity = run(&["verify", "--suite", "theorem2", "--n0", "2"]);
    expect(
        &mut failures,
        parity.status.code() == Some(2),
        "parity control should exit 2",
    );

    // negative control: a corrupted bracket table must fail the
    // conjugation checks and exit 1
    let corrupt = run(&[
        "verify",
        "--suite",
        "theorem1",
        "--n0",
        "1",
        "--order",
        "2",
        "--range",
        "1",
        "--corrupt-bracket",
        "--format",
        "json",
    ]);
    expect(
        &mut failures,
        corrupt.status.code() == Some(1),
        "corrupt control should exit 1",
    );
    match serde_json::from_slice::<Report>(&corrupt.stdout) {
        Ok(report) => expect(
            &mut failures,
            report.summary.failed > 0
                && report.checks.iter().any(|c| {
                    c.name == "delta-closed-form"
                        && c.status == CheckStatus::Fail
                        && c.defect.as_deref().is_some_and(|d| !d.is_empty())
                }),
            "corrupt control should fail closed-form checks with a defect witness",
        ),
        Err(e) => failures.push(format!("corrupt-control stdout is not a Report: {e}")),
    }

    // negative control: case 3 has no closed form
    let closed = run(&[
        "expand",
        "--case",
        "3",
        "--n0",
        "1",
        "--op",
        "delta-closed",
        "--gen",
        "L(1)",
    ]);
    expect(
        &mut failures,
        closed.status.code() == Some(2),
        "case-3 closed form should exit 2",
    );

    conclude(
        7,
        "CLI: default run exits 0, JSON round-trips, all negative controls fail",
        failures,
    );
}
