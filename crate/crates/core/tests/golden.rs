//! Golden regression tests: every reference problem must reproduce its
//! known pivot-column trace exactly and its solution numerically.

mod common;

use common::all_cases;
use cpivot::engine::{solve, SolveOutcome, SolverConfig};
use cpivot::oracle::check_certificate;
use cpivot::scalar::{Rational, Scalar};

fn assert_close(got: &[f64], want: &[f64], tol: f64, what: &str) {
    assert_eq!(got.len(), want.len(), "{what}: length");
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        assert!((g - w).abs() <= tol, "{what}[{i}]: got {g}, want {w}");
    }
}

#[test]
fn traces_and_solutions_float() {
    for case in all_cases() {
        let lp = case.lp::<f64>();
        let outcome = solve(&lp, &SolverConfig::default());
        match (&outcome, &case.x) {
            (SolveOutcome::Optimal { x, y, trace, .. }, Some(want_x)) => {
                assert_eq!(
                    trace.column_pairs(),
                    case.trace,
                    "{}: trace mismatch",
                    case.name
                );
                assert_close(x, want_x, 1e-3, case.name);
                assert_close(y, case.y.as_ref().unwrap(), 1e-3, case.name);
                let report = check_certificate(&lp, x, y);
                assert!(report.is_valid(&1e-6), "{}: {report:?}", case.name);
            }
            (SolveOutcome::NoSolution { trace }, None) => {
                assert_eq!(
                    trace.column_pairs(),
                    case.trace,
                    "{}: trace mismatch",
                    case.name
                );
            }
            (other, _) => panic!("{}: unexpected outcome {}", case.name, other.label()),
        }
    }
}

#[test]
fn traces_and_solutions_exact() {
    for case in all_cases() {
        let lp = case.lp::<Rational>();
        let outcome = solve(&lp, &SolverConfig::<Rational>::default());
        match (&outcome, &case.x) {
            (SolveOutcome::Optimal { x, y, trace, .. }, Some(want_x)) => {
                assert_eq!(
                    trace.column_pairs(),
                    case.trace,
                    "{}: exact trace mismatch",
                    case.name
                );
                let xf: Vec<f64> = x.iter().map(Scalar::to_f64).collect();
                let yf: Vec<f64> = y.iter().map(Scalar::to_f64).collect();
                assert_close(&xf, want_x, 1e-3, case.name);
                assert_close(&yf, case.y.as_ref().unwrap(), 1e-3, case.name);
                let report = check_certificate(&lp, x, y);
                assert!(
                    report.is_valid(&Rational::zero()),
                    "{}: {report:?}",
                    case.name
                );
                assert_eq!(trace.ratio_violations, 0, "{}", case.name);
            }
            (SolveOutcome::NoSolution { trace }, None) => {
                assert_eq!(trace.column_pairs(), case.trace, "{}", case.name);
            }
            (other, _) => panic!("{}: unexpected outcome {}", case.name, other.label()),
        }
    }
}

#[test]
fn iteration_counts_stay_within_dimension_bound() {
    for case in all_cases() {
        let lp = case.lp::<f64>();
        let outcome = solve(&lp, &SolverConfig::default());
        let trace = outcome.trace();
        assert!(
            trace.iterations <= lp.k() + lp.n(),
            "{}: {} iterations for k+n = {}",
            case.name,
            trace.iterations,
            lp.k() + lp.n()
        );
    }
}
