//! A linear-programming solver built on complementary Gauss-Jordan pivoting
//! over the combined primal-dual system, together with an independent
//! certificate/oracle layer that verifies every claimed solution.
//!
//! The solver works on problems in symmetric form
//!
//! ```text
//! maximize f^T x   subject to   Ax <= b,  x >= 0
//! ```
//!
//! which are first translated into a constrained linear system `Mz = q`,
//! `z >= 0` with the complementarity relations `z_j * z_{k+n+j} = 0`. Each
//! iteration performs a pair of complementary Gauss-Jordan pivots (a minor
//! and a major instance) on the augmented tableau until either `q >= 0`
//! (solved) or the last row witnesses that no solution exists.
//!
//! Two scalar backends are supported: `f64` and exact rationals. Pivot
//! sequences are sensitive to zero tests, so exact mode makes regression
//! traces unambiguous.

pub mod engine;
pub mod formats;
pub mod model;
pub mod oracle;
pub mod problems;
pub mod scalar;
pub mod tableau;

pub use engine::{solve, SolveOutcome, SolveTrace, SolverConfig, TraceLevel};
pub use model::{build_eq, fold_back, normalize, GeneralProblem, LinearProgram};
pub use oracle::{check_certificate, cross_check, oracle_solve, CertificateReport, Finding};
pub use scalar::{Rational, Scalar};
