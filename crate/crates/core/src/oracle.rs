//! Independent verification layer: an optimality certificate checker, a
//! textbook two-phase simplex, exhaustive basis enumeration for small
//! problems, and cross-checking of solver outcomes against both.
//!
//! Nothing here shares code with the pivoting engine, so agreement between
//! the two is meaningful evidence.

use itertools::Itertools;
use serde::Serialize;

use crate::engine::{SolveOutcome, SolverConfig};
use crate::model::{dot, LinearProgram};
use crate::problems::random_lp;
use crate::scalar::Scalar;

/// What an oracle concluded about a problem.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleOutcome<S> {
    Optimal {
        x: Vec<S>,
        y: Vec<S>,
        objective: S,
    },
    Infeasible,
    Unbounded,
    /// Iteration cap reached; should not happen with Bland's rule and is
    /// reported rather than trusted.
    Stalled,
}

impl<S> OracleOutcome<S> {
    pub fn label(&self) -> &'static str {
        match self {
            OracleOutcome::Optimal { .. } => "optimal",
            OracleOutcome::Infeasible => "infeasible",
            OracleOutcome::Unbounded => "unbounded",
            OracleOutcome::Stalled => "stalled",
        }
    }
}

/// The full complementary-slackness vector `z = (y, x, b - Ax, A^T y - f)`
/// induced by a primal/dual pair.
pub fn assemble_z<S: Scalar>(lp: &LinearProgram<S>, x: &[S], y: &[S]) -> Vec<S> {
    let (k, n) = (lp.k(), lp.n());
    let mut z = Vec::with_capacity(2 * (k + n));
    z.extend(y.iter().cloned());
    z.extend(x.iter().cloned());
    for i in 0..k {
        z.push(lp.b[i].clone() - dot(&lp.a[i], x));
    }
    for j in 0..n {
        let col: S = (0..k).fold(S::zero(), |acc, i| acc + lp.a[i][j].clone() * y[i].clone());
        z.push(col - lp.f[j].clone());
    }
    z
}

/// Quantified optimality evidence for a claimed primal/dual pair. All
/// quantities are zero (within tolerance) exactly when `(x, y)` is an
/// optimal pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport<S> {
    /// Worst violation of `Ax <= b`, `x >= 0`.
    pub primal_infeasibility: S,
    /// Worst violation of `A^T y >= f`, `y >= 0`.
    pub dual_infeasibility: S,
    /// `|f^T x - b^T y|`.
    pub duality_gap: S,
    /// Largest product `|z_j * z_{k+n+j}|` over complementary pairs.
    pub complementarity: S,
    pub objective: S,
    pub dual_objective: S,
}

impl<S: Scalar> CertificateReport<S> {
    pub fn is_valid(&self, tol: &S) -> bool {
        self.primal_infeasibility <= *tol
            && self.dual_infeasibility <= *tol
            && self.duality_gap <= *tol
            && self.complementarity <= *tol
    }

    pub fn worst(&self) -> S {
        [
            &self.primal_infeasibility,
            &self.dual_infeasibility,
            &self.duality_gap,
            &self.complementarity,
        ]
        .into_iter()
        .fold(S::zero(), |acc, v| if *v > acc { v.clone() } else { acc })
    }
}

fn max_of<S: Scalar>(values: impl IntoIterator<Item = S>) -> S {
    values
        .into_iter()
        .fold(S::zero(), |acc, v| if v > acc { v } else { acc })
}

/// Evaluates a claimed primal/dual pair against the original data:
/// feasibility of both, the duality gap, and complementary slackness.
pub fn check_certificate<S: Scalar>(
    lp: &LinearProgram<S>,
    x: &[S],
    y: &[S],
) -> CertificateReport<S> {
    let (k, n) = (lp.k(), lp.n());
    assert_eq!(x.len(), n, "x has wrong length");
    assert_eq!(y.len(), k, "y has wrong length");
    let z = assemble_z(lp, x, y);
    let dim = k + n;
    // z = (y, x, b - Ax, A^T y - f): negativity anywhere is an infeasibility.
    let primal_infeasibility = max_of(z[k..dim].iter().chain(&z[dim..dim + k]).map(|v| -v.clone()));
    let dual_infeasibility = max_of(z[..k].iter().chain(&z[dim + k..]).map(|v| -v.clone()));
    let objective = lp.objective_value(x);
    let dual_objective = dot(&lp.b, y);
    let duality_gap = (objective.clone() - dual_objective.clone()).abs();
    let complementarity = max_of((0..dim).map(|j| (z[j].clone() * z[dim + j].clone()).abs()));
    CertificateReport {
        primal_infeasibility,
        dual_infeasibility,
        duality_gap,
        complementarity,
        objective,
        dual_objective,
    }
}

// ---------------------------------------------------------------------------
// Two-phase simplex with Bland's rule
// ---------------------------------------------------------------------------

struct SimplexState<S> {
    /// Constraint rows over structural + slack + artificial columns, rhs
    /// appended as the final entry.
    rows: Vec<Vec<S>>,
    /// Objective row in `z_j - c_j` form (non-negative at optimality for a
    /// maximization), rhs entry holding the current objective value.
    obj: Vec<S>,
    basic: Vec<usize>,
    n: usize,
    k: usize,
    num_art: usize,
    tol: S,
}

impl<S: Scalar> SimplexState<S> {
    fn width(&self) -> usize {
        self.n + self.k + self.num_art + 1
    }

    fn rhs_col(&self) -> usize {
        self.width() - 1
    }

    /// Rebuilds the objective row for cost vector `c` (length = columns)
    /// from the current basis.
    fn price_out(&mut self, c: &[S]) {
        let width = self.width();
        let mut obj = vec![S::zero(); width];
        for (j, cj) in c.iter().enumerate() {
            obj[j] = -cj.clone();
        }
        for (i, &b) in self.basic.iter().enumerate() {
            let cb = c[b].clone();
            if cb == S::zero() {
                continue;
            }
            for (oj, rj) in obj.iter_mut().zip(&self.rows[i]) {
                *oj = oj.clone() + cb.clone() * rj.clone();
            }
        }
        self.obj = obj;
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let width = self.width();
        let pivot = self.rows[row][col].clone();
        for j in 0..width {
            self.rows[row][j] = self.rows[row][j].clone() / pivot.clone();
        }
        self.rows[row][col] = S::one();
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let factor = self.rows[i][col].clone();
            if factor.is_zero_within(&self.tol) {
                self.rows[i][col] = S::zero();
                continue;
            }
            for j in 0..width {
                self.rows[i][j] =
                    self.rows[i][j].clone() - factor.clone() * self.rows[row][j].clone();
            }
            self.rows[i][col] = S::zero();
        }
        let factor = self.obj[col].clone();
        if !factor.is_zero_within(&self.tol) {
            for j in 0..width {
                self.obj[j] = self.obj[j].clone() - factor.clone() * self.rows[row][j].clone();
            }
        }
        self.obj[col] = S::zero();
        self.basic[row] = col;
    }

    /// Bland's rule iteration to optimality over the allowed columns.
    /// Returns `None` on an unbounded direction, `Some(false)` on the
    /// safety cap, `Some(true)` at optimality.
    fn optimize(&mut self, allowed: &[bool]) -> Option<bool> {
        let cap = 10_000 * (self.rows.len() + self.width());
        for _ in 0..cap {
            let neg_tol = -self.tol.clone();
            let entering = (0..self.width() - 1).find(|&j| allowed[j] && self.obj[j] < neg_tol);
            let Some(col) = entering else {
                return Some(true);
            };
            let mut leave: Option<(usize, S)> = None;
            let rhs = self.rhs_col();
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if *a <= self.tol {
                    continue;
                }
                let ratio = self.rows[i][rhs].clone() / a.clone();
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr || (ratio == lr && self.basic[i] < self.basic[li]) {
                            Some((i, ratio))
                        } else {
                            Some((li, lr))
                        }
                    }
                };
            }
            let (row, _) = leave?;
            self.pivot(row, col);
        }
        Some(false)
    }
}

/// Two-phase dense-tableau simplex (Bland's anti-cycling rule) for the
/// symmetric-form problem; fully independent of the pivoting engine.
/// The returned dual prices are read off the slack columns of the final
/// tableau.
pub fn simplex_solve<S: Scalar>(lp: &LinearProgram<S>, tol: &S) -> OracleOutcome<S> {
    let (k, n) = (lp.k(), lp.n());
    let negated: Vec<bool> = lp.b.iter().map(|b| *b < S::zero()).collect();
    let num_art = negated.iter().filter(|&&v| v).count();
    let width = n + k + num_art + 1;
    let mut rows = Vec::with_capacity(k);
    let mut basic = Vec::with_capacity(k);
    let mut art = n + k;
    for i in 0..k {
        let mut row = vec![S::zero(); width];
        row[..n].clone_from_slice(&lp.a[i]);
        row[n + i] = S::one();
        row[width - 1] = lp.b[i].clone();
        if negated[i] {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            row[art] = S::one();
            basic.push(art);
            art += 1;
        } else {
            basic.push(n + i);
        }
        rows.push(row);
    }
    let mut st = SimplexState {
        rows,
        obj: vec![S::zero(); width],
        basic,
        n,
        k,
        num_art,
        tol: tol.clone(),
    };

    let all_cols = n + k + num_art;
    if num_art > 0 {
        // Phase 1: maximize minus the sum of artificials.
        let mut c = vec![S::zero(); all_cols];
        for cj in c.iter_mut().skip(n + k) {
            *cj = -S::one();
        }
        st.price_out(&c);
        let allowed = vec![true; all_cols];
        match st.optimize(&allowed) {
            Some(true) => {}
            Some(false) => return OracleOutcome::Stalled,
            None => return OracleOutcome::Stalled,
        }
        if st.obj[st.rhs_col()] < -tol.clone() {
            return OracleOutcome::Infeasible;
        }
        // Drive basic artificials out where possible; rows where the whole
        // structural part is zero are redundant and stay inert.
        for i in 0..st.rows.len() {
            if st.basic[i] < n + k {
                continue;
            }
            if let Some(col) = (0..n + k).find(|&j| !st.rows[i][j].is_zero_within(tol)) {
                st.pivot(i, col);
            }
        }
    }

    // Phase 2: the real objective; artificial columns are never re-entered.
    let mut c = vec![S::zero(); all_cols];
    for (j, fj) in lp.f.iter().enumerate() {
        c[j] = fj.clone();
    }
    st.price_out(&c);
    let mut allowed = vec![true; all_cols];
    for a in allowed.iter_mut().skip(n + k) {
        *a = false;
    }
    match st.optimize(&allowed) {
        Some(true) => {}
        Some(false) => return OracleOutcome::Stalled,
        None => return OracleOutcome::Unbounded,
    }

    let rhs = st.rhs_col();
    let mut x = vec![S::zero(); n];
    for (i, &b) in st.basic.iter().enumerate() {
        if b < n {
            let v = st.rows[i][rhs].clone();
            x[b] = if v < S::zero() { S::zero() } else { v };
        }
    }
    // Dual prices: the objective-row entries of the slack columns equal the
    // duals of the original rows, whether or not a row was negated above.
    let mut y = Vec::with_capacity(k);
    for i in 0..k {
        let v = st.obj[n + i].clone();
        y.push(if v.abs() <= *tol { S::zero() } else { v });
    }
    let objective = st.obj[rhs].clone();
    OracleOutcome::Optimal { x, y, objective }
}

// ---------------------------------------------------------------------------
// Exhaustive basis enumeration
// ---------------------------------------------------------------------------

/// Solves `m u = rhs` for square `m` by Gaussian elimination with partial
/// pivoting. `None` when singular (within tolerance).
fn solve_square<S: Scalar>(mut m: Vec<Vec<S>>, mut rhs: Vec<S>, tol: &S) -> Option<Vec<S>> {
    let k = m.len();
    for col in 0..k {
        let pivot_row = (col..k)
            .max_by(|&a, &b| {
                m[a][col]
                    .abs()
                    .partial_cmp(&m[b][col].abs())
                    .expect("scalar comparison")
            })
            .unwrap();
        if m[pivot_row][col].is_zero_within(tol) {
            return None;
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for i in 0..k {
            if i == col {
                continue;
            }
            let factor = m[i][col].clone() / m[col][col].clone();
            if factor == S::zero() {
                continue;
            }
            let pivot_row = m[col][col..k].to_vec();
            for (mij, pj) in m[i][col..k].iter_mut().zip(&pivot_row) {
                *mij = mij.clone() - factor.clone() * pj.clone();
            }
            rhs[i] = rhs[i].clone() - factor * rhs[col].clone();
        }
    }
    Some((0..k).map(|i| rhs[i].clone() / m[i][i].clone()).collect())
}

/// Enumerates every basis of `[A I] w = b, w >= 0` and returns the best
/// vertex as `(x, objective)`, or `None` when no feasible basis exists.
/// Feasible regions of this form are pointed, so feasibility of the problem
/// and existence of a feasible basis coincide.
pub fn enumerate_best<S: Scalar>(lp: &LinearProgram<S>, tol: &S) -> Option<(Vec<S>, S)> {
    let (k, n) = (lp.k(), lp.n());
    assert!(k + n <= 12, "enumeration limited to k + n <= 12");
    let column = |j: usize| -> Vec<S> {
        (0..k)
            .map(|i| {
                if j < n {
                    lp.a[i][j].clone()
                } else if j - n == i {
                    S::one()
                } else {
                    S::zero()
                }
            })
            .collect()
    };
    let mut best: Option<(Vec<S>, S)> = None;
    for combo in (0..n + k).combinations(k) {
        let m: Vec<Vec<S>> = (0..k)
            .map(|i| combo.iter().map(|&j| column(j)[i].clone()).collect())
            .collect();
        let Some(u) = solve_square(m, lp.b.clone(), tol) else {
            continue;
        };
        let neg_tol = -tol.clone();
        if u.iter().any(|v| *v < neg_tol) {
            continue;
        }
        let mut x = vec![S::zero(); n];
        for (&j, v) in combo.iter().zip(&u) {
            if j < n {
                x[j] = if *v < S::zero() { S::zero() } else { v.clone() };
            }
        }
        let value = lp.objective_value(&x);
        match &best {
            Some((_, bv)) if *bv >= value => {}
            _ => best = Some((x, value)),
        }
    }
    best
}

/// The symmetric-form dual, itself in symmetric form:
/// `min b^T y, A^T y >= f, y >= 0` rewritten as
/// `max (-b)^T y, (-A^T) y <= -f, y >= 0`.
pub fn dual_of<S: Scalar>(lp: &LinearProgram<S>) -> LinearProgram<S> {
    let (k, n) = (lp.k(), lp.n());
    let f = lp.b.iter().map(|v| -v.clone()).collect();
    let a = (0..n)
        .map(|j| (0..k).map(|i| -lp.a[i][j].clone()).collect())
        .collect();
    let b = lp.f.iter().map(|v| -v.clone()).collect();
    LinearProgram { f, a, b }
}

/// Vertex enumeration on both the problem and its dual. Primal feasibility
/// plus dual infeasibility is exactly unboundedness; when both sides are
/// feasible the best primal vertex is optimal.
pub fn enumeration_solve<S: Scalar>(lp: &LinearProgram<S>, tol: &S) -> OracleOutcome<S> {
    let primal = enumerate_best(lp, tol);
    let Some((x, objective)) = primal else {
        return OracleOutcome::Infeasible;
    };
    match enumerate_best(&dual_of(lp), tol) {
        None => OracleOutcome::Unbounded,
        Some((y, _)) => OracleOutcome::Optimal { x, y, objective },
    }
}

/// The preferred standalone oracle: simplex, with enumeration as a second
/// opinion on small instances. Disagreement surfaces as `Stalled` so no
/// wrong answer is ever trusted.
pub fn oracle_solve<S: Scalar>(lp: &LinearProgram<S>, tol: &S) -> OracleOutcome<S> {
    let via_simplex = simplex_solve(lp, tol);
    if lp.k() + lp.n() <= 10 {
        let via_enum = enumeration_solve(lp, tol);
        let agree = match (&via_simplex, &via_enum) {
            (
                OracleOutcome::Optimal { objective: a, .. },
                OracleOutcome::Optimal { objective: b, .. },
            ) => (a.clone() - b.clone()).abs().to_f64() <= agreement_tol(tol),
            (OracleOutcome::Infeasible, OracleOutcome::Infeasible) => true,
            (OracleOutcome::Unbounded, OracleOutcome::Unbounded) => true,
            _ => false,
        };
        if !agree {
            return OracleOutcome::Stalled;
        }
    }
    via_simplex
}

fn agreement_tol<S: Scalar>(tol: &S) -> f64 {
    if *tol == S::zero() {
        0.0
    } else {
        1e-8
    }
}

// ---------------------------------------------------------------------------
// Cross-checking solver outcomes
// ---------------------------------------------------------------------------

/// One discrepancy discovered while verifying a solver outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    /// Solver and oracle disagree on the outcome class.
    OutcomeMismatch { solver: String, oracle: String },
    /// The claimed optimal pair fails its certificate.
    CertificateFailure { worst: f64, detail: String },
    /// Both claim optimal but the values differ.
    ObjectiveMismatch { solver: f64, oracle: f64 },
    /// The constant-ratio diagnostic failed during the solve.
    RatioViolation { count: usize },
    /// The solve hit its iteration cap.
    IterationLimit { iterations: usize },
    /// The solve broke down.
    Breakdown { reason: String },
    /// The oracle itself could not settle the instance.
    OracleStalled,
}

/// Verifies a solver outcome against the certificate checker and the
/// independent oracle. An empty return means everything is consistent.
pub fn cross_check<S: Scalar>(
    lp: &LinearProgram<S>,
    outcome: &SolveOutcome<S>,
    tol: &S,
) -> Vec<Finding> {
    let mut findings = Vec::new();
    if outcome.trace().ratio_violations > 0 {
        findings.push(Finding::RatioViolation {
            count: outcome.trace().ratio_violations,
        });
    }
    match outcome {
        SolveOutcome::Optimal { x, y, .. } => {
            let report = check_certificate(lp, x, y);
            if !report.is_valid(tol) {
                findings.push(Finding::CertificateFailure {
                    worst: report.worst().to_f64(),
                    detail: format!(
                        "primal {} dual {} gap {} compl {}",
                        report.primal_infeasibility.to_f64(),
                        report.dual_infeasibility.to_f64(),
                        report.duality_gap.to_f64(),
                        report.complementarity.to_f64()
                    ),
                });
            }
            match oracle_solve(lp, tol) {
                OracleOutcome::Optimal { objective, .. } => {
                    let ours = lp.objective_value(x);
                    let diff = (ours.clone() - objective.clone()).abs().to_f64();
                    if diff > agreement_tol(tol) {
                        findings.push(Finding::ObjectiveMismatch {
                            solver: ours.to_f64(),
                            oracle: objective.to_f64(),
                        });
                    }
                }
                OracleOutcome::Stalled => findings.push(Finding::OracleStalled),
                other => findings.push(Finding::OutcomeMismatch {
                    solver: "optimal".to_string(),
                    oracle: other.label().to_string(),
                }),
            }
        }
        SolveOutcome::NoSolution { .. } => match oracle_solve(lp, tol) {
            OracleOutcome::Infeasible | OracleOutcome::Unbounded => {}
            OracleOutcome::Stalled => findings.push(Finding::OracleStalled),
            other => findings.push(Finding::OutcomeMismatch {
                solver: "no-solution".to_string(),
                oracle: other.label().to_string(),
            }),
        },
        SolveOutcome::IterationLimit { trace } => {
            findings.push(Finding::IterationLimit {
                iterations: trace.iterations,
            });
        }
        SolveOutcome::Breakdown { reason, .. } => {
            findings.push(Finding::Breakdown {
                reason: reason.to_string(),
            });
        }
    }
    findings
}

/// Result of a seeded random stress run.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub optimal: usize,
    pub no_solution: usize,
    pub clean: usize,
    /// `(seed, finding)` pairs for every discrepancy.
    pub findings: Vec<(u64, Finding)>,
}

/// Solves `count` seeded random instances and cross-checks each against the
/// oracle; every discrepancy is captured with the seed that reproduces it.
pub fn run_random_suite<S: Scalar>(
    first_seed: u64,
    count: usize,
    k_max: usize,
    n_max: usize,
    cfg: &SolverConfig<S>,
) -> SuiteSummary {
    let mut summary = SuiteSummary::default();
    for seed in first_seed..first_seed + count as u64 {
        let lp: LinearProgram<S> = random_lp(seed, k_max, n_max);
        let outcome = crate::engine::solve(&lp, cfg);
        summary.total += 1;
        match &outcome {
            SolveOutcome::Optimal { .. } => summary.optimal += 1,
            SolveOutcome::NoSolution { .. } => summary.no_solution += 1,
            _ => {}
        }
        let findings = cross_check(&lp, &outcome, &verify_tol(cfg));
        if findings.is_empty() {
            summary.clean += 1;
        }
        summary
            .findings
            .extend(findings.into_iter().map(|f| (seed, f)));
    }
    summary
}

/// Certificate tolerance used for verification: looser than the pivot
/// epsilon in float mode (residuals accumulate), exact in rational mode.
pub fn verify_tol<S: Scalar>(cfg: &SolverConfig<S>) -> S {
    if cfg.epsilon == S::zero() {
        S::zero()
    } else {
        S::parse("1e-6").expect("literal")
    }
}
