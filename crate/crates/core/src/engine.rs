//! The iteration state machine: candidate-list construction, the minor and
//! major pivoting instances with their complement-skip and finalizing
//! operations, the outer solve loop, and solution extraction.

use crate::model::{build_eq, LinearProgram};
use crate::scalar::Scalar;
use crate::tableau::{initialize, EqTableau, Phase, PivotRecord, StopStatus, TableauError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceLevel {
    None,
    Columns,
    Tableaux,
}

#[derive(Debug, Clone)]
pub struct SolverConfig<S> {
    pub epsilon: S,
    /// Default when `None`: `k + n`, the theoretical iteration bound.
    pub max_iterations: Option<usize>,
    pub trace_level: TraceLevel,
}

impl<S: Scalar> Default for SolverConfig<S> {
    fn default() -> Self {
        SolverConfig {
            epsilon: S::default_epsilon(),
            max_iterations: None,
            trace_level: TraceLevel::Columns,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BreakdownReason {
    /// A selected column could not be pivoted even after the row fix.
    ZeroPivot { column: usize },
    /// The constant-ratio property failed in float mode, so the minor
    /// instance's last-row orientation is undefined.
    SignInconsistency,
    /// Finalizing operations pivoted every listed column without reaching a
    /// terminal state.
    FinalizeExhausted,
    /// A basic column was not a unit vector at extraction time.
    InconsistentBasis,
}

impl std::fmt::Display for BreakdownReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BreakdownReason::ZeroPivot { column } => write!(f, "zero pivot in column {column}"),
            BreakdownReason::SignInconsistency => write!(f, "ratio sign inconsistency"),
            BreakdownReason::FinalizeExhausted => write!(f, "finalize-exhausted"),
            BreakdownReason::InconsistentBasis => write!(f, "inconsistent basis"),
        }
    }
}

/// One line of the per-iteration column trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRow {
    pub itn: usize,
    pub minorp_col: Option<usize>,
    pub majorp_col: Option<usize>,
}

/// Everything observable about one solve: the per-iteration column pairs,
/// the raw pivot log, ratio diagnostics, reversals and optional snapshots.
#[derive(Debug, Clone, Default)]
pub struct SolveTrace {
    pub rows: Vec<IterationRow>,
    pub pivots: Vec<PivotRecord>,
    /// Columns pivoted whose complement was an earlier major selection.
    pub reversals: Vec<usize>,
    /// Ratio lists observed at each minor-eligible state, as f64.
    pub ratio_checks: Vec<Vec<f64>>,
    /// Number of minor-eligible states where the observed ratios were not
    /// all equal (exact mode: not identical; float: beyond 1e-9 relative).
    pub ratio_violations: usize,
    pub notes: Vec<String>,
    /// Labelled tableau snapshots, populated at `TraceLevel::Tableaux`.
    pub tableaux: Vec<(String, String)>,
    pub iterations: usize,
}

impl SolveTrace {
    /// The column pairs as `(minorp, majorp)` per iteration, 1-based, `None`
    /// where an instance made no selection.
    pub fn column_pairs(&self) -> Vec<(Option<usize>, Option<usize>)> {
        self.rows
            .iter()
            .map(|r| (r.minorp_col, r.majorp_col))
            .collect()
    }

    /// Tab-separated trace table; absent selections print as "n. a.".
    pub fn table(&self) -> String {
        let mut out = String::from("itn\tminorp_col\tmajorp_col\n");
        for row in &self.rows {
            let fmt = |c: Option<usize>| match c {
                Some(c) => c.to_string(),
                None => "n. a.".to_string(),
            };
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                row.itn,
                fmt(row.minorp_col),
                fmt(row.majorp_col)
            ));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub enum SolveOutcome<S> {
    Optimal {
        x: Vec<S>,
        y: Vec<S>,
        z: Vec<S>,
        trace: SolveTrace,
    },
    NoSolution {
        trace: SolveTrace,
    },
    IterationLimit {
        trace: SolveTrace,
    },
    Breakdown {
        reason: BreakdownReason,
        trace: SolveTrace,
    },
}

impl<S> SolveOutcome<S> {
    pub fn trace(&self) -> &SolveTrace {
        match self {
            SolveOutcome::Optimal { trace, .. }
            | SolveOutcome::NoSolution { trace }
            | SolveOutcome::IterationLimit { trace }
            | SolveOutcome::Breakdown { trace, .. } => trace,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SolveOutcome::Optimal { .. } => "optimal",
            SolveOutcome::NoSolution { .. } => "no-solution",
            SolveOutcome::IterationLimit { .. } => "iteration-limit",
            SolveOutcome::Breakdown { .. } => "breakdown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingMode {
    /// Major instances process large last-row entries first.
    Descending,
    /// Minor instances process small last-row entries first.
    Ascending,
}

/// The ordered list of candidate columns with positive (oriented) last-row
/// entry. Left-block indices (`j <= k+n`) precede slack-block indices;
/// within each tier candidates are ordered by entry value per the mode,
/// ties broken by lower column index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateList {
    pub columns: Vec<usize>,
    pub mode: OrderingMode,
}

pub fn build_candidates<S: Scalar>(tab: &EqTableau<S>, mode: OrderingMode) -> CandidateList {
    let dim = tab.dim();
    let mut tiers: [Vec<(usize, S)>; 2] = [Vec::new(), Vec::new()];
    for j in 1..=2 * dim {
        let v = tab.oriented_last(j);
        if v > *tab.epsilon() {
            tiers[usize::from(j > dim)].push((j, v));
        }
    }
    let mut columns = Vec::new();
    for tier in &mut tiers {
        tier.sort_by(|(ja, va), (jb, vb)| {
            let ord = va.partial_cmp(vb).expect("scalar comparison");
            let ord = match mode {
                OrderingMode::Ascending => ord,
                OrderingMode::Descending => ord.reverse(),
            };
            ord.then(ja.cmp(jb))
        });
        columns.extend(tier.iter().map(|(j, _)| *j));
    }
    CandidateList { columns, mode }
}

/// What a single pivoting instance did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    /// A column was selected and pivoted; the solve continues.
    Pivoted {
        column: usize,
        via_finalize: bool,
    },
    /// A terminal state was reached; `column` is the pivot that caused it,
    /// when one did.
    Solved {
        column: Option<usize>,
    },
    NoSolution {
        column: Option<usize>,
    },
    Breakdown {
        reason: BreakdownReason,
        column: Option<usize>,
    },
}

/// Result of one pivoting instance, with trace annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepResult {
    pub outcome: StepOutcome,
    pub notes: Vec<String>,
    /// Set when the pivoted column reversed an earlier major selection.
    pub reversal: Option<usize>,
}

impl StepResult {
    fn pivoted(column: usize, via_finalize: bool) -> Self {
        StepResult {
            outcome: StepOutcome::Pivoted {
                column,
                via_finalize,
            },
            notes: Vec::new(),
            reversal: None,
        }
    }

    fn terminal(outcome: StepOutcome) -> Self {
        StepResult {
            outcome,
            notes: Vec::new(),
            reversal: None,
        }
    }
}

/// The minor pivoting instance: fires when `q_{k+n+1} = 0` with some
/// `q_i < 0`. The last row is virtually oriented so that negative `q`
/// components face positive last-row entries (the shared constant-ratio
/// sign decides the flip), candidates are processed in ascending order, and
/// the first column that does not undo an earlier selection of the same
/// kind is complementary-pivoted.
pub fn run_minorp<S: Scalar>(tab: &mut EqTableau<S>, cfg: &SolverConfig<S>) -> StepResult {
    let mut notes = Vec::new();

    let ratios = tab.claim_ratios();
    let mut positive = false;
    let mut negative = false;
    for (_, r) in &ratios {
        if *r > S::zero() {
            positive = true;
        } else if *r < S::zero() {
            negative = true;
        }
    }
    if positive && negative {
        // The constant-ratio property failed; the orientation is no longer
        // canonical. Fatal in float mode, reported and overridden by the
        // negative-q rows in exact mode.
        if cfg.epsilon > S::zero() {
            return StepResult::terminal(StepOutcome::Breakdown {
                reason: BreakdownReason::SignInconsistency,
                column: None,
            });
        }
        notes.push("ratio sign inconsistency at minor instance".to_string());
        let forced = (1..=tab.dim())
            .filter(|&i| *tab.q(i) < -cfg.epsilon.clone())
            .find_map(|i| ratios.iter().find(|(row, _)| *row == i))
            .map(|(_, r)| *r > S::zero());
        tab.set_orientation(forced.unwrap_or(false));
    } else {
        tab.set_orientation(positive);
    }

    let list = build_candidates(tab, OrderingMode::Ascending);
    let mut result = select_and_pivot(tab, &list, Phase::MinorP, cfg);
    if let StepOutcome::Pivoted { column, .. } = result.outcome {
        tab.minorp_history.push(column);
    }
    result.notes.splice(0..0, notes);
    result
}

/// The major pivoting instance: fires when `q_{k+n+1} != 0`. The last row
/// is virtually oriented so `q_{k+n+1} > 0`, candidates are processed in
/// descending order, and the selected column joins the major selection
/// history. An empty candidate list here is exactly the no-solution
/// stopping evidence.
pub fn run_majorp<S: Scalar>(tab: &mut EqTableau<S>, cfg: &SolverConfig<S>) -> StepResult {
    tab.set_orientation(*tab.q_last() < S::zero());
    let list = build_candidates(tab, OrderingMode::Descending);
    if list.columns.is_empty() {
        return StepResult::terminal(StepOutcome::NoSolution { column: None });
    }
    let result = select_and_pivot(tab, &list, Phase::MajorP, cfg);
    if let StepOutcome::Pivoted { column, .. } = result.outcome {
        tab.majorp_history.push(column);
    }
    result
}

/// Ordinary selection: the first candidate that is not the complement of a
/// previous major selection is pivoted; when every candidate is such a
/// complement, the finalizing operations take over.
fn select_and_pivot<S: Scalar>(
    tab: &mut EqTableau<S>,
    list: &CandidateList,
    phase: Phase,
    cfg: &SolverConfig<S>,
) -> StepResult {
    for &col in &list.columns {
        let complement = tab.complement_column(col).expect("candidate in range");
        if tab.majorp_history.contains(&complement) {
            continue;
        }
        return match tab.complementary_pivot(col, phase) {
            Ok(outcome) => {
                let mut res = StepResult::pivoted(col, false);
                if tab.majorp_history.contains(&complement) {
                    res.reversal = Some(col);
                }
                if outcome.row_fixed {
                    res.notes.push(format!(
                        "row fix applied before pivot in column {col} (row {})",
                        outcome.row
                    ));
                }
                res
            }
            Err(_) => StepResult::terminal(StepOutcome::Breakdown {
                reason: BreakdownReason::ZeroPivot { column: col },
                column: Some(col),
            }),
        };
    }
    run_finalize(tab, list, cfg)
}

/// Finalizing operations: every column listed in `L` was passed over by the
/// ordinary steps (each reverses a previous major selection), so they are
/// complementary-pivoted in listed order anyway. Pivoting stops as soon as
/// the algorithm terminates or the instance's own eligibility condition
/// (the zero-ness of `q_{k+n+1}`) flips — the pivot that flipped it counts
/// as this instance's column selection and the solve continues. Exhausting
/// the list with no effect at all is a breakdown.
pub fn run_finalize<S: Scalar>(
    tab: &mut EqTableau<S>,
    list: &CandidateList,
    cfg: &SolverConfig<S>,
) -> StepResult {
    let mut notes = Vec::new();
    let mut reversal = None;
    let was_minor_state = tab.q_last().is_zero_within(&cfg.epsilon);
    for &col in &list.columns {
        let complement = tab.complement_column(col).expect("candidate in range");
        match tab.complementary_pivot(col, Phase::Finalize) {
            Ok(_) => {
                if tab.majorp_history.contains(&complement) {
                    reversal = Some(col);
                }
            }
            Err(TableauError::ZeroPivot { .. }) | Err(TableauError::NotFixable { .. }) => {
                notes.push(format!("finalize skipped unpivotable column {col}"));
                continue;
            }
            Err(e) => {
                notes.push(format!("finalize error in column {col}: {e}"));
                continue;
            }
        }
        let outcome = match tab.check_stop() {
            StopStatus::Solved => StepOutcome::Solved { column: Some(col) },
            StopStatus::NoSolution { .. } => StepOutcome::NoSolution { column: Some(col) },
            StopStatus::Continue => {
                if tab.q_last().is_zero_within(&cfg.epsilon) == was_minor_state {
                    continue;
                }
                StepOutcome::Pivoted {
                    column: col,
                    via_finalize: true,
                }
            }
        };
        return StepResult {
            outcome,
            notes,
            reversal,
        };
    }
    StepResult {
        outcome: StepOutcome::Breakdown {
            reason: BreakdownReason::FinalizeExhausted,
            column: None,
        },
        notes,
        reversal,
    }
}

/// `(z, x, y)` blocks read off a solved tableau.
type SolutionBlocks<S> = (Vec<S>, Vec<S>, Vec<S>);

/// Reads the solution off a solved tableau: each basic column contributes
/// its row's `q` value, everything else is zero. `y` is the dual block
/// (columns 1..k), `x` the primal block (columns k+1..k+n).
pub fn extract_solution<S: Scalar>(
    tab: &EqTableau<S>,
) -> Result<SolutionBlocks<S>, BreakdownReason> {
    let dim = tab.dim();
    let mut z = vec![S::zero(); 2 * dim];
    for r in 1..=dim {
        let col = tab.basic_column_of_row(r);
        if !tab.is_unit_column(col, r) {
            return Err(BreakdownReason::InconsistentBasis);
        }
        let v = tab.q(r).clone();
        // Solved guarantees q >= -epsilon; snap the roundoff negatives.
        z[col - 1] = if v < S::zero() { S::zero() } else { v };
    }
    let y = z[..tab.k].to_vec();
    let x = z[tab.k..dim].to_vec();
    Ok((z, x, y))
}

/// Checks the constant-ratio property at a minor-eligible state and records
/// the observation in the trace.
fn record_ratio_check<S: Scalar>(
    tab: &EqTableau<S>,
    cfg: &SolverConfig<S>,
    trace: &mut SolveTrace,
) {
    let ratios = tab.claim_ratios();
    if ratios.is_empty() {
        return;
    }
    let violated = if cfg.epsilon == S::zero() {
        ratios.windows(2).any(|w| w[0].1 != w[1].1)
    } else {
        let max = ratios
            .iter()
            .map(|(_, r)| r.abs())
            .fold(S::zero(), |a, b| if b > a { b } else { a });
        let tol_base = if max > S::one() { max } else { S::one() };
        ratios.windows(2).any(|w| {
            let diff = (w[0].1.clone() - w[1].1.clone()).abs();
            diff.to_f64() > 1e-9 * tol_base.to_f64()
        })
    };
    if violated {
        trace.ratio_violations += 1;
        trace.notes.push(format!(
            "constant-ratio violation at iteration {}: {:?}",
            tab.iteration() + 1,
            ratios.iter().map(|(_, r)| r.to_f64()).collect::<Vec<_>>()
        ));
    }
    trace
        .ratio_checks
        .push(ratios.into_iter().map(|(_, r)| r.to_f64()).collect());
}

/// Solves a symmetric-form LP by iterated minor/major complementary
/// pivoting on the initialized primal-dual tableau.
pub fn solve<S: Scalar>(lp: &LinearProgram<S>, cfg: &SolverConfig<S>) -> SolveOutcome<S> {
    let eq = build_eq(lp);
    let mut tab = initialize(&eq, cfg.epsilon.clone());
    let mut trace = SolveTrace::default();
    let max_iterations = cfg.max_iterations.unwrap_or(tab.dim()).max(1);
    let snapshots = cfg.trace_level == TraceLevel::Tableaux;
    if snapshots {
        trace
            .tableaux
            .push(("initialized".to_string(), tab.snapshot()));
    }

    let finish =
        |tab: EqTableau<S>, mut trace: SolveTrace, terminal: Terminal| -> SolveOutcome<S> {
            trace.pivots = tab.pivot_log.clone();
            match terminal {
                Terminal::Solved => match extract_solution(&tab) {
                    Ok((z, x, y)) => SolveOutcome::Optimal { x, y, z, trace },
                    Err(reason) => SolveOutcome::Breakdown { reason, trace },
                },
                Terminal::NoSolution => SolveOutcome::NoSolution { trace },
                Terminal::IterationLimit => SolveOutcome::IterationLimit { trace },
                Terminal::Breakdown(reason) => SolveOutcome::Breakdown { reason, trace },
            }
        };

    loop {
        match tab.check_stop() {
            StopStatus::Solved => return finish(tab, trace, Terminal::Solved),
            StopStatus::NoSolution { .. } => return finish(tab, trace, Terminal::NoSolution),
            StopStatus::Continue => {}
        }
        if trace.iterations >= max_iterations {
            return finish(tab, trace, Terminal::IterationLimit);
        }
        let itn = tab.begin_iteration();
        trace.iterations = itn;
        let mut minorp_col = None;
        let mut majorp_col = None;

        if tab.q_last().is_zero_within(&cfg.epsilon) {
            record_ratio_check(&tab, cfg, &mut trace);
            let res = run_minorp(&mut tab, cfg);
            trace.notes.extend(res.notes);
            if let Some(col) = res.reversal {
                trace.reversals.push(col);
            }
            match res.outcome {
                StepOutcome::Pivoted { column, .. } => {
                    minorp_col = Some(column);
                    if snapshots {
                        trace
                            .tableaux
                            .push((format!("itn {itn} minor col {column}"), tab.snapshot()));
                    }
                }
                StepOutcome::Solved { column } => {
                    trace.rows.push(IterationRow {
                        itn,
                        minorp_col: column,
                        majorp_col: None,
                    });
                    return finish(tab, trace, Terminal::Solved);
                }
                StepOutcome::NoSolution { column } => {
                    trace.rows.push(IterationRow {
                        itn,
                        minorp_col: column,
                        majorp_col: None,
                    });
                    return finish(tab, trace, Terminal::NoSolution);
                }
                StepOutcome::Breakdown { reason, column } => {
                    trace.rows.push(IterationRow {
                        itn,
                        minorp_col: column,
                        majorp_col: None,
                    });
                    return finish(tab, trace, Terminal::Breakdown(reason));
                }
            }
            // The minor pivot may itself complete or refute the system.
            match tab.check_stop() {
                StopStatus::Solved => {
                    trace.rows.push(IterationRow {
                        itn,
                        minorp_col,
                        majorp_col: None,
                    });
                    return finish(tab, trace, Terminal::Solved);
                }
                StopStatus::NoSolution { .. } => {
                    trace.rows.push(IterationRow {
                        itn,
                        minorp_col,
                        majorp_col: None,
                    });
                    return finish(tab, trace, Terminal::NoSolution);
                }
                StopStatus::Continue => {}
            }
        }

        if !tab.q_last().is_zero_within(&cfg.epsilon) {
            let res = run_majorp(&mut tab, cfg);
            trace.notes.extend(res.notes);
            if let Some(col) = res.reversal {
                trace.reversals.push(col);
            }
            match res.outcome {
                StepOutcome::Pivoted { column, .. } => {
                    majorp_col = Some(column);
                    if snapshots {
                        trace
                            .tableaux
                            .push((format!("itn {itn} major col {column}"), tab.snapshot()));
                    }
                }
                StepOutcome::Solved { column } => {
                    trace.rows.push(IterationRow {
                        itn,
                        minorp_col,
                        majorp_col: column,
                    });
                    return finish(tab, trace, Terminal::Solved);
                }
                StepOutcome::NoSolution { column } => {
                    trace.rows.push(IterationRow {
                        itn,
                        minorp_col,
                        majorp_col: column,
                    });
                    return finish(tab, trace, Terminal::NoSolution);
                }
                StepOutcome::Breakdown { reason, column } => {
                    trace.rows.push(IterationRow {
                        itn,
                        minorp_col,
                        majorp_col: column,
                    });
                    return finish(tab, trace, Terminal::Breakdown(reason));
                }
            }
        }

        trace.rows.push(IterationRow {
            itn,
            minorp_col,
            majorp_col,
        });
    }
}

enum Terminal {
    Solved,
    NoSolution,
    IterationLimit,
    Breakdown(BreakdownReason),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::LinearProgram;
    use crate::scalar::Rational;

    fn sec2_lp() -> LinearProgram<f64> {
        LinearProgram::from_ints(&[-1, 1], &[&[1, 1], &[-1, 0]], &[10, -5])
    }

    #[test]
    fn reference_example_solves_in_two_iterations() {
        let outcome = solve(&sec2_lp(), &SolverConfig::default());
        match outcome {
            SolveOutcome::Optimal { x, y, z, trace } => {
                assert_eq!(
                    trace.column_pairs(),
                    vec![(Some(4), Some(1)), (Some(2), Some(3))]
                );
                assert_eq!(trace.iterations, 2);
                let close = |got: &[f64], want: &[f64]| {
                    got.iter().zip(want).all(|(g, w)| (g - w).abs() < 1e-12)
                };
                assert!(close(&x, &[5.0, 5.0]), "x = {x:?}");
                assert!(close(&y, &[1.0, 2.0]), "y = {y:?}");
                assert!(
                    close(&z, &[1.0, 2.0, 5.0, 5.0, 0.0, 0.0, 0.0, 0.0]),
                    "z = {z:?}"
                );
            }
            other => panic!("expected optimal, got {}", other.label()),
        }
    }

    #[test]
    fn candidate_ordering_tiers_and_ties() {
        // Build a state whose last row has a tie inside the left tier and a
        // large slack-tier entry; major ordering must still put the left
        // tier first and break the tie by index.
        let lp: LinearProgram<f64> =
            LinearProgram::from_ints(&[1, 1, 1], &[&[1, 0, 0], &[0, 1, 0]], &[1, 1]);
        let eq = build_eq(&lp);
        let mut tab = initialize(&eq, 1e-9);
        // Overwrite the last row via a synthetic check on oriented reads:
        // simpler to test ordering directly on the initialized state.
        tab.set_orientation(false);
        let list = build_candidates(&tab, OrderingMode::Descending);
        // last row: (-1, -1, 1, 1, 1, 0, ..., 0) -> candidates 3, 4, 5 all
        // equal, descending with index tie-break keeps natural order.
        assert_eq!(list.columns, vec![3, 4, 5]);
        let list = build_candidates(&tab, OrderingMode::Ascending);
        assert_eq!(list.columns, vec![3, 4, 5]);
    }

    #[test]
    fn all_slack_start_yields_zero_solution() {
        // b >= 0 and f <= 0: the initial tableau already has q >= 0, so the
        // solver stops before any pivot with the all-slack reading x = 0.
        let lp: LinearProgram<f64> = LinearProgram::from_ints(&[-1, -2], &[&[1, 1]], &[3]);
        match solve(&lp, &SolverConfig::default()) {
            SolveOutcome::Optimal { x, y, z, trace } => {
                assert_eq!(trace.iterations, 0);
                assert_eq!(x, vec![0.0, 0.0]);
                assert_eq!(y, vec![0.0]);
                assert_eq!(z[3..], [3.0, 1.0, 2.0]);
            }
            other => panic!("expected optimal, got {}", other.label()),
        }
    }

    #[test]
    fn unbounded_problem_reports_no_solution() {
        let lp: LinearProgram<f64> =
            LinearProgram::from_ints(&[2, 1], &[&[-1, -1], &[1, -1]], &[-4, 6]);
        match solve(&lp, &SolverConfig::default()) {
            SolveOutcome::NoSolution { trace } => {
                assert_eq!(trace.column_pairs(), vec![(Some(4), None)]);
                assert_eq!(trace.table(), "itn\tminorp_col\tmajorp_col\n1\t4\tn. a.\n");
            }
            other => panic!("expected no-solution, got {}", other.label()),
        }
    }

    #[test]
    fn exact_mode_reproduces_float_trace() {
        let lp: LinearProgram<Rational> =
            LinearProgram::from_ints(&[-1, 1], &[&[1, 1], &[-1, 0]], &[10, -5]);
        let cfg = SolverConfig::<Rational>::default();
        match solve(&lp, &cfg) {
            SolveOutcome::Optimal { x, trace, .. } => {
                assert_eq!(
                    trace.column_pairs(),
                    vec![(Some(4), Some(1)), (Some(2), Some(3))]
                );
                assert_eq!(x[0], Rational::from_int(5));
                assert_eq!(trace.ratio_violations, 0);
            }
            other => panic!("expected optimal, got {}", other.label()),
        }
    }

    #[test]
    fn iteration_limit_is_enforced() {
        let lp = sec2_lp();
        let cfg = SolverConfig {
            max_iterations: Some(1),
            ..SolverConfig::default()
        };
        match solve(&lp, &cfg) {
            SolveOutcome::IterationLimit { trace } => assert_eq!(trace.iterations, 1),
            other => panic!("expected iteration limit, got {}", other.label()),
        }
    }
}
