//! The live augmented tableau `[M q]`: initialization, Gauss-Jordan and
//! complementary pivots, stopping tests, and the constant-ratio diagnostic.
//!
//! Rows and columns are indexed 1-based throughout this module so that pivot
//! positions, trace columns and complement arithmetic line up with the usual
//! written form of the tableau: rows run 1..=k+n+1 and matrix columns
//! 1..=2(k+n), with `q` as the extra right-hand column.

use thiserror::Error;

use crate::model::EqSystem;
use crate::scalar::Scalar;

/// Which pivoting instance performed a pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    MinorP,
    MajorP,
    Finalize,
}

/// One row of the per-iteration pivot log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotRecord {
    pub iteration: usize,
    pub phase: Phase,
    pub column: usize,
    pub pivot_row: usize,
    /// Sign of `q_{k+n+1}` immediately before the pivot.
    pub pre_q_last_sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StopStatus {
    Continue,
    Solved,
    NoSolution { evidence_row: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("zero pivot at ({row}, {col})")]
    ZeroPivot { row: usize, col: usize },
    #[error("row fix for column {col} not applicable: pivot entry already nonzero")]
    FixNotNeeded { col: usize },
    #[error("row fix for column {col} not possible: last-row entry is zero as well")]
    NotFixable { col: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
}

/// Complement of column `j`: `j + (k+n)` for the left block, `j - (k+n)` for
/// the slack block. `dim = k + n`.
pub fn complement_column(dim: usize, j: usize) -> Result<usize, TableauError> {
    if j == 0 || j > 2 * dim {
        return Err(TableauError::IndexOutOfRange {
            index: j,
            max: 2 * dim,
        });
    }
    Ok(if j <= dim { j + dim } else { j - dim })
}

/// The unique complementary pivot row for column `j`: position `(j, j)` for
/// `j <= k+n` and `(j - (k+n), j)` otherwise.
pub fn complement_row(dim: usize, j: usize) -> Result<usize, TableauError> {
    if j == 0 || j > 2 * dim {
        return Err(TableauError::IndexOutOfRange {
            index: j,
            max: 2 * dim,
        });
    }
    Ok(if j <= dim { j } else { j - dim })
}

/// The augmented tableau with basis and selection-history bookkeeping.
#[derive(Debug, Clone)]
pub struct EqTableau<S> {
    t: Vec<Vec<S>>,
    pub k: usize,
    pub n: usize,
    /// Per row 1..=k+n, the column currently made basic by a pivot. Rows
    /// never pivoted still carry their initial slack unit column, resolved
    /// by [`EqTableau::basic_column_of_row`].
    basic_of_row: Vec<Option<usize>>,
    /// Columns selected by major pivoting instances, in selection order.
    pub majorp_history: Vec<usize>,
    /// Columns selected by minor pivoting instances, in selection order.
    pub minorp_history: Vec<usize>,
    /// Virtual sign of the last row: reads through [`EqTableau::oriented_last`]
    /// see the row multiplied by -1 when set. The stored row is never
    /// negated, so snapshots stay comparable to written tableaux.
    pub last_row_negated: bool,
    pub pivot_log: Vec<PivotRecord>,
    iteration: usize,
    epsilon: S,
}

/// Result of a complementary pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PivotOutcome {
    pub row: usize,
    /// Whether the zero-pivot row fix ran first.
    pub row_fixed: bool,
    /// Whether the complement of the pivoted column was basic in the pivot
    /// row and therefore left the basis (a selection reversal).
    pub displaced_complement: bool,
}

/// Sets up the working tableau: the last row of `[M q]` is added to every
/// other row, which leaves the system equivalent in terms of solution
/// existence and puts nonzero entries on the diagonal positions that
/// complementary pivoting will use.
pub fn initialize<S: Scalar>(eq: &EqSystem<S>, epsilon: S) -> EqTableau<S> {
    let dim = eq.k + eq.n;
    let width = 2 * dim + 1;
    let mut t = Vec::with_capacity(dim + 1);
    let last: Vec<S> = eq.m[dim]
        .iter()
        .cloned()
        .chain(std::iter::once(eq.q[dim].clone()))
        .collect();
    for i in 0..dim {
        let mut row: Vec<S> = eq.m[i]
            .iter()
            .zip(&last)
            .map(|(a, l)| a.clone() + l.clone())
            .collect();
        row.push(eq.q[i].clone() + last[2 * dim].clone());
        debug_assert_eq!(row.len(), width);
        t.push(row);
    }
    t.push(last);
    EqTableau {
        t,
        k: eq.k,
        n: eq.n,
        basic_of_row: vec![None; dim],
        majorp_history: Vec::new(),
        minorp_history: Vec::new(),
        last_row_negated: false,
        pivot_log: Vec::new(),
        iteration: 0,
        epsilon,
    }
}

impl<S: Scalar> EqTableau<S> {
    pub fn dim(&self) -> usize {
        self.k + self.n
    }

    pub fn num_rows(&self) -> usize {
        self.dim() + 1
    }

    pub fn num_cols(&self) -> usize {
        2 * self.dim()
    }

    pub fn epsilon(&self) -> &S {
        &self.epsilon
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn begin_iteration(&mut self) -> usize {
        self.iteration += 1;
        self.iteration
    }

    /// Matrix entry, 1-based; `j` must be a matrix column (not `q`).
    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.t[i - 1][j - 1]
    }

    pub fn q(&self, i: usize) -> &S {
        &self.t[i - 1][2 * self.dim()]
    }

    pub fn q_last(&self) -> &S {
        self.q(self.num_rows())
    }

    /// Last-row entry of column `j` as seen through the orientation flag.
    pub fn oriented_last(&self, j: usize) -> S {
        let v = self.entry(self.num_rows(), j).clone();
        if self.last_row_negated {
            -v
        } else {
            v
        }
    }

    pub fn oriented_q_last(&self) -> S {
        let v = self.q_last().clone();
        if self.last_row_negated {
            -v
        } else {
            v
        }
    }

    pub fn set_orientation(&mut self, negated: bool) {
        self.last_row_negated = negated;
    }

    pub fn complement_column(&self, j: usize) -> Result<usize, TableauError> {
        complement_column(self.dim(), j)
    }

    pub fn complement_row(&self, j: usize) -> Result<usize, TableauError> {
        complement_row(self.dim(), j)
    }

    fn is_zero(&self, v: &S) -> bool {
        v.is_zero_within(&self.epsilon)
    }

    /// The column basic in row `r`: either an explicit pivot column or the
    /// row's untouched initial slack column.
    pub fn basic_column_of_row(&self, r: usize) -> usize {
        self.basic_of_row[r - 1].unwrap_or(self.dim() + r)
    }

    pub fn explicit_basis(&self) -> &[Option<usize>] {
        &self.basic_of_row
    }

    pub fn is_unit_column(&self, col: usize, row: usize) -> bool {
        for i in 1..=self.num_rows() {
            let want = if i == row { S::one() } else { S::zero() };
            if !self.is_zero(&(self.entry(i, col).clone() - want)) {
                return false;
            }
        }
        true
    }

    /// Plain Gauss-Jordan pivot at `(row, col)`: scales the pivot row and
    /// eliminates the column from every other row.
    pub fn gj_pivot(&mut self, row: usize, col: usize, phase: Phase) -> Result<(), TableauError> {
        let pivot = self.entry(row, col).clone();
        if self.is_zero(&pivot) {
            return Err(TableauError::ZeroPivot { row, col });
        }
        let pre_q_last_sign = self.sign_of(&self.q_last().clone());
        let width = 2 * self.dim() + 1;
        let r = row - 1;
        let c = col - 1;
        for j in 0..width {
            self.t[r][j] = self.t[r][j].clone() / pivot.clone();
        }
        self.t[r][c] = S::one();
        for i in 0..self.num_rows() {
            if i == r {
                continue;
            }
            let factor = self.t[i][c].clone();
            if self.is_zero(&factor) {
                self.t[i][c] = S::zero();
                continue;
            }
            for j in 0..width {
                self.t[i][j] = self.t[i][j].clone() - factor.clone() * self.t[r][j].clone();
            }
            self.t[i][c] = S::zero();
        }
        if row <= self.dim() {
            self.basic_of_row[r] = Some(col);
        }
        self.pivot_log.push(PivotRecord {
            iteration: self.iteration,
            phase,
            column: col,
            pivot_row: row,
            pre_q_last_sign,
        });
        Ok(())
    }

    fn sign_of(&self, v: &S) -> i8 {
        if self.is_zero(v) {
            0
        } else if *v > S::zero() {
            1
        } else {
            -1
        }
    }

    /// Zero-pivot repair: when the complementary pivot entry of `col`
    /// vanishes but the last row has a nonzero entry there, adding a copy of
    /// the last row to the pivot row makes the pivot possible without
    /// changing the solution set.
    pub fn row_fix_for_pivot(&mut self, col: usize) -> Result<(), TableauError> {
        let row = self.complement_row(col)?;
        if !self.is_zero(self.entry(row, col)) {
            return Err(TableauError::FixNotNeeded { col });
        }
        if self.is_zero(self.entry(self.num_rows(), col)) {
            return Err(TableauError::NotFixable { col });
        }
        let width = 2 * self.dim() + 1;
        let last = self.num_rows() - 1;
        for j in 0..width {
            self.t[row - 1][j] = self.t[row - 1][j].clone() + self.t[last][j].clone();
        }
        Ok(())
    }

    /// Complementary Gauss-Jordan pivot in column `col`, at the one position
    /// complementary pivoting allows, applying the row fix first if needed.
    pub fn complementary_pivot(
        &mut self,
        col: usize,
        phase: Phase,
    ) -> Result<PivotOutcome, TableauError> {
        let row = self.complement_row(col)?;
        let mut row_fixed = false;
        if self.is_zero(self.entry(row, col)) {
            self.row_fix_for_pivot(col)?;
            row_fixed = true;
        }
        let displaced_complement = self.basic_column_of_row(row) == self.complement_column(col)?;
        self.gj_pivot(row, col, phase)?;
        Ok(PivotOutcome {
            row,
            row_fixed,
            displaced_complement,
        })
    }

    /// The two stopping tests: `q >= 0` means solved; a last row that is
    /// non-positive everywhere while `q_{k+n+1} > 0` (after virtually
    /// orienting the row) witnesses that the system has no solution. The
    /// tableau is not mutated.
    pub fn check_stop(&self) -> StopStatus {
        let neg_eps = -self.epsilon.clone();
        if (1..=self.num_rows()).all(|i| *self.q(i) >= neg_eps) {
            return StopStatus::Solved;
        }
        let q_last = self.q_last();
        if !self.is_zero(q_last) {
            let flip = *q_last < S::zero();
            let all_nonpositive = (1..=self.num_cols()).all(|j| {
                let v = self.entry(self.num_rows(), j).clone();
                let v = if flip { -v } else { v };
                v <= self.epsilon
            });
            if all_nonpositive {
                return StopStatus::NoSolution {
                    evidence_row: self.num_rows(),
                };
            }
        }
        StopStatus::Continue
    }

    /// Constant-ratio diagnostic for minor-pivot-eligible states
    /// (`q_{k+n+1} = 0`): for each row with `q_i != 0` the ratio
    /// `m_{k+n+1,i} / q_i`, falling back to `m_{k+n+1,k+n+i} / q_i` when the
    /// first numerator vanishes. Rows where both numerators vanish are
    /// skipped. Reads the stored (unoriented) last row.
    pub fn claim_ratios(&self) -> Vec<(usize, S)> {
        let dim = self.dim();
        let last = self.num_rows();
        let mut out = Vec::new();
        for i in 1..=dim {
            let qi = self.q(i);
            if self.is_zero(qi) {
                continue;
            }
            let direct = self.entry(last, i);
            let numer = if !self.is_zero(direct) {
                direct.clone()
            } else {
                let fallback = self.entry(last, dim + i);
                if self.is_zero(fallback) {
                    continue;
                }
                fallback.clone()
            };
            out.push((i, numer / qi.clone()));
        }
        out
    }

    /// Plain-text dump, one row per line, fixed 4-decimal formatting.
    pub fn snapshot(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.num_rows() {
            let mut cells = Vec::with_capacity(self.num_cols() + 1);
            for j in 1..=self.num_cols() {
                cells.push(format!("{:>9.4}", self.entry(i, j).to_f64()));
            }
            cells.push(format!("{:>9.4}", self.q(i).to_f64()));
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Entries of row `i` including `q`, as f64, for golden comparisons.
    pub fn row_f64(&self, i: usize) -> Vec<f64> {
        (1..=self.num_cols())
            .map(|j| self.entry(i, j).to_f64())
            .chain(std::iter::once(self.q(i).to_f64()))
            .collect()
    }
}
