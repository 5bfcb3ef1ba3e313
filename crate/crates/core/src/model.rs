//! Problem representation: general input problems, normalization to
//! symmetric form, and construction of the combined primal-dual system.

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarDomain {
    NonNegative,
    Free,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint<S> {
    pub coeffs: Vec<S>,
    pub relation: Relation,
    pub rhs: S,
}

/// A general LP as read from an input file: arbitrary sense, mixed
/// constraint relations, optionally free variables.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralProblem<S> {
    pub sense: Sense,
    pub objective: Vec<S>,
    pub constraints: Vec<Constraint<S>>,
    pub domains: Vec<VarDomain>,
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("problem must have at least one variable and one constraint")]
    EmptyProblem,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-finite coefficient at {0}")]
    NonFinite(String),
}

impl<S: Scalar> GeneralProblem<S> {
    /// Convenience constructor with all variables non-negative.
    pub fn new(sense: Sense, objective: Vec<S>, constraints: Vec<Constraint<S>>) -> Self {
        let domains = vec![VarDomain::NonNegative; objective.len()];
        GeneralProblem {
            sense,
            objective,
            constraints,
            domains,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let n0 = self.objective.len();
        if n0 == 0 || self.constraints.is_empty() {
            return Err(ModelError::EmptyProblem);
        }
        if self.domains.len() != n0 {
            return Err(ModelError::DimensionMismatch(format!(
                "{} domains for {} variables",
                self.domains.len(),
                n0
            )));
        }
        for (i, s) in self.objective.iter().enumerate() {
            if !s.is_finite() {
                return Err(ModelError::NonFinite(format!("objective[{i}]")));
            }
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n0 {
                return Err(ModelError::DimensionMismatch(format!(
                    "constraint {} has {} coefficients, expected {}",
                    i + 1,
                    c.coeffs.len(),
                    n0
                )));
            }
            if !c.rhs.is_finite() {
                return Err(ModelError::NonFinite(format!("rhs[{i}]")));
            }
            for (j, s) in c.coeffs.iter().enumerate() {
                if !s.is_finite() {
                    return Err(ModelError::NonFinite(format!("constraint[{i}][{j}]")));
                }
            }
        }
        Ok(())
    }
}

/// Symmetric-form LP data: maximize `f^T x` subject to `Ax <= b`, `x >= 0`,
/// with `k` constraints and `n` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram<S> {
    pub f: Vec<S>,
    pub a: Vec<Vec<S>>,
    pub b: Vec<S>,
}

impl<S: Scalar> LinearProgram<S> {
    pub fn new(f: Vec<S>, a: Vec<Vec<S>>, b: Vec<S>) -> Result<Self, ModelError> {
        let lp = LinearProgram { f, a, b };
        lp.validate()?;
        Ok(lp)
    }

    /// Builds an LP from integer data, mostly for tests and generators.
    pub fn from_ints(f: &[i64], a: &[&[i64]], b: &[i64]) -> Self {
        let f = f.iter().map(|&v| S::from_int(v)).collect();
        let a = a
            .iter()
            .map(|row| row.iter().map(|&v| S::from_int(v)).collect())
            .collect();
        let b = b.iter().map(|&v| S::from_int(v)).collect();
        LinearProgram { f, a, b }
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let (k, n) = (self.k(), self.n());
        if k == 0 || n == 0 {
            return Err(ModelError::EmptyProblem);
        }
        if self.a.len() != k {
            return Err(ModelError::DimensionMismatch(format!(
                "A has {} rows, b has {}",
                self.a.len(),
                k
            )));
        }
        for (i, row) in self.a.iter().enumerate() {
            if row.len() != n {
                return Err(ModelError::DimensionMismatch(format!(
                    "A row {} has {} columns, expected {}",
                    i + 1,
                    row.len(),
                    n
                )));
            }
            for (j, s) in row.iter().enumerate() {
                if !s.is_finite() {
                    return Err(ModelError::NonFinite(format!("A[{i}][{j}]")));
                }
            }
        }
        for (j, s) in self.f.iter().enumerate() {
            if !s.is_finite() {
                return Err(ModelError::NonFinite(format!("f[{j}]")));
            }
        }
        for (i, s) in self.b.iter().enumerate() {
            if !s.is_finite() {
                return Err(ModelError::NonFinite(format!("b[{i}]")));
            }
        }
        Ok(())
    }

    /// `f^T x`.
    pub fn objective_value(&self, x: &[S]) -> S {
        dot(&self.f, x)
    }
}

pub(crate) fn dot<S: Scalar>(u: &[S], v: &[S]) -> S {
    u.iter()
        .zip(v)
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// Retained by [`normalize`] so solutions of the symmetric-form problem can
/// be folded back into the coordinates of the original problem.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionMap {
    pub sense: Sense,
    /// For original variable i: index of its non-negative image, plus the
    /// index of the subtracted part when the variable was free.
    pub var_images: Vec<(usize, Option<usize>)>,
    /// For original constraint i: row index of its `<=` image, plus the row
    /// index of the negated copy when the constraint was an equality.
    pub row_images: Vec<(usize, Option<usize>, Relation)>,
    pub normalized_n: usize,
    pub normalized_k: usize,
}

impl SolutionMap {
    pub fn is_identity(&self) -> bool {
        self.sense == Sense::Max
            && self
                .var_images
                .iter()
                .enumerate()
                .all(|(i, v)| *v == (i, None))
            && self
                .row_images
                .iter()
                .enumerate()
                .all(|(i, r)| *r == (i, None, Relation::Le))
    }
}

/// Solution of the original problem recovered from the normalized one.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldedSolution<S> {
    pub x: Vec<S>,
    pub y: Vec<S>,
    pub objective: S,
}

/// Rewrites a general problem in symmetric form: maximization, `<=` rows
/// only, non-negative variables.
///
/// A minimization objective is negated. An equality row becomes the adjacent
/// pair (row, -row), a `>=` row is negated, and each free variable is split
/// into a difference of two non-negative variables (the subtracted parts are
/// appended after the original variable block, in order). Constraint row
/// order is preserved.
pub fn normalize<S: Scalar>(
    gp: &GeneralProblem<S>,
) -> Result<(LinearProgram<S>, SolutionMap), ModelError> {
    gp.validate()?;
    let n0 = gp.objective.len();

    let mut var_images = Vec::with_capacity(n0);
    let mut next = n0;
    for (i, dom) in gp.domains.iter().enumerate() {
        match dom {
            VarDomain::NonNegative => var_images.push((i, None)),
            VarDomain::Free => {
                var_images.push((i, Some(next)));
                next += 1;
            }
        }
    }
    let n = next;

    let expand = |coeffs: &[S]| -> Vec<S> {
        let mut row = vec![S::zero(); n];
        for (i, (pos, neg)) in var_images.iter().enumerate() {
            row[*pos] = coeffs[i].clone();
            if let Some(neg) = neg {
                row[*neg] = -coeffs[i].clone();
            }
        }
        row
    };

    let mut f = expand(&gp.objective);
    if gp.sense == Sense::Min {
        f = f.into_iter().map(|v| -v).collect();
    }

    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut row_images = Vec::with_capacity(gp.constraints.len());
    for c in &gp.constraints {
        let row = expand(&c.coeffs);
        let neg_row: Vec<S> = row.iter().map(|v| -v.clone()).collect();
        match c.relation {
            Relation::Le => {
                row_images.push((a.len(), None, Relation::Le));
                a.push(row);
                b.push(c.rhs.clone());
            }
            Relation::Ge => {
                row_images.push((a.len(), None, Relation::Ge));
                a.push(neg_row);
                b.push(-c.rhs.clone());
            }
            Relation::Eq => {
                row_images.push((a.len(), Some(a.len() + 1), Relation::Eq));
                a.push(row);
                b.push(c.rhs.clone());
                a.push(neg_row);
                b.push(-c.rhs.clone());
            }
        }
    }

    let lp = LinearProgram::new(f, a, b)?;
    let map = SolutionMap {
        sense: gp.sense,
        var_images,
        row_images,
        normalized_n: n,
        normalized_k: lp.k(),
    };
    Ok((lp, map))
}

/// Folds a solution of the normalized problem back into original
/// coordinates: recombines split free variables, maps duals back to the
/// original rows and restores the objective sign.
pub fn fold_back<S: Scalar>(
    map: &SolutionMap,
    x: &[S],
    y: &[S],
    objective: &S,
) -> Result<FoldedSolution<S>, ModelError> {
    if x.len() != map.normalized_n {
        return Err(ModelError::DimensionMismatch(format!(
            "solution has {} components, normalized problem has {}",
            x.len(),
            map.normalized_n
        )));
    }
    if y.len() != map.normalized_k {
        return Err(ModelError::DimensionMismatch(format!(
            "dual has {} components, normalized problem has {}",
            y.len(),
            map.normalized_k
        )));
    }
    let x_orig = map
        .var_images
        .iter()
        .map(|(pos, neg)| match neg {
            Some(neg) => x[*pos].clone() - x[*neg].clone(),
            None => x[*pos].clone(),
        })
        .collect();
    let y_orig = map
        .row_images
        .iter()
        .map(|(pos, neg, rel)| match rel {
            Relation::Le => y[*pos].clone(),
            Relation::Ge => -y[*pos].clone(),
            Relation::Eq => y[*pos].clone() - y[neg.unwrap()].clone(),
        })
        .collect();
    let objective = match map.sense {
        Sense::Max => objective.clone(),
        Sense::Min => -objective.clone(),
    };
    Ok(FoldedSolution {
        x: x_orig,
        y: y_orig,
        objective,
    })
}

/// The combined primal-dual system `Mz = q`: `M` is `(k+n+1) x 2(k+n)` with
/// the block layout
///
/// ```text
///      |  0    A   I_k  0   |        | b  |
///  M = | -A^T  0   0    I_n |    q = | -f |
///      | -b^T  f^T 0    0   |        | 0  |
/// ```
///
/// Columns 1..k carry the dual variables, columns k+1..k+n the primal ones,
/// and columns k+n+1..2(k+n) the slack block.
#[derive(Debug, Clone, PartialEq)]
pub struct EqSystem<S> {
    pub m: Vec<Vec<S>>,
    pub q: Vec<S>,
    pub k: usize,
    pub n: usize,
}

/// Assembles the system matrices from a symmetric-form LP. Deterministic and
/// dependent only on `(f, A, b)`.
pub fn build_eq<S: Scalar>(lp: &LinearProgram<S>) -> EqSystem<S> {
    let (k, n) = (lp.k(), lp.n());
    let dim = k + n;
    let mut m = vec![vec![S::zero(); 2 * dim]; dim + 1];
    for i in 0..k {
        for j in 0..n {
            m[i][k + j] = lp.a[i][j].clone();
        }
        m[i][dim + i] = S::one();
    }
    for j in 0..n {
        for (i, row) in lp.a.iter().enumerate() {
            m[k + j][i] = -row[j].clone();
        }
        m[k + j][dim + k + j] = S::one();
    }
    for (i, bi) in lp.b.iter().enumerate() {
        m[dim][i] = -bi.clone();
    }
    for j in 0..n {
        m[dim][k + j] = lp.f[j].clone();
    }
    let mut q = Vec::with_capacity(dim + 1);
    q.extend(lp.b.iter().cloned());
    q.extend(lp.f.iter().map(|v| -v.clone()));
    q.push(S::zero());
    EqSystem { m, q, k, n }
}
