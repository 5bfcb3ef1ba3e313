//! Python bindings for the cpivot solver.
//!
//! Exposes the symmetric-form problem type plus the solver, the independent
//! oracle, and certificate checking. Coefficients are accepted as ints,
//! floats, or strings; strings (including fractions like "1/3") are required
//! to stay exact in rational mode.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cpivot::engine::{solve, SolveOutcome, SolverConfig, TraceLevel};
use cpivot::model::LinearProgram as CoreLp;
use cpivot::oracle::{check_certificate, oracle_solve, OracleOutcome};
use cpivot::problems;
use cpivot::scalar::{Rational, Scalar};

/// Coefficients are kept as their textual form so both the float and the
/// rational backends can parse them without a lossy detour through f64.
fn literal(value: &Bound<'_, PyAny>) -> PyResult<String> {
    Ok(value.str()?.to_string())
}

fn parse_all<S: Scalar>(lits: &[String]) -> PyResult<Vec<S>> {
    lits.iter()
        .map(|t| S::parse(t).ok_or_else(|| PyValueError::new_err(format!("bad coefficient {t:?}"))))
        .collect()
}

fn build_lp<S: Scalar>(lp: &LinearProgram) -> PyResult<CoreLp<S>> {
    let lp = CoreLp {
        f: parse_all(&lp.f)?,
        a: lp.a.iter().map(|r| parse_all(r)).collect::<PyResult<_>>()?,
        b: parse_all(&lp.b)?,
    };
    lp.validate()
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(lp)
}

/// Result of a solve call: outcome class, solution (when solved), and the
/// per-iteration pivot-column trace.
#[pyclass(name = "SolveResult")]
struct SolveResult {
    /// "optimal", "no-solution", "iteration-limit", or "breakdown".
    #[pyo3(get)]
    status: String,
    #[pyo3(get)]
    x: Option<Vec<f64>>,
    #[pyo3(get)]
    y: Option<Vec<f64>>,
    #[pyo3(get)]
    objective: Option<f64>,
    /// Exact solution as fraction strings; only present in rational mode.
    #[pyo3(get)]
    exact_x: Option<Vec<String>>,
    #[pyo3(get)]
    exact_y: Option<Vec<String>>,
    /// One (minor_column, major_column) pair per iteration; either side may
    /// be None when that instance did not run.
    #[pyo3(get)]
    columns: Vec<(Option<usize>, Option<usize>)>,
    #[pyo3(get)]
    iterations: usize,
    #[pyo3(get)]
    notes: Vec<String>,
}

#[pymethods]
impl SolveResult {
    fn __repr__(&self) -> String {
        match &self.objective {
            Some(obj) => format!("SolveResult(status={:?}, objective={obj})", self.status),
            None => format!("SolveResult(status={:?})", self.status),
        }
    }
}

fn run_solve<S: Scalar>(
    lp: &LinearProgram,
    exact: bool,
    tol: Option<f64>,
    max_iter: Option<usize>,
) -> PyResult<SolveResult> {
    let core = build_lp::<S>(lp)?;
    let epsilon = match tol {
        Some(t) => S::parse(&format!("{t}"))
            .ok_or_else(|| PyValueError::new_err(format!("bad tolerance {t}")))?,
        None => S::default_epsilon(),
    };
    let cfg = SolverConfig {
        epsilon,
        max_iterations: max_iter,
        trace_level: TraceLevel::Columns,
    };
    let outcome = solve(&core, &cfg);
    let trace = outcome.trace();
    let (x, y) = match &outcome {
        SolveOutcome::Optimal { x, y, .. } => (Some(x.clone()), Some(y.clone())),
        _ => (None, None),
    };
    let to_floats = |v: &Vec<S>| v.iter().map(Scalar::to_f64).collect::<Vec<f64>>();
    let to_strings = |v: &Vec<S>| v.iter().map(|s| format!("{s}")).collect::<Vec<String>>();
    Ok(SolveResult {
        status: outcome.label().to_string(),
        objective: x.as_ref().map(|x| core.objective_value(x).to_f64()),
        exact_x: x.as_ref().filter(|_| exact).map(to_strings),
        exact_y: y.as_ref().filter(|_| exact).map(to_strings),
        x: x.as_ref().map(to_floats),
        y: y.as_ref().map(to_floats),
        columns: trace.column_pairs(),
        iterations: trace.iterations,
        notes: trace.notes.clone(),
    })
}

fn run_oracle<S: Scalar>(py: Python<'_>, lp: &LinearProgram) -> PyResult<Py<PyDict>> {
    let core = build_lp::<S>(lp)?;
    let outcome = oracle_solve(&core, &S::default_epsilon());
    let out = PyDict::new(py);
    out.set_item("status", outcome.label())?;
    if let OracleOutcome::Optimal { x, y, objective } = &outcome {
        out.set_item("x", x.iter().map(Scalar::to_f64).collect::<Vec<f64>>())?;
        out.set_item("y", y.iter().map(Scalar::to_f64).collect::<Vec<f64>>())?;
        out.set_item("objective", objective.to_f64())?;
    }
    Ok(out.into())
}

/// A linear program in symmetric form: maximize f'x subject to Ax <= b and
/// x >= 0.
#[pyclass(name = "LinearProgram")]
#[derive(Clone)]
struct LinearProgram {
    f: Vec<String>,
    a: Vec<Vec<String>>,
    b: Vec<String>,
}

#[pymethods]
impl LinearProgram {
    #[new]
    fn new(
        f: Vec<Bound<'_, PyAny>>,
        a: Vec<Vec<Bound<'_, PyAny>>>,
        b: Vec<Bound<'_, PyAny>>,
    ) -> PyResult<Self> {
        let lp = LinearProgram {
            f: f.iter().map(literal).collect::<PyResult<_>>()?,
            a: a.iter()
                .map(|row| row.iter().map(literal).collect::<PyResult<_>>())
                .collect::<PyResult<_>>()?,
            b: b.iter().map(literal).collect::<PyResult<_>>()?,
        };
        build_lp::<f64>(&lp)?;
        Ok(lp)
    }

    /// Number of constraints.
    #[getter]
    fn k(&self) -> usize {
        self.b.len()
    }

    /// Number of variables.
    #[getter]
    fn n(&self) -> usize {
        self.f.len()
    }

    /// Run the complementary-pivoting solver. `exact=True` switches to
    /// rational arithmetic (tolerance zero unless overridden).
    #[pyo3(signature = (exact=false, tol=None, max_iter=None))]
    fn solve(
        &self,
        exact: bool,
        tol: Option<f64>,
        max_iter: Option<usize>,
    ) -> PyResult<SolveResult> {
        if exact {
            run_solve::<Rational>(self, true, tol, max_iter)
        } else {
            run_solve::<f64>(self, false, tol, max_iter)
        }
    }

    /// Solve with the independent oracle (two-phase simplex, cross-voted
    /// against basis enumeration on small problems).
    #[pyo3(signature = (exact=false))]
    fn oracle(&self, py: Python<'_>, exact: bool) -> PyResult<Py<PyDict>> {
        if exact {
            run_oracle::<Rational>(py, self)
        } else {
            run_oracle::<f64>(py, self)
        }
    }

    /// Check a claimed primal/dual pair; returns the residuals of every
    /// optimality condition plus a `valid` verdict at the given tolerance.
    #[pyo3(signature = (x, y, tol=1e-6))]
    fn certificate(
        &self,
        py: Python<'_>,
        x: Vec<f64>,
        y: Vec<f64>,
        tol: f64,
    ) -> PyResult<Py<PyDict>> {
        let core = build_lp::<f64>(self)?;
        if x.len() != core.n() || y.len() != core.k() {
            return Err(PyValueError::new_err(
                "x/y dimensions do not match the problem",
            ));
        }
        let report = check_certificate(&core, &x, &y);
        let out = PyDict::new(py);
        out.set_item("primal_infeasibility", report.primal_infeasibility)?;
        out.set_item("dual_infeasibility", report.dual_infeasibility)?;
        out.set_item("duality_gap", report.duality_gap)?;
        out.set_item("complementarity", report.complementarity)?;
        out.set_item("objective", report.objective)?;
        out.set_item("dual_objective", report.dual_objective)?;
        out.set_item("valid", report.is_valid(&tol))?;
        Ok(out.into())
    }

    fn __repr__(&self) -> String {
        format!("LinearProgram(k={}, n={})", self.k(), self.n())
    }
}

fn from_core(core: CoreLp<f64>) -> LinearProgram {
    let s = |v: &f64| format!("{v}");
    LinearProgram {
        f: core.f.iter().map(s).collect(),
        a: core.a.iter().map(|r| r.iter().map(s).collect()).collect(),
        b: core.b.iter().map(s).collect(),
    }
}

/// The n-variable worst-case cube problem (n up to 8).
#[pyfunction]
fn klee_minty(n: usize) -> PyResult<LinearProgram> {
    if !(1..=8).contains(&n) {
        return Err(PyValueError::new_err("n must be between 1 and 8"));
    }
    Ok(from_core(problems::klee_minty(n)))
}

/// A reproducible random problem with integer coefficients in -9..=9.
#[pyfunction]
#[pyo3(signature = (seed, k_max=6, n_max=6))]
fn random_lp(seed: u64, k_max: usize, n_max: usize) -> PyResult<LinearProgram> {
    if k_max < 2 || n_max < 2 {
        return Err(PyValueError::new_err("k_max and n_max must be at least 2"));
    }
    Ok(from_core(problems::random_lp(seed, k_max, n_max)))
}

#[pymodule]
fn cpivot_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<LinearProgram>()?;
    m.add_class::<SolveResult>()?;
    m.add_function(wrap_pyfunction!(klee_minty, m)?)?;
    m.add_function(wrap_pyfunction!(random_lp, m)?)?;
    Ok(())
}
