//! Shared regression fixtures: ten reference problems with their known
//! pivot-column traces and solutions.

use cpivot::model::LinearProgram;
use cpivot::scalar::Scalar;

/// A regression case: problem data, the expected per-iteration column pairs
/// `(minor, major)`, and the expected solution (`None` for no-solution
/// cases). Numeric expectations are quoted to 4 decimals or better.
pub struct Case {
    pub name: &'static str,
    pub f: Vec<f64>,
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
    pub trace: Vec<(Option<usize>, Option<usize>)>,
    pub x: Option<Vec<f64>>,
    pub y: Option<Vec<f64>>,
}

impl Case {
    pub fn lp<S: Scalar>(&self) -> LinearProgram<S> {
        let conv = |v: &f64| S::parse(&format!("{v}")).expect("fixture literal");
        LinearProgram {
            f: self.f.iter().map(conv).collect(),
            a: self
                .a
                .iter()
                .map(|row| row.iter().map(conv).collect())
                .collect(),
            b: self.b.iter().map(conv).collect(),
        }
    }
}

fn both(pairs: &[(usize, usize)]) -> Vec<(Option<usize>, Option<usize>)> {
    pairs.iter().map(|&(m, j)| (Some(m), Some(j))).collect()
}

pub fn all_cases() -> Vec<Case> {
    vec![
        Case {
            name: "nondegenerate-4x3",
            f: vec![2.0, 7.0, 6.0, 4.0],
            a: vec![
                vec![1.0, 1.0, 0.83, 0.5],
                vec![1.2, 1.0, 1.0, 1.2],
                vec![0.5, 0.7, 1.2, 0.4],
            ],
            b: vec![65.0, 96.0, 80.0],
            trace: both(&[(4, 2), (7, 11), (6, 3), (5, 1)]),
            x: Some(vec![0.0, 5.1601, 53.2015, 31.3653]),
            y: Some(vec![6.2147, 0.7062, 0.1130]),
        },
        Case {
            name: "klee-minty-3",
            f: vec![100.0, 10.0, 1.0],
            a: vec![
                vec![1.0, 0.0, 0.0],
                vec![20.0, 1.0, 0.0],
                vec![200.0, 20.0, 1.0],
            ],
            b: vec![1.0, 100.0, 10000.0],
            trace: both(&[(6, 3)]),
            x: Some(vec![0.0, 0.0, 10000.0]),
            y: Some(vec![0.0, 0.0, 1.0]),
        },
        Case {
            name: "klee-minty-4",
            f: vec![1000.0, 100.0, 10.0, 1.0],
            a: vec![
                vec![1.0, 0.0, 0.0, 0.0],
                vec![20.0, 1.0, 0.0, 0.0],
                vec![200.0, 20.0, 1.0, 0.0],
                vec![2000.0, 200.0, 20.0, 1.0],
            ],
            b: vec![1.0, 100.0, 10000.0, 1000000.0],
            trace: both(&[(8, 4)]),
            x: Some(vec![0.0, 0.0, 0.0, 1000000.0]),
            y: Some(vec![0.0, 0.0, 0.0, 1.0]),
        },
        Case {
            name: "beale",
            f: vec![0.75, -150.0, 0.02, -6.0],
            a: vec![
                vec![0.25, -60.0, -0.04, 9.0],
                vec![0.50, -90.0, -0.02, 3.0],
                vec![0.0, 0.0, 1.0, 0.0],
            ],
            b: vec![0.0, 0.0, 1.0],
            trace: both(&[(6, 3), (4, 2)]),
            x: Some(vec![0.04, 0.0, 1.0, 0.0]),
            y: Some(vec![0.0, 1.5, 0.05]),
        },
        Case {
            name: "instructive-4x3",
            f: vec![2.0, 1.0, -1.0, 1.0],
            a: vec![
                vec![1.0, 1.0, 1.0, 1.0],
                vec![-1.0, 0.0, 1.0, -1.0],
                vec![0.0, 2.0, 0.0, -1.0],
            ],
            b: vec![12.0, -8.0, 6.0],
            trace: both(&[(5, 3), (7, 1), (4, 14), (10, 12)]),
            x: Some(vec![12.0, 0.0, 0.0, 0.0]),
            y: Some(vec![2.0, 0.0, 0.0]),
        },
        Case {
            name: "dantzig-p57",
            f: vec![-2.0, 1.0, -3.0, -7.0, 5.0],
            a: vec![
                vec![1.0, 2.0, 1.0, 1.0, 6.0],
                vec![-2.0, -3.0, -4.0, -1.0, -2.0],
                vec![3.0, 2.0, 0.0, 3.0, 1.0],
            ],
            b: vec![10.0, -4.0, 8.0],
            trace: both(&[(5, 1), (3, 8), (11, 2)]),
            x: Some(vec![0.0, 0.2857, 0.0, 0.0, 1.5714]),
            y: Some(vec![0.9286, 0.2857, 0.0]),
        },
        Case {
            name: "instructive-dense",
            f: vec![3.0, 4.0, 1.0, 7.0],
            a: vec![
                vec![8.0, 3.0, 4.0, 1.0],
                vec![2.0, 6.0, 1.0, 5.0],
                vec![1.0, 4.0, 5.0, 2.0],
            ],
            b: vec![7.0, 3.0, 8.0],
            trace: both(&[(6, 3), (4, 1), (5, 2), (7, 12), (10, 13)]),
            x: Some(vec![0.8421, 0.0, 0.0, 0.2632]),
            y: Some(vec![0.0263, 1.3947, 0.0]),
        },
        Case {
            name: "equality-pairs",
            f: vec![7.0, -3.0, 1.0, 2.0],
            a: vec![
                vec![1.0, 3.0, 1.0, 0.0],
                vec![-1.0, -3.0, -1.0, 0.0],
                vec![4.0, -2.0, 0.0, 1.0],
                vec![-4.0, 2.0, 0.0, -1.0],
            ],
            b: vec![9.0, -9.0, 10.0, -10.0],
            trace: both(&[(7, 1), (8, 3)]),
            x: Some(vec![0.0, 0.0, 9.0, 10.0]),
            y: Some(vec![1.0, 0.0, 2.0, 0.0]),
        },
        Case {
            name: "selection-reversal",
            f: vec![-9.0, 1.0, -1.0],
            a: vec![vec![-2.0, -2.0, 1.0], vec![-4.0, 3.0, -2.0]],
            b: vec![-7.0, -3.0],
            trace: both(&[(4, 2), (1, 3), (5, 8)]),
            x: Some(vec![0.0, 17.0, 27.0]),
            y: Some(vec![1.0, 1.0]),
        },
        Case {
            name: "unbounded",
            f: vec![2.0, 1.0],
            a: vec![vec![-1.0, -1.0], vec![1.0, -1.0]],
            b: vec![-4.0, 6.0],
            trace: vec![(Some(4), None)],
            x: None,
            y: None,
        },
    ]
}

/// The small walkthrough problem used throughout the docs and tests.
/// Not every test binary that includes this module uses it.
#[allow(dead_code)]
pub fn walkthrough_lp<S: Scalar>() -> LinearProgram<S> {
    LinearProgram::from_ints(&[-1, 1], &[&[1, 1], &[-1, 0]], &[10, -5])
}
