//! Built-in problem families: the Klee-Minty cube (the classical simplex
//! worst case) and seeded random instances for stress suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::LinearProgram;
use crate::scalar::Scalar;

/// Klee-Minty cube with `n` variables and `n` constraints:
///
/// ```text
/// maximize   sum_j 10^(n-j) x_j
/// subject to 2 sum_{j<i} 10^(i-j) x_j + x_i <= 10^(2(i-1)),   i = 1..n
///            x >= 0
/// ```
///
/// Dantzig-rule simplex visits all `2^n` vertices of this cube; it is the
/// standard stress test for claimed polynomial pivot counts. Coefficients
/// stay within `i64` for `n <= 8`.
pub fn klee_minty<S: Scalar>(n: usize) -> LinearProgram<S> {
    assert!((1..=8).contains(&n), "supported range is 1..=8");
    let p10 = |e: u32| -> S { S::from_int(10i64.pow(e)) };
    let f: Vec<S> = (1..=n).map(|j| p10((n - j) as u32)).collect();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            row.push(if j < i {
                S::from_int(2) * p10((i - j) as u32)
            } else if j == i {
                S::one()
            } else {
                S::zero()
            });
        }
        a.push(row);
        b.push(p10(2 * (i - 1) as u32));
    }
    LinearProgram { f, a, b }
}

/// A reproducible random symmetric-form LP: dimensions drawn from
/// `2..=k_max` and `2..=n_max`, integer coefficients from `[-9, 9]`.
/// All-zero constraint rows are redrawn so every row says something.
pub fn random_lp<S: Scalar>(seed: u64, k_max: usize, n_max: usize) -> LinearProgram<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(2..=k_max.max(2));
    let n = rng.random_range(2..=n_max.max(2));
    let coeff = |rng: &mut ChaCha8Rng| S::from_int(rng.random_range(-9..=9));
    let f: Vec<S> = (0..n).map(|_| coeff(&mut rng)).collect();
    let mut a = Vec::with_capacity(k);
    for _ in 0..k {
        loop {
            let row: Vec<S> = (0..n).map(|_| coeff(&mut rng)).collect();
            if row.iter().any(|v| *v != S::zero()) {
                a.push(row);
                break;
            }
        }
    }
    let b: Vec<S> = (0..k).map(|_| coeff(&mut rng)).collect();
    LinearProgram { f, a, b }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn klee_minty_three() {
        let lp: LinearProgram<f64> = klee_minty(3);
        assert_eq!(lp.f, vec![100.0, 10.0, 1.0]);
        assert_eq!(
            lp.a,
            vec![
                vec![1.0, 0.0, 0.0],
                vec![20.0, 1.0, 0.0],
                vec![200.0, 20.0, 1.0],
            ]
        );
        assert_eq!(lp.b, vec![1.0, 100.0, 10000.0]);
        lp.validate().unwrap();
    }

    #[test]
    fn klee_minty_exact_large_n() {
        let lp: LinearProgram<Rational> = klee_minty(8);
        assert_eq!(lp.b[7], Rational::from_int(10i64.pow(14)));
        lp.validate().unwrap();
    }

    #[test]
    fn random_lp_is_deterministic_and_valid() {
        for seed in 0..50u64 {
            let lp: LinearProgram<f64> = random_lp(seed, 5, 5);
            lp.validate().unwrap();
            assert!((2..=5).contains(&lp.k()));
            assert!((2..=5).contains(&lp.n()));
            let again: LinearProgram<f64> = random_lp(seed, 5, 5);
            assert_eq!(lp, again);
            for row in &lp.a {
                assert!(row.iter().any(|&v| v != 0.0));
            }
        }
    }
}
