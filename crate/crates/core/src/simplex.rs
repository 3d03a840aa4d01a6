//! Exact phase-1 simplex: find `x >= 0` with `A x = b` over the rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Returns a nonnegative solution of `a · x = b`, or `None` when the system
/// is infeasible. Pivoting follows Bland's rule, so the method terminates.
pub(crate) fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational], ncols: usize) -> Option<Vec<BigRational>> {
    let m = a.len();
    let width = ncols + m;

    // rows scaled so that the right-hand side is nonnegative, with one
    // artificial column per row
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut full = Vec::with_capacity(width);
        full.extend(row.iter().map(|x| if flip { -x } else { x.clone() }));
        full.extend((0..m).map(|c| {
            if c == i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        rows.push(full);
        rhs.push(bi.abs());
    }
    let mut basis: Vec<usize> = (ncols..width).collect();

    // reduced costs of the phase-1 objective (sum of artificials)
    let mut cost: Vec<BigRational> = (0..width)
        .map(|c| {
            if c >= ncols {
                BigRational::zero()
            } else {
                -rows.iter().map(|row| &row[c]).sum::<BigRational>()
            }
        })
        .collect();

    while let Some(enter) = (0..width).find(|&c| cost[c].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !rows[i][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &rows[i][enter];
            let better = match &leave {
                None => true,
                Some((best, best_ratio)) => ratio < *best_ratio || (ratio == *best_ratio && basis[i] < basis[*best]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // phase 1 is bounded below by zero, so a negative reduced cost
        // always has a blocking row
        let (pivot_row, _) = leave.expect("phase-1 objective is bounded");
        pivot(&mut rows, &mut rhs, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    let infeasibility: BigRational = basis
        .iter()
        .zip(&rhs)
        .filter(|(&var, _)| var >= ncols)
        .map(|(_, v)| v.clone())
        .sum();
    if !infeasibility.is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (&var, value) in basis.iter().zip(&rhs) {
        if var < ncols {
            x[var] = value.clone();
        }
    }
    Some(x)
}

fn pivot(rows: &mut [Vec<BigRational>], rhs: &mut [BigRational], cost: &mut [BigRational], pr: usize, pc: usize) {
    let inv = BigRational::one() / &rows[pr][pc];
    for x in rows[pr].iter_mut() {
        *x *= &inv;
    }
    rhs[pr] *= &inv;
    let pivot_row = rows[pr].clone();
    let pivot_rhs = rhs[pr].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let factor = row[pc].clone();
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
        rhs[i] -= &factor * &pivot_rhs;
    }
    if !cost[pc].is_zero() {
        let factor = cost[pc].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn matrix(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    fn check(a: &[Vec<BigRational>], b: &[BigRational], x: &[BigRational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, bi) in a.iter().zip(b) {
            let lhs: BigRational = row.iter().zip(x).map(|(p, v)| p * v).sum();
            assert_eq!(&lhs, bi);
        }
    }

    #[test]
    fn finds_fractional_solution() {
        let a = matrix(&[&[2, 0, 1], &[0, 2, 1]]);
        let b = vec![q(1), q(1)];
        let x = feasible_point(&a, &b, 3).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn detects_infeasibility() {
        // x + y = 1 and x + y = 2
        let a = matrix(&[&[1, 1], &[1, 1]]);
        assert!(feasible_point(&a, &[q(1), q(2)], 2).is_none());
        // nonnegative columns cannot produce a negative target
        let a = matrix(&[&[1, 0], &[0, 1]]);
        assert!(feasible_point(&a, &[q(-1), q(0)], 2).is_none());
    }

    #[test]
    fn handles_negative_rhs_and_redundant_rows() {
        let a = matrix(&[&[-1, 1, 0], &[-1, 1, 0], &[0, 1, 1]]);
        let b = vec![q(-2), q(-2), q(3)];
        let x = feasible_point(&a, &b, 3).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale-style degenerate system; Bland's rule must terminate
        let a = matrix(&[&[1, 0, 0, 1, -2, 0], &[0, 1, 0, -1, 1, 1], &[0, 0, 1, 0, 1, -1]]);
        let b = vec![q(0), q(0), q(1)];
        let x = feasible_point(&a, &b, 6).unwrap();
        check(&a, &b, &x);
    }
}
