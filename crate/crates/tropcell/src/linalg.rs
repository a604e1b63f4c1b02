//! Exact matrix rank over the rationals and over small prime fields.
//!
//! Differentials restricted to one multidegree are integer sign matrices, so
//! rank is all the homological checks need. Rational rank uses fraction-free
//! (Bareiss) elimination on big integers; prime-field rank reduces entries
//! modulo p first.

use num::{BigInt, One, Signed, Zero};

use crate::{Error, Result};

/// Rank over the rationals by fraction-free Gaussian elimination. Every
/// intermediate entry is a minor of the input, so divisions are exact.
pub fn rank_rational(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pivot);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
        if row == rows {
            break;
        }
    }
    row
}

/// Rank over the field with p elements, p prime.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> Result<usize> {
    if p < 2 || (2..p).any(|q| q * q <= p && p % q == 0) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if rows == 0 || cols == 0 {
        return Ok(0);
    }
    let reduce = |x: i64| -> u64 { (x.rem_euclid(p as i64)) as u64 };
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let inv = |x: u64| -> u64 { pow_mod(x, p - 2, p) };
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pivot);
        let pinv = inv(a[row][col]);
        for r in row + 1..rows {
            if a[r][col] == 0 {
                continue;
            }
            let factor = a[r][col] * pinv % p;
            for c in col..cols {
                let sub = factor * a[row][c] % p;
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        row += 1;
        if row == rows {
            break;
        }
    }
    Ok(row)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Signed absolute value guard: callers pass sign matrices, but the routines
/// accept any i64 entries whose minors stay within BigInt (always true).
pub fn is_sign_matrix(matrix: &[Vec<i64>]) -> bool {
    matrix
        .iter()
        .flatten()
        .all(|x| BigInt::from(*x).abs() <= BigInt::one())
}
