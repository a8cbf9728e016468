//! Exact rank of rational matrices by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Coefficient;

/// Rank of a dense rational matrix given as rows.
pub fn rank(matrix: &[Vec<Coefficient>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    // clear denominators row by row; scaling a row keeps the rank
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect()
        })
        .collect();
    let mut r = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in col + 1..cols {
                let v = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
