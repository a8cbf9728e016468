use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// rows, memoised on the set of remaining columns (`O(2^n n)` products).
pub fn determinant(matrix: &[Vec<Polynomial>], nvars: usize) -> Result<Polynomial> {
    let size = matrix.len();
    if matrix.iter().any(|row| row.len() != size) {
        return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
    }
    if size == 0 {
        return Ok(Polynomial::one(nvars));
    }
    if size >= 64 {
        return Err(Error::InvalidArgument("matrix too large".into()));
    }
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    expand(matrix, 0, (1u64 << size) - 1, nvars, &mut memo)
}

fn expand(
    m: &[Vec<Polynomial>],
    row: usize,
    cols: u64,
    nvars: usize,
    memo: &mut HashMap<u64, Polynomial>,
) -> Result<Polynomial> {
    if row == m.len() {
        return Ok(Polynomial::one(nvars));
    }
    if let Some(p) = memo.get(&cols) {
        return Ok(p.clone());
    }
    let mut acc = Polynomial::zero(nvars);
    let mut sign_negative = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let minor = expand(m, row + 1, cols & !(1 << c), nvars, memo)?;
            let term = entry.mul(&minor)?;
            acc = if sign_negative { acc.sub(&term)? } else { acc.add(&term)? };
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, acc.clone());
    Ok(acc)
}
