//! Exact integer matrices and Smith normal form.
//!
//! Entries are arbitrary-precision integers; no floating point or modular
//! shortcuts, so ranks and torsion invariants are exact. Pivoting is on the
//! minimal absolute value, which keeps entry growth moderate at desk scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntegerMatrix {
            rows,
            cols,
            entries: data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntegerMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }
}

/// Rank and invariant factors `d_1 | d_2 | ...` of `m` over the integers.
pub fn smith_normal_form(m: &IntegerMatrix) -> (usize, Vec<BigInt>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diag: Vec<BigInt> = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // pivot: nonzero entry of minimal absolute value in the working block
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in left..cols {
                let v = a.get(r, c);
                if !v.is_zero()
                    && pivot
                        .map(|(pr, pc)| v.abs() < a.get(pr, pc).abs())
                        .unwrap_or(true)
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        swap_rows(&mut a, top, pr);
        swap_cols(&mut a, left, pc);
        loop {
            // clear the pivot column, reducing by Euclid where needed
            let mut clean = true;
            for r in top + 1..rows {
                if a.get(r, left).is_zero() {
                    continue;
                }
                let q = a.get(r, left).div_floor(a.get(top, left));
                if !q.is_zero() {
                    for c in left..cols {
                        let v = a.get(r, c) - &q * a.get(top, c);
                        a.set(r, c, v);
                    }
                }
                if !a.get(r, left).is_zero() {
                    swap_rows(&mut a, top, r);
                    clean = false;
                }
            }
            // clear the pivot row
            for c in left + 1..cols {
                if a.get(top, c).is_zero() {
                    continue;
                }
                let q = a.get(top, c).div_floor(a.get(top, left));
                if !q.is_zero() {
                    for r in top..rows {
                        let v = a.get(r, c) - &q * a.get(r, left);
                        a.set(r, c, v);
                    }
                }
                if !a.get(top, c).is_zero() {
                    swap_cols(&mut a, left, c);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the remaining block; if not, fold the
            // offending row in and restart the reduction
            let mut fixed = true;
            'scan: for r in top + 1..rows {
                for c in left + 1..cols {
                    if !(a.get(r, c) % a.get(top, left)).is_zero() {
                        for cc in left..cols {
                            let v = a.get(top, cc) + a.get(r, cc);
                            a.set(top, cc, v);
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        diag.push(a.get(top, left).abs());
        top += 1;
        left += 1;
    }
    let rank = diag.len();
    // enforce the divisibility chain
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..diag.len().saturating_sub(1) {
            let (g, l) = {
                let g = diag[i].gcd(&diag[i + 1]);
                let l = (&diag[i] * &diag[i + 1]) / &g;
                (g, l)
            };
            if g != diag[i] {
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }
    (rank, diag)
}

/// Exact rank over the rationals via fraction-free (Bareiss) elimination on
/// `i64` entries. Overflow-checked; desk-scale matrices of small entries only.
pub fn rank_i64(rows: usize, cols: usize, data: &[i64]) -> usize {
    assert_eq!(data.len(), rows * cols);
    let mut a: Vec<i64> = data.to_vec();
    let mut rank = 0usize;
    let mut prev = 1i64;
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if p != row {
            for c in 0..cols {
                a.swap(row * cols + c, p * cols + c);
            }
        }
        for r in row + 1..rows {
            for c in col + 1..cols {
                let v = a[row * cols + col]
                    .checked_mul(a[r * cols + c])
                    .and_then(|x| {
                        a[r * cols + col]
                            .checked_mul(a[row * cols + c])
                            .and_then(|y| x.checked_sub(y))
                    })
                    .expect("rank_i64 overflow");
                a[r * cols + c] = v / prev;
            }
            a[r * cols + col] = 0;
        }
        prev = a[row * cols + col];
        row += 1;
        rank += 1;
    }
    rank
}

fn swap_rows(a: &mut IntegerMatrix, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..a.cols {
        let x = a.get(r1, c).clone();
        let y = a.get(r2, c).clone();
        a.set(r1, c, y);
        a.set(r2, c, x);
    }
}

fn swap_cols(a: &mut IntegerMatrix, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for r in 0..a.rows {
        let x = a.get(r, c1).clone();
        let y = a.get(r, c2).clone();
        a.set(r, c1, y);
        a.set(r, c2, x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_i64(rows: usize, cols: usize, data: &[i64]) -> (usize, Vec<i64>) {
        let (rank, f) = smith_normal_form(&IntegerMatrix::from_i64(rows, cols, data));
        (rank, f.iter().map(|x| i64::try_from(x).unwrap()).collect())
    }

    #[test]
    fn snf_zero_and_identity() {
        assert_eq!(snf_i64(2, 3, &[0; 6]), (0, vec![]));
        assert_eq!(snf_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]), (3, vec![1, 1, 1]));
    }

    #[test]
    fn snf_two_by_two() {
        // det = -8, gcd of entries = 2
        assert_eq!(snf_i64(2, 2, &[2, 4, 6, 8]), (2, vec![2, 4]));
    }

    #[test]
    fn snf_divisibility_chain() {
        let (rank, f) = snf_i64(3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 5]);
        assert_eq!(rank, 3);
        assert_eq!(f, vec![1, 1, 30]);
    }

    #[test]
    fn rank_agrees_with_snf() {
        let data = [1, 2, 3, 2, 4, 6, 1, 1, 1];
        assert_eq!(rank_i64(3, 3, &data), 2);
        assert_eq!(snf_i64(3, 3, &data).0, 2);
    }
}
