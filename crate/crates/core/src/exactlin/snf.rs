//! Smith normal form over the integers.
//!
//! Pivoting picks the entry of smallest absolute value in the active block and
//! clears its row and column completely before moving on; a pivot that fails
//! to divide the rest of the block is repaired by adding the offending row.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix, with
/// optional unimodular `U`, `V` such that `U * M * V` is diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub left: Option<IntegerMatrix>,
    pub right: Option<IntegerMatrix>,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// True when every invariant factor is one (the cokernel is free).
    pub fn is_unimodular_diagonal(&self) -> bool {
        self.diagonal.iter().all(One::is_one)
    }
}

/// Smith normal form without transforms.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    snf_impl(m, false)
}

/// Smith normal form keeping `U` and `V`.
pub fn smith_normal_form_with_transforms(m: &IntegerMatrix) -> SmithForm {
    snf_impl(m, true)
}

struct Work {
    a: IntegerMatrix,
    u: Option<IntegerMatrix>,
    v: Option<IntegerMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.a.cols() {
            let t = f * &self.a[(src, j)];
            self.a[(dst, j)] += t;
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols() {
                let t = f * &u[(src, j)];
                u[(dst, j)] += t;
            }
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.a.rows() {
            let t = f * &self.a[(i, src)];
            self.a[(i, dst)] += t;
        }
        if let Some(v) = &mut self.v {
            for i in 0..v.rows() {
                let t = f * &v[(i, src)];
                v[(i, dst)] += t;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.a.cols() {
            self.a[(i, j)] = -self.a[(i, j)].clone();
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols() {
                u[(i, j)] = -u[(i, j)].clone();
            }
        }
    }

    /// Smallest nonzero |entry| in the block `[t.., t..]`.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if x.is_one() || (-x).is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }
}

fn snf_impl(m: &IntegerMatrix, transforms: bool) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: transforms.then(|| IntegerMatrix::identity(rows)),
        v: transforms.then(|| IntegerMatrix::identity(cols)),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.smallest_in_block(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = w.a[(i, t)].div_floor(&w.a[(t, t)]);
                w.add_row(i, t, &-q);
                if !w.a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = w.a[(t, j)].div_floor(&w.a[(t, t)]);
                w.add_col(j, t, &-q);
                if !w.a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot: move it in
                let mut best = (t, t);
                for i in t..rows {
                    let x = &w.a[(i, t)];
                    if !x.is_zero() && x.abs() < w.a[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    let x = &w.a[(t, j)];
                    if !x.is_zero() && x.abs() < w.a[best].abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            let pivot = w.a[(t, t)].clone();
            let offending = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !w.a[(i, j)].is_multiple_of(&pivot))
            });
            match offending {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let diagonal: Vec<BigInt> = (0..t).map(|i| w.a[(i, i)].clone()).collect();
    SmithForm {
        rank: diagonal.len(),
        diagonal,
        left: w.u,
        right: w.v,
    }
}
