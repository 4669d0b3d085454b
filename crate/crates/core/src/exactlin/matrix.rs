//! Dense matrices with exact entries, ranks and kernels.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, FieldOps, PrimeField, Rationals};
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntegerMatrix = Matrix<BigInt>;
pub type RationalMatrix = Matrix<BigRational>;

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * keep.len());
        for i in 0..self.rows {
            for &j in keep {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: keep.len(),
            data,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

impl IntegerMatrix {
    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RationalMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Rank over the given field.
    pub fn rank(&self, field: Field) -> usize {
        match field {
            Field::Rational => integer_rank_q(self),
            Field::Prime(p) => {
                let k = PrimeField::new(p).expect("Field::Prime holds a validated prime");
                rank_over(&k, &self.map(|x| k.from_int(x)))
            }
        }
    }
}

impl RationalMatrix {
    pub fn from_integer_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Ok(IntegerMatrix::from_i64_rows(cols, rows)?.to_rational())
    }

    /// Rank over the given field; over `F_p` every entry must reduce.
    pub fn rank(&self, field: Field) -> Result<usize> {
        rank_over_field(self, field)
    }
}

/// Exact rank of a rational matrix over `Q` or over `F_p` (after reduction).
pub fn rank_over_field(m: &RationalMatrix, field: Field) -> Result<usize> {
    match field {
        Field::Rational => Ok(rank_over(&Rationals, m)),
        Field::Prime(p) => {
            let k = PrimeField::new(p)?;
            let mut data = Vec::with_capacity(m.rows * m.cols);
            for x in &m.data {
                data.push(k.from_rational(x)?);
            }
            Ok(rank_over(
                &k,
                &Matrix {
                    rows: m.rows,
                    cols: m.cols,
                    data,
                },
            ))
        }
    }
}

/// Gaussian elimination over an arbitrary field.
pub fn rank_over<F: FieldOps>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !field.is_zero(&a[(i, col)])) else {
            continue;
        };
        a.swap_rows(rank, pivot);
        let inv = field.inv(&a[(rank, col)]).expect("pivot is nonzero");
        for i in rank + 1..rows {
            if field.is_zero(&a[(i, col)]) {
                continue;
            }
            let factor = field.mul(&a[(i, col)], &inv);
            for j in col..cols {
                let t = field.mul(&factor, &a[(rank, j)]);
                a[(i, j)] = field.sub(&a[(i, j)], &t);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a small integer matrix given as row-major `i64` data.
pub(crate) fn small_rank(rows: usize, cols: usize, data: Vec<i64>, field: Field) -> usize {
    match field {
        Field::Rational => match bareiss_rank_i64(rows, cols, data.clone()) {
            Some(r) => r,
            None => bareiss_rank_big(rows, cols, data.into_iter().map(BigInt::from).collect()),
        },
        Field::Prime(p) => {
            let k = PrimeField::new(p).expect("Field::Prime holds a validated prime");
            let data = data.into_iter().map(|x| k.from_i64(x)).collect();
            rank_over(&k, &Matrix { rows, cols, data })
        }
    }
}

/// Rank over `Q` of an integer matrix: fraction-free elimination in `i64`,
/// restarted in `BigInt` if an intermediate value overflows.
fn integer_rank_q(m: &IntegerMatrix) -> usize {
    let small: Option<Vec<i64>> = m.data.iter().map(|x| x.to_i64()).collect();
    if let Some(data) = small {
        if let Some(r) = bareiss_rank_i64(m.rows, m.cols, data) {
            return r;
        }
    }
    bareiss_rank_big(m.rows, m.cols, m.data.clone())
}

fn bareiss_rank_i64(rows: usize, cols: usize, mut a: Vec<i64>) -> Option<usize> {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| a[i * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let p = a[rank * cols + col];
        for i in rank + 1..rows {
            let f = a[i * cols + col];
            if f == 0 {
                continue;
            }
            let g = p.gcd(&f);
            let (mp, mf) = (p / g, f / g);
            let mut content = 0i64;
            for j in col..cols {
                let v = a[i * cols + j]
                    .checked_mul(mp)?
                    .checked_sub(a[rank * cols + j].checked_mul(mf)?)?;
                a[i * cols + j] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for j in col..cols {
                    a[i * cols + j] /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(rows: usize, cols: usize, mut a: Vec<BigInt>) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i * cols + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let p = a[rank * cols + col].clone();
        for i in rank + 1..rows {
            let f = a[i * cols + col].clone();
            if f.is_zero() {
                continue;
            }
            let g = p.gcd(&f);
            let (mp, mf) = (&p / &g, &f / &g);
            let mut content = BigInt::zero();
            for j in col..cols {
                let v = &a[i * cols + j] * &mp - &a[rank * cols + j] * &mf;
                content = content.gcd(&v);
                a[i * cols + j] = v;
            }
            if content > BigInt::one() {
                for j in col..cols {
                    a[i * cols + j] = &a[i * cols + j] / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over `Q`: nonzero rows and pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, pivot);
        let inv = a[(r, col)].recip();
        for j in col..cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, col)].is_zero() {
                continue;
            }
            let f = a[(i, col)].clone();
            for j in col..cols {
                let t = &f * &a[(r, j)];
                a[(i, j)] = &a[(i, j)] - t;
            }
        }
        pivots.push(col);
        r += 1;
    }
    let kept: Vec<Vec<BigRational>> = (0..r).map(|i| a.row(i).to_vec()).collect();
    (
        Matrix::from_rows(cols, kept).expect("rows have matching length"),
        pivots,
    )
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. The zero vector maps to zeros.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !content.is_zero() {
        let sign = ints
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| x.signum())
            .unwrap_or_else(BigInt::one);
        let d = content * sign;
        for x in &mut ints {
            *x = &*x / &d;
        }
    }
    ints
}

/// Basis of the rational kernel `{x : M x = 0}` as primitive integer vectors,
/// one per free column, in increasing free-column order.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<BigInt>> {
    let (r, pivots) = rref(m);
    let n = m.cols;
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[(row, free)].clone();
        }
        basis.push(primitive_integer_vector(&v));
    }
    basis
}
