//! Rational linear subspaces of `Q^n` in canonical constraint form.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::matrix::{kernel_basis, primitive_integer_vector, rref, IntegerMatrix, RationalMatrix};
use crate::error::{Error, Result};

/// A subspace of `Q^n`, stored as the kernel of an integer constraint matrix.
///
/// The constraint matrix is the reduced row echelon form of any defining
/// system, each row scaled to a primitive integer vector, so two subspaces are
/// equal exactly when their stored constraints are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubspaceQ {
    ambient: usize,
    constraints: Vec<Vec<BigInt>>,
    basis: Vec<Vec<BigInt>>,
}

impl SubspaceQ {
    /// Kernel of the given rational constraint rows.
    pub fn from_rational_constraints(ambient: usize, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let m = RationalMatrix::from_rows(ambient, rows)?;
        let (r, _) = rref(&m);
        let constraints: Vec<Vec<BigInt>> = (0..r.rows())
            .map(|i| primitive_integer_vector(r.row(i)))
            .collect();
        let basis = kernel_basis(&r);
        Ok(SubspaceQ {
            ambient,
            constraints,
            basis,
        })
    }

    /// Kernel of the given integer constraint rows.
    pub fn from_constraints(ambient: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        Self::from_rational_constraints(ambient, rows)
    }

    pub fn from_i64_constraints(ambient: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_constraints(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = RationalMatrix::from_rows(ambient, vectors)?;
        let constraints = kernel_basis(&m);
        Self::from_constraints(ambient, constraints)
    }

    pub fn span_integer(ambient: usize, vectors: &[Vec<BigInt>]) -> Result<Self> {
        Self::span(
            ambient,
            vectors
                .iter()
                .map(|v| v.iter().cloned().map(BigRational::from_integer).collect())
                .collect(),
        )
    }

    pub fn zero(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        Self::from_constraints(ambient, rows).expect("identity rows have ambient length")
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceQ {
            ambient,
            constraints: Vec::new(),
            basis: (0..ambient)
                .map(|i| {
                    (0..ambient)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
        }
    }

    /// The coordinate subspace `Q^W` spanned by the listed coordinates.
    pub fn coordinate(ambient: usize, support: &[usize]) -> Result<Self> {
        if let Some(&bad) = support.iter().find(|&&j| j >= ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad + 1,
            });
        }
        let rows = (0..ambient)
            .filter(|j| !support.contains(j))
            .map(|j| {
                (0..ambient)
                    .map(|k| if k == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        Self::from_constraints(ambient, rows)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.constraints.len()
    }

    /// Canonical constraint rows.
    pub fn constraints(&self) -> &[Vec<BigInt>] {
        &self.constraints
    }

    /// Integer basis (primitive vectors).
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.constraints.is_empty()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }

    pub fn contains_vector(&self, v: &[BigRational]) -> Result<bool> {
        self.check_ambient(v.len())?;
        Ok(self.constraints.iter().all(|row| {
            row.iter()
                .zip(v)
                .map(|(a, x)| x * a)
                .fold(BigRational::zero(), |acc, t| acc + t)
                .is_zero()
        }))
    }

    pub fn contains_integer_vector(&self, v: &[BigInt]) -> Result<bool> {
        self.check_ambient(v.len())?;
        Ok(self.constraints.iter().all(|row| {
            row.iter()
                .zip(v)
                .map(|(a, x)| a * x)
                .fold(BigInt::zero(), |acc, t| acc + t)
                .is_zero()
        }))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &SubspaceQ) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for b in &other.basis {
            if !self.contains_integer_vector(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersect(&self, other: &SubspaceQ) -> Result<SubspaceQ> {
        self.check_ambient(other.ambient)?;
        let rows = self
            .constraints
            .iter()
            .chain(&other.constraints)
            .cloned()
            .collect();
        SubspaceQ::from_constraints(self.ambient, rows)
    }

    pub fn sum(&self, other: &SubspaceQ) -> Result<SubspaceQ> {
        self.check_ambient(other.ambient)?;
        let vecs: Vec<Vec<BigInt>> = self.basis.iter().chain(&other.basis).cloned().collect();
        SubspaceQ::span_integer(self.ambient, &vecs)
    }

    /// `self ⊕ other` inside `Q^(n+m)`.
    pub fn direct_sum(&self, other: &SubspaceQ) -> SubspaceQ {
        let n = self.ambient + other.ambient;
        let mut rows = Vec::with_capacity(self.constraints.len() + other.constraints.len());
        for r in &self.constraints {
            let mut row = r.clone();
            row.resize(n, BigInt::zero());
            rows.push(row);
        }
        for r in &other.constraints {
            let mut row = vec![BigInt::zero(); self.ambient];
            row.extend(r.iter().cloned());
            rows.push(row);
        }
        SubspaceQ::from_constraints(n, rows).expect("rows padded to ambient length")
    }

    /// Formats the constraints as equations in `z1..zn`.
    pub fn equations(&self) -> Vec<String> {
        self.constraints.iter().map(|r| format_equation(r, "z")).collect()
    }
}

pub(crate) fn format_linear_form(row: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (j, c) in row.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = format!("{var}{}", j + 1);
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = c.abs();
        if a.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{a}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_equation(row: &[BigInt], var: &str) -> String {
    format!("{} = 0", format_linear_form(row, var))
}

impl fmt::Display for SubspaceQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "{{0}}")
        } else if self.is_full() {
            write!(f, "Q^{}", self.ambient)
        } else {
            write!(f, "{{{}}}", self.equations().join(", "))
        }
    }
}

impl fmt::Debug for SubspaceQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubspaceQ(n={}, {})", self.ambient, self)
    }
}

impl PartialOrd for SubspaceQ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Larger subspaces first, then reverse lexicographic on constraints.
impl Ord for SubspaceQ {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(other.dim().cmp(&self.dim()))
            .then_with(|| other.constraints.cmp(&self.constraints))
    }
}

/// `A ∩ B`.
pub fn subspace_intersect(a: &SubspaceQ, b: &SubspaceQ) -> Result<SubspaceQ> {
    a.intersect(b)
}

/// `v ∈ A`.
pub fn subspace_member(a: &SubspaceQ, v: &[BigRational]) -> Result<bool> {
    a.contains_vector(v)
}

/// Whether the rational row space of `n` meets the coordinate subspace `Q^W`
/// in a nonzero vector. Decided by comparing the rank of `n` with the rank of
/// `n` with the `W` columns deleted.
pub fn rowspace_meets_coordinate_subspace(n: &IntegerMatrix, support: &[usize]) -> Result<bool> {
    if let Some(&bad) = support.iter().find(|&&j| j >= n.cols()) {
        return Err(Error::InvalidArgument(format!(
            "column {bad} outside 0..{}",
            n.cols()
        )));
    }
    if support.is_empty() {
        return Ok(false);
    }
    let keep: Vec<usize> = (0..n.cols()).filter(|j| !support.contains(j)).collect();
    let full = n.rank(Field::Rational);
    let reduced = n.select_columns(&keep).rank(Field::Rational);
    Ok(reduced < full)
}
