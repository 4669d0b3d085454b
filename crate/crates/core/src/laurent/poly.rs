use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::uni::UniLaurent;
use crate::error::{Error, Result};
use crate::exactlin::FieldOps;

/// Exponent vector of a monomial.
pub type Exponent = Vec<i64>;

/// A Laurent polynomial in `n` variables with rational coefficients.
///
/// No zero coefficients are stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn binomial(n: i64, k: i64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// `c · t^e`.
    pub fn monomial(e: Exponent, c: BigRational) -> Self {
        let mut p = Self::zero(e.len());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable `t_{j+1}` (0-based index `j`).
    pub fn variable(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(nvars: usize, terms: &[(&[i64], i64)]) -> Result<Self> {
        Self::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), rat(*c))))
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    pub fn coefficient(&self, e: &[i64]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `f(1, …, 1)`, the sum of the coefficients.
    pub fn value_at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        Ok(p)
    }

    /// Multiplication by the monomial `t^m`.
    pub fn mul_monomial(&self, m: &[i64]) -> Result<Self> {
        if m.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: m.len(),
            });
        }
        Ok(LaurentPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Inverse of a single-term polynomial.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(e.iter().map(|a| -a).collect(), c.recip()))
    }

    /// Componentwise minimum of the exponents (zero vector for `0`).
    pub fn min_exponents(&self) -> Exponent {
        let mut m: Option<Exponent> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(cur) => cur.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// Representative of `f` up to monomial units: exponents shifted so each
    /// variable has minimum exponent zero and the lexicographically largest
    /// term has coefficient one.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let shift: Exponent = self.min_exponents().iter().map(|a| -a).collect();
        let p = self.mul_monomial(&shift).expect("matching length");
        let lead = p.terms.values().next_back().expect("nonzero").clone();
        p.scale(&lead.recip())
    }

    /// Change of variables `t_j ↦ t^{columns[j]}`, a monomial map into a torus
    /// of dimension `target`.
    pub fn substitute_monomials(&self, columns: &[Exponent], target: usize) -> Result<Self> {
        if columns.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: columns.len(),
            });
        }
        if let Some(bad) = columns.iter().find(|c| c.len() != target) {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: bad.len(),
            });
        }
        let mut p = Self::zero(target);
        for (e, c) in &self.terms {
            let mut img = vec![0i64; target];
            for (a, col) in e.iter().zip(columns) {
                for (x, y) in img.iter_mut().zip(col) {
                    *x += a * y;
                }
            }
            p.add_term(img, c.clone());
        }
        Ok(p)
    }

    /// Value at a point of the torus `(k^×)^n`.
    pub fn evaluate<F: FieldOps>(&self, k: &F, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        if let Some(index) = point.iter().position(|x| k.is_zero(x)) {
            return Err(Error::ZeroCoordinate { index });
        }
        let mut acc = k.zero();
        for (e, c) in &self.terms {
            let mut term = k.from_rational(c)?;
            for (x, a) in point.iter().zip(e) {
                term = k.mul(&term, &k.pow(x, *a).expect("nonzero base"));
            }
            acc = k.add(&acc, &term);
        }
        Ok(acc)
    }

    /// `g(u) = f(u^{z_1}, …, u^{z_n})`.
    pub fn restrict_to_curve(&self, z: &[i64]) -> Result<UniLaurent> {
        if z.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: z.len(),
            });
        }
        let mut g = UniLaurent::zero();
        for (e, c) in &self.terms {
            let d: i64 = e.iter().zip(z).map(|(a, b)| a * b).sum();
            g.add_term(d, c.clone());
        }
        Ok(g)
    }

    /// Lowest homogeneous part of `t^m f(1 + z)`, where `t^m` clears negative
    /// exponents. The result is a polynomial in `z_1, …, z_n`.
    pub fn shifted_initial_form(&self) -> Result<Self> {
        if !self.value_at_one().is_zero() {
            return Err(Error::NotVanishingAtOne);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let shift: Exponent = self.min_exponents().iter().map(|a| -a).collect();
        let f = self.mul_monomial(&shift)?;
        let mut expanded = Self::zero(self.nvars);
        for (e, c) in &f.terms {
            let mut partial = vec![(vec![0i64; self.nvars], BigInt::one())];
            for (j, &ej) in e.iter().enumerate() {
                let mut next = Vec::with_capacity(partial.len() * (ej as usize + 1));
                for (a, coef) in &partial {
                    for k in 0..=ej {
                        let mut a2 = a.clone();
                        a2[j] = k;
                        next.push((a2, coef * binomial(ej, k)));
                    }
                }
                partial = next;
            }
            for (a, coef) in partial {
                expanded.add_term(a, c * BigRational::from_integer(coef));
            }
        }
        let low = expanded
            .terms
            .keys()
            .map(|a| a.iter().sum::<i64>())
            .min()
            .expect("nonzero polynomial has nonzero expansion");
        Ok(LaurentPolynomial {
            nvars: self.nvars,
            terms: expanded
                .terms
                .into_iter()
                .filter(|(a, _)| a.iter().sum::<i64>() == low)
                .collect(),
        })
    }

    /// Renders with variables `<var>1, <var>2, …`, highest lexicographic term first.
    pub fn display_with(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, a)| **a != 0)
                .map(|(j, a)| {
                    if *a == 1 {
                        format!("{var}{}", j + 1)
                    } else {
                        format!("{var}{}^{a}", j + 1)
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{mag}*{}", mono.join("*")));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial[{}]({})", self.nvars, self)
    }
}

pub fn evaluate<F: FieldOps>(f: &LaurentPolynomial, k: &F, point: &[F::Elem]) -> Result<F::Elem> {
    f.evaluate(k, point)
}

pub fn restrict_to_curve(f: &LaurentPolynomial, z: &[i64]) -> Result<UniLaurent> {
    f.restrict_to_curve(z)
}

pub fn shifted_initial_form(f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    f.shifted_initial_form()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn evaluation() {
        let q = Rationals;
        assert_eq!(p("t1 + t2 - 2").evaluate(&q, &[rat(1), rat(1)]).unwrap(), rat(0));
        assert_eq!(p("5").evaluate(&q, &[]).unwrap(), rat(5));
        assert_eq!(p("t1 + 1").evaluate(&q, &[rat(-1)]).unwrap(), rat(0));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(p("t1^-1").evaluate(&f5, &[2]).unwrap(), 3);
        assert_eq!(p("t1^-1").evaluate(&f5, &[0]), Err(Error::ZeroCoordinate { index: 0 }));
    }

    #[test]
    fn curve_restriction() {
        assert_eq!(p("t1 + t2 - 2").restrict_to_curve(&[1, 1]).unwrap().to_string(), "2*u - 2");
        assert!(p("t1*t2 - t1 - t2 + 1").restrict_to_curve(&[1, 0]).unwrap().is_zero());
        let f = crate::laurent::parse_polynomial("t1 - 1", 't', Some(2)).unwrap();
        assert!(f.restrict_to_curve(&[0, 5]).unwrap().is_zero());
    }

    #[test]
    fn initial_forms() {
        assert_eq!(p("t1 + t2 - 2").shifted_initial_form().unwrap(), p("t1 + t2"));
        assert_eq!(p("t1 - 1").shifted_initial_form().unwrap(), p("t1"));
        assert_eq!(p("t1*t2 - t1 - t2 + 1").shifted_initial_form().unwrap(), p("t1*t2"));
        assert_eq!(p("t1^-3 - t1^-2").shifted_initial_form().unwrap(), p("-t1"));
        assert_eq!(p("t1 + 1").shifted_initial_form(), Err(Error::NotVanishingAtOne));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p("t1^2*t2^-1 - 3*t2 + 2").to_string(), "t1^2*t2^-1 - 3*t2 + 2");
        assert_eq!(p("1/2*t1 - t1").to_string(), "-1/2*t1");
        assert_eq!(LaurentPolynomial::zero(2).to_string(), "0");
        assert_eq!(p("t1*t2 - t1").display_with("z"), "z1*z2 - z1");
    }

    #[test]
    fn unit_normalization() {
        let f = p("t1 + t2 - 2");
        let g = f.mul_monomial(&[-3, 2]).unwrap().scale(&rat(-7));
        assert_eq!(f.normalize_unit(), g.normalize_unit());
    }
}
