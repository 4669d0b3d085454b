use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exactlin::FieldOps;

/// A Laurent polynomial in one variable `u`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniLaurent {
    terms: BTreeMap<i64, BigRational>,
}

impl UniLaurent {
    pub fn zero() -> Self {
        UniLaurent::default()
    }

    pub fn from_coefficients<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let mut g = Self::zero();
        for (d, c) in terms {
            g.add_term(d, c);
        }
        g
    }

    /// From integer coefficients of `u^0, u^1, …`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coefficients(
            coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| (d as i64, BigRational::from_integer((*c).into()))),
        )
    }

    pub(crate) fn add_term(&mut self, d: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: i64) -> BigRational {
        self.terms.get(&d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut g = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                g.add_term(a + b, x * y);
            }
        }
        g
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut g = self.clone();
        for (d, c) in &other.terms {
            g.add_term(*d, -c);
        }
        g
    }

    fn shift(&self, by: i64) -> Self {
        UniLaurent {
            terms: self.terms.iter().map(|(d, c)| (d + by, c.clone())).collect(),
        }
    }

    /// Shifted so the lowest term is `u^0`, and made monic.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_degree() else {
            return Self::zero();
        };
        let g = self.shift(-lo);
        let lead = g.terms.values().next_back().expect("nonzero").recip();
        UniLaurent {
            terms: g.terms.into_iter().map(|(d, c)| (d, c * &lead)).collect(),
        }
    }

    fn rem(&self, divisor: &Self) -> Self {
        let mut r = self.clone();
        let (dd, dc) = divisor.terms.iter().next_back().expect("nonzero divisor");
        while let Some((&rd, rc)) = r.terms.iter().next_back() {
            if rd < *dd {
                break;
            }
            let q = rc / dc;
            let step = UniLaurent::from_coefficients([(rd - dd, q)]);
            r = r.sub(&step.mul(divisor));
        }
        r
    }

    pub fn evaluate<F: FieldOps>(&self, k: &F, u: &F::Elem) -> Result<F::Elem> {
        let mut acc = k.zero();
        for (d, c) in &self.terms {
            let p = k
                .pow(u, *d)
                .ok_or(crate::Error::ZeroCoordinate { index: 0 })?;
            acc = k.add(&acc, &k.mul(&k.from_rational(c)?, &p));
        }
        Ok(acc)
    }
}

/// Greatest common divisor up to a monomial unit, normalized by
/// [`UniLaurent::normalized`].
pub fn gcd_univariate(g: &UniLaurent, h: &UniLaurent) -> UniLaurent {
    let mut a = g.normalized();
    let mut b = h.normalized();
    while !b.is_zero() {
        let r = a.rem(&b).normalized();
        a = b;
        b = r;
    }
    a.normalized()
}

impl fmt::Display for UniLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let mono = match d {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{d}"),
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniLaurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        let u2m1 = UniLaurent::from_ints(&[-1, 0, 1]);
        let um1 = UniLaurent::from_ints(&[-1, 1]);
        assert_eq!(gcd_univariate(&u2m1, &um1), um1);
        let g = UniLaurent::from_ints(&[0, 0, 4, 2]);
        assert_eq!(gcd_univariate(&g, &UniLaurent::zero()), UniLaurent::from_ints(&[2, 1]));
        let a = UniLaurent::from_ints(&[-2, 2]);
        let b = UniLaurent::from_ints(&[-3, 3]);
        assert_eq!(gcd_univariate(&a, &b), um1);
        assert!(gcd_univariate(&UniLaurent::zero(), &UniLaurent::zero()).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(UniLaurent::from_ints(&[-2, 2]).to_string(), "2*u - 2");
        assert_eq!(UniLaurent::from_coefficients([(-1, BigRational::one())]).to_string(), "u^-1");
    }
}
