use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

/// A freely reduced word in `x_1, …, x_n`. Letter `+j` is `x_j`, `-j` is
/// `x_j^{-1}` (1-based).
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces the given letters.
    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// `x_{j+1}` for the 0-based generator index `j`.
    pub fn generator(j: usize) -> Self {
        Word(vec![j as i32 + 1])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Exponent sums, one per generator.
    pub fn exponent_vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += i64::from(l.signum());
        }
        v
    }

    /// Renders with the given generator names, collapsing runs into powers.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            let name = names
                .get(l.unsigned_abs() as usize - 1)
                .cloned()
                .unwrap_or_else(|| format!("x{}", l.unsigned_abs()));
            let e = run as i64 * i64::from(l.signum());
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            i += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Parses `x1 x2^-1 x1^3` (tokens separated by spaces or `*`) against the
/// given generator names. `1` is the empty word.
pub fn parse_word(src: &str, names: &[String]) -> Result<Word> {
    let mut letters = Vec::new();
    for tok in src.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        if tok == "1" {
            continue;
        }
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => {
                let e: i64 = e
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad exponent in `{tok}`")))?;
                (b, e)
            }
            None => (tok, 1),
        };
        let j = names
            .iter()
            .position(|n| n == base)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator `{base}`")))?;
        if exp.unsigned_abs() > 1 << 16 {
            return Err(Error::InvalidArgument(format!("exponent too large in `{tok}`")));
        }
        let l = (j as i32 + 1) * exp.signum() as i32;
        letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
    }
    Ok(Word::from_letters(letters))
}

/// An element of the integral group ring of the free group.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FreeGroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl FreeGroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Image in `Z[t_1^±, …, t_r^±]` under `x_j ↦ t^{columns[j]}`.
    pub fn abelianize(&self, columns: &[Vec<i64>], r: usize) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero(r);
        for (w, c) in &self.terms {
            let mut e = vec![0i64; r];
            for l in w.letters() {
                let col = &columns[l.unsigned_abs() as usize - 1];
                for (x, y) in e.iter_mut().zip(col) {
                    *x += i64::from(l.signum()) * y;
                }
            }
            p.add_term(e, BigRational::from_integer(c.clone()));
        }
        p
    }

    /// Image in `Z[Z^n]`, `x_j ↦ t_j`.
    pub fn abelianize_free(&self, n: usize) -> LaurentPolynomial {
        let columns: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let mut c = vec![0; n];
                c[j] = 1;
                c
            })
            .collect();
        self.abelianize(&columns, n)
    }
}

impl fmt::Display for FreeGroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if mag == BigInt::from(1) {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeGroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeGroupRingElement({self})")
    }
}

/// Free Fox derivative `∂r/∂x_j` (0-based `j`).
pub fn fox_derivative(r: &Word, j: usize) -> FreeGroupRingElement {
    let target = j as i32 + 1;
    let mut out = FreeGroupRingElement::zero();
    let mut prefix: Vec<i32> = Vec::with_capacity(r.len());
    for &l in r.letters() {
        if l == target {
            out.add_term(Word::from_letters(prefix.iter().copied()), BigInt::from(1));
        }
        prefix.push(l);
        if l == -target {
            out.add_term(Word::from_letters(prefix.iter().copied()), BigInt::from(-1));
        }
    }
    out
}
