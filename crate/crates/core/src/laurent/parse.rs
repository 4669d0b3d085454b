//! Parser for polynomial expressions such as `t1^2*t2^-1 - 3*t2 + 2`.
//!
//! Products, sums, parentheses and integer powers are accepted; negative
//! powers only of monomials. Coefficients may be written `3/2`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::LaurentPolynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str, var: char) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let bad = |m: String| Error::InvalidArgument(format!("polynomial `{src}`: {m}"));
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::Open);
                i += 1
            }
            ')' => {
                out.push(Tok::Close);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(s.parse().expect("digits")));
            }
            v if v == var => {
                let start = i + 1;
                i = start;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let k: usize = s
                    .parse()
                    .map_err(|_| bad(format!("variable `{var}` needs an index")))?;
                if k == 0 {
                    return Err(bad("variables are numbered from 1".into()));
                }
                out.push(Tok::Var(k - 1));
            }
            other => return Err(bad(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Expression tree; variable count is fixed only after parsing.
enum Expr {
    Num(BigInt),
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, m: &str) -> Error {
        Error::InvalidArgument(format!("polynomial `{}`: {m}", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat(&Tok::Minus) {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.power()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
            } else if matches!(self.peek(), Some(Tok::Var(_) | Tok::Open | Tok::Num(_))) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let neg = self.eat(&Tok::Minus);
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return Err(self.err("expected an integer exponent after `^`"));
        };
        self.pos += 1;
        let e: i64 = i64::try_from(&n).map_err(|_| self.err("exponent too large"))?;
        Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Var(k)) => {
                self.pos += 1;
                Ok(Expr::Var(k))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::Close) {
                    return Err(self.err("missing `)`"));
                }
                Ok(e)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.power()?)))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

fn max_var(e: &Expr) -> Option<usize> {
    match e {
        Expr::Num(_) => None,
        Expr::Var(k) => Some(*k),
        Expr::Neg(a) | Expr::Pow(a, _) => max_var(a),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            max_var(a).max(max_var(b))
        }
    }
}

fn eval(e: &Expr, n: usize, src: &str) -> Result<LaurentPolynomial> {
    let bad = |m: &str| Error::InvalidArgument(format!("polynomial `{src}`: {m}"));
    Ok(match e {
        Expr::Num(c) => LaurentPolynomial::constant(n, BigRational::from_integer(c.clone())),
        Expr::Var(k) => LaurentPolynomial::variable(n, *k),
        Expr::Neg(a) => eval(a, n, src)?.neg(),
        Expr::Add(a, b) => eval(a, n, src)?.add(&eval(b, n, src)?)?,
        Expr::Sub(a, b) => eval(a, n, src)?.sub(&eval(b, n, src)?)?,
        Expr::Mul(a, b) => eval(a, n, src)?.mul(&eval(b, n, src)?)?,
        Expr::Div(a, b) => {
            let inv = eval(b, n, src)?
                .monomial_inverse()
                .ok_or_else(|| bad("can only divide by a nonzero monomial"))?;
            eval(a, n, src)?.mul(&inv)?
        }
        Expr::Pow(a, k) => {
            let base = eval(a, n, src)?;
            let base = if *k < 0 {
                base.monomial_inverse()
                    .ok_or_else(|| bad("negative powers are allowed only for monomials"))?
            } else {
                base
            };
            base.pow(k.unsigned_abs() as u32)
        }
    })
}

/// Parses a polynomial in variables `<var>1, <var>2, …`. With `nvars = None`
/// the variable count is the largest index used.
pub fn parse_polynomial(src: &str, var: char, nvars: Option<usize>) -> Result<LaurentPolynomial> {
    let toks = tokenize(src, var)?;
    if toks.is_empty() {
        return Err(Error::InvalidArgument("empty polynomial".into()));
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        src,
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    let used = max_var(&e).map_or(0, |k| k + 1);
    let n = match nvars {
        Some(n) if n < used => {
            return Err(Error::InvalidArgument(format!(
                "polynomial `{src}` uses {var}{used} but only {n} variables are declared"
            )))
        }
        Some(n) => n,
        None => used,
    };
    eval(&e, n, src)
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s, 't', None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sums_and_products() {
        let f: LaurentPolynomial = "(1+t1)(1-t2)".parse().unwrap();
        assert_eq!(f.to_string(), "-t1*t2 + t1 - t2 + 1");
        let g: LaurentPolynomial = "3/2*t1 - t1^-1".parse().unwrap();
        assert_eq!(g.to_string(), "3/2*t1 - t1^-1");
        assert_eq!(parse_polynomial("t1", 't', Some(3)).unwrap().nvars(), 3);
        assert!(parse_polynomial("t3", 't', Some(2)).is_err());
        assert!("t0".parse::<LaurentPolynomial>().is_err());
        assert!("(t1+1)^-1".parse::<LaurentPolynomial>().is_err());
        assert!("t1 +".parse::<LaurentPolynomial>().is_err());
        assert!("".parse::<LaurentPolynomial>().is_err());
    }

    #[test]
    fn round_trips_display() {
        for s in ["t1^2*t2^-1 - 3*t2 + 2", "-t1 + 1/3", "0", "t2^5 - t1*t3"] {
            let f: LaurentPolynomial = s.parse().unwrap();
            let again: LaurentPolynomial = f.to_string().parse().unwrap();
            assert_eq!(f, again);
        }
    }
}
