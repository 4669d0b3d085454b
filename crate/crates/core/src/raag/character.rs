use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{smith_normal_form, IntegerMatrix};
use crate::simplicial::VertexSet;

/// A rational character `χ: G → Q`, one value per name of the vertex universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    names: Vec<String>,
    values: Vec<BigRational>,
}

impl Character {
    pub fn new(names: &[String], values: Vec<BigRational>) -> Result<Self> {
        if names.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                found: values.len(),
            });
        }
        Ok(Character {
            names: names.to_vec(),
            values,
        })
    }

    pub fn from_i64(names: &[String], values: &[i64]) -> Result<Self> {
        Self::new(
            names,
            values.iter().map(|&x| BigRational::from_integer(x.into())).collect(),
        )
    }

    /// Value 1 on every vertex of `vertices`, 0 elsewhere.
    pub fn diagonal_on(names: &[String], vertices: VertexSet) -> Self {
        let values = (0..names.len())
            .map(|v| {
                if vertices.contains(v) {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        Character {
            names: names.to_vec(),
            values,
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, v: usize) -> &BigRational {
        &self.values[v]
    }

    /// `{v : χ(v) ≠ 0}`.
    pub fn support(&self) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Whether `χ` is 1 on every vertex of `vertices` and 0 elsewhere.
    pub fn is_diagonal_on(&self, vertices: VertexSet) -> bool {
        *self == Self::diagonal_on(&self.names, vertices)
    }

    pub fn negated(&self) -> Self {
        Character {
            names: self.names.clone(),
            values: self.values.iter().map(|x| -x).collect(),
        }
    }

    /// The primitive integer multiple with the same sign.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .values
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .values
            .iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|x| x / &g).collect()
    }

    /// Whether `χ` is an epimorphism onto `Z`: integral with coprime values.
    pub fn is_epimorphism(&self) -> bool {
        if self.values.iter().any(|x| !x.is_integer()) || self.is_zero() {
            return false;
        }
        let g = self
            .values
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x.numer()));
        g.is_one()
    }

    /// `a=1 b=0 c=2`, all vertices listed.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .names
            .iter()
            .zip(&self.values)
            .map(|(n, x)| format!("{n}={x}"))
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character({self})")
    }
}

/// Parses `chi: a=1 b=0 c=-1/2` (the `chi:` prefix is optional). Vertices not
/// mentioned get the value 0.
pub fn parse_character(src: &str, names: &[String]) -> Result<Character> {
    let body = src.trim();
    let body = body.strip_prefix("chi:").unwrap_or(body);
    let mut values = vec![BigRational::zero(); names.len()];
    let mut seen = vec![false; names.len()];
    for tok in body.split_whitespace() {
        let (name, val) = tok
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("expected `name=value`, got `{tok}`")))?;
        let v = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
        if seen[v] {
            return Err(Error::InvalidArgument(format!("vertex `{name}` given twice")));
        }
        seen[v] = true;
        values[v] = val
            .parse::<BigRational>()
            .map_err(|_| Error::InvalidArgument(format!("bad value `{val}` for `{name}`")))?;
    }
    Character::new(names, values)
}

/// A surjection `ν: G → Z^r`, stored as an `r × |V|` integer matrix whose
/// column `v` is the image of generator `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpimorphismZr {
    matrix: IntegerMatrix,
}

impl EpimorphismZr {
    pub fn new(matrix: IntegerMatrix) -> Result<Self> {
        let snf = smith_normal_form(&matrix);
        if snf.rank != matrix.rows() || !snf.is_unimodular_diagonal() {
            return Err(Error::NotSurjective(matrix.rows()));
        }
        Ok(EpimorphismZr { matrix })
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntegerMatrix::from_i64_rows(cols, rows)?)
    }

    /// `ν = (1, …, 1)`.
    pub fn diagonal(n: usize) -> Self {
        Self::from_i64_rows(n, &[vec![1; n]]).expect("diagonal map is onto")
    }

    pub fn identity(n: usize) -> Self {
        Self::new(IntegerMatrix::identity(n)).expect("identity is onto")
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<String> = (0..self.matrix.rows())
            .map(|i| {
                let r: Vec<String> = self.matrix.row(i).iter().map(ToString::to_string).collect();
                r.join(" ")
            })
            .collect();
        rows.join("; ")
    }
}

/// Parses integer rows separated by `;` or newlines, e.g. `1 1 1; 0 1 0`.
pub fn parse_epimorphism(src: &str) -> Result<EpimorphismZr> {
    let rows = src
        .split([';', '\n'])
        .map(str::trim)
        .filter(|r| !r.is_empty() && !r.starts_with('#'))
        .map(|r| {
            r.split_whitespace()
                .map(|x| {
                    x.parse::<i64>()
                        .map_err(|_| Error::InvalidArgument(format!("bad matrix entry `{x}`")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch {
            expected: cols,
            found: bad.len(),
        });
    }
    if rows.is_empty() {
        return Err(Error::InvalidArgument("empty epimorphism matrix".into()));
    }
    EpimorphismZr::from_i64_rows(cols, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn character_parsing() {
        let n = names(&["a", "b", "c"]);
        let chi = parse_character("chi: a=1 c=-1/2", &n).unwrap();
        assert_eq!(chi.support(), VertexSet::from_iter([0, 2]));
        assert_eq!(chi.to_text(), "a=1 b=0 c=-1/2");
        assert_eq!(parse_character(&chi.to_text(), &n).unwrap(), chi);
        assert_eq!(chi.primitive_integer(), vec![BigInt::from(2), BigInt::zero(), BigInt::from(-1)]);
        assert!(!chi.is_epimorphism());
        assert!(parse_character("d=1", &n).is_err());
        assert!(parse_character("a=1 a=2", &n).is_err());
        assert!(parse_character("a=1 b=1 c=1", &n).unwrap().is_diagonal_on(VertexSet::first(3)));
    }

    #[test]
    fn epimorphisms() {
        let nu = parse_epimorphism("1 1 1; 0 1 0").unwrap();
        assert_eq!(nu.rank(), 2);
        assert_eq!(nu.to_text(), "1 1 1; 0 1 0");
        assert!(matches!(parse_epimorphism("2 2"), Err(Error::NotSurjective(1))));
        assert!(matches!(parse_epimorphism("1 0; 2 0"), Err(Error::NotSurjective(2))));
        assert!(parse_epimorphism("1 0; 1").is_err());
    }
}
