use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactlin::SubspaceQ;

/// A finite union of rational linear subspaces of `Q^n`, kept as the
/// antichain of its maximal members in sorted order.
///
/// The arrangement with no members is the empty set, distinct from `{0}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSubspaceArrangement {
    ambient: usize,
    members: Vec<SubspaceQ>,
}

impl RationalSubspaceArrangement {
    pub fn empty(ambient: usize) -> Self {
        RationalSubspaceArrangement {
            ambient,
            members: Vec::new(),
        }
    }

    /// The single point `{0}`.
    pub fn origin(ambient: usize) -> Self {
        RationalSubspaceArrangement {
            ambient,
            members: vec![SubspaceQ::zero(ambient)],
        }
    }

    pub fn full(ambient: usize) -> Self {
        RationalSubspaceArrangement {
            ambient,
            members: vec![SubspaceQ::full(ambient)],
        }
    }

    pub fn from_subspaces<I: IntoIterator<Item = SubspaceQ>>(ambient: usize, subspaces: I) -> Result<Self> {
        let mut all: Vec<SubspaceQ> = Vec::new();
        for s in subspaces {
            if s.ambient() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: s.ambient(),
                });
            }
            all.push(s);
        }
        Ok(Self::reduce(ambient, all))
    }

    /// Keeps the maximal members; input dimensions are trusted.
    pub(crate) fn reduce(ambient: usize, mut all: Vec<SubspaceQ>) -> Self {
        all.sort();
        all.dedup();
        let mut members: Vec<SubspaceQ> = Vec::with_capacity(all.len());
        // sorted by decreasing dimension, so containers come first
        for s in all {
            let covered = members
                .iter()
                .any(|m| m.contains(&s).expect("same ambient dimension"));
            if !covered {
                members.push(s);
            }
        }
        RationalSubspaceArrangement { ambient, members }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn members(&self) -> &[SubspaceQ] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_origin(&self) -> bool {
        self.members.len() == 1 && self.members[0].is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().any(SubspaceQ::is_full)
    }

    pub fn contains_vector(&self, v: &[BigRational]) -> Result<bool> {
        for m in &self.members {
            if m.contains_vector(v)? {
                return Ok(true);
            }
        }
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(false)
    }

    pub fn contains_integer_vector(&self, v: &[BigInt]) -> Result<bool> {
        for m in &self.members {
            if m.contains_integer_vector(v)? {
                return Ok(true);
            }
        }
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(false)
    }

    pub fn contains_i64_vector(&self, v: &[i64]) -> Result<bool> {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains_integer_vector(&v)
    }

    /// Whether some member contains the subspace `s`.
    pub fn covers(&self, s: &SubspaceQ) -> Result<bool> {
        for m in &self.members {
            if m.contains(s)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let all = self.members.iter().chain(&other.members).cloned().collect();
        Ok(Self::reduce(self.ambient, all))
    }

    /// Set-theoretic intersection, distributing over the unions.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut all = Vec::new();
        for a in &self.members {
            for b in &other.members {
                all.push(a.intersect(b)?);
            }
        }
        Ok(Self::reduce(self.ambient, all))
    }

    /// `A × B` inside `Q^(n+m)`.
    pub fn product(&self, other: &Self) -> Self {
        let all = self
            .members
            .iter()
            .flat_map(|a| other.members.iter().map(move |b| a.direct_sum(b)))
            .collect();
        Self::reduce(self.ambient + other.ambient, all)
    }
}

/// `A × B`, all pairwise direct sums.
pub fn arrangement_product(
    a: &RationalSubspaceArrangement,
    b: &RationalSubspaceArrangement,
) -> RationalSubspaceArrangement {
    a.product(b)
}

impl fmt::Display for RationalSubspaceArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.members.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" ∪ "))
    }
}

impl fmt::Debug for RationalSubspaceArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arrangement(n={}, {})", self.ambient, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, rows: &[Vec<i64>]) -> SubspaceQ {
        SubspaceQ::from_i64_constraints(n, rows).unwrap()
    }

    #[test]
    fn reduction_keeps_maximal() {
        let a = RationalSubspaceArrangement::from_subspaces(
            2,
            [s(2, &[vec![1, 0]]), SubspaceQ::zero(2), s(2, &[vec![0, 1]]), s(2, &[vec![2, 0]])],
        )
        .unwrap();
        assert_eq!(a.members().len(), 2);
        assert_eq!(a.to_string(), "{z1 = 0} ∪ {z2 = 0}");
        assert!(a.contains_i64_vector(&[0, 5]).unwrap());
        assert!(!a.contains_i64_vector(&[1, 5]).unwrap());
    }

    #[test]
    fn products() {
        let origin = RationalSubspaceArrangement::origin(1);
        let hyper = RationalSubspaceArrangement::from_subspaces(1, [s(1, &[vec![1]])]).unwrap();
        assert!(origin.product(&hyper).is_origin());
        assert_eq!(origin.product(&RationalSubspaceArrangement::full(1)).to_string(), "{z1 = 0}");
        assert!(RationalSubspaceArrangement::empty(1).product(&hyper).is_empty());
        let two = RationalSubspaceArrangement::from_subspaces(2, [s(2, &[vec![1, 0]]), s(2, &[vec![0, 1]])]).unwrap();
        let p = two.product(&origin);
        assert_eq!(p.members().len(), 2);
        assert_eq!(p.ambient(), 3);
    }

    #[test]
    fn empty_differs_from_origin() {
        assert_ne!(RationalSubspaceArrangement::empty(2), RationalSubspaceArrangement::origin(2));
        assert_eq!(RationalSubspaceArrangement::empty(2).to_string(), "∅");
        assert_eq!(RationalSubspaceArrangement::origin(2).to_string(), "{0}");
    }
}
