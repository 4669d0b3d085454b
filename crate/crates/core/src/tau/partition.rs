//! Enumeration of zero-sum set partitions by restricted growth strings.

use std::collections::HashSet;
use std::hash::Hash;
use std::ops::{AddAssign, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// A set partition `S_1 ⊔ … ⊔ S_r` of `0..s`, each block sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePartition {
    pub blocks: Vec<Vec<usize>>,
}

impl AdmissiblePartition {
    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &AdmissiblePartition) -> bool {
        self.blocks
            .iter()
            .all(|b| other.blocks.iter().any(|c| b.iter().all(|x| c.contains(x))))
    }
}

trait Weight: Clone + Zero + Eq + Hash + Neg<Output = Self> + for<'a> AddAssign<&'a Self> {}
impl<T> Weight for T where T: Clone + Zero + Eq + Hash + Neg<Output = T> + for<'a> AddAssign<&'a T> {}

struct Search<'a, T: Weight> {
    weights: &'a [T],
    /// Subset sums of `weights[i..]`.
    reachable: Vec<HashSet<T>>,
    assignment: Vec<usize>,
    sums: Vec<T>,
    found: &'a mut dyn FnMut(&[usize]),
}

impl<T: Weight> Search<'_, T> {
    fn viable(&self, next: usize) -> bool {
        let remaining = self.weights.len() - next;
        let open: Vec<&T> = self.sums.iter().filter(|s| !s.is_zero()).collect();
        if open.len() > remaining {
            return false;
        }
        open.iter().all(|s| self.reachable[next].contains(&-(*s).clone()))
    }

    fn run(&mut self, i: usize) {
        if i == self.weights.len() {
            if self.sums.iter().all(Zero::is_zero) {
                (self.found)(&self.assignment);
            }
            return;
        }
        let blocks = self.sums.len();
        for b in 0..=blocks {
            if b == blocks {
                self.sums.push(T::zero());
            }
            self.sums[b] += &self.weights[i];
            self.assignment.push(b);
            if self.viable(i + 1) {
                self.run(i + 1);
            }
            self.assignment.pop();
            self.sums[b] += &-self.weights[i].clone();
            if b == blocks {
                self.sums.pop();
            }
        }
    }
}

fn subset_sums<T: Weight>(weights: &[T]) -> Vec<HashSet<T>> {
    let mut out = vec![HashSet::from([T::zero()])];
    for w in weights.iter().rev() {
        let prev = out.last().expect("seeded");
        let mut next = prev.clone();
        for s in prev {
            let mut t = s.clone();
            t += w;
            next.insert(t);
        }
        out.push(next);
    }
    out.reverse();
    out
}

fn enumerate<T: Weight>(weights: &[T], found: &mut dyn FnMut(&[usize])) {
    if weights.is_empty() {
        found(&[]);
        return;
    }
    let mut search = Search {
        weights,
        reachable: subset_sums(weights),
        assignment: Vec::with_capacity(weights.len()),
        sums: Vec::new(),
        found,
    };
    search.run(0);
}

/// Calls `found` with the block index of each element, for every partition of
/// `0..coeffs.len()` whose blocks all have coefficient sum zero.
pub(crate) fn for_each_zero_sum_partition(coeffs: &[BigRational], found: &mut dyn FnMut(&[usize])) {
    let lcm = coeffs
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let small: Option<Vec<i128>> = ints
        .iter()
        .map(|x| x.to_i64().map(i128::from))
        .collect();
    match small {
        Some(w) => enumerate(&w, found),
        None => enumerate(&ints, found),
    }
}

fn to_partition(assignment: &[usize]) -> AdmissiblePartition {
    let nblocks = assignment.iter().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); nblocks];
    for (i, &b) in assignment.iter().enumerate() {
        blocks[b].push(i);
    }
    AdmissiblePartition { blocks }
}

/// All partitions of the index set with every block summing to zero.
pub fn admissible_partitions(coeffs: &[BigRational]) -> Vec<AdmissiblePartition> {
    let mut out = Vec::new();
    for_each_zero_sum_partition(coeffs, &mut |a| out.push(to_partition(a)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    /// Brute force over all set partitions.
    fn all_partitions(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for a in out {
                let m = a.iter().max().map_or(0, |m| m + 1);
                for b in 0..=m {
                    let mut a2 = a.clone();
                    a2.push(b);
                    next.push(a2);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn matches_brute_force() {
        for coeffs in [vec![1, 1, -2], vec![1, -1, -1, 1], vec![2, -1, -1, 3, -3], vec![1, 2]] {
            let c = q(&coeffs);
            let mut fast = admissible_partitions(&c);
            fast.sort();
            let mut slow: Vec<AdmissiblePartition> = all_partitions(c.len())
                .into_iter()
                .filter(|a| {
                    let p = to_partition(a);
                    p.blocks.iter().all(|b| b.iter().map(|&i| coeffs[i]).sum::<i64>() == 0)
                })
                .map(|a| to_partition(&a))
                .collect();
            slow.sort();
            assert_eq!(fast, slow, "coeffs {coeffs:?}");
        }
    }

    #[test]
    fn four_terms_have_three_admissible() {
        // t1 t2 - t1 - t2 + 1
        let p = admissible_partitions(&q(&[1, -1, -1, 1]));
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn rational_weights() {
        let c = vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer((-1).into()),
        ];
        assert_eq!(admissible_partitions(&c).len(), 1);
    }
}
