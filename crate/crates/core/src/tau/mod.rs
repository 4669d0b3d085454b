//! Exponential tangent cones of Laurent hypersurfaces and systems.
//!
//! For `f = Σ c_u t^u` with support `S`, `τ₁(V(f))` is the union over all
//! partitions of `S` into zero-sum blocks of the subspaces
//! `{z : ⟨u − v, z⟩ = 0 for u, v in a common block}`.

mod arrangement;
mod partition;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use arrangement::{arrangement_product, RationalSubspaceArrangement};
pub use partition::{admissible_partitions, AdmissiblePartition};

use crate::error::{Error, Result};
use crate::exactlin::SubspaceQ;
use crate::laurent::LaurentPolynomial;

/// Default bound on the support size handed to the partition search.
pub const DEFAULT_MAX_SUPPORT: usize = 14;

/// Whether some proper nonempty subset of `block` has zero coefficient sum.
fn splits(block: &[usize], coeffs: &[BigRational]) -> bool {
    let k = block.len();
    (1..(1u32 << k) - 1).any(|mask| {
        block
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(BigRational::zero(), |acc, (_, &j)| acc + &coeffs[j])
            .is_zero()
    })
}

/// `τ₁(V(f))` with the default support cap.
pub fn tau1_hypersurface(f: &LaurentPolynomial) -> Result<RationalSubspaceArrangement> {
    tau1_hypersurface_capped(f, DEFAULT_MAX_SUPPORT)
}

pub fn tau1_hypersurface_capped(f: &LaurentPolynomial, cap: usize) -> Result<RationalSubspaceArrangement> {
    let n = f.nvars();
    if f.is_zero() {
        return Ok(RationalSubspaceArrangement::full(n));
    }
    if !f.value_at_one().is_zero() {
        return Ok(RationalSubspaceArrangement::empty(n));
    }
    if f.len() > cap {
        return Err(Error::CapExceeded {
            what: "polynomial support",
            size: f.len(),
            cap,
        });
    }
    let (support, coeffs): (Vec<&Vec<i64>>, Vec<BigRational>) =
        f.terms().map(|(e, c)| (e, c.clone())).unzip();
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    let mut rows_list = Vec::new();
    partition::for_each_zero_sum_partition(&coeffs, &mut |assignment| {
        let nblocks = assignment.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &b) in assignment.iter().enumerate() {
            blocks[b].push(i);
        }
        // coarser partitions give smaller subspaces
        if blocks.iter().any(|b| splits(b, &coeffs)) {
            return;
        }
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for b in &blocks {
            let base = support[b[0]];
            for &j in &b[1..] {
                rows.push(support[j].iter().zip(base).map(|(x, y)| x - y).collect());
            }
        }
        rows.sort();
        if seen.insert(rows.clone()) {
            rows_list.push(rows);
        }
    });
    let subspaces = rows_list
        .into_iter()
        .map(|rows| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            SubspaceQ::from_constraints(n, rows)
        })
        .collect::<Result<Vec<_>>>()?;
    RationalSubspaceArrangement::from_subspaces(n, subspaces)
}

/// `τ₁` of the common zero set, as the intersection of the hypersurface cones.
pub fn tau1_system(fs: &[LaurentPolynomial]) -> Result<RationalSubspaceArrangement> {
    tau1_system_capped(fs, DEFAULT_MAX_SUPPORT)
}

pub fn tau1_system_capped(fs: &[LaurentPolynomial], cap: usize) -> Result<RationalSubspaceArrangement> {
    let first = fs
        .first()
        .ok_or_else(|| Error::InvalidArgument("tau1 of an empty system".into()))?;
    let n = first.nvars();
    if let Some(bad) = fs.iter().find(|f| f.nvars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.nvars(),
        });
    }
    if fs.iter().any(|f| !f.value_at_one().is_zero()) {
        return Ok(RationalSubspaceArrangement::empty(n));
    }
    let mut acc = RationalSubspaceArrangement::full(n);
    for f in fs {
        acc = acc.intersect(&tau1_hypersurface_capped(f, cap)?)?;
        if acc.is_origin() {
            break;
        }
    }
    Ok(acc)
}

/// Whether `exp(tz)` lies in the common zero set for all `t`, decided by
/// restricting each `f` to `u ↦ (u^{z_1}, …, u^{z_n})`.
pub fn curve_in_variety(fs: &[LaurentPolynomial], z: &[i64]) -> Result<bool> {
    for f in fs {
        if !f.restrict_to_curve(z)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Defining form of the tangent cone `TC₁(V(f))`, in variables `z1..zn`.
pub fn tc1_hypersurface(f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    f.shifted_initial_form()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_polynomial;

    fn p(s: &str) -> LaurentPolynomial {
        parse_polynomial(s, 't', Some(2)).unwrap()
    }

    #[test]
    fn hypersurface_examples() {
        assert!(tau1_hypersurface(&p("t1 + t2 - 2")).unwrap().is_origin());
        assert_eq!(tau1_hypersurface(&p("t1 - 1")).unwrap().to_string(), "{z1 = 0}");
        assert_eq!(
            tau1_hypersurface(&p("t1*t2 - t1 - t2 + 1")).unwrap().to_string(),
            "{z1 = 0} ∪ {z2 = 0}"
        );
        assert!(tau1_hypersurface(&p("t1 + 1")).unwrap().is_empty());
    }

    #[test]
    fn system_examples() {
        let a = tau1_system(&[p("t1 - 1"), p("t2 - 1")]).unwrap();
        assert!(a.is_origin());
        let f = p("t1*t2 - t1 - t2 + 1");
        assert_eq!(tau1_system(&[f.clone(), f.clone()]).unwrap(), tau1_hypersurface(&f).unwrap());
        assert!(tau1_system(&[p("t1 + t2 - 2"), p("t1 - 1")]).unwrap().is_origin());
        assert!(tau1_system(&[]).is_err());
    }

    #[test]
    fn curve_examples() {
        assert!(!curve_in_variety(&[p("t1 + t2 - 2")], &[1, 1]).unwrap());
        assert!(curve_in_variety(&[p("t1*t2 - t1 - t2 + 1")], &[1, 0]).unwrap());
        assert!(curve_in_variety(&[p("t1 + t2 - 2"), p("t1 - 1")], &[0, 0]).unwrap());
    }

    #[test]
    fn tangent_cones() {
        assert_eq!(tc1_hypersurface(&p("t1 + t2 - 2")).unwrap().display_with("z"), "z1 + z2");
        assert_eq!(tc1_hypersurface(&p("(t1 - 1)^2")).unwrap().display_with("z"), "z1^2");
        assert_eq!(tc1_hypersurface(&p("t1*t2 - t1 - t2 + 1")).unwrap().display_with("z"), "z1*z2");
    }

    #[test]
    fn support_cap_enforced() {
        let f = p("t1 + t1^2 + t1^3 - 3");
        assert!(matches!(
            tau1_hypersurface_capped(&f, 3),
            Err(Error::CapExceeded { size: 4, cap: 3, .. })
        ));
    }
}
