use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use super::presentation::{AbelianizationData, GroupPresentation};
use super::word::fox_derivative;
use crate::error::{Error, Result};
use crate::exactlin::{rank_over, Field, FieldOps, Matrix};
use crate::laurent::LaurentPolynomial;
use crate::tau::{curve_in_variety, tau1_system_capped, RationalSubspaceArrangement, DEFAULT_MAX_SUPPORT};

/// Bound on the number of `(n-1)`-minors generated.
pub const DEFAULT_MAX_MINORS: usize = 200_000;

/// Abelianized Fox Jacobian, entries in `Z[G_abf]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderMatrix {
    nvars: usize,
    cols: usize,
    entries: Vec<Vec<LaurentPolynomial>>,
}

impl AlexanderMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Rank of `G_abf`, the number of Laurent variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPolynomial {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[LaurentPolynomial] {
        &self.entries[i]
    }

    pub fn evaluate<F: FieldOps>(&self, k: &F, point: &[F::Elem]) -> Result<Matrix<F::Elem>> {
        let mut m = Matrix::filled(self.rows(), self.cols, k.zero());
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                m[(i, j)] = e.evaluate(k, point)?;
            }
        }
        Ok(m)
    }

    /// All `size × size` minors, row subsets outermost.
    pub fn minors(&self, size: usize) -> Result<Vec<LaurentPolynomial>> {
        minors_capped(self, size, DEFAULT_MAX_MINORS)
    }

    /// Nonzero `(n-1)`-minors up to units, sorted.
    pub fn codim_one_minors(&self) -> Result<Vec<LaurentPolynomial>> {
        if self.cols == 0 {
            return Ok(Vec::new());
        }
        let set: BTreeSet<LaurentPolynomial> = self
            .minors(self.cols - 1)?
            .into_iter()
            .filter(|f| !f.is_zero())
            .map(|f| f.normalize_unit())
            .collect();
        Ok(set.into_iter().collect())
    }

    pub fn display_with(&self, var: &str) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let parts: Vec<String> = row.iter().map(|e| e.display_with(var)).collect();
            out.push_str(&format!("[{}]\n", parts.join(", ")));
        }
        out
    }
}

impl fmt::Display for AlexanderMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant of the submatrix on `rows × cols` by Laplace expansion over
/// column subsets.
fn determinant(a: &AlexanderMatrix, rows: &[usize], cols: &[usize]) -> LaurentPolynomial {
    let k = rows.len();
    let mut table = vec![LaurentPolynomial::zero(a.nvars); 1 << k];
    table[0] = LaurentPolynomial::one(a.nvars);
    for mask in 1usize..(1 << k) {
        let i = mask.count_ones() as usize - 1;
        let row = &a.entries[rows[i]];
        let mut acc = LaurentPolynomial::zero(a.nvars);
        for (pos, bit) in (0..k).filter(|b| mask >> b & 1 == 1).enumerate() {
            let rest = &table[mask & !(1 << bit)];
            let e = &row[cols[bit]];
            if rest.is_zero() || e.is_zero() {
                continue;
            }
            let term = e.mul(rest).expect("same ring");
            acc = if (i + pos).is_multiple_of(2) {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
            .expect("same ring");
        }
        table[mask] = acc;
    }
    table.pop().expect("nonempty table")
}

pub fn minors_capped(a: &AlexanderMatrix, size: usize, cap: usize) -> Result<Vec<LaurentPolynomial>> {
    if size == 0 {
        return Ok(vec![LaurentPolynomial::one(a.nvars)]);
    }
    let count = binomial(a.rows(), size).saturating_mul(binomial(a.cols, size));
    if count > cap {
        return Err(Error::CapExceeded {
            what: "Alexander matrix minors",
            size: count,
            cap,
        });
    }
    let col_sets = combinations(a.cols, size);
    let mut out = Vec::with_capacity(count);
    for rows in combinations(a.rows(), size) {
        for cols in &col_sets {
            out.push(determinant(a, &rows, cols));
        }
    }
    Ok(out)
}

/// `A_G`, the Fox Jacobian abelianized along `G → G_abf`.
pub fn alexander_matrix(p: &GroupPresentation) -> Result<AlexanderMatrix> {
    let ab = p.abelianization()?;
    Ok(alexander_matrix_with(p, &ab))
}

pub(crate) fn alexander_matrix_with(p: &GroupPresentation, ab: &AbelianizationData) -> AlexanderMatrix {
    let n = p.num_generators();
    let columns = ab.generator_images();
    let entries = p
        .relators()
        .iter()
        .map(|r| {
            (0..n)
                .map(|j| fox_derivative(r, j).abelianize(&columns, ab.free_rank))
                .collect()
        })
        .collect();
    AlexanderMatrix {
        nvars: ab.free_rank,
        cols: n,
        entries,
    }
}

/// `ρ ∈ W¹_d(G, k)` for a character `ρ` on `G_abf`. At `ρ = 1` this compares
/// `b_1(G, k)` with `d`.
pub fn charvar1_member<F: FieldOps>(p: &GroupPresentation, k: &F, rho: &[F::Elem], d: usize) -> Result<bool> {
    let ab = p.abelianization()?;
    if rho.len() != ab.free_rank {
        return Err(Error::DimensionMismatch {
            expected: ab.free_rank,
            found: rho.len(),
        });
    }
    if let Some(index) = rho.iter().position(|x| k.is_zero(x)) {
        return Err(Error::ZeroCoordinate { index });
    }
    if rho.iter().all(|x| k.is_one(x)) {
        let field = match k.characteristic() {
            0 => Field::Rational,
            q => Field::Prime(q),
        };
        return Ok(ab.betti1(field) >= d);
    }
    let a = alexander_matrix_with(p, &ab).evaluate(k, rho)?;
    let n = p.num_generators();
    let dim = (n - 1).saturating_sub(rank_over(k, &a));
    Ok(dim >= d)
}

/// `τ₁(V⁰₁ ∪ V¹₁)` in `Q^r`, `r = rank G_abf`: every rational character in it
/// lies outside `Σ¹`.
pub fn sigma1_upper_bound(p: &GroupPresentation) -> Result<RationalSubspaceArrangement> {
    sigma1_upper_bound_capped(p, DEFAULT_MAX_SUPPORT)
}

pub fn sigma1_upper_bound_capped(p: &GroupPresentation, cap: usize) -> Result<RationalSubspaceArrangement> {
    let ab = p.abelianization()?;
    let r = ab.free_rank;
    let (n, m) = (p.num_generators(), p.num_relators());
    if n == 0 {
        return Ok(RationalSubspaceArrangement::origin(r));
    }
    if n > m + 1 {
        return Ok(RationalSubspaceArrangement::full(r));
    }
    let minors = alexander_matrix_with(p, &ab).codim_one_minors()?;
    if minors.is_empty() {
        return Ok(RationalSubspaceArrangement::full(r));
    }
    let tau = tau1_system_capped(&minors, cap)?;
    tau.union(&RationalSubspaceArrangement::origin(r))
}

/// Whether the `Z`-cover of the presentation complex given by `z: G_abf → Z`
/// has finite-dimensional `H_{≤1}` over `C`.
pub fn cyclic_cover_finite(p: &GroupPresentation, z: &[i64]) -> Result<bool> {
    let ab = p.abelianization()?;
    if z.len() != ab.free_rank {
        return Err(Error::DimensionMismatch {
            expected: ab.free_rank,
            found: z.len(),
        });
    }
    if z.iter().all(Zero::is_zero) {
        return Err(Error::ZeroCharacter);
    }
    let a = alexander_matrix_with(p, &ab);
    let minors = if a.cols() == 0 {
        Vec::new()
    } else {
        a.minors(a.cols() - 1)?
    };
    Ok(!curve_in_variety(&minors, z)?)
}

/// `Σ_j (∂r/∂x_j)^{ab} (t_j - 1)` in `Z[Z^n]`; equals `t^{ab(r)} - 1`.
pub fn fox_identity_lhs(r: &super::word::Word, n: usize) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::zero(n);
    for j in 0..n {
        let shift = LaurentPolynomial::variable(n, j)
            .sub(&LaurentPolynomial::one(n))
            .expect("same ring");
        let term = fox_derivative(r, j).abelianize_free(n).mul(&shift).expect("same ring");
        acc = acc.add(&term).expect("same ring");
    }
    acc
}

/// `t^{e} - 1` for the exponent vector `e` of `r`.
pub fn fox_identity_rhs(r: &super::word::Word, n: usize) -> LaurentPolynomial {
    let e = r.exponent_vector(n);
    let mono = LaurentPolynomial::monomial(e, num_rational::BigRational::one());
    mono.sub(&LaurentPolynomial::one(n)).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};
    use crate::laurent::parse_polynomial;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn bs12() -> GroupPresentation {
        GroupPresentation::from_strs(2, &["x1^2 x2 x1^-2 x2^-1"]).unwrap()
    }

    #[test]
    fn alexander_examples() {
        let torus = GroupPresentation::from_strs(2, &["x1 x2 x1^-1 x2^-1"]).unwrap();
        let a = alexander_matrix(&torus).unwrap();
        assert_eq!(a.row(0)[0], parse_polynomial("1 - t2", 't', Some(2)).unwrap());
        assert_eq!(a.row(0)[1], parse_polynomial("t1 - 1", 't', Some(2)).unwrap());
        let inverse = GroupPresentation::from_strs(2, &["x2 x1 x2^-1 x1^-1"]).unwrap();
        let b = alexander_matrix(&inverse).unwrap();
        assert_eq!(b.row(0)[0], parse_polynomial("t2 - 1", 't', Some(2)).unwrap());
        assert_eq!(b.row(0)[1], parse_polynomial("1 - t1", 't', Some(2)).unwrap());
        let a = alexander_matrix(&bs12()).unwrap();
        assert_eq!(a.row(0)[0], parse_polynomial("(1 + t1)*(1 - t2)", 't', Some(2)).unwrap());
        assert_eq!(a.row(0)[1], parse_polynomial("t1^2 - 1", 't', Some(2)).unwrap());
        let free = GroupPresentation::from_strs(2, &[]).unwrap();
        let a = alexander_matrix(&free).unwrap();
        assert_eq!((a.rows(), a.cols()), (0, 2));
    }

    #[test]
    fn determinant_matches_hand_expansion() {
        let p = GroupPresentation::from_strs(3, &["x1 x2 x1^-1 x2^-1", "x2 x3 x2^-1 x3^-1", "x1 x3 x1^-1 x3^-1"]).unwrap();
        let a = alexander_matrix(&p).unwrap();
        for m in a.minors(3).unwrap() {
            assert!(m.is_zero());
        }
        let two = a.minors(2).unwrap();
        assert_eq!(two.len(), 9);
        assert!(two.iter().any(|m| !m.is_zero()));
    }

    #[test]
    fn charvar_examples() {
        let p = bs12();
        assert!(charvar1_member(&p, &Rationals, &[q(-1), q(5)], 1).unwrap());
        assert!(!charvar1_member(&p, &Rationals, &[q(2), q(2)], 1).unwrap());
        let free = GroupPresentation::from_strs(2, &[]).unwrap();
        assert!(charvar1_member(&free, &Rationals, &[q(1), q(1)], 2).unwrap());
        assert!(!charvar1_member(&free, &Rationals, &[q(1), q(1)], 3).unwrap());
        let f5 = PrimeField::new(5).unwrap();
        assert!(charvar1_member(&free, &f5, &[2, 3], 1).unwrap());
    }

    #[test]
    fn sigma1_examples() {
        assert!(sigma1_upper_bound(&bs12()).unwrap().is_origin());
        let f3 = GroupPresentation::from_strs(3, &[]).unwrap();
        assert!(sigma1_upper_bound(&f3).unwrap().is_full());
        let z = GroupPresentation::from_strs(1, &[]).unwrap();
        assert!(sigma1_upper_bound(&z).unwrap().is_origin());
        let torus = GroupPresentation::from_strs(2, &["x1 x2 x1^-1 x2^-1"]).unwrap();
        assert!(sigma1_upper_bound(&torus).unwrap().is_origin());
        let f2 = GroupPresentation::from_strs(2, &[]).unwrap();
        assert!(sigma1_upper_bound(&f2).unwrap().is_full());
    }

    #[test]
    fn cover_examples() {
        assert!(cyclic_cover_finite(&bs12(), &[1, 0]).unwrap());
        assert!(cyclic_cover_finite(&bs12(), &[0, 1]).unwrap());
        let free = GroupPresentation::from_strs(2, &[]).unwrap();
        assert!(!cyclic_cover_finite(&free, &[1, 1]).unwrap());
        assert!(matches!(cyclic_cover_finite(&free, &[0, 0]), Err(Error::ZeroCharacter)));
    }

    #[test]
    fn fox_identity_on_samples() {
        let p = GroupPresentation::from_strs(3, &["x1^2 x2^-1 x3 x1^-1 x3^2", "x2 x1 x2^-3"]).unwrap();
        for r in p.relators() {
            assert_eq!(fox_identity_lhs(r, 3), fox_identity_rhs(r, 3));
        }
    }
}
