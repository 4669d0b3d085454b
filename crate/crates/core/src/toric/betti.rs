use crate::error::{Error, Result};
use crate::exactlin::{rank_over, Coefficients, Field, FieldOps, Matrix};
use crate::simplicial::{link_profile, SimplicialComplex, VertexSet};

fn check_support(l: &SimplicialComplex, w: VertexSet) -> Result<()> {
    match w.difference(l.vertex_set()).min() {
        Some(v) => Err(Error::UnknownVertex(
            l.names().get(v).cloned().unwrap_or_else(|| v.to_string()),
        )),
        None => Ok(()),
    }
}

/// `β_i(z_W)` for `i = 0 ..= max_degree`, by summing reduced Betti numbers of
/// links `lk_{L_W}(σ)` over `σ ∈ L_{V∖W}`.
pub fn aomoto_betti_numbers(
    l: &SimplicialComplex,
    w: VertexSet,
    max_degree: usize,
    field: Field,
) -> Result<Vec<usize>> {
    check_support(l, w)?;
    let mut betti = vec![0usize; max_degree + 1];
    if l.is_void() {
        return Ok(betti);
    }
    for card in 0..=max_degree {
        for &sigma in l.simplices(card) {
            if !sigma.is_disjoint(w) {
                continue;
            }
            // contributes H̃_{i-1-card} to β_i for i = card ..= max_degree
            let top = max_degree as isize - 1 - card as isize;
            let h = link_profile(l, w, sigma, Coefficients::Field(field), top);
            for (i, b) in betti.iter_mut().enumerate().skip(card) {
                *b += h.rank(i as isize - 1 - card as isize);
            }
        }
    }
    Ok(betti)
}

/// `β_i(z_W) = Σ_{σ ∈ L_{V∖W}} dim H̃_{i-1-|σ|}(lk_{L_W}(σ), k)`.
pub fn aomoto_betti(l: &SimplicialComplex, w: VertexSet, i: usize, field: Field) -> Result<usize> {
    Ok(aomoto_betti_numbers(l, w, i, field)?[i])
}

fn check_len(l: &SimplicialComplex, len: usize) -> Result<()> {
    if len != l.names().len() {
        return Err(Error::DimensionMismatch {
            expected: l.names().len(),
            found: len,
        });
    }
    Ok(())
}

/// Matrix of right multiplication by `z` from degree `card` to `card + 1`
/// of the exterior face ring.
fn aomoto_differential<F: FieldOps>(k: &F, l: &SimplicialComplex, z: &[F::Elem], card: usize) -> Matrix<F::Elem> {
    let src = l.simplices(card);
    let dst = l.simplices(card + 1);
    let mut m = Matrix::filled(dst.len(), src.len(), k.zero());
    for (c, &s) in src.iter().enumerate() {
        for (r, &t) in dst.iter().enumerate() {
            if !s.is_subset(t) {
                continue;
            }
            let v = t.difference(s).min().expect("one extra vertex");
            if k.is_zero(&z[v]) {
                continue;
            }
            // e_σ ∧ e_v = (-1)^{#{u ∈ σ : u > v}} e_{σ ∪ v}
            let after = s.len() - s.rank_of(v);
            m[(r, c)] = if after % 2 == 0 { z[v].clone() } else { k.neg(&z[v]) };
        }
    }
    m
}

/// Cohomology dimensions of the Aomoto complex `(k⟨L⟩, ·z)` in degrees
/// `0 ..= max_degree`.
pub fn aomoto_oracle_numbers<F: FieldOps>(
    k: &F,
    l: &SimplicialComplex,
    z: &[F::Elem],
    max_degree: usize,
) -> Result<Vec<usize>> {
    check_len(l, z.len())?;
    let ranks: Vec<usize> = (0..=max_degree)
        .map(|card| rank_over(k, &aomoto_differential(k, l, z, card)))
        .collect();
    Ok((0..=max_degree)
        .map(|i| {
            let below = if i == 0 { 0 } else { ranks[i - 1] };
            l.simplices(i).len() - ranks[i] - below
        })
        .collect())
}

/// `dim H^i(k⟨L⟩, ·z)`.
pub fn aomoto_oracle<F: FieldOps>(k: &F, l: &SimplicialComplex, z: &[F::Elem], i: usize) -> Result<usize> {
    Ok(aomoto_oracle_numbers(k, l, z, i)?[i])
}

/// Boundary `C_card → C_{card-1}` of the twisted chain complex of `T_L`.
fn twisted_boundary<F: FieldOps>(k: &F, l: &SimplicialComplex, shifted: &[F::Elem], card: usize) -> Matrix<F::Elem> {
    let src = l.simplices(card);
    let dst = if card == 0 { &[][..] } else { l.simplices(card - 1) };
    let mut m = Matrix::filled(dst.len(), src.len(), k.zero());
    for (c, &s) in src.iter().enumerate() {
        for (pos, v) in s.iter().enumerate() {
            let r = dst.binary_search(&s.without(v)).expect("closed complex");
            m[(r, c)] = if pos % 2 == 0 {
                shifted[v].clone()
            } else {
                k.neg(&shifted[v])
            };
        }
    }
    m
}

/// `dim H_i(T_L, k_ρ)` for `i = 0 ..= max_degree`.
pub fn twisted_betti_numbers<F: FieldOps>(
    k: &F,
    l: &SimplicialComplex,
    rho: &[F::Elem],
    max_degree: usize,
) -> Result<Vec<usize>> {
    check_len(l, rho.len())?;
    if let Some(index) = rho.iter().position(|x| k.is_zero(x)) {
        return Err(Error::ZeroCoordinate { index });
    }
    let shifted: Vec<F::Elem> = rho.iter().map(|x| k.sub(x, &k.one())).collect();
    let ranks: Vec<usize> = (0..=max_degree + 1)
        .map(|card| rank_over(k, &twisted_boundary(k, l, &shifted, card)))
        .collect();
    Ok((0..=max_degree)
        .map(|i| l.simplices(i).len() - ranks[i] - ranks[i + 1])
        .collect())
}

/// `dim H_i(T_L, k_ρ)` from the equivariant chain complex of the toric complex.
pub fn twisted_betti_oracle<F: FieldOps>(k: &F, l: &SimplicialComplex, rho: &[F::Elem], i: usize) -> Result<usize> {
    Ok(twisted_betti_numbers(k, l, rho, i)?[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn two_points() -> SimplicialComplex {
        SimplicialComplex::from_named_facets(&["a", "b"], &[]).unwrap()
    }

    fn edge() -> SimplicialComplex {
        SimplicialComplex::from_named_facets(&["a", "b"], &[&["a", "b"]]).unwrap()
    }

    fn path() -> SimplicialComplex {
        SimplicialComplex::from_named_facets(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn formula_examples() {
        let all = VertexSet::first(2);
        assert_eq!(aomoto_betti(&two_points(), all, 1, Field::Rational).unwrap(), 1);
        assert_eq!(aomoto_betti(&edge(), all, 1, Field::Rational).unwrap(), 0);
        let p = path();
        for i in 0..4 {
            let b = aomoto_betti(&p, VertexSet::EMPTY, i, Field::Rational).unwrap();
            let cells = if i == 0 { 1 } else { p.simplices(i).len() };
            assert_eq!(b, cells);
        }
        assert_eq!(aomoto_betti(&p, p.vertex_set_of(&["a", "c"]).unwrap(), 1, Field::Rational).unwrap(), 1);
        assert!(aomoto_betti(&p, VertexSet::singleton(5), 1, Field::Rational).is_err());
    }

    #[test]
    fn aomoto_examples() {
        let l = two_points();
        assert_eq!(aomoto_oracle(&Rationals, &l, &[q(1), q(1)], 1).unwrap(), 1);
        assert_eq!(aomoto_oracle(&Rationals, &l, &[q(0), q(0)], 1).unwrap(), 2);
        assert_eq!(aomoto_oracle(&Rationals, &edge(), &[q(3), q(0)], 1).unwrap(), 0);
    }

    #[test]
    fn twisted_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(twisted_betti_oracle(&f5, &two_points(), &[2, 3], 1).unwrap(), 1);
        assert_eq!(twisted_betti_oracle(&f5, &two_points(), &[1, 1], 1).unwrap(), 2);
        assert_eq!(twisted_betti_oracle(&f5, &edge(), &[2, 1], 1).unwrap(), 0);
        assert_eq!(twisted_betti_oracle(&f5, &edge(), &[1, 1], 2).unwrap(), 1);
        assert!(twisted_betti_oracle(&f5, &edge(), &[0, 1], 1).is_err());
    }
}
