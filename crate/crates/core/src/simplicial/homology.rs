use num_bigint::BigInt;

use super::complex::SimplicialComplex;
use super::vertexset::VertexSet;
use crate::exactlin::{small_rank, smith_normal_form, Coefficients, IntegerMatrix};

/// Reduced homology of a complex, degrees `-1 ..= top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub coefficients: Coefficients,
    /// `ranks[j + 1]` is the rank (or dimension) of `H̃_j`.
    pub ranks: Vec<usize>,
    /// Over `Z`: torsion coefficients of `H̃_j`, indexed like `ranks`.
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn top_degree(&self) -> isize {
        self.ranks.len() as isize - 2
    }

    pub fn rank(&self, j: isize) -> usize {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.ranks.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn torsion(&self, j: isize) -> &[BigInt] {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.torsion.get(k))
            .map_or(&[], Vec::as_slice)
    }

    /// `H̃_j = 0`.
    pub fn is_trivial(&self, j: isize) -> bool {
        self.rank(j) == 0 && self.torsion(j).is_empty()
    }

    /// Alternating sum of ranks from degree `-1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// Boundary `∂: C_{card-1} → C_{card-2}` (simplices with `card` vertices to
/// their facets), as a dense row-major `i64` matrix.
fn boundary(k: &SimplicialComplex, card: usize) -> (usize, usize, Vec<i64>) {
    let cols = k.simplices(card);
    let rows = if card == 0 { &[][..] } else { k.simplices(card - 1) };
    let mut data = vec![0i64; rows.len() * cols.len()];
    for (c, s) in cols.iter().enumerate() {
        for (pos, v) in s.iter().enumerate() {
            let face = s.without(v);
            let r = rows.binary_search(&face).expect("complex is closed");
            data[r * cols.len() + c] = if pos % 2 == 0 { 1 } else { -1 };
        }
    }
    (rows.len(), cols.len(), data)
}

/// Reduced homology in all degrees.
pub fn reduced_homology(k: &SimplicialComplex, coeff: Coefficients) -> HomologyProfile {
    reduced_homology_upto(k, coeff, k.card_bound() as isize - 2)
}

/// Reduced homology in degrees `-1 ..= top`.
pub fn reduced_homology_upto(k: &SimplicialComplex, coeff: Coefficients, top: isize) -> HomologyProfile {
    let len = usize::try_from(top + 2).unwrap_or(0);
    // rank of ∂ leaving simplices with `card` vertices, card = 0 ..= len
    let mut ranks_d = vec![0usize; len + 1];
    let mut torsion = vec![Vec::new(); len];
    for (card, slot) in ranks_d.iter_mut().enumerate().skip(1) {
        if k.simplices(card).is_empty() {
            continue;
        }
        let (r, c, data) = boundary(k, card);
        match coeff {
            Coefficients::Field(f) => *slot = small_rank(r, c, data, f),
            Coefficients::Integers => {
                let rows: Vec<Vec<i64>> = data.chunks(c).map(<[i64]>::to_vec).collect();
                let m = IntegerMatrix::from_i64_rows(c, &rows).expect("boundary shape");
                let snf = smith_normal_form(&m);
                *slot = snf.rank;
                if card - 1 < len {
                    torsion[card - 1] = snf.torsion();
                }
            }
        }
    }
    let ranks = (0..len)
        .map(|idx| k.simplices(idx).len() - ranks_d[idx] - ranks_d[idx + 1])
        .collect();
    HomologyProfile {
        coefficients: coeff,
        ranks,
        torsion,
    }
}

/// `H̃_j(K) = 0` for all `j ≤ top`.
pub(crate) fn acyclic_through(k: &SimplicialComplex, coeff: Coefficients, top: isize) -> bool {
    if top < -1 {
        return true;
    }
    let h = reduced_homology_upto(k, coeff, top);
    (-1..=top).all(|j| h.is_trivial(j))
}

/// Reduced Betti numbers of `lk_{L_W}(σ)` in degrees `-1 ..= top`.
pub(crate) fn link_profile(
    l: &SimplicialComplex,
    w: VertexSet,
    sigma: VertexSet,
    coeff: Coefficients,
    top: isize,
) -> HomologyProfile {
    reduced_homology_upto(&l.link_in_induced(w, sigma), coeff, top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    fn cycle(n: usize) -> SimplicialComplex {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let facets: Vec<VertexSet> = (0..n)
            .map(|i| VertexSet::singleton(i).with((i + 1) % n))
            .collect();
        SimplicialComplex::with_facets(names, &facets).unwrap()
    }

    #[test]
    fn six_cycle() {
        let h = reduced_homology(&cycle(6), Field::Rational.into());
        assert_eq!(h.ranks, vec![0, 0, 1]);
        let h = reduced_homology(&cycle(6), Coefficients::Integers);
        assert!(h.is_trivial(0) && !h.is_trivial(1));
    }

    #[test]
    fn bottom_conventions() {
        let e = SimplicialComplex::from_simplices(vec![], [VertexSet::EMPTY]).unwrap();
        let h = reduced_homology(&e, Coefficients::Integers);
        assert_eq!(h.rank(-1), 1);
        assert_eq!(h.rank(0), 0);
        let v = SimplicialComplex::void(vec![]).unwrap();
        let h = reduced_homology(&v, Field::Prime(2).into());
        assert!((-1..4).all(|j| h.rank(j) == 0));
        let pt = SimplicialComplex::from_named_facets(&["a"], &[]).unwrap();
        assert!(acyclic_through(&pt, Coefficients::Integers, 3));
    }

    #[test]
    fn euler_identity_on_cycle() {
        let c = cycle(5);
        let h = reduced_homology(&c, Field::Prime(3).into());
        let cells: i64 = (0..c.card_bound())
            .map(|k| if k % 2 == 1 { c.simplices(k).len() as i64 } else { -(c.simplices(k).len() as i64) })
            .sum();
        assert_eq!(h.euler_characteristic(), cells);
    }
}
