use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use super::character::{Character, EpimorphismZr};
use crate::error::{Error, Result};
use crate::exactlin::{rowspace_meets_coordinate_subspace, Coefficients, Field, SubspaceQ};
use crate::simplicial::{reduced_homology_upto, Graph, SimplicialComplex, VertexSet};
use crate::tau::RationalSubspaceArrangement;
use crate::toric::{SupportTable, DEFAULT_MAX_SWEEP_VERTICES};

/// Whether `H_i(T_L^ν, k)` is finite-dimensional for all `i ≤ q`.
pub fn dwyer_fried_toric(l: &SimplicialComplex, nu: &EpimorphismZr, q: usize, field: Field) -> Result<bool> {
    dwyer_fried_toric_capped(l, nu, q, field, DEFAULT_MAX_SWEEP_VERTICES)
}

pub fn dwyer_fried_toric_capped(
    l: &SimplicialComplex,
    nu: &EpimorphismZr,
    q: usize,
    field: Field,
    cap: usize,
) -> Result<bool> {
    let m = nu.matrix();
    if m.cols() != l.names().len() {
        return Err(Error::DimensionMismatch {
            expected: l.names().len(),
            found: m.cols(),
        });
    }
    let table = SupportTable::compute(l, q, field, cap)?;
    for (w, betti) in &table.rows {
        if betti.iter().all(|&b| b == 0) {
            continue;
        }
        let support: Vec<usize> = w.iter().collect();
        if rowspace_meets_coordinate_subspace(m, &support)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finiteness data of the Bestvina–Brady group `N_Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestvinaBradyPredicates {
    /// `N_Γ` is finitely generated iff `Γ` is connected.
    pub fg: bool,
    /// `H_1(N_Γ, Q)` has trivial monodromy iff `Γ` is connected.
    pub h1_monodromy_trivial: bool,
    /// `H_{≤2}(N_Γ, Q)` has trivial monodromy iff `H̃_{≤1}(Δ_Γ, Q) = 0`.
    pub h12_monodromy_trivial: bool,
    /// `H̃_{≤1}(Δ_Γ, Z) = 0`; necessary, not sufficient, for finite presentability.
    pub fp_necessary: bool,
    pub h1_rank: usize,
    pub h1_torsion: Vec<BigInt>,
}

impl fmt::Display for BestvinaBradyPredicates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fg: {}", self.fg)?;
        writeln!(f, "h1_monodromy_trivial: {}", self.h1_monodromy_trivial)?;
        writeln!(f, "h12_monodromy_trivial: {}", self.h12_monodromy_trivial)?;
        writeln!(f, "fp_necessary: {} (necessary only)", self.fp_necessary)?;
        let tors: Vec<String> = self.h1_torsion.iter().map(ToString::to_string).collect();
        writeln!(f, "H1(flag complex, Z): rank {}, torsion [{}]", self.h1_rank, tors.join(", "))
    }
}

pub fn bestvina_brady_predicates(g: &Graph) -> BestvinaBradyPredicates {
    let connected = g.is_connected();
    let delta = g.flag_complex();
    let over_q = reduced_homology_upto(&delta, Coefficients::Field(Field::Rational), 1);
    let over_z = reduced_homology_upto(&delta, Coefficients::Integers, 1);
    let q_acyclic = (-1..=1).all(|j| over_q.is_trivial(j));
    let z_acyclic = (-1..=1).all(|j| over_z.is_trivial(j));
    BestvinaBradyPredicates {
        fg: connected,
        h1_monodromy_trivial: connected,
        h12_monodromy_trivial: connected && q_acyclic,
        fp_necessary: connected && z_acyclic,
        h1_rank: over_z.rank(1),
        h1_torsion: over_z.torsion(1).to_vec(),
    }
}

/// Inclusion-minimal vertex sets `S` with `Γ - S` disconnected; `{∅}` when
/// `Γ` itself is disconnected.
pub fn minimal_separators(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertex_set();
    if all.is_empty() {
        return Vec::new();
    }
    if !g.is_connected() {
        return vec![VertexSet::EMPTY];
    }
    let closed_nbhd = |v: usize| g.neighbors(v).with(v);
    let boundary = |c: VertexSet| -> VertexSet {
        c.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)))
            .difference(c)
    };
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue: Vec<VertexSet> = Vec::new();
    let push = |s: VertexSet, found: &mut BTreeSet<VertexSet>, queue: &mut Vec<VertexSet>| {
        if !s.is_empty() && found.insert(s) {
            queue.push(s);
        }
    };
    for v in all.iter() {
        for c in g.components_within(all.difference(closed_nbhd(v))) {
            push(boundary(c), &mut found, &mut queue);
        }
    }
    while let Some(s) = queue.pop() {
        for x in s.iter() {
            let removed = s.union(g.neighbors(x));
            for c in g.components_within(all.difference(removed)) {
                push(boundary(c), &mut found, &mut queue);
            }
        }
    }
    let seps: Vec<VertexSet> = found.into_iter().collect();
    let mut minimal: Vec<VertexSet> = seps
        .iter()
        .copied()
        .filter(|s| !seps.iter().any(|t| t != s && t.is_subset(*s)))
        .collect();
    minimal.sort_by_key(|s| s.iter().collect::<Vec<_>>());
    minimal
}

/// Maximal `W ⊆ V` with `Γ_W` disconnected.
pub fn maximal_disconnected_supports(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertex_set();
    let mut out: Vec<VertexSet> = minimal_separators(g)
        .into_iter()
        .map(|s| all.difference(s))
        .collect();
    out.sort_by_key(|s| s.iter().collect::<Vec<_>>());
    out
}

fn check_monodromy(g: &Graph, chi: &Character, assume: bool) -> Result<()> {
    if chi.names() != g.names() {
        return Err(Error::InvalidArgument(
            "character and graph use different vertex lists".into(),
        ));
    }
    if chi.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    if !chi.is_epimorphism() {
        return Err(Error::InvalidArgument(format!(
            "character {chi} is not an epimorphism onto Z"
        )));
    }
    if assume || (chi.is_diagonal_on(g.vertex_set()) && g.is_connected()) {
        Ok(())
    } else {
        Err(Error::MonodromyUnverified)
    }
}

/// Components `ι*((k^×)^W)` of `V¹₁(N_χ, k)`, one per maximal `W` with
/// `Γ_W` disconnected, with their dimensions.
pub fn artin_kernel_v11(g: &Graph, chi: &Character, assume_trivial_monodromy: bool) -> Result<Vec<(VertexSet, usize)>> {
    check_monodromy(g, chi, assume_trivial_monodromy)?;
    let support = chi.support();
    Ok(maximal_disconnected_supports(g)
        .into_iter()
        .map(|w| {
            let dim = if support.is_subset(w) { w.len() - 1 } else { w.len() };
            (w, dim)
        })
        .collect())
}

/// Upper bound for `Σ¹(N_χ)`: its complement contains every real point of the
/// arrangement, whose members are the preimages `Q^W + Qχ` in `Q^V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinKernelBound {
    pub arrangement: RationalSubspaceArrangement,
    pub empty_sigma: bool,
    pub cut_vertices: Vec<usize>,
    pub assumed: bool,
}

pub fn artin_kernel_sigma1_bound(g: &Graph, chi: &Character, assume_trivial_monodromy: bool) -> Result<ArtinKernelBound> {
    check_monodromy(g, chi, assume_trivial_monodromy)?;
    let n = g.names().len();
    let cut_vertices = g.cut_vertices();
    let empty_sigma = cut_vertices.iter().any(|&v| !num_traits::Zero::is_zero(chi.value(v)));
    let chi_line = chi.primitive_integer();
    let members = maximal_disconnected_supports(g)
        .into_iter()
        .map(|w| {
            let mut gens: Vec<Vec<BigInt>> = w
                .iter()
                .map(|v| {
                    let mut e = vec![BigInt::from(0); n];
                    e[v] = BigInt::from(1);
                    e
                })
                .collect();
            gens.push(chi_line.clone());
            SubspaceQ::span_integer(n, &gens)
        })
        .collect::<Result<Vec<_>>>()?;
    let arrangement = RationalSubspaceArrangement::from_subspaces(n, members)?;
    if empty_sigma && !arrangement.is_full() {
        return Err(Error::CrossCheck(
            "cut vertex with nonzero weight but the arrangement is not everything".into(),
        ));
    }
    Ok(ArtinKernelBound {
        arrangement,
        empty_sigma,
        cut_vertices,
        assumed: assume_trivial_monodromy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::flag_complex;

    fn path() -> Graph {
        Graph::from_named(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(names, &edges).unwrap()
    }

    #[test]
    fn dwyer_fried_examples() {
        let two = SimplicialComplex::from_named_facets(&["a", "b"], &[]).unwrap();
        assert!(!dwyer_fried_toric(&two, &EpimorphismZr::diagonal(2), 1, Field::Rational).unwrap());
        let p = flag_complex(&path());
        assert!(dwyer_fried_toric(&p, &EpimorphismZr::diagonal(3), 1, Field::Rational).unwrap());
        assert!(!dwyer_fried_toric(&p, &EpimorphismZr::identity(3), 1, Field::Rational).unwrap());
    }

    #[test]
    fn bestvina_brady_examples() {
        let p = bestvina_brady_predicates(&path());
        assert!(p.fg && p.h1_monodromy_trivial && p.h12_monodromy_trivial && p.fp_necessary);
        let two = Graph::from_named(&["a", "b"], &[]).unwrap();
        assert!(!bestvina_brady_predicates(&two).fg);
        let c4 = bestvina_brady_predicates(&cycle(4));
        assert!(c4.fg && !c4.h12_monodromy_trivial && !c4.fp_necessary);
        assert_eq!(c4.h1_rank, 1);
        let rp2 = bestvina_brady_predicates(&crate::catalog::rp2_flag().one_skeleton());
        assert!(rp2.fg && rp2.h12_monodromy_trivial && !rp2.fp_necessary);
        assert_eq!((rp2.h1_rank, rp2.h1_torsion.clone()), (0, vec![BigInt::from(2)]));
    }

    #[test]
    fn separators() {
        let seps = minimal_separators(&cycle(5));
        assert_eq!(seps.len(), 5);
        assert!(seps.iter().all(|s| s.len() == 2));
        let complete = Graph::new(
            (0..4).map(|i| format!("v{i}")).collect(),
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert!(minimal_separators(&complete).is_empty());
        let star = Graph::from_named(&["c", "x", "y", "z"], &[("c", "x"), ("c", "y"), ("c", "z")]).unwrap();
        assert_eq!(minimal_separators(&star), vec![VertexSet::singleton(0)]);
    }

    #[test]
    fn artin_kernel_examples() {
        let g = path();
        let diag = Character::from_i64(g.names(), &[1, 1, 1]).unwrap();
        let ac = g.vertex_set_of(&["a", "c"]).unwrap();
        assert_eq!(artin_kernel_v11(&g, &diag, false).unwrap(), vec![(ac, 2)]);
        let chi = Character::from_i64(g.names(), &[1, 0, 1]).unwrap();
        assert!(matches!(artin_kernel_v11(&g, &chi, false), Err(Error::MonodromyUnverified)));
        assert_eq!(artin_kernel_v11(&g, &chi, true).unwrap(), vec![(ac, 1)]);
        let bound = artin_kernel_sigma1_bound(&g, &diag, false).unwrap();
        assert!(bound.empty_sigma && bound.arrangement.is_full());

        let c4 = cycle(4);
        let diag = Character::from_i64(c4.names(), &[1, 1, 1, 1]).unwrap();
        let bound = artin_kernel_sigma1_bound(&c4, &diag, false).unwrap();
        assert!(!bound.empty_sigma);
        assert_eq!(bound.arrangement.members().len(), 2);
        assert!(bound.arrangement.members().iter().all(|m| m.dim() == 3));

        let k3 = Graph::new((0..3).map(|i| format!("v{i}")).collect(), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let diag = Character::from_i64(k3.names(), &[1, 1, 1]).unwrap();
        assert!(artin_kernel_v11(&k3, &diag, false).unwrap().is_empty());
    }
}
