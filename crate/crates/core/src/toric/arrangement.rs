use std::fmt;

use rayon::prelude::*;

use super::betti::aomoto_betti_numbers;
use crate::error::{Error, Result};
use crate::exactlin::{Field, FieldOps};
use crate::simplicial::{SimplicialComplex, VertexSet};

/// Default bound on `|V|` for sweeps over all supports `W ⊆ V`.
pub const DEFAULT_MAX_SWEEP_VERTICES: usize = 16;

/// Whether an arrangement stands for `⋃ k^W` or `⋃ (k^×)^W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrangementKind {
    Subspace,
    Subtorus,
}

impl fmt::Display for ArrangementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArrangementKind::Subspace => "subspace",
            ArrangementKind::Subtorus => "subtorus",
        })
    }
}

/// A union of coordinate subspaces `k^W` or coordinate subtori `(k^×)^W`,
/// stored as the maximal sets `W`. `W = ∅` is the point `0` or `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateArrangement {
    pub names: Vec<String>,
    pub sets: Vec<VertexSet>,
    pub kind: ArrangementKind,
    pub degree: usize,
    pub depth: usize,
    pub field: Field,
}

impl CoordinateArrangement {
    /// Whether every class or character supported on `s` lies in the union.
    pub fn contains_support(&self, s: VertexSet) -> bool {
        self.sets.iter().any(|w| s.is_subset(*w))
    }

    /// Membership of a point: its support is `{v : z_v ≠ 0}` for subspaces and
    /// `{v : ρ_v ≠ 1}` for subtori.
    pub fn contains_point<F: FieldOps>(&self, k: &F, point: &[F::Elem]) -> Result<bool> {
        if point.len() != self.names.len() {
            return Err(Error::DimensionMismatch {
                expected: self.names.len(),
                found: point.len(),
            });
        }
        let support: VertexSet = point
            .iter()
            .enumerate()
            .filter(|(_, x)| match self.kind {
                ArrangementKind::Subspace => !k.is_zero(x),
                ArrangementKind::Subtorus => !k.is_one(x),
            })
            .map(|(v, _)| v)
            .collect();
        Ok(self.contains_support(support))
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for CoordinateArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.sets {
            writeln!(f, "W = {}", self.format_set(*w))?;
        }
        Ok(())
    }
}

/// Betti numbers `β_0..β_max(z_W)` for every `W ⊆ V`, in subset order.
pub struct SupportTable {
    pub vertices: VertexSet,
    pub rows: Vec<(VertexSet, Vec<usize>)>,
}

impl SupportTable {
    pub fn compute(l: &SimplicialComplex, max_degree: usize, field: Field, cap: usize) -> Result<Self> {
        let vertices = l.vertex_set();
        if vertices.len() > cap {
            return Err(Error::CapExceeded {
                what: "support sweep vertices",
                size: vertices.len(),
                cap,
            });
        }
        let subsets: Vec<VertexSet> = vertices.subsets().collect();
        let rows = subsets
            .into_par_iter()
            .map(|w| aomoto_betti_numbers(l, w, max_degree, field).map(|b| (w, b)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SupportTable { vertices, rows })
    }

    pub fn betti(&self, w: VertexSet) -> Option<&[usize]> {
        self.rows
            .iter()
            .find(|(x, _)| *x == w)
            .map(|(_, b)| b.as_slice())
    }
}

/// Maximal members of a family of sets, sorted by their element lists.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| s.is_subset(*m)) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.iter().collect::<Vec<_>>());
    out
}

fn sweep(
    l: &SimplicialComplex,
    i: usize,
    d: usize,
    field: Field,
    cap: usize,
    kind: ArrangementKind,
) -> Result<CoordinateArrangement> {
    if d == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let table = SupportTable::compute(l, i, field, cap)?;
    Ok(arrangement_from_table(l, &table, i, d, field, kind))
}

pub(crate) fn arrangement_from_table(
    l: &SimplicialComplex,
    table: &SupportTable,
    i: usize,
    d: usize,
    field: Field,
    kind: ArrangementKind,
) -> CoordinateArrangement {
    let qualifying = table
        .rows
        .iter()
        .filter(|(_, b)| b[i] >= d)
        .map(|(w, _)| *w)
        .collect();
    CoordinateArrangement {
        names: l.names().to_vec(),
        sets: maximal_sets(qualifying),
        kind,
        degree: i,
        depth: d,
        field,
    }
}

/// `R^i_d(T_L, k) = ⋃ k^W` over `W` with `β_i(z_W) ≥ d`.
pub fn resonance_arrangement(l: &SimplicialComplex, i: usize, d: usize, field: Field) -> Result<CoordinateArrangement> {
    resonance_arrangement_capped(l, i, d, field, DEFAULT_MAX_SWEEP_VERTICES)
}

pub fn resonance_arrangement_capped(
    l: &SimplicialComplex,
    i: usize,
    d: usize,
    field: Field,
    cap: usize,
) -> Result<CoordinateArrangement> {
    sweep(l, i, d, field, cap, ArrangementKind::Subspace)
}

/// `V^i_d(T_L, k) = ⋃ (k^×)^W` over the same sets `W`.
pub fn charvar_arrangement(l: &SimplicialComplex, i: usize, d: usize, field: Field) -> Result<CoordinateArrangement> {
    charvar_arrangement_capped(l, i, d, field, DEFAULT_MAX_SWEEP_VERTICES)
}

pub fn charvar_arrangement_capped(
    l: &SimplicialComplex,
    i: usize,
    d: usize,
    field: Field,
    cap: usize,
) -> Result<CoordinateArrangement> {
    sweep(l, i, d, field, cap, ArrangementKind::Subtorus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    fn sc(v: &[&str], f: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_named_facets(v, f).unwrap()
    }

    #[test]
    fn resonance_examples() {
        let path = sc(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
        let r = resonance_arrangement(&path, 1, 1, Field::Rational).unwrap();
        assert_eq!(r.to_string(), "W = {a,c}\n");
        let edge = sc(&["a", "b"], &[&["a", "b"]]);
        let r = resonance_arrangement(&edge, 1, 1, Field::Rational).unwrap();
        assert_eq!(r.sets, vec![VertexSet::EMPTY]);
        let two = sc(&["a", "b"], &[]);
        let r = resonance_arrangement(&two, 1, 1, Field::Rational).unwrap();
        assert_eq!(r.to_string(), "W = {a,b}\n");
    }

    #[test]
    fn charvar_examples() {
        let two = sc(&["a", "b"], &[]);
        let v = charvar_arrangement(&two, 1, 1, Field::Prime(5)).unwrap();
        let f5 = PrimeField::new(5).unwrap();
        assert!(v.contains_point(&f5, &[2, 3]).unwrap());
        let edge = sc(&["a", "b"], &[&["a", "b"]]);
        let v = charvar_arrangement(&edge, 1, 1, Field::Prime(5)).unwrap();
        assert!(v.contains_point(&f5, &[1, 1]).unwrap());
        assert!(!v.contains_point(&f5, &[1, 2]).unwrap());
        let v0 = charvar_arrangement(&edge, 0, 1, Field::Rational).unwrap();
        assert_eq!(v0.sets, vec![VertexSet::EMPTY]);
        assert!(charvar_arrangement(&edge, 1, 0, Field::Rational).is_err());
    }

    #[test]
    fn sweep_cap() {
        let two = sc(&["a", "b"], &[]);
        assert!(matches!(
            resonance_arrangement_capped(&two, 1, 1, Field::Rational, 1),
            Err(Error::CapExceeded { size: 2, cap: 1, .. })
        ));
    }
}
