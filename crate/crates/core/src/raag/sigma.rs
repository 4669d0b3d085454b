use std::fmt;

use rayon::prelude::*;

use super::character::Character;
use crate::error::{Error, Result};
use crate::exactlin::Coefficients;
use crate::simplicial::{acyclic_through, Graph, SimplicialComplex, VertexSet};
use crate::toric::{arrangement_from_table, ArrangementKind, SupportTable, DEFAULT_MAX_SWEEP_VERTICES};

/// Whether characters with support `w` lie in `Σ^q(G_L, R)`: for every
/// simplex `σ ∈ L_{V∖W}` (including `∅`), `H̃_j(lk_{L_W}(σ), R) = 0` for
/// `-1 ≤ j ≤ q - dim σ - 2`.
pub fn support_is_good(l: &SimplicialComplex, w: VertexSet, q: usize, coeff: Coefficients) -> bool {
    for card in 0..=q {
        for &sigma in l.simplices(card) {
            if !sigma.is_disjoint(w) {
                continue;
            }
            let top = q as isize - card as isize - 1;
            if !acyclic_through(&l.link_in_induced(w, sigma), coeff, top) {
                return false;
            }
        }
    }
    true
}

fn check_character(g: &Graph, chi: &Character) -> Result<()> {
    if chi.names() != g.names() {
        return Err(Error::InvalidArgument(
            "character and graph use different vertex lists".into(),
        ));
    }
    if chi.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    if let Some(v) = chi.support().difference(g.vertex_set()).min() {
        return Err(Error::UnknownVertex(g.name(v).to_string()));
    }
    Ok(())
}

/// `χ ∈ Σ^q(G_Γ, R)`.
pub fn sigma_member(g: &Graph, chi: &Character, q: usize, coeff: Coefficients) -> Result<bool> {
    check_character(g, chi)?;
    Ok(support_is_good(&g.flag_complex(), chi.support(), q, coeff))
}

/// Verdicts for every nonempty support `W ⊆ V`, in subset order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportVerdictTable {
    pub names: Vec<String>,
    pub degree: usize,
    pub coefficients: Coefficients,
    pub rows: Vec<(VertexSet, bool)>,
}

impl SupportVerdictTable {
    pub fn verdict(&self, w: VertexSet) -> Option<bool> {
        self.rows.iter().find(|(x, _)| *x == w).map(|(_, b)| *b)
    }

    pub fn good_supports(&self) -> Vec<VertexSet> {
        self.rows.iter().filter(|(_, b)| *b).map(|(w, _)| *w).collect()
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for SupportVerdictTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, b) in &self.rows {
            writeln!(f, "W = {}: {}", self.format_set(*w), if *b { "good" } else { "bad" })?;
        }
        Ok(())
    }
}

/// `Σ^q(G_Γ, R)` as a table over supports. Over a field each verdict is
/// checked against the resonance arrangements `R^i_1(T_Δ, k)`, `i ≤ q`.
pub fn sigma_describe(g: &Graph, q: usize, coeff: Coefficients) -> Result<SupportVerdictTable> {
    sigma_describe_capped(g, q, coeff, DEFAULT_MAX_SWEEP_VERTICES)
}

pub fn sigma_describe_capped(g: &Graph, q: usize, coeff: Coefficients, cap: usize) -> Result<SupportVerdictTable> {
    let vertices = g.vertex_set();
    if vertices.len() > cap {
        return Err(Error::CapExceeded {
            what: "support sweep vertices",
            size: vertices.len(),
            cap,
        });
    }
    let l = g.flag_complex();
    let supports: Vec<VertexSet> = vertices.subsets().filter(|w| !w.is_empty()).collect();
    let rows: Vec<(VertexSet, bool)> = supports
        .into_par_iter()
        .map(|w| (w, support_is_good(&l, w, q, coeff)))
        .collect();
    let table = SupportVerdictTable {
        names: g.names().to_vec(),
        degree: q,
        coefficients: coeff,
        rows,
    };
    if let Coefficients::Field(field) = coeff {
        let betti = SupportTable::compute(&l, q, field, cap)?;
        let arrangements: Vec<_> = (0..=q)
            .map(|i| arrangement_from_table(&l, &betti, i, 1, field, ArrangementKind::Subspace))
            .collect();
        for &(w, good) in &table.rows {
            let resonant = arrangements.iter().any(|a| a.contains_support(w));
            if good == resonant {
                return Err(Error::CrossCheck(format!(
                    "support {} is {} by the link criterion but {} resonance",
                    table.format_set(w),
                    if good { "good" } else { "bad" },
                    if resonant { "inside" } else { "outside" },
                )));
            }
        }
    }
    Ok(table)
}
