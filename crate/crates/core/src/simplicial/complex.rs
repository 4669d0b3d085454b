use std::collections::BTreeSet;
use std::sync::Arc;

use super::graph::Graph;
use super::vertexset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A finite abstract simplicial complex over a named vertex universe.
///
/// Simplices are stored grouped by cardinality. A complex is *void* when it
/// has no simplices at all; every other complex contains the empty simplex.
/// The complex `{∅}` has no vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    names: Arc<Vec<String>>,
    by_card: Vec<Vec<VertexSet>>,
}

pub(crate) fn check_names(names: &[String]) -> Result<()> {
    if names.len() > MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "vertex universe",
            size: names.len(),
            cap: MAX_VERTICES,
        });
    }
    let mut seen = BTreeSet::new();
    for n in names {
        if n.is_empty() || n.chars().any(char::is_whitespace) {
            return Err(Error::InvalidArgument(format!("bad vertex name `{n}`")));
        }
        if !seen.insert(n.as_str()) {
            return Err(Error::InvalidArgument(format!("duplicate vertex `{n}`")));
        }
    }
    Ok(())
}

impl SimplicialComplex {
    /// The void complex (no simplices, not even `∅`).
    pub fn void(names: Vec<String>) -> Result<Self> {
        check_names(&names)?;
        Ok(SimplicialComplex {
            names: Arc::new(names),
            by_card: Vec::new(),
        })
    }

    /// Downward closure of the given simplices. Non-void whenever `simplices`
    /// is nonempty.
    pub fn from_simplices<I>(names: Vec<String>, simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        check_names(&names)?;
        let universe = VertexSet::first(names.len());
        let mut all = BTreeSet::new();
        for s in simplices {
            if !s.is_subset(universe) {
                return Err(Error::UnknownVertex(format!("{s:?}")));
            }
            if all.contains(&s) {
                continue;
            }
            for t in s.subsets() {
                all.insert(t);
            }
        }
        Ok(Self::from_closed_set(Arc::new(names), all))
    }

    /// Complex whose vertices are all the names, with the given facets.
    pub fn with_facets(names: Vec<String>, facets: &[VertexSet]) -> Result<Self> {
        let n = names.len();
        let singletons = (0..n).map(VertexSet::singleton);
        let mut gens: Vec<VertexSet> = facets.to_vec();
        gens.extend(singletons);
        gens.push(VertexSet::EMPTY);
        Self::from_simplices(names, gens)
    }

    /// Convenience constructor from vertex names and facets given by name.
    pub fn from_named_facets(vertices: &[&str], facets: &[&[&str]]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = VertexSet::EMPTY;
            for v in *f {
                let i = names
                    .iter()
                    .position(|n| n == v)
                    .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
                s.insert(i);
            }
            sets.push(s);
        }
        Self::with_facets(names, &sets)
    }

    pub(crate) fn from_closed_set(names: Arc<Vec<String>>, all: BTreeSet<VertexSet>) -> Self {
        let mut by_card: Vec<Vec<VertexSet>> = Vec::new();
        for s in all {
            let k = s.len();
            if by_card.len() <= k {
                by_card.resize_with(k + 1, Vec::new);
            }
            by_card[k].push(s);
        }
        for layer in &mut by_card {
            layer.sort();
        }
        SimplicialComplex { names, by_card }
    }

    pub(crate) fn with_same_names(&self, all: BTreeSet<VertexSet>) -> Self {
        Self::from_closed_set(Arc::clone(&self.names), all)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn shared_names(&self) -> Arc<Vec<String>> {
        Arc::clone(&self.names)
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Resolves vertex names to a set; errors on unknown names.
    pub fn vertex_set_of(&self, names: &[&str]) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for n in names {
            s.insert(
                self.vertex_index(n)
                    .ok_or_else(|| Error::UnknownVertex(n.to_string()))?,
            );
        }
        Ok(s)
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// The vertex set (union of the 0-simplices).
    pub fn vertex_set(&self) -> VertexSet {
        self.simplices(1).iter().fold(VertexSet::EMPTY, |a, s| a.union(*s))
    }

    pub fn num_vertices(&self) -> usize {
        self.simplices(1).len()
    }

    pub fn is_void(&self) -> bool {
        self.by_card.is_empty()
    }

    /// The complex `{∅}`.
    pub fn is_irrelevant(&self) -> bool {
        self.by_card.len() == 1
    }

    /// Simplices with exactly `card` vertices.
    pub fn simplices(&self, card: usize) -> &[VertexSet] {
        self.by_card.get(card).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.by_card.iter().flatten().copied()
    }

    pub fn num_simplices(&self) -> usize {
        self.by_card.iter().map(Vec::len).sum()
    }

    /// Largest simplex cardinality plus one; zero for the void complex.
    pub fn card_bound(&self) -> usize {
        self.by_card.len()
    }

    /// Dimension (`-1` for `{∅}`); `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        (!self.by_card.is_empty()).then(|| self.by_card.len() as isize - 2)
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.simplices(s.len()).binary_search(&s).is_ok()
    }

    /// Maximal simplices.
    pub fn facets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for k in (0..self.by_card.len()).rev() {
            for &s in &self.by_card[k] {
                if !out.iter().any(|f: &VertexSet| s.is_subset(*f)) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// `L_W = {τ ∈ L | τ ⊆ W}`.
    pub fn induced(&self, w: VertexSet) -> Result<Self> {
        let extra = w.difference(self.vertex_set());
        if let Some(v) = extra.min() {
            let name = self.names.get(v).cloned().unwrap_or_else(|| v.to_string());
            return Err(Error::UnknownVertex(name));
        }
        Ok(self.induced_unchecked(w))
    }

    pub(crate) fn induced_unchecked(&self, w: VertexSet) -> Self {
        let by_card: Vec<Vec<VertexSet>> = if self.is_void() {
            Vec::new()
        } else {
            let mut layers: Vec<Vec<VertexSet>> = self
                .by_card
                .iter()
                .map(|layer| layer.iter().copied().filter(|s| s.is_subset(w)).collect())
                .collect();
            while layers.len() > 1 && layers.last().is_some_and(Vec::is_empty) {
                layers.pop();
            }
            layers
        };
        SimplicialComplex {
            names: Arc::clone(&self.names),
            by_card,
        }
    }

    /// `lk_K(σ) = {τ ∈ K | τ ∪ σ ∈ L}` with `L = self`; `K` must be a
    /// subcomplex of `self` and `σ ∈ self`.
    pub fn link(&self, k: &SimplicialComplex, sigma: VertexSet) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::SimplexNotInComplex(self.format_set(sigma)));
        }
        if k.names != self.names && k.names.as_slice() != self.names.as_slice() {
            return Err(Error::InvalidArgument(
                "link: subcomplex uses a different vertex universe".into(),
            ));
        }
        if let Some(t) = k.iter().find(|t| !self.contains(*t)) {
            return Err(Error::SimplexNotInComplex(k.format_set(t)));
        }
        let all: BTreeSet<VertexSet> = k
            .iter()
            .filter(|t| self.contains(t.union(sigma)))
            .collect();
        Ok(self.with_same_names(all))
    }

    /// `lk_{L_W}(σ)` computed without materializing `L_W`.
    pub(crate) fn link_in_induced(&self, w: VertexSet, sigma: VertexSet) -> Self {
        let mut by_card: Vec<Vec<VertexSet>> = Vec::new();
        for layer in &self.by_card {
            let kept: Vec<VertexSet> = layer
                .iter()
                .copied()
                .filter(|t| t.is_subset(w) && self.contains(t.union(sigma)))
                .collect();
            if kept.is_empty() {
                break;
            }
            by_card.push(kept);
        }
        SimplicialComplex {
            names: Arc::clone(&self.names),
            by_card,
        }
    }

    pub fn one_skeleton(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .simplices(2)
            .iter()
            .map(|e| {
                let mut it = e.iter();
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect();
        Graph::from_shared(self.shared_names(), self.vertex_set(), &edges)
            .expect("edges of a complex are simple")
    }

    /// Barycentric subdivision: vertices are the nonempty simplices (named
    /// `{a,b}`, ordered by size then position), simplices are chains.
    pub fn barycentric_subdivision(&self) -> Result<Self> {
        let cells: Vec<VertexSet> = self.by_card.iter().skip(1).flatten().copied().collect();
        if cells.len() > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "subdivision vertices",
                size: cells.len(),
                cap: MAX_VERTICES,
            });
        }
        let names: Vec<String> = cells.iter().map(|&c| self.format_set(c)).collect();
        let mut edges = Vec::new();
        for (i, a) in cells.iter().enumerate() {
            for (j, b) in cells.iter().enumerate().skip(i + 1) {
                if a.is_subset(*b) || b.is_subset(*a) {
                    edges.push((i, j));
                }
            }
        }
        Ok(Graph::new(names, &edges)?.flag_complex())
    }

    /// Complex on the concatenated universe; vertex names must be distinct.
    fn concat_names(&self, other: &SimplicialComplex) -> Result<(Vec<String>, usize)> {
        let mut names: Vec<String> = self.names.to_vec();
        names.extend(other.names.iter().cloned());
        check_names(&names)?;
        Ok((names, self.names.len()))
    }

    fn shift(s: VertexSet, by: usize) -> VertexSet {
        s.iter().map(|v| v + by).collect()
    }

    /// Simplicial join `self * other`; its toric complex is the product of the
    /// two toric complexes.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let (names, offset) = self.concat_names(other)?;
        let mut all = BTreeSet::new();
        for a in self.iter() {
            for b in other.iter() {
                all.insert(a.union(Self::shift(b, offset)));
            }
        }
        Ok(Self::from_closed_set(Arc::new(names), all))
    }

    /// Disjoint union; its toric complex is the wedge of the two toric complexes.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<Self> {
        let (names, offset) = self.concat_names(other)?;
        let mut all: BTreeSet<VertexSet> = self.iter().collect();
        all.extend(other.iter().map(|b| Self::shift(b, offset)));
        Ok(Self::from_closed_set(Arc::new(names), all))
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let facets: Vec<String> = self.facets().into_iter().map(|s| self.format_set(s)).collect();
        write!(f, "SimplicialComplex[{}]", facets.join(" "))
    }
}

/// `L_W`, see [`SimplicialComplex::induced`].
pub fn induced_subcomplex(l: &SimplicialComplex, w: VertexSet) -> Result<SimplicialComplex> {
    l.induced(w)
}

/// `lk_K(σ)`, see [`SimplicialComplex::link`].
pub fn link(l: &SimplicialComplex, k: &SimplicialComplex, sigma: VertexSet) -> Result<SimplicialComplex> {
    l.link(k, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> SimplicialComplex {
        SimplicialComplex::from_named_facets(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]).unwrap()
    }

    #[test]
    fn induced_path_endpoints() {
        let l = path();
        let w = l.vertex_set_of(&["a", "c"]).unwrap();
        let lw = l.induced(w).unwrap();
        assert_eq!(lw.num_vertices(), 2);
        assert!(lw.simplices(2).is_empty());
        assert_eq!(l.induced(l.vertex_set()).unwrap(), l);
        let empty = l.induced(VertexSet::EMPTY).unwrap();
        assert!(empty.is_irrelevant());
        assert!(l.induced(VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn links_use_ambient_membership() {
        let l = path();
        let c = l.vertex_set_of(&["c"]).unwrap();
        let la = l.induced(l.vertex_set_of(&["a"]).unwrap()).unwrap();
        let lk = l.link(&la, c).unwrap();
        assert!(lk.is_irrelevant());
        let lab = l.induced(l.vertex_set_of(&["a", "b"]).unwrap()).unwrap();
        let lk = l.link(&lab, c).unwrap();
        assert_eq!(lk.num_simplices(), 2);
        assert!(lk.contains(l.vertex_set_of(&["b"]).unwrap()));
        assert_eq!(l.link(&l, VertexSet::EMPTY).unwrap(), l);
        let ac = l.vertex_set_of(&["a", "c"]).unwrap();
        assert!(matches!(l.link(&l, ac), Err(Error::SimplexNotInComplex(_))));
    }

    #[test]
    fn fast_link_matches_definition() {
        let l = path();
        for w in l.vertex_set().subsets() {
            let lw = l.induced(w).unwrap();
            for sigma in l.induced(l.vertex_set().difference(w)).unwrap().iter() {
                assert_eq!(l.link(&lw, sigma).unwrap(), l.link_in_induced(w, sigma));
            }
        }
    }

    #[test]
    fn void_and_irrelevant_are_distinct() {
        let v = SimplicialComplex::void(vec![]).unwrap();
        let e = SimplicialComplex::from_simplices(vec![], [VertexSet::EMPTY]).unwrap();
        assert!(v.is_void());
        assert!(e.is_irrelevant());
        assert_ne!(v, e);
        assert_eq!(v.dim(), None);
        assert_eq!(e.dim(), Some(-1));
    }

    #[test]
    fn join_of_two_points_is_square() {
        let p = SimplicialComplex::from_named_facets(&["a", "b"], &[]).unwrap();
        let q = SimplicialComplex::from_named_facets(&["c", "d"], &[]).unwrap();
        let j = p.join(&q).unwrap();
        assert_eq!(j.simplices(2).len(), 4);
        assert_eq!(j.simplices(3).len(), 0);
        let u = p.disjoint_union(&q).unwrap();
        assert_eq!(u.num_vertices(), 4);
        assert!(p.join(&p).is_err());
    }

    #[test]
    fn subdivisions() {
        let e = SimplicialComplex::from_named_facets(&["a", "b"], &[&["a", "b"]]).unwrap();
        let sd = e.barycentric_subdivision().unwrap();
        assert_eq!(sd.num_vertices(), 3);
        assert_eq!(sd.simplices(2).len(), 2);
        assert_eq!(sd.names(), ["{a}", "{b}", "{a,b}"]);
        let t = SimplicialComplex::from_named_facets(
            &["a", "b", "c"],
            &[&["a", "b"], &["b", "c"], &["a", "c"]],
        )
        .unwrap();
        let sd = t.barycentric_subdivision().unwrap();
        assert_eq!(sd.num_vertices(), 6);
        assert_eq!(sd.simplices(2).len(), 6);
        assert_eq!(sd.simplices(3).len(), 0);
    }
}
