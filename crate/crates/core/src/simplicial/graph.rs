use std::collections::BTreeSet;
use std::sync::Arc;

use super::complex::{check_names, SimplicialComplex};
use super::vertexset::VertexSet;
use crate::error::{Error, Result};

/// A finite simple graph on named vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Arc<Vec<String>>,
    vertices: VertexSet,
    adjacency: Vec<VertexSet>,
}

/// Result of [`graph_connectivity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connectivity {
    pub is_connected: bool,
    pub cut_vertices: Vec<usize>,
    pub warning: Option<String>,
}

impl Graph {
    /// Graph on all the given names with edges given by index pairs.
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        check_names(&names)?;
        let all = VertexSet::first(names.len());
        Self::from_shared(Arc::new(names), all, edges)
    }

    pub fn from_named(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let idx = |v: &str| {
            names
                .iter()
                .position(|n| n == v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, &pairs)
    }

    pub(crate) fn from_shared(
        names: Arc<Vec<String>>,
        vertices: VertexSet,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        let mut adjacency = vec![VertexSet::EMPTY; names.len()];
        for &(a, b) in edges {
            if !vertices.contains(a) || !vertices.contains(b) {
                let bad = if vertices.contains(a) { b } else { a };
                return Err(Error::UnknownVertex(
                    names.get(bad).cloned().unwrap_or_else(|| bad.to_string()),
                ));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex `{}`", names[a])));
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(Graph {
            names,
            vertices,
            adjacency,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .filter(|&i| self.vertices.contains(i))
    }

    pub fn vertex_set_of(&self, names: &[&str]) -> Result<VertexSet> {
        names
            .iter()
            .map(|n| {
                self.vertex_index(n)
                    .ok_or_else(|| Error::UnknownVertex(n.to_string()))
            })
            .collect()
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices
            .iter()
            .flat_map(|a| {
                self.adjacency[a]
                    .iter()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.edges().len()
    }

    /// Induced subgraph `Γ_W`.
    pub fn induced(&self, w: VertexSet) -> Result<Graph> {
        if let Some(v) = w.difference(self.vertices).min() {
            return Err(Error::UnknownVertex(
                self.names.get(v).cloned().unwrap_or_else(|| v.to_string()),
            ));
        }
        Ok(Graph {
            names: Arc::clone(&self.names),
            vertices: w,
            adjacency: self.adjacency.iter().map(|a| a.intersection(w)).collect(),
        })
    }

    /// Connected components of the subgraph induced on `w`.
    pub fn components_within(&self, w: VertexSet) -> Vec<VertexSet> {
        let mut rest = w.intersection(self.vertices);
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adjacency[v]);
                }
                frontier = next.intersection(w).difference(comp);
                comp = comp.union(frontier);
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices)
    }

    /// Whether `Γ_W` is connected; the empty subgraph counts as disconnected.
    pub fn is_connected_within(&self, w: VertexSet) -> bool {
        self.components_within(w).len() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices)
    }

    /// Articulation points, in increasing order.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let base = self.components().len();
        self.vertices
            .iter()
            .filter(|&v| self.components_within(self.vertices.without(v)).len() > base)
            .collect()
    }

    /// Clique complex `Δ_Γ`.
    pub fn flag_complex(&self) -> SimplicialComplex {
        let mut all = BTreeSet::new();
        let mut stack = vec![(VertexSet::EMPTY, self.vertices)];
        while let Some((clique, candidates)) = stack.pop() {
            all.insert(clique);
            for v in candidates.iter() {
                let later = VertexSet::from_bits(candidates.bits() & ((!0u128 << v) << 1));
                stack.push((clique.with(v), later.intersection(self.adjacency[v])));
            }
        }
        SimplicialComplex::from_closed_set(Arc::clone(&self.names), all)
    }

    fn concat(&self, other: &Graph) -> Result<(Vec<String>, usize)> {
        let mut names: Vec<String> = self.names.to_vec();
        names.extend(other.names.iter().cloned());
        check_names(&names)?;
        Ok((names, self.names.len()))
    }

    fn combine(&self, other: &Graph, connect: bool) -> Result<Graph> {
        let (names, off) = self.concat(other)?;
        let shift = |s: VertexSet| -> VertexSet { s.iter().map(|v| v + off).collect() };
        let left = self.vertices;
        let right = shift(other.vertices);
        let mut adjacency = Vec::with_capacity(names.len());
        for v in 0..off {
            let extra = if connect && left.contains(v) { right } else { VertexSet::EMPTY };
            adjacency.push(self.adjacency[v].union(extra));
        }
        for v in 0..other.names.len() {
            let extra = if connect && other.vertices.contains(v) { left } else { VertexSet::EMPTY };
            adjacency.push(shift(other.adjacency[v]).union(extra));
        }
        Ok(Graph {
            names: Arc::new(names),
            vertices: left.union(right),
            adjacency,
        })
    }

    /// Graph join `Γ₁ ∘ Γ₂`; its right-angled Artin group is `G₁ × G₂`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    /// Disjoint union; its right-angled Artin group is `G₁ * G₂`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", self.names[a], self.names[b]))
            .collect();
        write!(f, "Graph{}[{}]", self.format_set(self.vertices), edges.join(" "))
    }
}

pub fn flag_complex(g: &Graph) -> SimplicialComplex {
    g.flag_complex()
}

/// Connectivity and cut vertices. The empty graph is reported disconnected,
/// with a warning.
pub fn graph_connectivity(g: &Graph) -> Connectivity {
    let warning = (g.num_vertices() == 0)
        .then(|| "empty graph treated as disconnected by convention".to_string());
    Connectivity {
        is_connected: g.is_connected(),
        cut_vertices: g.cut_vertices(),
        warning,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_examples() {
        let p = Graph::from_named(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let c = graph_connectivity(&p);
        assert!(c.is_connected);
        assert_eq!(c.cut_vertices, vec![1]);
        let two = Graph::from_named(&["a", "b"], &[]).unwrap();
        let c = graph_connectivity(&two);
        assert!(!c.is_connected);
        assert!(c.cut_vertices.is_empty());
        let sq = Graph::from_named(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        let c = graph_connectivity(&sq);
        assert!(c.is_connected && c.cut_vertices.is_empty());
        let empty = Graph::new(vec![], &[]).unwrap();
        let c = graph_connectivity(&empty);
        assert!(!c.is_connected && c.warning.is_some());
    }

    #[test]
    fn flag_of_triangle_is_solid() {
        let t = Graph::from_named(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let k = t.flag_complex();
        assert_eq!(k.simplices(3).len(), 1);
        assert_eq!(k.num_simplices(), 8);
        let p = Graph::from_named(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(p.flag_complex().simplices(3).len(), 0);
        assert_eq!(p.flag_complex().one_skeleton(), p);
    }

    #[test]
    fn join_and_union() {
        let a = Graph::from_named(&["a"], &[]).unwrap();
        let b = Graph::from_named(&["b", "c"], &[]).unwrap();
        assert_eq!(a.join(&b).unwrap().num_edges(), 2);
        assert_eq!(a.disjoint_union(&b).unwrap().num_edges(), 0);
        assert!(a.join(&a).is_err());
        assert!(Graph::from_named(&["a"], &[("a", "a")]).is_err());
    }
}
