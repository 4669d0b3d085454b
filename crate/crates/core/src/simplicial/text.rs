//! Line-oriented text formats for complexes and graphs.
//!
//! ```text
//! # a path
//! vertices: a b c
//! facet: a b
//! facet: b c
//! ```
//!
//! Graphs use `edge: a b` lines instead of `facet:`. A complex file holding
//! only `void:` is the void complex.

use super::complex::SimplicialComplex;
use super::graph::Graph;
use super::vertexset::VertexSet;
use crate::error::{Error, Result};

/// Splits `key: value` lines, skipping blanks and `#` comments.
pub(crate) fn keyed_lines(src: &str) -> impl Iterator<Item = Result<(usize, &str, &str)>> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return None;
        }
        let n = i + 1;
        Some(match line.split_once(':') {
            Some((k, v)) => Ok((n, k.trim(), v.trim())),
            None => Err(Error::parse(n, format!("expected `key: value`, found `{line}`"))),
        })
    })
}

struct NameTable {
    names: Vec<String>,
}

impl NameTable {
    fn index(&mut self, name: &str) -> usize {
        match self.names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                self.names.push(name.to_string());
                self.names.len() - 1
            }
        }
    }

    fn set(&mut self, words: &str) -> VertexSet {
        words.split_whitespace().map(|w| self.index(w)).collect()
    }
}

pub fn parse_complex(src: &str) -> Result<SimplicialComplex> {
    let mut table = NameTable { names: Vec::new() };
    let mut facets = Vec::new();
    let mut void_line = None;
    let mut other_line = None;
    for item in keyed_lines(src) {
        let (n, key, value) = item?;
        match key {
            "vertices" => {
                for w in value.split_whitespace() {
                    table.index(w);
                }
                other_line.get_or_insert(n);
            }
            "facet" => {
                facets.push(table.set(value));
                other_line.get_or_insert(n);
            }
            "void" if value.is_empty() => {
                void_line = Some(n);
            }
            _ => return Err(Error::parse(n, format!("unknown key `{key}`"))),
        }
        if table.names.len() > super::MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count",
                size: table.names.len(),
                cap: super::MAX_VERTICES,
            });
        }
    }
    if let (Some(v), Some(o)) = (void_line, other_line) {
        return Err(Error::parse(v.max(o), "`void:` cannot be combined with vertices or facets"));
    }
    if void_line.is_some() {
        return SimplicialComplex::void(Vec::new());
    }
    SimplicialComplex::with_facets(table.names, &facets)
}

pub fn parse_graph(src: &str) -> Result<Graph> {
    let mut table = NameTable { names: Vec::new() };
    let mut edges = Vec::new();
    for item in keyed_lines(src) {
        let (n, key, value) = item?;
        match key {
            "vertices" => {
                for w in value.split_whitespace() {
                    table.index(w);
                }
            }
            "edge" => {
                let ends: Vec<&str> = value.split_whitespace().collect();
                if ends.len() != 2 {
                    return Err(Error::parse(n, "an edge needs exactly two vertices"));
                }
                if ends[0] == ends[1] {
                    return Err(Error::parse(n, format!("loop at `{}`", ends[0])));
                }
                edges.push((table.index(ends[0]), table.index(ends[1])));
            }
            _ => return Err(Error::parse(n, format!("unknown key `{key}`"))),
        }
        if table.names.len() > super::MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count",
                size: table.names.len(),
                cap: super::MAX_VERTICES,
            });
        }
    }
    Graph::new(table.names, &edges)
}

fn sorted_names(names: &[String], s: VertexSet) -> Vec<&str> {
    let mut v: Vec<&str> = s.iter().map(|i| names[i].as_str()).collect();
    v.sort_unstable();
    v
}

/// Canonical text: vertices and facets sorted lexicographically.
pub fn complex_to_text(k: &SimplicialComplex) -> String {
    if k.is_void() {
        return "void:\n".to_string();
    }
    let names = k.names();
    let mut out = format!("vertices: {}\n", sorted_names(names, k.vertex_set()).join(" "));
    let mut facets: Vec<Vec<&str>> = k
        .facets()
        .into_iter()
        .filter(|f| !f.is_empty())
        .map(|f| sorted_names(names, f))
        .collect();
    facets.sort();
    for f in facets {
        out.push_str(&format!("facet: {}\n", f.join(" ")));
    }
    out
}

pub fn graph_to_text(g: &Graph) -> String {
    let names = g.names();
    let mut out = format!("vertices: {}\n", sorted_names(names, g.vertex_set()).join(" "));
    let mut edges: Vec<Vec<&str>> = g
        .edges()
        .into_iter()
        .map(|(a, b)| sorted_names(names, VertexSet::singleton(a).with(b)))
        .collect();
    edges.sort();
    for e in edges {
        out.push_str(&format!("edge: {}\n", e.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let src = "# path\nvertices: c b a\nfacet: b c\nfacet: a b\n";
        let k = parse_complex(src).unwrap();
        assert_eq!(k.num_vertices(), 3);
        let text = complex_to_text(&k);
        assert_eq!(text, "vertices: a b c\nfacet: a b\nfacet: b c\n");
        let k2 = parse_complex(&text).unwrap();
        assert_eq!(complex_to_text(&k2), text);
    }

    #[test]
    fn bottom_states() {
        assert!(parse_complex("").unwrap().is_irrelevant());
        assert!(parse_complex("void:\n").unwrap().is_void());
        assert!(parse_complex(&complex_to_text(&parse_complex("void:").unwrap())).unwrap().is_void());
        assert!(parse_complex("void:\nvertices: a").is_err());
    }

    #[test]
    fn errors_cite_lines() {
        let e = parse_complex("vertices: a\nface: a\n").unwrap_err();
        assert_eq!(e, Error::parse(2, "unknown key `face`"));
        assert!(matches!(parse_graph("edge: a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("\n\nedge: a a\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn graph_round_trip() {
        let g = parse_graph("edge: b a\nvertices: z\nedge: b c\n").unwrap();
        let text = graph_to_text(&g);
        assert_eq!(text, "vertices: a b c z\nedge: a b\nedge: b c\n");
        assert_eq!(graph_to_text(&parse_graph(&text).unwrap()), text);
    }
}
