//! Standard complexes, graphs and presentations, exhaustive small corpora,
//! and seeded random generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fpgroups::{GroupPresentation, Word};
use crate::raag::Character;
use crate::simplicial::{Graph, SimplicialComplex, VertexSet};

/// Fixed seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5167_6d61;

fn numbered(n: usize, prefix: &str) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn letters(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        numbered(n, "v")
    }
}

/// The 6-vertex triangulation of the real projective plane.
pub fn rp2_minimal() -> SimplicialComplex {
    let facets: [[usize; 3]; 10] = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ];
    let names: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
    let sets: Vec<VertexSet> = facets
        .iter()
        .map(|f| f.iter().map(|&v| v - 1).collect())
        .collect();
    SimplicialComplex::with_facets(names, &sets).expect("valid facets")
}

/// Barycentric subdivision of [`rp2_minimal`]: a flag triangulation of `RP²`
/// with 31 vertices.
pub fn rp2_flag() -> SimplicialComplex {
    rp2_minimal()
        .barycentric_subdivision()
        .expect("31 vertices fit")
}

/// Boundary of the octahedron, the flag 2-sphere on `a,a',b,b',c,c'`.
pub fn octahedron() -> SimplicialComplex {
    let g = Graph::from_named(
        &["a", "a'", "b", "b'", "c", "c'"],
        &[
            ("a", "b"),
            ("a", "b'"),
            ("a", "c"),
            ("a", "c'"),
            ("a'", "b"),
            ("a'", "b'"),
            ("a'", "c"),
            ("a'", "c'"),
            ("b", "c"),
            ("b", "c'"),
            ("b'", "c"),
            ("b'", "c'"),
        ],
    )
    .expect("valid graph");
    g.flag_complex()
}

/// `n` isolated points.
pub fn discrete_complex(n: usize) -> SimplicialComplex {
    SimplicialComplex::with_facets(letters(n), &[]).expect("valid names")
}

pub fn empty_graph(n: usize) -> Graph {
    Graph::new(letters(n), &[]).expect("valid names")
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(letters(n), &edges).expect("valid graph")
}

pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(letters(n), &edges).expect("valid graph")
}

pub fn complete_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    Graph::new(letters(n), &edges).expect("valid graph")
}

/// Every labeled graph on `n` vertices, ordered by edge bitmask.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    all_graphs_on(&letters(n))
}

/// Every labeled graph on the given vertex names.
pub fn all_graphs_on(names: &[String]) -> Vec<Graph> {
    let n = names.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    assert!(pairs.len() < 32, "too many graphs to enumerate");
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(names.to_vec(), &edges).expect("valid graph")
        })
        .collect()
}

/// Every simplicial complex on exactly the vertices `1..=n`.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let all = VertexSet::first(n);
    let mut candidates: Vec<VertexSet> = all.subsets().filter(|s| s.len() >= 2).collect();
    candidates.sort_by_key(|s| (s.len(), s.bits()));
    let mut out = Vec::new();
    let mut chosen: Vec<VertexSet> = Vec::new();
    fn rec(
        i: usize,
        candidates: &[VertexSet],
        chosen: &mut Vec<VertexSet>,
        names: &[String],
        out: &mut Vec<SimplicialComplex>,
    ) {
        if i == candidates.len() {
            let facets: Vec<VertexSet> = chosen.clone();
            out.push(SimplicialComplex::with_facets(names.to_vec(), &facets).expect("valid"));
            return;
        }
        let s = candidates[i];
        rec(i + 1, candidates, chosen, names, out);
        let closed = s.len() == 2 || s.iter().all(|v| chosen.contains(&s.without(v)));
        if closed {
            chosen.push(s);
            rec(i + 1, candidates, chosen, names, out);
            chosen.pop();
        }
    }
    rec(0, &candidates, &mut chosen, &numbered(n, "v"), &mut out);
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random complex on `n` vertices: each candidate facet of size 2..=`max_card`
/// is added with probability `p`.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, max_card: usize, p: f64) -> SimplicialComplex {
    let facets: Vec<VertexSet> = VertexSet::first(n)
        .subsets()
        .filter(|s| s.len() >= 2 && s.len() <= max_card)
        .filter(|_| rng.gen_bool(p))
        .collect();
    SimplicialComplex::with_facets(numbered(n, "v"), &facets).expect("valid")
}

/// Random freely reduced word of length at most `max_len` in `n` generators.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<i32> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = rng.gen_range(1..=n as i32);
        let l = if rng.gen_bool(0.5) { g } else { -g };
        if letters.last() != Some(&-l) {
            letters.push(l);
        }
    }
    Word::from_letters(letters)
}

/// `⟨x1, x2 | x1² x2 x1⁻² x2⁻¹⟩`.
pub fn bs_like_presentation() -> GroupPresentation {
    GroupPresentation::from_strs(2, &["x1^2 x2 x1^-2 x2^-1"]).expect("valid")
}

/// Corpus of presentations used in tests.
pub fn presentation_corpus() -> Vec<GroupPresentation> {
    let specs: &[(usize, &[&str])] = &[
        (1, &[]),
        (2, &[]),
        (3, &[]),
        (2, &["x1 x2 x1^-1 x2^-1"]),
        (2, &["x1^2 x2 x1^-2 x2^-1"]),
        (2, &["x1 x2 x1^-1 x2^-2"]),
        (2, &["x1 x2 x1 x2^-1 x1^-1 x2^-1"]),
        (2, &["x1^2", "x1 x2 x1^-1 x2^-1"]),
        (3, &["x1 x2 x1^-1 x2^-1", "x2 x3 x2^-1 x3^-1"]),
        (3, &["x1 x2 x3 x1^-1 x2^-1 x3^-1"]),
        (4, &["x1 x2 x1^-1 x2^-1 x3 x4 x3^-1 x4^-1"]),
    ];
    specs
        .iter()
        .map(|(n, rels)| GroupPresentation::from_strs(*n, rels).expect("valid"))
        .collect()
}

/// Flag `RP²` with a pendant edge `{v, w}` at its first vertex, and the
/// character that is 1 on `RP²` and `p` on `w`.
pub fn rp2_with_pendant(p: i64) -> (Graph, Character) {
    let k = rp2_flag();
    let base = k.one_skeleton();
    let mut names = base.names().to_vec();
    let w = names.len();
    names.push("w".into());
    let mut edges = base.edges();
    edges.push((0, w));
    let g = Graph::new(names, &edges).expect("valid graph");
    let mut values = vec![1i64; w];
    values.push(p);
    let chi = Character::from_i64(g.names(), &values).expect("lengths agree");
    (g, chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{Coefficients, Field};
    use crate::simplicial::reduced_homology;

    #[test]
    fn rp2_shapes() {
        let k = rp2_minimal();
        assert_eq!((k.simplices(1).len(), k.simplices(2).len(), k.simplices(3).len()), (6, 15, 10));
        let b = rp2_flag();
        assert_eq!((b.simplices(1).len(), b.simplices(2).len(), b.simplices(3).len()), (31, 90, 60));
        assert_eq!(b.one_skeleton().flag_complex(), b);
        let h = reduced_homology(&b, Coefficients::Integers);
        assert_eq!(h.rank(1), 0);
        assert_eq!(h.torsion(1), &[2.into()]);
        assert_eq!(reduced_homology(&b, Coefficients::Field(Field::Prime(2))).rank(2), 1);
    }

    #[test]
    fn octahedron_is_a_sphere() {
        let h = reduced_homology(&octahedron(), Coefficients::Integers);
        assert_eq!((h.rank(0), h.rank(1), h.rank(2)), (0, 0, 1));
    }

    #[test]
    fn corpus_counts() {
        assert_eq!(all_graphs(3).len(), 8);
        assert_eq!(all_graphs(4).len(), 64);
        assert_eq!(all_complexes(2).len(), 2);
        assert_eq!(all_complexes(3).len(), 9);
        assert_eq!(all_complexes(4).len(), 114);
    }

    #[test]
    fn random_words_are_reduced() {
        let mut r = rng(DEFAULT_SEED);
        for _ in 0..50 {
            let w = random_word(&mut r, 3, 12);
            assert!(w.len() <= 12);
            assert!(w.letters().windows(2).all(|p| p[0] != -p[1]));
        }
    }

    #[test]
    fn pendant_example() {
        let (g, chi) = rp2_with_pendant(3);
        assert_eq!(g.num_vertices(), 32);
        assert_eq!(g.cut_vertices(), vec![0]);
        assert_eq!(chi.value(31).to_string(), "3");
    }
}
