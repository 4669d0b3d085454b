use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use sigmaloci::exactlin::{smith_normal_form_with_transforms, Coefficients, Field, IntegerMatrix};
use sigmaloci::fpgroups::{parse_presentation, GroupPresentation, Word};
use sigmaloci::laurent::{parse_polynomial, LaurentPolynomial};
use sigmaloci::raag::{minimal_separators, support_is_good};
use sigmaloci::simplicial::{complex_to_text, graph_to_text, parse_complex, parse_graph, Graph, SimplicialComplex, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .zip(&bits)
                .filter(|(_, &b)| b)
                .map(|(e, _)| e)
                .collect();
            Graph::new(names, &edges).unwrap()
        })
    })
}

fn complex_strategy(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u128..(1 << n), 0..6).prop_map(move |raw| {
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let facets: Vec<VertexSet> = raw.into_iter().map(VertexSet::from_bits).filter(|s| s.len() >= 2).collect();
            SimplicialComplex::with_facets(names, &facets).unwrap()
        })
    })
}

fn word_strategy(n: i32) -> impl Strategy<Value = Word> {
    proptest::collection::vec((1..=n, any::<bool>()), 0..10)
        .prop_map(|v| Word::from_letters(v.into_iter().map(|(g, inv)| if inv { -g } else { g })))
}

fn polynomial_strategy() -> impl Strategy<Value = LaurentPolynomial> {
    (1usize..=3).prop_flat_map(|n| {
        proptest::collection::vec((proptest::collection::vec(-3i64..=3, n), -4i64..=4), 0..6).prop_map(move |terms| {
            terms.into_iter().fold(LaurentPolynomial::zero(n), |f, (e, c)| {
                f.add(&LaurentPolynomial::monomial(e, BigRational::from_integer(c.into()))).unwrap()
            })
        })
    })
}

/// Inclusion-minimal `S` with `G - S` disconnected, by enumerating all subsets.
fn brute_force_separators(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertex_set();
    let cuts: Vec<VertexSet> = all
        .subsets()
        .filter(|&s| g.components_within(all.difference(s)).len() >= 2)
        .collect();
    let mut out: Vec<VertexSet> = cuts
        .iter()
        .copied()
        .filter(|s| !cuts.iter().any(|t| t != s && t.is_subset(*s)))
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn separators_match_brute_force(g in graph_strategy(7)) {
        let mut fast = minimal_separators(&g);
        fast.sort();
        prop_assert_eq!(fast, brute_force_separators(&g));
    }

    #[test]
    fn complex_text_round_trip(k in complex_strategy(6)) {
        prop_assert_eq!(parse_complex(&complex_to_text(&k)).unwrap(), k);
    }

    #[test]
    fn graph_text_round_trip(g in graph_strategy(6)) {
        prop_assert_eq!(parse_graph(&graph_to_text(&g)).unwrap(), g);
    }

    #[test]
    fn presentation_text_round_trip(rels in proptest::collection::vec(word_strategy(3), 0..4)) {
        let names: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
        let p = GroupPresentation::new(names, rels).unwrap();
        prop_assert_eq!(parse_presentation(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn word_inverse_cancels(w in word_strategy(3)) {
        prop_assert!(w.concat(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn polynomial_text_round_trip(f in polynomial_strategy()) {
        prop_assert_eq!(parse_polynomial(&f.to_string(), 't', Some(f.nvars())).unwrap(), f);
    }

    #[test]
    fn polynomial_ring_laws(f in polynomial_strategy(), g in polynomial_strategy()) {
        prop_assume!(f.nvars() == g.nvars());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        let one = LaurentPolynomial::one(f.nvars());
        prop_assert_eq!(f.mul(&one).unwrap(), f.clone());
        prop_assert!(f.sub(&f).unwrap().is_zero());
        prop_assert_eq!(f.mul(&g).unwrap().value_at_one(), f.value_at_one() * g.value_at_one());
    }

    #[test]
    fn smith_form_diagonalizes(rows in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 3), 1..4)) {
        let m = IntegerMatrix::from_i64_rows(3, &rows).unwrap();
        let s = smith_normal_form_with_transforms(&m);
        let d = s.left.as_ref().unwrap().mul(&m).unwrap().mul(s.right.as_ref().unwrap()).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expected = if i == j && i < s.rank { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&d[(i, j)], &expected);
            }
        }
        for w in s.diagonal.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(s.rank, m.rank(Field::Rational));
        prop_assert!(s.diagonal.iter().all(|x| *x >= BigInt::one()));
    }

    #[test]
    fn integral_verdict_implies_field_verdicts(k in complex_strategy(5), q in 0usize..4) {
        for w in k.vertex_set().subsets().filter(|w| !w.is_empty()) {
            if support_is_good(&k, w, q, Coefficients::Integers) {
                for field in [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(5)] {
                    prop_assert!(support_is_good(&k, w, q, Coefficients::Field(field)));
                }
            }
            if q > 0 && support_is_good(&k, w, q, Coefficients::Integers) {
                prop_assert!(support_is_good(&k, w, q - 1, Coefficients::Integers));
            }
        }
    }
}
