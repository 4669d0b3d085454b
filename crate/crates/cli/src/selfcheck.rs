use rand::Rng;
use serde_json::json;

use sigmaloci::catalog;
use sigmaloci::exactlin::{Coefficients, Field, FieldOps, PrimeField, Rationals};
use sigmaloci::fpgroups::{fox_identity_lhs, fox_identity_rhs};
use sigmaloci::raag::support_is_good;
use sigmaloci::toric::{aomoto_betti_numbers, aomoto_oracle_numbers, charvar_arrangement, twisted_betti_numbers};

use crate::error::CliError;
use crate::report::Report;

struct Tally {
    name: &'static str,
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn aomoto(rng: &mut impl Rng, rounds: usize) -> Result<Tally, CliError> {
    let mut t = Tally::new("Betti formula vs Aomoto complex");
    for _ in 0..rounds {
        let n = rng.gen_range(2..=6);
        let l = catalog::random_complex(rng, n, 3, 0.3);
        let w = sigmaloci::simplicial::VertexSet::from_bits(rng.gen_range(0..1u128 << n));
        let z: Vec<_> = (0..n)
            .map(|v| if w.contains(v) { Rationals.from_i64(rng.gen_range(1..=3)) } else { Rationals.zero() })
            .collect();
        let formula = aomoto_betti_numbers(&l, w, 3, Field::Rational)?;
        let oracle = aomoto_oracle_numbers(&Rationals, &l, &z, 3)?;
        t.check(formula == oracle, || format!("{:?} W={w:?}", l.facets()));
    }
    Ok(t)
}

fn charvar(rng: &mut impl Rng, rounds: usize) -> Result<Tally, CliError> {
    let mut t = Tally::new("characteristic variety vs twisted homology over F5");
    let k = PrimeField::new(5)?;
    for _ in 0..rounds {
        let n = rng.gen_range(2..=5);
        let l = catalog::random_complex(rng, n, 3, 0.3);
        let rho: Vec<u64> = (0..n).map(|_| rng.gen_range(1..5)).collect();
        let betti = twisted_betti_numbers(&k, &l, &rho, 2)?;
        for (i, b) in betti.iter().enumerate() {
            let member = charvar_arrangement(&l, i, 1, Field::Prime(5))?.contains_point(&k, &rho)?;
            t.check(member == (*b >= 1), || format!("{:?} rho={rho:?} i={i}", l.facets()));
        }
    }
    Ok(t)
}

fn fox(rng: &mut impl Rng, rounds: usize) -> Tally {
    let mut t = Tally::new("Fox fundamental identity");
    for _ in 0..rounds {
        let n = rng.gen_range(1..=4);
        let w = catalog::random_word(rng, n, 12);
        t.check(fox_identity_lhs(&w, n) == fox_identity_rhs(&w, n), || w.to_string());
    }
    t
}

fn integral_implies_rational(rng: &mut impl Rng, rounds: usize) -> Tally {
    let mut t = Tally::new("integral Sigma verdict implies rational");
    for _ in 0..rounds {
        let n = rng.gen_range(2..=6);
        let l = catalog::random_complex(rng, n, 3, 0.3);
        let w = sigmaloci::simplicial::VertexSet::from_bits(rng.gen_range(1..1u128 << n));
        let q = rng.gen_range(0..=3);
        let z = support_is_good(&l, w, q, Coefficients::Integers);
        let f = support_is_good(&l, w, q, Coefficients::Field(Field::Rational));
        t.check(!z || f, || format!("{:?} W={w:?} q={q}", l.facets()));
    }
    t
}

pub fn run(seed: u64, rounds: usize) -> Result<Report, CliError> {
    let mut rng = catalog::rng(seed);
    let tallies = vec![
        aomoto(&mut rng, rounds)?,
        charvar(&mut rng, rounds)?,
        fox(&mut rng, rounds),
        integral_implies_rational(&mut rng, rounds),
    ];
    let mut text = format!("seed: {seed}\n");
    let mut rows = Vec::new();
    for t in &tallies {
        text.push_str(&format!("{}: {} checks, {} failures\n", t.name, t.checks, t.failures.len()));
        for f in &t.failures {
            text.push_str(&format!("  {f}\n"));
        }
        rows.push(json!({ "name": t.name, "checks": t.checks, "failures": t.failures }));
    }
    let mut report = Report::new(text, json!({ "seed": seed, "checks": rows }));
    report.ok = tallies.iter().all(|t| t.failures.is_empty());
    Ok(report)
}
