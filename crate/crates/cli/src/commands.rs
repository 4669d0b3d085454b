use std::path::Path;

use serde_json::{json, Value};

use sigmaloci::exactlin::{Coefficients, Field, PrimeField, Rationals};
use sigmaloci::fpgroups::{self, fox_derivative, FreeGroupRingElement, GroupPresentation};
use sigmaloci::laurent::{parse_polynomial, LaurentPolynomial};
use sigmaloci::raag::{self, SupportVerdictTable};
use sigmaloci::simplicial::{complex_to_text, reduced_homology, SimplicialComplex};
use sigmaloci::tau::{self, tc1_hypersurface};
use sigmaloci::toric::{self, CoordinateArrangement, DEFAULT_MAX_SWEEP_VERTICES};

use crate::error::CliError;
use crate::input;
use crate::report::{self, format_set, int, names_of, Report};
use crate::{CharacterArgs, Charvar1Args, CoverZArgs, KernelArgs, LocusArgs, Sigma1BoundArgs, SpaceInput, Tau1Args};

const DEFAULT_TAU1_CAP: usize = 14;

pub fn complex_betti(space: &SpaceInput, coeff: &str) -> Result<Report, CliError> {
    let k = input::space(space)?;
    let coeff = input::coefficients(coeff)?;
    let h = reduced_homology(&k, coeff);
    let mut text = format!("coefficients: {coeff}\n");
    let mut degrees = Vec::new();
    for j in -1..=h.top_degree() {
        let tors: Vec<String> = h.torsion(j).iter().map(ToString::to_string).collect();
        text.push_str(&format!("H~_{j}: rank {}", h.rank(j)));
        if !tors.is_empty() {
            text.push_str(&format!(", torsion [{}]", tors.join(", ")));
        }
        text.push('\n');
        let tors: Vec<Value> = h.torsion(j).iter().map(int).collect();
        degrees.push(json!({ "degree": j, "rank": h.rank(j), "torsion": tors }));
    }
    Ok(Report::new(
        text,
        json!({ "coefficients": coeff.to_string(), "homology": degrees }),
    ))
}

fn complex_json(k: &SimplicialComplex) -> Value {
    let mut vertices = k.names().to_vec();
    vertices.sort();
    let mut facets: Vec<Vec<String>> = k
        .facets()
        .into_iter()
        .filter(|f| !f.is_empty())
        .map(|f| {
            let mut v = names_of(k.names(), f);
            v.sort();
            v
        })
        .collect();
    facets.sort();
    json!({ "void": k.is_void(), "vertices": vertices, "facets": facets })
}

pub fn complex_subdivide(space: &SpaceInput) -> Result<Report, CliError> {
    let k = input::space(space)?.barycentric_subdivision()?;
    Ok(Report::new(complex_to_text(&k), complex_json(&k)))
}

fn locus_report(a: &CoordinateArrangement) -> Report {
    let sets: Vec<Vec<String>> = a.sets.iter().map(|w| names_of(&a.names, *w)).collect();
    Report::new(
        a.to_string(),
        json!({
            "kind": a.kind.to_string(),
            "degree": a.degree,
            "depth": a.depth,
            "field": a.field.to_string(),
            "supports": sets,
        }),
    )
}

pub fn toric_locus(args: &LocusArgs, charvar: bool) -> Result<Report, CliError> {
    let l = input::space(&args.input)?;
    let field = input::field(&args.field)?;
    let cap = args.cap.unwrap_or(DEFAULT_MAX_SWEEP_VERTICES);
    let a = if charvar {
        toric::charvar_arrangement_capped(&l, args.i, args.d, field, cap)?
    } else {
        toric::resonance_arrangement_capped(&l, args.i, args.d, field, cap)?
    };
    Ok(locus_report(&a))
}

pub fn toric_aomoto(space: &SpaceInput, support: &str, max_degree: usize, field: &str) -> Result<Report, CliError> {
    let l = input::space(space)?;
    let field = input::field(field)?;
    let w = input::vertex_set(l.names(), support)?;
    let betti = toric::aomoto_betti_numbers(&l, w, max_degree, field)?;
    let mut text = format!("W = {}\n", format_set(l.names(), w));
    for (i, b) in betti.iter().enumerate() {
        text.push_str(&format!("beta_{i} = {b}\n"));
    }
    Ok(Report::new(
        text,
        json!({ "support": names_of(l.names(), w), "field": field.to_string(), "betti": betti }),
    ))
}

fn polynomials(args: &Tau1Args) -> Result<Vec<LaurentPolynomial>, CliError> {
    let mut sources: Vec<(String, String)> = args
        .poly
        .iter()
        .enumerate()
        .map(|(i, p)| (format!("--poly #{}", i + 1), p.clone()))
        .collect();
    if let Some(path) = &args.file {
        for (i, line) in input::read(path)?.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                sources.push((format!("{}: line {}", path.display(), i + 1), line.to_string()));
            }
        }
    }
    if sources.is_empty() {
        return Err(CliError::Usage("pass at least one --poly or a --file".into()));
    }
    let parsed = sources
        .iter()
        .map(|(ctx, s)| parse_polynomial(s, 't', None).map_err(CliError::input(ctx.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let n = args
        .nvars
        .unwrap_or_else(|| parsed.iter().map(LaurentPolynomial::nvars).max().unwrap_or(0));
    sources
        .iter()
        .map(|(ctx, s)| parse_polynomial(s, 't', Some(n)).map_err(CliError::input(ctx.clone())))
        .collect()
}

pub fn tau1(args: &Tau1Args) -> Result<Report, CliError> {
    let fs = polynomials(args)?;
    let cap = args.cap.unwrap_or(DEFAULT_TAU1_CAP);
    let a = tau::tau1_system_capped(&fs, cap)?;
    let mut text = format!("{a}\n");
    let mut json = report::arrangement(&a);
    if args.tc1 {
        if fs.len() != 1 {
            return Err(CliError::Usage("--tc1 needs exactly one polynomial".into()));
        }
        let tc = tc1_hypersurface(&fs[0])?.display_with("z");
        text.push_str(&format!("TC1: {tc} = 0\n"));
        json["tc1"] = json!(tc);
    }
    Ok(Report::new(text, json))
}

fn ring_element(e: &FreeGroupRingElement, names: &[String]) -> String {
    let mut out = String::new();
    for (i, (w, c)) in e.terms().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let mag = c.magnitude();
        let word = w.display_with(names);
        if *mag == 1u32.into() {
            out.push_str(&word);
        } else if w.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{mag}*{word}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn fox(path: &Path) -> Result<Report, CliError> {
    let p = input::presentation(path)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, r) in p.relators().iter().enumerate() {
        text.push_str(&format!("r{} = {}\n", i + 1, r.display_with(p.names())));
        let mut row = Vec::new();
        for (j, x) in p.names().iter().enumerate() {
            let d = ring_element(&fox_derivative(r, j), p.names());
            text.push_str(&format!("d(r{})/d{x} = {d}\n", i + 1));
            row.push(json!(d));
        }
        rows.push(json!({ "relator": r.display_with(p.names()), "derivatives": row }));
    }
    Ok(Report::new(text, json!({ "generators": p.names(), "relators": rows })))
}

fn abelianization_json(p: &GroupPresentation) -> Result<(String, Value), CliError> {
    let ab = p.abelianization()?;
    let tors: Vec<String> = ab.torsion.iter().map(ToString::to_string).collect();
    let images: Vec<String> = ab
        .generator_images()
        .iter()
        .zip(p.names())
        .map(|(c, x)| format!("{x} -> {c:?}"))
        .collect();
    let text = format!(
        "free rank: {}\ntorsion: [{}]\nimages: {}\n",
        ab.free_rank,
        tors.join(", "),
        images.join(", ")
    );
    let json = json!({
        "free_rank": ab.free_rank,
        "torsion": ab.torsion.iter().map(int).collect::<Vec<_>>(),
        "images": ab.generator_images(),
    });
    Ok((text, json))
}

pub fn alexander(path: &Path) -> Result<Report, CliError> {
    let p = input::presentation(path)?;
    let (mut text, ab) = abelianization_json(&p)?;
    let a = fpgroups::alexander_matrix(&p)?;
    text.push_str(&a.to_string());
    let rows: Vec<Vec<String>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(ToString::to_string).collect())
        .collect();
    Ok(Report::new(text, json!({ "abelianization": ab, "matrix": rows })))
}

pub fn charvar1(args: &Charvar1Args) -> Result<Report, CliError> {
    let p = input::presentation(&args.presentation)?;
    let member = match input::field(&args.field)? {
        Field::Rational => fpgroups::charvar1_member(&p, &Rationals, &input::point(&Rationals, &args.point)?, args.d)?,
        Field::Prime(q) => {
            let k = PrimeField::new(q)?;
            fpgroups::charvar1_member(&p, &k, &input::point(&k, &args.point)?, args.d)?
        }
    };
    Ok(Report::boolean("member", member))
}

pub fn sigma1_bound(args: &Sigma1BoundArgs) -> Result<Report, CliError> {
    let p = input::presentation(&args.presentation)?;
    let a = fpgroups::sigma1_upper_bound_capped(&p, args.cap.unwrap_or(DEFAULT_TAU1_CAP))?;
    Ok(Report::new(format!("{a}\n"), report::arrangement(&a)))
}

pub fn cover_z(args: &CoverZArgs) -> Result<Report, CliError> {
    let p = input::presentation(&args.presentation)?;
    let z = input::integers("--z", &args.z)?;
    Ok(Report::boolean("finite", fpgroups::cyclic_cover_finite(&p, &z)?))
}

pub fn sigma_member(args: &CharacterArgs, q: usize, coeff: &str) -> Result<Report, CliError> {
    let g = input::graph(&args.graph)?;
    let chi = input::character(g.names(), &args.chi)?;
    let coeff = input::coefficients(coeff)?;
    Ok(Report::boolean("member", raag::sigma_member(&g, &chi, q, coeff)?))
}

fn verdict_report(t: &SupportVerdictTable) -> Report {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|(w, good)| json!({ "support": names_of(&t.names, *w), "good": good }))
        .collect();
    Report::new(
        t.to_string(),
        json!({ "degree": t.degree, "coefficients": t.coefficients.to_string(), "supports": rows }),
    )
}

pub fn sigma_describe(graph: &Path, q: usize, coeff: &str, cap: Option<usize>) -> Result<Report, CliError> {
    let g = input::graph(graph)?;
    let coeff: Coefficients = input::coefficients(coeff)?;
    let t = raag::sigma_describe_capped(&g, q, coeff, cap.unwrap_or(DEFAULT_MAX_SWEEP_VERTICES))?;
    Ok(verdict_report(&t))
}

pub fn cover_toric(space: &SpaceInput, nu: &str, q: usize, field: &str, cap: Option<usize>) -> Result<Report, CliError> {
    let l = input::space(space)?;
    let nu = input::epimorphism(nu)?;
    let field = input::field(field)?;
    let finite = raag::dwyer_fried_toric_capped(&l, &nu, q, field, cap.unwrap_or(DEFAULT_MAX_SWEEP_VERTICES))?;
    Ok(Report::boolean("finite", finite))
}

pub fn artin_kernel_v11(args: &KernelArgs) -> Result<Report, CliError> {
    let g = input::graph(&args.character.graph)?;
    let chi = input::character(g.names(), &args.character.chi)?;
    let comps = raag::artin_kernel_v11(&g, &chi, args.assume_trivial_monodromy)?;
    let mut text = format!("assumed trivial monodromy: {}\n", args.assume_trivial_monodromy);
    let mut rows = Vec::new();
    for (w, dim) in &comps {
        text.push_str(&format!("W = {}: dim {dim}\n", format_set(g.names(), *w)));
        rows.push(json!({ "support": names_of(g.names(), *w), "dim": dim }));
    }
    Ok(Report::new(
        text,
        json!({ "assumed": args.assume_trivial_monodromy, "components": rows }),
    ))
}

pub fn artin_kernel_sigma1(args: &KernelArgs) -> Result<Report, CliError> {
    let g = input::graph(&args.character.graph)?;
    let chi = input::character(g.names(), &args.character.chi)?;
    let b = raag::artin_kernel_sigma1_bound(&g, &chi, args.assume_trivial_monodromy)?;
    let cuts: Vec<String> = b.cut_vertices.iter().map(|&v| g.name(v).to_string()).collect();
    let mut text = format!("assumed trivial monodromy: {}\n", b.assumed);
    text.push_str(&format!(
        "arrangement: {}\nempty_sigma: {}\ncut vertices: [{}]\n",
        b.arrangement,
        b.empty_sigma,
        cuts.join(", ")
    ));
    Ok(Report::new(
        text,
        json!({
            "assumed": b.assumed,
            "arrangement": report::arrangement(&b.arrangement),
            "empty_sigma": b.empty_sigma,
            "cut_vertices": cuts,
        }),
    ))
}

pub fn bb_predicates(graph: &Path) -> Result<Report, CliError> {
    let g = input::graph(graph)?;
    let p = raag::bestvina_brady_predicates(&g);
    Ok(Report::new(
        p.to_string(),
        json!({
            "fg": p.fg,
            "h1_monodromy_trivial": p.h1_monodromy_trivial,
            "h12_monodromy_trivial": p.h12_monodromy_trivial,
            "fp_necessary": p.fp_necessary,
            "h1_rank": p.h1_rank,
            "h1_torsion": p.h1_torsion.iter().map(int).collect::<Vec<_>>(),
        }),
    ))
}
