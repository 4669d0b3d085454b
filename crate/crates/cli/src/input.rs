use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;

use sigmaloci::exactlin::{Coefficients, Field, FieldOps};
use sigmaloci::fpgroups::{parse_presentation, GroupPresentation};
use sigmaloci::raag::{parse_character, parse_epimorphism, Character, EpimorphismZr};
use sigmaloci::simplicial::{parse_complex, parse_graph, Graph, SimplicialComplex, VertexSet};

use crate::error::CliError;
use crate::SpaceInput;

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    parse_complex(&read(path)?).map_err(CliError::input(path.display().to_string()))
}

pub fn graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(CliError::input(path.display().to_string()))
}

pub fn space(input: &SpaceInput) -> Result<SimplicialComplex, CliError> {
    match (&input.complex, &input.graph) {
        (Some(p), _) => complex(p),
        (None, Some(p)) => Ok(graph(p)?.flag_complex()),
        (None, None) => Err(CliError::Usage("pass --complex or --graph".into())),
    }
}

pub fn presentation(path: &Path) -> Result<GroupPresentation, CliError> {
    parse_presentation(&read(path)?).map_err(CliError::input(path.display().to_string()))
}

pub fn coefficients(s: &str) -> Result<Coefficients, CliError> {
    Coefficients::from_str(s).map_err(CliError::input("--coeff"))
}

pub fn field(s: &str) -> Result<Field, CliError> {
    Field::from_str(s).map_err(CliError::input("--field"))
}

pub fn character(names: &[String], s: &str) -> Result<Character, CliError> {
    parse_character(s, names).map_err(CliError::input("--chi"))
}

pub fn epimorphism(s: &str) -> Result<EpimorphismZr, CliError> {
    parse_epimorphism(s).map_err(CliError::input("--nu"))
}

pub fn vertex_set(names: &[String], s: &str) -> Result<VertexSet, CliError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            names
                .iter()
                .position(|n| n == t)
                .ok_or_else(|| CliError::Input {
                    context: "--support".into(),
                    source: sigmaloci::Error::UnknownVertex(t.into()),
                })
        })
        .collect()
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty())
}

pub fn integers(flag: &str, s: &str) -> Result<Vec<i64>, CliError> {
    tokens(s)
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("{flag}: bad integer `{t}`"))))
        .collect()
}

pub fn point<F: FieldOps>(k: &F, s: &str) -> Result<Vec<F::Elem>, CliError> {
    tokens(s)
        .map(|t| {
            let q: BigRational = t
                .parse()
                .map_err(|_| CliError::Usage(format!("--point: bad coordinate `{t}`")))?;
            k.from_rational(&q).map_err(CliError::input("--point"))
        })
        .collect()
}
