use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::word::{parse_word, Word};
use crate::error::{Error, Result};
use crate::exactlin::{smith_normal_form_with_transforms, Field, IntegerMatrix, SmithForm};
use crate::simplicial::{keyed_lines, Graph};

/// `⟨x_1, …, x_n | r_1, …, r_m⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

/// Abelianization of a presented group via the Smith form of its exponent
/// matrix.
#[derive(Debug, Clone)]
pub struct AbelianizationData {
    /// `m × n`, row `i` the exponent sums of relator `i`.
    pub exponent_matrix: IntegerMatrix,
    pub smith: SmithForm,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// `r × n`: column `j` is the image of `x_j` in `Z^r = G_abf`.
    pub abf: Vec<Vec<i64>>,
}

impl AbelianizationData {
    /// Image of generator `j` in `G_abf`.
    pub fn generator_image(&self, j: usize) -> Vec<i64> {
        self.abf.iter().map(|row| row[j]).collect()
    }

    pub fn generator_images(&self) -> Vec<Vec<i64>> {
        (0..self.exponent_matrix.cols())
            .map(|j| self.generator_image(j))
            .collect()
    }

    /// `b_1` over the field: `n - rank_k(exponent matrix)`.
    pub fn betti1(&self, field: Field) -> usize {
        self.exponent_matrix.cols() - self.exponent_matrix.rank(field)
    }
}

impl GroupPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        check_generator_names(&names)?;
        if let Some(r) = relators.iter().find(|r| r.max_generator() > names.len()) {
            return Err(Error::InvalidArgument(format!(
                "relator {r} uses a generator beyond x{}",
                names.len()
            )));
        }
        Ok(GroupPresentation { names, relators })
    }

    /// Generators `x1..xn` and relators written in them.
    pub fn from_strs(n: usize, relators: &[&str]) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let rels = relators
            .iter()
            .map(|r| parse_word(r, &names))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, rels)
    }

    /// The right-angled Artin group of a graph: one commutator per edge.
    pub fn raag(g: &Graph) -> Self {
        let verts: Vec<usize> = g.vertex_set().iter().collect();
        let names: Vec<String> = verts.iter().map(|&v| g.name(v).to_string()).collect();
        let pos = |v: usize| verts.iter().position(|&u| u == v).expect("vertex") as i32 + 1;
        let relators = g
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (pos(a), pos(b));
                Word::from_letters([x, y, -x, -y])
            })
            .collect();
        GroupPresentation { names, relators }
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn num_relators(&self) -> usize {
        self.relators.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn exponent_matrix(&self) -> IntegerMatrix {
        let n = self.names.len();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_vector(n)).collect();
        IntegerMatrix::from_i64_rows(n, &rows).expect("rows have n entries")
    }

    pub fn abelianization(&self) -> Result<AbelianizationData> {
        let m = self.exponent_matrix();
        let smith = smith_normal_form_with_transforms(&m);
        let n = m.cols();
        let r = n - smith.rank;
        let v = smith.right.as_ref().expect("transforms kept");
        let abf = (0..r)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        v[(j, smith.rank + k)]
                            .to_i64()
                            .ok_or_else(|| Error::InvalidArgument("abelianization coordinates overflow".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let torsion = smith.torsion();
        Ok(AbelianizationData {
            exponent_matrix: m,
            free_rank: r,
            torsion,
            abf,
            smith,
        })
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.names.join(" "));
        for r in &self.relators {
            out.push_str(&format!("rel: {}\n", r.display_with(&self.names)));
        }
        out
    }
}

/// Parses `gens: x1 x2` and `rel: …` lines.
pub fn parse_presentation(src: &str) -> Result<GroupPresentation> {
    let mut names: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for item in keyed_lines(src) {
        let (line, key, value) = item?;
        match key {
            "gens" => {
                if names.is_some() {
                    return Err(Error::parse(line, "duplicate `gens:` line"));
                }
                let list: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                check_generator_names(&list).map_err(|e| Error::parse(line, e.to_string()))?;
                names = Some(list);
            }
            "rel" => {
                let gens = names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line, "`rel:` before `gens:`"))?;
                let w = parse_word(value, gens).map_err(|e| Error::parse(line, e.to_string()))?;
                relators.push(w);
            }
            _ => return Err(Error::parse(line, format!("unknown key `{key}`"))),
        }
    }
    let names = names.ok_or_else(|| Error::parse(1, "missing `gens:` line"))?;
    GroupPresentation::new(names, relators)
}

fn check_generator_names(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() || n == "1" || n.chars().any(|c| c.is_whitespace() || c == '^' || c == '*') {
            return Err(Error::InvalidArgument(format!("bad generator name `{n}`")));
        }
        if names[..i].contains(n) {
            return Err(Error::InvalidArgument(format!("duplicate generator `{n}`")));
        }
    }
    Ok(())
}
