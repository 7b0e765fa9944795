//! Reading and writing the three text formats (.cplx complexes, .ideal
//! squarefree monomial ideals, .fam set families) and the JSON complex
//! encoding.
//!
//! Text formats share one shape: a header line with a keyword and a size,
//! then one line per facet / generator / member set, listing vertex indices
//! separated by spaces. `#` starts a comment, blank lines are ignored. A
//! .cplx body may instead be the literal `void` (no faces) or `empty` (only
//! the empty face).

use serde::{Deserialize, Serialize};

use crate::algebra::MonomialIdealInput;
use crate::bounds::SetFamily;
use crate::complex::{SimplicialComplex, Status, VertexSet};
use crate::error::Error;

/// Errors from parsing input files, with 1-based line numbers.
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, message: message.into() }
}

/// Significant lines of a text file: comments stripped, blanks skipped,
/// original line numbers retained.
fn significant_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((idx + 1, line))
        }
    })
}

fn header_value(line_no: usize, line: &str, keyword: &str) -> Result<usize, IoError> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(parse_err(line_no, format!("expected `{keyword} <size>` header")));
    }
    let value = parts
        .next()
        .ok_or_else(|| parse_err(line_no, format!("`{keyword}` needs a size")))?;
    if parts.next().is_some() {
        return Err(parse_err(line_no, "trailing tokens after header"));
    }
    value
        .parse()
        .map_err(|_| parse_err(line_no, format!("invalid size {value:?}")))
}

fn parse_vertex_line(line_no: usize, line: &str, ground: usize) -> Result<VertexSet, IoError> {
    let mut set = VertexSet::EMPTY;
    for tok in line.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| parse_err(line_no, format!("invalid vertex {tok:?}")))?;
        if v >= ground {
            return Err(parse_err(
                line_no,
                Error::VertexOutOfRange { vertex: v, ground }.to_string(),
            ));
        }
        if set.contains(v) {
            return Err(parse_err(line_no, format!("repeated vertex {v}")));
        }
        set = set.with(v);
    }
    Ok(set)
}

/// Parse the `.cplx` text format. A file with a header and no facet lines
/// denotes the void complex, as does the explicit literal `void`.
pub fn parse_complex_text(src: &str) -> Result<SimplicialComplex, IoError> {
    let mut lines = significant_lines(src);
    let (line_no, header) =
        lines.next().ok_or_else(|| parse_err(1, "missing `n <size>` header"))?;
    let n = header_value(line_no, header, "n")?;

    let mut facets = Vec::new();
    let mut saw_void = None;
    for (line_no, line) in lines {
        match line {
            "void" => saw_void = Some(line_no),
            "empty" => facets.push(VertexSet::EMPTY),
            _ => facets.push(parse_vertex_line(line_no, line, n)?),
        }
    }
    if let Some(line_no) = saw_void {
        if !facets.is_empty() {
            return Err(parse_err(line_no, "`void` cannot be combined with facets"));
        }
        return Ok(SimplicialComplex::void(n)?);
    }
    Ok(SimplicialComplex::from_facets(n, &facets)?)
}

/// Parse the `.ideal` text format; no generator lines means the zero ideal.
pub fn parse_ideal_text(src: &str) -> Result<MonomialIdealInput, IoError> {
    let mut lines = significant_lines(src);
    let (line_no, header) =
        lines.next().ok_or_else(|| parse_err(1, "missing `vars <n>` header"))?;
    let n = header_value(line_no, header, "vars")?;

    let mut generators = Vec::new();
    for (line_no, line) in lines {
        generators.push(parse_vertex_line(line_no, line, n)?);
    }
    Ok(MonomialIdealInput::new(n, &generators)?)
}

/// Parse the `.fam` text format; every line after the header is one member
/// set, so empty member sets are not representable in text.
pub fn parse_family_text(src: &str) -> Result<SetFamily, IoError> {
    let mut lines = significant_lines(src);
    let (line_no, header) =
        lines.next().ok_or_else(|| parse_err(1, "missing `ground <g>` header"))?;
    let g = header_value(line_no, header, "ground")?;

    let mut sets = Vec::new();
    for (line_no, line) in lines {
        sets.push(parse_vertex_line(line_no, line, g)?);
    }
    Ok(SetFamily::new(g, sets)?)
}

pub fn complex_to_text(x: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", x.ground_size());
    if x.is_void() {
        out.push_str("void\n");
        return out;
    }
    for f in x.facets() {
        if f.is_empty() {
            out.push_str("empty\n");
        } else {
            let verts: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
            out.push_str(&verts.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn ideal_to_text(ideal: &MonomialIdealInput) -> String {
    let mut out = format!("vars {}\n", ideal.variables());
    for g in ideal.generators() {
        let verts: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
        out.push_str(&verts.join(" "));
        out.push('\n');
    }
    out
}

pub fn family_to_text(fam: &SetFamily) -> String {
    let mut out = format!("ground {}\n", fam.ground_size());
    for s in fam.sets() {
        let verts: Vec<String> = s.vertices().map(|v| v.to_string()).collect();
        out.push_str(&verts.join(" "));
        out.push('\n');
    }
    out
}

/// JSON encoding of a complex.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    pub status: String,
}

impl ComplexJson {
    pub fn of(x: &SimplicialComplex) -> Self {
        ComplexJson {
            n: x.ground_size(),
            facets: x.facets().iter().map(|f| f.vertices().collect()).collect(),
            status: match x.status() {
                Status::Void => "void".to_string(),
                Status::NonVoid => "nonvoid".to_string(),
            },
        }
    }

    pub fn into_complex(self) -> Result<SimplicialComplex, IoError> {
        match self.status.as_str() {
            "void" => {
                if !self.facets.is_empty() {
                    return Err(parse_err(1, "void complex cannot list facets"));
                }
                Ok(SimplicialComplex::void(self.n)?)
            }
            "nonvoid" => {
                let mut facets = Vec::with_capacity(self.facets.len());
                for f in &self.facets {
                    let mut set = VertexSet::EMPTY;
                    for &v in f {
                        if v >= self.n {
                            return Err(IoError::Domain(Error::VertexOutOfRange {
                                vertex: v,
                                ground: self.n,
                            }));
                        }
                        set = set.with(v);
                    }
                    facets.push(set);
                }
                if facets.is_empty() {
                    return Err(parse_err(1, "nonvoid complex needs at least one facet"));
                }
                Ok(SimplicialComplex::from_facets(self.n, &facets)?)
            }
            other => Err(parse_err(1, format!("unknown status {other:?}"))),
        }
    }
}

pub fn parse_complex_json(src: &str) -> Result<SimplicialComplex, IoError> {
    let dto: ComplexJson = serde_json::from_str(src)?;
    dto.into_complex()
}

pub fn complex_to_json(x: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(&ComplexJson::of(x)).expect("DTO serialization")
}

/// Parse a complex from either encoding: JSON when the first significant
/// byte is `{`, the text format otherwise.
pub fn parse_complex_any(src: &str) -> Result<SimplicialComplex, IoError> {
    if src.trim_start().starts_with('{') {
        parse_complex_json(src)
    } else {
        parse_complex_text(src)
    }
}

/// Either kind of algebraic input accepted by the ideal-facing commands.
pub enum AlgebraInput {
    Complex(SimplicialComplex),
    Ideal(MonomialIdealInput),
}

/// Dispatch on the leading token: `{` (JSON complex), `n` (.cplx), or
/// `vars` (.ideal).
pub fn parse_algebra_input(src: &str) -> Result<AlgebraInput, IoError> {
    let trimmed = src.trim_start();
    if trimmed.starts_with('{') {
        return Ok(AlgebraInput::Complex(parse_complex_json(src)?));
    }
    match significant_lines(src).next() {
        Some((_, line)) if line.starts_with("vars") => {
            Ok(AlgebraInput::Ideal(parse_ideal_text(src)?))
        }
        _ => Ok(AlgebraInput::Complex(parse_complex_text(src)?)),
    }
}
