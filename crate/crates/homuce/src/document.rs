//! The fixture document format: a line-oriented text form for algebras,
//! coefficient modules and homomorphisms.
//!
//! Basis elements are referred to by label, never by position, so fixtures
//! read like the presentations they transcribe; unwritten brackets are zero.
//! Serialization is canonical (brackets sorted by label pair, matrices
//! always written as explicit rows), and `parse(serialize(d)) == d`.
//!
//! ```text
//! algebra K {
//!   field rational
//!   flavor leibniz
//!   basis a1 a2 a3
//!   alpha zero
//!   bracket [a2,a2] = a1
//!   bracket [a3,a2] = a3
//!   bracket [a3,a3] = a2
//! }
//!
//! hom pi { src K dst L rows [ 0 1 0 ; 0 0 1 ] }
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{Flavor, HomAlgebra};
use crate::matrix::{vec_is_zero, Matrix};
use crate::scalar::{is_square_free, Scalar, ScalarError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Quadratic(u64),
}

impl FieldSpec {
    fn expected_d(self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Quadratic(d) => Some(d),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorepSpec {
    pub mdim: usize,
    pub alpha_m: Matrix,
    pub lam: Vec<Matrix>,
    pub rho: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDocument {
    pub name: String,
    pub field: FieldSpec,
    pub algebra: HomAlgebra,
    pub corep: Option<CorepSpec>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomDocument {
    pub name: String,
    pub src: String,
    pub dst: String,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Document {
    pub algebras: Vec<AlgebraDocument>,
    pub homs: Vec<HomDocument>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}: expected {expected}")]
    Parse { line: usize, expected: String },
    #[error("line {line}: unknown label '{label}'")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: dimension mismatch: {detail}")]
    DimensionMismatch { line: usize, detail: String },
    #[error("line {line}: {source}")]
    Scalar {
        line: usize,
        #[source]
        source: ScalarError,
    },
    #[error("line {line}: duplicate name '{name}'")]
    DuplicateName { line: usize, name: String },
    #[error("hom '{hom}' references unknown algebra '{algebra}'")]
    UnknownAlgebra { hom: String, algebra: String },
}

fn perr(line: usize, expected: impl Into<String>) -> DocumentError {
    DocumentError::Parse {
        line,
        expected: expected.into(),
    }
}

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Parses a matrix literal `rows [ e e ; e e ]` (everything after `rows`).
fn parse_rows(
    line_no: usize,
    text: &str,
    expect_d: Option<u64>,
    cols_hint: Option<usize>,
) -> Result<Matrix, DocumentError> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| perr(line_no, "matrix rows enclosed in [ ... ]"))?;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for row_text in inner.split(';') {
        let mut row = Vec::new();
        for tok in row_text.split_whitespace() {
            let s = Scalar::parse(tok, expect_d)
                .map_err(|source| DocumentError::Scalar { line: line_no, source })?;
            if expect_d.is_none() && !s.is_rational() {
                return Err(perr(line_no, "rational entry (field is rational)"));
            }
            row.push(s);
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(Matrix::zero(0, cols_hint.unwrap_or(0)));
    }
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return Err(perr(line_no, "rows of equal length"));
    }
    Ok(Matrix::from_rows(rows))
}

/// Parses a linear combination of labels with optional scalar coefficients:
/// `a1`, `(3/2)*a1 + a2`, `1/2*sqrt(2)*x`, or `0`.
fn parse_lincomb(
    line_no: usize,
    text: &str,
    labels: &[String],
    expect_d: Option<u64>,
) -> Result<Vec<Scalar>, DocumentError> {
    let stripped: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = vec![Scalar::zero(); labels.len()];
    if stripped == "0" {
        return Ok(out);
    }
    if stripped.is_empty() {
        return Err(perr(line_no, "linear combination"));
    }
    // split into signed terms at top-level + and -
    let bytes = stripped.as_bytes();
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut negate = false;
    let mut i = 0usize;
    if bytes[0] == b'+' || bytes[0] == b'-' {
        negate = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b'+' | b'-' if depth == 0 => {
                terms.push((negate, stripped[start..i].to_string()));
                negate = bytes[i] == b'-';
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    terms.push((negate, stripped[start..].to_string()));

    for (neg, term) in terms {
        if term.is_empty() {
            return Err(perr(line_no, "nonempty term"));
        }
        let (coeff, label) = if let Some(rest) = term.strip_prefix('(') {
            let close = rest
                .find(')')
                .ok_or_else(|| perr(line_no, "closing ')' in coefficient"))?;
            let coeff = Scalar::parse(&rest[..close], expect_d)
                .map_err(|source| DocumentError::Scalar { line: line_no, source })?;
            let tail = rest[close + 1..]
                .strip_prefix('*')
                .ok_or_else(|| perr(line_no, "'*' after coefficient"))?;
            (coeff, tail.to_string())
        } else if valid_label(&term) {
            (Scalar::one(), term)
        } else if let Some(split) = term.rfind('*') {
            let coeff = Scalar::parse(&term[..split], expect_d)
                .map_err(|source| DocumentError::Scalar { line: line_no, source })?;
            (coeff, term[split + 1..].to_string())
        } else {
            return Err(perr(line_no, "term of the form [coefficient*]label"));
        };
        if expect_d.is_none() && !coeff.is_rational() {
            return Err(perr(line_no, "rational coefficient (field is rational)"));
        }
        let idx = labels
            .iter()
            .position(|l| *l == label)
            .ok_or(DocumentError::UnknownLabel {
                line: line_no,
                label: label.clone(),
            })?;
        let signed = if neg { -&coeff } else { coeff };
        out[idx] = &out[idx] + &signed;
    }
    Ok(out)
}

struct AlgebraBuilder {
    line: usize,
    name: String,
    field: FieldSpec,
    flavor: Flavor,
    labels: Vec<String>,
    alpha: Option<Matrix>,
    brackets: Vec<(usize, usize, Vec<Scalar>)>,
    corep: Option<CorepBuilder>,
}

struct CorepBuilder {
    mdim: Option<usize>,
    alpha_m: Option<Matrix>,
    lam: Vec<(usize, Matrix)>,
    rho: Vec<(usize, Matrix)>,
}

impl AlgebraBuilder {
    fn finish(self) -> Result<AlgebraDocument, DocumentError> {
        let dim = self.labels.len();
        let alpha = self.alpha.unwrap_or_else(|| Matrix::identity(dim));
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(DocumentError::DimensionMismatch {
                line: self.line,
                detail: format!(
                    "alpha is {}x{} but the basis has {dim} elements",
                    alpha.rows(),
                    alpha.cols()
                ),
            });
        }
        let mut algebra = HomAlgebra::zero_bracket(self.labels.clone(), alpha, self.flavor);
        for (i, j, v) in self.brackets {
            algebra.set_bracket(i, j, v);
        }
        let corep = match self.corep {
            None => None,
            Some(cb) => {
                let mdim = cb.mdim.ok_or_else(|| perr(self.line, "mdim in corep block"))?;
                let alpha_m = cb.alpha_m.unwrap_or_else(|| Matrix::identity(mdim));
                let mut lam = vec![Matrix::zero(mdim, mdim); dim];
                let mut rho = vec![Matrix::zero(mdim, mdim); dim];
                for (i, m) in cb.lam {
                    lam[i] = m;
                }
                for (i, m) in cb.rho {
                    rho[i] = m;
                }
                for m in lam.iter().chain(rho.iter()).chain([&alpha_m]) {
                    if m.rows() != mdim || m.cols() != mdim {
                        return Err(DocumentError::DimensionMismatch {
                            line: self.line,
                            detail: "corep matrices must be mdim x mdim".into(),
                        });
                    }
                }
                Some(CorepSpec {
                    mdim,
                    alpha_m,
                    lam,
                    rho,
                })
            }
        };
        Ok(AlgebraDocument {
            name: self.name,
            field: self.field,
            algebra,
            corep,
        })
    }
}

/// Parses one document. Error positions are 1-based line numbers.
pub fn parse(text: &str) -> Result<Document, DocumentError> {
    enum State {
        Top,
        Algebra(AlgebraBuilder),
        Corep(AlgebraBuilder),
        Hom {
            line: usize,
            name: String,
            src: Option<String>,
            dst: Option<String>,
            matrix: Option<Matrix>,
        },
    }
    let mut doc = Document::default();
    let mut state = State::Top;
    let mut names: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = match line.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (line, ""),
        };
        state = match state {
            State::Top => match head {
                "algebra" => {
                    let name = rest
                        .strip_suffix('{')
                        .map(str::trim)
                        .filter(|n| valid_label(n))
                        .ok_or_else(|| perr(line_no, "algebra NAME {"))?;
                    if names.iter().any(|n| n == name) {
                        return Err(DocumentError::DuplicateName {
                            line: line_no,
                            name: name.into(),
                        });
                    }
                    names.push(name.into());
                    State::Algebra(AlgebraBuilder {
                        line: line_no,
                        name: name.into(),
                        field: FieldSpec::Rational,
                        flavor: Flavor::Leibniz,
                        labels: Vec::new(),
                        alpha: None,
                        brackets: Vec::new(),
                        corep: None,
                    })
                }
                "hom" => {
                    let name = rest
                        .strip_suffix('{')
                        .map(str::trim)
                        .filter(|n| valid_label(n))
                        .ok_or_else(|| perr(line_no, "hom NAME {"))?;
                    if names.iter().any(|n| n == name) {
                        return Err(DocumentError::DuplicateName {
                            line: line_no,
                            name: name.into(),
                        });
                    }
                    names.push(name.into());
                    State::Hom {
                        line: line_no,
                        name: name.into(),
                        src: None,
                        dst: None,
                        matrix: None,
                    }
                }
                _ => return Err(perr(line_no, "'algebra NAME {' or 'hom NAME {'")),
            },
            State::Algebra(mut b) => match head {
                "}" => {
                    doc.algebras.push(b.finish()?);
                    State::Top
                }
                "field" => {
                    b.field = match rest {
                        "rational" => FieldSpec::Rational,
                        other => {
                            let d: u64 = other
                                .strip_prefix("quadratic(")
                                .and_then(|t| t.strip_suffix(')'))
                                .and_then(|t| t.parse().ok())
                                .ok_or_else(|| perr(line_no, "rational or quadratic(d)"))?;
                            if !is_square_free(d) {
                                return Err(DocumentError::Scalar {
                                    line: line_no,
                                    source: ScalarError::BadSurdIndex(d),
                                });
                            }
                            FieldSpec::Quadratic(d)
                        }
                    };
                    State::Algebra(b)
                }
                "flavor" => {
                    b.flavor = match rest {
                        "leibniz" => Flavor::Leibniz,
                        "lie" => Flavor::Lie,
                        _ => return Err(perr(line_no, "leibniz or lie")),
                    };
                    State::Algebra(b)
                }
                "basis" => {
                    let labels: Vec<String> = rest.split_whitespace().map(String::from).collect();
                    if labels.is_empty() || !labels.iter().all(|l| valid_label(l)) {
                        return Err(perr(line_no, "one or more basis labels"));
                    }
                    for (i, l) in labels.iter().enumerate() {
                        if labels[..i].contains(l) {
                            return Err(DocumentError::DuplicateName {
                                line: line_no,
                                name: l.clone(),
                            });
                        }
                    }
                    b.labels = labels;
                    State::Algebra(b)
                }
                "alpha" => {
                    let dim = b.labels.len();
                    b.alpha = Some(match rest {
                        "id" => Matrix::identity(dim),
                        "zero" => Matrix::zero(dim, dim),
                        other => {
                            let body = other
                                .strip_prefix("rows")
                                .ok_or_else(|| perr(line_no, "id, zero or rows [...]"))?;
                            parse_rows(line_no, body, b.field.expected_d(), Some(dim))?
                        }
                    });
                    State::Algebra(b)
                }
                "bracket" => {
                    let (pair, rhs) = rest
                        .split_once('=')
                        .ok_or_else(|| perr(line_no, "bracket [i,j] = value"))?;
                    let pair: String = pair.chars().filter(|c| !c.is_whitespace()).collect();
                    let inner = pair
                        .strip_prefix('[')
                        .and_then(|t| t.strip_suffix(']'))
                        .ok_or_else(|| perr(line_no, "bracket pair in [i,j]"))?;
                    let (li, lj) = inner
                        .split_once(',')
                        .ok_or_else(|| perr(line_no, "two labels separated by a comma"))?;
                    let find = |l: &str| {
                        b.labels.iter().position(|x| x == l).ok_or_else(|| {
                            DocumentError::UnknownLabel {
                                line: line_no,
                                label: l.into(),
                            }
                        })
                    };
                    let (i, j) = (find(li)?, find(lj)?);
                    let value = parse_lincomb(line_no, rhs, &b.labels, b.field.expected_d())?;
                    b.brackets.push((i, j, value));
                    State::Algebra(b)
                }
                "corep" => {
                    if rest != "{" {
                        return Err(perr(line_no, "corep {"));
                    }
                    b.corep = Some(CorepBuilder {
                        mdim: None,
                        alpha_m: None,
                        lam: Vec::new(),
                        rho: Vec::new(),
                    });
                    State::Corep(b)
                }
                _ => return Err(perr(line_no, "algebra item or '}'")),
            },
            State::Corep(mut b) => {
                let cb = b.corep.as_mut().expect("in corep state");
                match head {
                    "}" => State::Algebra(b),
                    "mdim" => {
                        cb.mdim = Some(
                            rest.parse()
                                .map_err(|_| perr(line_no, "mdim COUNT"))?,
                        );
                        State::Corep(b)
                    }
                    "alpha_m" => {
                        let mdim = cb.mdim.ok_or_else(|| perr(line_no, "mdim before alpha_m"))?;
                        cb.alpha_m = Some(match rest {
                            "id" => Matrix::identity(mdim),
                            "zero" => Matrix::zero(mdim, mdim),
                            other => {
                                let body = other
                                    .strip_prefix("rows")
                                    .ok_or_else(|| perr(line_no, "id, zero or rows [...]"))?;
                                parse_rows(line_no, body, b.field.expected_d(), Some(mdim))?
                            }
                        });
                        State::Corep(b)
                    }
                    "lam" | "rho" => {
                        let (label, body) = rest
                            .split_once(char::is_whitespace)
                            .ok_or_else(|| perr(line_no, "lam LABEL rows [...]"))?;
                        let i = b.labels.iter().position(|l| l == label).ok_or_else(|| {
                            DocumentError::UnknownLabel {
                                line: line_no,
                                label: label.into(),
                            }
                        })?;
                        let body = body
                            .trim()
                            .strip_prefix("rows")
                            .ok_or_else(|| perr(line_no, "rows [...]"))?;
                        let m = parse_rows(line_no, body, b.field.expected_d(), None)?;
                        if head == "lam" {
                            cb.lam.push((i, m));
                        } else {
                            cb.rho.push((i, m));
                        }
                        State::Corep(b)
                    }
                    _ => return Err(perr(line_no, "corep item or '}'")),
                }
            }
            State::Hom {
                line,
                name,
                mut src,
                mut dst,
                mut matrix,
            } => match head {
                "}" => {
                    doc.homs.push(HomDocument {
                        name,
                        src: src.ok_or_else(|| perr(line, "src in hom block"))?,
                        dst: dst.ok_or_else(|| perr(line, "dst in hom block"))?,
                        matrix: matrix.ok_or_else(|| perr(line, "rows in hom block"))?,
                    });
                    State::Top
                }
                "src" => {
                    src = Some(rest.into());
                    State::Hom {
                        line,
                        name,
                        src,
                        dst,
                        matrix,
                    }
                }
                "dst" => {
                    dst = Some(rest.into());
                    State::Hom {
                        line,
                        name,
                        src,
                        dst,
                        matrix,
                    }
                }
                "rows" => {
                    matrix = Some(parse_rows(line_no, rest, None, None).or_else(|_| {
                        // hom matrices may carry surd entries of either side's field
                        parse_rows_any(line_no, rest)
                    })?);
                    State::Hom {
                        line,
                        name,
                        src,
                        dst,
                        matrix,
                    }
                }
                _ => return Err(perr(line_no, "hom item or '}'")),
            },
        };
    }
    match state {
        State::Top => {}
        _ => return Err(perr(text.lines().count(), "closing '}'")),
    }
    // hom blocks must reference declared algebras
    for h in &doc.homs {
        for side in [&h.src, &h.dst] {
            if !doc.algebras.iter().any(|a| a.name == *side) {
                return Err(DocumentError::UnknownAlgebra {
                    hom: h.name.clone(),
                    algebra: side.clone(),
                });
            }
        }
    }
    Ok(doc)
}

fn parse_rows_any(line_no: usize, text: &str) -> Result<Matrix, DocumentError> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| perr(line_no, "matrix rows enclosed in [ ... ]"))?;
    let mut rows = Vec::new();
    for row_text in inner.split(';') {
        let mut row = Vec::new();
        for tok in row_text.split_whitespace() {
            row.push(
                Scalar::parse(tok, None)
                    .map_err(|source| DocumentError::Scalar { line: line_no, source })?,
            );
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(Matrix::zero(0, 0));
    }
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return Err(perr(line_no, "rows of equal length"));
    }
    Ok(Matrix::from_rows(rows))
}

fn write_rows(out: &mut String, m: &Matrix) {
    out.push('[');
    for i in 0..m.rows() {
        if i > 0 {
            out.push_str(" ;");
        }
        for s in m.row(i) {
            let _ = write!(out, " {}", s.to_text());
        }
    }
    out.push_str(" ]");
}

fn write_lincomb(out: &mut String, labels: &[String], v: &[Scalar]) {
    if vec_is_zero(v) {
        out.push('0');
        return;
    }
    let mut first = true;
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            out.push_str(" + ");
        }
        first = false;
        if c.is_one() {
            out.push_str(&labels[i]);
        } else {
            let _ = write!(out, "({})*{}", c.to_text(), labels[i]);
        }
    }
}

/// Canonical serialization: stable field order, brackets sorted by label
/// pair, matrices as explicit rows.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    for a in &doc.algebras {
        let _ = writeln!(out, "algebra {} {{", a.name);
        match a.field {
            FieldSpec::Rational => out.push_str("  field rational\n"),
            FieldSpec::Quadratic(d) => {
                let _ = writeln!(out, "  field quadratic({d})");
            }
        }
        let _ = writeln!(
            out,
            "  flavor {}",
            match a.algebra.flavor() {
                Flavor::Leibniz => "leibniz",
                Flavor::Lie => "lie",
            }
        );
        let _ = writeln!(out, "  basis {}", a.algebra.labels().join(" "));
        out.push_str("  alpha rows ");
        write_rows(&mut out, a.algebra.alpha());
        out.push('\n');
        let labels = a.algebra.labels();
        let mut pairs: Vec<(String, String, usize, usize)> = Vec::new();
        for i in 0..a.algebra.dim() {
            for j in 0..a.algebra.dim() {
                if !vec_is_zero(a.algebra.bracket_basis(i, j)) {
                    pairs.push((labels[i].clone(), labels[j].clone(), i, j));
                }
            }
        }
        pairs.sort();
        for (li, lj, i, j) in pairs {
            let _ = write!(out, "  bracket [{li},{lj}] = ");
            write_lincomb(&mut out, labels, a.algebra.bracket_basis(i, j));
            out.push('\n');
        }
        if let Some(c) = &a.corep {
            out.push_str("  corep {\n");
            let _ = writeln!(out, "    mdim {}", c.mdim);
            out.push_str("    alpha_m rows ");
            write_rows(&mut out, &c.alpha_m);
            out.push('\n');
            for (i, m) in c.lam.iter().enumerate() {
                if !m.is_zero() {
                    let _ = write!(out, "    lam {} rows ", labels[i]);
                    write_rows(&mut out, m);
                    out.push('\n');
                }
            }
            for (i, m) in c.rho.iter().enumerate() {
                if !m.is_zero() {
                    let _ = write!(out, "    rho {} rows ", labels[i]);
                    write_rows(&mut out, m);
                    out.push('\n');
                }
            }
            out.push_str("  }\n");
        }
        out.push_str("}\n\n");
    }
    for h in &doc.homs {
        let _ = writeln!(out, "hom {} {{", h.name);
        let _ = writeln!(out, "  src {}", h.src);
        let _ = writeln!(out, "  dst {}", h.dst);
        out.push_str("  rows ");
        write_rows(&mut out, &h.matrix);
        out.push('\n');
        out.push_str("}\n\n");
    }
    out
}

impl Document {
    pub fn algebra(&self, name: &str) -> Option<&AlgebraDocument> {
        self.algebras.iter().find(|a| a.name == name)
    }

    /// Builds the validated co-representation attached to an algebra entry,
    /// or the ground field when none is declared.
    pub fn corep_for(
        &self,
        entry: &AlgebraDocument,
    ) -> Result<crate::corep::HomCoRep, crate::corep::CorepError> {
        match &entry.corep {
            None => Ok(crate::corep::HomCoRep::ground_field(&entry.algebra)),
            Some(spec) => crate::corep::HomCoRep::new(
                entry.algebra.clone(),
                spec.lam.clone(),
                spec.rho.clone(),
                spec.alpha_m.clone(),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const K_DOC: &str = "\
# composition counterexample, middle algebra
algebra K {
  field rational
  flavor leibniz
  basis a1 a2 a3
  alpha zero
  bracket [a2,a2] = a1
  bracket [a3,a2] = a3
  bracket [a3,a3] = a2
}
";

    #[test]
    fn parses_the_counterexample_document() {
        let doc = parse(K_DOC).unwrap();
        assert_eq!(doc.algebras.len(), 1);
        let k = &doc.algebras[0];
        assert_eq!(k.name, "K");
        assert_eq!(k.algebra, crate::catalog::counterexample_k());
    }

    #[test]
    fn unknown_label_is_reported() {
        let bad = K_DOC.replace("[a3,a2] = a3", "[a3,zz] = a3");
        match parse(&bad) {
            Err(DocumentError::UnknownLabel { label, .. }) => assert_eq!(label, "zz"),
            other => panic!("expected UnknownLabel, got {other:?}"),
        }
    }

    #[test]
    fn sqrt2_entries_parse_in_a_quadratic_field() {
        let text = "\
algebra S {
  field quadratic(2)
  flavor lie
  basis a1 a2 a3
  alpha rows [ 1/2*sqrt(2) 0 1/2*sqrt(2) ; 0 -1 0 ; 1/2*sqrt(2) 0 -1/2*sqrt(2) ]
  bracket [a1,a2] = a3
  bracket [a2,a1] = (-1)*a3
  bracket [a2,a3] = a1
  bracket [a3,a2] = (-1)*a1
  bracket [a3,a1] = a2
  bracket [a1,a3] = (-1)*a2
}
";
        let doc = parse(text).unwrap();
        assert_eq!(doc.algebras[0].algebra, crate::catalog::sqrt2_example());
    }

    #[test]
    fn rational_field_rejects_surds() {
        let bad = K_DOC.replace("= a1", "= (1/2*sqrt(2))*a1");
        assert!(parse(&bad).is_err());
    }

    #[test]
    fn roundtrip_through_canonical_form() {
        let text = "\
algebra L {
  field rational
  flavor leibniz
  basis b1 b2
  alpha zero
  bracket [b2,b1] = b2
  bracket [b2,b2] = b1
  corep {
    mdim 2
    alpha_m rows [ 1 1 ; 0 1 ]
    lam b1 rows [ 0 1 ; 0 0 ]
  }
}

hom pi {
  src L
  dst L
  rows [ 1 0 ; 0 1 ]
}
";
        let doc = parse(text).unwrap();
        let canonical = serialize(&doc);
        let reparsed = parse(&canonical).unwrap();
        assert_eq!(doc, reparsed);
        assert_eq!(serialize(&reparsed), canonical, "canonical form is stable");
    }

    #[test]
    fn hom_with_unknown_algebra_is_rejected() {
        let text = format!("{K_DOC}\nhom pi {{\n  src K\n  dst Nowhere\n  rows [ 1 0 0 ]\n}}\n");
        assert!(matches!(
            parse(&text),
            Err(DocumentError::UnknownAlgebra { .. })
        ));
    }

    #[test]
    fn corep_block_resolves_to_a_validated_module() {
        let text = "\
algebra A {
  field rational
  flavor leibniz
  basis x y
  alpha id
  corep {
    mdim 1
    alpha_m id
  }
}
";
        let doc = parse(text).unwrap();
        let corep = doc.corep_for(&doc.algebras[0]).unwrap();
        assert_eq!(corep.mdim(), 1);
        assert!(corep.is_trivial());
    }
}
