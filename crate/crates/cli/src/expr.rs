//! Parser for generator lists.
//!
//! Generators are separated by top-level commas. Each generator is either a
//! linear expression in the basis symbols (`x2`, `x3 - x1`, `2*x1 + x3`,
//! `0`) or an explicit coordinate vector (`[0, 1, 0, 0]`). Coefficients are
//! integers and are reduced into the algebra's characteristic; the display
//! form keeps the terms as typed, so `x3 - x1` echoes back unchanged.

use liealg::{AlgebraElement, CoordVector, LieAlgebra, Scalar};

/// Parse failures split by exit code: `Syntax` is a malformed expression,
/// `Semantic` is a well-formed generator that does not fit the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    Syntax(String),
    Semantic(String),
}

impl std::fmt::Display for GenError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenError::Syntax(m) | GenError::Semantic(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ParsedGenerator {
    pub display: String,
    pub element: AlgebraElement,
}

/// Splits on commas that are not nested inside brackets or parentheses.
fn split_top_level(input: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in input.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                current.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                current.push(ch);
            }
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut current));
            }
            _ => current.push(ch),
        }
    }
    parts.push(current);
    parts
}

pub fn parse_generators(input: &str, l: &LieAlgebra) -> Result<Vec<ParsedGenerator>, GenError> {
    // Typeset sources often carry the Unicode minus sign.
    let normalized = input.replace('\u{2212}', "-");
    let trimmed = normalized.trim();
    if trimmed.is_empty() {
        return Err(GenError::Syntax("empty generator list".into()));
    }
    split_top_level(trimmed)
        .iter()
        .map(|part| parse_generator(part.trim(), l))
        .collect()
}

fn parse_generator(text: &str, l: &LieAlgebra) -> Result<ParsedGenerator, GenError> {
    if text.is_empty() {
        return Err(GenError::Syntax("empty generator".into()));
    }
    if text.starts_with('[') || text.starts_with('(') {
        parse_vector(text, l)
    } else {
        parse_expression(text, l)
    }
}

fn parse_vector(text: &str, l: &LieAlgebra) -> Result<ParsedGenerator, GenError> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .or_else(|| text.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
        .ok_or_else(|| GenError::Syntax(format!("unbalanced brackets in '{text}'")))?;
    let mut values = Vec::new();
    for piece in inner.split(',') {
        let v: i64 = piece
            .trim()
            .parse()
            .map_err(|_| GenError::Syntax(format!("'{}' is not an integer", piece.trim())))?;
        values.push(v);
    }
    if values.len() != l.dim() {
        return Err(GenError::Semantic(format!(
            "coordinate vector has {} entries, algebra dimension is {}",
            values.len(),
            l.dim()
        )));
    }
    let element = l
        .element_from_integers(&values)
        .map_err(|e| GenError::Semantic(e.to_string()))?;
    let display = render_terms(
        &values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (v, i + 1))
            .collect::<Vec<_>>(),
    );
    Ok(ParsedGenerator { display, element })
}

/// One `k * x_i` summand with the coefficient as typed (1-based index).
type Term = (i64, usize);

fn parse_expression(text: &str, l: &LieAlgebra) -> Result<ParsedGenerator, GenError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<Term> = Vec::new();
    let mut chunk = String::new();
    let mut chunks: Vec<String> = Vec::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            chunks.push(std::mem::take(&mut chunk));
        }
        chunk.push(ch);
    }
    chunks.push(chunk);
    for piece in &chunks {
        if let Some(term) = parse_term(piece)? {
            terms.push(term);
        }
    }
    for &(_, index) in &terms {
        if index == 0 || index > l.dim() {
            return Err(GenError::Semantic(format!(
                "x{index} is outside the algebra (dimension {})",
                l.dim()
            )));
        }
    }
    let mut coords = CoordVector::zeros(l.characteristic(), l.dim());
    for &(coeff, index) in &terms {
        let scaled = l
            .basis_element(index - 1)
            .coords()
            .scaled(&Scalar::from_integer(coeff, l.characteristic()))
            .expect("same field");
        coords = coords.add(&scaled).expect("same shape");
    }
    Ok(ParsedGenerator {
        display: render_terms(&terms),
        element: l.element(coords).expect("built from the basis"),
    })
}

/// Parses one signed summand: `xi`, `-xi`, `k*xi`, `kxi`, or a bare `0`
/// (which contributes nothing). Returns `None` for the zero summand.
fn parse_term(piece: &str) -> Result<Option<Term>, GenError> {
    let (sign, body) = match piece.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, piece.strip_prefix('+').unwrap_or(piece)),
    };
    if body.is_empty() {
        return Err(GenError::Syntax(format!("dangling sign in '{piece}'")));
    }
    if body == "0" {
        return Ok(None);
    }
    let Some(x_pos) = body.find('x') else {
        return Err(GenError::Syntax(format!(
            "'{piece}' is not a term of the form k*xi"
        )));
    };
    let coeff_text = body[..x_pos].trim_end_matches('*');
    let coeff: i64 = if coeff_text.is_empty() {
        1
    } else {
        coeff_text
            .parse()
            .map_err(|_| GenError::Syntax(format!("bad coefficient '{coeff_text}' in '{piece}'")))?
    };
    let index: usize = body[x_pos + 1..]
        .parse()
        .map_err(|_| GenError::Syntax(format!("bad basis index in '{piece}'")))?;
    Ok(Some((sign * coeff, index)))
}

/// Renders terms in their given order: `x3 - x1`, `2 x4`.
fn render_terms(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, &(coeff, index)) in terms.iter().enumerate() {
        let magnitude = coeff.unsigned_abs();
        if pos == 0 {
            if coeff < 0 {
                out.push('-');
            }
        } else if coeff < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if magnitude != 1 {
            out.push_str(&format!("{magnitude} "));
        }
        out.push_str(&format!("x{index}"));
    }
    out
}
