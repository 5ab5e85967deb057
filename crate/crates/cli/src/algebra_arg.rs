//! Parsing and construction of the `--algebra` argument.

use std::path::PathBuf;

use liealg::{catalog, AlgebraDefinition, Characteristic, LieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraChoice {
    Gl(usize),
    Sl(usize),
    UpperTriangular(usize),
    StrictlyUpperTriangular(usize),
    Diagonal(usize),
    File(PathBuf),
}

/// Accepts `gl2`, `sl3`, `ut 3`, `sut3`, `diag 2`, `file:PATH`. The size
/// may be glued to the family name or separated by spaces.
pub fn parse_algebra(text: &str) -> Result<AlgebraChoice, String> {
    let trimmed = text.trim();
    if let Some(path) = trimmed.strip_prefix("file:") {
        if path.is_empty() {
            return Err("file: requires a path".to_string());
        }
        return Ok(AlgebraChoice::File(PathBuf::from(path)));
    }
    for (prefix, build) in [
        ("gl", AlgebraChoice::Gl as fn(usize) -> AlgebraChoice),
        ("sut", AlgebraChoice::StrictlyUpperTriangular),
        ("sl", AlgebraChoice::Sl),
        ("ut", AlgebraChoice::UpperTriangular),
        ("diag", AlgebraChoice::Diagonal),
    ] {
        if let Some(rest) = trimmed.strip_prefix(prefix) {
            let digits = rest.trim();
            if let Ok(m) = digits.parse::<usize>() {
                return Ok(build(m));
            }
        }
    }
    Err(format!(
        "unknown algebra '{trimmed}' (expected glN, slN, ut N, sut N, diag N, or file:PATH)"
    ))
}

/// The normalized name used in output and JSON envelopes.
pub fn choice_name(choice: &AlgebraChoice) -> String {
    match choice {
        AlgebraChoice::Gl(m) => format!("gl{m}"),
        AlgebraChoice::Sl(m) => format!("sl{m}"),
        AlgebraChoice::UpperTriangular(m) => format!("ut{m}"),
        AlgebraChoice::StrictlyUpperTriangular(m) => format!("sut{m}"),
        AlgebraChoice::Diagonal(m) => format!("diag{m}"),
        AlgebraChoice::File(path) => path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".to_string()),
    }
}

/// Builds the algebra together with its loader-compatible definition.
pub fn build_algebra(
    choice: &AlgebraChoice,
    c: Characteristic,
) -> Result<(LieAlgebra, String, AlgebraDefinition), String> {
    let (algebra, name) = match choice {
        AlgebraChoice::Gl(m) => (catalog::gl(*m, c), choice_name(choice)),
        AlgebraChoice::Sl(m) => (catalog::sl(*m, c), choice_name(choice)),
        AlgebraChoice::UpperTriangular(m) => {
            (catalog::upper_triangular(*m, c), choice_name(choice))
        }
        AlgebraChoice::StrictlyUpperTriangular(m) => (
            catalog::strictly_upper_triangular(*m, c),
            choice_name(choice),
        ),
        AlgebraChoice::Diagonal(m) => (catalog::diagonal(*m, c), choice_name(choice)),
        AlgebraChoice::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let def = AlgebraDefinition::from_json(&text).map_err(|e| e.to_string())?;
            let name = def.name.clone();
            (def.build(c), name)
        }
    };
    let algebra = algebra.map_err(|e| e.to_string())?;
    let def = catalog::to_definition(&algebra, &name).map_err(|e| e.to_string())?;
    Ok((algebra, name, def))
}
