//! Constructors for the standard matrix Lie algebras over any
//! characteristic, plus loading custom algebras from definition files.
//!
//! Basis conventions are fixed so results are reproducible: `gl(m)` uses
//! all elementary matrices `E_ij` in row-major order (so for `gl(2)` the
//! basis is `E11, E12, E21, E22`), and `sl(m)` lists the off-diagonal
//! `E_ij` row-major followed by the diagonal differences
//! `E_ii - E_{i+1,i+1}`.
//!
//! Definition files are JSON with integer matrix entries; the entries are
//! reduced into the requested characteristic at load time, so one file
//! serves every field.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra, MatrixRep};
use crate::scalar::Characteristic;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("matrix size must be at least {min}, got {got}")]
    SizeTooSmall { min: usize, got: usize },
    #[error(
        "definition declares matrix_size {declared} but basis matrix {index} is {rows}x{cols}"
    )]
    MatrixShape {
        index: usize,
        declared: usize,
        rows: usize,
        cols: usize,
    },
    #[error("definition contains no basis matrices")]
    EmptyBasis,
    #[error("basis matrix {index} has entries outside the integer range")]
    EntryOutOfRange { index: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("cannot read definition: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse definition: {0}")]
    Parse(#[from] serde_json::Error),
}

/// Full matrix algebra `gl(m)`: every `m x m` matrix, basis `E_ij`
/// row-major, dimension `m^2`.
pub fn gl(m: usize, c: Characteristic) -> Result<LieAlgebra, CatalogError> {
    if m < 1 {
        return Err(CatalogError::SizeTooSmall { min: 1, got: m });
    }
    let mut basis = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            basis.push(MatrixRep::elementary(c, m, i, j));
        }
    }
    Ok(LieAlgebra::from_matrices(basis)?)
}

/// Trace-zero matrices `sl(m)`: off-diagonal `E_ij` row-major, then
/// `E_ii - E_{i+1,i+1}`; dimension `m^2 - 1`. The set stays linearly
/// independent in every characteristic, including p | m where the
/// identity lands inside the algebra.
pub fn sl(m: usize, c: Characteristic) -> Result<LieAlgebra, CatalogError> {
    if m < 2 {
        return Err(CatalogError::SizeTooSmall { min: 2, got: m });
    }
    let mut basis = Vec::with_capacity(m * m - 1);
    for i in 0..m {
        for j in 0..m {
            if i != j {
                basis.push(MatrixRep::elementary(c, m, i, j));
            }
        }
    }
    for i in 0..(m - 1) {
        let diff = MatrixRep::elementary(c, m, i, i)
            .sub(&MatrixRep::elementary(c, m, i + 1, i + 1))
            .expect("same shape");
        basis.push(diff);
    }
    Ok(LieAlgebra::from_matrices(basis)?)
}

/// Upper-triangular matrices: `E_ij` with `i <= j`, row-major; dimension
/// `m(m+1)/2`.
pub fn upper_triangular(m: usize, c: Characteristic) -> Result<LieAlgebra, CatalogError> {
    if m < 1 {
        return Err(CatalogError::SizeTooSmall { min: 1, got: m });
    }
    let mut basis = Vec::new();
    for i in 0..m {
        for j in i..m {
            basis.push(MatrixRep::elementary(c, m, i, j));
        }
    }
    Ok(LieAlgebra::from_matrices(basis)?)
}

/// Strictly upper-triangular matrices: `E_ij` with `i < j`, row-major;
/// dimension `m(m-1)/2`. Requires `m >= 2` (the `m = 1` case would be the
/// zero algebra, which has no basis).
pub fn strictly_upper_triangular(m: usize, c: Characteristic) -> Result<LieAlgebra, CatalogError> {
    if m < 2 {
        return Err(CatalogError::SizeTooSmall { min: 2, got: m });
    }
    let mut basis = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            basis.push(MatrixRep::elementary(c, m, i, j));
        }
    }
    Ok(LieAlgebra::from_matrices(basis)?)
}

/// Diagonal matrices: `E_ii`; abelian of dimension `m`.
pub fn diagonal(m: usize, c: Characteristic) -> Result<LieAlgebra, CatalogError> {
    if m < 1 {
        return Err(CatalogError::SizeTooSmall { min: 1, got: m });
    }
    let basis = (0..m).map(|i| MatrixRep::elementary(c, m, i, i)).collect();
    Ok(LieAlgebra::from_matrices(basis)?)
}

/// On-disk algebra definition. The characteristic is never stored here; it
/// is supplied at load time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDefinition {
    pub name: String,
    pub matrix_size: usize,
    /// Basis matrices as integer grids, row-major.
    pub basis: Vec<Vec<Vec<i64>>>,
}

impl AlgebraDefinition {
    pub fn from_json(text: &str) -> Result<Self, CatalogError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("definition serializes")
    }

    /// Validates shapes and builds the algebra over the given field.
    pub fn build(&self, c: Characteristic) -> Result<LieAlgebra, CatalogError> {
        if self.basis.is_empty() {
            return Err(CatalogError::EmptyBasis);
        }
        for (index, grid) in self.basis.iter().enumerate() {
            let rows = grid.len();
            let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
            if rows != self.matrix_size || grid.iter().any(|r| r.len() != self.matrix_size) {
                return Err(CatalogError::MatrixShape {
                    index: index + 1,
                    declared: self.matrix_size,
                    rows,
                    cols,
                });
            }
        }
        Ok(LieAlgebra::from_integer_matrices(c, &self.basis)?)
    }
}

/// Reads a JSON definition file and builds the algebra over the given
/// field, running the full independence and closure validation.
pub fn load_custom(path: &Path, c: Characteristic) -> Result<LieAlgebra, CatalogError> {
    let text = fs::read_to_string(path)?;
    AlgebraDefinition::from_json(&text)?.build(c)
}

/// Exports an algebra's basis back to a definition, when a matrix
/// representation exists. Residues export as-is; characteristic-0 entries
/// must be integers.
pub fn to_definition(l: &LieAlgebra, name: &str) -> Result<AlgebraDefinition, CatalogError> {
    let basis = l
        .basis_matrices()
        .ok_or(AlgebraError::NoMatrixRepresentation)?;
    let size = basis[0].size();
    let mut out = Vec::with_capacity(basis.len());
    for (index, m) in basis.iter().enumerate() {
        let mut grid = Vec::with_capacity(size);
        for i in 0..size {
            let mut row = Vec::with_capacity(size);
            for j in 0..size {
                let s = m.entry(i, j);
                let value = match (s.residue(), s.rational()) {
                    (Some(r), _) => i64::try_from(r)
                        .map_err(|_| CatalogError::EntryOutOfRange { index: index + 1 })?,
                    (None, Some(q)) => {
                        use num::One;
                        if !q.denom().is_one() {
                            return Err(CatalogError::EntryOutOfRange { index: index + 1 });
                        }
                        i64::try_from(q.numer())
                            .map_err(|_| CatalogError::EntryOutOfRange { index: index + 1 })?
                    }
                    _ => unreachable!("scalar is residue or rational"),
                };
                row.push(value);
            }
            grid.push(row);
        }
        out.push(grid);
    }
    Ok(AlgebraDefinition {
        name: name.to_string(),
        matrix_size: size,
        basis: out,
    })
}
