//! Exact dense linear algebra over [`Scalar`]: reduced row echelon form,
//! rank, span membership and zero-row filtering.
//!
//! RREF is the canonical form the whole crate relies on: two row sets span
//! the same subspace exactly when their RREFs are identical, which turns
//! subspace equality into plain `==` on matrices. Arithmetic is exact, so
//! pivoting is purely positional (first nonzero entry in column order) and
//! the result is deterministic.

use crate::scalar::{Characteristic, Scalar, ScalarError};
use thiserror::Error;

/// Errors from vector and matrix construction or shape mismatches.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("vector must have at least one entry")]
    EmptyVector,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A length-n coordinate vector with entries in one field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoordVector {
    entries: Vec<Scalar>,
}

impl CoordVector {
    /// Wraps entries after checking they are non-empty and share one
    /// characteristic.
    pub fn new(entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        let first = entries.first().ok_or(LinalgError::EmptyVector)?;
        let c = first.characteristic();
        for e in &entries {
            if e.characteristic() != c {
                return Err(ScalarError::CharacteristicMismatch(c, e.characteristic()).into());
            }
        }
        Ok(CoordVector { entries })
    }

    pub fn zeros(c: Characteristic, len: usize) -> Self {
        assert!(len > 0, "zero-length vectors are not representable");
        CoordVector {
            entries: vec![Scalar::zero(c); len],
        }
    }

    pub fn from_integers(c: Characteristic, values: &[i64]) -> Result<Self, LinalgError> {
        if values.is_empty() {
            return Err(LinalgError::EmptyVector);
        }
        Ok(CoordVector {
            entries: values.iter().map(|&v| Scalar::from_integer(v, c)).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction forbids zero length
    }

    pub fn characteristic(&self) -> Characteristic {
        self.entries[0].characteristic()
    }

    pub fn entry(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Index of the first nonzero entry, if any.
    pub fn leading_index(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }

    pub fn add(&self, other: &CoordVector) -> Result<CoordVector, LinalgError> {
        if self.len() != other.len() {
            return Err(LinalgError::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CoordVector { entries })
    }

    pub fn neg(&self) -> CoordVector {
        CoordVector {
            entries: self.entries.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Result<CoordVector, LinalgError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CoordVector { entries })
    }

    /// `self += c * other`. Shapes and characteristics are the caller's
    /// invariant (containers enforce them).
    pub(crate) fn axpy(&mut self, c: &Scalar, other: &CoordVector) {
        debug_assert_eq!(self.len(), other.len());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a = a
                .add(&b.mul(c).expect("uniform characteristic"))
                .expect("uniform characteristic");
        }
    }

    pub(crate) fn scale_in_place(&mut self, c: &Scalar) {
        for a in self.entries.iter_mut() {
            *a = a.mul(c).expect("uniform characteristic");
        }
    }

    pub(crate) fn set_entry(&mut self, i: usize, value: Scalar) {
        debug_assert_eq!(value.characteristic(), self.characteristic());
        self.entries[i] = value;
    }
}

/// A rectangular stack of [`CoordVector`] rows over one field.
///
/// The characteristic and column count are stored explicitly so the empty
/// matrix (zero rows) stays well-defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordMatrix {
    characteristic: Characteristic,
    ncols: usize,
    rows: Vec<CoordVector>,
}

impl CoordMatrix {
    /// Builds a matrix, checking every row for the declared width and field.
    pub fn new(
        characteristic: Characteristic,
        ncols: usize,
        rows: Vec<CoordVector>,
    ) -> Result<Self, LinalgError> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(LinalgError::RaggedMatrix {
                    row: i,
                    expected: ncols,
                    found: row.len(),
                });
            }
            if row.characteristic() != characteristic {
                return Err(ScalarError::CharacteristicMismatch(
                    characteristic,
                    row.characteristic(),
                )
                .into());
            }
        }
        Ok(CoordMatrix {
            characteristic,
            ncols,
            rows,
        })
    }

    /// Infers shape and field from the first row; fails on an empty list.
    pub fn from_rows(rows: Vec<CoordVector>) -> Result<Self, LinalgError> {
        let first = rows.first().ok_or(LinalgError::EmptyVector)?;
        Self::new(first.characteristic(), first.len(), rows)
    }

    pub fn empty(characteristic: Characteristic, ncols: usize) -> Self {
        CoordMatrix {
            characteristic,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn integer_rows(
        characteristic: Characteristic,
        rows: &[Vec<i64>],
    ) -> Result<Self, LinalgError> {
        let coords = rows
            .iter()
            .map(|r| CoordVector::from_integers(characteristic, r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(coords)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn rows(&self) -> &[CoordVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &CoordVector {
        &self.rows[i]
    }

    /// Rows that are not identically zero, in their original order.
    pub fn drop_zero_rows(&self) -> CoordMatrix {
        CoordMatrix {
            characteristic: self.characteristic,
            ncols: self.ncols,
            rows: self.rows.iter().filter(|r| !r.is_zero()).cloned().collect(),
        }
    }

    /// Reduced row echelon form by Gauss-Jordan elimination. Zero rows are
    /// dropped from the output, so the result's rows are a canonical basis
    /// of the input's row space.
    pub fn rref(&self) -> CoordMatrix {
        let mut rows = self.rows.clone();
        let nrows = rows.len();
        let mut pivot_row = 0usize;
        for col in 0..self.ncols {
            if pivot_row == nrows {
                break;
            }
            let Some(found) = (pivot_row..nrows).find(|&r| !rows[r].entry(col).is_zero()) else {
                continue;
            };
            rows.swap(pivot_row, found);
            let inv = rows[pivot_row]
                .entry(col)
                .inv()
                .expect("pivot entry is nonzero");
            rows[pivot_row].scale_in_place(&inv);
            let pivot = rows[pivot_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == pivot_row {
                    continue;
                }
                let factor = row.entry(col);
                if !factor.is_zero() {
                    let neg = factor.neg();
                    row.axpy(&neg, &pivot);
                }
            }
            pivot_row += 1;
        }
        rows.truncate(pivot_row);
        CoordMatrix {
            characteristic: self.characteristic,
            ncols: self.ncols,
            rows,
        }
    }

    /// Number of nonzero rows of the RREF.
    pub fn rank(&self) -> usize {
        self.rref().nrows()
    }

    /// Checks the reduced-row-echelon invariants: unit pivots in strictly
    /// increasing columns, pivot columns zero elsewhere, no zero rows.
    pub fn is_rref(&self) -> bool {
        let mut last_pivot: Option<usize> = None;
        for (r, row) in self.rows.iter().enumerate() {
            let Some(p) = row.leading_index() else {
                return false;
            };
            if let Some(lp) = last_pivot {
                if p <= lp {
                    return false;
                }
            }
            if !row.entry(p).is_one() {
                return false;
            }
            for (r2, other) in self.rows.iter().enumerate() {
                if r2 != r && !other.entry(p).is_zero() {
                    return false;
                }
            }
            last_pivot = Some(p);
        }
        true
    }

    /// Canonical basis of the right null space `{x : M x = 0}`, as the RREF
    /// of the standard free-column kernel basis. Empty when the kernel is
    /// trivial.
    pub fn kernel(&self) -> CoordMatrix {
        let r = self.rref();
        let pivots: Vec<usize> = r
            .rows
            .iter()
            .map(|row| row.leading_index().expect("rref has no zero rows"))
            .collect();
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut v = CoordVector::zeros(self.characteristic, self.ncols);
            v.entries[free] = Scalar::one(self.characteristic);
            for (row_idx, &p) in pivots.iter().enumerate() {
                v.entries[p] = r.rows[row_idx].entry(free).neg();
            }
            basis.push(v);
        }
        CoordMatrix {
            characteristic: self.characteristic,
            ncols: self.ncols,
            rows: basis,
        }
        .rref()
    }
}

/// Tests whether `v` lies in the row space of `basis`.
///
/// `basis` must be in RREF (which [`CoordMatrix::rref`] guarantees); `v` is
/// reduced against the pivot rows and membership holds exactly when the
/// residual vanishes.
pub fn in_span(v: &CoordVector, basis: &CoordMatrix) -> Result<bool, LinalgError> {
    if v.len() != basis.ncols() {
        return Err(LinalgError::LengthMismatch {
            expected: basis.ncols(),
            found: v.len(),
        });
    }
    if v.characteristic() != basis.characteristic() {
        return Err(ScalarError::CharacteristicMismatch(
            basis.characteristic(),
            v.characteristic(),
        )
        .into());
    }
    debug_assert!(basis.is_rref(), "in_span requires an RREF basis");
    let mut w = v.clone();
    for row in basis.rows() {
        let p = row.leading_index().expect("rref basis has no zero rows");
        let c = w.entry(p);
        if !c.is_zero() {
            let neg = c.neg();
            w.axpy(&neg, row);
        }
    }
    Ok(w.is_zero())
}

/// A growable canonical (RREF) basis of a subspace.
///
/// Rows are kept in reduced row echelon form at all times, so after any
/// sequence of [`insert`](RrefBasis::insert) calls the rows equal the RREF
/// of everything inserted. This is the incremental engine behind the ideal
/// closure loop; it agrees with batch [`CoordMatrix::rref`] because the
/// reduced form of a subspace is unique.
#[derive(Debug, Clone)]
pub struct RrefBasis {
    characteristic: Characteristic,
    ncols: usize,
    rows: Vec<CoordVector>,
}

impl RrefBasis {
    pub fn new(characteristic: Characteristic, ncols: usize) -> Self {
        RrefBasis {
            characteristic,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[CoordVector] {
        &self.rows
    }

    /// Reduces `v` against the current rows, returning the residual.
    pub fn reduce(&self, v: &CoordVector) -> CoordVector {
        assert_eq!(v.len(), self.ncols, "vector length must match basis");
        let mut w = v.clone();
        for row in &self.rows {
            let p = row.leading_index().expect("basis rows are nonzero");
            let c = w.entry(p);
            if !c.is_zero() {
                let neg = c.neg();
                w.axpy(&neg, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &CoordVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adjoins `v` to the spanned subspace. Returns true when the rank grew.
    pub fn insert(&mut self, v: &CoordVector) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.leading_index() else {
            return false;
        };
        let inv = w.entry(p).inv().expect("leading entry is nonzero");
        w.scale_in_place(&inv);
        for row in self.rows.iter_mut() {
            let c = row.entry(p);
            if !c.is_zero() {
                let neg = c.neg();
                row.axpy(&neg, &w);
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|row| row.leading_index().expect("nonzero") > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, w);
        true
    }

    pub fn to_matrix(&self) -> CoordMatrix {
        CoordMatrix::new(self.characteristic, self.ncols, self.rows.clone())
            .expect("rows are uniform by construction")
    }
}
