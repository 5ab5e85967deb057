//! The Lie algebra itself: a fixed ordered basis of square matrices, the
//! commutator bracket, coordinates with respect to the basis, and the
//! structure constants that make all later work coordinate-level.
//!
//! Construction is where every invariant is enforced: the basis matrices
//! must be linearly independent and the span closed under the bracket.
//! Once built, an algebra is immutable and every bracket is a structure
//! constant lookup; the matrices are never multiplied again.

use crate::linalg::{CoordVector, LinalgError};
use crate::scalar::{Characteristic, Scalar, ScalarError};
use thiserror::Error;

/// Errors from building or querying an algebra. Basis indices in messages
/// are 1-based, matching the `x1..xn` naming of basis elements.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix size mismatch: expected {expected}x{expected}, found {found}x{found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("basis must contain at least one matrix")]
    EmptyBasis,
    #[error("basis matrix x{index} is a linear combination of the earlier ones")]
    DependentBasis { index: usize },
    #[error("basis is not closed under the bracket: [x{i}, x{j}] lies outside the span")]
    NotClosed { i: usize, j: usize },
    #[error("matrix is not in the span of the basis")]
    NotInSpan,
    #[error("element has {found} coordinates, algebra dimension is {expected}")]
    WrongDimension { expected: usize, found: usize },
    #[error("algebra was built from structure constants; it has no matrix representation")]
    NoMatrixRepresentation,
    #[error("structure constants are not antisymmetric at (i, j) = ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("structure constants fail the Jacobi identity at (i, j, k) = ({i}, {j}, {k})")]
    JacobiFailure { i: usize, j: usize, k: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A square matrix of scalars, the concrete representation of algebra
/// elements. Entries are stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    size: usize,
    entries: Vec<Scalar>,
}

impl MatrixRep {
    /// Builds a matrix from integer entries, reducing them into the target
    /// characteristic.
    pub fn from_integers(c: Characteristic, grid: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let size = grid.len();
        if size == 0 {
            return Err(AlgebraError::NotSquare { rows: 0, cols: 0 });
        }
        let mut entries = Vec::with_capacity(size * size);
        for row in grid {
            if row.len() != size {
                return Err(AlgebraError::NotSquare {
                    rows: size,
                    cols: row.len(),
                });
            }
            entries.extend(row.iter().map(|&v| Scalar::from_integer(v, c)));
        }
        Ok(MatrixRep { size, entries })
    }

    pub fn zero(c: Characteristic, size: usize) -> Self {
        assert!(size > 0, "matrix size must be positive");
        MatrixRep {
            size,
            entries: vec![Scalar::zero(c); size * size],
        }
    }

    pub fn identity(c: Characteristic, size: usize) -> Self {
        let mut m = Self::zero(c, size);
        for i in 0..size {
            m.entries[i * size + i] = Scalar::one(c);
        }
        m
    }

    /// The elementary matrix with a single 1 at row `i`, column `j`
    /// (0-based).
    pub fn elementary(c: Characteristic, size: usize, i: usize, j: usize) -> Self {
        assert!(i < size && j < size, "entry out of range");
        let mut m = Self::zero(c, size);
        m.entries[i * size + j] = Scalar::one(c);
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn characteristic(&self) -> Characteristic {
        self.entries[0].characteristic()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.size + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.size).fold(Scalar::zero(self.characteristic()), |acc, i| {
            acc.add(self.entry(i, i)).expect("uniform characteristic")
        })
    }

    fn same_shape(&self, other: &MatrixRep) -> Result<(), AlgebraError> {
        if self.size != other.size {
            return Err(AlgebraError::SizeMismatch {
                expected: self.size,
                found: other.size,
            });
        }
        if self.characteristic() != other.characteristic() {
            return Err(ScalarError::CharacteristicMismatch(
                self.characteristic(),
                other.characteristic(),
            )
            .into());
        }
        Ok(())
    }

    pub fn add(&self, other: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MatrixRep {
            size: self.size,
            entries,
        })
    }

    pub fn sub(&self, other: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MatrixRep {
        MatrixRep {
            size: self.size,
            entries: self.entries.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Result<MatrixRep, AlgebraError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MatrixRep {
            size: self.size,
            entries,
        })
    }

    pub fn mul(&self, other: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
        self.same_shape(other)?;
        let n = self.size;
        let c = self.characteristic();
        let mut entries = vec![Scalar::zero(c); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b)?;
                    entries[i * n + j] = entries[i * n + j].add(&t)?;
                }
            }
        }
        Ok(MatrixRep { size: n, entries })
    }

    /// The commutator `xy - yx`, computed exactly.
    pub fn bracket(&self, other: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// The matrix read row-major as a length-size² coordinate vector.
    pub fn flatten(&self) -> CoordVector {
        CoordVector::new(self.entries.clone()).expect("matrix entries are uniform and non-empty")
    }
}

/// Row-reduced flattened basis with the transform back to basis
/// coordinates. Solving `sum(lambda_i * x_i) = m` is a reduction against
/// these rows.
#[derive(Debug, Clone)]
struct Recognizer {
    dim: usize,
    reduced: Vec<CoordVector>,
    transform: Vec<CoordVector>,
    pivots: Vec<usize>,
}

impl Recognizer {
    fn build(basis: &[MatrixRep]) -> Result<Self, AlgebraError> {
        let n = basis.len();
        let c = basis[0].characteristic();
        let mut rec = Recognizer {
            dim: n,
            reduced: Vec::with_capacity(n),
            transform: Vec::with_capacity(n),
            pivots: Vec::with_capacity(n),
        };
        for (k, m) in basis.iter().enumerate() {
            let mut tag = CoordVector::zeros(c, n);
            tag.set_entry(k, Scalar::one(c));
            if !rec.insert(m.flatten(), tag) {
                return Err(AlgebraError::DependentBasis { index: k + 1 });
            }
        }
        Ok(rec)
    }

    fn insert(&mut self, mut left: CoordVector, mut right: CoordVector) -> bool {
        for (i, row) in self.reduced.iter().enumerate() {
            let c = left.entry(self.pivots[i]);
            if !c.is_zero() {
                let neg = c.neg();
                left.axpy(&neg, row);
                right.axpy(&neg, &self.transform[i]);
            }
        }
        let Some(p) = left.leading_index() else {
            return false;
        };
        let inv = left.entry(p).inv().expect("leading entry is nonzero");
        left.scale_in_place(&inv);
        right.scale_in_place(&inv);
        for i in 0..self.reduced.len() {
            let c = self.reduced[i].entry(p);
            if !c.is_zero() {
                let neg = c.neg();
                self.reduced[i].axpy(&neg, &left);
                self.transform[i].axpy(&neg, &right);
            }
        }
        let pos = self
            .pivots
            .iter()
            .position(|&q| q > p)
            .unwrap_or(self.pivots.len());
        self.reduced.insert(pos, left);
        self.transform.insert(pos, right);
        self.pivots.insert(pos, p);
        true
    }

    /// Coordinates of a flattened matrix in the original basis, or
    /// `NotInSpan`.
    fn coordinates(&self, flat: &CoordVector) -> Result<CoordVector, AlgebraError> {
        let c = flat.characteristic();
        let mut w = flat.clone();
        let mut coords = CoordVector::zeros(c, self.dim);
        for (i, row) in self.reduced.iter().enumerate() {
            let f = w.entry(self.pivots[i]).clone();
            if !f.is_zero() {
                w.axpy(&f.neg(), row);
                coords.axpy(&f, &self.transform[i]);
            }
        }
        if !w.is_zero() {
            return Err(AlgebraError::NotInSpan);
        }
        Ok(coords)
    }
}

/// An element of a [`LieAlgebra`], stored as its coordinate vector in the
/// algebra's fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coords: CoordVector,
}

impl AlgebraElement {
    pub(crate) fn from_coords(coords: CoordVector) -> Self {
        AlgebraElement { coords }
    }

    pub fn coords(&self) -> &CoordVector {
        &self.coords
    }

    pub fn into_coords(self) -> CoordVector {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

/// A finite-dimensional Lie algebra: ordered basis, characteristic, and
/// cached structure constants `c_ijk` with `[x_i, x_j] = sum_k c_ijk x_k`.
///
/// `constants[i][j]` holds the coordinate vector of `[x_i, x_j]`, so the
/// element-level bracket never touches matrices. Algebras built from raw
/// structure constants carry no matrix basis; `recognize` and `realize`
/// are unavailable for them.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    characteristic: Characteristic,
    dim: usize,
    basis: Option<Vec<MatrixRep>>,
    constants: Vec<Vec<CoordVector>>,
    recognizer: Option<Recognizer>,
}

impl LieAlgebra {
    /// Builds an algebra from basis matrices, validating independence and
    /// closure under the bracket. The structure constants are computed here
    /// once.
    pub fn from_matrices(basis: Vec<MatrixRep>) -> Result<Self, AlgebraError> {
        let first = basis.first().ok_or(AlgebraError::EmptyBasis)?;
        let size = first.size();
        let c = first.characteristic();
        for m in &basis {
            if m.size() != size {
                return Err(AlgebraError::SizeMismatch {
                    expected: size,
                    found: m.size(),
                });
            }
            if m.characteristic() != c {
                return Err(ScalarError::CharacteristicMismatch(c, m.characteristic()).into());
            }
        }
        let recognizer = Recognizer::build(&basis)?;
        let n = basis.len();
        let zero = CoordVector::zeros(c, n);
        let mut constants = vec![vec![zero; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let m = basis[i].bracket(&basis[j])?;
                let coords = recognizer.coordinates(&m.flatten()).map_err(|e| match e {
                    AlgebraError::NotInSpan => AlgebraError::NotClosed { i: i + 1, j: j + 1 },
                    other => other,
                })?;
                constants[j][i] = coords.neg();
                constants[i][j] = coords;
            }
        }
        Ok(LieAlgebra {
            characteristic: c,
            dim: n,
            basis: Some(basis),
            constants,
            recognizer: Some(recognizer),
        })
    }

    /// Convenience constructor from integer matrices; entries are reduced
    /// into the target characteristic, so one integer basis serves every
    /// field.
    pub fn from_integer_matrices(
        c: Characteristic,
        grids: &[Vec<Vec<i64>>],
    ) -> Result<Self, AlgebraError> {
        let basis = grids
            .iter()
            .map(|g| MatrixRep::from_integers(c, g))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_matrices(basis)
    }

    /// Builds an abstract algebra directly from integer structure constants
    /// `table[i][j][k]`, validated for antisymmetry and the Jacobi
    /// identity. No matrix representation is attached.
    pub fn from_structure_constants(
        c: Characteristic,
        table: &[Vec<Vec<i64>>],
    ) -> Result<Self, AlgebraError> {
        let n = table.len();
        if n == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        let mut constants = Vec::with_capacity(n);
        for row in table {
            if row.len() != n {
                return Err(AlgebraError::WrongDimension {
                    expected: n,
                    found: row.len(),
                });
            }
            let mut out = Vec::with_capacity(n);
            for cell in row {
                if cell.len() != n {
                    return Err(AlgebraError::WrongDimension {
                        expected: n,
                        found: cell.len(),
                    });
                }
                out.push(CoordVector::from_integers(c, cell)?);
            }
            constants.push(out);
        }
        let algebra = LieAlgebra {
            characteristic: c,
            dim: n,
            basis: None,
            constants,
            recognizer: None,
        };
        for i in 0..n {
            for j in i..n {
                let forward = &algebra.constants[i][j];
                if *forward != algebra.constants[j][i].neg() {
                    return Err(AlgebraError::NotAntisymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        // With antisymmetry in hand, distinct ordered triples suffice.
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut sum = algebra.ad_basis(i, &algebra.constants[j][k]);
                    sum.axpy(
                        &Scalar::one(c),
                        &algebra.ad_basis(j, &algebra.constants[k][i]),
                    );
                    sum.axpy(
                        &Scalar::one(c),
                        &algebra.ad_basis(k, &algebra.constants[i][j]),
                    );
                    if !sum.is_zero() {
                        return Err(AlgebraError::JacobiFailure {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(algebra)
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Side length of the basis matrices, when a representation exists.
    pub fn matrix_size(&self) -> Option<usize> {
        self.basis.as_ref().map(|b| b[0].size())
    }

    pub fn basis_matrices(&self) -> Option<&[MatrixRep]> {
        self.basis.as_deref()
    }

    /// The stored coordinate vector of `[x_i, x_j]` (0-based indices).
    pub fn basis_bracket(&self, i: usize, j: usize) -> &CoordVector {
        &self.constants[i][j]
    }

    /// Structure constant `c_ijk` (0-based indices).
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.constants[i][j].entry(k)
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().flatten().all(CoordVector::is_zero)
    }

    /// Wraps a coordinate vector as an element, checking length and field.
    pub fn element(&self, coords: CoordVector) -> Result<AlgebraElement, AlgebraError> {
        if coords.len() != self.dim {
            return Err(AlgebraError::WrongDimension {
                expected: self.dim,
                found: coords.len(),
            });
        }
        if coords.characteristic() != self.characteristic {
            return Err(ScalarError::CharacteristicMismatch(
                self.characteristic,
                coords.characteristic(),
            )
            .into());
        }
        Ok(AlgebraElement { coords })
    }

    pub fn element_from_integers(&self, coords: &[i64]) -> Result<AlgebraElement, AlgebraError> {
        if coords.len() != self.dim {
            return Err(AlgebraError::WrongDimension {
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(AlgebraElement {
            coords: CoordVector::from_integers(self.characteristic, coords)?,
        })
    }

    /// The basis element `x_{i+1}` as a unit coordinate vector (0-based).
    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        assert!(i < self.dim, "basis index out of range");
        let mut coords = CoordVector::zeros(self.characteristic, self.dim);
        coords.set_entry(i, Scalar::one(self.characteristic));
        AlgebraElement { coords }
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement {
            coords: CoordVector::zeros(self.characteristic, self.dim),
        }
    }

    /// Validates that an element belongs to this algebra.
    pub fn check_element(&self, e: &AlgebraElement) -> Result<(), AlgebraError> {
        if e.coords.len() != self.dim {
            return Err(AlgebraError::WrongDimension {
                expected: self.dim,
                found: e.coords.len(),
            });
        }
        if e.coords.characteristic() != self.characteristic {
            return Err(ScalarError::CharacteristicMismatch(
                self.characteristic,
                e.coords.characteristic(),
            )
            .into());
        }
        Ok(())
    }

    /// Writes a matrix as coordinates over the basis by solving the linear
    /// system over the flattened matrix space. Errors when the matrix lies
    /// outside the span.
    pub fn recognize(&self, m: &MatrixRep) -> Result<AlgebraElement, AlgebraError> {
        let recognizer = self
            .recognizer
            .as_ref()
            .ok_or(AlgebraError::NoMatrixRepresentation)?;
        let basis = self.basis.as_ref().expect("recognizer implies basis");
        if m.size() != basis[0].size() {
            return Err(AlgebraError::SizeMismatch {
                expected: basis[0].size(),
                found: m.size(),
            });
        }
        if m.characteristic() != self.characteristic {
            return Err(ScalarError::CharacteristicMismatch(
                self.characteristic,
                m.characteristic(),
            )
            .into());
        }
        Ok(AlgebraElement {
            coords: recognizer.coordinates(&m.flatten())?,
        })
    }

    /// Rebuilds the matrix `sum(coords_i * x_i)`; inverse of [`recognize`]
    /// on the algebra's span.
    ///
    /// [`recognize`]: LieAlgebra::recognize
    pub fn realize(&self, e: &AlgebraElement) -> Result<MatrixRep, AlgebraError> {
        self.check_element(e)?;
        let basis = self
            .basis
            .as_ref()
            .ok_or(AlgebraError::NoMatrixRepresentation)?;
        let mut out = MatrixRep::zero(self.characteristic, basis[0].size());
        for (i, coeff) in e.coords.iter().enumerate() {
            if !coeff.is_zero() {
                out = out.add(&basis[i].scaled(coeff)?)?;
            }
        }
        Ok(out)
    }

    /// Element-level bracket through the structure constants:
    /// `[a, b]_k = sum_{i,j} a_i b_j c_ijk`.
    pub fn bracket(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(AlgebraElement {
            coords: self.bracket_coords(&a.coords, &b.coords),
        })
    }

    pub(crate) fn bracket_coords(&self, a: &CoordVector, b: &CoordVector) -> CoordVector {
        let mut out = CoordVector::zeros(self.characteristic, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let coeff = ai.mul(bj).expect("uniform characteristic");
                out.axpy(&coeff, &self.constants[i][j]);
            }
        }
        out
    }

    /// `[v, x_i]` for a coordinate vector `v` (0-based basis index); the
    /// workhorse of the closure loop.
    pub(crate) fn ad_with_basis(&self, v: &CoordVector, i: usize) -> CoordVector {
        let mut out = CoordVector::zeros(self.characteristic, self.dim);
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero() {
                out.axpy(vj, &self.constants[j][i]);
            }
        }
        out
    }

    /// `[x_i, v]` for a coordinate vector `v` (0-based basis index).
    fn ad_basis(&self, i: usize, v: &CoordVector) -> CoordVector {
        let mut out = CoordVector::zeros(self.characteristic, self.dim);
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero() {
                out.axpy(vj, &self.constants[i][j]);
            }
        }
        out
    }

    /// The full n-by-n bracket table: entry `(i, j)` is `[x_i, x_j]`.
    pub fn multiplication_table(&self) -> Vec<Vec<AlgebraElement>> {
        self.constants
            .iter()
            .map(|row| {
                row.iter()
                    .map(|coords| AlgebraElement {
                        coords: coords.clone(),
                    })
                    .collect()
            })
            .collect()
    }
}
