//! Exact computations in finite-dimensional matrix Lie algebras.
//!
//! Everything runs over an exact field chosen at runtime: the prime field
//! `F_p` or the rationals (characteristic 0). No floating point anywhere.
//!
//! The central operation is [`ideal::ideal_generated`], which closes a list
//! of elements under bracketing with the algebra basis until the span stops
//! growing, returning the canonical (RREF) basis of the generated ideal
//! together with a per-depth trace. On top of that sit the derived
//! subalgebra, the center, and an exhaustive simplicity test.
//!
//! ```
//! use liealg::{catalog, ideal, Characteristic};
//!
//! let two = Characteristic::prime(2).unwrap();
//! let gl2 = catalog::gl(2, two).unwrap();
//! let x2 = gl2.basis_element(1); // E12
//! let result = ideal::ideal_generated(&gl2, &[x2]).unwrap();
//! assert_eq!(result.dimension, 2);
//! ```

pub mod algebra;
pub mod catalog;
pub mod ideal;
pub mod linalg;
pub mod scalar;

pub use algebra::{AlgebraElement, AlgebraError, LieAlgebra, MatrixRep};
pub use catalog::{AlgebraDefinition, CatalogError};
pub use ideal::{IdealResult, NonSimpleReason, Simplicity, TraceEntry};
pub use linalg::{in_span, CoordMatrix, CoordVector, LinalgError, RrefBasis};
pub use scalar::{Characteristic, Scalar, ScalarError};
