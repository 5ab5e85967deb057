//! The closure engine: the ideal generated by a list of elements, plus the
//! derived subalgebra, the center, and an exhaustive simplicity test built
//! on top of it.
//!
//! The generated ideal is computed by bracketing the current spanning set
//! against every basis vector and re-canonicalizing (RREF) until the
//! dimension stops growing or reaches the whole algebra. Bracketing against
//! basis vectors alone suffices: `ad` is linear, so a span is
//! bracket-stable against the algebra exactly when it is stable against a
//! basis of it.

use crate::algebra::{AlgebraElement, AlgebraError, LieAlgebra};
use crate::linalg::{CoordMatrix, CoordVector, RrefBasis};
use crate::scalar::Scalar;
use rayon::prelude::*;

/// One round of the closure loop: the canonical spanning set after `depth`
/// rounds of bracketing (depth 0 is the row-reduced generator span).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub depth: usize,
    pub spanning_set: Vec<AlgebraElement>,
    pub dimension: usize,
}

/// The ideal generated by a list of elements: canonical RREF basis,
/// dimension, the generators as given, and the per-depth trace.
///
/// The trace ends either with two entries of equal dimension (a fixed
/// point was reached and recorded) or with a single final entry of full
/// dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealResult {
    pub generators: Vec<AlgebraElement>,
    pub basis: Vec<AlgebraElement>,
    pub dimension: usize,
    pub trace: Vec<TraceEntry>,
}

impl IdealResult {
    /// The basis as a coordinate matrix in the ambient algebra, suitable
    /// for span-membership queries.
    pub fn basis_matrix(&self, l: &LieAlgebra) -> CoordMatrix {
        let rows = self.basis.iter().map(|e| e.coords().clone()).collect();
        CoordMatrix::new(l.characteristic(), l.dim(), rows)
            .expect("ideal basis rows live in the algebra")
    }
}

fn entry_from_span(depth: usize, span: &RrefBasis) -> TraceEntry {
    TraceEntry {
        depth,
        spanning_set: span
            .rows()
            .iter()
            .cloned()
            .map(AlgebraElement::from_coords)
            .collect(),
        dimension: span.rank(),
    }
}

/// Computes the smallest ideal of `l` containing `gens`.
///
/// Depth 0 canonicalizes the generators (RREF, zero rows dropped). Each
/// later round brackets every spanning element with every basis vector,
/// re-canonicalizes, and records a trace entry; the loop stops when the
/// dimension reaches the algebra's or a round adds nothing (in which case
/// the repeated final entry stays in the trace).
pub fn ideal_generated(
    l: &LieAlgebra,
    gens: &[AlgebraElement],
) -> Result<IdealResult, AlgebraError> {
    for g in gens {
        l.check_element(g)?;
    }
    let n = l.dim();
    let mut span = RrefBasis::new(l.characteristic(), n);
    for g in gens {
        span.insert(g.coords());
    }
    let mut trace = vec![entry_from_span(0, &span)];
    let mut depth = 0usize;
    loop {
        let d = span.rank();
        if d == 0 || d == n {
            break;
        }
        let current: Vec<CoordVector> = span.rows().to_vec();
        let mut grew = false;
        for row in &current {
            for i in 0..n {
                let br = l.ad_with_basis(row, i);
                if !br.is_zero() {
                    grew |= span.insert(&br);
                }
            }
        }
        depth += 1;
        trace.push(entry_from_span(depth, &span));
        if !grew {
            break;
        }
    }
    let basis: Vec<AlgebraElement> = span
        .rows()
        .iter()
        .cloned()
        .map(AlgebraElement::from_coords)
        .collect();
    Ok(IdealResult {
        generators: gens.to_vec(),
        dimension: basis.len(),
        basis,
        trace,
    })
}

/// The ideal generated by all pairwise brackets `[x_i, x_j]`, `i < j`.
pub fn derived_subalgebra(l: &LieAlgebra) -> IdealResult {
    let n = l.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            gens.push(AlgebraElement::from_coords(l.basis_bracket(i, j).clone()));
        }
    }
    ideal_generated(l, &gens).expect("brackets of basis vectors are algebra elements")
}

/// Canonical (RREF) basis of `{z : [z, x_i] = 0 for all i}`, the null
/// space of the stacked adjoint matrices.
pub fn center(l: &LieAlgebra) -> Vec<AlgebraElement> {
    let n = l.dim();
    let c = l.characteristic();
    // Row (i, k) of the system reads: sum_j z_j * c_{j,i,k} = 0.
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            let mut row = CoordVector::zeros(c, n);
            for j in 0..n {
                row.set_entry(j, l.structure_constant(j, i, k).clone());
            }
            rows.push(row);
        }
    }
    let system = CoordMatrix::new(c, n, rows).expect("rows built over the algebra's field");
    system
        .kernel()
        .rows()
        .iter()
        .cloned()
        .map(AlgebraElement::from_coords)
        .collect()
}

/// Why an algebra failed the simplicity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonSimpleReason {
    /// All brackets vanish; abelian algebras are not simple by convention.
    Abelian,
    /// `[L, L]` is a proper nonzero ideal.
    ProperDerivedSubalgebra,
    /// The center is nonzero (and proper, since the algebra is non-abelian).
    NontrivialCenter,
    /// Some single element generates a proper nonzero ideal.
    ProperGeneratedIdeal,
}

/// Why the test could not decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// Characteristic 0: one representative per ray cannot be enumerated.
    CharacteristicZero,
    /// The projective point count exceeds the cap; only the basis
    /// directions were tested (a necessary condition only).
    CapExceeded { cap: u64 },
}

/// Verdict of [`is_simple`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    Simple {
        points_tested: u64,
    },
    NotSimple {
        reason: NonSimpleReason,
        witness: IdealResult,
    },
    Inconclusive {
        reason: InconclusiveReason,
        points_tested: u64,
    },
}

/// Tests simplicity: the algebra must be non-abelian and every nonzero
/// element must generate the whole algebra as an ideal.
///
/// Quick rejections (proper derived subalgebra, nonzero center) come
/// first. Over `F_p` the remaining candidates are enumerated one
/// representative per projective point, first nonzero coordinate
/// normalized to 1, in lexicographic coordinate order; the witness of a
/// failure is the first failing representative in that order. When the
/// point count exceeds `cap`, only the basis directions are tested and a
/// clean pass is inconclusive. Characteristic 0 is inconclusive after the
/// quick rejections.
pub fn is_simple(l: &LieAlgebra, cap: u64) -> Simplicity {
    is_simple_with_threads(l, cap, 1)
}

/// [`is_simple`] with an explicit worker count. The enumeration order and
/// the reported witness are identical for every thread count.
pub fn is_simple_with_threads(l: &LieAlgebra, cap: u64, threads: usize) -> Simplicity {
    let n = l.dim();
    let derived = derived_subalgebra(l);
    if derived.dimension == 0 {
        // Abelian. Exhibit a proper ideal when one exists (any line is an
        // ideal); for dimension 1 only the zero ideal is proper.
        let witness = if n >= 2 {
            ideal_generated(l, &[l.basis_element(0)]).expect("basis element is valid")
        } else {
            derived
        };
        return Simplicity::NotSimple {
            reason: NonSimpleReason::Abelian,
            witness,
        };
    }
    if derived.dimension < n {
        return Simplicity::NotSimple {
            reason: NonSimpleReason::ProperDerivedSubalgebra,
            witness: derived,
        };
    }
    let central = center(l);
    if !central.is_empty() {
        let witness = ideal_generated(l, &central).expect("center elements are valid");
        return Simplicity::NotSimple {
            reason: NonSimpleReason::NontrivialCenter,
            witness,
        };
    }
    let p = match l.characteristic().value() {
        0 => {
            return Simplicity::Inconclusive {
                reason: InconclusiveReason::CharacteristicZero,
                points_tested: 0,
            }
        }
        p => p,
    };
    match projective_point_count(p, n, cap) {
        Some(total) => {
            let failure = find_first_proper(l, p, total, threads);
            match failure {
                Some(witness) => Simplicity::NotSimple {
                    reason: NonSimpleReason::ProperGeneratedIdeal,
                    witness,
                },
                None => Simplicity::Simple {
                    points_tested: total,
                },
            }
        }
        None => {
            // Basis directions in ascending lexicographic order: e_n first.
            for i in (0..n).rev() {
                let result =
                    ideal_generated(l, &[l.basis_element(i)]).expect("basis element is valid");
                if result.dimension < n {
                    return Simplicity::NotSimple {
                        reason: NonSimpleReason::ProperGeneratedIdeal,
                        witness: result,
                    };
                }
            }
            Simplicity::Inconclusive {
                reason: InconclusiveReason::CapExceeded { cap },
                points_tested: n as u64,
            }
        }
    }
}

/// `(p^n - 1) / (p - 1)` when it does not exceed `cap`, else `None`.
fn projective_point_count(p: u64, n: usize, cap: u64) -> Option<u64> {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for k in 0..n {
        total += term;
        if total > cap as u128 {
            return None;
        }
        if k + 1 < n {
            term = term.checked_mul(p as u128)?;
        }
    }
    Some(total as u64)
}

/// The `index`-th projective representative in lexicographic coordinate
/// order: vectors are grouped by the position of the leading 1, last
/// coordinate first, and the free tail counts up in base p.
fn representative(l: &LieAlgebra, p: u64, index: u64) -> CoordVector {
    let n = l.dim();
    let c = l.characteristic();
    let mut idx = index as u128;
    let mut block: u128 = 1;
    for lead in (0..n).rev() {
        if idx < block {
            let mut coords = CoordVector::zeros(c, n);
            coords.set_entry(lead, Scalar::one(c));
            let tail = n - 1 - lead;
            let mut rem = idx;
            let mut place = block;
            for t in 0..tail {
                place /= p as u128;
                let digit = (rem / place) as i64;
                rem %= place;
                coords.set_entry(lead + 1 + t, Scalar::from_integer(digit, c));
            }
            return coords;
        }
        idx -= block;
        block *= p as u128;
    }
    unreachable!("projective index out of range")
}

/// First representative (in enumeration order) whose generated ideal is
/// proper, if any. Parallel runs reduce to the same first failure.
fn find_first_proper(l: &LieAlgebra, p: u64, total: u64, threads: usize) -> Option<IdealResult> {
    let n = l.dim();
    let test = |idx: u64| -> Option<IdealResult> {
        let rep = AlgebraElement::from_coords(representative(l, p, idx));
        let result = ideal_generated(l, &[rep]).expect("representative is valid");
        (result.dimension < n).then_some(result)
    };
    if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("worker pool");
        pool.install(|| (0..total).into_par_iter().find_map_first(test))
    } else {
        (0..total).find_map(test)
    }
}
