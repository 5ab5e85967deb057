//! Property suite: randomized invariants for the linear algebra layer, the
//! bracket, and the closure engine.

use liealg::{
    catalog,
    ideal::{self, IdealResult},
    in_span, AlgebraElement, Characteristic, CoordMatrix, CoordVector, LieAlgebra, RrefBasis,
    Scalar,
};
use proptest::prelude::*;

fn fp(p: u64) -> Characteristic {
    Characteristic::prime(p).unwrap()
}

fn small_characteristic() -> impl Strategy<Value = Characteristic> {
    prop_oneof![
        Just(fp(2)),
        Just(fp(3)),
        Just(fp(5)),
        Just(Characteristic::ZERO),
    ]
}

fn finite_characteristic() -> impl Strategy<Value = Characteristic> {
    prop_oneof![Just(fp(2)), Just(fp(3))]
}

#[derive(Debug, Clone)]
struct MatrixInput {
    characteristic: Characteristic,
    ncols: usize,
    rows: Vec<Vec<i64>>,
}

impl MatrixInput {
    fn build(&self) -> CoordMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| CoordVector::from_integers(self.characteristic, r).unwrap())
            .collect();
        CoordMatrix::new(self.characteristic, self.ncols, rows).unwrap()
    }
}

fn arb_matrix(chars: impl Strategy<Value = Characteristic>) -> impl Strategy<Value = MatrixInput> {
    (chars, 1usize..=5).prop_flat_map(|(characteristic, ncols)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, ncols..=ncols), 0..=4)
            .prop_map(move |rows| MatrixInput {
                characteristic,
                ncols,
                rows,
            })
    })
}

/// Row operations that do not change the row space.
#[derive(Debug, Clone)]
enum RowOp {
    Swap(usize, usize),
    Scale(usize, i64),
    AddMultiple { from: usize, to: usize, factor: i64 },
}

fn arb_row_ops() -> impl Strategy<Value = Vec<RowOp>> {
    proptest::collection::vec(
        prop_oneof![
            (0usize..4, 0usize..4).prop_map(|(a, b)| RowOp::Swap(a, b)),
            (0usize..4, 1i64..=4).prop_map(|(r, c)| RowOp::Scale(r, c)),
            (0usize..4, 0usize..4, -3i64..=3).prop_map(|(from, to, factor)| RowOp::AddMultiple {
                from,
                to,
                factor
            }),
        ],
        0..12,
    )
}

fn apply_row_ops(m: &CoordMatrix, ops: &[RowOp]) -> CoordMatrix {
    let c = m.characteristic();
    let mut rows: Vec<CoordVector> = m.rows().to_vec();
    for op in ops {
        if rows.is_empty() {
            break;
        }
        let n = rows.len();
        match op {
            RowOp::Swap(a, b) => rows.swap(a % n, b % n),
            RowOp::Scale(r, k) => {
                // Nonzero in every characteristic used here (k in 1..=4
                // can be 0 mod 2 or 3, so skip those).
                let s = Scalar::from_integer(*k, c);
                if !s.is_zero() {
                    rows[r % n] = rows[r % n].scaled(&s).unwrap();
                }
            }
            RowOp::AddMultiple { from, to, factor } => {
                let (from, to) = (from % n, to % n);
                if from != to {
                    let s = Scalar::from_integer(*factor, c);
                    let scaled = rows[from].scaled(&s).unwrap();
                    rows[to] = rows[to].add(&scaled).unwrap();
                }
            }
        }
    }
    CoordMatrix::new(c, m.ncols(), rows).unwrap()
}

/// All vectors in the row span, for tiny spans over F_p.
fn enumerate_span(m: &CoordMatrix) -> Vec<Vec<u64>> {
    let p = m.characteristic().value();
    assert!(p > 0);
    let rows = m.rows();
    let mut combos = vec![CoordVector::zeros(m.characteristic(), m.ncols())];
    for row in rows {
        let mut next = Vec::new();
        for base in &combos {
            for k in 0..p {
                let s = Scalar::from_integer(k as i64, m.characteristic());
                let term = row.scaled(&s).unwrap();
                next.push(base.add(&term).unwrap());
            }
        }
        combos = next;
    }
    let mut out: Vec<Vec<u64>> = combos
        .into_iter()
        .map(|v| v.iter().map(|s| s.residue().unwrap()).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

proptest! {
    #[test]
    fn rref_is_idempotent(input in arb_matrix(small_characteristic())) {
        let m = input.build();
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert!(r.is_rref());
    }

    #[test]
    fn rref_preserves_the_row_space(input in arb_matrix(finite_characteristic())) {
        let m = input.build();
        let r = m.rref();
        for row in m.rows() {
            prop_assert!(in_span(row, &r).unwrap());
        }
        // Exhaustive two-sided check: the spans enumerate to the same set.
        prop_assert_eq!(enumerate_span(&m), enumerate_span(&r));
    }

    #[test]
    fn rref_is_canonical_under_row_operations(
        input in arb_matrix(small_characteristic()),
        ops in arb_row_ops(),
    ) {
        let m = input.build();
        let shuffled = apply_row_ops(&m, &ops);
        prop_assert_eq!(m.rref(), shuffled.rref());
    }

    #[test]
    fn incremental_insertion_matches_batch_rref(input in arb_matrix(small_characteristic())) {
        let m = input.build();
        let mut basis = RrefBasis::new(m.characteristic(), m.ncols());
        for row in m.rows() {
            basis.insert(row);
        }
        prop_assert_eq!(basis.to_matrix(), m.rref());
    }

    #[test]
    fn rank_is_bounded(input in arb_matrix(small_characteristic())) {
        let m = input.build();
        prop_assert!(m.rank() <= m.nrows().min(m.ncols()));
    }
}

fn test_algebra(c: Characteristic, which: u8) -> LieAlgebra {
    match which % 3 {
        0 => catalog::gl(2, c).unwrap(),
        1 => catalog::sl(2, c).unwrap(),
        _ => catalog::upper_triangular(2, c).unwrap(),
    }
}

fn elem(l: &LieAlgebra, coords: &[i64]) -> AlgebraElement {
    l.element_from_integers(&coords[..l.dim()]).unwrap()
}

fn check_result_invariants(l: &LieAlgebra, result: &IdealResult) {
    let m = result.basis_matrix(l);
    assert!(m.is_rref());
    assert_eq!(result.dimension, result.basis.len());
    assert!(result.trace.len() <= l.dim() + 1);
    let dims: Vec<usize> = result.trace.iter().map(|t| t.dimension).collect();
    assert!(
        dims.windows(2).all(|w| w[0] <= w[1]),
        "trace must not shrink"
    );
    for g in &result.generators {
        assert!(in_span(g.coords(), &m).unwrap());
    }
    for b in &result.basis {
        for i in 0..l.dim() {
            let br = l.bracket(b, &l.basis_element(i)).unwrap();
            assert!(in_span(br.coords(), &m).unwrap(), "closure violated");
        }
    }
}

proptest! {
    #[test]
    fn bracket_is_anticommutative_and_jacobi(
        c in small_characteristic(),
        which in 0u8..3,
        a in proptest::collection::vec(-4i64..=4, 4),
        b in proptest::collection::vec(-4i64..=4, 4),
        d in proptest::collection::vec(-4i64..=4, 4),
    ) {
        let l = test_algebra(c, which);
        let (a, b, d) = (elem(&l, &a), elem(&l, &b), elem(&l, &d));
        let ab = l.bracket(&a, &b).unwrap();
        let ba = l.bracket(&b, &a).unwrap();
        prop_assert_eq!(ab.coords().neg(), ba.coords().clone());
        prop_assert!(l.bracket(&a, &a).unwrap().is_zero());

        let mut jacobi = l.bracket(&a, &l.bracket(&b, &d).unwrap()).unwrap().into_coords();
        jacobi = jacobi
            .add(l.bracket(&b, &l.bracket(&d, &a).unwrap()).unwrap().coords())
            .unwrap();
        jacobi = jacobi
            .add(l.bracket(&d, &l.bracket(&a, &b).unwrap()).unwrap().coords())
            .unwrap();
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn recognition_inverts_realization(
        c in small_characteristic(),
        coords in proptest::collection::vec(-4i64..=4, 4),
    ) {
        let l = catalog::gl(2, c).unwrap();
        let e = elem(&l, &coords);
        let m = l.realize(&e).unwrap();
        prop_assert_eq!(l.recognize(&m).unwrap(), e);
    }

    #[test]
    fn ideal_results_satisfy_their_invariants(
        c in small_characteristic(),
        which in 0u8..3,
        gens in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 0..3),
    ) {
        let l = test_algebra(c, which);
        let gens: Vec<AlgebraElement> = gens.iter().map(|g| elem(&l, g)).collect();
        let result = ideal::ideal_generated(&l, &gens).unwrap();
        check_result_invariants(&l, &result);
    }

    #[test]
    fn ideal_is_invariant_under_generator_presentation(
        c in small_characteristic(),
        which in 0u8..3,
        gens in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 1..3),
        scale in 1i64..=6,
    ) {
        let l = test_algebra(c, which);
        let scale = Scalar::from_integer(scale, l.characteristic());
        prop_assume!(!scale.is_zero());
        let gens: Vec<AlgebraElement> = gens.iter().map(|g| elem(&l, g)).collect();
        let baseline = ideal::ideal_generated(&l, &gens).unwrap();

        // Scaling every generator by a nonzero constant changes nothing.
        let scaled: Vec<AlgebraElement> = gens
            .iter()
            .map(|g| l.element(g.coords().scaled(&scale).unwrap()).unwrap())
            .collect();
        let scaled_result = ideal::ideal_generated(&l, &scaled).unwrap();
        prop_assert_eq!(&scaled_result.basis, &baseline.basis);

        // Replacing the generators by the RREF of their span changes nothing.
        let rows: Vec<CoordVector> = gens.iter().map(|g| g.coords().clone()).collect();
        let canon = CoordMatrix::new(l.characteristic(), l.dim(), rows).unwrap().rref();
        let canon_gens: Vec<AlgebraElement> = canon
            .rows()
            .iter()
            .map(|r| l.element(r.clone()).unwrap())
            .collect();
        let canon_result = ideal::ideal_generated(&l, &canon_gens).unwrap();
        prop_assert_eq!(&canon_result.basis, &baseline.basis);
    }
}

/// Exhaustive (not randomized) check over all basis triples of gl(3) in
/// three small characteristics: the structure constants define an honest
/// Lie bracket.
#[test]
fn gl3_bracket_axioms_exhaustive_over_basis_triples() {
    for p in [2u64, 3, 5] {
        let l = catalog::gl(3, fp(p)).unwrap();
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = l.bracket(&l.basis_element(i), &l.basis_element(j)).unwrap();
                let ji = l.bracket(&l.basis_element(j), &l.basis_element(i)).unwrap();
                assert_eq!(ij.coords().neg(), ji.coords().clone());
                for k in 0..n {
                    let a = l.basis_element(i);
                    let b = l.basis_element(j);
                    let d = l.basis_element(k);
                    let mut sum = l
                        .bracket(&a, &l.bracket(&b, &d).unwrap())
                        .unwrap()
                        .into_coords();
                    sum = sum
                        .add(l.bracket(&b, &l.bracket(&d, &a).unwrap()).unwrap().coords())
                        .unwrap();
                    sum = sum
                        .add(l.bracket(&d, &l.bracket(&a, &b).unwrap()).unwrap().coords())
                        .unwrap();
                    assert!(sum.is_zero(), "Jacobi fails at ({i}, {j}, {k}) mod {p}");
                }
            }
        }
    }
}
