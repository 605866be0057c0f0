//! Property tests for the exact linear algebra layer. These pin the
//! invariants the rest of the workspace silently relies on: rank-nullity,
//! soundness of right-hand solves, and that the reduced echelon form is a
//! genuine canonical form for the row space.

use exactcore::{make_field, FMatrix, Field, LinError, Scalar};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        make_field(2, 1, &[0, 1]).unwrap(),
        make_field(3, 1, &[0, 1]).unwrap(),
        make_field(2, 2, &[1, 1, 1]).unwrap(),
        make_field(5, 1, &[0, 1]).unwrap(),
    ]
}

fn mat_strategy(fi: usize, rows: usize, cols: usize) -> impl Strategy<Value = FMatrix> {
    let q = fields()[fi].q() as u16;
    proptest::collection::vec(0..q, rows * cols).prop_map(move |entries| {
        let f = &fields()[fi];
        FMatrix::from_entries(f, rows, cols, &entries)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_cols(fi in 0usize..4, r in 1usize..9, c in 1usize..9,
                                 seed in any::<u64>()) {
        let f = fields()[fi].clone();
        let mut s = seed;
        let mut next = move || { s ^= s << 13; s ^= s >> 7; s ^= s << 17; s };
        let mut m = FMatrix::zeros(&f, r, c);
        for i in 0..r { for j in 0..c { m.set(i, j, (next() % f.q() as u64) as Scalar); } }
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.rows(), c);
        // every kernel row really is annihilated
        let prod = m.mul(&k.transpose());
        prop_assert!(prod.is_zero());
    }

    #[test]
    fn solve_right_sound_and_complete(fi in 0usize..4, seed in any::<u64>()) {
        let f = fields()[fi].clone();
        let mut s = seed | 1;
        let mut next = move || { s ^= s << 13; s ^= s >> 7; s ^= s << 17; s };
        let mut a = FMatrix::zeros(&f, 6, 4);
        let mut x = FMatrix::zeros(&f, 4, 2);
        for i in 0..6 { for j in 0..4 { a.set(i, j, (next() % f.q() as u64) as Scalar); } }
        for i in 0..4 { for j in 0..2 { x.set(i, j, (next() % f.q() as u64) as Scalar); } }
        let b = a.mul(&x);
        // complete: a solution exists, and any returned solution is sound
        match a.solve_right(&b) {
            Ok(sol) => prop_assert_eq!(a.mul(&sol), b),
            Err(LinError::NoSolution) => prop_assert!(false, "consistent system declared unsolvable"),
        }
    }

    #[test]
    fn rref_canonical_for_row_space(seed in any::<u64>()) {
        // multiplying on the left by an invertible matrix must not change
        // the reduced echelon form
        let f = make_field(2, 2, &[1, 1, 1]).unwrap();
        let mut s = seed | 1;
        let mut next = move || { s ^= s << 13; s ^= s >> 7; s ^= s << 17; s };
        let mut m = FMatrix::zeros(&f, 5, 7);
        for i in 0..5 { for j in 0..7 { m.set(i, j, (next() % 4) as Scalar); } }
        let g = loop {
            let mut g = FMatrix::zeros(&f, 5, 5);
            for i in 0..5 { for j in 0..5 { g.set(i, j, (next() % 4) as Scalar); } }
            if g.invert().is_some() { break g; }
        };
        let (r1, p1) = m.rref();
        let (r2, p2) = g.mul(&m).rref();
        prop_assert_eq!(p1, p2);
        for i in 0..r1.rank() {
            prop_assert_eq!(r1.get_row(i), r2.get_row(i));
        }
    }
}

#[test]
fn kernel_rows_are_reduced_echelon() {
    let f = make_field(2, 1, &[0, 1]).unwrap();
    let m = FMatrix::from_entries(&f, 2, 4, &[1, 1, 0, 1, 0, 0, 1, 1]);
    let k = m.kernel_basis();
    let (r, _) = k.rref();
    assert_eq!(k, r, "kernel basis must already be in reduced echelon form");
}
