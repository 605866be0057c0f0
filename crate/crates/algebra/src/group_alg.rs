//! Group algebras and symmetrizing forms.

use exactcore::{FMatrix, Field, Scalar};
use permgroup::PermGroup;

use crate::core::{commutator_rows, Algebra};

/// The group algebra kG on the sorted element list of G. Basis labels are
/// cycle notations; the unit is the identity permutation (always index 0).
pub fn group_algebra(field: &Field, group: &PermGroup) -> Algebra {
    let n = group.order();
    let labels: Vec<String> = group.elements.iter().map(|g| g.to_string()).collect();
    let mut unit = vec![0 as Scalar; n];
    unit[0] = 1;
    debug_assert!(group.elements[0].is_identity());
    let a = Algebra::from_mult_table(field, labels, &unit, |i, j| {
        let prod = group.elements[i].mul(&group.elements[j]);
        let k = group
            .elements
            .binary_search(&prod)
            .expect("group element list is closed");
        let mut row = vec![0 as Scalar; n];
        row[k] = 1;
        row
    });
    // the permutation generators are basis elements and generate kG
    let gen_idx: Vec<usize> = group
        .generators
        .iter()
        .map(|g| group.elements.binary_search(g).expect("generators lie in the group"))
        .collect();
    if !gen_idx.is_empty() {
        a.set_generators(gen_idx);
    }
    a
}

/// Search for a symmetrizing form: a linear functional L with L(ab) = L(ba)
/// whose Gram matrix L(b_i·b_j) is invertible. Returns the functional as a
/// coordinate row, or None when no such form exists.
///
/// The search is deterministic: echelon basis vectors of the symmetric-
/// functional space first, then (for small spaces) every combination. For a
/// group algebra the first basis vector is the coefficient-of-identity
/// functional, which always succeeds.
pub fn symmetric_form(a: &Algebra) -> Option<FMatrix> {
    let space = commutator_rows(a).kernel_basis();
    let r = space.rows();
    if r == 0 {
        return None;
    }
    let gram_ok = |lam: &FMatrix| -> bool {
        let mut gram = FMatrix::zeros(&a.field, 0, a.dim);
        for i in 0..a.dim {
            let mut row = vec![0 as Scalar; a.dim];
            for (j, slot) in row.iter_mut().enumerate() {
                // b_i·b_j is row i of structure[j]
                let mut acc: Scalar = 0;
                for k in 0..a.dim {
                    let c = a.structure[j].get(i, k);
                    if c != 0 {
                        acc = a.field.add(acc, a.field.mul(c, lam.get(0, k)));
                    }
                }
                *slot = acc;
            }
            gram.push_row_slice(&row);
        }
        gram.rank() == a.dim
    };
    for i in 0..r {
        let mut lam = FMatrix::zeros(&a.field, 0, a.dim);
        lam.push_row(&space, i);
        if gram_ok(&lam) {
            return Some(lam);
        }
    }
    // exhaustive sweep over the solution space when it is small enough
    let q = a.field.q() as u64;
    let total = q.checked_pow(r as u32).unwrap_or(u64::MAX);
    if total <= 1 << 16 {
        for code in 1..total {
            let mut lam = FMatrix::zeros(&a.field, 1, a.dim);
            let mut rest = code;
            for i in 0..r {
                let c = (rest % q) as Scalar;
                rest /= q;
                if c != 0 {
                    lam.raxpy_from(0, &space, i, c);
                }
            }
            if gram_ok(&lam) {
                return Some(lam);
            }
        }
        return None;
    }
    // large space: seeded deterministic pseudo-random combinations
    let mut state: u64 = 0x9e3779b97f4a7c15;
    for _ in 0..4096 {
        let mut lam = FMatrix::zeros(&a.field, 1, a.dim);
        for i in 0..r {
            state = splitmix64(&mut state);
            let c = (state % q) as Scalar;
            if c != 0 {
                lam.raxpy_from(0, &space, i, c);
            }
        }
        if gram_ok(&lam) {
            return Some(lam);
        }
    }
    None
}

pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
