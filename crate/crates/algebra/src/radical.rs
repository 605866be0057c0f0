//! The Jacobson radical over small finite fields.
//!
//! Characteristic zero would allow the trace-form kernel; in characteristic
//! p the trace form is degenerate, so we use the Cohen–Ivanyos–Wales
//! descent: starting from the whole algebra, repeatedly intersect with the
//! null space of the functions x ↦ c_{p^i}(L_x · L_y), where c_j is the
//! coefficient of λ^(n−j) in the characteristic polynomial of the left
//! regular representation. Those functions are p^i-semilinear, so each step
//! solves a linear system in the Frobenius-twisted coordinates and pulls
//! the kernel back through the inverse Frobenius.
//!
//! The result is then verified outright — two-sided ideal, nilpotent,
//! semisimple quotient — so an indexing slip in the descent cannot leak
//! a wrong radical into the rest of the workbench.

use exactcore::{Echelonizer, FMatrix, Field, Scalar};

use crate::core::Algebra;
use crate::sub::quotient_algebra;

/// Characteristic polynomial of a square matrix, coefficients low-to-high
/// (length n+1, monic). Hessenberg reduction followed by the standard
/// recurrence; exact arithmetic throughout.
pub fn charpoly(m: &FMatrix) -> Vec<Scalar> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let f = m.field().clone();
    let mut h = m.clone();
    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let pivot = (j + 1..n).find(|&r| h.get(r, j) != 0);
        let Some(r) = pivot else { continue };
        if r != j + 1 {
            h.swap_rows(r, j + 1);
            for row in 0..n {
                let a = h.get(row, r);
                let b = h.get(row, j + 1);
                h.set(row, r, b);
                h.set(row, j + 1, a);
            }
        }
        let dinv = f.inv(h.get(j + 1, j));
        for i in j + 2..n {
            let factor = f.mul(h.get(i, j), dinv);
            if factor == 0 {
                continue;
            }
            let mut src = FMatrix::zeros(&f, 0, n);
            src.push_row(&h, j + 1);
            h.raxpy_from(i, &src, 0, f.neg(factor));
            // similarity: column j+1 += factor * column i
            for row in 0..n {
                let c = f.add(h.get(row, j + 1), f.mul(factor, h.get(row, i)));
                h.set(row, j + 1, c);
            }
        }
    }
    // p[m](x) = (x - H[m-1][m-1]) p[m-1]
    //           - sum_i H[i][m-1] * (prod of subdiagonals from i) * p[i]
    let mut polys: Vec<Vec<Scalar>> = vec![vec![1]];
    for m in 1..=n {
        let mut next = mul_by_x_minus(&f, &polys[m - 1], h.get(m - 1, m - 1));
        let mut subprod: Scalar = 1;
        for i in (0..m.saturating_sub(1)).rev() {
            subprod = f.mul(subprod, h.get(i + 1, i));
            if subprod == 0 {
                break;
            }
            let c = f.mul(h.get(i, m - 1), subprod);
            if c != 0 {
                for (k, &pc) in polys[i].iter().enumerate() {
                    next[k] = f.sub(next[k], f.mul(c, pc));
                }
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn mul_by_x_minus(f: &Field, p: &[Scalar], c: Scalar) -> Vec<Scalar> {
    let mut out = vec![0 as Scalar; p.len() + 1];
    for (i, &a) in p.iter().enumerate() {
        out[i + 1] = f.add(out[i + 1], a);
        out[i] = f.sub(out[i], f.mul(c, a));
    }
    out
}

/// One full descent pass; returns echelonized rows spanning the candidate
/// radical (no verification here).
fn ciw_descent(a: &Algebra) -> FMatrix {
    let f = &a.field;
    let n = a.dim;
    let p = f.p();
    // largest l with p^l <= n
    let mut l = 0u32;
    let mut pl = p;
    while pl <= n as u64 {
        l += 1;
        pl *= p;
    }
    let mut basis = FMatrix::identity(f, n);
    for i in 0..=l {
        let r = basis.rows();
        if r == 0 {
            break;
        }
        let coeff_index = n - p.pow(i) as usize;
        let lmats: Vec<FMatrix> = (0..r)
            .map(|k| {
                let mut row = FMatrix::zeros(f, 0, n);
                row.push_row(&basis, k);
                a.left_mult_matrix(&row)
            })
            .collect();
        // big[k][j] = c_{p^i}(L_k L_j); conditions sum_k s_k big[k][j] = 0
        let mut big = FMatrix::zeros(f, r, r);
        for k in 0..r {
            for j in 0..r {
                let prod = lmats[k].mul(&lmats[j]);
                let cp = charpoly(&prod);
                big.set(k, j, cp[coeff_index]);
            }
        }
        // s·big = 0, then undo the p^i-power substitution entrywise
        let sols = big.transpose().kernel_basis();
        let mut next = FMatrix::zeros(f, 0, n);
        for s in 0..sols.rows() {
            let mut vec = FMatrix::zeros(f, 1, n);
            for k in 0..r {
                let mut t = sols.get(s, k);
                for _ in 0..i {
                    t = f.frob_inv(t);
                }
                if t != 0 {
                    vec.raxpy_from(0, &basis, k, t);
                }
            }
            next.push_row(&vec, 0);
        }
        let (ech, _) = next.rref();
        basis = ech;
    }
    basis
}

/// Rows spanning the Jacobson radical, reduced echelon form. Cached on the
/// algebra. Panics if the verification of the descent output fails (which
/// would be an internal error, not a user error).
pub fn radical(a: &Algebra) -> FMatrix {
    a.radical_cache()
        .get_or_init(|| {
            let rows = ciw_descent(a);
            verify_radical(a, &rows);
            rows
        })
        .clone()
}

fn verify_radical(a: &Algebra, rows: &FMatrix) {
    let f = &a.field;
    let n = a.dim;
    let mut span = Echelonizer::new(f, n);
    for i in 0..rows.rows() {
        span.insert(rows, i);
    }
    assert_eq!(span.rank(), rows.rows(), "radical basis must be independent");
    // two-sided ideal: closure under the algebra generators suffices
    for i in 0..rows.rows() {
        let mut w = FMatrix::zeros(f, 0, n);
        w.push_row(rows, i);
        for &g in a.generators() {
            let b = a.basis_el(g);
            assert!(
                span.contains(&a.mul(&w, &b).get_row(0))
                    && span.contains(&a.mul(&b, &w).get_row(0)),
                "radical candidate is not an ideal"
            );
        }
    }
    // nilpotent: powers of the span must reach zero
    let mut power = rows.clone();
    for _ in 0..=n {
        if power.rows() == 0 {
            break;
        }
        let mut next = Echelonizer::new(f, n);
        for i in 0..power.rows() {
            let mut u = FMatrix::zeros(f, 0, n);
            u.push_row(&power, i);
            for j in 0..rows.rows() {
                let mut v = FMatrix::zeros(f, 0, n);
                v.push_row(rows, j);
                next.insert(&a.mul(&u, &v), 0);
            }
        }
        power = next.basis();
    }
    assert_eq!(power.rows(), 0, "radical candidate is not nilpotent");
    // the quotient must be radical-free
    let quo = quotient_algebra(a, rows).expect("verified ideal");
    let again = ciw_descent(&quo.algebra);
    assert_eq!(again.rows(), 0, "quotient by the radical candidate is not semisimple");
}

/// Dimension of the radical (convenience).
pub fn radical_dim(a: &Algebra) -> usize {
    radical(a).rows()
}
