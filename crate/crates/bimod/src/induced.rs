//! The induced bimodule A ⊗_R A: the quotient of A ⊗_k A by the middle
//! R-relations, with its multiplication map onto A.

use algebra::Subalgebra;
use exactcore::{Echelonizer, FMatrix, Quotient, Scalar};
use modrep::ModuleHom;

use crate::bimodule::{BimodContext, Bimodule};

/// A ⊗_R A with tracing data: the quotient structure from A ⊗_k A (basis
/// (s, t) at index s·dim + t), kept so elements can be lifted and images
/// located.
pub struct InducedBimodule {
    pub bim: Bimodule,
    pub quo: Quotient,
    pub r_dim: usize,
}

impl InducedBimodule {
    /// Class of x ⊗ y in the quotient coordinates.
    pub fn class_of(&self, x: &FMatrix, y: &FMatrix) -> FMatrix {
        let row = x.kron(y);
        FMatrix::row_matrix(x.field(), &self.quo.project(&row.get_row(0)))
    }
}

/// Build A ⊗_R A. The relation space is spanned by a·r ⊗ b − a ⊗ r·b over
/// basis elements a, b of A and r of R.
pub fn induced_bimodule(ctx: &BimodContext, r: &Subalgebra) -> InducedBimodule {
    let a = &ctx.algebra;
    let f = &a.field;
    let n = a.dim;
    let mut rel = Echelonizer::new(f, n * n);
    for rr in 0..r.dim() {
        let mut r_amb = FMatrix::zeros(f, 0, n);
        r_amb.push_row(&r.basis, rr);
        let right_by_r = a.right_mult_matrix(&r_amb); // row s = b_s·r
        let left_by_r = a.left_mult_matrix(&r_amb); // row t = r·b_t
        for s in 0..n {
            for t in 0..n {
                let mut row = vec![0 as Scalar; n * n];
                for (u, &c) in right_by_r.get_row(s).iter().enumerate() {
                    if c != 0 {
                        row[u * n + t] = f.add(row[u * n + t], c);
                    }
                }
                for (v, &c) in left_by_r.get_row(t).iter().enumerate() {
                    if c != 0 {
                        row[s * n + v] = f.sub(row[s * n + v], c);
                    }
                }
                rel.insert_slice(&row);
            }
        }
    }
    let quo = Quotient::new(rel);
    let d = quo.dim();

    // Each class lifts to a single pure tensor b_s ⊗ b_t (canonical
    // representatives sit at complement positions), so the quotient actions
    // come from single rows of the multiplication table, projected — no
    // dim²-sized intermediates.
    let st: Vec<(usize, usize)> = quo.comp_positions().iter().map(|&p| (p / n, p % n)).collect();
    let mut left = vec![FMatrix::zeros(f, 0, d); n];
    let mut right = vec![FMatrix::zeros(f, 0, d); n];
    let mut raw = vec![0 as Scalar; n * n];
    for &(s, t) in &st {
        for g in 0..n {
            // b_g·(b_s ⊗ b_t) = (b_g·b_s) ⊗ b_t
            raw.iter_mut().for_each(|x| *x = 0);
            for (u, &c) in a.structure[s].get_row(g).iter().enumerate() {
                if c != 0 {
                    raw[u * n + t] = c;
                }
            }
            left[g].push_row_slice(&quo.project(&raw));
            // (b_s ⊗ b_t)·b_g = b_s ⊗ (b_t·b_g)
            raw.iter_mut().for_each(|x| *x = 0);
            for (v, &c) in a.structure[g].get_row(t).iter().enumerate() {
                if c != 0 {
                    raw[s * n + v] = c;
                }
            }
            right[g].push_row_slice(&quo.project(&raw));
        }
    }
    let bim = Bimodule { algebra: a.clone(), dim: d, left, right };
    InducedBimodule { bim, quo, r_dim: r.dim() }
}

/// The multiplication map d₀: A ⊗_R A → A, class(a ⊗ b) ↦ ab, as a map of
/// the carriers.
pub fn mult_map(ctx: &BimodContext, ind: &InducedBimodule) -> ModuleHom {
    let a = &ctx.algebra;
    let f = &a.field;
    let n = a.dim;
    let d = ind.bim.dim;
    let mut mat = FMatrix::zeros(f, 0, n);
    for rr in 0..d {
        let mut coord = vec![0 as Scalar; d];
        coord[rr] = 1;
        let w = ind.quo.lift(&coord);
        let mut img = FMatrix::zeros(f, 1, n);
        for s in 0..n {
            for t in 0..n {
                let c = w[s * n + t];
                if c != 0 {
                    for (u, &p) in a.structure[t].get_row(s).iter().enumerate() {
                        if p != 0 {
                            let v = f.add(img.get(0, u), f.mul(c, p));
                            img.set(0, u, v);
                        }
                    }
                }
            }
        }
        mat.push_row(&img, 0);
    }
    ModuleHom { mat }
}
