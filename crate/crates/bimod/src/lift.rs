//! Lifting maps between free B-bimodules to maps between induced
//! A-bimodules: the functor H, the composite map down to A, and the
//! twisted lift used for group-algebra complements.

use algebra::{Algebra, Subalgebra};
use exactcore::{FMatrix, Scalar};
use modrep::ModuleHom;
use thiserror::Error;

use crate::bimodule::BimodContext;
use crate::induced::InducedBimodule;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("the lifted map is not well defined on the induced bimodule")]
    NotWellDefined,
    #[error("the distinguished image fails to commute with the subalgebra")]
    LiftFailsCommutation,
}

/// A map between free B-bimodules (B⊗B)^n → (B⊗B)^m, stored as the images
/// of the free generators: images[s][t] is an element of B ⊗_k B written
/// in B-basis ⊗ B-basis coordinates (a 1 × dim(B)² row).
#[derive(Clone, Debug)]
pub struct FreeBimoduleMap {
    pub images: Vec<Vec<FMatrix>>,
}

impl FreeBimoduleMap {
    /// The identity endomorphism of B⊗B, for a unit given in B-coordinates.
    pub fn identity(b_unit: &FMatrix) -> FreeBimoduleMap {
        FreeBimoduleMap { images: vec![vec![b_unit.kron(b_unit)]] }
    }

    pub fn source_slots(&self) -> usize {
        self.images.len()
    }

    pub fn target_slots(&self) -> usize {
        self.images.first().map_or(0, |r| r.len())
    }

    /// Compose with another map (apply self first, then g).
    pub fn compose(&self, g: &FreeBimoduleMap, b_alg: &Algebra) -> FreeBimoduleMap {
        assert_eq!(self.target_slots(), g.source_slots());
        let f = &b_alg.field;
        let nb = b_alg.dim;
        let mut images = Vec::with_capacity(self.source_slots());
        for s in 0..self.source_slots() {
            let mut row_out = Vec::with_capacity(g.target_slots());
            for t2 in 0..g.target_slots() {
                let mut acc = FMatrix::zeros(f, 1, nb * nb);
                for t in 0..self.target_slots() {
                    // self image Σ u⊗v in slot t, then g: u·g_img·v
                    let img = &self.images[s][t];
                    let gm = reshape(&g.images[t][t2], nb);
                    for u in 0..nb {
                        for v in 0..nb {
                            let c = img.get(0, u * nb + v);
                            if c == 0 {
                                continue;
                            }
                            let lu = b_alg.left_mult_matrix(&b_alg.basis_el(u)).transpose();
                            let rv = b_alg.right_mult_matrix(&b_alg.basis_el(v));
                            let term = lu.mul(&gm).mul(&rv);
                            for p in 0..nb {
                                for q in 0..nb {
                                    let x = term.get(p, q);
                                    if x != 0 {
                                        let old = acc.get(0, p * nb + q);
                                        acc.set(0, p * nb + q, f.add(old, f.mul(c, x)));
                                    }
                                }
                            }
                        }
                    }
                }
                row_out.push(acc);
            }
            images.push(row_out);
        }
        FreeBimoduleMap { images }
    }
}

fn reshape(row: &FMatrix, n: usize) -> FMatrix {
    let f = row.field();
    let mut m = FMatrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let c = row.get(0, i * n + j);
            if c != 0 {
                m.set(i, j, c);
            }
        }
    }
    m
}

/// Apply "right-multiply the left slot by x, left-multiply the right slot
/// by y" to a raw element of A ⊗_k A, reshaped as a dim × dim matrix.
fn slot_transform(a: &Algebra, w: &FMatrix, x: &FMatrix, y: &FMatrix) -> FMatrix {
    let rx = a.right_mult_matrix(x).transpose();
    let ly = a.left_mult_matrix(y);
    rx.mul(w).mul(&ly)
}

/// The pairs (coefficient, left element, right element) of a B⊗B row, with
/// the elements embedded into A.
fn embedded_pairs(b: &Subalgebra, row: &FMatrix) -> Vec<(Scalar, FMatrix, FMatrix)> {
    let nb = b.dim();
    let mut out = Vec::new();
    for p in 0..nb {
        for q in 0..nb {
            let c = row.get(0, p * nb + q);
            if c != 0 {
                let mut bp = FMatrix::zeros(row.field(), 0, b.basis.cols());
                bp.push_row(&b.basis, p);
                let mut bq = FMatrix::zeros(row.field(), 0, b.basis.cols());
                bq.push_row(&b.basis, q);
                out.push((c, bp, bq));
            }
        }
    }
    out
}

fn raw_image(
    a: &Algebra,
    w_flat: &[Scalar],
    pairs: &[(Scalar, FMatrix, FMatrix)],
) -> Vec<Scalar> {
    let n = a.dim;
    let f = &a.field;
    let w = FMatrix::from_rows(
        f,
        n,
        &(0..n).map(|s| w_flat[s * n..(s + 1) * n].to_vec()).collect::<Vec<_>>(),
    );
    let mut acc = vec![0 as Scalar; n * n];
    for (c, x, y) in pairs {
        let t = slot_transform(a, &w, x, y);
        for s in 0..n {
            for (v, &e) in t.get_row(s).iter().enumerate() {
                if e != 0 {
                    acc[s * n + v] = f.add(acc[s * n + v], f.mul(*c, e));
                }
            }
        }
    }
    acc
}

/// Lift a free-B-bimodule map to the induced A-bimodules:
/// H(f): (A⊗_R A)^n → (A⊗_R A)^m, class(a ⊗ a′) in slot s ↦
/// Σ_t Σ class(a·b ⊗ b′·a′) over the pairs of images[s][t]. Before
/// accepting, every relation row of the source quotient is pushed through
/// and must project to zero.
pub fn lift_h(
    ctx: &BimodContext,
    ind: &InducedBimodule,
    b: &Subalgebra,
    f: &FreeBimoduleMap,
) -> Result<ModuleHom, LiftError> {
    let a = &ctx.algebra;
    let field = &a.field;
    let d = ind.bim.dim;
    let n_slots = f.source_slots();
    let m_slots = f.target_slots();
    let pairset: Vec<Vec<Vec<(Scalar, FMatrix, FMatrix)>>> = f
        .images
        .iter()
        .map(|row| row.iter().map(|img| embedded_pairs(b, img)).collect())
        .collect();

    // well-definedness: relation rows must map to zero in every target slot
    let rel = ind.quo.subspace().basis();
    for r in 0..rel.rows() {
        let w = rel.get_row(r);
        for s in 0..n_slots {
            for t in 0..m_slots {
                let img = raw_image(a, &w, &pairset[s][t]);
                let projected = ind.quo.project(&img);
                if projected.iter().any(|&c| c != 0) {
                    return Err(LiftError::NotWellDefined);
                }
            }
        }
    }

    let mut mat = FMatrix::zeros(field, n_slots * d, m_slots * d);
    for s in 0..n_slots {
        for rr in 0..d {
            let mut coord = vec![0 as Scalar; d];
            coord[rr] = 1;
            let w = ind.quo.lift(&coord);
            for t in 0..m_slots {
                let img = raw_image(a, &w, &pairset[s][t]);
                let projected = ind.quo.project(&img);
                for (c_idx, &c) in projected.iter().enumerate() {
                    if c != 0 {
                        mat.set(s * d + rr, t * d + c_idx, c);
                    }
                }
            }
        }
    }

    // the defining square must commute on the spanning set b_p ⊗ b_q: the
    // two routes compute the same products, one inside B and one inside A,
    // so a mismatch means the inputs are inconsistent
    let b_alg = b.as_algebra();
    let nb = b.dim();
    for p in 0..nb {
        for q in 0..nb {
            let mut bp = FMatrix::zeros(field, 0, a.dim);
            bp.push_row(&b.basis, p);
            let mut bq = FMatrix::zeros(field, 0, a.dim);
            bq.push_row(&b.basis, q);
            for s in 0..n_slots {
                // route 1: include then H(f)
                let cls = ind.class_of(&bp, &bq);
                let mut src = FMatrix::zeros(field, 1, n_slots * d);
                for (i, &c) in cls.get_row(0).iter().enumerate() {
                    src.set(0, s * d + i, c);
                }
                let via_h = src.mul(&mat);
                // route 2: apply f inside B, then include each slot
                let mut direct = FMatrix::zeros(field, 1, m_slots * d);
                for t in 0..m_slots {
                    let m_img = reshape(&f.images[s][t], nb);
                    let lp = b_alg.left_mult_matrix(&b_alg.basis_el(p)).transpose();
                    let rq = b_alg.right_mult_matrix(&b_alg.basis_el(q));
                    let moved = lp.mul(&m_img).mul(&rq);
                    for u in 0..nb {
                        for v in 0..nb {
                            let c = moved.get(u, v);
                            if c == 0 {
                                continue;
                            }
                            let mut bu = FMatrix::zeros(field, 0, a.dim);
                            bu.push_row(&b.basis, u);
                            let mut bv = FMatrix::zeros(field, 0, a.dim);
                            bv.push_row(&b.basis, v);
                            let cls2 = ind.class_of(&bu, &bv);
                            for (i, &e) in cls2.get_row(0).iter().enumerate() {
                                if e != 0 {
                                    let old = direct.get(0, t * d + i);
                                    direct.set(0, t * d + i, field.add(old, field.mul(c, e)));
                                }
                            }
                        }
                    }
                }
                assert_eq!(via_h, direct, "lifting square must commute");
            }
        }
    }

    Ok(ModuleHom { mat })
}

/// The composite map down to A: for δ with images c_s ∈ B (B-coordinates),
/// send class(a ⊗ a′) in slot s to a·c_s·a′.
pub fn to_a_map(ctx: &BimodContext, ind: &InducedBimodule, b: &Subalgebra, images: &[FMatrix]) -> ModuleHom {
    let a = &ctx.algebra;
    let field = &a.field;
    let n = a.dim;
    let d = ind.bim.dim;
    let mut mat = FMatrix::zeros(field, images.len() * d, n);
    for (s, c_b) in images.iter().enumerate() {
        let c_amb = c_b.mul(&b.basis);
        let pc = a.right_mult_matrix(&c_amb); // row s = b_s·c
        for rr in 0..d {
            let mut coord = vec![0 as Scalar; d];
            coord[rr] = 1;
            let w_flat = ind.quo.lift(&coord);
            let w = FMatrix::from_rows(
                field,
                n,
                &(0..n).map(|i| w_flat[i * n..(i + 1) * n].to_vec()).collect::<Vec<_>>(),
            );
            let u = w.transpose().mul(&pc); // row t = Σ_s W[s,t]·(b_s c)
            let mut img = FMatrix::zeros(field, 1, n);
            for t in 0..n {
                let ut = u.select_rows(&[t]);
                let term = ut.mul(&a.structure[t]);
                img = img.add(&term);
            }
            for (c_idx, &c) in img.get_row(0).iter().enumerate() {
                if c != 0 {
                    mat.set(s * d + rr, c_idx, c);
                }
            }
        }
    }
    ModuleHom { mat }
}

/// The result of a twisted lift: the endomorphism of A⊗_R A lifting the
/// twisted free map, and the class of the distinguished image
/// Σ λ_h h⁻¹ ⊗ h.
#[derive(Debug)]
pub struct TwistedLift {
    pub alpha: ModuleHom,
    pub delta_image: FMatrix,
}

/// Lift 1⊗1 ↦ Σ λ_h h⁻¹ ⊗ h, where the pairs live in a group-algebra
/// complement B, and verify the distinguished image commutes with every
/// element of R inside A⊗_R A.
pub fn twisted_lift(
    ctx: &BimodContext,
    ind: &InducedBimodule,
    b: &Subalgebra,
    r: &Subalgebra,
    terms: &[(Scalar, FMatrix, FMatrix)],
) -> Result<TwistedLift, LiftError> {
    let a = &ctx.algebra;
    let field = &a.field;
    let nb = b.dim();

    // the distinguished element must commute with R inside the induced
    // bimodule; checked first so a failure is reported as such even when
    // the full lift would also be ill defined
    let mut delta = FMatrix::zeros(field, 1, ind.bim.dim);
    for (lambda, h_inv, h) in terms {
        delta = delta.add(&ind.class_of(h_inv, h).scale(*lambda));
    }
    for rr in 0..r.dim() {
        let mut r_amb = FMatrix::zeros(field, 0, a.dim);
        r_amb.push_row(&r.basis, rr);
        let lhs = delta.mul(&ind.bim.left_action_of(&r_amb));
        let rhs = delta.mul(&ind.bim.right_action_of(&r_amb));
        if lhs != rhs {
            return Err(LiftError::LiftFailsCommutation);
        }
    }

    let mut image = FMatrix::zeros(field, 1, nb * nb);
    for (lambda, h_inv, h) in terms {
        let ci = b.coords(h_inv).expect("h⁻¹ lies in the complement");
        let ch = b.coords(h).expect("h lies in the complement");
        let row = ci.kron(&ch);
        image = image.add(&row.scale(*lambda));
    }
    let f = FreeBimoduleMap { images: vec![vec![image]] };
    let alpha = lift_h(ctx, ind, b, &f)?;
    Ok(TwistedLift { alpha, delta_image: delta })
}
