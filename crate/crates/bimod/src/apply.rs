//! Tensoring a right module with a bimodule over the shared algebra,
//! computed through a two-step projective presentation of the module.

use std::sync::Arc;

use exactcore::FMatrix;
use modrep::{
    direct_sum, projective_cover, quotient_module, submodule_spanned, ModError, RightModule,
};

use crate::bimodule::{BimodContext, Bimodule};

/// Compute X ⊗_A M for a right A-module X and an A-bimodule M, as a right
/// A-module. Uses a presentation P₁ → P₀ → X → 0 by projective covers;
/// each indecomposable summand e·A tensors to the submodule e·M, the
/// connecting maps become left multiplications, and the result is the
/// cokernel.
pub fn apply_bimodule(
    x: &RightModule,
    bim: &Bimodule,
    ctx: &BimodContext,
) -> Result<RightModule, ModError> {
    let a = &ctx.algebra;
    let field = &a.field;
    let same = Arc::ptr_eq(&x.algebra, &ctx.module_ctx.algebra)
        || (x.algebra.dim == a.dim
            && x.algebra.labels == a.labels
            && x.algebra.field == a.field);
    let same_bim = Arc::ptr_eq(&bim.algebra, &ctx.algebra)
        || (bim.algebra.dim == a.dim
            && bim.algebra.labels == a.labels
            && bim.algebra.field == a.field);
    if !same || !same_bim {
        return Err(ModError::AlgebraMismatch);
    }
    if x.dim == 0 {
        return Ok(RightModule::zero_module(&ctx.module_ctx.algebra));
    }

    let sd = &ctx.module_ctx.simples;
    let c0 = projective_cover(x, sd);
    let ker0 = c0.map.mat.transpose().kernel_basis();
    let (types1, psi) = if ker0.rows() == 0 {
        (Vec::new(), FMatrix::zeros(field, 0, c0.cover.dim))
    } else {
        let (k1, k1_rows) = submodule_spanned(&c0.cover, &ker0);
        let c1 = projective_cover(&k1, sd);
        let psi = c1.map.mat.mul(&k1_rows);
        (c1.summand_types, psi)
    };

    // the tensor of e_t·A with M is the submodule e_t·M of M as a right
    // module; build one copy per simple type that occurs
    let right_mod = bim.to_right_module();
    let n_types = sd.simples.len();
    let mut piece: Vec<Option<(RightModule, FMatrix)>> = vec![None; n_types];
    for &t in c0.summand_types.iter().chain(types1.iter()) {
        if piece[t].is_none() {
            let lmat = bim.left_action_of(&sd.idempotents[t]);
            piece[t] = Some(submodule_spanned(&right_mod, &lmat));
        }
    }

    // summand offsets inside P₀ and P₁ (pim coordinates) and inside the
    // tensored sums (piece coordinates)
    let pim_dim = |t: usize| sd.pims[t].dim;
    let mut off0 = Vec::with_capacity(c0.summand_types.len());
    let mut acc = 0;
    for &t in &c0.summand_types {
        off0.push(acc);
        acc += pim_dim(t);
    }
    let mut off1 = Vec::with_capacity(types1.len());
    acc = 0;
    for &t in &types1 {
        off1.push(acc);
        acc += pim_dim(t);
    }

    let sum0: Vec<RightModule> = c0
        .summand_types
        .iter()
        .map(|&t| piece[t].as_ref().unwrap().0.clone())
        .collect();
    let (p0m, inj0) = direct_sum(&sum0);

    // the generator e_t written in the coordinates of its projective
    let gen_coord: Vec<Option<FMatrix>> = (0..n_types)
        .map(|t| {
            if c0.summand_types.contains(&t) || types1.contains(&t) {
                let c = sd.pim_rows[t]
                    .transpose()
                    .solve_right(&sd.idempotents[t].transpose())
                    .expect("idempotent lies in its projective")
                    .transpose();
                Some(c)
            } else {
                None
            }
        })
        .collect();

    let mut img_rows = FMatrix::zeros(field, 0, p0m.dim);
    for (s1, &u) in types1.iter().enumerate() {
        // image of the generator of summand s1 inside P₀
        let mut gen_full = FMatrix::zeros(field, 1, psi.rows());
        let gc = gen_coord[u].as_ref().unwrap();
        for (i, &c) in gc.get_row(0).iter().enumerate() {
            gen_full.set(0, off1[s1] + i, c);
        }
        let img = gen_full.mul(&psi);
        let (piece_u, rows_u) = piece[u].as_ref().unwrap();
        let mut block = FMatrix::zeros(field, piece_u.dim, p0m.dim);
        for (r0, &t) in c0.summand_types.iter().enumerate() {
            let mut slice = FMatrix::zeros(field, 1, pim_dim(t));
            for i in 0..pim_dim(t) {
                let c = img.get(0, off0[r0] + i);
                if c != 0 {
                    slice.set(0, i, c);
                }
            }
            let a_elem = slice.mul(&sd.pim_rows[t]);
            let moved = rows_u.mul(&bim.left_action_of(&a_elem));
            let (_, rows_t) = piece[t].as_ref().unwrap();
            let coords = rows_t
                .transpose()
                .solve_right(&moved.transpose())
                .expect("left multiple stays inside its piece")
                .transpose();
            block = block.add(&coords.mul(&inj0[r0]));
        }
        for i in 0..block.rows() {
            img_rows.push_row(&block, i);
        }
    }

    let (quotient, _, _) = quotient_module(&p0m, &img_rows);
    Ok(quotient)
}
