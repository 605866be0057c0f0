//! Minimal projective covers of bimodules. The indecomposable projective
//! bimodules are A·e ⊗ f·A for primitive idempotents e, f; the greedy
//! generator search mirrors the one-sided cover: each accepted generator
//! contributes exactly one simple to the covered top, because e ⊗ f stays
//! primitive in the product algebra whenever the simple endomorphism fields
//! are the ground field itself (asserted).

use exactcore::{Echelonizer, FMatrix};

use crate::bimodule::{
    bimodule_direct_sum, bimodule_radical_rows, coords_in_rref, BimodContext, Bimodule,
    BimoduleHom,
};

/// The projective bimodule A·e_i ⊗ e_j·A on the basis u_r ⊗ w_s (row-major
/// pair index), with the pure-tensor rows kept for element bookkeeping.
pub struct PairProjective {
    pub i: usize,
    pub j: usize,
    pub u_rows: FMatrix,
    pub w_rows: FMatrix,
    pub bim: Bimodule,
}

pub fn pair_projective(ctx: &BimodContext, i: usize, j: usize) -> PairProjective {
    let a = &ctx.algebra;
    let sd = &ctx.module_ctx.simples;
    let (u_full, u_piv) = a.right_mult_matrix(&sd.idempotents[i]).rref();
    let u_rows = u_full.select_rows(&(0..u_piv.len()).collect::<Vec<_>>());
    let (w_full, w_piv) = a.left_mult_matrix(&sd.idempotents[j]).rref();
    let w_rows = w_full.select_rows(&(0..w_piv.len()).collect::<Vec<_>>());
    let du = u_rows.rows();
    let dw = w_rows.rows();
    let iu = FMatrix::identity(&a.field, du);
    let iw = FMatrix::identity(&a.field, dw);
    let mut left = Vec::with_capacity(a.dim);
    let mut right = Vec::with_capacity(a.dim);
    for g in 0..a.dim {
        let ul = coords_in_rref(&u_rows, &u_rows.mul(&a.left_mult_matrix(&a.basis_el(g))));
        left.push(ul.kron(&iw));
        let wr = coords_in_rref(&w_rows, &w_rows.mul(&a.structure[g]));
        right.push(iu.kron(&wr));
    }
    let bim = Bimodule { algebra: a.clone(), dim: du * dw, left, right };
    PairProjective { i, j, u_rows, w_rows, bim }
}

/// A minimal projective cover of a bimodule.
pub struct BimoduleCover {
    pub cover: Bimodule,
    pub summand_pairs: Vec<(usize, usize)>,
    pub parts: Vec<PairProjective>,
    pub map: BimoduleHom,
}

pub fn bimodule_cover(m: &Bimodule, ctx: &BimodContext) -> BimoduleCover {
    let a = &ctx.algebra;
    let f = &a.field;
    let sd = &ctx.module_ctx.simples;
    assert!(
        sd.end_dims.iter().all(|&d| d == 1),
        "pair covers require split simple endomorphism fields"
    );
    if m.dim == 0 {
        return BimoduleCover {
            cover: Bimodule { algebra: a.clone(), dim: 0, left: vec![FMatrix::zeros(f, 0, 0); a.dim], right: vec![FMatrix::zeros(f, 0, 0); a.dim] },
            summand_pairs: Vec::new(),
            parts: Vec::new(),
            map: BimoduleHom { mat: FMatrix::zeros(f, 0, 0) },
        };
    }
    let k = sd.idempotents.len();
    let rad_rows = bimodule_radical_rows(m);
    let mut covered = Echelonizer::new(f, m.dim);
    for r in 0..rad_rows.rows() {
        covered.insert(&rad_rows, r);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut gens: Vec<FMatrix> = Vec::new();
    while covered.rank() < m.dim {
        let mut found = false;
        'search: for i in 0..k {
            let li = m.left_action_of(&sd.idempotents[i]);
            for j in 0..k {
                let e_act = li.mul(&m.right_action_of(&sd.idempotents[j]));
                for r in 0..m.dim {
                    if !covered.contains(&e_act.get_row(r)) {
                        let v = e_act.select_rows(&[r]);
                        let mut worklist = vec![v.clone()];
                        covered.insert(&v, 0);
                        while let Some(w) = worklist.pop() {
                            for &g in a.generators() {
                                for img in [w.mul(&m.left[g]), w.mul(&m.right[g])] {
                                    if covered.insert(&img, 0).is_some() {
                                        worklist.push(img);
                                    }
                                }
                            }
                        }
                        pairs.push((i, j));
                        gens.push(v);
                        found = true;
                        break 'search;
                    }
                }
            }
        }
        assert!(found, "projective pair tops must cover the bimodule top");
    }
    let parts: Vec<PairProjective> = pairs.iter().map(|&(i, j)| pair_projective(ctx, i, j)).collect();
    let bims: Vec<&Bimodule> = parts.iter().map(|p| &p.bim).collect();
    let (cover, _) = bimodule_direct_sum(&bims);
    let mut map = FMatrix::zeros(f, 0, m.dim);
    for (part, v) in parts.iter().zip(&gens) {
        // generator e_i ⊗ e_j ↦ v, so basis u_r ⊗ w_s ↦ u_r·v·w_s
        for r in 0..part.u_rows.rows() {
            let lv = v.mul(&m.left_action_of(&part.u_rows.select_rows(&[r])));
            for s in 0..part.w_rows.rows() {
                let row = lv.mul(&m.right_action_of(&part.w_rows.select_rows(&[s])));
                map.push_row(&row, 0);
            }
        }
    }
    assert_eq!(map.rank(), m.dim, "cover map must be surjective");
    let ker = map.transpose().kernel_basis();
    let prad = bimodule_radical_rows(&cover);
    let mut prad_ech = Echelonizer::new(f, cover.dim);
    for r in 0..prad.rows() {
        prad_ech.insert(&prad, r);
    }
    for r in 0..ker.rows() {
        assert!(prad_ech.contains(&ker.get_row(r)), "cover must be essential");
    }
    let map = BimoduleHom { mat: map };
    debug_assert!(map.is_bimodule_map(&cover, m));
    BimoduleCover { cover, summand_pairs: pairs, parts, map }
}
