//! Group-algebra-specific constructions: trivial modules, internal-hom
//! modules and endo-triviality, and syzygies relative to a subalgebra.

use std::sync::Arc;

use algebra::{Algebra, Subalgebra};
use exactcore::{Echelonizer, FMatrix, Quotient, Scalar};

use crate::hom::iso_test;
use crate::module::{
    restrict_to_subalgebra, submodule_spanned, ModError, ModuleHom, RightModule,
};
use crate::proj::{is_projective, strip_projectives, ModuleContext};
use crate::simples::simple_modules;

/// Recognise a group-like basis: every product of basis elements is a
/// single basis element with coefficient 1, the unit is a basis element,
/// and inverses exist. Returns (multiplication table, inverses, unit
/// index).
pub fn group_like_table(a: &Algebra) -> Option<(Vec<Vec<usize>>, Vec<usize>, usize)> {
    let n = a.dim;
    let mut table = vec![vec![0usize; n]; n];
    for j in 0..n {
        let m = &a.structure[j];
        for i in 0..n {
            let row = m.get_row(i);
            let mut hits = row.iter().enumerate().filter(|(_, &c)| c != 0);
            let (k, &c) = hits.next()?;
            if c != 1 || hits.next().is_some() {
                return None;
            }
            table[i][j] = k;
        }
    }
    let unit_row = a.unit.get_row(0);
    let mut unit_hits = unit_row.iter().enumerate().filter(|(_, &c)| c != 0);
    let (unit_idx, &uc) = unit_hits.next()?;
    if uc != 1 || unit_hits.next().is_some() {
        return None;
    }
    let mut inverses = vec![usize::MAX; n];
    for i in 0..n {
        let inv = (0..n).find(|&j| table[i][j] == unit_idx)?;
        if table[inv][i] != unit_idx {
            return None;
        }
        inverses[i] = inv;
    }
    Some((table, inverses, unit_idx))
}

/// The trivial one-dimensional module of a group algebra: every group
/// element acts as 1.
pub fn trivial_module(a: &Arc<Algebra>) -> Result<RightModule, ModError> {
    if group_like_table(a).is_none() {
        return Err(ModError::NotGroupAlgebra);
    }
    let f = &a.field;
    let one = FMatrix::identity(f, 1);
    Ok(RightModule {
        algebra: a.clone(),
        dim: 1,
        action: (0..a.dim).map(|_| one.clone()).collect(),
    })
}

/// End_k(M) as a right module over a group algebra, with g acting by
/// f ↦ (m ↦ f(m·g⁻¹)·g).
pub fn internal_end_module(m: &RightModule) -> Result<RightModule, ModError> {
    let a = &m.algebra;
    let Some((_, inverses, _)) = group_like_table(a) else {
        return Err(ModError::NotGroupAlgebra);
    };
    let action: Vec<FMatrix> = (0..a.dim)
        .map(|g| m.action[inverses[g]].transpose().kron(&m.action[g]))
        .collect();
    let out = RightModule { algebra: a.clone(), dim: m.dim * m.dim, action };
    out.verify();
    Ok(out)
}

#[derive(Debug)]
pub struct EndoTrivialReport {
    pub end_dim: usize,
    pub core_dim: usize,
    pub endo_trivial: bool,
}

/// Is End_k(M) stably isomorphic to the trivial module? (The stable core
/// of the internal end module must be the trivial module.)
pub fn endo_trivial_test(
    m: &RightModule,
    ctx: &ModuleContext,
) -> Result<EndoTrivialReport, ModError> {
    let e = internal_end_module(m)?;
    let triv = trivial_module(&m.algebra)?;
    let stripped = strip_projectives(&e, ctx)?;
    let verdict = iso_test(&stripped.core, &triv)?;
    Ok(EndoTrivialReport {
        end_dim: e.dim,
        core_dim: stripped.core.dim,
        endo_trivial: verdict.is_iso(),
    })
}

/// X ⊗_R A together with the counit onto X and its kernel (the syzygy of
/// X relative to R).
pub struct RelativeSyzygy {
    pub tensor: RightModule,
    pub counit: ModuleHom,
    pub kernel: RightModule,
    pub kernel_rows: FMatrix,
}

/// The relative syzygy of X with respect to a subalgebra R of A: the
/// kernel of the counit X ⊗_R A → X. Requires A to be projective as a
/// right R-module, which makes the counit split as R-maps.
pub fn relative_syzygy(x: &RightModule, r: &Subalgebra) -> Result<RelativeSyzygy, ModError> {
    let a = &x.algebra;
    let f = &a.field;
    let r_alg = Arc::new(r.as_algebra());
    let r_simples = simple_modules(&r_alg);
    let a_restricted = restrict_to_subalgebra(&RightModule::regular(a), r, &r_alg);
    if !is_projective(&a_restricted, &r_simples) {
        return Err(ModError::RestrictionNotProjective);
    }

    let dx = x.dim;
    let da = a.dim;
    let amb = dx * da; // index (i, j) -> i*da + j for x_i ⊗ b_j
    let mut rel = Echelonizer::new(f, amb);
    for rr in 0..r.dim() {
        let mut r_amb = FMatrix::zeros(f, 0, da);
        r_amb.push_row(&r.basis, rr);
        let xr = x.action_of(&r_amb); // right action of r on X
        let ra = a.left_mult_matrix(&r_amb); // row j = r·b_j
        for i in 0..dx {
            for j in 0..da {
                // (x_i·r) ⊗ b_j − x_i ⊗ (r·b_j)
                let mut row = vec![0 as Scalar; amb];
                for (k, &c) in xr.get_row(i).iter().enumerate() {
                    if c != 0 {
                        row[k * da + j] = f.add(row[k * da + j], c);
                    }
                }
                for (l, &c) in ra.get_row(j).iter().enumerate() {
                    if c != 0 {
                        row[i * da + l] = f.sub(row[i * da + l], c);
                    }
                }
                rel.insert_slice(&row);
            }
        }
    }
    let quo = Quotient::new(rel);
    let d = quo.dim();

    let mut action = Vec::with_capacity(da);
    for g in 0..da {
        let mut ag = FMatrix::zeros(f, 0, d);
        for rr in 0..d {
            let mut coord = vec![0 as Scalar; d];
            coord[rr] = 1;
            let w = quo.lift(&coord);
            // apply 1 ⊗ (right multiplication by b_g) blockwise
            let mut out = vec![0 as Scalar; amb];
            for i in 0..dx {
                for j in 0..da {
                    let c = w[i * da + j];
                    if c != 0 {
                        let prod = a.structure[g].get_row(j); // b_j·b_g
                        for (l, &p) in prod.iter().enumerate() {
                            if p != 0 {
                                out[i * da + l] = f.add(out[i * da + l], f.mul(c, p));
                            }
                        }
                    }
                }
            }
            ag.push_row_slice(&quo.project(&out));
        }
        action.push(ag);
    }
    let tensor = RightModule { algebra: a.clone(), dim: d, action };
    tensor.verify();

    let mut counit = FMatrix::zeros(f, 0, dx);
    for rr in 0..d {
        let mut coord = vec![0 as Scalar; d];
        coord[rr] = 1;
        let w = quo.lift(&coord);
        let mut img = FMatrix::zeros(f, 1, dx);
        for i in 0..dx {
            for j in 0..da {
                let c = w[i * da + j];
                if c != 0 {
                    // x_i · b_j, scaled by c
                    for (l, &p) in x.action[j].get_row(i).iter().enumerate() {
                        if p != 0 {
                            let v = f.add(img.get(0, l), f.mul(c, p));
                            img.set(0, l, v);
                        }
                    }
                }
            }
        }
        counit.push_row(&img, 0);
    }
    let counit = ModuleHom { mat: counit };
    debug_assert!(counit.is_intertwiner(&tensor, x));
    assert_eq!(counit.mat.rank(), dx, "counit is onto (x ↦ x ⊗ 1 splits it)");

    let ker_rows = counit.mat.transpose().kernel_basis();
    let (kernel, kernel_rows) = submodule_spanned(&tensor, &ker_rows);
    Ok(RelativeSyzygy { tensor, counit, kernel, kernel_rows })
}
