use bimod::{
    bimodule_cover, bimodule_direct_sum, bimodule_kernel, left_right_projective, BimodContext,
    Bimodule, BimoduleComplex, BimoduleCover, BimoduleHom, InducedBimodule,
};
use exactcore::{FMatrix, Scalar};

use crate::error::TwistError;

/// The iterated-kernel data built over a lifted complex: modules
/// M_1, ..., M_q, where M_1 is the kernel of the first map and each later
/// M_{p+1} sits in a short exact sequence
/// 0 → M_{p+1} → T_{p+1} ⊕ P_p → M_p → 0 combining the next complex term
/// with a minimal two-sided projective cover of M_p.
pub struct ConeData {
    /// M_1, ..., M_q.
    pub modules: Vec<Bimodule>,
    /// `includes[p]`: rows of M_{p+1} inside complex term p+1 (its
    /// coordinates there).
    pub includes: Vec<FMatrix>,
    /// `f_maps[p]`: the comparison map from complex term p+2 onto M_{p+1}.
    pub f_maps: Vec<FMatrix>,
    /// `u_maps[p]`: the component of the inclusion of M_{p+2} that lands in
    /// the cover of M_{p+1}.
    pub u_maps: Vec<FMatrix>,
    /// `covers[p]`: minimal two-sided projective cover of M_{p+1}.
    pub covers: Vec<BimoduleCover>,
    /// Whether the final module is projective as a left module and as a
    /// right module separately.
    pub final_left_right_projective: bool,
}

impl ConeData {
    /// The last iterated kernel — the candidate twisting bimodule.
    pub fn m_q(&self) -> &Bimodule {
        self.modules.last().expect("the construction produces at least one stage")
    }
}

/// Run the iterated-kernel construction over a lifted complex whose terms
/// are A followed by direct sums of copies of A ⊗_R A.
///
/// Surjectivity of the first (multiplication-type) map is a hard
/// precondition of the whole method: a degenerate head admits no twist at
/// all, so that case aborts with diagnostics instead of returning.
pub fn multiple_cone(
    ctx: &BimodContext,
    ind: &InducedBimodule,
    complex: &BimoduleComplex,
) -> Result<ConeData, TwistError> {
    let q = complex.maps.len();
    assert!(q >= 1, "the lifted complex must contain at least one differential");
    let a = &ctx.algebra;
    let f = &a.field;
    let n = complex.terms[0].dim;
    let d0_rank = complex.maps[0].mat.rank();
    assert_eq!(
        d0_rank, n,
        "the multiplication-type map must be surjective (rank {d0_rank} of {n}); \
         no twist can be constructed from a degenerate head"
    );

    let (m1, i1) = bimodule_kernel(&complex.terms[1], &complex.maps[0]);
    let mut modules = vec![m1];
    let mut includes = vec![i1];
    let mut f_maps: Vec<FMatrix> = Vec::new();
    let mut u_maps: Vec<FMatrix> = Vec::new();
    let mut covers: Vec<BimoduleCover> = Vec::new();

    let gen = ind.class_of(&a.unit, &a.unit);
    let d = ind.bim.dim;

    for p in 1..q {
        let (m_next, i_next, u_next, f_p, cov) = {
            let m_p = &modules[p - 1];
            let t_next = &complex.terms[p + 1];
            let d_next = &complex.maps[p].mat;
            let slots = t_next.dim / d;
            assert_eq!(slots * d, t_next.dim, "complex terms are sums of induced copies");

            let cov = bimodule_cover(m_p, ctx);
            // J presents M_p injectively inside its ambient data: the
            // inclusion into term p, extended by the previous cover
            // component after the first stage. Constraining against J pins
            // each generator image uniquely, which also forces it to
            // centralize R (the constraint right-hand side does).
            let j = match u_maps.last() {
                Some(u) => hconcat(&includes[p - 1], u),
                None => includes[p - 1].clone(),
            };
            let jt = j.transpose();
            let mut ys = Vec::with_capacity(slots);
            for s in 0..slots {
                let mut grow = FMatrix::zeros(f, 1, t_next.dim);
                grow.paste(0, s * d, &gen);
                let rhs_t = grow.mul(d_next);
                let mut rhs = FMatrix::zeros(f, 1, j.cols());
                rhs.paste(0, 0, &rhs_t);
                let y = jt.solve_right(&rhs.transpose()).map_err(|_| {
                    TwistError::LiftNotFound {
                        stage: p,
                        detail: format!(
                            "slot {s}: the comparison constraint system is inconsistent"
                        ),
                    }
                })?;
                ys.push(y.transpose());
            }
            let f_p = map_from_generator_images(ind, m_p, &ys);
            let mut expected = FMatrix::zeros(f, d_next.rows(), j.cols());
            expected.paste(0, 0, d_next);
            assert_eq!(
                f_p.mul(&j),
                expected,
                "the comparison map solves its defining equations"
            );

            let (total, _) = bimodule_direct_sum(&[t_next, &cov.cover]);
            let stacked = vstack(&f_p, &cov.map.mat);
            assert_eq!(
                stacked.rank(),
                m_p.dim,
                "comparison plus cover is onto, making the stage sequence exact"
            );
            let (m_next, incl) = bimodule_kernel(&total, &BimoduleHom { mat: stacked });
            assert_eq!(
                m_next.dim,
                t_next.dim + cov.cover.dim - m_p.dim,
                "the stage kernel has the exact-sequence dimension"
            );
            let (i_next, u_next) = split_cols(&incl, t_next.dim);
            (m_next, i_next, u_next, f_p, cov)
        };
        modules.push(m_next);
        includes.push(i_next);
        u_maps.push(u_next);
        f_maps.push(f_p);
        covers.push(cov);
    }

    let final_left_right_projective =
        left_right_projective(modules.last().expect("nonempty"), ctx);
    Ok(ConeData { modules, includes, f_maps, u_maps, covers, final_left_right_projective })
}

/// The bimodule map (A ⊗_R A)^k → X sending the s-th free generator 1 ⊗ 1
/// to `ys[s]`. Well defined exactly when each image centralizes R; the
/// callers guarantee that by construction.
fn map_from_generator_images(
    ind: &InducedBimodule,
    target: &Bimodule,
    ys: &[FMatrix],
) -> FMatrix {
    let a = &target.algebra;
    let f = &a.field;
    let n = a.dim;
    let d = ind.bim.dim;
    let mut section = FMatrix::zeros(f, 0, n * n);
    for c in 0..d {
        let mut coord = vec![0 as Scalar; d];
        coord[c] = 1;
        section.push_row_slice(&ind.quo.lift(&coord));
    }
    let mut mat = FMatrix::zeros(f, ys.len() * d, target.dim);
    for (s, y) in ys.iter().enumerate() {
        let mut pair_rows = FMatrix::zeros(f, 0, target.dim);
        for k in 0..n {
            let zk = y.mul(&target.left[k]);
            for l in 0..n {
                pair_rows.push_row(&zk.mul(&target.right[l]), 0);
            }
        }
        mat.paste(s * d, 0, &section.mul(&pair_rows));
    }
    mat
}

fn hconcat(a: &FMatrix, b: &FMatrix) -> FMatrix {
    assert_eq!(a.rows(), b.rows());
    let mut out = FMatrix::zeros(a.field(), a.rows(), a.cols() + b.cols());
    out.paste(0, 0, a);
    out.paste(0, a.cols(), b);
    out
}

fn vstack(a: &FMatrix, b: &FMatrix) -> FMatrix {
    assert_eq!(a.cols(), b.cols());
    let mut out = FMatrix::zeros(a.field(), a.rows() + b.rows(), a.cols());
    out.paste(0, 0, a);
    out.paste(a.rows(), 0, b);
    out
}

fn split_cols(m: &FMatrix, at: usize) -> (FMatrix, FMatrix) {
    let f = m.field();
    let mut left = FMatrix::zeros(f, m.rows(), at);
    let mut right = FMatrix::zeros(f, m.rows(), m.cols() - at);
    for r in 0..m.rows() {
        for c in 0..at {
            left.set(r, c, m.get(r, c));
        }
        for c in at..m.cols() {
            right.set(r, c - at, m.get(r, c));
        }
    }
    (left, right)
}
