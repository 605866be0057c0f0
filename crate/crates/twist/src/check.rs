use std::sync::Arc;

use algebra::{radical, symmetric_form, Algebra, Subalgebra};
use bimod::{induced_bimodule, BimodContext, InducedBimodule};
use exactcore::{Echelonizer, FMatrix};
use modrep::{
    cosyzygy, cosyzygy_map, direct_sum, is_projective, omega_map, quotient_module,
    restrict_to_subalgebra, simple_modules, syzygy, ModuleContext, ModuleHom, RightModule,
};
use resolutions::{pair_terms, verify_resolution};

use crate::complex::build_complex_with;
use crate::embed::EmbeddedResolution;
use crate::report::{ConditionVerdict, TripleReport};

/// Run every condition check for the candidate triple (ambient algebra,
/// subalgebra R, complement B) together with an embedded periodic
/// resolution of B, and classify the result. Failing conditions are
/// reported, never raised.
pub fn check_triple(
    ctx: &BimodContext,
    r: &Subalgebra,
    b: &Subalgebra,
    er: &EmbeddedResolution,
) -> TripleReport {
    let ind = induced_bimodule(ctx, r);
    check_triple_with(ctx, &ind, r, b, er)
}

pub(crate) fn check_triple_with(
    ctx: &BimodContext,
    ind: &InducedBimodule,
    r: &Subalgebra,
    b: &Subalgebra,
    er: &EmbeddedResolution,
) -> TripleReport {
    let a = &ctx.algebra;

    let a_symmetric = match symmetric_form(a) {
        Some(_) => ConditionVerdict::ok(format!(
            "symmetrizing form found on the {}-dimensional ambient algebra",
            a.dim
        )),
        None => ConditionVerdict::fail("no symmetrizing form on the ambient algebra"),
    };

    let r_alg = Arc::new(r.as_algebra());
    let rad_r = radical(&r_alg);
    let r_symmetric_nonsemisimple = if symmetric_form(&r_alg).is_none() {
        ConditionVerdict::fail("no symmetrizing form on the subalgebra")
    } else if rad_r.rows() == 0 {
        ConditionVerdict::fail("the subalgebra is semisimple (zero radical)")
    } else {
        ConditionVerdict::ok(format!(
            "subalgebra is symmetric with radical dimension {}",
            rad_r.rows()
        ))
    };

    let r_simples = simple_modules(&r_alg);
    let a_as_r = restrict_to_subalgebra(&RightModule::regular(a), r, &r_alg);
    let a_r_projective = if is_projective(&a_as_r, &r_simples) {
        ConditionVerdict::ok(format!(
            "the {}-dimensional ambient algebra is projective over the {}-dimensional subalgebra",
            a.dim,
            r.dim()
        ))
    } else {
        ConditionVerdict::fail("the ambient algebra is not projective over the subalgebra")
    };

    let cond_a = elementwise_commutation(a, r, b);
    let cond_a_prime = radical_exchange(a, r, &rad_r, b);
    let cond_b = stable_comparison(a, r, &r_alg, &rad_r, b);

    let (cond_c, cond_d, cond_e) = match er.validate(a) {
        Err(e) => {
            let msg = e.to_string();
            (
                ConditionVerdict::fail(msg.clone()),
                ConditionVerdict::fail(msg.clone()),
                ConditionVerdict::fail(msg),
            )
        }
        Ok(()) => {
            let rep = verify_resolution(&er.resolution);
            let cond_c = if rep.passes() {
                ConditionVerdict::ok(format!(
                    "period-{} resolution verified; term dimensions {:?}",
                    er.resolution.period, rep.term_dims
                ))
            } else {
                ConditionVerdict::fail(format!(
                    "resolution fails verification: shapes consistent {}, tail central {}, \
                     composites zero {:?}, homology {:?}",
                    rep.shapes_consistent, rep.tail_central, rep.composites_zero, rep.homology_dims
                ))
            };
            let cond_d = tail_commutation(ctx, ind, r, er);
            let cond_e = match build_complex_with(ctx, ind, r, b, er) {
                Ok(cx) => ConditionVerdict::ok(format!(
                    "lifted complex formed; term dimensions {:?}",
                    cx.terms.iter().map(|t| t.dim).collect::<Vec<_>>()
                )),
                Err(e) => ConditionVerdict::fail(e.to_string()),
            };
            (cond_c, cond_d, cond_e)
        }
    };

    let mut report = TripleReport {
        a_symmetric,
        r_symmetric_nonsemisimple,
        a_r_projective,
        cond_a,
        cond_a_prime,
        cond_b,
        cond_c,
        cond_d,
        cond_e,
        overall: crate::report::AssumptionLevel::Fail,
    };
    report.overall = report.classify();
    report
}

/// Condition (a): each basis element of B commutes with each basis element
/// of R inside the ambient algebra.
fn elementwise_commutation(a: &Arc<Algebra>, r: &Subalgebra, b: &Subalgebra) -> ConditionVerdict {
    let f = &a.field;
    for i in 0..b.dim() {
        let mut bi = FMatrix::zeros(f, 0, a.dim);
        bi.push_row(&b.basis, i);
        for j in 0..r.dim() {
            let mut rj = FMatrix::zeros(f, 0, a.dim);
            rj.push_row(&r.basis, j);
            if a.mul(&bi, &rj) != a.mul(&rj, &bi) {
                return ConditionVerdict::fail(format!(
                    "{} and {} do not commute",
                    a.pretty(&bi),
                    a.pretty(&rj)
                ));
            }
        }
    }
    ConditionVerdict::ok("every basis element of B commutes with every basis element of R")
}

/// Condition (a'): the two products (rad R)·B and B·(rad R) span the same
/// subspace of the ambient algebra.
fn radical_exchange(
    a: &Arc<Algebra>,
    r: &Subalgebra,
    rad_r: &FMatrix,
    b: &Subalgebra,
) -> ConditionVerdict {
    let f = &a.field;
    let mut left = Echelonizer::new(f, a.dim);
    let mut right = Echelonizer::new(f, a.dim);
    let mut both = Echelonizer::new(f, a.dim);
    for k in 0..rad_r.rows() {
        let mut rk = FMatrix::zeros(f, 0, r.dim());
        rk.push_row(rad_r, k);
        let rho = rk.mul(&r.basis);
        for i in 0..b.dim() {
            let mut bi = FMatrix::zeros(f, 0, a.dim);
            bi.push_row(&b.basis, i);
            let rb = a.mul(&rho, &bi);
            let br = a.mul(&bi, &rho);
            left.insert(&rb, 0);
            right.insert(&br, 0);
            both.insert(&rb, 0);
            both.insert(&br, 0);
        }
    }
    let (l, rt, all) = (left.rank(), right.rank(), both.rank());
    if l == rt && l == all {
        ConditionVerdict::ok(format!(
            "(rad R)·B and B·(rad R) span the same {l}-dimensional subspace"
        ))
    } else {
        ConditionVerdict::fail(format!(
            "(rad R)·B spans dimension {l}, B·(rad R) spans dimension {rt}, together {all}"
        ))
    }
}

/// Condition (b): the canonical map B ⊗ (R/rad R) → A/(rad R)A, sending
/// b ⊗ class(r) to the class of b·r, is a homomorphism of right R-modules
/// and an isomorphism in the stable module category of R. The stable check
/// replaces both sides by projective-free representatives (syzygy of the
/// cosyzygy) and tests the transported map for bijectivity.
fn stable_comparison(
    a: &Arc<Algebra>,
    r: &Subalgebra,
    r_alg: &Arc<Algebra>,
    rad_r: &FMatrix,
    b: &Subalgebra,
) -> ConditionVerdict {
    let f = &a.field;
    let n = a.dim;
    let nb = b.dim();
    if rad_r.rows() == 0 {
        return ConditionVerdict::fail(
            "the subalgebra has zero radical, so the stable comparison is vacuous",
        );
    }

    let reg_r = RightModule::regular(r_alg);
    let (rbar, _, rbar_lift) = quotient_module(&reg_r, rad_r);
    let copies: Vec<RightModule> = (0..nb).map(|_| rbar.clone()).collect();
    let (source, _) = direct_sum(&copies);

    let a_as_r = restrict_to_subalgebra(&RightModule::regular(a), r, r_alg);
    let ideal = radical_ideal_rows(a, r, rad_r);
    let (target, t_proj, _) = quotient_module(&a_as_r, &ideal);

    let mut phi = FMatrix::zeros(f, source.dim, target.dim);
    for i in 0..nb {
        let mut bi = FMatrix::zeros(f, 0, n);
        bi.push_row(&b.basis, i);
        for c in 0..rbar.dim {
            let mut cc = FMatrix::zeros(f, 0, r_alg.dim);
            cc.push_row(&rbar_lift, c);
            let r_amb = cc.mul(&r.basis);
            let t_coords = a.mul(&bi, &r_amb).mul(&t_proj);
            for (l, &v) in t_coords.get_row(0).iter().enumerate() {
                phi.set(i * rbar.dim + c, l, v);
            }
        }
    }
    let phi = ModuleHom { mat: phi };
    if !phi.is_intertwiner(&source, &target) {
        return ConditionVerdict::fail(
            "the comparison map is not a homomorphism of right modules over the subalgebra",
        );
    }

    let r_ctx = ModuleContext::new(r_alg);
    if !r_ctx.self_injective {
        return ConditionVerdict::fail("the subalgebra is not self-injective");
    }
    let cs = match cosyzygy(&source, &r_ctx) {
        Ok(c) => c,
        Err(e) => return ConditionVerdict::fail(format!("cosyzygy of the source failed: {e}")),
    };
    let ct = match cosyzygy(&target, &r_ctx) {
        Ok(c) => c,
        Err(e) => return ConditionVerdict::fail(format!("cosyzygy of the target failed: {e}")),
    };
    let phi1 = cosyzygy_map(&phi, &cs, &ct);
    let ss = match syzygy(&cs.module, &r_ctx) {
        Ok(s) => s,
        Err(e) => return ConditionVerdict::fail(format!("syzygy of the source failed: {e}")),
    };
    let st = match syzygy(&ct.module, &r_ctx) {
        Ok(s) => s,
        Err(e) => return ConditionVerdict::fail(format!("syzygy of the target failed: {e}")),
    };
    let phi2 = omega_map(&phi1, &ss, &st);
    let (rows, cols) = (phi2.mat.rows(), phi2.mat.cols());
    let rank = phi2.mat.rank();
    if rows == cols && rank == rows {
        ConditionVerdict::ok(format!(
            "stable comparison map is bijective on {rows}-dimensional projective-free \
             representatives (source dim {}, target dim {})",
            source.dim, target.dim
        ))
    } else {
        ConditionVerdict::fail(format!(
            "stable comparison map has a {rows}x{cols} representative of rank {rank}"
        ))
    }
}

/// Rows spanning (rad R)·A inside the ambient algebra.
pub(crate) fn radical_ideal_rows(a: &Arc<Algebra>, r: &Subalgebra, rad_r: &FMatrix) -> FMatrix {
    let f = &a.field;
    let mut rows = FMatrix::zeros(f, 0, a.dim);
    for k in 0..rad_r.rows() {
        let mut rk = FMatrix::zeros(f, 0, r.dim());
        rk.push_row(rad_r, k);
        let rho = rk.mul(&r.basis);
        for j in 0..a.dim {
            rows.push_row(&a.mul(&rho, &a.basis_el(j)), 0);
        }
    }
    rows
}

/// Condition (d): the image of the closing differential, read inside
/// A ⊗_R A slot by slot, commutes with every element of R.
fn tail_commutation(
    ctx: &BimodContext,
    ind: &InducedBimodule,
    r: &Subalgebra,
    er: &EmbeddedResolution,
) -> ConditionVerdict {
    let a = &ctx.algebra;
    let f = &a.field;
    let res = &er.resolution;
    let nb = res.algebra.dim;
    for (s, t) in res.tail.iter().enumerate() {
        let mut x = FMatrix::zeros(f, 1, ind.bim.dim);
        for (coeff, i, j) in pair_terms(t, nb) {
            let cls = ind.class_of(&er.ambient_row(i), &er.ambient_row(j));
            x = x.add(&cls.scale(coeff));
        }
        for k in 0..r.dim() {
            let mut rk = FMatrix::zeros(f, 0, a.dim);
            rk.push_row(&r.basis, k);
            let lhs = x.mul(&ind.bim.left_action_of(&rk));
            let rhs = x.mul(&ind.bim.right_action_of(&rk));
            if lhs != rhs {
                return ConditionVerdict::fail(format!(
                    "slot {s}: the distinguished image fails to commute with {}",
                    a.pretty(&rk)
                ));
            }
        }
    }
    ConditionVerdict::ok(format!(
        "the closing differential image commutes with R in all {} slot(s)",
        res.tail.len()
    ))
}
