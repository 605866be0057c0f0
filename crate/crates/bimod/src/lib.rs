//! Bimodules over a finite-dimensional algebra with exact arithmetic:
//! factored two-sided actions, induction A ⊗_R A along a subalgebra with
//! its multiplication map, sub/quotient/kernel/sum constructions, minimal
//! projective covers, lifting of free-bimodule maps through induction, and
//! tensoring one-sided modules with bimodules.

mod apply;
mod bimodule;
mod cover;
mod induced;
mod lift;

pub use apply::apply_bimodule;
pub use bimodule::{
    bimodule_direct_sum, bimodule_kernel, bimodule_radical_rows, left_right_projective,
    quotient_bimodule, sub_bimodule_spanned, BimodContext, Bimodule, BimoduleComplex,
    BimoduleHom,
};
pub use cover::{bimodule_cover, pair_projective, BimoduleCover, PairProjective};
pub use induced::{induced_bimodule, mult_map, InducedBimodule};
pub use lift::{lift_h, to_a_map, twisted_lift, FreeBimoduleMap, LiftError, TwistedLift};

#[cfg(test)]
mod tests {
    use std::sync::{Arc, OnceLock};

    use algebra::{
        group_algebra, parse_element, quiver_algebra, subalgebra_gen, Algebra,
        QuiverPresentation,
    };
    use exactcore::{make_field, FMatrix, Scalar};
    use modrep::{
        is_projective, iso_test, loewy, module_radical_rows, relative_syzygy,
        strip_projectives, trivial_module, ModError, RightModule,
    };
    use permgroup::{enumerate, Perm};

    use super::*;

    fn gf(p: u64) -> exactcore::Field {
        make_field(p, 1, &[0, 1]).unwrap()
    }

    fn cyclic2() -> Arc<Algebra> {
        let f = gf(2);
        let g = enumerate(2, &[Perm::from_cycles(2, &[vec![1, 2]]).unwrap()]).unwrap();
        Arc::new(group_algebra(&f, &g))
    }

    fn s4_gf4() -> Arc<Algebra> {
        let f = make_field(2, 2, &[1, 1, 1]).unwrap();
        let g = enumerate(
            4,
            &[
                Perm::from_cycles(4, &[vec![1, 2]]).unwrap(),
                Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        Arc::new(group_algebra(&f, &g))
    }

    fn brauer() -> Arc<Algebra> {
        let f = gf(2);
        let pres = QuiverPresentation {
            vertices: 2,
            arrows: vec![
                ("a".into(), 1, 1),
                ("b".into(), 2, 2),
                ("g".into(), 1, 2),
                ("d".into(), 2, 1),
            ],
            relations: vec![
                "g*b*d*a*g*b*d*a - a*g*b*d*a*g*b*d".into(),
                "d*a*g*b*d*a*g*b - b*d*a*g*b*d*a*g".into(),
                "a*a".into(),
                "g*d".into(),
                "b*b".into(),
                "d*g".into(),
            ],
            nilpotency_bound: 9,
        };
        Arc::new(quiver_algebra(&f, &pres).unwrap())
    }

    #[test]
    fn regular_bimodule_and_pair_projectives_over_cyclic_two() {
        let a = cyclic2();
        let ctx = BimodContext::new(&a);
        let reg = Bimodule::regular(&a);
        reg.verify();
        // the product-algebra view agrees with the factored one
        let env_view = reg.to_env_module();
        assert_eq!(env_view.dim, 2);
        assert_eq!(env_view.algebra.dim, 4);
        let mr = module_radical_rows(&env_view);
        let br = bimodule_radical_rows(&reg);
        assert_eq!(mr.rref().0, br.rref().0);
        // free on each side, but not projective two-sidedly: the cover of
        // the regular bimodule has a 2-dimensional kernel
        assert!(left_right_projective(&reg, &ctx));
        let cov = bimodule_cover(&reg, &ctx);
        assert_eq!(cov.summand_pairs, vec![(0, 0)]);
        assert_eq!(cov.cover.dim, 4);
        let (ker, ker_incl) = bimodule_kernel(&cov.cover, &cov.map);
        assert_eq!(ker.dim, 2);
        // pair projectives really are projective over the product algebra
        let p = pair_projective(&ctx, 0, 0);
        p.bim.verify();
        assert!(left_right_projective(&p.bim, &ctx));
        let env_sd = modrep::simple_modules(&p.bim.to_env_module().algebra);
        assert!(is_projective(&p.bim.to_env_module(), &env_sd));
        let cov_p = bimodule_cover(&p.bim, &ctx);
        assert_eq!(cov_p.cover.dim, p.bim.dim);
        let (ker_p, _) = bimodule_kernel(&cov_p.cover, &cov_p.map);
        assert_eq!(ker_p.dim, 0);
        // the one-dimensional bimodule with both actions trivial is a valid
        // bimodule but fails the two-sided projectivity test
        let f = &a.field;
        let idm = FMatrix::identity(f, 1);
        let simple = Bimodule {
            algebra: Arc::clone(&a),
            dim: 1,
            left: vec![idm.clone(); 2],
            right: vec![idm; 2],
        };
        simple.verify();
        assert!(!left_right_projective(&simple, &ctx));
        // kernel inclusion followed by the cover map assembles into a
        // two-step complex
        let complex = BimoduleComplex {
            terms: vec![reg.clone(), cov.cover.clone(), ker.clone()],
            maps: vec![cov.map.clone(), BimoduleHom { mat: ker_incl.clone() }],
        };
        assert!(complex.verify());
        let broken = BimoduleComplex {
            terms: complex.terms.clone(),
            maps: vec![cov.map.clone(), BimoduleHom { mat: FMatrix::identity(f, 4) }],
        };
        assert!(!broken.verify());
    }

    #[test]
    fn induction_along_scalars_is_free_of_rank_one() {
        let a = cyclic2();
        let ctx = BimodContext::new(&a);
        let unit_only = subalgebra_gen(&a, &[]);
        assert_eq!(unit_only.dim(), 1);
        let ind = induced_bimodule(&ctx, &unit_only);
        assert_eq!(ind.bim.dim, 4);
        ind.bim.verify();
        let env = ind.bim.to_env_module();
        let free = RightModule::regular(&env.algebra);
        assert!(iso_test(&env, &free).unwrap().is_iso());
        let d0 = mult_map(&ctx, &ind);
        assert_eq!(d0.mat.rank(), 2);
    }

    #[test]
    fn sums_and_quotients_of_bimodules_roundtrip() {
        let a = cyclic2();
        let ctx = BimodContext::new(&a);
        let p = pair_projective(&ctx, 0, 0);
        let reg = Bimodule::regular(&a);
        let (sum, inj) = bimodule_direct_sum(&[&p.bim, &reg]);
        assert_eq!(sum.dim, 6);
        sum.verify();
        let (quo, _) = quotient_bimodule(&sum, &inj[0]);
        quo.verify();
        assert_eq!(quo.dim, reg.dim);
        let (sub, _) = sub_bimodule_spanned(&sum, &inj[1]);
        assert_eq!(sub.dim, reg.dim);
    }

    #[test]
    fn induction_along_transposition_span() {
        let a = s4_gf4();
        let ctx = BimodContext::new(&a);
        let r = subalgebra_gen(&a, &[parse_element(&a, "(12)").unwrap()]);
        assert_eq!(r.dim(), 2);
        let ind = induced_bimodule(&ctx, &r);
        assert_eq!(ind.bim.dim, 288);
        ind.bim.verify();
        let d0 = mult_map(&ctx, &ind);
        assert_eq!(d0.mat.rank(), 24);
        let (kernel, _) = bimodule_kernel(&ind.bim, &BimoduleHom { mat: d0.mat.clone() });
        assert_eq!(kernel.dim, 264);
        assert!(left_right_projective(&ind.bim, &ctx));
        assert!(left_right_projective(&kernel, &ctx));

        // inducing along the whole algebra changes nothing
        let full = subalgebra_gen(
            &a,
            &[
                parse_element(&a, "(12)").unwrap(),
                parse_element(&a, "(1234)").unwrap(),
            ],
        );
        assert_eq!(full.dim(), 24);
        let ind_full = induced_bimodule(&ctx, &full);
        assert_eq!(ind_full.bim.dim, 24);
        let d0_full = mult_map(&ctx, &ind_full);
        assert_eq!(d0_full.mat.rank(), 24);

        // the identity of the free rank-one bimodule lifts to the identity
        let b = subalgebra_gen(&a, &[parse_element(&a, "(34)").unwrap()]);
        let b_unit = b.coords(&a.unit).unwrap();
        let id_map = FreeBimoduleMap::identity(&b_unit);
        let h_id = lift_h(&ctx, &ind, &b, &id_map).unwrap();
        assert_eq!(h_id.mat, FMatrix::identity(&a.field, 288));

        // sending the generator to the unit of B recovers the
        // multiplication map
        let down = to_a_map(&ctx, &ind, &b, &[b_unit.clone()]);
        assert_eq!(down.mat, d0.mat);

        // lifting is functorial: x⊗1 then 1⊗x composes to x⊗x
        let x = b.coords(&parse_element(&a, "1 + (34)").unwrap()).unwrap();
        let g1 = FreeBimoduleMap { images: vec![vec![x.kron(&b_unit)]] };
        let g2 = FreeBimoduleMap { images: vec![vec![b_unit.kron(&x)]] };
        let b_alg = b.as_algebra();
        let g12 = g1.compose(&g2, &b_alg);
        let h1 = lift_h(&ctx, &ind, &b, &g1).unwrap();
        let h2 = lift_h(&ctx, &ind, &b, &g2).unwrap();
        let h12 = lift_h(&ctx, &ind, &b, &g12).unwrap();
        assert_eq!(h12.mat, h1.mat.mul(&h2.mat));

        // the symmetrised generator image lifts when the complement
        // commutes with R …
        let e = parse_element(&a, "1").unwrap();
        let t34 = parse_element(&a, "(34)").unwrap();
        let terms = vec![(1 as Scalar, e.clone(), e.clone()), (1, t34.clone(), t34.clone())];
        let tw = twisted_lift(&ctx, &ind, &b, &r, &terms).unwrap();
        let alpha = BimoduleHom { mat: tw.alpha.mat.clone() };
        assert!(alpha.is_bimodule_map(&ind.bim, &ind.bim));
        // … and sends the class of 1 ⊗ 1 to the distinguished image
        let one_cls = ind.class_of(&a.unit, &a.unit);
        assert_eq!(one_cls.mul(&tw.alpha.mat), tw.delta_image);

        // a complement that fails to commute with R is rejected
        let b_bad = subalgebra_gen(&a, &[parse_element(&a, "(13)").unwrap()]);
        let t13 = parse_element(&a, "(13)").unwrap();
        let bad_terms = vec![(1 as Scalar, e.clone(), e), (1, t13.clone(), t13)];
        assert_eq!(
            twisted_lift(&ctx, &ind, &b_bad, &r, &bad_terms).unwrap_err(),
            LiftError::LiftFailsCommutation
        );
    }

    #[test]
    fn induction_along_klein_span_matches_relative_tensor() {
        let a = s4_gf4();
        let ctx = BimodContext::new(&a);
        let r = subalgebra_gen(
            &a,
            &[
                parse_element(&a, "(12)").unwrap(),
                parse_element(&a, "(34)").unwrap(),
            ],
        );
        assert_eq!(r.dim(), 4);
        let ind = induced_bimodule(&ctx, &r);
        assert_eq!(ind.bim.dim, 144);
        let d0 = mult_map(&ctx, &ind);
        let (kernel, _) = bimodule_kernel(&ind.bim, &BimoduleHom { mat: d0.mat.clone() });
        assert_eq!(kernel.dim, 120);

        // tensoring the trivial module with A ⊗_R A is the relative tensor
        let k = trivial_module(&a).unwrap();
        let via_bimodule = apply_bimodule(&k, &ind.bim, &ctx).unwrap();
        let rs = relative_syzygy(&k, &r).unwrap();
        assert_eq!(rs.tensor.dim, 6);
        assert_eq!(via_bimodule.dim, 6);
        assert!(iso_test(&via_bimodule, &rs.tensor).unwrap().is_iso());
    }

    #[test]
    fn tensor_with_regular_bimodule_is_identity() {
        let a = s4_gf4();
        let ctx = BimodContext::new(&a);
        let reg = Bimodule::regular(&a);
        let s = ctx.module_ctx.simples.simples[1].clone();
        let got = apply_bimodule(&s, &reg, &ctx).unwrap();
        assert!(iso_test(&got, &s).unwrap().is_iso());
        let p = ctx.module_ctx.simples.pims[0].clone();
        let got_p = apply_bimodule(&p, &reg, &ctx).unwrap();
        assert!(iso_test(&got_p, &p).unwrap().is_iso());
        // modules over a different algebra are rejected
        let other = cyclic2();
        let foreign = RightModule::regular(&other);
        assert!(matches!(
            apply_bimodule(&foreign, &reg, &ctx),
            Err(ModError::AlgebraMismatch)
        ));
    }

    #[test]
    fn cover_of_regular_bimodule_over_symmetric_group() {
        let a = s4_gf4();
        let ctx = BimodContext::new(&a);
        let reg = Bimodule::regular(&a);
        let cov = bimodule_cover(&reg, &ctx);
        let mut pairs = cov.summand_pairs.clone();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![(0, 0), (1, 1)]);
        assert_eq!(cov.cover.dim, 128);
        let (ker, _) = bimodule_kernel(&cov.cover, &cov.map);
        assert_eq!(ker.dim, 104);
        assert!(left_right_projective(&ker, &ctx));
    }

    #[test]
    fn uniserial_core_of_tensor_with_multiplication_kernel() {
        let a = brauer();
        let ctx = BimodContext::new(&a);
        let e1 = parse_element(&a, "e1").unwrap();
        let la = parse_element(&a, "a").unwrap();
        let lb = parse_element(&a, "b").unwrap();
        let r = subalgebra_gen(&a, &[e1, la, lb]);
        assert_eq!(r.dim(), 4);
        let ind = induced_bimodule(&ctx, &r);
        assert_eq!(ind.bim.dim, 256);
        let d0 = mult_map(&ctx, &ind);
        assert_eq!(d0.mat.rank(), 32);
        let (kernel, _) = bimodule_kernel(&ind.bim, &BimoduleHom { mat: d0.mat.clone() });
        assert_eq!(kernel.dim, 224);
        assert!(left_right_projective(&kernel, &ctx));

        let s1 = ctx.module_ctx.simples.simples[0].clone();
        assert_eq!(s1.dim, 1);
        let tensored = apply_bimodule(&s1, &kernel, &ctx).unwrap();
        let stripped = strip_projectives(&tensored, &ctx.module_ctx).unwrap();
        assert_eq!(stripped.core.dim, 7);
        let profile = loewy(&stripped.core, &ctx.module_ctx.simples);
        assert_eq!(profile.to_string(), "[2]/[2]/[1]/[1]/[2]/[2]/[1]");
    }

    static PROP_BIMS: OnceLock<(Arc<Algebra>, Vec<Bimodule>)> = OnceLock::new();

    fn prop_fixtures() -> &'static (Arc<Algebra>, Vec<Bimodule>) {
        PROP_BIMS.get_or_init(|| {
            let a = s4_gf4();
            let ctx = BimodContext::new(&a);
            let bims = vec![Bimodule::regular(&a), pair_projective(&ctx, 0, 1).bim];
            (a, bims)
        })
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        #[test]
        fn action_laws_hold_for_random_elements(xs in proptest::collection::vec(0u16..4, 24),
                                                ys in proptest::collection::vec(0u16..4, 24)) {
            let (a, bims) = prop_fixtures();
            let f = &a.field;
            let x = FMatrix::row_matrix(f, &xs);
            let y = FMatrix::row_matrix(f, &ys);
            let xy = a.mul(&x, &y);
            for bim in bims {
                // right action is multiplicative, left action reverses
                // products, and the two sides commute
                proptest::prop_assert_eq!(
                    bim.right_action_of(&xy),
                    bim.right_action_of(&x).mul(&bim.right_action_of(&y))
                );
                proptest::prop_assert_eq!(
                    bim.left_action_of(&xy),
                    bim.left_action_of(&y).mul(&bim.left_action_of(&x))
                );
                proptest::prop_assert_eq!(
                    bim.left_action_of(&x).mul(&bim.right_action_of(&y)),
                    bim.right_action_of(&y).mul(&bim.left_action_of(&x))
                );
            }
        }
    }
}
