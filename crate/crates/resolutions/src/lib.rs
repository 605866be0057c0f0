//! Periodic free bimodule resolutions of symmetric algebras: built-in
//! families (truncated polynomial algebras, cyclic group algebras in
//! defining characteristic), a parser for explicitly given differentials,
//! the module-to-bimodule transport functor Φ, and a rank-based exactness
//! verifier that materializes every differential.

mod error;
mod families;
mod parse;
mod phi;
mod resolution;

pub use error::ResolutionError;
pub use families::{
    char_p_period1_resolution, group_trivial_resolution, pair_terms,
    truncated_poly_resolution, GroupResolutions,
};
pub use parse::parse_tensor_element;
pub use phi::phi_functor;
pub use resolution::{verify_resolution, PeriodicResolution, ResolutionReport};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use algebra::{group_algebra, Algebra};
    use bimod::{Bimodule, FreeBimoduleMap};
    use exactcore::{make_field, FMatrix, Field};
    use modrep::{direct_sum, group_like_table, iso_test, trivial_module, RightModule};
    use permgroup::{enumerate, Perm};

    use super::*;

    fn gf(p: u64) -> Field {
        make_field(p, 1, &[0, 1]).unwrap()
    }

    fn truncated(f: &Field, n: usize) -> Arc<Algebra> {
        let labels: Vec<String> = (0..n)
            .map(|i| match i {
                0 => "1".into(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            })
            .collect();
        let mut unit = vec![0; n];
        unit[0] = 1;
        Arc::new(Algebra::from_mult_table(f, labels, &unit, |i, j| {
            let mut row = vec![0; n];
            if i + j < n {
                row[i + j] = 1;
            }
            row
        }))
    }

    fn cyclic(f: &Field, n: usize) -> Arc<Algebra> {
        let cycle: Vec<usize> = (1..=n).collect();
        let g = enumerate(n, &[Perm::from_cycles(n, &[cycle]).unwrap()]).unwrap();
        Arc::new(group_algebra(f, &g))
    }

    #[test]
    fn truncated_polynomial_resolutions_are_exact() {
        let b2 = truncated(&gf(2), 2);
        let res = truncated_poly_resolution(&b2).unwrap();
        assert_eq!(res.period, 2);
        assert_eq!(res.multiplicities, vec![1, 1]);
        let rep = verify_resolution(&res);
        assert!(rep.passes(), "{rep:?}");
        assert_eq!(rep.term_dims, vec![2, 4, 4, 2]);
        assert_eq!(rep.map_ranks, vec![2, 2, 2]);

        // odd characteristic exercises the signs in both differentials
        let b3 = truncated(&gf(3), 2);
        assert!(verify_resolution(&truncated_poly_resolution(&b3).unwrap()).passes());

        let b33 = truncated(&gf(3), 3);
        let rep33 = verify_resolution(&truncated_poly_resolution(&b33).unwrap());
        assert!(rep33.passes(), "{rep33:?}");
        assert_eq!(rep33.term_dims, vec![3, 9, 9, 3]);
        assert_eq!(rep33.map_ranks, vec![3, 6, 3]);

        // the base field itself has no nilpotent generator
        assert_eq!(
            truncated_poly_resolution(&truncated(&gf(2), 1)).unwrap_err(),
            ResolutionError::NotTruncatedPoly
        );
        // semisimple but two-dimensional: radical is zero
        let f = gf(2);
        let split = Arc::new(Algebra::from_mult_table(
            &f,
            vec!["e1".into(), "e2".into()],
            &[1, 1],
            |i, j| {
                let mut row = vec![0; 2];
                if i == j {
                    row[i] = 1;
                }
                row
            },
        ));
        assert_eq!(
            truncated_poly_resolution(&split).unwrap_err(),
            ResolutionError::NotTruncatedPoly
        );
    }

    #[test]
    fn period_one_construction_requires_characteristic_two() {
        let b2 = truncated(&gf(2), 2);
        let res = char_p_period1_resolution(&b2).unwrap();
        assert_eq!(res.period, 1);
        assert_eq!(res.multiplicities, vec![1]);
        let rep = verify_resolution(&res);
        assert!(rep.passes(), "{rep:?}");
        assert_eq!(rep.term_dims, vec![2, 4, 2]);
        assert_eq!(rep.map_ranks, vec![2, 2]);

        let f4 = make_field(2, 2, &[1, 1, 1]).unwrap();
        let b4 = truncated(&f4, 2);
        assert!(verify_resolution(&char_p_period1_resolution(&b4).unwrap()).passes());

        assert_eq!(
            char_p_period1_resolution(&truncated(&gf(3), 2)).unwrap_err(),
            ResolutionError::WrongCharacteristic
        );
        assert_eq!(
            char_p_period1_resolution(&truncated(&gf(2), 3)).unwrap_err(),
            ResolutionError::NotTruncatedPoly
        );
    }

    #[test]
    fn group_resolutions_transport_the_trivial_module_periodicity() {
        // order two in characteristic two: both periods exist and agree in shape
        let c2 = cyclic(&gf(2), 2);
        let both = group_trivial_resolution(&c2).unwrap();
        assert!(verify_resolution(&both.period_two).passes());
        let p1 = both.period_one.expect("period one exists for order 2 in char 2");
        assert!(verify_resolution(&p1).passes());
        let direct = char_p_period1_resolution(&c2).unwrap();
        assert_eq!(p1.period, direct.period);
        assert_eq!(p1.multiplicities, direct.multiplicities);
        assert!(verify_resolution(&direct).passes());

        // order three in characteristic three: period two only
        let c3 = cyclic(&gf(3), 3);
        let g3 = group_trivial_resolution(&c3).unwrap();
        assert!(g3.period_one.is_none());
        let rep = verify_resolution(&g3.period_two);
        assert!(rep.passes(), "{rep:?}");
        assert_eq!(rep.term_dims, vec![3, 9, 9, 3]);
        // the unit embedding is the norm element Σ h⁻¹ ⊗ h
        let (_, inverses, _) = group_like_table(&c3).unwrap();
        let terms = pair_terms(&g3.period_two.tail[0], 3);
        assert_eq!(terms.len(), 3);
        for (c, l, r) in terms {
            assert_eq!(c, 1);
            assert_eq!(l, inverses[r]);
        }
        // and the middle differential has exactly the two transported terms
        let mid = pair_terms(&g3.period_two.middles[0].images[0][0], 3);
        assert_eq!(mid.len(), 2);

        // Klein four group is not cyclic
        let klein = {
            let f = gf(2);
            let g = enumerate(
                4,
                &[
                    Perm::from_cycles(4, &[vec![1, 2]]).unwrap(),
                    Perm::from_cycles(4, &[vec![3, 4]]).unwrap(),
                ],
            )
            .unwrap();
            Arc::new(group_algebra(&f, &g))
        };
        assert_eq!(
            group_trivial_resolution(&klein).unwrap_err(),
            ResolutionError::NotCyclic
        );
        // coprime characteristic is refused
        assert_eq!(
            group_trivial_resolution(&cyclic(&gf(3), 2)).unwrap_err(),
            ResolutionError::CharacteristicMismatch
        );
        // non-group basis is refused
        assert_eq!(
            group_trivial_resolution(&truncated(&gf(2), 2)).unwrap_err(),
            ResolutionError::NotGroupAlgebra
        );
    }

    #[test]
    fn sabotaged_resolutions_fail_with_visible_homology() {
        // zeroing the middle differential keeps all composites zero but
        // leaves homology at the two interior positions
        let b = truncated(&gf(2), 2);
        let mut res = truncated_poly_resolution(&b).unwrap();
        res.middles[0].images[0][0] = FMatrix::zeros(&b.field, 1, 4);
        let rep = verify_resolution(&res);
        assert!(rep.shapes_consistent);
        assert!(rep.composites_zero.iter().all(|&c| c));
        assert_eq!(rep.homology_dims, vec![0, 2, 2, 0]);
        assert!(!rep.passes());

        // a non-central unit embedding is rejected even though ranks line up
        let c2 = cyclic(&gf(2), 2);
        let mut gres = group_trivial_resolution(&c2).unwrap().period_two;
        gres.tail[0] = c2.basis_el(0).kron(&c2.basis_el(1));
        let rep2 = verify_resolution(&gres);
        assert!(!rep2.tail_central);
        assert!(!rep2.passes());

        // wrong multiplicity list is a shape failure
        let mut res3 = truncated_poly_resolution(&b).unwrap();
        res3.multiplicities = vec![1];
        assert!(!verify_resolution(&res3).shapes_consistent);
    }

    #[test]
    fn multi_slot_resolutions_are_materialized_slotwise() {
        // doubling the slots of an exact resolution (second tail slot zero)
        // keeps shapes and composites intact; the doubled interior terms
        // show up as honest homology, pinpointing the unmatched slots
        let b = truncated(&gf(2), 2);
        let base = truncated_poly_resolution(&b).unwrap();
        let d1 = base.middles[0].images[0][0].clone();
        let zero_pair = FMatrix::zeros(&b.field, 1, 4);
        let doubled = PeriodicResolution {
            algebra: Arc::clone(&b),
            period: 2,
            multiplicities: vec![2, 2],
            head: vec![base.head[0].clone(), base.head[0].clone()],
            middles: vec![FreeBimoduleMap {
                images: vec![
                    vec![d1.clone(), zero_pair.clone()],
                    vec![zero_pair.clone(), d1.clone()],
                ],
            }],
            tail: vec![base.tail[0].clone(), zero_pair],
        };
        let rep = verify_resolution(&doubled);
        assert!(rep.shapes_consistent);
        assert!(rep.tail_central);
        assert!(rep.composites_zero.iter().all(|&c| c));
        assert_eq!(rep.term_dims, vec![2, 8, 8, 2]);
        assert_eq!(rep.map_ranks, vec![2, 4, 2]);
        assert_eq!(rep.homology_dims, vec![0, 2, 2, 0]);
        assert!(!rep.passes());
    }

    #[test]
    fn phi_sends_trivial_to_regular_and_free_to_free() {
        for (f, n) in [(gf(2), 2), (gf(3), 3)] {
            let h = cyclic(&f, n);
            let triv = trivial_module(&h).unwrap();
            let phi_triv = phi_functor(&triv).unwrap();
            phi_triv.verify();
            assert_eq!(phi_triv.dim, n);
            let reg = Bimodule::regular(&h);
            assert!(iso_test(&phi_triv.to_env_module(), &reg.to_env_module())
                .unwrap()
                .is_iso());

            let free1 = RightModule::regular(&h);
            let phi_free = phi_functor(&free1).unwrap();
            phi_free.verify();
            let env = phi_free.to_env_module();
            let free_env = RightModule::regular(&env.algebra);
            assert!(iso_test(&env, &free_env).unwrap().is_iso());

            let (free2, _) = direct_sum(&[free1.clone(), free1.clone()]);
            let phi_free2 = phi_functor(&free2).unwrap();
            let env2 = phi_free2.to_env_module();
            let (free_env2, _) = direct_sum(&[free_env.clone(), free_env]);
            assert!(iso_test(&env2, &free_env2).unwrap().is_iso());
        }

        // over the one-element group Φ is the identity on carriers
        let h1 = cyclic(&gf(2), 1);
        let m = RightModule::regular(&h1);
        let phi_m = phi_functor(&m).unwrap();
        phi_m.verify();
        assert_eq!(phi_m.dim, m.dim);

        // non-group bases are refused
        assert_eq!(
            phi_functor(&RightModule::regular(&truncated(&gf(2), 2))).unwrap_err(),
            ResolutionError::NotGroupAlgebra
        );
    }

    #[test]
    fn tensor_element_parser_matches_builtin_differentials() {
        let b = truncated(&gf(2), 2);
        let res = truncated_poly_resolution(&b).unwrap();
        assert_eq!(
            parse_tensor_element(&b, "1#x - x#1").unwrap(),
            res.middles[0].images[0][0]
        );
        assert_eq!(parse_tensor_element(&b, "1#x + x#1").unwrap(), res.tail[0]);

        // coefficients and products parse through the element grammar
        let b3 = truncated(&gf(3), 3);
        let two_x_one = parse_tensor_element(&b3, "2*x#1").unwrap();
        let x = b3.basis_el(1);
        assert_eq!(two_x_one, x.kron(&b3.one()).scale(2));
        assert_eq!(
            parse_tensor_element(&b3, "x*x#1 - 1#x^2").unwrap(),
            b3.basis_el(2).kron(&b3.one()).sub(&b3.one().kron(&b3.basis_el(2)))
        );

        // group-element labels work on both sides of the separator
        let c3 = cyclic(&gf(3), 3);
        let (_, inverses, _) = group_like_table(&c3).unwrap();
        let g = (0..3).find(|&i| inverses[i] != i).unwrap();
        let label = &c3.labels[g];
        let parsed = parse_tensor_element(&c3, &format!("{label}#{label}")).unwrap();
        assert_eq!(parsed, c3.basis_el(g).kron(&c3.basis_el(g)));

        for bad in ["", "x", "x#x#x", "q#x", "x#x + - 1#1", "x#x +"] {
            assert!(
                matches!(
                    parse_tensor_element(&b, bad),
                    Err(ResolutionError::BadElement(_))
                ),
                "`{bad}` should not parse"
            );
        }
    }
}
