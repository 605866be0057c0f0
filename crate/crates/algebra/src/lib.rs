//! Finite-dimensional associative algebras over exact finite fields:
//! group algebras, bound quiver algebras, subalgebras and corners, the
//! Jacobson radical, primitive idempotents, blocks, and symmetrizing forms.
//!
//! Elements are coordinate rows in a fixed basis; multiplication is by
//! right-multiplication structure matrices. An expression parser turns
//! human-readable element descriptions (in basis labels) into rows, so
//! configuration files can name idempotents and subalgebra generators the
//! way the literature writes them.

mod core;
mod group_alg;
mod idem;
mod parse;
mod quiver;
mod radical;
mod sub;

pub use crate::core::{center, enveloping, op_algebra, scalar_string, Algebra};
pub use crate::group_alg::{group_algebra, symmetric_form};
pub use crate::idem::{blocks, primitive_idempotents};
pub use crate::parse::{parse_element, parse_expression, ParseError};
pub use crate::quiver::{quiver_algebra, QuiverError, QuiverPresentation};
pub use crate::radical::{charpoly, radical, radical_dim};
pub use crate::sub::{
    corner, quotient_algebra, subalgebra_from_rows, subalgebra_gen, CornerData, QuotientAlgebra,
    SubError, Subalgebra,
};

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::{make_field, FMatrix, Field};
    use permgroup::{enumerate, Perm, PermGroup};
    use std::sync::Arc;

    fn gf(p: u64) -> Field {
        make_field(p, 1, &[0, 1]).unwrap()
    }

    fn gf4() -> Field {
        make_field(2, 2, &[1, 1, 1]).unwrap()
    }

    fn s4() -> PermGroup {
        enumerate(4, &[
            Perm::from_cycles(4, &[vec![1, 2]]).unwrap(),
            Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap(),
        ])
        .unwrap()
    }

    fn brauer_presentation() -> QuiverPresentation {
        // two vertices, a loop at each, and a 2-cycle between them; the
        // commutation relations tie the two length-8 cycles together
        QuiverPresentation {
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
        }
    }

    #[test]
    fn cyclic_group_algebra_is_local() {
        let f = gf(2);
        let c2 = enumerate(2, &[Perm::from_cycles(2, &[vec![1, 2]]).unwrap()]).unwrap();
        let a = group_algebra(&f, &c2);
        assert_eq!(a.dim, 2);
        assert_eq!(radical_dim(&a), 1);
        assert_eq!(primitive_idempotents(&a).len(), 1);
        assert_eq!(blocks(&a).len(), 1);
    }

    #[test]
    fn s4_group_algebra_over_gf4() {
        let a = group_algebra(&gf4(), &s4());
        assert_eq!(a.dim, 24);
        // semisimple quotient is k + M_2(k): dimension 5
        assert_eq!(radical_dim(&a), 19);
        // 1 = e1 + e2 + e3 with three primitive summands (multiplicities
        // of the two simple modules in the regular module top: 1 + 2)
        let prims = primitive_idempotents(&a);
        assert_eq!(prims.len(), 3);
        let mut sum = a.zero();
        for e in &prims {
            assert!(a.is_idempotent(e));
            sum = sum.add(e);
        }
        assert_eq!(sum, a.one());
        // a single block
        assert_eq!(blocks(&a).len(), 1);
    }

    #[test]
    fn symmetric_form_of_group_algebra_is_coefficient_of_identity() {
        let a = group_algebra(&gf4(), &s4());
        let lam = symmetric_form(&a).expect("group algebras are symmetric");
        // identity is basis index 0
        for i in 0..a.dim {
            assert_eq!(lam.get(0, i), if i == 0 { 1 } else { 0 });
        }
    }

    #[test]
    fn parser_builds_group_idempotents() {
        let a = group_algebra(&gf4(), &s4());
        // 1 + c + c^2 over the 3-cycle (123) is idempotent in char 2
        let e1 = parse_element(&a, "1 + (123) + (132)").unwrap();
        assert!(a.is_idempotent(&e1));
        let e2 = parse_element(&a, "1 + w*(123) + w^2*(132)").unwrap();
        assert!(a.is_idempotent(&e2));
        assert!(a.mul(&e1, &e2).is_zero());
        let e3 = parse_element(&a, "1 + w^2*(123) + w*(132)").unwrap();
        let sum = e1.add(&e2).add(&e3);
        assert_eq!(sum, a.one());
        assert!(matches!(
            parse_element(&a, "1 + nosuch"),
            Err(ParseError::UnknownSymbol(_))
        ));
    }

    #[test]
    fn corner_of_s4_has_dimension_eleven() {
        let a = group_algebra(&gf4(), &s4());
        let e1 = parse_element(&a, "1 + (123) + (132)").unwrap();
        let e2 = parse_element(&a, "1 + w*(123) + w^2*(132)").unwrap();
        let f = e1.add(&e2);
        let cd = corner(&a, &f).unwrap();
        assert_eq!(cd.algebra.dim, 11);
        assert!(corner(&a, &parse_element(&a, "(12)").unwrap()).is_err());
    }

    #[test]
    fn brauer_quiver_algebra_dimensions() {
        let f = gf(2);
        let a = quiver_algebra(&f, &brauer_presentation()).unwrap();
        assert_eq!(a.dim, 32);
        assert_eq!(radical_dim(&a), 30);
        assert_eq!(primitive_idempotents(&a).len(), 2);
        assert_eq!(blocks(&a).len(), 1);
        assert!(symmetric_form(&a).is_some());
        // labels round-trip through the parser
        let x = parse_element(&a, "g*b*d*a*g*b*d + d*a*g*b*d*a*g").unwrap();
        assert!(!x.is_zero());
        // x^2 = 0: both words square to zero through the quadratic relations
        assert!(a.mul(&x, &x).is_zero());
    }

    #[test]
    fn brauer_bound_too_small_is_detected() {
        let f = gf(2);
        let mut pres = brauer_presentation();
        pres.nilpotency_bound = 5;
        match quiver_algebra(&f, &pres) {
            Err(QuiverError::BoundTooSmall { bound: 5, .. }) => {}
            other => panic!("expected BoundTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn truncated_polynomial_ring_as_one_loop_quiver() {
        let f = gf(2);
        let pres = QuiverPresentation {
            vertices: 1,
            arrows: vec![("x".into(), 1, 1)],
            relations: vec!["x^2".into()],
            nilpotency_bound: 2,
        };
        let a = quiver_algebra(&f, &pres).unwrap();
        assert_eq!(a.dim, 2);
        assert_eq!(radical_dim(&a), 1);
        assert!(symmetric_form(&a).is_some());
    }

    #[test]
    fn path_algebra_of_a2_is_not_symmetric() {
        let f = gf(2);
        let pres = QuiverPresentation {
            vertices: 2,
            arrows: vec![("a".into(), 1, 2)],
            relations: vec![],
            nilpotency_bound: 2,
        };
        let a = quiver_algebra(&f, &pres).unwrap();
        assert_eq!(a.dim, 3);
        assert!(symmetric_form(&a).is_none());
    }

    #[test]
    fn subalgebra_generated_by_loops() {
        let f = gf(2);
        let a = Arc::new(quiver_algebra(&f, &brauer_presentation()).unwrap());
        let e1 = parse_element(&a, "e1").unwrap();
        let la = parse_element(&a, "a").unwrap();
        let lb = parse_element(&a, "b").unwrap();
        let r = subalgebra_gen(&a, &[e1, la, lb]);
        // k[a] x k[b]: e1, e2, a, b
        assert_eq!(r.dim(), 4);
        let ralg = r.as_algebra();
        assert!(ralg.is_commutative());
        assert_eq!(radical_dim(&ralg), 2);
    }

    #[test]
    fn group_subalgebra_in_s4() {
        let a = Arc::new(group_algebra(&gf4(), &s4()));
        let gens = vec![
            parse_element(&a, "(12)").unwrap(),
            parse_element(&a, "(34)").unwrap(),
        ];
        let r = subalgebra_gen(&a, &gens);
        assert_eq!(r.dim(), 4);
        // kN for the Klein group N is commutative and local in char 2
        let ralg = r.as_algebra();
        assert!(ralg.is_commutative());
        assert_eq!(radical_dim(&ralg), 3);
    }

    #[test]
    fn enveloping_of_small_local_algebra() {
        let f = gf(2);
        let c2 = enumerate(2, &[Perm::from_cycles(2, &[vec![1, 2]]).unwrap()]).unwrap();
        let a = group_algebra(&f, &c2);
        let env = enveloping(&a);
        assert_eq!(env.dim, 4);
        assert!(env.is_commutative());
        // J(A^e) = J(x)A + A(x)J has dimension 3 here
        assert_eq!(radical_dim(&env), 3);
    }

    #[test]
    fn opposite_algebra_reverses_products() {
        let a = group_algebra(&gf4(), &s4());
        let op = op_algebra(&a);
        let x = parse_element(&a, "(12) + w*(123)").unwrap();
        let y = parse_element(&a, "(1234)").unwrap();
        assert_eq!(op.mul(&x, &y), a.mul(&y, &x));
    }

    #[test]
    fn center_of_commutative_algebra_is_everything() {
        let f = gf(2);
        let c2 = enumerate(2, &[Perm::from_cycles(2, &[vec![1, 2]]).unwrap()]).unwrap();
        let a = group_algebra(&f, &c2);
        assert_eq!(center(&a).rows(), 2);
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        let f = gf(2);
        // companion of t^3 + t + 1
        let m = FMatrix::from_entries(&f, 3, 3, &[0, 0, 1, 1, 0, 1, 0, 1, 0]);
        assert_eq!(charpoly(&m), vec![1, 1, 0, 1]);
        let id = FMatrix::identity(&f, 2);
        // (t-1)^2 = t^2 + 1 over GF(2)
        assert_eq!(charpoly(&id), vec![1, 0, 1]);
    }

    #[test]
    fn radical_of_semisimple_group_algebra_is_zero() {
        // |S3| = 6 is invertible mod 5, so kS3 is semisimple
        let f = gf(5);
        let s3 = enumerate(3, &[
            Perm::from_cycles(3, &[vec![1, 2]]).unwrap(),
            Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
        ])
        .unwrap();
        let a = group_algebra(&f, &s3);
        assert_eq!(radical_dim(&a), 0);
        // three blocks: trivial, sign, and the 2-dimensional simple
        assert_eq!(blocks(&a).len(), 3);
    }

    #[test]
    fn quotient_by_radical_is_semisimple() {
        let a = group_algebra(&gf4(), &s4());
        let j = radical(&a);
        let quo = quotient_algebra(&a, &j).unwrap();
        assert_eq!(quo.algebra.dim, 5);
        assert_eq!(radical_dim(&quo.algebra), 0);
        assert!(quotient_algebra(&a, &a.unit).is_err());
    }
}
