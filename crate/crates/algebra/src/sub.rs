//! Subalgebras, idempotent corners, and quotient algebras, each carrying
//! the transport data needed to move elements (and later, modules) between
//! the ambient algebra and the derived one.

use std::sync::Arc;

use exactcore::{Echelonizer, FMatrix, Quotient, Scalar};
use thiserror::Error;

use crate::core::{unital_closure, Algebra};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubError {
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("row span is not closed under multiplication")]
    NotClosed,
    #[error("row span is not a two-sided ideal")]
    NotIdeal,
}

/// A unital subalgebra of an ambient algebra, presented by echelonized
/// basis rows in ambient coordinates.
#[derive(Clone)]
pub struct Subalgebra {
    pub ambient: Arc<Algebra>,
    /// Reduced echelon rows spanning the subalgebra (contains the unit).
    pub basis: FMatrix,
    pivots: Vec<usize>,
}

impl Subalgebra {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn contains(&self, x: &FMatrix) -> bool {
        self.coords(x).is_some()
    }

    /// Coordinates of an ambient element in the subalgebra basis, if it
    /// lies in the span.
    pub fn coords(&self, x: &FMatrix) -> Option<FMatrix> {
        let f = &self.ambient.field;
        let mut residual = FMatrix::zeros(f, 0, self.ambient.dim);
        residual.push_row(x, 0);
        let mut coords = FMatrix::zeros(f, 1, self.dim());
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = residual.get(0, pc);
            if c != 0 {
                coords.set(0, i, c);
                residual.raxpy_from(0, &self.basis, i, f.neg(c));
            }
        }
        if residual.is_zero() {
            Some(coords)
        } else {
            None
        }
    }

    /// Ambient element from subalgebra coordinates.
    pub fn embed(&self, coords: &FMatrix) -> FMatrix {
        coords.mul(&self.basis)
    }

    /// Present the subalgebra as an algebra in its own right. Basis labels
    /// are the pretty-printed ambient representatives.
    pub fn as_algebra(&self) -> Algebra {
        let d = self.dim();
        let labels: Vec<String> = (0..d)
            .map(|i| {
                let mut row = FMatrix::zeros(&self.ambient.field, 0, self.ambient.dim);
                row.push_row(&self.basis, i);
                self.ambient.pretty(&row)
            })
            .collect();
        let unit = self
            .coords(&self.ambient.unit)
            .expect("a unital subalgebra contains the ambient unit");
        Algebra::from_mult_table(&self.ambient.field, labels, &unit.get_row(0), |i, j| {
            let mut bi = FMatrix::zeros(&self.ambient.field, 0, self.ambient.dim);
            bi.push_row(&self.basis, i);
            let mut bj = FMatrix::zeros(&self.ambient.field, 0, self.ambient.dim);
            bj.push_row(&self.basis, j);
            let prod = self.ambient.mul(&bi, &bj);
            self.coords(&prod)
                .expect("subalgebra basis is closed under products")
                .get_row(0)
        })
    }
}

/// The unital subalgebra generated by the given ambient elements (the
/// ambient unit is always adjoined).
pub fn subalgebra_gen(ambient: &Arc<Algebra>, gens: &[FMatrix]) -> Subalgebra {
    let ech = unital_closure(ambient, gens);
    let basis = ech.basis();
    let pivots = ech.pivots_sorted();
    Subalgebra { ambient: ambient.clone(), basis, pivots }
}

/// Wrap an explicit row span as a subalgebra, verifying closure and unit.
pub fn subalgebra_from_rows(ambient: &Arc<Algebra>, rows: &FMatrix) -> Result<Subalgebra, SubError> {
    let mut ech = Echelonizer::new(&ambient.field, ambient.dim);
    for i in 0..rows.rows() {
        ech.insert(rows, i);
    }
    if !ech.contains(&ambient.unit.get_row(0)) {
        return Err(SubError::NotClosed);
    }
    let basis = ech.basis();
    let pivots = ech.pivots_sorted();
    let sub = Subalgebra { ambient: ambient.clone(), basis, pivots };
    for i in 0..sub.dim() {
        for j in 0..sub.dim() {
            let mut bi = FMatrix::zeros(&ambient.field, 0, ambient.dim);
            bi.push_row(&sub.basis, i);
            let mut bj = FMatrix::zeros(&ambient.field, 0, ambient.dim);
            bj.push_row(&sub.basis, j);
            if sub.coords(&ambient.mul(&bi, &bj)).is_none() {
                return Err(SubError::NotClosed);
            }
        }
    }
    Ok(sub)
}

/// An idempotent corner eAe, with the transport data for elements and,
/// downstream, for right modules (X restricts to X·e).
pub struct CornerData {
    pub algebra: Algebra,
    /// The idempotent e, in ambient coordinates.
    pub idempotent: FMatrix,
    /// Rows: ambient representatives of the corner basis.
    pub basis: FMatrix,
}

/// The corner algebra eAe for an idempotent e; its unit is e.
pub fn corner(ambient: &Algebra, e: &FMatrix) -> Result<CornerData, SubError> {
    if !ambient.is_idempotent(e) {
        return Err(SubError::NotIdempotent);
    }
    let mut ech = Echelonizer::new(&ambient.field, ambient.dim);
    for i in 0..ambient.dim {
        let ebe = ambient.mul(&ambient.mul(e, &ambient.basis_el(i)), e);
        ech.insert(&ebe, 0);
    }
    let basis = ech.basis();
    let pivots = ech.pivots_sorted();
    let d = basis.rows();
    let field = &ambient.field;
    let coords = |x: &FMatrix| -> Vec<Scalar> {
        let mut residual = FMatrix::zeros(field, 0, ambient.dim);
        residual.push_row(x, 0);
        let mut out = vec![0 as Scalar; d];
        for (i, &pc) in pivots.iter().enumerate() {
            let c = residual.get(0, pc);
            if c != 0 {
                out[i] = c;
                residual.raxpy_from(0, &basis, i, field.neg(c));
            }
        }
        assert!(residual.is_zero(), "corner is closed under products");
        out
    };
    let labels: Vec<String> = (0..d)
        .map(|i| {
            let mut row = FMatrix::zeros(field, 0, ambient.dim);
            row.push_row(&basis, i);
            ambient.pretty(&row)
        })
        .collect();
    let unit = coords(e);
    let algebra = Algebra::from_mult_table(field, labels, &unit, |i, j| {
        let mut bi = FMatrix::zeros(field, 0, ambient.dim);
        bi.push_row(&basis, i);
        let mut bj = FMatrix::zeros(field, 0, ambient.dim);
        bj.push_row(&basis, j);
        coords(&ambient.mul(&bi, &bj))
    });
    Ok(CornerData { algebra, idempotent: e.clone(), basis })
}

/// A quotient algebra A/I for a two-sided ideal given by spanning rows,
/// with projection and (set-theoretic) lift.
pub struct QuotientAlgebra {
    pub algebra: Algebra,
    space: Quotient,
}

impl QuotientAlgebra {
    pub fn project(&self, x: &FMatrix) -> FMatrix {
        FMatrix::row_matrix(&self.algebra.field, &self.space.project(&x.get_row(0)))
    }

    pub fn lift(&self, x: &FMatrix) -> FMatrix {
        FMatrix::row_matrix(&self.algebra.field, &self.space.lift(&x.get_row(0)))
    }

    pub fn ideal_dim(&self) -> usize {
        self.space.ambient_dim() - self.space.dim()
    }
}

pub fn quotient_algebra(ambient: &Algebra, ideal_rows: &FMatrix) -> Result<QuotientAlgebra, SubError> {
    let mut ech = Echelonizer::new(&ambient.field, ambient.dim);
    for i in 0..ideal_rows.rows() {
        ech.insert(ideal_rows, i);
    }
    // verify two-sidedness on the echelon basis; closure under a unital
    // generating set extends to the whole algebra by induction on products
    let basis = ech.basis();
    for i in 0..basis.rows() {
        let mut w = FMatrix::zeros(&ambient.field, 0, ambient.dim);
        w.push_row(&basis, i);
        for &j in ambient.generators() {
            let b = ambient.basis_el(j);
            if !ech.contains(&ambient.mul(&w, &b).get_row(0))
                || !ech.contains(&ambient.mul(&b, &w).get_row(0))
            {
                return Err(SubError::NotIdeal);
            }
        }
    }
    let space = Quotient::new(ech);
    let dim = space.dim();
    let labels: Vec<String> = space
        .comp_positions()
        .iter()
        .map(|&c| format!("[{}]", ambient.labels[c]))
        .collect();
    let unit = space.project(&ambient.unit.get_row(0));
    let space2 = &space;
    let algebra = Algebra::from_mult_table(&ambient.field, labels, &unit, |i, j| {
        let bi = FMatrix::row_matrix(&ambient.field, &space2.lift(&unit_coord(dim, i)));
        let bj = FMatrix::row_matrix(&ambient.field, &space2.lift(&unit_coord(dim, j)));
        space2.project(&ambient.mul(&bi, &bj).get_row(0))
    });
    Ok(QuotientAlgebra { algebra, space })
}

fn unit_coord(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![0 as Scalar; dim];
    v[i] = 1;
    v
}
