use std::sync::Arc;

use algebra::{subalgebra_gen, Algebra, Subalgebra};
use exactcore::{Field, FMatrix};
use permgroup::PermGroup;
use resolutions::PeriodicResolution;

use crate::error::TwistError;

/// A periodic self-resolution of an abstract algebra B together with an
/// embedding of B into an ambient algebra A: row `i` of `embed` is the
/// ambient coordinate vector of the i-th basis element of
/// `resolution.algebra`.
#[derive(Clone)]
pub struct EmbeddedResolution {
    pub resolution: PeriodicResolution,
    pub embed: FMatrix,
}

impl EmbeddedResolution {
    /// The i-th abstract basis element viewed inside the ambient algebra.
    pub fn ambient_row(&self, i: usize) -> FMatrix {
        let mut row = FMatrix::zeros(self.embed.field(), 0, self.embed.cols());
        row.push_row(&self.embed, i);
        row
    }

    /// Check that the embedding really is a unital algebra embedding into
    /// `a`: shapes match, the rows are independent, the abstract unit maps
    /// to the ambient unit, and products map to products.
    pub fn validate(&self, a: &Arc<Algebra>) -> Result<(), TwistError> {
        let b = &self.resolution.algebra;
        let nb = b.dim;
        if self.embed.rows() != nb || self.embed.cols() != a.dim {
            return Err(TwistError::BadEmbedding(format!(
                "embedding is {}×{} but must be {}×{}",
                self.embed.rows(),
                self.embed.cols(),
                nb,
                a.dim
            )));
        }
        if b.field != a.field {
            return Err(TwistError::BadEmbedding("field mismatch".into()));
        }
        if self.embed.rank() != nb {
            return Err(TwistError::BadEmbedding(
                "embedding rows are linearly dependent".into(),
            ));
        }
        if b.unit.mul(&self.embed) != a.unit {
            return Err(TwistError::BadEmbedding(
                "the abstract unit does not map to the ambient unit".into(),
            ));
        }
        for i in 0..nb {
            let bi = self.ambient_row(i);
            for j in 0..nb {
                let bj = self.ambient_row(j);
                let via_b = b.mul(&b.basis_el(i), &b.basis_el(j)).mul(&self.embed);
                let via_a = a.mul(&bi, &bj);
                if via_b != via_a {
                    return Err(TwistError::BadEmbedding(format!(
                        "embedding is not multiplicative on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The subalgebra of `a` spanned by the embedded basis. Must be called
    /// after a successful `validate`.
    pub fn subalgebra(&self, a: &Arc<Algebra>) -> Subalgebra {
        let rows: Vec<FMatrix> = (0..self.embed.rows()).map(|i| self.ambient_row(i)).collect();
        let sub = subalgebra_gen(a, &rows);
        assert_eq!(
            sub.dim(),
            self.embed.rows(),
            "a validated embedding spans a closed subalgebra"
        );
        sub
    }

    /// Change-of-basis matrix from the abstract basis to the echelonized
    /// subalgebra basis: row i holds the `sub`-coordinates of the i-th
    /// embedded basis element.
    pub fn conversion(&self, sub: &Subalgebra) -> Result<FMatrix, TwistError> {
        let f = self.embed.field();
        let mut c = FMatrix::zeros(f, 0, sub.dim());
        for i in 0..self.embed.rows() {
            let coords = sub.coords(&self.ambient_row(i)).ok_or_else(|| {
                TwistError::BadEmbedding(format!(
                    "embedded basis element {i} does not lie in the declared subalgebra"
                ))
            })?;
            c.push_row(&coords, 0);
        }
        Ok(c)
    }
}

/// The embedding rows of a subgroup's group algebra inside the group
/// algebra of an ambient group: row i is the indicator vector of the i-th
/// subgroup element in the ambient element list. Returns `None` when some
/// subgroup element is missing from the ambient group.
pub fn subgroup_embedding(
    field: &Field,
    ambient: &PermGroup,
    subgroup: &PermGroup,
) -> Option<FMatrix> {
    let mut rows = FMatrix::zeros(field, 0, ambient.elements.len());
    for h in &subgroup.elements {
        let idx = ambient.elements.iter().position(|g| g == h)?;
        let mut row = vec![0; ambient.elements.len()];
        row[idx] = 1;
        rows.push_row_slice(&row);
    }
    Some(rows)
}
