use algebra::Subalgebra;
use bimod::{
    bimodule_direct_sum, induced_bimodule, lift_h, to_a_map, twisted_lift, BimodContext,
    Bimodule, BimoduleComplex, BimoduleHom, FreeBimoduleMap, InducedBimodule,
};
use exactcore::{FMatrix, Scalar};
use resolutions::pair_terms;

use crate::embed::EmbeddedResolution;
use crate::error::TwistError;

/// Transport an embedded periodic resolution of B to a complex of
/// A-bimodules: the terms are A followed by multiplicity-many copies of
/// A ⊗_R A per resolution degree, `maps[0]` is the multiplication-type map
/// induced by the head, and the remaining maps are the induced images of
/// the interior differentials.
pub fn build_complex(
    ctx: &BimodContext,
    r: &Subalgebra,
    b: &Subalgebra,
    er: &EmbeddedResolution,
) -> Result<BimoduleComplex, TwistError> {
    let ind = induced_bimodule(ctx, r);
    build_complex_with(ctx, &ind, r, b, er)
}

pub(crate) fn build_complex_with(
    ctx: &BimodContext,
    ind: &InducedBimodule,
    r: &Subalgebra,
    b: &Subalgebra,
    er: &EmbeddedResolution,
) -> Result<BimoduleComplex, TwistError> {
    let a = &ctx.algebra;
    let f = &a.field;
    er.validate(a)
        .map_err(|e| TwistError::ComplexNotFormed(e.to_string()))?;
    let nb = er.resolution.algebra.dim;
    if b.dim() != nb || (0..nb).any(|i| !b.contains(&er.ambient_row(i))) {
        return Err(TwistError::ComplexNotFormed(
            "the declared subalgebra does not match the span of the embedded resolution".into(),
        ));
    }
    let c = er
        .conversion(b)
        .map_err(|e| TwistError::ComplexNotFormed(e.to_string()))?;
    let cc = c.kron(&c);
    let res = &er.resolution;
    let q = res.period;

    // The head induces a well-defined map on A ⊗_R A only when each image
    // commutes with R; the slot map then sends a ⊗ a' to a·c·a'.
    let mut head_images = Vec::with_capacity(res.head.len());
    for (s, h) in res.head.iter().enumerate() {
        let amb = h.mul(&er.embed);
        for k in 0..r.dim() {
            let mut rk = FMatrix::zeros(f, 0, a.dim);
            rk.push_row(&r.basis, k);
            if a.mul(&amb, &rk) != a.mul(&rk, &amb) {
                return Err(TwistError::ComplexNotFormed(format!(
                    "head image in slot {s} does not commute with the subalgebra, \
                     so its induced map is ill-defined"
                )));
            }
        }
        head_images.push(h.mul(&c));
    }
    let d0 = to_a_map(ctx, ind, b, &head_images);

    let mut maps = vec![BimoduleHom { mat: d0.mat }];
    for p in 1..q {
        let delta = &res.middles[p - 1];
        let converted = FreeBimoduleMap {
            images: delta
                .images
                .iter()
                .map(|row| row.iter().map(|w| w.mul(&cc)).collect())
                .collect(),
        };
        let mat = match lift_h(ctx, ind, b, &converted) {
            Ok(h) => h.mat,
            Err(first_err) => twisted_blocks(ctx, ind, b, r, er, delta, p).map_err(|e| {
                TwistError::ComplexNotFormed(format!(
                    "differential {p} lifts neither as a whole ({first_err}) nor slotwise ({e})"
                ))
            })?,
        };
        maps.push(BimoduleHom { mat });
    }

    let mut terms = vec![Bimodule::regular(a)];
    for p in 0..q {
        let parts: Vec<&Bimodule> = (0..res.multiplicities[p]).map(|_| &ind.bim).collect();
        terms.push(bimodule_direct_sum(&parts).0);
    }

    let complex = BimoduleComplex { terms, maps };
    for (p, h) in complex.maps.iter().enumerate() {
        if h.mat.rows() != complex.terms[p + 1].dim || h.mat.cols() != complex.terms[p].dim {
            return Err(TwistError::ComplexNotFormed(format!(
                "differential {p} has shape {}x{} but the terms require {}x{}",
                h.mat.rows(),
                h.mat.cols(),
                complex.terms[p + 1].dim,
                complex.terms[p].dim
            )));
        }
        if !h.is_bimodule_map(&complex.terms[p + 1], &complex.terms[p]) {
            return Err(TwistError::ComplexNotFormed(format!(
                "differential {p} is not a bimodule homomorphism"
            )));
        }
    }
    for p in 0..complex.maps.len().saturating_sub(1) {
        if !complex.maps[p + 1].mat.mul(&complex.maps[p].mat).is_zero() {
            return Err(TwistError::ComplexNotFormed(format!(
                "the composite of differentials {} and {} is nonzero",
                p + 1,
                p
            )));
        }
    }
    Ok(complex)
}

/// Slotwise fallback for the weaker assumption level: decode each abstract
/// image as a sum of basis tensor pairs and lift it as a twisted map, which
/// only requires the distinguished image to commute with R.
fn twisted_blocks(
    ctx: &BimodContext,
    ind: &InducedBimodule,
    b: &Subalgebra,
    r: &Subalgebra,
    er: &EmbeddedResolution,
    delta: &FreeBimoduleMap,
    p: usize,
) -> Result<FMatrix, TwistError> {
    let f = &ctx.algebra.field;
    let d = ind.bim.dim;
    let nb = er.resolution.algebra.dim;
    let src = delta.images.len();
    let tgt = delta.images.first().map(|row| row.len()).unwrap_or(0);
    let mut mat = FMatrix::zeros(f, src * d, tgt * d);
    for (s, row) in delta.images.iter().enumerate() {
        for (t, w) in row.iter().enumerate() {
            let terms = pair_terms(&w.get_row(0), nb);
            if terms.is_empty() {
                continue;
            }
            let pairs: Vec<(Scalar, FMatrix, FMatrix)> = terms
                .iter()
                .map(|&(coeff, i, j)| (coeff, er.ambient_row(i), er.ambient_row(j)))
                .collect();
            let tl = twisted_lift(ctx, ind, b, r, &pairs).map_err(|e| {
                TwistError::ComplexNotFormed(format!("slot ({s}, {t}) of differential {p}: {e}"))
            })?;
            mat.paste(s * d, t * d, &tl.alpha.mat);
        }
    }
    Ok(mat)
}
