use algebra::Subalgebra;
use bimod::{BimodContext, Bimodule};
use modrep::{iso_test, relative_syzygy, strip_projectives, trivial_module};

use crate::apply::{apply_twist, from_mod};
use crate::error::TwistError;

/// Comparison of the twist of the trivial module against the iterated
/// syzygy relative to the subalgebra R.
#[derive(Clone, Debug)]
pub struct RhoComparison {
    pub twist_raw_dim: usize,
    pub twist_core_dim: usize,
    /// Dimensions of the successive relative syzygies (before stripping).
    pub relative_dims: Vec<usize>,
    pub relative_core_dim: usize,
    pub isomorphic: bool,
}

/// For a group algebra A = kG and subgroup algebra R, the twist of the
/// trivial module is stably isomorphic to the q-fold syzygy of k relative
/// to R. This computes both sides independently and compares them.
pub fn rho_trivial_vs_relative_syzygy(
    ctx: &BimodContext,
    r: &Subalgebra,
    m_q: &Bimodule,
    period: usize,
) -> Result<RhoComparison, TwistError> {
    let mctx = &ctx.module_ctx;
    let k = trivial_module(&ctx.algebra).map_err(from_mod)?;

    let raw = bimod::apply_bimodule(&k, m_q, ctx).map_err(from_mod)?;
    let twist_raw_dim = raw.dim;
    let twisted = apply_twist(&k, m_q, ctx)?;

    let mut cur = k;
    let mut relative_dims = Vec::with_capacity(period);
    for _ in 0..period {
        let rs = relative_syzygy(&cur, r).map_err(from_mod)?;
        relative_dims.push(rs.kernel.dim);
        cur = rs.kernel;
    }
    let rel_core = strip_projectives(&cur, mctx).map_err(from_mod)?.core;

    let isomorphic = iso_test(&twisted, &rel_core).map_err(from_mod)?.is_iso();
    Ok(RhoComparison {
        twist_raw_dim,
        twist_core_dim: twisted.dim,
        relative_dims,
        relative_core_dim: rel_core.dim,
        isomorphic,
    })
}
