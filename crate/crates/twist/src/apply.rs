use std::sync::Arc;

use algebra::{radical, Subalgebra};
use bimod::{apply_bimodule, left_right_projective, BimodContext, Bimodule};
use exactcore::FMatrix;
use modrep::{
    is_projective, iso_test, omega_power, quotient_module, restrict_to_subalgebra,
    simple_modules, stable_hom_dim, strip_projectives, ModError, RightModule,
};

use crate::check::radical_ideal_rows;
use crate::error::TwistError;

pub(crate) fn from_mod(e: ModError) -> TwistError {
    match e {
        ModError::AlgebraMismatch => TwistError::AlgebraMismatch,
        other => TwistError::Inapplicable(other.to_string()),
    }
}

/// Apply the twisting bimodule to a right module and strip projective
/// summands: the representative of the twist in the stable category.
pub fn apply_twist(
    x: &RightModule,
    m_q: &Bimodule,
    ctx: &BimodContext,
) -> Result<RightModule, TwistError> {
    let tensored = apply_bimodule(x, m_q, ctx).map_err(from_mod)?;
    Ok(strip_projectives(&tensored, &ctx.module_ctx).map_err(from_mod)?.core)
}

/// One corpus entry of the syzygy comparison: the twist of a module whose
/// restriction to R is projective must agree stably with its q-th syzygy.
/// For other modules the comparison is recorded as not applicable.
#[derive(Clone, Debug)]
pub struct SyzygyComparison {
    pub index: usize,
    pub restriction_projective: bool,
    pub matches: Option<bool>,
}

/// Evidence sheet for a constructed twist, gathered over a corpus of test
/// modules.
#[derive(Clone, Debug)]
pub struct TwistEvidence {
    /// The twisting bimodule is projective on each side separately.
    pub twist_projective_each_side: bool,
    /// The canonical quotient A/(rad R)A is stably fixed by the twist.
    pub quotient_fixed: bool,
    /// Per corpus module: does the twist agree with the q-th syzygy when
    /// the restriction to R is projective?
    pub syzygy_matches: Vec<SyzygyComparison>,
    /// Stable Hom dimensions between all ordered corpus pairs, before and
    /// after twisting.
    pub hom_before: Vec<Vec<usize>>,
    pub hom_after: Vec<Vec<usize>>,
    pub hom_preserved: bool,
    /// Every projective indecomposable is annihilated by the stable twist.
    pub projectives_vanish: bool,
    /// Per corpus module: the twist commutes with the syzygy operator.
    pub omega_commutes: Vec<bool>,
}

impl TwistEvidence {
    pub fn passes(&self) -> bool {
        self.twist_projective_each_side
            && self.quotient_fixed
            && self.syzygy_matches.iter().all(|s| s.matches != Some(false))
            && self.hom_preserved
            && self.projectives_vanish
            && self.omega_commutes.iter().all(|&ok| ok)
    }

    /// How many corpus modules admitted the syzygy comparison.
    pub fn applicable_syzygy_checks(&self) -> usize {
        self.syzygy_matches.iter().filter(|s| s.matches.is_some()).count()
    }
}

/// Check the stable-equivalence behavior of a twisting bimodule over a
/// corpus of right modules.
pub fn verify_twist(
    ctx: &BimodContext,
    r: &Subalgebra,
    m_q: &Bimodule,
    period: usize,
    corpus: &[RightModule],
) -> Result<TwistEvidence, TwistError> {
    let a = &ctx.algebra;
    let mctx = &ctx.module_ctx;

    let twist_projective_each_side = left_right_projective(m_q, ctx);

    let r_alg = Arc::new(r.as_algebra());
    let rad_r = radical(&r_alg);
    let ideal = radical_ideal_rows(a, r, &rad_r);
    let (t_a, _, _) = quotient_module(&RightModule::regular(a), &ideal);
    let t_img = apply_twist(&t_a, m_q, ctx)?;
    let t_core = strip_projectives(&t_a, mctx).map_err(from_mod)?.core;
    let quotient_fixed = iso_test(&t_img, &t_core).map_err(from_mod)?.is_iso();

    let r_simples = simple_modules(&r_alg);
    let mut syzygy_matches = Vec::with_capacity(corpus.len());
    let mut images = Vec::with_capacity(corpus.len());
    for (i, x) in corpus.iter().enumerate() {
        let restr = restrict_to_subalgebra(x, r, &r_alg);
        let restriction_projective = is_projective(&restr, &r_simples);
        let img = apply_twist(x, m_q, ctx)?;
        let matches = if restriction_projective {
            let shifted = omega_power(x, period as i64, mctx).map_err(from_mod)?;
            Some(iso_test(&img, &shifted).map_err(from_mod)?.is_iso())
        } else {
            None
        };
        syzygy_matches.push(SyzygyComparison { index: i, restriction_projective, matches });
        images.push(img);
    }

    let mut hom_before = vec![vec![0usize; corpus.len()]; corpus.len()];
    let mut hom_after = hom_before.clone();
    for i in 0..corpus.len() {
        for j in 0..corpus.len() {
            hom_before[i][j] = stable_hom_dim(&corpus[i], &corpus[j], mctx).map_err(from_mod)?;
            hom_after[i][j] = stable_hom_dim(&images[i], &images[j], mctx).map_err(from_mod)?;
        }
    }
    let hom_preserved = hom_before == hom_after;

    let mut projectives_vanish = true;
    for pim in &mctx.simples.pims {
        if apply_twist(pim, m_q, ctx)?.dim != 0 {
            projectives_vanish = false;
        }
    }

    let mut omega_commutes = Vec::with_capacity(corpus.len());
    for (i, x) in corpus.iter().enumerate() {
        let ox = omega_power(x, 1, mctx).map_err(from_mod)?;
        let lhs = apply_twist(&ox, m_q, ctx)?;
        let rhs = omega_power(&images[i], 1, mctx).map_err(from_mod)?;
        omega_commutes.push(iso_test(&lhs, &rhs).map_err(from_mod)?.is_iso());
    }

    Ok(TwistEvidence {
        twist_projective_each_side,
        quotient_fixed,
        syzygy_matches,
        hom_before,
        hom_after,
        hom_preserved,
        projectives_vanish,
        omega_commutes,
    })
}

/// The canonical quotient A/(rad R)A as a right A-module.
pub fn canonical_quotient(
    ctx: &BimodContext,
    r: &Subalgebra,
) -> (RightModule, FMatrix) {
    let a = &ctx.algebra;
    let r_alg = Arc::new(r.as_algebra());
    let rad_r = radical(&r_alg);
    let ideal = radical_ideal_rows(a, r, &rad_r);
    let (m, proj, _) = quotient_module(&RightModule::regular(a), &ideal);
    (m, proj)
}
