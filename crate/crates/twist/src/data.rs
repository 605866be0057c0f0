use algebra::Subalgebra;
use bimod::{induced_bimodule, BimodContext, Bimodule, BimoduleComplex};

use crate::check::check_triple_with;
use crate::complex::build_complex_with;
use crate::cone::{multiple_cone, ConeData};
use crate::embed::EmbeddedResolution;
use crate::error::TwistError;
use crate::report::{AssumptionLevel, TripleReport};

/// Everything produced by a successful run of the construction: the
/// assumption report, the lifted complex, and the iterated cone.
pub struct TwistData {
    pub report: TripleReport,
    pub complex: BimoduleComplex,
    pub cone: ConeData,
    pub period: usize,
}

impl TwistData {
    /// The twisting bimodule itself.
    pub fn twist_bimodule(&self) -> &Bimodule {
        self.cone.m_q()
    }
}

/// Run the full construction for a triple (A, R, B) with an embedded
/// periodic resolution of B: verify the assumptions, lift the resolution
/// to a complex of (A, A)-bimodules, and cut out the twisting bimodule as
/// an iterated cone.
pub fn build_twist(
    ctx: &BimodContext,
    r: &Subalgebra,
    b: &Subalgebra,
    er: &EmbeddedResolution,
) -> Result<TwistData, TwistError> {
    let ind = induced_bimodule(ctx, r);
    let report = check_triple_with(ctx, &ind, r, b, er);
    if matches!(report.overall, AssumptionLevel::Fail) {
        return Err(TwistError::Inapplicable(format!(
            "assumptions do not hold; failing conditions: {}",
            report.failed_conditions().join(", ")
        )));
    }
    let complex = build_complex_with(ctx, &ind, r, b, er)?;
    let cone = multiple_cone(ctx, &ind, &complex)?;
    Ok(TwistData { report, complex, cone, period: er.resolution.period })
}
