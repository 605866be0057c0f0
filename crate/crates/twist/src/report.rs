/// Outcome of one checkable condition, with a human-readable witness for
/// whichever way it went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub pass: bool,
    pub witness: String,
}

impl ConditionVerdict {
    pub fn ok(witness: impl Into<String>) -> ConditionVerdict {
        ConditionVerdict { pass: true, witness: witness.into() }
    }

    pub fn fail(witness: impl Into<String>) -> ConditionVerdict {
        ConditionVerdict { pass: false, witness: witness.into() }
    }
}

/// How strong a set of hypotheses the triple satisfies. `One` is the
/// elementwise-commutation level (which implies the weaker level); `Two`
/// is the weaker level that only asks for a stable two-sided structure;
/// `Fail` means not even the weak level holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssumptionLevel {
    One,
    Two,
    Fail,
}

impl std::fmt::Display for AssumptionLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AssumptionLevel::One => write!(f, "level 1"),
            AssumptionLevel::Two => write!(f, "level 2"),
            AssumptionLevel::Fail => write!(f, "fail"),
        }
    }
}

/// Full verdict sheet for a candidate triple (A, R, B) together with a
/// periodic resolution of B.
#[derive(Clone, Debug)]
pub struct TripleReport {
    /// A carries a symmetrizing form.
    pub a_symmetric: ConditionVerdict,
    /// R carries a symmetrizing form and is not semisimple.
    pub r_symmetric_nonsemisimple: ConditionVerdict,
    /// A is projective as a right R-module.
    pub a_r_projective: ConditionVerdict,
    /// (a) every element of B commutes with every element of R.
    pub cond_a: ConditionVerdict,
    /// (a') B and the radical of R generate the same subspace on either
    /// side: (rad R)·B = B·(rad R).
    pub cond_a_prime: ConditionVerdict,
    /// (b) the canonical comparison map B ⊗ R/rad R → A/(rad R)A is an
    /// isomorphism in the stable module category of R.
    pub cond_b: ConditionVerdict,
    /// (c) the supplied periodic resolution of B is exact and correctly
    /// embedded.
    pub cond_c: ConditionVerdict,
    /// (d) the image of the final differential commutes with R inside
    /// A ⊗_R A, slot by slot.
    pub cond_d: ConditionVerdict,
    /// (e) the resolution transports to a complex of A-bimodules.
    pub cond_e: ConditionVerdict,
    pub overall: AssumptionLevel,
}

impl TripleReport {
    /// Recompute the overall level from the individual verdicts.
    pub fn classify(&self) -> AssumptionLevel {
        let base = self.a_symmetric.pass
            && self.r_symmetric_nonsemisimple.pass
            && self.a_r_projective.pass;
        if base && self.cond_a.pass && self.cond_b.pass && self.cond_c.pass {
            AssumptionLevel::One
        } else if base
            && self.cond_a_prime.pass
            && self.cond_b.pass
            && self.cond_c.pass
            && self.cond_d.pass
            && self.cond_e.pass
        {
            AssumptionLevel::Two
        } else {
            AssumptionLevel::Fail
        }
    }

    /// One line per condition, for reports and logs.
    pub fn lines(&self) -> Vec<String> {
        let fmt = |name: &str, v: &ConditionVerdict| {
            format!("{name}: {} — {}", if v.pass { "pass" } else { "FAIL" }, v.witness)
        };
        vec![
            fmt("ambient symmetric", &self.a_symmetric),
            fmt("subalgebra symmetric, not semisimple", &self.r_symmetric_nonsemisimple),
            fmt("ambient projective over subalgebra", &self.a_r_projective),
            fmt("condition (a)", &self.cond_a),
            fmt("condition (a')", &self.cond_a_prime),
            fmt("condition (b)", &self.cond_b),
            fmt("condition (c)", &self.cond_c),
            fmt("condition (d)", &self.cond_d),
            fmt("condition (e)", &self.cond_e),
            format!("overall: {}", self.overall),
        ]
    }

    /// Names of the conditions that failed.
    pub fn failed_conditions(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.a_symmetric.pass {
            out.push("ambient symmetric");
        }
        if !self.r_symmetric_nonsemisimple.pass {
            out.push("subalgebra symmetric, not semisimple");
        }
        if !self.a_r_projective.pass {
            out.push("ambient projective over subalgebra");
        }
        if !self.cond_a.pass {
            out.push("(a)");
        }
        if !self.cond_a_prime.pass {
            out.push("(a')");
        }
        if !self.cond_b.pass {
            out.push("(b)");
        }
        if !self.cond_c.pass {
            out.push("(c)");
        }
        if !self.cond_d.pass {
            out.push("(d)");
        }
        if !self.cond_e.pass {
            out.push("(e)");
        }
        out
    }
}
