//! Extendability verdicts.
//!
//! - [`fibra`]: which `(a, C·f)` can occur when the fibration extends to a
//!   threefold whose general fiber is a Del Pezzo surface.
//! - [`numerical`]: the Gaussian-map criterion, the scroll criterion, and the
//!   top-level verdicts built from them.
//! - [`k3`]: the finite lists for K3 Weierstrass fibrations.

use std::fmt;

use serde::{Deserialize, Serialize};

pub mod fibra;
pub mod k3;
pub mod numerical;

pub use crate::cohomology::GonalityStatus;
pub use fibra::{
    allowed_factorial_degrees, del_pezzo_line_count, example_fixtures, fibra_candidates, fibra_pairs, ExampleFixture,
    FiberCandidate, FiberType,
};
pub use k3::{k3_enumerate, k3_verdicts, K3Mode, K3Triple};
pub use numerical::{
    cor_nonextweier_verdict, gaussian_bel_surjective, nonextweier2_verdict, numerical_conditions, prop_numerical_check,
    threshold_routes, NumericalConditions, ThresholdRoutes,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    NotExtendable,
    NotLciExtendable,
    NotLciTerminalExtendable,
    NotNormallyExtendable,
    FanoConstraint,
    NoVerdict,
}

/// The argument behind a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Surjective Gaussian map on a curve section through a base-point-free
    /// `D₀`; numerical conditions on `(H, D₀)`.
    GaussianMap,
    /// `H¹(T_S(−1)) = 0` computed on the Weierstrass scroll, then Zak.
    ScrollTangent,
    /// Rank-two Picard group forces the fibration to extend, and no Del Pezzo
    /// fibration is compatible with a Weierstrass section.
    LciPicardRankTwo,
    /// K3 case: an l.c.i. extension is an anticanonical Fano threefold of
    /// Picard number one.
    K3FanoThreefold,
    /// K3 case: sectional genus outside `[13, 37]` or class not very ample.
    K3GenusWindow,
    /// K3 case: a divisible hyperplane class whose quotient cannot be very
    /// ample.
    K3Divisibility,
    /// K3 case: genus or 2-divisibility incompatible with smooth Fano
    /// threefolds of Picard number one.
    K3FanoGenus,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::GaussianMap => "gaussian-map",
            Rule::ScrollTangent => "scroll-tangent",
            Rule::LciPicardRankTwo => "lci-picard-rank-two",
            Rule::K3FanoThreefold => "k3-fano-threefold",
            Rule::K3GenusWindow => "k3-genus-window",
            Rule::K3Divisibility => "k3-divisibility",
            Rule::K3FanoGenus => "k3-fano-genus",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A conclusion, the rule that produced it, and the inequality or list
/// membership that fired. `rule` is `None` exactly for `NoVerdict`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub conclusion: Conclusion,
    pub rule: Option<Rule>,
    pub witness: String,
}

impl Verdict {
    pub fn fired(conclusion: Conclusion, rule: Rule, witness: impl Into<String>) -> Self {
        debug_assert!(conclusion != Conclusion::NoVerdict);
        Verdict {
            conclusion,
            rule: Some(rule),
            witness: witness.into(),
        }
    }

    pub fn none(witness: impl Into<String>) -> Self {
        Verdict {
            conclusion: Conclusion::NoVerdict,
            rule: None,
            witness: witness.into(),
        }
    }

    pub fn is_verdict(&self) -> bool {
        self.conclusion != Conclusion::NoVerdict
    }
}
