//! Nonextendability from numerical data: the Gaussian-map criterion on a
//! curve section `D ∈ |D₀|`, the scroll criterion, and their combination.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Conclusion, Rule, Verdict};
use crate::cohomology::{general_member_gonality, very_ample_necessary, GonalityStatus};
use crate::error::{Error, Result};
use crate::lattice::{canonical_class, intersect, DivisorClass, SurfaceData};
use crate::scroll::zak_nonextendable;

/// Each condition of the Gaussian-map criterion for `H ≡ aC + bf` and
/// `D₀ ≡ αC + βf`. Conditional ones are `None` when they do not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalConditions {
    /// `t = D₀·(D₀ + K_S)`, twice the genus of `D` minus two.
    pub t: i64,
    /// `H·D₀`.
    pub h_dot_d0: i64,
    pub genus_window: bool,
    pub base_point_free: bool,
    pub residual_vanishing: bool,
    pub residual_degree: bool,
    pub non_trigonal_bound: Option<bool>,
    pub trigonal_bound: Option<bool>,
    pub genus_four_bound: Option<bool>,
}

impl NumericalConditions {
    pub fn all_hold(&self) -> bool {
        self.genus_window
            && self.base_point_free
            && self.residual_vanishing
            && self.residual_degree
            && self.non_trigonal_bound.unwrap_or(true)
            && self.trigonal_bound.unwrap_or(true)
            && self.genus_four_bound.unwrap_or(true)
    }

    /// Name of the first failing condition.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.genus_window, "6 ≤ D₀·(D₀ + K) ≠ 10"),
            (self.base_point_free, "α ≥ 2 and β ≥ αn + 2g"),
            (self.residual_vanishing, "H¹(H − 2D₀) = 0 by degree"),
            (self.residual_degree, "(H − D₀)·D₀ ≥ D₀·(D₀ + K) + 3"),
            (self.non_trigonal_bound.unwrap_or(true), "H·D₀ ≥ 2D₀·(D₀ + K) + 1"),
            (self.trigonal_bound.unwrap_or(true), "H·D₀ ≥ 3/2·D₀·(D₀ + K) + 10"),
            (self.genus_four_bound.unwrap_or(true), "H·D₀ ≥ 17"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

/// Evaluates every condition without checking the hypotheses.
pub fn numerical_conditions(
    s: SurfaceData,
    a: i64,
    b: i64,
    d0: DivisorClass,
    gonality: GonalityStatus,
) -> Result<NumericalConditions> {
    let k = canonical_class(s)?;
    let (n, g) = (s.degree(), s.genus());
    let h = DivisorClass::new(a, b);
    let (alpha, beta) = (d0.alpha, d0.beta);
    let t = intersect(d0, d0 + k, s);
    let h_dot_d0 = intersect(h, d0, s);
    let d0_sq = intersect(d0, d0, s);

    let rest_alpha = a - 2 * alpha;
    let rest_beta = b - 2 * beta;
    let residual_vanishing =
        (rest_alpha >= 2 && rest_beta >= rest_alpha * n + g - 1) || (rest_alpha == 1 && rest_beta >= g - 1);

    let trigonal_bound = (gonality.is_trigonal() && t >= 8).then(|| {
        let lhs = BigRational::from_integer(BigInt::from(h_dot_d0));
        let rhs = BigRational::new(BigInt::from(3 * t), BigInt::from(2)) + BigRational::from_integer(BigInt::from(10));
        lhs >= rhs
    });

    Ok(NumericalConditions {
        t,
        h_dot_d0,
        genus_window: t >= 6 && t != 10,
        base_point_free: alpha >= 2 && beta >= alpha * n + 2 * g,
        residual_vanishing,
        residual_degree: h_dot_d0 - d0_sq >= t + 3,
        non_trigonal_bound: (gonality == GonalityStatus::NonTrigonal).then_some(h_dot_d0 >= 2 * t + 1),
        trigonal_bound,
        genus_four_bound: (t == 6).then_some(h_dot_d0 >= 17),
    })
}

/// Gaussian-map nonextendability test for `H ≡ aC + bf` with auxiliary
/// class `D₀`, whose general member has the given gonality.
///
/// Requires `n ≥ 1`, a known non-hyperelliptic gonality, and `g = 0` or a
/// linearly normal embedding.
pub fn prop_numerical_check(
    s: SurfaceData,
    a: i64,
    b: i64,
    d0: DivisorClass,
    gonality: GonalityStatus,
    linearly_normal: bool,
) -> Result<Verdict> {
    s.require_fibration()?;
    if gonality == GonalityStatus::Unknown {
        return Err(Error::Hypothesis(
            "the general D ∈ |D₀| must be known to be non-hyperelliptic".into(),
        ));
    }
    if s.g != 0 && !linearly_normal {
        return Err(Error::Hypothesis("either g = 0 or S is linearly normal".into()));
    }
    let c = numerical_conditions(s, a, b, d0, gonality)?;
    if c.all_hold() {
        Ok(Verdict::fired(
            Conclusion::NotExtendable,
            Rule::GaussianMap,
            format!("D₀ = {d0}: D₀·(D₀ + K) = {}, H·D₀ = {}", c.t, c.h_dot_d0),
        ))
    } else {
        Ok(Verdict::none(format!(
            "D₀ = {d0}: fails {}",
            c.first_failure().unwrap_or("?")
        )))
    }
}

/// Curve-section class used by the Gaussian route: `3C + 3nf` over `P¹`,
/// `2C + (2n + 2g)f` otherwise.
pub fn gaussian_section_class(s: SurfaceData) -> DivisorClass {
    let (n, g) = (s.degree(), s.genus());
    if g == 0 {
        DivisorClass::new(3, 3 * n)
    } else {
        DivisorClass::new(2, 2 * n + 2 * g)
    }
}

/// Which of the two nonextendability routes applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRoutes {
    pub gaussian: bool,
    pub zak: bool,
}

impl ThresholdRoutes {
    pub fn any(self) -> bool {
        self.gaussian || self.zak
    }
}

pub fn threshold_routes(s: SurfaceData, a: i64, b: i64, linearly_normal: bool) -> ThresholdRoutes {
    let d0 = gaussian_section_class(s);
    let gonality = general_member_gonality(d0, s);
    let gaussian = prop_numerical_check(s, a, b, d0, gonality, linearly_normal)
        .map(|v| v.conclusion == Conclusion::NotExtendable)
        .unwrap_or(false);
    ThresholdRoutes {
        gaussian,
        zak: zak_nonextendable(s, a, b),
    }
}

/// Nonextendability of `S ⊂ P^N` with `H_S ≡ aC + bf`, with no assumption on
/// the Picard rank. The Gaussian route is reported when both apply.
pub fn nonextweier2_verdict(s: SurfaceData, a: i64, b: i64, linearly_normal: bool) -> Result<Verdict> {
    s.require_fibration()?;
    if !very_ample_necessary(DivisorClass::new(a, b), s) {
        return Err(Error::NotVeryAmple(format!(
            "need a ≥ 3 and b ≥ an + 1, got (a, b) = ({a}, {b}) with n = {}",
            s.n
        )));
    }
    let routes = threshold_routes(s, a, b, linearly_normal);
    if routes.gaussian {
        let d0 = gaussian_section_class(s);
        let gonality = general_member_gonality(d0, s);
        return prop_numerical_check(s, a, b, d0, gonality, linearly_normal);
    }
    if routes.zak {
        return Ok(Verdict::fired(
            Conclusion::NotExtendable,
            Rule::ScrollTangent,
            format!("a = {a} = 3·{} with u ≥ 2: H¹(T_S(−H_S)) = 0", a / 3),
        ));
    }
    Ok(Verdict::none(
        "neither the Gaussian-map nor the scroll criterion applies",
    ))
}

/// Verdict for a Weierstrass fibration of Picard rank two.
pub fn cor_nonextweier_verdict(s: SurfaceData) -> Result<Verdict> {
    s.require_fibration()?;
    if s == SurfaceData::RATIONAL {
        return Err(Error::Hypothesis("(g, n) ≠ (0, 1)".into()));
    }
    if s == SurfaceData::K3 {
        return Ok(Verdict::fired(
            Conclusion::FanoConstraint,
            Rule::K3FanoThreefold,
            "any l.c.i. extension is an anticanonically embedded Fano threefold with ρ = 1 \
             and h¹(O_X) = h²(O_X) = 0",
        ));
    }
    Ok(Verdict::fired(
        Conclusion::NotLciExtendable,
        Rule::LciPicardRankTwo,
        format!("{s} with κ(S) = 1 and ρ(S) = 2"),
    ))
}

/// Sufficient condition for surjectivity of `Φ_{ω_C, L}` on a curve of
/// genus `curve_genus` and Clifford index `clifford`.
pub fn gaussian_bel_surjective(curve_genus: i64, clifford: i64, deg_l: i64) -> bool {
    let g = curve_genus;
    (clifford >= 2 && deg_l >= 4 * g + 1 - 2 * clifford) || (clifford >= 3 && deg_l >= 4 * g + 1 - 3 * clifford)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GonalityStatus::*;

    #[test]
    fn numerical_examples() {
        let v = prop_numerical_check(
            SurfaceData::K3,
            7,
            15,
            DivisorClass::new(3, 6),
            NonHyperellipticTrigonal,
            false,
        )
        .unwrap();
        assert_eq!(v.conclusion, Conclusion::NotExtendable);
        assert_eq!(v.rule, Some(Rule::GaussianMap));
        let c = numerical_conditions(
            SurfaceData::K3,
            7,
            15,
            DivisorClass::new(3, 6),
            NonHyperellipticTrigonal,
        )
        .unwrap();
        assert_eq!((c.t, c.h_dot_d0), (18, 45));
        assert_eq!(c.trigonal_bound, Some(true));

        let s = SurfaceData::new(1, 1);
        let c = numerical_conditions(s, 7, 11, DivisorClass::new(2, 4), NonTrigonal).unwrap();
        assert_eq!((c.t, c.h_dot_d0), (14, 36));
        assert_eq!(c.non_trigonal_bound, Some(true));
        let v = prop_numerical_check(s, 7, 11, DivisorClass::new(2, 4), NonTrigonal, true).unwrap();
        assert_eq!(v.conclusion, Conclusion::NotExtendable);

        for gon in [NonTrigonal, NonHyperellipticTrigonal, Trigonal] {
            let v = prop_numerical_check(SurfaceData::RATIONAL, 4, 5, DivisorClass::new(3, 3), gon, false).unwrap();
            assert_eq!(v.conclusion, Conclusion::NoVerdict);
            assert!(v.rule.is_none());
        }
        let c = numerical_conditions(SurfaceData::RATIONAL, 4, 5, DivisorClass::new(3, 3), Trigonal).unwrap();
        assert!(!c.residual_vanishing);
    }

    #[test]
    fn numerical_hypotheses() {
        let s = SurfaceData::new(1, 1);
        assert!(prop_numerical_check(s, 7, 11, DivisorClass::new(2, 4), NonTrigonal, false).is_err());
        assert!(prop_numerical_check(s, 7, 11, DivisorClass::new(2, 4), Unknown, true).is_err());
        assert!(prop_numerical_check(
            SurfaceData::new(1, 0),
            7,
            11,
            DivisorClass::new(2, 4),
            NonTrigonal,
            true
        )
        .is_err());
    }

    /// `3/2·t + 10` is compared exactly and a tie satisfies it.
    #[test]
    fn trigonal_bound_tie() {
        let s = SurfaceData::RATIONAL;
        let d0 = DivisorClass::new(3, 4);
        let tie = numerical_conditions(s, 7, 7, d0, Trigonal).unwrap();
        assert_eq!((tie.t, tie.h_dot_d0), (12, 28));
        assert_eq!(tie.trigonal_bound, Some(true));
        let below = numerical_conditions(s, 7, 6, d0, Trigonal).unwrap();
        assert_eq!(below.trigonal_bound, Some(false));
        for b in 0..40 {
            let c = numerical_conditions(s, 8, b, d0, Trigonal).unwrap();
            assert_eq!(c.trigonal_bound, Some(2 * c.h_dot_d0 >= 3 * c.t + 20));
        }
    }

    #[test]
    fn top_level_examples() {
        let v = nonextweier2_verdict(SurfaceData::RATIONAL, 7, 8, false).unwrap();
        assert_eq!(
            (v.conclusion, v.rule),
            (Conclusion::NotExtendable, Some(Rule::GaussianMap))
        );
        let v = nonextweier2_verdict(SurfaceData::RATIONAL, 6, 7, false).unwrap();
        assert_eq!(v.conclusion, Conclusion::NoVerdict);
        let v = nonextweier2_verdict(SurfaceData::new(1, 1), 5, 10, true).unwrap();
        assert_eq!(v.conclusion, Conclusion::NotExtendable);
        let v = nonextweier2_verdict(SurfaceData::new(1, 1), 5, 9, true).unwrap();
        assert_eq!(v.conclusion, Conclusion::NoVerdict);
        let v = nonextweier2_verdict(SurfaceData::RATIONAL, 6, 8, false).unwrap();
        assert_eq!(v.rule, Some(Rule::ScrollTangent));
        assert!(matches!(
            nonextweier2_verdict(SurfaceData::RATIONAL, 2, 9, false),
            Err(Error::NotVeryAmple(_))
        ));
    }

    #[test]
    fn overlapping_routes_are_both_recorded() {
        let r = threshold_routes(SurfaceData::new(1, 1), 9, 30, true);
        assert!(r.gaussian && r.zak);
        let r = threshold_routes(SurfaceData::new(1, 1), 9, 10, true);
        assert!(!r.gaussian && r.zak);
    }

    #[test]
    fn rank_two_verdicts() {
        let v = cor_nonextweier_verdict(SurfaceData::new(1, 1)).unwrap();
        assert_eq!(v.conclusion, Conclusion::NotLciExtendable);
        let v = cor_nonextweier_verdict(SurfaceData::K3).unwrap();
        assert_eq!(v.conclusion, Conclusion::FanoConstraint);
        assert!(cor_nonextweier_verdict(SurfaceData::RATIONAL).is_err());
        assert!(cor_nonextweier_verdict(SurfaceData::new(3, 0)).is_err());
    }

    #[test]
    fn bel_bound() {
        assert!(gaussian_bel_surjective(8, 3, 24));
        assert!(!gaussian_bel_surjective(8, 3, 23));
        assert!(!gaussian_bel_surjective(8, 1, 100));
        assert!(gaussian_bel_surjective(5, 2, 17));
        assert!(!gaussian_bel_surjective(5, 2, 16));
    }
}
