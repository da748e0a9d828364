//! Line-bundle cohomology on the base curve and, through the pushforward
//! `π_* O_S(αC) = O_B ⊕ L⁻² ⊕ … ⊕ L⁻ᵅ`, on the surface.
//!
//! A numerical class only fixes a bundle up to a degree-zero twist from the
//! base, and on a curve of genus `g ≥ 1` a bundle of degree `0 ≤ d ≤ 2g − 2`
//! does not have its cohomology determined by `d`. Answers therefore carry
//! their exactness: [`CohomologyAnswer::Exact`] when the degree decides,
//! [`CohomologyAnswer::Generic`] for the value on a general twist, and
//! [`CohomologyAnswer::Indeterminate`] with Riemann–Roch/Clifford bounds when
//! the caller refuses to assume genericity.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{canonical_class, DivisorClass, SurfaceData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomologyAnswer {
    Exact { value: u64 },
    Generic { value: u64 },
    Indeterminate { min: u64, max: u64 },
}

impl CohomologyAnswer {
    pub const ZERO: CohomologyAnswer = CohomologyAnswer::Exact { value: 0 };

    /// The single value, if the answer has one.
    pub fn value(&self) -> Option<u64> {
        match *self {
            CohomologyAnswer::Exact { value } | CohomologyAnswer::Generic { value } => Some(value),
            CohomologyAnswer::Indeterminate { .. } => None,
        }
    }

    pub fn bounds(&self) -> (u64, u64) {
        match *self {
            CohomologyAnswer::Exact { value } | CohomologyAnswer::Generic { value } => (value, value),
            CohomologyAnswer::Indeterminate { min, max } => (min, max),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, CohomologyAnswer::Exact { .. })
    }

    /// Zero under the policy that produced the answer: an exact zero, a
    /// generic zero, or an indeterminate range collapsed to zero.
    pub fn vanishes(&self) -> bool {
        self.bounds().1 == 0
    }

    fn rank(&self) -> u8 {
        match self {
            CohomologyAnswer::Exact { .. } => 0,
            CohomologyAnswer::Generic { .. } => 1,
            CohomologyAnswer::Indeterminate { .. } => 2,
        }
    }
}

impl Add for CohomologyAnswer {
    type Output = CohomologyAnswer;

    fn add(self, rhs: CohomologyAnswer) -> CohomologyAnswer {
        let (lo1, hi1) = self.bounds();
        let (lo2, hi2) = rhs.bounds();
        match self.rank().max(rhs.rank()) {
            0 => CohomologyAnswer::Exact { value: lo1 + lo2 },
            1 => CohomologyAnswer::Generic { value: lo1 + lo2 },
            _ => CohomologyAnswer::Indeterminate {
                min: lo1 + lo2,
                max: hi1 + hi2,
            },
        }
    }
}

impl std::iter::Sum for CohomologyAnswer {
    fn sum<I: Iterator<Item = CohomologyAnswer>>(iter: I) -> CohomologyAnswer {
        iter.fold(CohomologyAnswer::ZERO, Add::add)
    }
}

impl fmt::Display for CohomologyAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyAnswer::Exact { value } => write!(f, "{value}"),
            CohomologyAnswer::Generic { value } => write!(f, "{value} (generic)"),
            CohomologyAnswer::Indeterminate { min, max } => write!(f, "[{min}, {max}]"),
        }
    }
}

/// How to answer in the degree range where cohomology depends on the bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenericityPolicy {
    RequireExact,
    #[default]
    AssumeGeneric,
}

fn to_u64(x: i64) -> u64 {
    u64::try_from(x).expect("cohomology dimension is non-negative")
}

/// `(h⁰, h¹)` of a degree-`d` line bundle on a genus-`g` curve.
pub fn curve_h(g: u32, d: i64, policy: GenericityPolicy) -> (CohomologyAnswer, CohomologyAnswer) {
    let g = i64::from(g);
    let chi = d + 1 - g;
    if d < 0 {
        return (CohomologyAnswer::ZERO, CohomologyAnswer::Exact { value: to_u64(-chi) });
    }
    if d > 2 * g - 2 {
        return (CohomologyAnswer::Exact { value: to_u64(chi) }, CohomologyAnswer::ZERO);
    }
    let h0 = chi.max(0);
    let h1 = h0 - chi;
    match policy {
        GenericityPolicy::AssumeGeneric => (
            CohomologyAnswer::Generic { value: to_u64(h0) },
            CohomologyAnswer::Generic { value: to_u64(h1) },
        ),
        GenericityPolicy::RequireExact => {
            // Clifford: h⁰ ≤ 1 + d/2 for 0 ≤ d ≤ 2g − 2.
            let h0_max = 1 + d / 2;
            (
                CohomologyAnswer::Indeterminate {
                    min: to_u64(h0),
                    max: to_u64(h0_max),
                },
                CohomologyAnswer::Indeterminate {
                    min: to_u64(h1),
                    max: to_u64(h0_max - chi),
                },
            )
        }
    }
}

/// Degrees of the line-bundle summands of `π_* O_S(D)` for `α ≥ 0`.
pub fn pushforward_summands(d: DivisorClass, s: SurfaceData) -> Result<Vec<i64>> {
    if d.alpha < 0 {
        return Err(Error::NegativeAlpha(d.alpha));
    }
    let n = s.degree();
    let mut out = vec![d.beta];
    out.extend((2..=d.alpha).map(|i| d.beta - i * n));
    Ok(out)
}

/// `h^q(S, D)` for `q ∈ {0, 1, 2}`.
pub fn surface_h(d: DivisorClass, s: SurfaceData, q: u8, policy: GenericityPolicy) -> Result<CohomologyAnswer> {
    if q > 2 {
        return Err(Error::IndexOutOfRange { got: q, max: 2 });
    }
    let k = canonical_class(s)?;
    if d.alpha < 0 {
        return surface_h(k - d, s, 2 - q, policy);
    }
    let pick = |(h0, h1): (CohomologyAnswer, CohomologyAnswer), i: u8| if i == 0 { h0 } else { h1 };
    if d.alpha == 0 {
        // π_* O_S(βf) has degree β and R¹π_* O_S(βf) has degree β − n.
        let direct = curve_h(s.g, d.beta, policy);
        let higher = curve_h(s.g, d.beta - s.degree(), policy);
        return Ok(match q {
            0 => direct.0,
            1 => direct.1 + higher.0,
            _ => higher.1,
        });
    }
    if q == 2 {
        return Ok(CohomologyAnswer::ZERO);
    }
    Ok(pushforward_summands(d, s)?
        .into_iter()
        .map(|deg| pick(curve_h(s.g, deg, policy), q))
        .sum())
}

/// Degree-only sufficient condition for `H¹(S, D) = 0`. `false` means the
/// criterion is silent, not that `H¹` is nonzero.
pub fn h1_vanishes(d: DivisorClass, s: SurfaceData) -> bool {
    let (n, g) = (s.degree(), s.genus());
    (d.alpha == 1 && d.beta >= 2 * g - 1) || (d.alpha >= 2 && d.beta >= d.alpha * n + 2 * g - 1)
}

/// Sufficient condition for `|D|` to be base-point free.
pub fn base_point_free(d: DivisorClass, s: SurfaceData) -> bool {
    d.alpha >= 2 && d.beta >= d.alpha * s.degree() + 2 * s.genus()
}

/// Sufficient condition for `D` to be very ample.
pub fn very_ample_sufficient(d: DivisorClass, s: SurfaceData) -> bool {
    d.alpha >= 3 && d.beta >= d.alpha * s.degree() + 2 * s.genus() + 1
}

/// Necessary condition for `D` to be very ample (`D·f ≥ 3` and `D·C ≥ 1`).
/// `false` means `D` is provably not very ample.
pub fn very_ample_necessary(d: DivisorClass, s: SurfaceData) -> bool {
    d.alpha >= 3 && d.beta >= d.alpha * s.degree() + 1
}

/// What is known about the gonality of a general member of `|D₀|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum GonalityStatus {
    /// Neither hyperelliptic nor trigonal.
    NonTrigonal,
    /// Not hyperelliptic, and the fibration cuts a `g¹₃`.
    NonHyperellipticTrigonal,
    /// Trigonal, supplied by the caller.
    Trigonal,
    Unknown,
}

impl GonalityStatus {
    pub fn is_trigonal(self) -> bool {
        matches!(
            self,
            GonalityStatus::NonHyperellipticTrigonal | GonalityStatus::Trigonal
        )
    }
}

/// Gonality of a general `D ∈ |D₀|` where it is known: `3C + βf` with
/// `β ≥ 3n` over `P¹`, `2C + βf` with `β ≥ 2n + 2g` over a positive-genus
/// base. Anything else is `Unknown`.
pub fn general_member_gonality(d0: DivisorClass, s: SurfaceData) -> GonalityStatus {
    let (n, g) = (s.degree(), s.genus());
    if n == 0 {
        return GonalityStatus::Unknown;
    }
    if g >= 1 && d0.alpha == 2 && d0.beta >= 2 * n + 2 * g {
        GonalityStatus::NonTrigonal
    } else if g == 0 && d0.alpha == 3 && d0.beta >= 3 * n {
        GonalityStatus::NonHyperellipticTrigonal
    } else {
        GonalityStatus::Unknown
    }
}

/// Whether the hyperplane class `aC + bf` satisfies the fiber-twist vanishing
/// needed to extend the fibration, for a very ample bundle of degree
/// `d_base ≥ 1` on the base: `d_base ≤ H·C` and
/// `H¹(K_S + H − f₁ − … − f_d) = 0` by the degree criterion.
pub fn remark_van_holds(a: i64, b: i64, s: SurfaceData, d_base: i64) -> bool {
    let (n, g) = (s.degree(), s.genus());
    if d_base < 1 || d_base > b - a * n {
        return false;
    }
    h1_vanishes(DivisorClass::new(a, b + n + 2 * g - 2 - d_base), s)
}
