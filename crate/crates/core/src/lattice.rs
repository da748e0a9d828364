//! The rank-two Néron–Severi lattice `Z[C] ⊕ Z[f]` of a Weierstrass fibration.
//!
//! The intersection form is fixed by the section and fiber: `C² = −n`,
//! `C·f = 1`, `f² = 0`. Everything here works on numerical classes only, so
//! a class `αC + βf` stands for every line bundle `O_S(αC) ⊗ π*M` with
//! `deg M = β`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A smooth Weierstrass fibration, up to the numerical data that matters:
/// the base genus `g` and the degree `n` of the fundamental line bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceData {
    pub g: u32,
    pub n: u32,
}

impl SurfaceData {
    pub const fn new(g: u32, n: u32) -> Self {
        SurfaceData { g, n }
    }

    /// The rational elliptic surface, `(g, n) = (0, 1)`.
    pub const RATIONAL: SurfaceData = SurfaceData::new(0, 1);
    /// The K3 case, `(g, n) = (0, 2)`.
    pub const K3: SurfaceData = SurfaceData::new(0, 2);

    pub fn genus(&self) -> i64 {
        i64::from(self.g)
    }

    pub fn degree(&self) -> i64 {
        i64::from(self.n)
    }

    /// Rejects the product case `n = 0`.
    pub fn require_fibration(&self) -> Result<()> {
        if self.n == 0 {
            Err(Error::ProductSurface)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for SurfaceData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g, n) = ({}, {})", self.g, self.n)
    }
}

/// The numerical class `alpha·C + beta·f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    pub alpha: i64,
    pub beta: i64,
}

impl DivisorClass {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        DivisorClass { alpha, beta }
    }

    pub const ZERO: DivisorClass = DivisorClass::new(0, 0);
    pub const SECTION: DivisorClass = DivisorClass::new(1, 0);
    pub const FIBER: DivisorClass = DivisorClass::new(0, 1);
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.alpha + rhs.alpha, self.beta + rhs.beta)
    }
}

impl std::ops::Sub for DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.alpha - rhs.alpha, self.beta - rhs.beta)
    }
}

impl std::ops::Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.alpha, -self.beta)
    }
}

impl std::ops::Mul<DivisorClass> for i64 {
    type Output = DivisorClass;

    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * rhs.alpha, self * rhs.beta)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.beta < 0 { '−' } else { '+' };
        write!(f, "{}C {sign} {}f", self.alpha, self.beta.abs())
    }
}

/// Intersection number under `C² = −n`, `C·f = 1`, `f² = 0`.
pub fn intersect(d1: DivisorClass, d2: DivisorClass, s: SurfaceData) -> i64 {
    -d1.alpha * d2.alpha * s.degree() + d1.alpha * d2.beta + d2.alpha * d1.beta
}

/// `K_S ≡ (n + 2g − 2) f`.
pub fn canonical_class(s: SurfaceData) -> Result<DivisorClass> {
    s.require_fibration()?;
    Ok(DivisorClass::new(0, s.degree() + 2 * s.genus() - 2))
}

/// Arithmetic genus `D·(D + K)/2 + 1` as an exact rational.
///
/// For `n = 0` the canonical class of the product, `(2g − 2) f`, is used; the
/// result is still well defined, callers that need a fibration check `n`.
pub fn genus_of_class(d: DivisorClass, s: SurfaceData) -> BigRational {
    let k = DivisorClass::new(0, s.degree() + 2 * s.genus() - 2);
    let twice = intersect(d, d + k, s);
    BigRational::new(BigInt::from(twice), BigInt::from(2)) + BigRational::from_integer(1.into())
}

/// Sectional genus of the embedding `H ≡ aC + bf`.
pub fn sectional_genus(a: i64, b: i64, s: SurfaceData) -> BigRational {
    genus_of_class(DivisorClass::new(a, b), s)
}

/// Surface Riemann–Roch `χ(D) = χ(O_S) + D·(D − K)/2`, with `χ(O_S) = n`.
pub fn riemann_roch_chi(d: DivisorClass, s: SurfaceData) -> Result<i64> {
    let k = canonical_class(s)?;
    let twice = intersect(d, d - k, s);
    // D·(D − K) ≡ D² + D·K ≡ 0 (mod 2) on any surface
    assert!(twice % 2 == 0, "D·(D − K) odd for {d} on {s}");
    Ok(s.degree() + twice / 2)
}
