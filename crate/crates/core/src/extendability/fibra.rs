//! Del Pezzo fibers of an extended elliptic fibration.
//!
//! If `π: S → B` extends to `X → B`, the general fiber `F` of `X` is a Del
//! Pezzo surface with `−K_F = L|_F ≡ a·E|_F`, of degree `d = K_F² = a·(C·f)`.
//! So `a` divides the Fano index of `F`, and `3 ≤ d ≤ 9`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberType {
    ProjectivePlane,
    Quadric,
    /// `P²` blown up in `points` general points, `1 ≤ points ≤ 6`.
    BlowUp {
        points: u8,
    },
}

impl FiberType {
    /// Smooth Del Pezzo surfaces that can be embedded anticanonically
    /// (degree at least 3).
    pub fn all() -> Vec<FiberType> {
        let mut out = vec![FiberType::ProjectivePlane, FiberType::Quadric];
        out.extend((1..=6).map(|points| FiberType::BlowUp { points }));
        out
    }

    pub fn degree(self) -> i64 {
        match self {
            FiberType::ProjectivePlane => 9,
            FiberType::Quadric => 8,
            FiberType::BlowUp { points } => 9 - i64::from(points),
        }
    }

    /// Largest `r` with `−K_F` divisible by `r` in `Pic F`.
    pub fn fano_index(self) -> i64 {
        match self {
            FiberType::ProjectivePlane => 3,
            FiberType::Quadric => 2,
            FiberType::BlowUp { .. } => 1,
        }
    }

    /// Whether this fiber survives when `X` is locally factorial.
    ///
    /// Blow-ups: the lines in the fibers sweep a Cartier divisor `T` with
    /// `deg T|_F = r·d`, so `d` must divide the line count. `P²` and
    /// `P¹ × P¹`: `−K_F` must not be divisible beyond `a`, otherwise the
    /// root of `−K` over the generic fiber extends and restricts to a
    /// multiple of `L|_F`.
    fn survives_factoriality(self, a: i64) -> bool {
        match self {
            FiberType::BlowUp { .. } => allowed_factorial_degrees().contains(&self.degree()),
            _ => a == self.fano_index(),
        }
    }
}

fn binomial(m: i64, k: i64) -> i64 {
    if k < 0 || m < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

/// Number of lines on a Del Pezzo surface of degree `d ∈ [3, 8]`, blown up
/// from `P²` in `9 − d` points: exceptional curves, lines through two
/// points, conics through five.
pub fn del_pezzo_line_count(d: i64) -> Result<i64> {
    if !(3..=8).contains(&d) {
        return Err(Error::DegreeOutOfRange { got: d, min: 3, max: 8 });
    }
    let r = 9 - d;
    Ok(r + binomial(r, 2) + binomial(r, 5))
}

/// Degrees `d ∈ [3, 8]` with `d | #lines`.
pub fn allowed_factorial_degrees() -> BTreeSet<i64> {
    (3..=8)
        .filter(|&d| del_pezzo_line_count(d).map(|lines| lines % d == 0).unwrap_or(false))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiberCandidate {
    pub a: i64,
    pub c_dot_f: i64,
    pub fiber: FiberType,
}

/// Every `(a, C·f, F)` compatible with the fiber analysis.
pub fn fibra_candidates(locally_factorial: bool) -> Vec<FiberCandidate> {
    let mut out = Vec::new();
    for fiber in FiberType::all() {
        let d = fiber.degree();
        for a in (1..=d).filter(|a| fiber.fano_index() % a == 0 && d % a == 0) {
            if locally_factorial && !fiber.survives_factoriality(a) {
                continue;
            }
            out.push(FiberCandidate {
                a,
                c_dot_f: d / a,
                fiber,
            });
        }
    }
    out.sort();
    out
}

/// The admissible `(a, C·f)` pairs.
pub fn fibra_pairs(locally_factorial: bool) -> BTreeSet<(i64, i64)> {
    fibra_candidates(locally_factorial)
        .into_iter()
        .map(|c| (c.a, c.c_dot_f))
        .collect()
}

/// Known smoothly extendable examples and their `(a, C·f)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleFixture {
    pub name: String,
    pub a: i64,
    pub c_dot_f: i64,
    pub construction: String,
}

pub fn example_fixtures() -> Vec<ExampleFixture> {
    let table: [(&str, i64, i64, &str); 6] = [
        ("uno", 3, 3, "hyperplane section of |3ξ| on a rank-3 scroll"),
        ("due", 1, 3, "cubic-fibered divisor in |3ξ| on a rank-4 scroll"),
        ("tre", 2, 4, "hyperplane section of a rank-4 scroll under |2ξ|"),
        ("quattro", 1, 4, "two quadric sections of a rank-5 scroll"),
        ("cinque", 1, 5, "linear section of B × G(1, 4) in its Segre embedding"),
        (
            "sei",
            1,
            6,
            "quotient of T × E by an order-6 action, T a degree-6 Del Pezzo",
        ),
    ];
    table
        .into_iter()
        .map(|(name, a, c, construction)| ExampleFixture {
            name: name.into(),
            a,
            c_dot_f: c,
            construction: construction.into(),
        })
        .collect()
}
