//! Hyperplane classes on a K3 Weierstrass fibration (`g = 0`, `n = 2`,
//! Picard rank two) that survive each extendability obstruction.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{Conclusion, Rule, Verdict};
use crate::cohomology::very_ample_necessary;
use crate::invariants::min_k3_sectional_genus;
use crate::lattice::{intersect, sectional_genus, DivisorClass, SurfaceData};

/// Sectional genus bound for a K3 surface with a normal, non-cone
/// extension. Imported from the classification of Fano threefolds with
/// canonical Gorenstein singularities.
pub const MAX_EXTENDABLE_K3_GENUS: i64 = 37;

/// Genera `g ≥ 13` of smooth Fano threefolds of Picard number one.
/// Imported from the Fano classification.
pub const FANO_GENERA: [i64; 5] = [13, 17, 21, 28, 33];

/// Genera among [`FANO_GENERA`] whose anticanonical class is 2-divisible.
/// Imported from the Fano classification.
pub const TWO_DIVISIBLE_FANO_GENERA: [i64; 3] = [13, 17, 21];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum K3Mode {
    /// Classes not excluded from normal extensions.
    Normal,
    /// Classes not excluded from l.c.i. extensions.
    Lci,
    /// Classes not excluded from l.c.i. extensions with terminal singularities.
    LciTerminal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct K3Triple {
    pub a: i64,
    pub b: i64,
    pub genus: i64,
}

impl fmt::Display for K3Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.genus)
    }
}

fn k3_genus(a: i64, b: i64) -> i64 {
    sectional_genus(a, b, SurfaceData::K3)
        .to_integer()
        .to_i64()
        .expect("sectional genus fits in i64")
}

/// Very ample candidates with sectional genus in `[13, 37]`, by brute force.
fn genus_window() -> Vec<K3Triple> {
    let s = SurfaceData::K3;
    let lo = min_k3_sectional_genus();
    let mut out = Vec::new();
    // a(b − a) + 1 ≥ a(a + 1) + 1 once the class is very ample, which bounds a.
    for a in (1i64..).take_while(|a| a * (a + 1) + 1 <= MAX_EXTENDABLE_K3_GENUS) {
        for b in a.. {
            let genus = k3_genus(a, b);
            if genus > MAX_EXTENDABLE_K3_GENUS {
                break;
            }
            if very_ample_necessary(DivisorClass::new(a, b), s) && genus >= lo {
                out.push(K3Triple { a, b, genus });
            }
        }
    }
    out
}

/// Some `r ≥ 2` divides `H` and `H/r` cannot be very ample. An l.c.i.
/// extension would make `H/r` very ample.
fn has_bad_root(t: &K3Triple) -> bool {
    let d = t.a.gcd(&t.b);
    (2..=d)
        .filter(|r| d % r == 0)
        .any(|r| !very_ample_necessary(DivisorClass::new(t.a / r, t.b / r), SurfaceData::K3))
}

/// 2-divisibility of `H` in the rank-two lattice: `H·f` and `H·C` even.
fn two_divisible(t: &K3Triple) -> bool {
    let h = DivisorClass::new(t.a, t.b);
    let s = SurfaceData::K3;
    intersect(h, DivisorClass::FIBER, s) % 2 == 0 && intersect(h, DivisorClass::SECTION, s) % 2 == 0
}

fn fano_compatible(t: &K3Triple) -> bool {
    FANO_GENERA.contains(&t.genus) && (!TWO_DIVISIBLE_FANO_GENERA.contains(&t.genus) || two_divisible(t))
}

/// The triples `(a, b, g(S))` not excluded in the given mode, ascending.
pub fn k3_enumerate(mode: K3Mode) -> Vec<K3Triple> {
    let normal = genus_window();
    match mode {
        K3Mode::Normal => normal,
        K3Mode::Lci => normal.into_iter().filter(|t| !has_bad_root(t)).collect(),
        K3Mode::LciTerminal => normal
            .into_iter()
            .filter(|t| !has_bad_root(t) && fano_compatible(t))
            .collect(),
    }
}

/// All K3 verdicts for the hyperplane class `aC + bf`. Membership in a list
/// is reported as `NoVerdict`: it means "not excluded", not "extendable".
pub fn k3_verdicts(a: i64, b: i64) -> Vec<Verdict> {
    let triple = K3Triple {
        a,
        b,
        genus: k3_genus(a, b),
    };
    let mut out = vec![Verdict::fired(
        Conclusion::NotLciTerminalExtendable,
        Rule::K3FanoGenus,
        "no genus and divisibility pattern is compatible with a smooth Fano threefold of ρ = 1",
    )];
    let normal = k3_enumerate(K3Mode::Normal);
    let lci = k3_enumerate(K3Mode::Lci);
    if !normal.contains(&triple) {
        out.push(Verdict::fired(
            Conclusion::NotNormallyExtendable,
            Rule::K3GenusWindow,
            format!("{triple} is not a very ample class with 13 ≤ g(S) ≤ {MAX_EXTENDABLE_K3_GENUS}"),
        ));
        out.push(Verdict::fired(
            Conclusion::NotLciExtendable,
            Rule::K3GenusWindow,
            format!("{triple} is outside the normal list"),
        ));
    } else if !lci.contains(&triple) {
        out.push(Verdict::fired(
            Conclusion::NotLciExtendable,
            Rule::K3Divisibility,
            format!("{triple}: H = r·Δ with Δ not very ample (gcd(a, b) = {})", a.gcd(&b)),
        ));
        out.push(Verdict::none(format!(
            "{triple} is in the normal list; not excluded from normal extensions"
        )));
    } else {
        out.push(Verdict::none(format!(
            "{triple} is in the normal and l.c.i. lists; not excluded from l.c.i. extensions"
        )));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(list: &[(i64, i64, i64)]) -> Vec<K3Triple> {
        list.iter().map(|&(a, b, genus)| K3Triple { a, b, genus }).collect()
    }

    #[test]
    fn normal_list() {
        let got = k3_enumerate(K3Mode::Normal);
        assert_eq!(got.len(), 16);
        assert_eq!(got[..3], triples(&[(3, 7, 13), (3, 8, 16), (3, 9, 19)])[..]);
        assert_eq!(got[14..], triples(&[(5, 11, 31), (5, 12, 36)])[..]);
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(got, sorted);
    }

    #[test]
    fn lci_list_drops_divisible_classes() {
        let normal = k3_enumerate(K3Mode::Normal);
        let lci = k3_enumerate(K3Mode::Lci);
        assert_eq!(lci.len(), 11);
        let dropped: Vec<_> = normal.iter().filter(|t| !lci.contains(t)).copied().collect();
        assert_eq!(
            dropped,
            triples(&[(3, 9, 19), (3, 12, 28), (3, 15, 37), (4, 10, 25), (4, 12, 33)])
        );
        for t in &normal {
            assert_eq!(lci.contains(t), t.a.gcd(&t.b) == 1);
        }
    }

    #[test]
    fn lci_terminal_is_empty() {
        assert!(k3_enumerate(K3Mode::LciTerminal).is_empty());
        // Only the two-divisibility step removes the last candidates.
        let fano_genus_only: Vec<_> = k3_enumerate(K3Mode::Lci)
            .into_iter()
            .filter(|t| FANO_GENERA.contains(&t.genus))
            .collect();
        assert_eq!(fano_genus_only, triples(&[(3, 7, 13), (4, 9, 21)]));
    }

    #[test]
    fn verdicts_for_listed_and_unlisted_classes() {
        let v = k3_verdicts(3, 7);
        assert_eq!(v[0].conclusion, Conclusion::NotLciTerminalExtendable);
        assert!(v[1..].iter().all(|v| !v.is_verdict()));
        let v = k3_verdicts(3, 9);
        assert!(v
            .iter()
            .any(|v| v.conclusion == Conclusion::NotLciExtendable && v.rule == Some(Rule::K3Divisibility)));
        let v = k3_verdicts(6, 13);
        assert!(v.iter().any(|v| v.conclusion == Conclusion::NotNormallyExtendable));
    }
}
