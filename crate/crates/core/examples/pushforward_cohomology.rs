//! Cohomology of line bundles on `S` by pushing forward to the base curve.
//!
//! Inside `0 ≤ d ≤ 2g − 2` a degree does not determine cohomology on the
//! base, so the answer depends on the policy: a general twist, or bounds.
//!
//! ```bash
//! cargo run --example pushforward_cohomology
//! ```

use weierstrass_ext::{
    curve_h, pushforward_summands, riemann_roch_chi, surface_h, DivisorClass, GenericityPolicy, SurfaceData,
};

fn show(s: SurfaceData, d: DivisorClass) {
    println!("{s}, D = {d}, χ = {}", riemann_roch_chi(d, s).unwrap());
    if d.alpha >= 0 {
        println!(
            "  π_* O_S(D) has summands of degree {:?}",
            pushforward_summands(d, s).unwrap()
        );
    }
    for policy in [GenericityPolicy::AssumeGeneric, GenericityPolicy::RequireExact] {
        let h: Vec<String> = (0..3)
            .map(|q| match surface_h(d, s, q, policy).unwrap().bounds() {
                (lo, hi) if lo == hi => lo.to_string(),
                (lo, hi) => format!("{lo}..{hi}"),
            })
            .collect();
        println!("  {policy:?}: h⁰, h¹, h² = {}", h.join(", "));
    }
}

fn main() {
    println!(
        "degree 0 on an elliptic curve: {:?}",
        curve_h(1, 0, GenericityPolicy::RequireExact).0
    );
    show(SurfaceData::K3, DivisorClass::new(3, 7));
    show(SurfaceData::new(2, 1), DivisorClass::new(2, 3));
    show(SurfaceData::new(2, 1), DivisorClass::new(-1, -2));
    show(SurfaceData::new(1, 3), DivisorClass::new(0, 2));
}
