//! Map of the nonextendable region in the `(a, b)` plane for a few surfaces.
//!
//! `G` marks the Gaussian-map route, `Z` the scroll route, `B` both, `.` no
//! verdict.
//!
//! ```bash
//! cargo run --example threshold_verdicts
//! ```

use weierstrass_ext::extendability::{nonextweier2_verdict, numerical_conditions, threshold_routes, GonalityStatus};
use weierstrass_ext::{DivisorClass, SurfaceData};

fn main() {
    for s in [
        SurfaceData::RATIONAL,
        SurfaceData::K3,
        SurfaceData::new(1, 1),
        SurfaceData::new(2, 2),
    ] {
        println!("{s}, linearly normal; rows a = 3..12, columns b − an = 1..30");
        for a in 3..=12 {
            let row: String = (1..=30)
                .map(|offset| {
                    let r = threshold_routes(s, a, a * s.degree() + offset, true);
                    match (r.gaussian, r.zak) {
                        (true, true) => 'B',
                        (true, false) => 'G',
                        (false, true) => 'Z',
                        (false, false) => '.',
                    }
                })
                .collect();
            println!("  a = {a:>2}  {row}");
        }
    }

    let v = nonextweier2_verdict(SurfaceData::new(1, 1), 5, 10, true).unwrap();
    println!(
        "\n(g, n, a, b) = (1, 1, 5, 10): {:?} via {:?}: {}",
        v.conclusion, v.rule, v.witness
    );

    let c = numerical_conditions(
        SurfaceData::K3,
        7,
        15,
        DivisorClass::new(3, 6),
        GonalityStatus::NonHyperellipticTrigonal,
    )
    .unwrap();
    println!("K3, H = 7C + 15f, D₀ = 3C + 6f: {c:?}");
}
