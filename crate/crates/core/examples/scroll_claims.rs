//! The vanishings on the scroll `P(O ⊕ L⁻² ⊕ L⁻³)` that give
//! `H¹(T_S(−1)) = 0`, one cohomology group at a time.
//!
//! ```bash
//! cargo run --example scroll_claims
//! ```

use weierstrass_ext::scroll::{scroll_h, sym_power, SplitBundle};
use weierstrass_ext::{verify_scroll_claims, GenericityPolicy, SurfaceData};

fn main() {
    let s = SurfaceData::new(1, 1);
    let e = SplitBundle::weierstrass(s);
    println!(
        "E = {:?}, Sym²E = {:?}",
        e.summand_degrees,
        sym_power(&e, 2).summand_degrees
    );
    println!(
        "h⁰(Y, 2ξ + p*O(5)) = {:?}",
        scroll_h(2, 5, &e, 0, GenericityPolicy::AssumeGeneric).unwrap()
    );

    let report = verify_scroll_claims(s, 9, 12, GenericityPolicy::RequireExact).unwrap();
    for claim in report.claims() {
        println!(
            "\n{}  [{}]",
            claim.statement,
            if claim.holds { "holds" } else { "open" }
        );
        for t in &claim.terms {
            println!("  {:<55} {:?}", t.space, t.answer);
        }
        if let Some(why) = &claim.structural {
            println!("  structural: {why}");
        }
    }
    println!("\nH¹(T_S(−1)) = 0: {}", report.tangent_h1_vanishes);

    let err = verify_scroll_claims(SurfaceData::RATIONAL, 6, 7, GenericityPolicy::AssumeGeneric).unwrap_err();
    println!("rational surface with (a, b) = (6, 7): {err}");
}
