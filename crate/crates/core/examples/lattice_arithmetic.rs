//! Intersection numbers, canonical class and genera on `N¹(S) = Z[C] ⊕ Z[f]`.
//!
//! ```bash
//! cargo run --example lattice_arithmetic
//! ```

use weierstrass_ext::{canonical_class, genus_of_class, intersect, riemann_roch_chi, DivisorClass, SurfaceData};

fn main() {
    let s = SurfaceData::new(1, 2);
    let k = canonical_class(s).unwrap();
    println!("surface {s}: K = {k}");

    let (c, f) = (DivisorClass::SECTION, DivisorClass::FIBER);
    println!(
        "C² = {}, C·f = {}, f² = {}",
        intersect(c, c, s),
        intersect(c, f, s),
        intersect(f, f, s)
    );

    let h = DivisorClass::new(3, 10);
    println!("H = {h}: H² = {}, H·K = {}", intersect(h, h, s), intersect(h, k, s));
    println!("genus of a curve in |H| = {}", genus_of_class(h, s));
    println!("χ(O_S(H)) = {}", riemann_roch_chi(h, s).unwrap());

    // The section is a smooth curve isomorphic to the base.
    println!(
        "genus of C = {}, genus of f = {}",
        genus_of_class(c, s),
        genus_of_class(f, s)
    );
}
