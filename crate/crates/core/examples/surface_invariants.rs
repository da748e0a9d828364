//! Hodge numbers and Kodaira dimension as `(g, n)` vary.
//!
//! ```bash
//! cargo run --example surface_invariants
//! ```

use weierstrass_ext::invariants::picard_rank_bounds;
use weierstrass_ext::{compute_invariants, min_k3_sectional_genus, SurfaceData};

fn main() {
    println!(
        "{:>2} {:>2} {:>3} {:>4} {:>4} {:>6} {:>5} {:>8}",
        "g", "n", "q", "p_g", "h11", "χ(O)", "κ", "ρ range"
    );
    for g in 0..3 {
        for n in 1..4 {
            let s = SurfaceData::new(g, n);
            let inv = compute_invariants(s).unwrap();
            let (lo, hi) = picard_rank_bounds(s).unwrap();
            println!(
                "{g:>2} {n:>2} {:>3} {:>4} {:>4} {:>6} {:>5} {:>8}",
                inv.q,
                inv.p_g,
                inv.h11,
                inv.chi_o,
                inv.kodaira.to_string(),
                format!("[{lo}, {hi}]")
            );
        }
    }

    match compute_invariants(SurfaceData::new(0, 0)) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\n(g, n) = (0, 0): {e}"),
    }
    println!(
        "smallest sectional genus of a very ample class on a K3 fibration: {}",
        min_k3_sectional_genus()
    );
}
