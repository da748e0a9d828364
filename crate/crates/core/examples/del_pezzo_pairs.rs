//! Which `(a, C·f)` survive when the fibration extends to a Del Pezzo
//! fibration, and how line counts cut the list down.
//!
//! ```bash
//! cargo run --example del_pezzo_pairs
//! ```

use weierstrass_ext::extendability::{
    allowed_factorial_degrees, del_pezzo_line_count, example_fixtures, fibra_candidates, fibra_pairs,
};

fn main() {
    for d in 3..=8 {
        let lines = del_pezzo_line_count(d).unwrap();
        println!("degree {d}: {lines:>2} lines, divisible by d: {}", lines % d == 0);
    }
    println!(
        "degrees allowed when X is locally factorial: {:?}",
        allowed_factorial_degrees()
    );

    for c in fibra_candidates(false) {
        println!("a = {}, C·f = {}, general fiber {:?}", c.a, c.c_dot_f, c.fiber);
    }
    println!("all pairs: {:?}", fibra_pairs(false));
    println!("locally factorial: {:?}", fibra_pairs(true));

    for f in example_fixtures() {
        println!("{:>8} ({}, {}): {}", f.name, f.a, f.c_dot_f, f.construction);
    }
}
