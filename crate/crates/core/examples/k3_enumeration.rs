//! The K3 hyperplane classes left open by each extendability obstruction.
//!
//! ```bash
//! cargo run --example k3_enumeration
//! ```

use weierstrass_ext::extendability::{k3_enumerate, k3_verdicts, K3Mode};

fn main() {
    for mode in [K3Mode::Normal, K3Mode::Lci, K3Mode::LciTerminal] {
        let triples = k3_enumerate(mode);
        let shown: Vec<String> = triples.iter().map(ToString::to_string).collect();
        println!("{mode:?} ({}): {}", triples.len(), shown.join(" "));
    }

    for (a, b) in [(3, 7), (4, 12), (6, 13)] {
        println!("\nH = {a}C + {b}f");
        for v in k3_verdicts(a, b) {
            let rule = v.rule.map_or("-".to_string(), |r| r.to_string());
            println!("  {:?} [{rule}] {}", v.conclusion, v.witness);
        }
    }
}
