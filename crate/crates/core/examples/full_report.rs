//! Builds the full report, prints the markdown document and checks that the
//! JSON form survives a round trip.
//!
//! ```bash
//! cargo run --example full_report
//! ```

use weierstrass_ext::report::{full_report, render_markdown, Report};

fn main() {
    let report = full_report();
    print!("{}", render_markdown(&report));

    let text = report.to_json_string();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    eprintln!("JSON form: {} bytes, round trip ok", text.len());
}
