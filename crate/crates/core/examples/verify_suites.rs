//! Runs every property suite at a small degree.
//!
//!     cargo run --release --example verify_suites -- 6

use schurkit::verify::{run_suite, SUITES};

fn main() -> schurkit::Result<()> {
    let bound = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for suite in SUITES {
        let report = run_suite(suite, bound, true, &mut |_| {})?;
        println!("{suite:<14}{report}");
    }
    Ok(())
}
