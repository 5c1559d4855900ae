//! Runs every verification suite and prints the report.

use hesslat::suite::{run_suite, Suite};

fn main() {
    let report = run_suite(Suite::All, false);
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
}
