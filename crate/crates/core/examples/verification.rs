//! Runs every verification suite on its default grid and prints a summary.
//!
//! cargo run --release --example verification

use qmzv::cli::suites::{run_suite, Suite, SuiteConfig};
use qmzv::zeta::default_budget;

fn main() {
    let cfg = SuiteConfig { n_max: None, m_max: None, s_max: None, trunc: None, budget: default_budget() };
    let mut all_passed = true;
    for suite in Suite::EACH {
        for report in run_suite(suite, &cfg) {
            println!("{}", report.summary());
            for f in report.failures.iter().take(3) {
                println!("    {} [{}]: expected {}, got {}", f.params, f.routes, f.expected, f.actual);
            }
            all_passed &= report.passed();
        }
    }
    std::process::exit(if all_passed { 0 } else { 1 });
}
