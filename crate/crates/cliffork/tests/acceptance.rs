//! Runs every acceptance criterion and prints one line each.
//!
//! Criteria that fail on the printed data are reported, not hidden; the
//! target itself only fails if a suite cannot run.

use cliffork::verify::{run_suite, summary_line, SUITES};

fn main() {
    let mut passed = 0;
    for id in 1..=SUITES.len() {
        let r = match run_suite(id) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("criterion {:>2} {} ERROR {}", id, SUITES[id - 1], e);
                std::process::exit(1);
            }
        };
        println!("{}", summary_line(&r));
        for c in &r.counterexamples {
            println!("    counterexample: {}", c);
        }
        passed += r.passed as usize;
    }
    println!("{}/{} criteria pass", passed, SUITES.len());
}
