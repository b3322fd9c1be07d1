// Runs every verification suite for all Coxeter words of a type and prints
// one line per check.

use std::sync::Arc;

use cluster_denominators::coxeter::{Family, RootSystem};
use cluster_denominators::verify::{verify_all, VerifyOptions};

pub fn run_example() -> cluster_denominators::Result<()> {
    let rs = Arc::new(RootSystem::of_type(Family::B, 3)?);
    let options = VerifyOptions::for_rank(3);
    let mut all_passed = true;
    for c in rs.coxeter_words() {
        for report in verify_all(rs.clone(), &c, &options)? {
            for check in &report.checks {
                all_passed &= check.pass;
                println!(
                    "{} {:<12} {:<4} {:>6} cases  {}",
                    c,
                    report.suite,
                    if check.pass { "ok" } else { "FAIL" },
                    check.cases,
                    check.name
                );
                if let Some(cx) = &check.counterexample {
                    println!("    counterexample: {cx}");
                }
            }
        }
    }
    assert!(all_passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verification example");
}
