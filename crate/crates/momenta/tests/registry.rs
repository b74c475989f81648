//! Runs every named verification check in the registry with the default
//! seed; each must pass. Timings are printed so regressions in the heavy
//! symbolic checks are visible with `--nocapture`.

use momenta::verify::{registry, DEFAULT_SEED};

#[test]
fn every_registered_check_passes() {
    let mut failed = Vec::new();
    for def in registry() {
        let start = std::time::Instant::now();
        let report = def.run(DEFAULT_SEED);
        let elapsed = start.elapsed();
        println!(
            "{:<24} {:>7.2?}  {}",
            def.id,
            elapsed,
            if report.passed() { "ok" } else { "FAILED" }
        );
        if !report.passed() {
            eprintln!("{}", report.render());
            failed.push(def.id);
        }
    }
    assert!(failed.is_empty(), "failed checks: {failed:?}");
}
