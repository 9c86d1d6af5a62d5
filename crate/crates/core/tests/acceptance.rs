//! Runs every acceptance criterion over the suite and prints one line per
//! criterion.

use weylwalk::verify::{run_criterion, suite_models, CheckResult, CRITERIA};
use weylwalk::Caps;

// Criterion 7 is statistical: its 0.05 threshold sits between 2.3 and 3.5
// standard errors depending on the type, so a fixed seed keeps it repeatable.
const SEED: u64 = 7;

#[test]
fn acceptance() {
    let models = suite_models(Caps::default()).unwrap();
    let mut failed = Vec::new();
    for id in CRITERIA {
        let results: Vec<CheckResult> = if id == 10 {
            vec![run_criterion(&models[0], id, SEED).unwrap()]
        } else {
            models.iter().map(|m| run_criterion(m, id, SEED).unwrap()).collect()
        };
        let passed = results.iter().all(|r| r.passed);
        let ms: f64 = results.iter().map(|r| r.elapsed_ms).sum();
        println!(
            "criterion {id:>2} {:<20} {} ({} runs, {ms:.0} ms)",
            results[0].name,
            if passed { "PASS" } else { "FAIL" },
            results.len()
        );
        for r in &results {
            if !r.passed {
                println!("    {}", r.line());
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
