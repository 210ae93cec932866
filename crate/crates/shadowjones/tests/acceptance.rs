//! Acceptance suite: runs every verification check at its stated tolerance
//! and runtime budget, printing one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use shadowjones::cli::verify::{run_suite, Suite};
use shadowjones::cli::CliConfig;

#[test]
fn acceptance_criteria() {
    let cfg = CliConfig::default();
    let outcomes = run_suite(Suite::All, &cfg);
    assert_eq!(outcomes.len(), 13, "all criteria must run");
    let mut failed = Vec::new();
    for o in &outcomes {
        println!("{}", o.report_line());
        if !o.passed {
            failed.push(o.id);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}

#[test]
fn suite_selection() {
    let cfg = CliConfig::default();
    let algebra = run_suite(Suite::Algebra, &cfg);
    assert_eq!(
        algebra.iter().map(|o| o.id).collect::<Vec<_>>(),
        vec![1, 2, 3, 5, 6, 7]
    );
    assert!(algebra.iter().all(|o| o.passed));
}
