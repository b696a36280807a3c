//! Runs every acceptance criterion from the registry and prints one line
//! per criterion. Lines go straight to stdout so they show without
//! `--nocapture`.

use std::io::Write;

use wiener_cli::claims::{criteria, Settings, Status};

#[test]
fn acceptance_criteria() {
    let settings = Settings::default();
    let mut failed = vec![];
    let mut count = 0;
    for claim in criteria() {
        let r = claim.run(&settings);
        let n = r.criterion.expect("criteria carry a number");
        let mark = if r.status == Status::Pass { "PASS" } else { "FAIL" };
        let line = format!("criterion {n:>2} {mark} {:<24} {:>7} ms  {}\n", r.id, r.runtime_ms, r.observed);
        std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
        if r.status != Status::Pass {
            failed.push(format!("{} ({}): {}", n, r.status.as_str(), r.observed));
        }
        count += 1;
    }
    assert_eq!(count, 18);
    assert!(failed.is_empty(), "failing criteria:\n{}", failed.join("\n"));
}
