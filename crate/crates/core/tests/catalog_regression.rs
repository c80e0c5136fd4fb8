use std::time::Instant;

use drg_core::catalog::builtin_catalog;
use drg_core::feasibility::CheckStatus;
use drg_core::properties::property_checks;
use drg_core::structures::q_structures;
use drg_core::Scheme;

#[test]
fn catalog_properties_and_counts() {
    let mut failures = Vec::new();
    for entry in builtin_catalog() {
        let start = Instant::now();
        let arr = entry.parse().unwrap();
        let scheme = Scheme::new(&arr).unwrap();
        let qs = q_structures(&scheme);
        if entry.expected_q.is_some_and(|q| q != qs.len()) {
            failures.push(format!("{}: {} Q-structures", entry.name, qs.len()));
        }
        for c in property_checks(&scheme, &qs) {
            if let CheckStatus::Fail(why) = c.status {
                failures.push(format!("{}: {} ({why})", entry.name, c.name));
            }
        }
        eprintln!("{:<32} {:>8.3}s", entry.name, start.elapsed().as_secs_f64());
    }
    assert!(failures.is_empty(), "{failures:#?}");
}
