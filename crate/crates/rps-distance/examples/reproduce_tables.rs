//! Recompute all bundled reference tables and summarize the outcome.

use rps_distance::repro;

fn main() -> Result<(), rps_distance::Error> {
    for report in repro::run_all(false)? {
        let ok = report.rows.iter().filter(|r| r.passed()).count();
        println!(
            "{:<9} {}  ({ok}/{} rows)",
            report.table,
            if report.passed() { "pass" } else { "FAIL" },
            report.rows.len()
        );
        for r in report.failures() {
            println!(
                "  {}: expected {:.4}, computed {:.6}",
                r.label, r.expected, r.computed
            );
        }
    }
    Ok(())
}
