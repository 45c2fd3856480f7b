//! Runs every acceptance suite at its default sample count and tolerances,
//! printing one PASS/FAIL line per criterion. Set `FN3_SEED` to change the
//! seed (default 20240601).

use fn3::suites::{run_suite, suite_names};
use fn3::RunConfig;

fn main() {
    let seed = std::env::var("FN3_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20240601);
    let cfg = RunConfig::new(seed);
    let mut failed = 0;
    for name in suite_names() {
        match run_suite(name, &cfg) {
            Ok(r) => {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                println!("{tag} criterion {:>2} {}: {}", r.criterion, r.title, r.summary());
                for n in &r.notes {
                    println!("     note: {n}");
                }
                if !r.passed {
                    failed += 1;
                }
            }
            Err(e) => {
                println!("FAIL suite {name}: {e}");
                failed += 1;
            }
        }
    }
    println!("acceptance seed {seed}: {failed} failing");
    if failed > 0 {
        std::process::exit(1);
    }
}
