//! Runs the twelve acceptance criteria and prints one line per criterion.
//! `SKZ_FILTER` selects a subset by number or tag; `SKZ_FULL` adds the 9! check.

use std::process::ExitCode;

use strongkoszul::suite::{criteria, run_criterion, selects, SuiteConfig};

fn main() -> ExitCode {
    let filter = std::env::var("SKZ_FILTER").ok();
    let cfg = SuiteConfig { full: std::env::var_os("SKZ_FULL").is_some(), ..SuiteConfig::default() };
    let mut failed = Vec::new();
    let mut ran = 0;
    for c in criteria().iter().filter(|c| filter.as_deref().is_none_or(|f| selects(c, f))) {
        let r = run_criterion(c, &cfg);
        println!("{}", r.line());
        for d in &r.details {
            println!("    {d}");
        }
        ran += 1;
        if !r.passed {
            failed.push(r.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: {ran}/{ran} criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
