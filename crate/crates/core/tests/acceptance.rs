//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;

fn main() -> ExitCode {
    let criteria: [Named; 6] = [
        ("1 golden identities", criterion_golden),
        ("2 oracle equivalence", criterion_oracles),
        ("3 bijections and involutions", criterion_bijections),
        ("4 axiom verification", criterion_axioms),
        ("5 stability", criterion_stability),
        ("6 product oracles", criterion_products),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS criterion {name} ({:.1?})", start.elapsed()),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
