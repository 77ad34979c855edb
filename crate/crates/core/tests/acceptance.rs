use std::time::Instant;

use parhecke::suite::{run_check, Status, SuiteConfig};

fn main() {
    let cfg = SuiteConfig::default();
    let mut failed = 0;
    for n in 1..=15 {
        let start = Instant::now();
        let r = run_check(n, &cfg);
        let secs = start.elapsed().as_secs_f64();
        println!("criterion {n}: {} ({}, {secs:.2}s)", r.status, r.anchor);
        if r.status != Status::Pass {
            failed += 1;
            println!("    {}", r.residual);
        }
    }
    println!("{} of 15 criteria pass", 15 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
