//! Checks that distinct keys give distinct encoding rules, pair by pair.
//!
//! cargo run --release --example verify_injectivity -- configs/p1.cfg

use std::path::PathBuf;
use std::time::Instant;

use gray_auth::code::config::load_config;
use gray_auth::code::AuthCode;
use gray_auth::verifier::{verify_injectivity, Oracle, VerifyMode, DEFAULT_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/configs/p0.cfg")));
    let code = AuthCode::build(&load_config(&path)?)?;
    let started = Instant::now();
    let oracle = Oracle::new(&code, DEFAULT_CAP);
    let pairs = code.key_count() * (code.key_count() - 1) / 2;
    let mode = if pairs <= 1_000_000 {
        VerifyMode::Exhaustive
    } else {
        VerifyMode::Sampled {
            count: 2_000,
            seed: code.spec().seed,
        }
    };
    let report = verify_injectivity(&code, &oracle, mode, DEFAULT_CAP)?;

    println!(
        "{} keys, {} sources, mode {:?}",
        code.key_count(),
        code.sources().len(),
        mode
    );
    println!(
        "{} collisions / {} pairs",
        report.collisions.len(),
        report.pairs_examined
    );
    println!("oracle disagreements: {}", report.disagreements.len());
    for (case, tally) in &report.per_case {
        println!(
            "case {case:>3}: {:>7} pairs, {:6.2}% constructive",
            tally.total,
            tally.percent()
        );
    }
    for (leaf, tally) in &report.per_planned {
        println!(
            "  {:<14} {:>7} pairs, {:>7} constructive",
            leaf.label(),
            tally.total,
            tally.constructive
        );
    }
    for ((leaf, why), count) in &report.fallbacks {
        let (k0, k1) = report.fallback_examples[&(*leaf, why.clone())];
        println!(
            "  fallback {:<14} {why}: {count} (e.g. keys {k0}, {k1})",
            leaf.label()
        );
    }
    eprintln!("elapsed {:.2?}", started.elapsed());
    Ok(())
}
