//! Iterating the composite map phi_s . phi_t for non-coprime moduli: the
//! long orbit of (50^6), and an exhaustive scan with its step histogram.
//!
//! Run with: cargo run --release --example orbits

use partlab::glaisher::{orbit, scan_orbits, OrbitOutcome, Phase};
use partlab::partition::{Modulus, Partition};

fn main() {
    let m = |v| Modulus::new(v).unwrap();

    // the famous slow case: 6-regular, 10-distinct
    let start: Partition = "(50,50,50,50,50,50)".parse().unwrap();
    let record = orbit(m(6), m(10), &start, 500).unwrap();
    match record.outcome {
        OrbitOutcome::Terminated { steps } => {
            println!("orbit of {} under (s,t) = (6,10):", start);
            println!("  terminated after {} composite steps", steps);
            println!("  terminal partition {}", record.terminal().unwrap());
        }
        other => println!("unexpected outcome {:?}", other),
    }
    for revisit in &record.revisits {
        let phase = match revisit.phase {
            Phase::Half => "half-step",
            Phase::Full => "full step",
        };
        println!(
            "  revisits the start at the {} after {} complete steps",
            phase, revisit.completed_steps
        );
    }
    println!("  first three steps of the trajectory:");
    for (i, step) in record.steps.iter().take(3).enumerate() {
        println!("    step {}: {} then {}", i + 1, step.after_phi_t, step.after_phi_s);
    }
    println!();

    // exhaustive scan over small weights for a non-coprime pair
    let report = scan_orbits(m(4), m(6), 18, None);
    println!(
        "scan (s,t) = (4,6), n <= 18: {} orbits, max ell {}, mean ell {:.3}",
        report.orbit_count(),
        report.max_ell,
        report.mean_ell()
    );
    println!(
        "violations {}, exhaustions {}, injectivity failures {}",
        report.violations,
        report.exhaustions,
        report.injectivity_failures.len()
    );
    print!("ell histogram:");
    for (ell, count) in &report.histogram {
        print!("  {} -> {}", ell, count);
    }
    println!();
    println!();

    // the scan is not a formality: some starts live on pure cycles that
    // never meet the target class, so iteration cannot map them anywhere
    for entry in report.entries.iter().filter(|e| e.violation.is_some()) {
        println!(
            "start {} (n = {}) returns to a start-class partition at step {} without ever being {}-regular and {}-distinct",
            entry.start,
            entry.n,
            entry.violation.unwrap(),
            6,
            4
        );
    }
}
