//! The brute-force oracle and how every formula is checked against it,
//! including the two-residue double sum whose printed form fails.
//!
//! Run with: cargo run --example oracle_crosschecks

use partlab::genfun::{arbitrate_two_residue_sum, class_series, class_series_oracle, DoubleSumForm};
use partlab::oracle::{count_doubly_regular, count_table, enumerate, Filter};
use partlab::partition::{ClassSpec, Modulus};

fn main() {
    let m = |v| Modulus::new(v).unwrap();

    // enumeration in lexicographically decreasing order
    let spec = ClassSpec {
        flat: Some(m(2)),
        ..Default::default()
    };
    println!("2-flat partitions of 6:");
    for p in enumerate(6, &spec) {
        println!("  {}", p);
    }
    println!();

    // extra filters: exact part counts and largest-part bounds
    let filter = Filter::from_spec(&ClassSpec::regular(m(3))).with_exact_parts(3);
    println!(
        "3-regular partitions of 12 with exactly 3 parts: {}",
        partlab::oracle::count_filtered(12, &filter)
    );
    let doubly = count_doubly_regular(12, m(2), m(3));
    println!(
        "partitions with parts prime to 6, n = 0..12: {:?}",
        doubly.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );
    println!();

    // formula vs oracle, coefficient by coefficient
    for spec in [
        ClassSpec::regular_distinct(m(3), m(4)),
        ClassSpec::regular_flat(m(2), m(4)),
        ClassSpec::distinct_flat(m(3), m(4)),
    ] {
        let formula = class_series(&spec, 30);
        let brute = class_series_oracle(&spec, 30);
        match formula.series.first_difference(&brute.series) {
            None => println!(
                "{:24} {} route agrees with enumeration to order 30",
                spec.to_string(),
                formula.provenance
            ),
            Some(d) => println!("{:24} DISAGREES: {}", spec.to_string(), d),
        }
    }
    println!();

    // the two-variable inclusion-exclusion sum has two readings; the oracle
    // says which one counts correctly
    let arb = arbitrate_two_residue_sum(m(2), 4, 30);
    println!(
        "two-residue sum for 2-regular (4-flat) partitions, j <= {}:",
        arb.j_max
    );
    for verdict in [&arb.as_printed, &arb.sign_corrected] {
        let label = match verdict.form {
            DoubleSumForm::AsPrinted => "as printed   ",
            DoubleSumForm::SignCorrected => "sign-corrected",
        };
        match &verdict.mismatch {
            None => println!("  {} matches the oracle everywhere tested", label),
            Some((j, d)) => println!("  {} first fails at j = {}: {}", label, j, d),
        }
    }

    // count tables serialize straight into series for exact comparison
    let table = count_table(20, &ClassSpec::unconstrained());
    println!();
    println!("p(n) for n = 0..20: {}", table.to_series().preview(21));
}
