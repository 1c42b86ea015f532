//! Writing a series in the plain "index value" sequence format, reading it
//! back, and comparing against data recorded with a dilation and offset.
//!
//! Run with: cargo run --example bfile_roundtrip

use partlab::genfun::regular_distinct;
use partlab::io::{compare, BFile};
use partlab::partition::Modulus;

fn main() {
    let m = |v| Modulus::new(v).unwrap();
    let series = regular_distinct(m(3), m(3), 12);

    let dump = BFile::from_series(&series).to_text();
    println!("b-file dump of the (3,3) series to order 12:");
    print!("{}", dump);
    println!();

    let parsed = BFile::parse(&dump).unwrap();
    let report = compare(&series, &parsed, 1, 0);
    println!(
        "round trip: compared {} entries, full agreement {}",
        report.compared,
        report.full_agreement()
    );
    println!();

    // external data often stores value(d*n + offset) = coefficient(n);
    // here a fixture recorded at index 6n - 1
    let mut fixture = String::from("# fixture recorded under q -> q^6 with a 1/q shift\n");
    for (n, c) in series.coeffs().iter().enumerate().skip(1) {
        fixture.push_str(&format!("{} {}\n", 6 * n - 1, c));
    }
    let file = BFile::parse(&fixture).unwrap();
    let report = compare(&series, &file, 6, -1);
    println!(
        "dilated comparison: compared {} entries, agreement over series indices {:?}",
        report.compared, report.agreement
    );

    // a corrupted value is pinpointed exactly
    let bad = fixture.replace("11 2", "11 99");
    let file = BFile::parse(&bad).unwrap();
    let report = compare(&series, &file, 6, -1);
    if let Some(m) = report.mismatch {
        println!(
            "corrupted fixture: first mismatch at coefficient {} (file index {}): {} vs {}",
            m.series_index, m.file_index, m.series_value, m.file_value
        );
    }
}
