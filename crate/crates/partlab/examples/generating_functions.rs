//! Every counting route for the constrained classes: the regular-flat
//! double sum, j-parts series, residue-class q-multinomials, the bounded
//! recurrences, and the uniform dispatcher with its provenance tags.
//!
//! Run with: cargo run --example generating_functions

use partlab::genfun::{
    class_series, distinct_flat_bounded_count, distinct_two_flat, regular_flat_bounded,
    regular_flat_double_sum, regular_flat_j_parts, regular_flat_residue_class,
};
use partlab::partition::{ClassSpec, Modulus};

fn main() {
    let m = |v| Modulus::new(v).unwrap();
    let order = 20;

    let double_sum = regular_flat_double_sum(m(3), order);
    println!("3-regular, 3-flat:   {}", double_sum.preview(8));

    for j in 0..=3 {
        let series = regular_flat_j_parts(m(3), j, order);
        println!("  with {} parts:     {}", j, series.preview(5));
    }

    let residue_class = regular_flat_residue_class(&[2, 2], m(3), order);
    println!("  residues {{1,1,2,2}}: {}", residue_class.preview(5));
    println!();

    // largest-part recurrences, here odd parts with gaps below 3
    for k in [2u64, 4, 8, 19] {
        let bounded = regular_flat_bounded(m(2), m(3), k, order);
        println!("2-regular, 3-flat, parts <= {:2}: {}", k, bounded.preview(6));
    }
    println!();

    // distinct-flat with flatness modulus 2 has a closed sum
    let closed = distinct_two_flat(m(3), 26);
    println!("3-distinct, 2-flat:  {}", closed.preview(8));

    // counting partitions with a largest-part bound, any weight
    let counts: Vec<String> = (0..=6)
        .map(|k| distinct_flat_bounded_count(m(3), m(3), k).to_string())
        .collect();
    println!("3-distinct, 3-flat counts by largest part 0..6: {}", counts.join(", "));
    println!();

    // one front door for every class shape, with provenance
    let specs = [
        ClassSpec::unconstrained(),
        ClassSpec::regular_distinct(m(2), m(5)),
        ClassSpec::regular_flat(m(3), m(3)),
        ClassSpec::regular_flat(m(3), m(2)),
        ClassSpec::distinct_flat(m(4), m(2)),
        ClassSpec::distinct_flat(m(3), m(3)),
        ClassSpec {
            regular: Some(m(2)),
            distinct: Some(m(2)),
            flat: Some(m(3)),
        },
    ];
    for spec in specs {
        let result = class_series(&spec, 14);
        println!(
            "{:32} [{}] {}",
            spec.to_string(),
            result.provenance,
            result.series.preview(6)
        );
    }
}
