//! The partition type and its structural predicates: regular, distinct,
//! flat, conjugation, boundary profile, hooklengths, and the t-core test.
//!
//! Run with: cargo run --example partition_basics

use partlab::partition::{Modulus, Orientation, Partition};

fn main() {
    let lambda: Partition = "(4,4,3,1,1,1)".parse().unwrap();
    let m = |v| Modulus::new(v).unwrap();

    println!("lambda     = {}  (weight {})", lambda, lambda.weight());
    println!("conjugate  = {}", lambda.conjugate());
    println!();

    for modulus in [2u64, 3, 5, 7] {
        println!(
            "m = {}: regular {:5}  distinct {:5}  flat {:5}",
            modulus,
            lambda.is_regular(m(modulus)),
            lambda.is_distinct(m(modulus)),
            lambda.is_flat(m(modulus)),
        );
    }
    println!();

    // Boundary profile from bottom-left to top-right. Vertical runs are
    // multiplicities, horizontal runs the smallest part and the gaps; the
    // top edge is terminal and unconstrained.
    let profile = lambda.profile();
    let runs: Vec<String> = profile
        .segments
        .iter()
        .map(|seg| {
            let tag = match seg.orientation {
                Orientation::Horizontal => "H",
                Orientation::Vertical => "V",
            };
            format!("{}{}", tag, seg.length)
        })
        .collect();
    println!("profile    = {} | top edge {}", runs.join(" "), profile.top_edge);
    println!(
        "4-distinct and 3-flat by profile runs: {}",
        profile.within(m(4), m(3))
    );
    println!();

    println!("hooklengths:");
    for row in lambda.hooklengths() {
        let cells: Vec<String> = row.iter().map(|h| h.to_string()).collect();
        println!("  {}", cells.join(" "));
    }
    for t in 2..=10 {
        if lambda.is_t_core(m(t)) {
            println!("lambda is {}-core (no hooklength equals {})", t, t);
        }
    }
}
