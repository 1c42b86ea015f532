//! Glaisher's base-m involution and the coprime composite map that swaps
//! the regular and distinct roles.
//!
//! Run with: cargo run --example glaisher_maps

use partlab::glaisher::{coprime_swap, phi};
use partlab::partition::{Modulus, Partition};

fn main() {
    let m = |v| Modulus::new(v).unwrap();

    // phi_2 trades 2-adic valuation of part sizes against binary digits of
    // multiplicities
    let p: Partition = "(4,2,1)".parse().unwrap();
    let image = phi(m(2), &p);
    println!("phi_2({}) = {}", p, image);
    println!("phi_2({}) = {}  (involution)", image, phi(m(2), &image));

    // the worked composite: 7-regular, 2-distinct to 2-regular, 7-distinct
    let swapped = coprime_swap(m(7), m(2), &p).unwrap();
    println!("phi_7(phi_2({})) = {}", p, swapped);
    println!();

    // class exchange at a glance
    for (modulus, parts) in [(3u64, "(8,5,5,2)"), (2, "(9,7,5,3)"), (5, "(6,6,6,6,6,6)")] {
        let p: Partition = parts.parse().unwrap();
        let image = phi(m(modulus), &p);
        println!(
            "m={}: {} regular={} distinct={}  ->  {} regular={} distinct={}",
            modulus,
            p,
            p.is_regular(m(modulus)),
            p.is_distinct(m(modulus)),
            image,
            image.is_regular(m(modulus)),
            image.is_distinct(m(modulus)),
        );
    }
    println!();

    // fixed points: everything both m-regular and m-distinct, plus the
    // partitions whose digit matrix happens to be symmetric
    let fixed_in_class: Partition = "(2,1)".parse().unwrap();
    let fixed_outside: Partition = "(2,1,1)".parse().unwrap();
    println!("phi_3({}) = {}", fixed_in_class, phi(m(3), &fixed_in_class));
    println!(
        "phi_2({}) = {}   (fixed, yet neither 2-regular nor 2-distinct)",
        fixed_outside,
        phi(m(2), &fixed_outside)
    );
}
