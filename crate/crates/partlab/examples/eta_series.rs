//! Exact truncated q-series: Pochhammer products, eta quotients, the
//! partition numbers, and prime-power congruences between eta factors.
//!
//! Run with: cargo run --example eta_series

use partlab::eta::{euler_factor, frobenius_pair, pochhammer, q_multinomial, EtaSpec};
use partlab::partition::Modulus;

fn main() {
    // f1 expands with the pentagonal-number sign pattern
    let f1 = euler_factor(1, 30);
    println!("f1      = {}", f1.preview(8));

    // the partition numbers come from 1/f1
    let partitions = EtaSpec::from_pairs(&[(1, -1)]).expand(12);
    println!("1/f1    = {}", partitions.preview(12));

    // finite Pochhammer products are plain polynomials
    let two_factors = pochhammer(3, 3, Some(2), 12);
    println!("(q^3;q^3)_2 = {}", two_factors.preview(6));

    // counting series for 2-regular, 5-distinct partitions as a quotient
    let s = Modulus::new(2).unwrap();
    let t = Modulus::new(5).unwrap();
    let quotient = partlab::genfun::regular_distinct(s, t, 16);
    println!("f2 f5 / (f1 f10) = {}", quotient.preview(10));
    println!();

    // q-multinomials generate the major index over multiset permutations
    let gaussian = q_multinomial(&[2, 2], 8);
    println!("[4 over 2,2]_q = {}", gaussian.preview(8));
    println!();

    // f_k^p is congruent to f_kp mod p
    for (k, p) in [(1u64, 2u64), (1, 5), (3, 3)] {
        let (lhs, rhs) = frobenius_pair(k, p, 200);
        println!(
            "f{}^{} == f{} (mod {}): {}",
            k,
            p,
            k * p,
            p,
            lhs.congruent_mod(&rhs, p)
        );
    }
}
