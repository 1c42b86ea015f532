//! Verifying known arithmetic-progression congruences, scanning for new
//! ones, and checking the dissection identities behind the proofs.
//!
//! Run with: cargo run --release --example congruences

use partlab::congruence::{first_incongruence, known_proven, scan, verify_pattern};
use partlab::eta::{
    dissection_f3_cubed_over_f1, dissection_f5_over_f1, dissection_inverse_f1f3, euler_factor,
};
use partlab::genfun::regular_distinct;
use partlab::partition::Modulus;

fn main() {
    let m = |v| Modulus::new(v).unwrap();

    // the three progression congruences of the regular-distinct family
    let checks = [
        (2u64, 2u64, 125u64, 99u64, 5u64, 1124usize),
        (3, 3, 4, 2, 2, 1200),
        (2, 5, 4, 3, 2, 1200),
        (5, 5, 5, 4, 5, 300),
    ];
    for (s, t, step, offset, divisor, order) in checks {
        let series = regular_distinct(m(s), m(t), order);
        let check = verify_pattern(&series, step, offset, divisor);
        println!(
            "({},{}): coefficient({}n + {}) == 0 mod {} for n <= {}  [{}]",
            s,
            t,
            step,
            offset,
            divisor,
            check.witnesses - 1,
            if check.holds() { "holds" } else { "FAILS" }
        );
    }
    println!();

    // the mod-2 extraction: coefficients at 4n+1 of the (2,5) class match f5
    let series = regular_distinct(m(2), m(5), 1600);
    let extracted = series.extract_ap(4, 1);
    let f5 = euler_factor(5, extracted.order());
    println!(
        "(2,5) coefficients at 4n+1 are congruent to f5 mod 2: {}",
        first_incongruence(&extracted, &f5, 2).is_none()
    );
    println!();

    // scanning rediscovers the proven patterns and often more
    let series = regular_distinct(m(3), m(3), 600);
    let outcome = scan(&series, 6, &[2, 3, 4]);
    println!("scan of the (3,3) series, step <= 6, moduli {{2,3,4}}:");
    for p in &outcome.patterns {
        let tag = if known_proven(3, 3, p.step, p.offset, p.divisor) {
            "proven"
        } else {
            "conjectural"
        };
        println!(
            "  ({}n + {}) == 0 mod {}  for n <= {}  [{}]",
            p.step, p.offset, p.divisor, p.verified_to, tag
        );
    }
    println!();

    // the dissections the proofs lean on, checked coefficientwise
    for (name, d) in [
        ("f3^3/f1  ", dissection_f3_cubed_over_f1()),
        ("1/(f1 f3)", dissection_inverse_f1f3()),
        ("f5/f1    ", dissection_f5_over_f1()),
    ] {
        let (lhs, rhs) = d.sides(400);
        println!(
            "{} splits into its even/odd parts to order 400: {}",
            name,
            lhs.first_difference(&rhs).is_none()
        );
    }
}
