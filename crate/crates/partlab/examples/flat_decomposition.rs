//! Splitting a t-regular partition into its t-flat part plus multiples
//! of t, driven by the ascents of the residue word.
//!
//! Run with: cargo run --example flat_decomposition

use partlab::flat::{flat_decompose, residue_vector, ResidueVector};
use partlab::partition::{Modulus, Partition};

fn main() {
    let t = Modulus::new(5).unwrap();
    let p: Partition = "(17,13,11,11,4)".parse().unwrap();

    let rv = residue_vector(&p, t).unwrap();
    println!("partition     = {}", p);
    println!("residues mod {} = {:?}", t, rv.residues());

    let d = flat_decompose(&p, t).unwrap();
    println!("flat part     = {}", d.flat_part);
    println!("added         = {:?}", d.added);
    assert!(d.flat_part.is_flat(t) && d.flat_part.is_regular(t));

    // the number of 5-units in the flat part is the major index of the
    // complement word, here (weight - residue sum) / 5
    let residue_sum: u64 = rv.residues().iter().sum();
    println!(
        "t-units in flat part = {} = ({} - {}) / {}",
        rv.major_index_complement(),
        d.flat_part.weight(),
        residue_sum,
        t
    );
    println!();

    // every word of nonzero residues determines its flat partition
    let t3 = Modulus::new(3).unwrap();
    for word in [
        vec![2u64, 2, 1, 1],
        vec![1, 2, 1, 2],
        vec![1, 1, 2, 2],
    ] {
        let rv = ResidueVector::new(word.clone(), t3).unwrap();
        let flat = rv.flat_partition();
        println!(
            "residues {:?} mod 3  ->  {}  (weight {})",
            word,
            flat,
            flat.weight()
        );
    }
}
