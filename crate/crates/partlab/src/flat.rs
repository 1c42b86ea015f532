//! Flat-part decomposition of regular partitions.
//!
//! A t-regular partition splits uniquely into a t-flat, t-regular partition
//! plus multiples of t added to a prefix of the parts. The flat part is
//! determined by the vector of nonzero residues mod t: the number of t-units
//! under position i equals the number of ascents at or after i in the
//! residue word. Summed over positions, the t-unit count is the major index
//! of the complement word, which is how the q-multinomial enters the
//! counting of t-regular, t-flat partitions.

use crate::partition::{Modulus, Partition};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlatError {
    #[error("partition has part {part} divisible by {modulus}; decomposition needs a {modulus}-regular partition")]
    NotRegular { part: u64, modulus: u64 },
    #[error("residue {residue} out of range for modulus {modulus} (need 1..={})", modulus - 1)]
    BadResidue { residue: u64, modulus: u64 },
}

/// A word of nonzero residues modulo `t`, read off a t-regular partition
/// from largest part to smallest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueVector {
    residues: Vec<u64>,
    modulus: Modulus,
}

impl ResidueVector {
    pub fn new(residues: Vec<u64>, modulus: Modulus) -> Result<Self, FlatError> {
        let t = modulus.get();
        for &r in &residues {
            if r == 0 || r >= t {
                return Err(FlatError::BadResidue {
                    residue: r,
                    modulus: t,
                });
            }
        }
        Ok(ResidueVector { residues, modulus })
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Number of ascents at or after each position (1 ascent at position k
    /// contributes to positions 1..=k).
    fn ascent_suffix_counts(&self) -> Vec<u64> {
        let n = self.residues.len();
        let mut counts = vec![0u64; n];
        for i in (0..n.saturating_sub(1)).rev() {
            counts[i] = counts[i + 1] + u64::from(self.residues[i] < self.residues[i + 1]);
        }
        counts
    }

    /// The unique t-flat (and t-regular) partition whose residue word is
    /// this vector: part i carries `residues[i] + t * (ascents at or after i)`.
    pub fn flat_partition(&self) -> Partition {
        let t = self.modulus.get();
        let counts = self.ascent_suffix_counts();
        let parts: Vec<u64> = self
            .residues
            .iter()
            .zip(&counts)
            .map(|(&r, &c)| r + t * c)
            .collect();
        Partition::new(parts).expect("ascent counts are nonincreasing-compatible")
    }

    /// Major index of the complement word `(t+1-r_1, ..., t+1-r_k)`, which
    /// equals the sum of ascent positions of the word itself and counts the
    /// total number of t-units in [`flat_partition`](Self::flat_partition).
    pub fn major_index_complement(&self) -> u64 {
        self.residues
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .map(|(i, _)| i as u64 + 1)
            .sum()
    }
}

/// Major index of a word: sum of the (1-based) descent positions.
pub fn major_index(word: &[u64]) -> u64 {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

/// Result of [`flat_decompose`]: `flat_part[i] + added[i] = p[i]` with every
/// `added[i]` a nonnegative multiple of t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatDecomposition {
    pub flat_part: Partition,
    pub added: Vec<u64>,
}

/// The residue word of a t-regular partition, largest part first.
pub fn residue_vector(p: &Partition, t: Modulus) -> Result<ResidueVector, FlatError> {
    let tv = t.get();
    let mut residues = Vec::with_capacity(p.len());
    for &part in p.parts() {
        let r = part % tv;
        if r == 0 {
            return Err(FlatError::NotRegular {
                part,
                modulus: tv,
            });
        }
        residues.push(r);
    }
    ResidueVector::new(residues, t)
}

/// Split a t-regular partition into its t-flat part plus multiples of t.
pub fn flat_decompose(p: &Partition, t: Modulus) -> Result<FlatDecomposition, FlatError> {
    let rv = residue_vector(p, t)?;
    let flat_part = rv.flat_partition();
    let added: Vec<u64> = p
        .parts()
        .iter()
        .zip(flat_part.parts())
        .map(|(&orig, &flat)| orig - flat)
        .collect();
    Ok(FlatDecomposition { flat_part, added })
}
