//! Arithmetic-progression congruence verification and scanning.
//!
//! A pattern `(A, B, C)` asserts `a(A*n + B) == 0 (mod C)` for every `n`.
//! Verification walks the progression through a truncated series;
//! scanning tries all small patterns and keeps the survivors, which are
//! conjectural evidence, not theorems, and are labeled as such.

use crate::series::{Discrepancy, Series};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Proof status of a reported pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternStatus {
    /// A proof is on record in the literature.
    Proven,
    /// Survived numerical checking only.
    Conjectural,
}

impl std::fmt::Display for PatternStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PatternStatus::Proven => "proven",
            PatternStatus::Conjectural => "conjectural",
        })
    }
}

/// The claim `coefficient(step * n + offset) == 0 (mod divisor)` for all
/// `n <= verified_to` (the largest progression index that fit the series).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruencePattern {
    pub step: u64,
    pub offset: u64,
    pub divisor: u64,
    pub verified_to: u64,
    pub status: PatternStatus,
}

/// First progression entry with a nonzero residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternFailure {
    /// Progression index n.
    pub n: u64,
    /// Coefficient index step * n + offset.
    pub index: u64,
    /// The offending coefficient.
    pub coefficient: BigInt,
}

/// Outcome of checking one pattern against one series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternCheck {
    /// Number of progression terms that fit below the truncation order.
    pub witnesses: u64,
    pub failure: Option<PatternFailure>,
}

impl PatternCheck {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check `coefficient(step * n + offset) == 0 (mod divisor)` for every
/// representable `n`, reporting the first counterexample.
pub fn verify_pattern(series: &Series, step: u64, offset: u64, divisor: u64) -> PatternCheck {
    assert!(step >= 1 && offset < step && divisor >= 2);
    assert!(
        (offset as usize) < series.order(),
        "series order {} does not reach offset {}",
        series.order(),
        offset
    );
    let modulus = BigInt::from(divisor);
    let mut witnesses = 0;
    let mut n = 0u64;
    loop {
        let index = step * n + offset;
        if index as usize >= series.order() {
            break;
        }
        witnesses += 1;
        let c = series.coeff(index as usize);
        if !c.mod_floor(&modulus).is_zero() {
            return PatternCheck {
                witnesses,
                failure: Some(PatternFailure {
                    n,
                    index,
                    coefficient: c.clone(),
                }),
            };
        }
        n += 1;
    }
    PatternCheck {
        witnesses,
        failure: None,
    }
}

/// Coefficientwise congruence of two series modulo `p`, with the first
/// incongruent index on failure.
pub fn first_incongruence(lhs: &Series, rhs: &Series, p: u64) -> Option<Discrepancy> {
    lhs.reduce_mod(p).first_difference(&rhs.reduce_mod(p))
}

/// Result of a congruence scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome {
    pub patterns: Vec<CongruencePattern>,
    /// Some (step, offset) cells had fewer than the required ten witnesses
    /// and were skipped; the series order is too small for them.
    pub thin_evidence: bool,
}

const MIN_WITNESSES: u64 = 10;

/// Try every pattern with `step <= max_step`, `offset < step`, and divisor
/// drawn from `divisors`; keep those with no counterexample. A surviving
/// pattern needs at least ten witnesses, and the series must have a nonzero
/// coefficient off the progression at or beyond the offset, which throws
/// out eventually-zero series whose tails satisfy everything vacuously.
/// Patterns implied by a kept coarser one (step a multiple, offset
/// congruent, same divisor) are dropped; the result is sorted by
/// (step, offset, divisor).
pub fn scan(series: &Series, max_step: u64, divisors: &[u64]) -> ScanOutcome {
    let order = series.order() as u64;
    let mut thin_evidence = false;
    let mut kept: Vec<CongruencePattern> = Vec::new();
    for step in 1..=max_step {
        for offset in 0..step {
            let witnesses = if order > offset {
                (order - 1 - offset) / step + 1
            } else {
                0
            };
            if witnesses < MIN_WITNESSES {
                thin_evidence = true;
                continue;
            }
            let supported_elsewhere = (offset as usize..series.order())
                .any(|i| (i as u64) % step != offset && !series.coeff(i).is_zero());
            if !supported_elsewhere {
                continue;
            }
            for &divisor in divisors {
                let check = verify_pattern(series, step, offset, divisor);
                if !check.holds() {
                    continue;
                }
                let implied = kept.iter().any(|p| {
                    p.divisor == divisor && step % p.step == 0 && offset % p.step == p.offset
                });
                if implied {
                    continue;
                }
                kept.push(CongruencePattern {
                    step,
                    offset,
                    divisor,
                    verified_to: check.witnesses - 1,
                    status: PatternStatus::Conjectural,
                });
            }
        }
    }
    kept.sort_by_key(|p| (p.step, p.offset, p.divisor));
    ScanOutcome {
        patterns: kept,
        thin_evidence,
    }
}

/// Congruences of the regular-and-distinct family with published proofs,
/// keyed by the class moduli (order-insensitive) and the pattern.
pub fn known_proven(s: u64, t: u64, step: u64, offset: u64, divisor: u64) -> bool {
    const PROVEN: &[(u64, u64, u64, u64, u64)] = &[
        (2, 2, 125, 99, 5),
        (3, 3, 4, 2, 2),
        (2, 5, 4, 3, 2),
        (5, 5, 5, 4, 5),
    ];
    PROVEN.iter().any(|&(ps, pt, pa, pb, pc)| {
        ((ps, pt) == (s, t) || (ps, pt) == (t, s)) && (pa, pb, pc) == (step, offset, divisor)
    })
}
