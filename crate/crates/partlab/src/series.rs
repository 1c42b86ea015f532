//! Dense truncated formal power series over the integers.
//!
//! A [`Series`] holds exact `BigInt` coefficients `c[0], ..., c[order-1]` for
//! the powers `q^0, ..., q^{order-1}`. Every operation truncates: binary
//! operations produce the minimum of the operand orders and nothing ever
//! silently extends a series, since quiet zero-padding is the classic way to
//! turn a truncation artifact into a "theorem".

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// Division requires a divisor with constant coefficient +1 or -1.
    #[error("divisor has non-unit constant term {0}")]
    NonUnitConstantTerm(BigInt),
    /// Negative powers invert the base, which needs a unit constant term.
    #[error("cannot raise series with constant term {0} to a negative power")]
    NonInvertible(BigInt),
}

/// Smallest index where two series disagree, with both values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub index: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient {} differs: {} vs {}",
            self.index, self.lhs, self.rhs
        )
    }
}

/// Truncated power series with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// The zero series truncated to `order`.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    /// The constant series 1. `order` must be at least 1 so the constant
    /// term is representable.
    pub fn one(order: usize) -> Self {
        assert!(order >= 1, "order must be at least 1");
        let mut s = Series::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `c * q^degree` truncated to `order`. A degree at or beyond the order
    /// yields the zero series, which is still a valid truncation.
    pub fn monomial(c: impl Into<BigInt>, degree: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if degree < order {
            s.coeffs[degree] = c.into();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Series { coeffs }
    }

    /// Convenience constructor for tests and examples.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Series {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Truncation order: coefficients are valid for indices `0..order()`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `q^n`. Panics if `n` is at or beyond the truncation
    /// order; asking for a coefficient we never computed is a bug, not a zero.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n < self.coeffs.len(),
            "coefficient {} requested but series is only valid below order {}",
            n,
            self.coeffs.len()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drop coefficients at and beyond `order` (never extends).
    pub fn truncated(&self, order: usize) -> Series {
        let n = order.min(self.coeffs.len());
        Series {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Exact convolution truncated to the minimum operand order.
    pub fn mul(&self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }

    /// The unique `c` with `rhs * c = self` up to the common truncation
    /// order. The divisor must have constant coefficient +1 or -1; every
    /// denominator arising here is a product of `(1 - q^j)` factors, so the
    /// restriction costs nothing and catches accidental misuse.
    pub fn div(&self, rhs: &Series) -> Result<Series, SeriesError> {
        let n = self.order().min(rhs.order());
        if n == 0 {
            return Ok(Series::zero(0));
        }
        let lead = &rhs.coeffs[0];
        if !lead.is_one() && *lead != BigInt::from(-1) {
            return Err(SeriesError::NonUnitConstantTerm(lead.clone()));
        }
        let nonzero: Vec<usize> = (1..n).filter(|&k| !rhs.coeffs[k].is_zero()).collect();
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            let mut acc = self.coeffs[i].clone();
            for &k in nonzero.iter().take_while(|&&k| k <= i) {
                acc -= &rhs.coeffs[k] * &out[i - k];
            }
            // 1/lead == lead for lead = +/-1
            out[i] = acc * lead;
        }
        Ok(Series { coeffs: out })
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Series, SeriesError> {
        if self.order() == 0 {
            return Ok(Series::zero(0));
        }
        if e == 0 {
            return Ok(Series::one(self.order()));
        }
        let base = if e < 0 {
            Series::one(self.order())
                .div(self)
                .map_err(|_| SeriesError::NonInvertible(self.coeffs[0].clone()))?
        } else {
            self.clone()
        };
        let mut result = Series::one(self.order());
        let mut power = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&power);
            }
            e >>= 1;
            if e > 0 {
                power = power.mul(&power);
            }
        }
        Ok(result)
    }

    /// Multiply by `q^k`, keeping the order (top coefficients fall off).
    pub fn shift_up(&self, k: usize) -> Series {
        let n = self.order();
        let mut out = vec![BigInt::zero(); n];
        if k < n {
            out[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Series { coeffs: out }
    }

    /// Arithmetic-progression extraction: `result[n] = self[step*n + offset]`,
    /// i.e. keep the terms `q^{step*n + offset}` and substitute
    /// `q^step -> q`. Requires `offset < step`.
    pub fn extract_ap(&self, step: usize, offset: usize) -> Series {
        assert!(step >= 1, "progression step must be at least 1");
        assert!(offset < step, "offset must be smaller than the step");
        let order = self.order();
        let new_order = if order > offset {
            (order - offset).div_ceil(step)
        } else {
            0
        };
        Series {
            coeffs: (0..new_order)
                .map(|n| self.coeffs[step * n + offset].clone())
                .collect(),
        }
    }

    /// Substitute `q -> q^d`: the result has `result[d*n] = self[n]` and
    /// zeros elsewhere, truncated to `order`.
    pub fn dilate(&self, d: usize, order: usize) -> Series {
        assert!(d >= 1, "dilation factor must be at least 1");
        let mut out = vec![BigInt::zero(); order];
        for (n, c) in self.coeffs.iter().enumerate() {
            let idx = match n.checked_mul(d) {
                Some(i) if i < order => i,
                _ => break,
            };
            out[idx] = c.clone();
        }
        Series { coeffs: out }
    }

    /// Coefficientwise reduction to least nonnegative residues modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Series {
        assert!(p >= 2, "modulus must be at least 2");
        let p = BigInt::from(p);
        Series {
            coeffs: self.coeffs.iter().map(|c| c.mod_floor(&p)).collect(),
        }
    }

    /// Coefficientwise congruence modulo `p` up to the common order.
    pub fn congruent_mod(&self, rhs: &Series, p: u64) -> bool {
        let n = self.order().min(rhs.order());
        self.truncated(n)
            .reduce_mod(p)
            .first_difference(&rhs.truncated(n).reduce_mod(p))
            .is_none()
    }

    /// Exact coefficient comparison up to the common order, reporting the
    /// smallest differing index and both values on failure.
    pub fn first_difference(&self, rhs: &Series) -> Option<Discrepancy> {
        let n = self.order().min(rhs.order());
        (0..n)
            .find(|&i| self.coeffs[i] != rhs.coeffs[i])
            .map(|i| Discrepancy {
                index: i,
                lhs: self.coeffs[i].clone(),
                rhs: rhs.coeffs[i].clone(),
            })
    }

    /// Human-oriented preview of the leading terms, for examples and logs.
    pub fn preview(&self, max_terms: usize) -> String {
        let mut out = String::new();
        let mut shown = 0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if shown == max_terms {
                out.push_str(" + ...");
                break;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match (i, mag.is_one()) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push('q'),
                (1, false) => out.push_str(&format!("{}*q", mag)),
                (_, true) => out.push_str(&format!("q^{}", i)),
                (_, false) => out.push_str(&format!("{}*q^{}", mag, i)),
            }
            shown += 1;
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(&format!(" + O(q^{})", self.order()));
        out
    }

    /// In-place multiplication by the sparse binomial `(1 - q^m)`.
    pub(crate) fn mul_one_minus_qm(&mut self, m: usize) {
        debug_assert!(m >= 1);
        let n = self.coeffs.len();
        for i in (m..n).rev() {
            let (head, tail) = self.coeffs.split_at_mut(i);
            tail[0] -= &head[i - m];
        }
    }

    /// In-place division by the sparse binomial `(1 - q^m)`.
    pub(crate) fn div_one_minus_qm(&mut self, m: usize) {
        debug_assert!(m >= 1);
        let n = self.coeffs.len();
        for i in m..n {
            let (head, tail) = self.coeffs.split_at_mut(i);
            tail[0] += &head[i - m];
        }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}
