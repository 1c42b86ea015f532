//! q-Pochhammer symbols, eta-quotient expansion, and q-multinomials.
//!
//! The workhorse notation is `f_k = prod_{n>=1} (1 - q^{nk})`; an eta
//! quotient is a product `prod f_k^{e_k}` with integer exponents. Expansion
//! works factor by factor with the sparse binomial kernels from
//! [`crate::series`], so an order-N quotient costs O(N^2 / k) integer
//! additions per factor rather than a dense convolution.

use crate::series::Series;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Formal product `prod_k f_k^{e_k}` described by (modulus, exponent) pairs.
///
/// Moduli are positive; zero exponents are dropped on insertion so the
/// stored form is canonical and two specs compare equal iff they denote the
/// same quotient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EtaSpec {
    factors: BTreeMap<u64, i64>,
}

impl EtaSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from (modulus, exponent) pairs, accumulating repeats.
    pub fn from_pairs(pairs: &[(u64, i64)]) -> Self {
        let mut spec = EtaSpec::new();
        for &(k, e) in pairs {
            spec.push(k, e);
        }
        spec
    }

    /// Multiply `f_k^e` onto the product.
    pub fn push(&mut self, k: u64, e: i64) {
        assert!(k >= 1, "eta factor modulus must be positive");
        let entry = self.factors.entry(k).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.factors.remove(&k);
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&k, &e)| (k, e))
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Expand the product to a truncated series. Negative exponents divide;
    /// every `f_k` has constant term 1 so the quotient is always defined.
    pub fn expand(&self, order: usize) -> Series {
        let mut out = Series::one(order.max(1)).truncated(order);
        if order == 0 {
            return out;
        }
        for (&k, &e) in &self.factors {
            let k = k as usize;
            for _ in 0..e.unsigned_abs() {
                let mut m = k;
                while m < order {
                    if e > 0 {
                        out.mul_one_minus_qm(m);
                    } else {
                        out.div_one_minus_qm(m);
                    }
                    m += k;
                }
            }
        }
        out
    }
}

impl std::fmt::Display for EtaSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&k, &e) in &self.factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "f{}", k)?;
            } else {
                write!(f, "f{}^{}", k, e)?;
            }
        }
        Ok(())
    }
}

/// `(q^first; q^step)_count = prod_{i=0}^{count-1} (1 - q^{first + i*step})`,
/// truncated to `order`. `count = None` means the infinite product, which
/// stabilizes once the factor exponent passes the truncation order. The
/// empty product is 1.
pub fn pochhammer(first: u64, step: u64, count: Option<usize>, order: usize) -> Series {
    assert!(step >= 1, "pochhammer step must be positive");
    let mut out = Series::one(order.max(1)).truncated(order);
    if order == 0 {
        return out;
    }
    // Factors (1 - q^exp) with exp >= order are identity on the truncation,
    // so both finite and infinite products stop there.
    let limit = count.unwrap_or(usize::MAX);
    for i in 0..limit {
        let exp = first + (i as u64) * step;
        if exp == 0 {
            // factor (1 - 1): the whole product vanishes
            return Series::zero(order);
        }
        if exp as usize >= order {
            break;
        }
        out.mul_one_minus_qm(exp as usize);
    }
    out
}

/// `(q^k; q^k)_inf = f_k`.
pub fn euler_factor(k: u64, order: usize) -> Series {
    pochhammer(k, k, None, order)
}

/// The q-multinomial coefficient
/// `[i_1 + ... + i_r over i_1, ..., i_r]_q = (q;q)_N / ((q;q)_{i_1} ... (q;q)_{i_r})`,
/// the generating function for the major index over permutations of a
/// multiset with the given value counts.
pub fn q_multinomial(counts: &[usize], order: usize) -> Series {
    assert!(!counts.is_empty(), "q_multinomial needs at least one count");
    let total: usize = counts.iter().sum();
    let numerator = pochhammer(1, 1, Some(total), order);
    let mut result = numerator;
    for &c in counts {
        if c == 0 {
            continue;
        }
        let denom = pochhammer(1, 1, Some(c), order);
        result = result
            .div(&denom)
            .expect("(q;q)_n has constant term 1");
    }
    result
}

/// Evaluate a polynomial series at q = 1 (sum of all coefficients).
pub fn eval_at_one(series: &Series) -> BigInt {
    series.coeffs().iter().sum()
}

/// A named two-term dissection identity: `lhs = even_part + q^shift * odd_part`
/// with every piece an eta quotient.
pub struct Dissection {
    pub lhs: EtaSpec,
    pub terms: Vec<(usize, EtaSpec)>,
}

impl Dissection {
    /// Expand both sides to `order`.
    pub fn sides(&self, order: usize) -> (Series, Series) {
        let lhs = self.lhs.expand(order);
        let mut rhs = Series::zero(order);
        for (shift, spec) in &self.terms {
            rhs = rhs.add(&spec.expand(order).shift_up(*shift));
        }
        (lhs, rhs)
    }
}

/// 2-dissection of `f3^3 / f1`:
/// `f3^3/f1 = f4^3 f6^2 / (f2^2 f12)  +  q * f12^3 / f4`.
pub fn dissection_f3_cubed_over_f1() -> Dissection {
    Dissection {
        lhs: EtaSpec::from_pairs(&[(3, 3), (1, -1)]),
        terms: vec![
            (0, EtaSpec::from_pairs(&[(4, 3), (6, 2), (2, -2), (12, -1)])),
            (1, EtaSpec::from_pairs(&[(12, 3), (4, -1)])),
        ],
    }
}

/// 2-dissection of `1 / (f1 f3)`:
/// `1/(f1 f3) = f8^2 f12^5 / (f2^2 f4 f6^4 f24^2)  +  q * f4^5 f24^2 / (f2^4 f6^2 f8^2 f12)`.
pub fn dissection_inverse_f1f3() -> Dissection {
    Dissection {
        lhs: EtaSpec::from_pairs(&[(1, -1), (3, -1)]),
        terms: vec![
            (
                0,
                EtaSpec::from_pairs(&[(8, 2), (12, 5), (2, -2), (4, -1), (6, -4), (24, -2)]),
            ),
            (
                1,
                EtaSpec::from_pairs(&[(4, 5), (24, 2), (2, -4), (6, -2), (8, -2), (12, -1)]),
            ),
        ],
    }
}

/// 2-dissection of `f5 / f1`:
/// `f5/f1 = f8 f20^2 / (f2^2 f40)  +  q * f4^3 f10 f40 / (f2^3 f8 f20)`.
pub fn dissection_f5_over_f1() -> Dissection {
    Dissection {
        lhs: EtaSpec::from_pairs(&[(5, 1), (1, -1)]),
        terms: vec![
            (0, EtaSpec::from_pairs(&[(8, 1), (20, 2), (2, -2), (40, -1)])),
            (
                1,
                EtaSpec::from_pairs(&[(4, 3), (10, 1), (40, 1), (2, -3), (8, -1), (20, -1)]),
            ),
        ],
    }
}

/// The pair `(f_k^p, f_{kp})`, congruent modulo any prime `p`.
pub fn frobenius_pair(k: u64, p: u64, order: usize) -> (Series, Series) {
    let lhs = EtaSpec::from_pairs(&[(k, p as i64)]).expand(order);
    let rhs = euler_factor(k * p, order);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_factor_pentagonal_signs() {
        // f1 = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
        let f1 = euler_factor(1, 16);
        let expected = Series::from_i64s(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]);
        assert_eq!(f1, expected);
    }

    #[test]
    fn pochhammer_edges() {
        assert_eq!(pochhammer(3, 5, Some(0), 8), Series::one(8));
        // (1 - q^3)(1 - q^6)
        let two = pochhammer(3, 3, Some(2), 10);
        assert_eq!(two, Series::from_i64s(&[1, 0, 0, -1, 0, 0, -1, 0, 0, 1]));
        // a = q^0 factor collapses everything
        assert!(pochhammer(0, 1, Some(2), 6).is_zero());
        // factors beyond the order are invisible
        assert_eq!(pochhammer(1, 1, Some(50), 6), pochhammer(1, 1, None, 6));
    }

    #[test]
    fn partition_numbers_from_eta() {
        let p = EtaSpec::from_pairs(&[(1, -1)]).expand(11);
        assert_eq!(p, Series::from_i64s(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]));
    }

    #[test]
    fn empty_spec_is_one() {
        assert_eq!(EtaSpec::new().expand(5), Series::one(5));
    }

    #[test]
    fn exponents_accumulate_and_cancel() {
        let spec = EtaSpec::from_pairs(&[(2, 1), (2, 1), (3, 2), (3, -2)]);
        assert_eq!(spec, EtaSpec::from_pairs(&[(2, 2)]));
        let direct = euler_factor(2, 30).mul(&euler_factor(2, 30));
        assert_eq!(spec.expand(30), direct);
    }

    #[test]
    fn negative_exponents_divide() {
        let spec = EtaSpec::from_pairs(&[(2, 3), (5, -2)]);
        let expanded = spec.expand(40);
        let rebuilt = expanded
            .mul(&euler_factor(5, 40))
            .mul(&euler_factor(5, 40));
        assert_eq!(rebuilt, euler_factor(2, 40).pow(3).unwrap());
    }

    #[test]
    fn q_multinomial_small_cases() {
        assert_eq!(q_multinomial(&[2, 2], 6), Series::from_i64s(&[1, 1, 2, 1, 1, 0]));
        assert_eq!(q_multinomial(&[1, 1], 4), Series::from_i64s(&[1, 1, 0, 0]));
        assert_eq!(q_multinomial(&[4], 5), Series::one(5));
        assert_eq!(q_multinomial(&[0, 3, 0], 5), Series::one(5));
    }

    /// Enumerate distinct permutations of a multiset (small inputs only).
    fn multiset_permutations(values: &[u64]) -> Vec<Vec<u64>> {
        fn rec(remaining: &mut BTreeMap<u64, usize>, current: &mut Vec<u64>, len: usize, out: &mut Vec<Vec<u64>>) {
            if current.len() == len {
                out.push(current.clone());
                return;
            }
            let keys: Vec<u64> = remaining.keys().copied().collect();
            for v in keys {
                let c = remaining[&v];
                if c == 0 {
                    continue;
                }
                remaining.insert(v, c - 1);
                current.push(v);
                rec(remaining, current, len, out);
                current.pop();
                remaining.insert(v, c);
            }
        }
        let mut counts = BTreeMap::new();
        for &v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        let mut out = Vec::new();
        rec(&mut counts, &mut Vec::new(), values.len(), &mut out);
        out
    }

    fn major_index(word: &[u64]) -> usize {
        word.windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .sum()
    }

    #[test]
    fn q_multinomial_generates_major_index() {
        for counts in [
            vec![2usize, 2],
            vec![3, 1],
            vec![1, 1, 2],
            vec![2, 2, 1],
            vec![4, 4],
            vec![2, 3, 3],
        ] {
            let mut word = Vec::new();
            for (value, &c) in counts.iter().enumerate() {
                word.extend(std::iter::repeat_n((value + 1) as u64, c));
            }
            let perms = multiset_permutations(&word);
            let order = 40;
            let mut dist = Series::zero(order);
            for p in &perms {
                dist = dist.add(&Series::monomial(1, major_index(p), order));
            }
            assert_eq!(dist, q_multinomial(&counts, order), "counts {:?}", counts);
            // q -> 1 gives the plain multinomial coefficient
            assert_eq!(eval_at_one(&dist), BigInt::from(perms.len()));
        }
    }

    #[test]
    fn frobenius_congruence_small() {
        for (k, p) in [(1u64, 2u64), (1, 3), (2, 2), (1, 5)] {
            let (lhs, rhs) = frobenius_pair(k, p, 80);
            assert!(lhs.congruent_mod(&rhs, p), "f{}^{} vs f{}", k, p, k * p);
        }
    }

    #[test]
    fn dissections_hold_at_moderate_order() {
        for (name, d) in [
            ("f3^3/f1", dissection_f3_cubed_over_f1()),
            ("1/(f1 f3)", dissection_inverse_f1f3()),
            ("f5/f1", dissection_f5_over_f1()),
        ] {
            let (lhs, rhs) = d.sides(120);
            assert_eq!(lhs.first_difference(&rhs), None, "{}", name);
        }
    }
}
