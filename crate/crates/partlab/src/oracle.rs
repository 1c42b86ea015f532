//! Brute-force enumeration of constrained partitions.
//!
//! This is the ground truth every formula in the crate is checked against,
//! so it stays deliberately naive: a largest-first recursive generator with
//! just enough pruning (gap bounds for flatness, run caps for distinctness,
//! divisibility skips for regularity) to keep desk-scale weights instant.

use crate::partition::{ClassSpec, Modulus, Partition};
use crate::series::Series;
use num_bigint::BigInt;
use std::fmt;

/// Enumeration constraints: a [`ClassSpec`] plus the extra filters the
/// cross-checks need (several regularity moduli at once, a largest-part
/// bound, an exact part count).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    pub regular: Vec<Modulus>,
    pub distinct: Option<Modulus>,
    pub flat: Option<Modulus>,
    pub max_part: Option<u64>,
    pub exact_parts: Option<usize>,
}

impl Filter {
    pub fn from_spec(spec: &ClassSpec) -> Self {
        Filter {
            regular: spec.regular.into_iter().collect(),
            distinct: spec.distinct,
            flat: spec.flat,
            max_part: None,
            exact_parts: None,
        }
    }

    pub fn with_max_part(mut self, k: u64) -> Self {
        self.max_part = Some(k);
        self
    }

    pub fn with_exact_parts(mut self, j: usize) -> Self {
        self.exact_parts = Some(j);
        self
    }

    /// Direct membership test, used to cross-validate the generator.
    pub fn matches(&self, p: &Partition) -> bool {
        self.regular.iter().all(|&m| p.is_regular(m))
            && self.distinct.is_none_or(|m| p.is_distinct(m))
            && self.flat.is_none_or(|m| p.is_flat(m))
            && self.max_part.is_none_or(|k| p.largest() <= k)
            && self.exact_parts.is_none_or(|j| p.len() == j)
    }
}

impl From<&ClassSpec> for Filter {
    fn from(spec: &ClassSpec) -> Self {
        Filter::from_spec(spec)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut labels = Vec::new();
        for m in &self.regular {
            labels.push(format!("{}-regular", m));
        }
        if let Some(m) = self.distinct {
            labels.push(format!("{}-distinct", m));
        }
        if let Some(m) = self.flat {
            labels.push(format!("{}-flat", m));
        }
        if let Some(k) = self.max_part {
            labels.push(format!("largest part <= {}", k));
        }
        if let Some(j) = self.exact_parts {
            labels.push(format!("exactly {} parts", j));
        }
        if labels.is_empty() {
            write!(f, "all partitions")
        } else {
            write!(f, "{}", labels.join(", "))
        }
    }
}

struct Walk<'a, F: FnMut(&[u64])> {
    filter: &'a Filter,
    flat: Option<u64>,
    max_run: Option<u64>,
    stack: Vec<u64>,
    visit: F,
}

impl<F: FnMut(&[u64])> Walk<'_, F> {
    fn rec(&mut self, rem: u64, prev: Option<u64>, run: u64) {
        if rem == 0 {
            if let Some(t) = self.flat {
                // smallest-part clause; waived for the empty partition
                if let Some(&last) = self.stack.last() {
                    if last >= t {
                        return;
                    }
                }
            }
            if let Some(j) = self.filter.exact_parts {
                if self.stack.len() != j {
                    return;
                }
            }
            (self.visit)(&self.stack);
            return;
        }
        if let Some(j) = self.filter.exact_parts {
            if self.stack.len() >= j {
                return;
            }
        }
        let mut hi = rem;
        if let Some(p) = prev {
            hi = hi.min(p);
        }
        if let Some(k) = self.filter.max_part {
            hi = hi.min(k);
        }
        let lo = match (self.flat, prev) {
            (Some(t), Some(p)) => 1.max(p.saturating_sub(t - 1)),
            _ => 1,
        };
        if lo > hi {
            return;
        }
        let mut v = hi;
        loop {
            let skip_regular = self.filter.regular.iter().any(|m| v.is_multiple_of(m.get()));
            let skip_run = prev == Some(v) && self.max_run.is_some_and(|cap| run >= cap);
            let skip_parts = self.filter.exact_parts.is_some_and(|j| {
                let need = (j - self.stack.len()) as u64; // >= 1 here
                let rest = rem - v;
                rest < need - 1 || rest > (need - 1) * v
            });
            if !(skip_regular || skip_run || skip_parts) {
                let next_run = if prev == Some(v) { run + 1 } else { 1 };
                self.stack.push(v);
                self.rec(rem - v, Some(v), next_run);
                self.stack.pop();
            }
            if v == lo {
                break;
            }
            v -= 1;
        }
    }
}

fn visit_partitions(n: u64, filter: &Filter, visit: impl FnMut(&[u64])) {
    let mut walk = Walk {
        filter,
        flat: filter.flat.map(Modulus::get),
        max_run: filter.distinct.map(|m| m.get() - 1),
        stack: Vec::new(),
        visit,
    };
    walk.rec(n, None, 0);
}

/// All partitions of `n` matching the filter, in lexicographically
/// decreasing order.
pub fn enumerate_filtered(n: u64, filter: &Filter) -> Vec<Partition> {
    let mut out = Vec::new();
    visit_partitions(n, filter, |parts: &[u64]| {
        out.push(Partition::new(parts.to_vec()).expect("generator emits sorted positive parts"));
    });
    out
}

/// All partitions of `n` in the class, in lexicographically decreasing order.
pub fn enumerate(n: u64, spec: &ClassSpec) -> Vec<Partition> {
    enumerate_filtered(n, &Filter::from_spec(spec))
}

/// Number of partitions of `n` matching the filter.
pub fn count_filtered(n: u64, filter: &Filter) -> u64 {
    let mut count = 0u64;
    visit_partitions(n, filter, |_: &[u64]| count += 1);
    count
}

pub fn count(n: u64, spec: &ClassSpec) -> u64 {
    count_filtered(n, &Filter::from_spec(spec))
}

/// Counts of matching partitions for every `n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub filter: Filter,
    pub counts: Vec<BigInt>,
}

impl CountTable {
    pub fn n_max(&self) -> u64 {
        self.counts.len() as u64 - 1
    }

    /// View the table as a series of order `n_max + 1`, ready for exact
    /// comparison against a generating function.
    pub fn to_series(&self) -> Series {
        Series::from_coeffs(self.counts.clone())
    }
}

pub fn count_table_filtered(n_max: u64, filter: &Filter) -> CountTable {
    let counts = (0..=n_max)
        .map(|n| BigInt::from(count_filtered(n, filter)))
        .collect();
    CountTable {
        filter: filter.clone(),
        counts,
    }
}

pub fn count_table(n_max: u64, spec: &ClassSpec) -> CountTable {
    count_table_filtered(n_max, &Filter::from_spec(spec))
}

/// Partitions with no part divisible by `s` and none divisible by `t`.
pub fn count_doubly_regular(n_max: u64, s: Modulus, t: Modulus) -> CountTable {
    let filter = Filter {
        regular: vec![s, t],
        ..Filter::default()
    };
    count_table_filtered(n_max, &filter)
}
