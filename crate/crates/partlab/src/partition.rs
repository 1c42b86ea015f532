//! Integer partitions and their structural predicates.
//!
//! A partition of `n` is a nonincreasing sequence of positive integers
//! summing to `n`. The three predicates this crate revolves around, each
//! relative to a modulus `m >= 2`:
//!
//! - *m-regular*: no part is divisible by `m`;
//! - *m-distinct*: no part value appears `m` or more times;
//! - *m-flat*: consecutive parts differ by less than `m` and the smallest
//!   part is less than `m`.
//!
//! The empty partition satisfies all three for every modulus (the
//! smallest-part clause is waived), so every counting series here has
//! constant term 1.

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive (found 0 at position {0})")]
    ZeroPart(usize),
    #[error("parts must be nonincreasing ({0} followed by {1})")]
    NotSorted(u64, u64),
    #[error("modulus must be at least 2 (got {0})")]
    InvalidModulus(u64),
    #[error("cannot parse partition from {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A validated modulus, at least 2. Every regular/distinct/flat predicate
/// and every Glaisher map takes one, so the `m >= 2` precondition is checked
/// exactly once, at the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self, PartitionError> {
        if m < 2 {
            Err(PartitionError::InvalidModulus(m))
        } else {
            Ok(Modulus(m))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Modulus {
    type Error = PartitionError;
    fn try_from(m: u64) -> Result<Self, Self::Error> {
        Modulus::new(m)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An integer partition: nonincreasing positive parts with the sum cached.
///
/// Partitions are immutable value objects with structural equality; parts
/// are stored largest-first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
    weight: u64,
}

impl Partition {
    /// The unique partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            weight: 0,
        }
    }

    /// Validates that `parts` is nonincreasing with positive entries.
    pub fn new(parts: Vec<u64>) -> Result<Self, PartitionError> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::ZeroPart(i));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(PartitionError::NotSorted(parts[i - 1], p));
            }
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    /// Sorts a multiset of positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The partitioned integer `n`.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Smallest part, or 0 for the empty partition.
    pub fn smallest(&self) -> u64 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Distinct part values in decreasing order with their multiplicities.
    pub fn runs(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Reflect the Ferrers diagram across the diagonal:
    /// `conjugate(p)[j] = #{i : p[i] >= j+1}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest() as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols as u64 {
            let count = self.parts.iter().take_while(|&&p| p >= j).count() as u64;
            parts.push(count);
        }
        Partition {
            parts,
            weight: self.weight,
        }
    }

    /// No part divisible by `m`. Vacuously true for the empty partition.
    pub fn is_regular(&self, m: Modulus) -> bool {
        self.parts.iter().all(|&p| p % m.get() != 0)
    }

    /// Every part value appears at most `m - 1` times.
    pub fn is_distinct(&self, m: Modulus) -> bool {
        self.runs().iter().all(|&(_, c)| c < m.get())
    }

    /// Consecutive parts differ by less than `m` and the smallest part is
    /// less than `m`. The empty partition is flat for every `m`.
    pub fn is_flat(&self, m: Modulus) -> bool {
        if self.parts.is_empty() {
            return true;
        }
        let gaps_ok = self
            .parts
            .windows(2)
            .all(|w| w[0] - w[1] < m.get());
        gaps_ok && self.smallest() < m.get()
    }

    /// Whether `t` occurs among the hooklengths. A partition is *t-core*
    /// when it does not.
    pub fn is_t_core(&self, t: Modulus) -> bool {
        !self
            .hooklengths()
            .iter()
            .any(|row| row.iter().any(|&h| h == t.get()))
    }

    /// Hooklengths of every cell: cells strictly right, plus cells strictly
    /// below, plus one. Rows match the shape of the partition.
    pub fn hooklengths(&self) -> Vec<Vec<u64>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row_len)| {
                (1..=row_len)
                    .map(|j| {
                        let arm = row_len - j;
                        let leg = conj.parts[(j - 1) as usize] - (i as u64 + 1);
                        arm + leg + 1
                    })
                    .collect()
            })
            .collect()
    }

    /// The boundary profile of the Ferrers diagram, read from the
    /// bottom-left corner to the top-right.
    pub fn profile(&self) -> Profile {
        let mut segments = Vec::new();
        if self.is_empty() {
            return Profile {
                segments,
                top_edge: 0,
            };
        }
        // runs() is largest-first; walk the boundary smallest-first
        let runs = self.runs();
        let mut prev_value = 0u64;
        for &(value, mult) in runs.iter().rev() {
            segments.push(Segment {
                orientation: Orientation::Horizontal,
                length: value - prev_value,
            });
            segments.push(Segment {
                orientation: Orientation::Vertical,
                length: mult,
            });
            prev_value = value;
        }
        Profile {
            segments,
            top_edge: self.largest(),
        }
    }
}

impl fmt::Display for Partition {
    /// Text format `(4,4,3,1,1,1)`; the empty partition is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PartitionError::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| err("expected surrounding parentheses"))?
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let p: u64 = tok
                .trim()
                .parse()
                .map_err(|_| err(&format!("invalid part {:?}", tok.trim())))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// Orientation of a boundary run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// One boundary run of the Ferrers diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub orientation: Orientation,
    pub length: u64,
}

/// Alternating boundary runs from bottom-left to top-right.
///
/// `segments` starts with the bottom edge (length = smallest part, a
/// horizontal run) and alternates vertical multiplicity runs with
/// horizontal difference runs. The top edge of the first part is reported
/// separately as `top_edge`: it is the terminal run of the boundary and is
/// never length-constrained, since flatness constrains the smallest part
/// and the gaps but not the largest part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub segments: Vec<Segment>,
    pub top_edge: u64,
}

impl Profile {
    /// A partition is s-distinct and t-flat exactly when all vertical runs
    /// are shorter than `s` and all (non-terminal) horizontal runs are
    /// shorter than `t`.
    pub fn within(&self, s: Modulus, t: Modulus) -> bool {
        self.segments.iter().all(|seg| match seg.orientation {
            Orientation::Vertical => seg.length < s.get(),
            Orientation::Horizontal => seg.length < t.get(),
        })
    }
}

/// A conjunction of optional regular/distinct/flat constraints. An empty
/// spec matches every partition, which is what the unconstrained counting
/// oracle wants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassSpec {
    pub regular: Option<Modulus>,
    pub distinct: Option<Modulus>,
    pub flat: Option<Modulus>,
}

impl ClassSpec {
    pub fn unconstrained() -> Self {
        Self::default()
    }

    pub fn regular(m: Modulus) -> Self {
        ClassSpec {
            regular: Some(m),
            ..Self::default()
        }
    }

    pub fn regular_distinct(s: Modulus, t: Modulus) -> Self {
        ClassSpec {
            regular: Some(s),
            distinct: Some(t),
            flat: None,
        }
    }

    pub fn regular_flat(s: Modulus, t: Modulus) -> Self {
        ClassSpec {
            regular: Some(s),
            distinct: None,
            flat: Some(t),
        }
    }

    pub fn distinct_flat(s: Modulus, t: Modulus) -> Self {
        ClassSpec {
            regular: None,
            distinct: Some(s),
            flat: Some(t),
        }
    }

    pub fn is_unconstrained(&self) -> bool {
        self.regular.is_none() && self.distinct.is_none() && self.flat.is_none()
    }

    pub fn matches(&self, p: &Partition) -> bool {
        self.regular.is_none_or(|m| p.is_regular(m))
            && self.distinct.is_none_or(|m| p.is_distinct(m))
            && self.flat.is_none_or(|m| p.is_flat(m))
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unconstrained() {
            return write!(f, "all partitions");
        }
        let mut labels = Vec::new();
        if let Some(m) = self.regular {
            labels.push(format!("{}-regular", m));
        }
        if let Some(m) = self.distinct {
            labels.push(format!("{}-distinct", m));
        }
        if let Some(m) = self.flat {
            labels.push(format!("{}-flat", m));
        }
        write!(f, "{}", labels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn m(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    pub(crate) fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        assert_eq!(p(&[4, 2, 1]).weight(), 7);
        assert_eq!(Partition::empty().weight(), 0);
        assert_eq!(
            Partition::new(vec![2, 4, 1]).unwrap_err(),
            PartitionError::NotSorted(2, 4)
        );
        assert_eq!(
            Partition::new(vec![3, 0]).unwrap_err(),
            PartitionError::ZeroPart(1)
        );
        assert_eq!(
            Partition::from_unsorted(vec![1, 4, 2, 4]).unwrap(),
            p(&[4, 4, 2, 1])
        );
        assert_eq!(Modulus::new(1).unwrap_err(), PartitionError::InvalidModulus(1));
    }

    #[test]
    fn text_format_round_trip() {
        let lam = p(&[4, 4, 3, 1, 1, 1]);
        assert_eq!(lam.to_string(), "(4,4,3,1,1,1)");
        assert_eq!("(4,4,3,1,1,1)".parse::<Partition>().unwrap(), lam);
        assert_eq!("( 4, 4 ,3,1,1,1 )".parse::<Partition>().unwrap(), lam);
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "()");
        assert!("(4,4,x)".parse::<Partition>().is_err());
        assert!("4,4".parse::<Partition>().is_err());
        assert!("(1,2)".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 4, 3, 1, 1, 1]).conjugate(), p(&[6, 3, 3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[4, 4, 3, 1, 1, 1]).conjugate().conjugate(), p(&[4, 4, 3, 1, 1, 1]));
    }

    #[test]
    fn regular_examples() {
        assert!(p(&[4, 2, 1]).is_regular(m(7)));
        assert!(!p(&[3]).is_regular(m(3)));
        assert!(Partition::empty().is_regular(m(5)));
    }

    #[test]
    fn distinct_examples() {
        assert!(p(&[4, 2, 1]).is_distinct(m(2)));
        // seven 1s fail 7-distinct at exactly 7 copies
        assert!(!p(&[1, 1, 1, 1, 1, 1, 1]).is_distinct(m(7)));
        assert!(p(&[1, 1, 1, 1, 1, 1]).is_distinct(m(7)));
        assert!(Partition::empty().is_distinct(m(2)));
    }

    #[test]
    fn flat_examples() {
        assert!(p(&[2, 1]).is_flat(m(2)));
        assert!(!p(&[3]).is_flat(m(2)));
        assert!(p(&[1, 1, 1]).is_flat(m(2)));
        assert!(Partition::empty().is_flat(m(2)));
        // gap of 2 needs m > 2
        assert!(!p(&[3, 1]).is_flat(m(2)));
        assert!(p(&[3, 1]).is_flat(m(3)));
        // smallest part clause
        assert!(!p(&[2, 2]).is_flat(m(2)));
        assert!(p(&[2, 2]).is_flat(m(3)));
    }

    #[test]
    fn hooklength_table() {
        let lam = p(&[4, 4, 3, 1, 1, 1]);
        assert_eq!(
            lam.hooklengths(),
            vec![
                vec![9, 5, 4, 2],
                vec![8, 4, 3, 1],
                vec![6, 2, 1],
                vec![3],
                vec![2],
                vec![1],
            ]
        );
        assert_eq!(p(&[1]).hooklengths(), vec![vec![1]]);
        assert_eq!(p(&[2, 2]).hooklengths(), vec![vec![3, 2], vec![2, 1]]);
    }

    #[test]
    fn t_core_examples() {
        let lam = p(&[4, 4, 3, 1, 1, 1]);
        assert!(lam.is_t_core(m(7)));
        assert!(!lam.is_t_core(m(5)));
        for t in [10, 11, 12] {
            assert!(lam.is_t_core(m(t)));
        }
        assert!(Partition::empty().is_t_core(m(3)));
    }

    #[test]
    fn profile_examples() {
        use Orientation::*;
        let seg = |o, l| Segment {
            orientation: o,
            length: l,
        };
        let prof = p(&[4, 4, 3, 1, 1, 1]).profile();
        assert_eq!(
            prof.segments,
            vec![
                seg(Horizontal, 1),
                seg(Vertical, 3),
                seg(Horizontal, 2),
                seg(Vertical, 1),
                seg(Horizontal, 1),
                seg(Vertical, 2),
            ]
        );
        assert_eq!(prof.top_edge, 4);

        assert_eq!(Partition::empty().profile(), Profile { segments: vec![], top_edge: 0 });

        // staircase: every run has length 1
        let stair = p(&[4, 3, 2, 1]).profile();
        assert!(stair.segments.iter().all(|s| s.length == 1));
        assert_eq!(stair.segments.len(), 8);
    }

    #[test]
    fn profile_characterizes_distinct_and_flat() {
        // (3) is not 2-flat: the bottom edge run of length 3 must show up
        let prof = p(&[3]).profile();
        assert!(!prof.within(m(2), m(2)));
        assert!(prof.within(m(2), m(4)));

        for parts in [
            vec![],
            vec![3],
            vec![2, 1],
            vec![4, 4, 3, 1, 1, 1],
            vec![5, 5, 5],
            vec![6, 3, 3, 2],
        ] {
            let lam = Partition::new(parts).unwrap();
            for s in 2..=5 {
                for t in 2..=5 {
                    assert_eq!(
                        lam.profile().within(m(s), m(t)),
                        lam.is_distinct(m(s)) && lam.is_flat(m(t)),
                        "{} s={} t={}",
                        lam,
                        s,
                        t
                    );
                }
            }
        }
    }

    #[test]
    fn class_spec_matching() {
        let spec = ClassSpec::regular_distinct(m(2), m(5));
        assert!(spec.matches(&p(&[3, 1])));
        assert!(!spec.matches(&p(&[4])));
        assert!(ClassSpec::unconstrained().matches(&p(&[4])));
        let triple = ClassSpec {
            regular: Some(m(2)),
            distinct: Some(m(2)),
            flat: Some(m(3)),
        };
        assert!(triple.matches(&p(&[3, 1])));
        assert!(!triple.matches(&p(&[3, 3])));
        assert_eq!(triple.to_string(), "2-regular, 2-distinct, 3-flat");
    }
}
