//! Glaisher's base-m involution and composite-map orbits.
//!
//! For `j` not divisible by `m`, write the multiplicity of the part
//! `j*m^k` in base m as `sum_l a_{k,l} m^l`; the image partition contains
//! the part `j*m^l` with multiplicity `a_{k,l} * m^k`. This transposes the
//! digit matrix attached to each m-free `j`, so the map is a
//! weight-preserving involution and it exchanges m-regular with m-distinct
//! partitions. Every partition that is both m-regular and m-distinct is
//! fixed, and those are the only fixed points inside either class; a
//! partition with a symmetric digit matrix, such as (2,1,1) for m = 2, is
//! also fixed without lying in either class.
//!
//! Composing two such maps, `phi_s` after `phi_t`, sends an s-regular,
//! t-distinct partition to a t-regular, s-distinct one in a single step
//! when `gcd(s,t) = 1`. For non-coprime moduli one iterates the composite
//! step and records the trajectory; [`orbit`] keeps both half-step images
//! because revisits of the start are known to occur mid-step.

use crate::partition::{Modulus, Partition, PartitionError};
use std::collections::BTreeMap;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlaisherError {
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("partition {partition} is not {s}-regular and {t}-distinct")]
    NotInStartClass {
        partition: Partition,
        s: u64,
        t: u64,
    },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Glaisher's involution with modulus m.
pub fn phi(m: Modulus, p: &Partition) -> Partition {
    let m = m.get();
    let mut image: BTreeMap<u64, u64> = BTreeMap::new();
    for (value, mult) in p.runs() {
        // value = j * m^k with m not dividing j
        let mut j = value;
        let mut scale = 1u64; // m^k
        while j % m == 0 {
            j /= m;
            scale *= m;
        }
        // base-m digits of the multiplicity
        let mut c = mult;
        let mut place = 1u64; // m^l
        while c > 0 {
            let digit = c % m;
            if digit > 0 {
                *image.entry(j * place).or_insert(0) += digit * scale;
            }
            c /= m;
            place *= m;
        }
    }
    let mut parts = Vec::new();
    for (&value, &mult) in image.iter().rev() {
        parts.extend(std::iter::repeat_n(value, mult as usize));
    }
    Partition::new(parts).expect("image parts are positive and sorted")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `phi_s(phi_t(p))` for coprime moduli: carries an s-regular, t-distinct
/// partition to a t-regular, s-distinct one in a single composite step.
pub fn coprime_swap(s: Modulus, t: Modulus, p: &Partition) -> Result<Partition, GlaisherError> {
    if gcd(s.get(), t.get()) != 1 {
        return Err(GlaisherError::NotCoprime(s.get(), t.get()));
    }
    if !(p.is_regular(s) && p.is_distinct(t)) {
        return Err(GlaisherError::NotInStartClass {
            partition: p.clone(),
            s: s.get(),
            t: t.get(),
        });
    }
    Ok(phi(s, &phi(t, p)))
}

/// Which half of a composite step an event occurred at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    /// After applying `phi_t` (first half).
    Half,
    /// After applying `phi_s` (step complete).
    Full,
}

/// A revisit of the starting partition somewhere along the orbit.
///
/// Positions are measured in fully completed composite steps: a `Half`
/// revisit with `completed_steps = 63` means the trajectory returned to the
/// start at the `phi_t` image taken after 63 complete steps, i.e. inside
/// the step whose 0-based index is 63.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Revisit {
    /// Composite steps fully applied before the event.
    pub completed_steps: usize,
    pub phase: Phase,
}

/// One composite step: the image after `phi_t`, then after `phi_s`, with the
/// class flags of the completed step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStep {
    pub after_phi_t: Partition,
    pub after_phi_s: Partition,
    /// completed step is s-regular and t-distinct (the start class)
    pub in_start_class: bool,
    /// completed step is t-regular and s-distinct (the target class)
    pub in_target_class: bool,
}

/// How an orbit ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitOutcome {
    /// Reached a t-regular, s-distinct partition at this 1-based step.
    Terminated { steps: usize },
    /// Hit another s-regular, t-distinct partition (not in the target
    /// class) before terminating.
    Violated { step: usize },
    /// Gave up after the step budget.
    Exhausted { max_steps: usize },
}

/// Trajectory of a partition under repeated `phi_s . phi_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub s: Modulus,
    pub t: Modulus,
    pub start: Partition,
    pub steps: Vec<OrbitStep>,
    pub revisits: Vec<Revisit>,
    pub outcome: OrbitOutcome,
}

impl OrbitRecord {
    /// 1-based index of the terminating step, if the orbit terminated.
    pub fn terminal_index(&self) -> Option<usize> {
        match self.outcome {
            OrbitOutcome::Terminated { steps } => Some(steps),
            _ => None,
        }
    }

    pub fn terminal(&self) -> Option<&Partition> {
        self.terminal_index().map(|i| &self.steps[i - 1].after_phi_s)
    }
}

/// Step budget used when the caller does not supply one.
pub fn default_max_steps(n: u64) -> usize {
    (10 * n + 100) as usize
}

/// Iterate the composite step `phi_t` then `phi_s` from an s-regular,
/// t-distinct partition until the completed step lands in the target class
/// (t-regular and s-distinct), another start-class partition intervenes, or
/// the budget runs out. Both half-step images are recorded, and every
/// occurrence of the start partition along the way is flagged.
///
/// A partition lying in both classes at once counts as successful
/// termination: the target condition is satisfied.
pub fn orbit(
    s: Modulus,
    t: Modulus,
    start: &Partition,
    max_steps: usize,
) -> Result<OrbitRecord, GlaisherError> {
    if !(start.is_regular(s) && start.is_distinct(t)) {
        return Err(GlaisherError::NotInStartClass {
            partition: start.clone(),
            s: s.get(),
            t: t.get(),
        });
    }
    let mut steps = Vec::new();
    let mut revisits = Vec::new();
    let mut current = start.clone();
    let mut outcome = OrbitOutcome::Exhausted { max_steps };
    for step in 1..=max_steps {
        let after_phi_t = phi(t, &current);
        let after_phi_s = phi(s, &after_phi_t);
        if after_phi_t == *start {
            revisits.push(Revisit {
                completed_steps: step - 1,
                phase: Phase::Half,
            });
        }
        if after_phi_s == *start {
            revisits.push(Revisit {
                completed_steps: step,
                phase: Phase::Full,
            });
        }
        let in_start_class = after_phi_s.is_regular(s) && after_phi_s.is_distinct(t);
        let in_target_class = after_phi_s.is_regular(t) && after_phi_s.is_distinct(s);
        current = after_phi_s.clone();
        steps.push(OrbitStep {
            after_phi_t,
            after_phi_s,
            in_start_class,
            in_target_class,
        });
        if in_target_class {
            outcome = OrbitOutcome::Terminated { steps: step };
            break;
        }
        if in_start_class {
            outcome = OrbitOutcome::Violated { step };
            break;
        }
    }
    Ok(OrbitRecord {
        s,
        t,
        start: start.clone(),
        steps,
        revisits,
        outcome,
    })
}

/// Orbit summary for one starting partition inside a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub n: u64,
    pub start: Partition,
    /// Steps to termination, if the orbit terminated.
    pub ell: Option<usize>,
    pub revisits: Vec<Revisit>,
    /// Step at which a start-class partition intervened, if one did.
    pub violation: Option<usize>,
    pub exhausted: bool,
    pub terminal: Option<Partition>,
}

/// Two distinct starts that reached the same terminal for the same `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityFailure {
    pub n: u64,
    pub first_start: Partition,
    pub second_start: Partition,
    pub terminal: Partition,
}

/// Exhaustive orbit run over every s-regular, t-distinct partition of every
/// `n <= n_max`. Violations and exhaustions are data here, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub s: Modulus,
    pub t: Modulus,
    pub n_max: u64,
    pub max_steps: usize,
    pub entries: Vec<ScanEntry>,
    /// ell -> number of orbits terminating in exactly that many steps
    pub histogram: BTreeMap<usize, u64>,
    pub violations: u64,
    pub exhaustions: u64,
    pub max_ell: usize,
    pub total_ell: u64,
    pub injectivity_failures: Vec<InjectivityFailure>,
}

impl ScanReport {
    pub fn orbit_count(&self) -> u64 {
        self.entries.len() as u64
    }

    pub fn mean_ell(&self) -> f64 {
        let terminated: u64 = self.histogram.values().sum();
        if terminated == 0 {
            0.0
        } else {
            self.total_ell as f64 / terminated as f64
        }
    }

    pub fn clean(&self) -> bool {
        self.violations == 0 && self.exhaustions == 0 && self.injectivity_failures.is_empty()
    }
}

/// Run [`orbit`] on every start-class partition of every `n <= n_max`,
/// aggregate the step-count histogram, and check that distinct starts reach
/// distinct terminals for each `n`.
pub fn scan_orbits(s: Modulus, t: Modulus, n_max: u64, max_steps: Option<usize>) -> ScanReport {
    let spec = crate::partition::ClassSpec::regular_distinct(s, t);
    let mut entries = Vec::new();
    let mut histogram = BTreeMap::new();
    let mut violations = 0;
    let mut exhaustions = 0;
    let mut max_ell = 0;
    let mut total_ell = 0u64;
    let mut injectivity_failures = Vec::new();
    let mut budget = 0;
    for n in 0..=n_max {
        let budget_n = max_steps.unwrap_or_else(|| default_max_steps(n));
        budget = budget.max(budget_n);
        let mut seen_terminals: HashMap<Partition, Partition> = HashMap::new();
        for start in crate::oracle::enumerate(n, &spec) {
            let record = orbit(s, t, &start, budget_n).expect("start is in class by construction");
            let (ell, violation, exhausted) = match record.outcome {
                OrbitOutcome::Terminated { steps } => (Some(steps), None, false),
                OrbitOutcome::Violated { step } => (None, Some(step), false),
                OrbitOutcome::Exhausted { .. } => (None, None, true),
            };
            if let Some(l) = ell {
                *histogram.entry(l).or_insert(0u64) += 1;
                max_ell = max_ell.max(l);
                total_ell += l as u64;
            }
            if violation.is_some() {
                violations += 1;
            }
            if exhausted {
                exhaustions += 1;
            }
            let terminal = record.terminal().cloned();
            if let Some(term) = &terminal {
                if let Some(prev) = seen_terminals.get(term) {
                    injectivity_failures.push(InjectivityFailure {
                        n,
                        first_start: prev.clone(),
                        second_start: start.clone(),
                        terminal: term.clone(),
                    });
                } else {
                    seen_terminals.insert(term.clone(), start.clone());
                }
            }
            entries.push(ScanEntry {
                n,
                start,
                ell,
                revisits: record.revisits,
                violation,
                exhausted,
                terminal,
            });
        }
    }
    ScanReport {
        s,
        t,
        n_max,
        max_steps: budget,
        entries,
        histogram,
        violations,
        exhaustions,
        max_ell,
        total_ell,
        injectivity_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn phi_worked_examples() {
        assert_eq!(phi(m(2), &p(&[4, 2, 1])), p(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(phi(m(7), &p(&[1, 1, 1, 1, 1, 1, 1])), p(&[7]));
        // fixed point: 3-regular and 3-distinct
        assert_eq!(phi(m(3), &p(&[2, 1])), p(&[2, 1]));
        assert_eq!(phi(m(2), &Partition::empty()), Partition::empty());
    }

    #[test]
    fn phi_is_weight_preserving_involution_small() {
        for n in 0..=20u64 {
            for lam in crate::oracle::enumerate(n, &Default::default()) {
                for mv in 2..=4 {
                    let image = phi(m(mv), &lam);
                    assert_eq!(image.weight(), n);
                    assert_eq!(phi(m(mv), &image), lam, "phi_{} at {}", mv, lam);
                }
            }
        }
    }

    #[test]
    fn coprime_swap_worked_example() {
        let result = coprime_swap(m(7), m(2), &p(&[4, 2, 1])).unwrap();
        assert_eq!(result, p(&[7]));
        assert!(result.is_regular(m(2)));
        assert!(result.is_distinct(m(7)));
    }

    #[test]
    fn coprime_swap_fixed_points() {
        assert_eq!(coprime_swap(m(2), m(3), &p(&[1])).unwrap(), p(&[1]));
        let out = coprime_swap(m(2), m(5), &p(&[3, 1])).unwrap();
        assert_eq!(out, p(&[3, 1]));
        assert!(out.is_regular(m(5)) && out.is_distinct(m(2)));
    }

    #[test]
    fn coprime_swap_rejects_bad_input() {
        assert_eq!(
            coprime_swap(m(4), m(6), &p(&[1])).unwrap_err(),
            GlaisherError::NotCoprime(4, 6)
        );
        // (4) is not 2-regular
        assert!(matches!(
            coprime_swap(m(2), m(3), &p(&[4])),
            Err(GlaisherError::NotInStartClass { .. })
        ));
    }

    #[test]
    fn orbit_coprime_terminates_in_one_step() {
        let record = orbit(m(7), m(2), &p(&[4, 2, 1]), 50).unwrap();
        assert_eq!(record.terminal_index(), Some(1));
        assert_eq!(record.terminal(), Some(&p(&[7])));
    }

    #[test]
    fn orbit_rejects_start_outside_class() {
        assert!(matches!(
            orbit(m(2), m(2), &p(&[2]), 10),
            Err(GlaisherError::NotInStartClass { .. })
        ));
    }

    #[test]
    fn orbit_exhaustion_is_reported_distinctly() {
        // (50^6) with (s,t) = (6,10) needs 65 composite steps
        let start = p(&[50, 50, 50, 50, 50, 50]);
        let record = orbit(m(6), m(10), &start, 10).unwrap();
        assert_eq!(record.outcome, OrbitOutcome::Exhausted { max_steps: 10 });
        assert_eq!(record.steps.len(), 10);
    }

    #[test]
    fn equal_moduli_terminate_immediately() {
        // phi_t maps the class into t-regular; phi_s = phi_t then lands in
        // s-distinct and t-regular, so ell = 1 whenever s = t
        let report = scan_orbits(m(2), m(2), 15, None);
        assert!(report.clean());
        assert!(report.entries.iter().all(|e| e.ell == Some(1)));
    }

    #[test]
    fn scan_small_coprime_case() {
        let report = scan_orbits(m(2), m(3), 12, None);
        assert!(report.clean());
        assert_eq!(report.max_ell, 1);
        assert_eq!(report.histogram.len(), 1);
    }
}
