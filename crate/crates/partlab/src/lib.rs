//! Exact arithmetic for partitions that are simultaneously *regular*,
//! *distinct*, and/or *flat*.
//!
//! For a modulus `m >= 2`, a partition is m-regular when no part is
//! divisible by m, m-distinct when no part value repeats m or more times,
//! and m-flat when consecutive parts differ by less than m and the smallest
//! part is less than m. This crate computes with the classes cut out by any
//! combination of those constraints:
//!
//! - [`partition`]: the [`Partition`] type, the three predicates,
//!   conjugation, boundary profiles, hooklengths, t-core tests;
//! - [`flat`]: the flat-part/residue-vector decomposition of regular
//!   partitions;
//! - [`glaisher`]: Glaisher's base-m involution, the coprime composite map,
//!   and orbit tracing for the non-coprime iteration;
//! - [`series`] and [`eta`]: exact truncated power series, q-Pochhammer
//!   symbols, eta-quotient expansion, q-multinomials;
//! - [`genfun`]: every counting series for the constrained classes, each
//!   cross-checkable against brute force;
//! - [`oracle`]: the brute-force enumerator that arbitrates everything;
//! - [`congruence`]: arithmetic-progression congruence checks and scans;
//! - [`io`]: b-file parsing/emission and comparison with external data.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and
//! series are explicitly truncated, so any two routes to the same numbers
//! must agree bit for bit.
//!
//! ```
//! use partlab::{genfun, oracle, partition::{ClassSpec, Modulus}};
//!
//! let s = Modulus::new(2).unwrap();
//! let t = Modulus::new(5).unwrap();
//! let series = genfun::regular_distinct(s, t, 30);
//! let counts = oracle::count_table(29, &ClassSpec::regular_distinct(s, t));
//! assert_eq!(series.first_difference(&counts.to_series()), None);
//! ```
//!
//! The `partlab` binary exposes the same functionality as subcommands, and
//! the crate's `examples/` directory walks each capability; see the README.

pub mod congruence;
pub mod eta;
pub mod flat;
pub mod genfun;
pub mod glaisher;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod series;

pub use partition::{ClassSpec, Modulus, Partition};
pub use series::Series;
