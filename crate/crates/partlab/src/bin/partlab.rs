//! Command-line front door. All mathematics lives in the library; this
//! binary only parses arguments, routes, and formats.
//!
//! Exit codes: 0 on success, 1 when a check finds a mismatch or a violation,
//! 2 on usage errors. Data goes to stdout, diagnostics to stderr, and all
//! numeric output is exact decimal.

use clap::{Args, Parser, Subcommand, ValueEnum};
use partlab::congruence;
use partlab::eta::{self, Dissection};
use partlab::genfun;
use partlab::glaisher::{self, OrbitOutcome, Phase};
use partlab::io::{self, BFile};
use partlab::partition::{ClassSpec, Modulus, Partition};
use partlab::series::Series;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "partlab",
    version,
    about = "Exact computations with partitions that are simultaneously regular, distinct, and/or flat"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ClassArgs {
    /// Keep partitions with no part divisible by this modulus (>= 2)
    #[arg(long, value_name = "S")]
    regular: Option<u64>,
    /// Keep partitions where no part value repeats this many times (>= 2)
    #[arg(long, value_name = "S")]
    distinct: Option<u64>,
    /// Keep partitions with gaps and smallest part below this modulus (>= 2)
    #[arg(long, value_name = "S")]
    flat: Option<u64>,
}

impl ClassArgs {
    fn to_spec(&self) -> Result<ClassSpec, CliError> {
        let modulus = |v: Option<u64>| -> Result<Option<Modulus>, CliError> {
            v.map(|m| Modulus::new(m).map_err(|e| CliError::usage(e.to_string())))
                .transpose()
        };
        Ok(ClassSpec {
            regular: modulus(self.regular)?,
            distinct: modulus(self.distinct)?,
            flat: modulus(self.flat)?,
        })
    }
}

#[derive(Args)]
struct OrderArg {
    /// Truncation order (coefficients 0..ORDER-1); PARTLAB_ORDER overrides
    /// the default
    #[arg(long, env = "PARTLAB_ORDER", default_value_t = 200)]
    order: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Bfile,
    Json,
}

#[derive(Args)]
struct SeriesMode {
    /// Dispatch to the best formula (default)
    #[arg(long, conflicts_with_all = ["oracle", "both"])]
    formula: bool,
    /// Count by brute-force enumeration instead
    #[arg(long, conflicts_with = "both")]
    oracle: bool,
    /// Compute both routes and fail on any difference
    #[arg(long)]
    both: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityName {
    /// 2-dissection of f3^3/f1
    Eq5,
    /// 2-dissection of 1/(f1 f3)
    Eq6,
    /// 2-dissection of f5/f1
    F5f1,
    /// f_k^p congruent to f_kp mod p
    Frobenius,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the counting series of a partition class
    Series {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        mode: SeriesMode,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
    },
    /// Trace one composite-map orbit and report it as JSON
    Orbit {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
        /// Starting partition, e.g. "(50,50,50,50,50,50)"
        #[arg(long)]
        partition: String,
        /// Step budget (default 10n + 100)
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Run orbits from every s-regular, t-distinct partition of n <= n-max
    /// and emit one JSON line per start
    OrbitScan {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Verify or search arithmetic-progression congruences
    Congruence {
        #[command(subcommand)]
        action: CongruenceCmd,
    },
    /// Check a built-in series identity coefficientwise
    Identity {
        #[arg(long, value_enum)]
        name: IdentityName,
        #[command(flatten)]
        order: OrderArg,
        /// Eta-factor modulus for --name frobenius
        #[arg(long, default_value_t = 1)]
        k: u64,
        /// Prime for --name frobenius
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    /// Compare a class series against an external b-file (or JSON series)
    Compare {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        order: OrderArg,
        /// Sequence file: "index value" lines, or JSON as emitted by
        /// `series --format json`
        #[arg(long)]
        bfile: PathBuf,
        /// Compare coefficient n against file index DILATE*n + OFFSET
        #[arg(long, default_value_t = 1)]
        dilate: u64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        offset: i64,
    },
    /// Apply the base-m involution to one partition
    Glaisher {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        partition: String,
    },
}

#[derive(Subcommand)]
enum CongruenceCmd {
    /// Check coefficient(STEP*n + OFFSET) == 0 mod MODULUS for all n in range
    Verify {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        order: OrderArg,
        /// The progression step A in a(A*n + B)
        #[arg(long, value_name = "A")]
        step: u64,
        /// The progression offset B in a(A*n + B)
        #[arg(long, value_name = "B")]
        offset: u64,
        /// The congruence modulus C
        #[arg(long, value_name = "C")]
        modulus: u64,
    },
    /// Search all patterns with step <= max-step and the given moduli
    Scan {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, default_value_t = 6)]
        max_step: u64,
        /// Candidate congruence moduli (repeat or comma-separate)
        #[arg(long = "modulus", value_delimiter = ',', default_values_t = [2u64, 3, 5])]
        moduli: Vec<u64>,
    },
}

/// Failure plus the exit code it maps to.
struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("partlab: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    text.parse()
        .map_err(|e: partlab::partition::PartitionError| CliError::usage(e.to_string()))
}

fn parse_modulus(v: u64) -> Result<Modulus, CliError> {
    Modulus::new(v).map_err(|e| CliError::usage(e.to_string()))
}

fn require_order(order: usize) -> Result<(), CliError> {
    if order == 0 {
        Err(CliError::usage("order must be at least 1"))
    } else {
        Ok(())
    }
}

fn emit_series(series: &Series, header: &str, format: Format) {
    match format {
        Format::Bfile => {
            println!("# {}", header);
            print!("{}", BFile::from_series(series).to_text());
        }
        Format::Json => {
            let mut v = io::series_json(series);
            v["description"] = json!(header);
            println!("{}", v);
        }
    }
}

fn revisit_json(r: &glaisher::Revisit) -> serde_json::Value {
    json!({
        "after_steps": r.completed_steps,
        "phase": match r.phase { Phase::Half => "half", Phase::Full => "full" },
    })
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Series {
            class,
            order,
            mode,
            format,
        } => {
            require_order(order.order)?;
            let spec = class.to_spec()?;
            if mode.both {
                let formula = genfun::class_series(&spec, order.order);
                let oracle = genfun::class_series_oracle(&spec, order.order);
                if let Some(d) = formula.series.first_difference(&oracle.series) {
                    return Err(CliError::mismatch(format!(
                        "formula ({}) disagrees with oracle for {}: {}",
                        formula.provenance, spec, d
                    )));
                }
                eprintln!(
                    "# formula ({}) and oracle agree on {} to order {}",
                    formula.provenance, spec, order.order
                );
                let header = format!(
                    "{}; order {}; provenance: {} (oracle-confirmed)",
                    spec, order.order, formula.provenance
                );
                emit_series(&formula.series, &header, format);
            } else {
                let result = if mode.oracle {
                    genfun::class_series_oracle(&spec, order.order)
                } else {
                    genfun::class_series(&spec, order.order)
                };
                let header = format!(
                    "{}; order {}; provenance: {}",
                    spec, order.order, result.provenance
                );
                emit_series(&result.series, &header, format);
            }
            Ok(())
        }
        Command::Orbit {
            s,
            t,
            partition,
            max_steps,
        } => {
            let s = parse_modulus(s)?;
            let t = parse_modulus(t)?;
            let start = parse_partition(&partition)?;
            let budget = max_steps.unwrap_or_else(|| glaisher::default_max_steps(start.weight()));
            let record = glaisher::orbit(s, t, &start, budget)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let (outcome, ell, violation) = match record.outcome {
                OrbitOutcome::Terminated { steps } => ("terminated", Some(steps), None),
                OrbitOutcome::Violated { step } => ("violated", None, Some(step)),
                OrbitOutcome::Exhausted { .. } => ("exhausted", None, None),
            };
            let steps: Vec<_> = record
                .steps
                .iter()
                .map(|st| {
                    json!({
                        "after_phi_t": st.after_phi_t.to_string(),
                        "after_phi_s": st.after_phi_s.to_string(),
                        "in_start_class": st.in_start_class,
                        "in_target_class": st.in_target_class,
                    })
                })
                .collect();
            println!(
                "{}",
                json!({
                    "s": s.get(),
                    "t": t.get(),
                    "n": start.weight(),
                    "start": start.to_string(),
                    "outcome": outcome,
                    "ell": ell,
                    "violation": violation,
                    "revisits": record.revisits.iter().map(revisit_json).collect::<Vec<_>>(),
                    "terminal": record.terminal().map(|p| p.to_string()),
                    "steps": steps,
                })
            );
            match record.outcome {
                OrbitOutcome::Terminated { .. } => Ok(()),
                OrbitOutcome::Violated { step } => Err(CliError::mismatch(format!(
                    "orbit hit another start-class partition at step {}",
                    step
                ))),
                OrbitOutcome::Exhausted { max_steps } => Err(CliError::mismatch(format!(
                    "orbit did not terminate within {} steps",
                    max_steps
                ))),
            }
        }
        Command::OrbitScan {
            s,
            t,
            n_max,
            max_steps,
        } => {
            let s = parse_modulus(s)?;
            let t = parse_modulus(t)?;
            let report = glaisher::scan_orbits(s, t, n_max, max_steps);
            for entry in &report.entries {
                println!(
                    "{}",
                    json!({
                        "n": entry.n,
                        "start": entry.start.to_string(),
                        "ell": entry.ell,
                        "revisits": entry.revisits.iter().map(revisit_json).collect::<Vec<_>>(),
                        "violation": entry.violation,
                        "exhausted": entry.exhausted,
                    })
                );
            }
            eprintln!(
                "# orbits {} | max ell {} | mean ell {:.3} | violations {} | exhaustions {} | injectivity failures {}",
                report.orbit_count(),
                report.max_ell,
                report.mean_ell(),
                report.violations,
                report.exhaustions,
                report.injectivity_failures.len()
            );
            let mut histogram: Vec<String> = report
                .histogram
                .iter()
                .map(|(l, c)| format!("{}:{}", l, c))
                .collect();
            if histogram.is_empty() {
                histogram.push("empty".into());
            }
            eprintln!("# ell histogram {}", histogram.join(" "));
            if report.clean() {
                Ok(())
            } else {
                Err(CliError::mismatch(
                    "scan found violations, exhaustions, or injectivity failures",
                ))
            }
        }
        Command::Congruence { action } => match action {
            CongruenceCmd::Verify {
                class,
                order,
                step,
                offset,
                modulus,
            } => {
                require_order(order.order)?;
                if step < 1 || offset >= step || modulus < 2 {
                    return Err(CliError::usage(
                        "need step >= 1, offset < step, modulus >= 2",
                    ));
                }
                if offset as usize >= order.order {
                    return Err(CliError::usage("order does not reach the offset"));
                }
                let spec = class.to_spec()?;
                let series = genfun::class_series(&spec, order.order).series;
                let check = congruence::verify_pattern(&series, step, offset, modulus);
                match check.failure {
                    None => {
                        println!(
                            "{}",
                            json!({
                                "spec": spec.to_string(),
                                "A": step, "B": offset, "C": modulus,
                                "holds": true,
                                "witnesses": check.witnesses,
                                "verified_to": check.witnesses - 1,
                            })
                        );
                        Ok(())
                    }
                    Some(f) => {
                        println!(
                            "{}",
                            json!({
                                "spec": spec.to_string(),
                                "A": step, "B": offset, "C": modulus,
                                "holds": false,
                                "counterexample_n": f.n,
                                "coefficient_index": f.index,
                                "coefficient": f.coefficient.to_string(),
                            })
                        );
                        Err(CliError::mismatch(format!(
                            "congruence fails at n = {} (coefficient {})",
                            f.n, f.index
                        )))
                    }
                }
            }
            CongruenceCmd::Scan {
                class,
                order,
                max_step,
                moduli,
            } => {
                require_order(order.order)?;
                if moduli.iter().any(|&c| c < 2) {
                    return Err(CliError::usage("congruence moduli must be at least 2"));
                }
                let spec = class.to_spec()?;
                let series = genfun::class_series(&spec, order.order).series;
                let outcome = congruence::scan(&series, max_step, &moduli);
                if outcome.thin_evidence {
                    eprintln!(
                        "# warning: order {} gives fewer than 10 witnesses for some cells; raise --order",
                        order.order
                    );
                }
                let class_pair = match (spec.regular, spec.distinct, spec.flat) {
                    (Some(s), Some(t), None) => Some((s.get(), t.get())),
                    _ => None,
                };
                let patterns: Vec<_> = outcome
                    .patterns
                    .iter()
                    .map(|p| {
                        let proven = class_pair.is_some_and(|(s, t)| {
                            congruence::known_proven(s, t, p.step, p.offset, p.divisor)
                        });
                        json!({
                            "A": p.step,
                            "B": p.offset,
                            "C": p.divisor,
                            "status": if proven { "proven" } else { "conjectural" },
                            "verified_to": p.verified_to,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({ "spec": spec.to_string(), "patterns": patterns })
                );
                Ok(())
            }
        },
        Command::Identity { name, order, k, p } => {
            require_order(order.order)?;
            let describe;
            let outcome = match name {
                IdentityName::Eq5 | IdentityName::Eq6 | IdentityName::F5f1 => {
                    let d: Dissection = match name {
                        IdentityName::Eq5 => eta::dissection_f3_cubed_over_f1(),
                        IdentityName::Eq6 => eta::dissection_inverse_f1f3(),
                        _ => eta::dissection_f5_over_f1(),
                    };
                    describe = match name {
                        IdentityName::Eq5 => {
                            "f3^3/f1 = f4^3 f6^2/(f2^2 f12) + q f12^3/f4".to_string()
                        }
                        IdentityName::Eq6 => {
                            "1/(f1 f3) = f8^2 f12^5/(f2^2 f4 f6^4 f24^2) + q f4^5 f24^2/(f2^4 f6^2 f8^2 f12)"
                                .to_string()
                        }
                        _ => {
                            "f5/f1 = f8 f20^2/(f2^2 f40) + q f4^3 f10 f40/(f2^3 f8 f20)".to_string()
                        }
                    };
                    let (lhs, rhs) = d.sides(order.order);
                    lhs.first_difference(&rhs)
                }
                IdentityName::Frobenius => {
                    if k < 1 || p < 2 {
                        return Err(CliError::usage("need --k >= 1 and --p >= 2"));
                    }
                    describe = format!("f{}^{} == f{} (mod {})", k, p, k * p, p);
                    let (lhs, rhs) = eta::frobenius_pair(k, p, order.order);
                    congruence::first_incongruence(&lhs, &rhs, p)
                }
            };
            match outcome {
                None => {
                    println!(
                        "{}",
                        json!({ "identity": describe, "order": order.order, "holds": true })
                    );
                    Ok(())
                }
                Some(d) => {
                    println!(
                        "{}",
                        json!({
                            "identity": describe,
                            "order": order.order,
                            "holds": false,
                            "index": d.index,
                            "lhs": d.lhs.to_string(),
                            "rhs": d.rhs.to_string(),
                        })
                    );
                    Err(CliError::mismatch(format!("identity fails: {}", d)))
                }
            }
        }
        Command::Compare {
            class,
            order,
            bfile,
            dilate,
            offset,
        } => {
            require_order(order.order)?;
            if dilate < 1 {
                return Err(CliError::usage("--dilate must be at least 1"));
            }
            let spec = class.to_spec()?;
            let text = std::fs::read_to_string(&bfile)
                .map_err(|e| CliError::usage(format!("cannot read {}: {}", bfile.display(), e)))?;
            let file = io::parse_sequence(&text).map_err(|e| CliError::usage(e.to_string()))?;
            let series = genfun::class_series(&spec, order.order).series;
            let report = io::compare(&series, &file, dilate, offset);
            let agreement = report
                .agreement
                .map(|(lo, hi)| json!({ "from": lo, "to": hi }));
            match &report.mismatch {
                None => {
                    println!(
                        "{}",
                        json!({
                            "spec": spec.to_string(),
                            "compared": report.compared,
                            "agreement": agreement,
                            "match": true,
                        })
                    );
                    if report.compared == 0 {
                        eprintln!("# warning: no overlap between series and file");
                    }
                    Ok(())
                }
                Some(m) => {
                    println!(
                        "{}",
                        json!({
                            "spec": spec.to_string(),
                            "compared": report.compared,
                            "agreement": agreement,
                            "match": false,
                            "series_index": m.series_index,
                            "file_index": m.file_index,
                            "series_value": m.series_value.to_string(),
                            "file_value": m.file_value.to_string(),
                        })
                    );
                    Err(CliError::mismatch(format!(
                        "first mismatch at coefficient {} (file index {}): {} vs {}",
                        m.series_index, m.file_index, m.series_value, m.file_value
                    )))
                }
            }
        }
        Command::Glaisher { m, partition } => {
            let m = parse_modulus(m)?;
            let p = parse_partition(&partition)?;
            println!("{}", glaisher::phi(m, &p));
            Ok(())
        }
    }
}
