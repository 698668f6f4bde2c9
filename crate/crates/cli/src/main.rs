//! Command-line front end: exact character-level computations, verification
//! suites, tables, walks and calculators, with deterministic JSON/CSV output.
//!
//! Exit codes: 0 all good, 1 verification failure, 2 usage error,
//! 3 resource guard exceeded.

mod config;
mod output;
mod verify;

use charlevel_core::bounds::{
    orbit_formula, pencil_big_f, pencil_big_h, pencil_f, pencil_h, ThresholdCalc,
};
use charlevel_core::census::{enumerate_labels_guarded, witten_zeta};
use charlevel_core::gfcore::{enumerate_group_with_guard, GroupSpec, Sign};
use charlevel_core::labels::{alvis_curtis_dual, degree, level, true_level};
use charlevel_core::oracle::{dixon_table, random_walk};
use charlevel_core::{CharLabel, Error as CoreError, Int, Rat};
use clap::{Parser, Subcommand};
use config::{Config, OutputFormat};
use num_traits::Zero;
use output::{csv_row, rat_exact, Sink, SCHEMA};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "charlevel",
    version,
    about = "Exact character levels for finite linear and unitary groups"
)]
struct Cli {
    /// JSON config file (documented keys: cache_dir, element_guard, seed,
    /// format, precision).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized scans.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Disable the on-disk cache for this run.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, levels and dual of one character label.
    Degree {
        /// Label as inline JSON.
        #[arg(long)]
        label: Option<String>,
        /// Label read from a JSON file.
        #[arg(long)]
        label_file: Option<PathBuf>,
    },
    /// Stream every label of a group with degree and levels.
    Enumerate {
        #[arg(long)]
        group: String,
        /// Keep only labels of this level.
        #[arg(long)]
        level: Option<u32>,
        /// Keep only labels of this true level.
        #[arg(long = "true-level")]
        true_level: Option<u32>,
        /// Keep only labels with degree at least this value.
        #[arg(long = "min-degree")]
        min_degree: Option<String>,
        /// Emit per-level statistics instead of the label stream.
        #[arg(long)]
        stats: bool,
    },
    /// Exact character table of a small group (cached).
    Table {
        #[arg(long)]
        group: String,
    },
    /// Run a verification suite, or "all".
    Verify {
        suite: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        eps: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Exact random-walk norms for one conjugacy class.
    Walk {
        #[arg(long)]
        group: String,
        /// Class index in table order (default: first noncentral class).
        #[arg(long)]
        class: Option<usize>,
        #[arg(long, default_value_t = 10)]
        t_max: u32,
    },
    /// Rank thresholds for the exponential value bounds.
    Thresholds {
        /// The centralizer-exponent constant C, as a rational like 3/2.
        #[arg(long, default_value = "1")]
        cee: String,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
    },
    /// Closed-form orbit counts on vector tuples, with optional oracle check.
    Orbits {
        #[arg(long)]
        eps: String,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        q: u64,
        /// Also run the Burnside oracle at this rank.
        #[arg(long)]
        check_n: Option<u32>,
    },
    /// Orbit counts on pairs of linear maps.
    Pencil {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        q: u64,
        /// Oracle rank (defaults to the stable range 2j).
        #[arg(long)]
        n: Option<u32>,
    },
    /// Witten zeta value over a group's degree multiset.
    Zeta {
        #[arg(long)]
        group: String,
        /// Exponent as a rational like 19/9.
        #[arg(long)]
        s: String,
        #[arg(long)]
        exclude_trivial: bool,
    },
    /// Dual-pair decomposition checks at explicit parameters.
    Dualpair {
        #[arg(long)]
        eps: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        q: u64,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Guard(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        match e {
            CoreError::GuardExceeded(m) => Failure::Guard(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match Config::assemble(cli.config.as_ref(), cli.format, cli.seed, cli.no_cache) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let mut sink = Sink::new(cli.output.clone());
    match dispatch(&cli, &config, &mut sink) {
        Ok(()) => match sink.finish() {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {}", e);
                ExitCode::from(2)
            }
        },
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            // The failure report is still written before the nonzero exit.
            let _ = sink.finish();
            eprintln!("verification failed: {}", m);
            ExitCode::from(1)
        }
        Err(Failure::Guard(m)) => {
            eprintln!("resource guard: {}", m);
            ExitCode::from(3)
        }
    }
}

fn parse_group(s: &str) -> Result<GroupSpec, Failure> {
    GroupSpec::parse(s).map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_sign(s: &str) -> Result<Sign, Failure> {
    match s {
        "+" | "plus" | "gl" | "GL" => Ok(Sign::Plus),
        "-" | "minus" | "gu" | "GU" => Ok(Sign::Minus),
        other => Err(Failure::Usage(format!("bad sign: {}", other))),
    }
}

fn parse_rat(s: &str) -> Result<Rat, Failure> {
    let parse_int = |t: &str| {
        Int::from_str(t.trim()).map_err(|e| Failure::Usage(format!("bad rational: {}", e)))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let den = parse_int(b)?;
            if den.is_zero() {
                return Err(Failure::Usage("rational with zero denominator".into()));
            }
            Ok(Rat::new(parse_int(a)?, den))
        }
        None => Ok(Rat::from(parse_int(s)?)),
    }
}

fn dispatch(cli: &Cli, config: &Config, sink: &mut Sink) -> Result<(), Failure> {
    match &cli.command {
        Command::Degree { label, label_file } => {
            let text = match (label, label_file) {
                (Some(t), None) => t.clone(),
                (None, Some(p)) => std::fs::read_to_string(p)
                    .map_err(|e| Failure::Usage(format!("cannot read label file: {}", e)))?,
                _ => {
                    return Err(Failure::Usage(
                        "provide exactly one of --label or --label-file".into(),
                    ))
                }
            };
            let label = CharLabel::from_json(&text).map_err(Failure::from)?;
            let spec = label.spec();
            let d = degree(&label);
            let j = level(&label);
            let tl = true_level(&label);
            let dual = alvis_curtis_dual(&label);
            let q = Int::from(spec.q);
            let window = {
                let upper = d <= q.pow(spec.n * j);
                let lower = match spec.eps {
                    Sign::Plus => d >= q.pow(j * (spec.n - j)),
                    Sign::Minus => Int::from(2) * &d >= q.pow(j * (spec.n - j)),
                };
                upper && lower
            };
            // Assembled by hand so the embedded label keeps its canonical
            // serialization order.
            let doc = format!(
                r#"{{"schema":"{}","spec":"{}","degree":"{}","true_level":{},"level":{},"dual_label":{},"bounds":{{"degree_window_pass":{}}}}}"#,
                SCHEMA,
                spec,
                d,
                tl,
                j,
                dual.to_json(),
                window
            );
            let csv = vec![
                csv_row(&[
                    "degree".into(),
                    "true_level".into(),
                    "level".into(),
                    "degree_window_pass".into(),
                ]),
                csv_row(&[
                    d.to_string(),
                    tl.to_string(),
                    j.to_string(),
                    window.to_string(),
                ]),
            ];
            output::emit(config.format, doc, csv, sink);
            Ok(())
        }
        Command::Enumerate {
            group,
            level: want_level,
            true_level: want_true,
            min_degree,
            stats,
        } => {
            let spec = parse_group(group)?;
            if spec.special {
                return Err(Failure::Usage(
                    "label enumeration applies to the general groups".into(),
                ));
            }
            if *stats {
                let stats = charlevel_core::level_statistics(&spec).map_err(Failure::from)?;
                match config.format {
                    OutputFormat::Json => {
                        let rows: Vec<serde_json::Value> = stats
                            .iter()
                            .map(|(lvl, st)| {
                                json!({
                                    "level": lvl,
                                    "count": st.count,
                                    "min_degree": st.min_degree.to_string(),
                                    "max_degree": st.max_degree.to_string(),
                                })
                            })
                            .collect();
                        sink.line(
                            &json!({"schema": SCHEMA, "spec": spec.to_string(), "levels": rows})
                                .to_string(),
                        );
                    }
                    OutputFormat::Csv => {
                        sink.line(&csv_row(&[
                            "level".into(),
                            "count".into(),
                            "min_degree".into(),
                            "max_degree".into(),
                        ]));
                        for (lvl, st) in &stats {
                            sink.line(&csv_row(&[
                                lvl.to_string(),
                                st.count.to_string(),
                                st.min_degree.to_string(),
                                st.max_degree.to_string(),
                            ]));
                        }
                    }
                }
                return Ok(());
            }
            let min_degree = match min_degree {
                Some(s) => Some(
                    Int::from_str(s)
                        .map_err(|e| Failure::Usage(format!("bad degree bound: {}", e)))?,
                ),
                None => None,
            };
            let labels = enumerate_labels_guarded(&spec, 2_000_000).map_err(Failure::from)?;
            if config.format == OutputFormat::Csv {
                sink.line(&csv_row(&[
                    "label".into(),
                    "degree".into(),
                    "true_level".into(),
                    "level".into(),
                ]));
            }
            for label in labels {
                let d = degree(&label);
                let j = level(&label);
                let tl = true_level(&label);
                if want_level.map_or(false, |w| w != j)
                    || want_true.map_or(false, |w| w != tl)
                    || min_degree.as_ref().map_or(false, |m| &d < m)
                {
                    continue;
                }
                match config.format {
                    OutputFormat::Json => {
                        sink.line(&format!(
                            r#"{{"schema":"{}","label":{},"degree":"{}","true_level":{},"level":{}}}"#,
                            SCHEMA,
                            label.to_json(),
                            d,
                            tl,
                            j
                        ));
                    }
                    OutputFormat::Csv => {
                        sink.line(&csv_row(&[
                            label.to_json(),
                            d.to_string(),
                            tl.to_string(),
                            j.to_string(),
                        ]));
                    }
                }
            }
            Ok(())
        }
        Command::Table { group } => {
            let spec = parse_group(group)?;
            let cache = config.cache(cli.no_cache);
            let key = format!("{}|table|{}", SCHEMA, spec);
            if let Some(hit) = cache.get(&key) {
                sink.line(hit.trim_end());
                return Ok(());
            }
            let g =
                enumerate_group_with_guard(&spec, config.element_guard).map_err(Failure::from)?;
            let t = dixon_table(&g).map_err(Failure::from)?;
            let classes: Vec<serde_json::Value> = (0..t.num_classes())
                .map(|c| {
                    json!({
                        "rep": t.class_reps[c].data,
                        "size": t.class_sizes[c].to_string(),
                        "centralizer": t.centralizer_orders[c].to_string(),
                    })
                })
                .collect();
            let characters: Vec<serde_json::Value> = t
                .chars
                .iter()
                .map(|row| {
                    let values: Vec<serde_json::Value> = row
                        .values
                        .iter()
                        .map(|v| {
                            let terms: Vec<serde_json::Value> =
                                v.terms().map(|(k, c)| json!([k, c.to_string()])).collect();
                            json!(terms)
                        })
                        .collect();
                    json!({"degree": row.degree.to_string(), "values": values})
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "spec": spec.to_string(),
                "order": t.order.to_string(),
                "exponent": t.exponent.to_string(),
                "classes": classes,
                "characters": characters,
            })
            .to_string();
            cache.put(&key, &doc);
            sink.line(&doc);
            Ok(())
        }
        Command::Verify {
            suite,
            group,
            eps,
            n,
            j,
            q,
        } => {
            let outcomes: Vec<(String, verify::SuiteOutcome)> = if suite == "all" {
                verify::run_all(config.seed).map_err(Failure::Usage)?
            } else if suite == "dual-pair" {
                let (eps, n, j, q) = match (eps, n, j, q) {
                    (Some(e), Some(n), Some(j), Some(q)) => (parse_sign(e)?, *n, *j, *q),
                    _ => return Err(Failure::Usage("dual-pair needs --eps --n --j --q".into())),
                };
                vec![(
                    format!("dual-pair ({},{},{},{})", eps, n, j, q),
                    verify::dual_pair_outcome(eps, n, j, q).map_err(Failure::Usage)?,
                )]
            } else {
                let spec = match group {
                    Some(gname) => Some(parse_group(gname)?),
                    None => None,
                };
                vec![(
                    suite.clone(),
                    verify::run(suite, spec, config.seed).map_err(Failure::Usage)?,
                )]
            };
            let mut all_pass = true;
            let mut docs = Vec::new();
            for (name, outcome) in &outcomes {
                let pass = outcome.failures.is_empty();
                all_pass &= pass;
                docs.push(json!({
                    "suite": name,
                    "instances": outcome.instances,
                    "pass": pass,
                    "failures": outcome.failures,
                }));
            }
            let doc = json!({"schema": SCHEMA, "results": docs, "pass": all_pass});
            match config.format {
                OutputFormat::Json => sink.line(&doc.to_string()),
                OutputFormat::Csv => {
                    sink.line(&csv_row(&[
                        "suite".into(),
                        "instances".into(),
                        "pass".into(),
                    ]));
                    for (name, outcome) in &outcomes {
                        sink.line(&csv_row(&[
                            name.clone(),
                            outcome.instances.to_string(),
                            outcome.failures.is_empty().to_string(),
                        ]));
                    }
                }
            }
            if all_pass {
                Ok(())
            } else {
                Err(Failure::Verification(
                    "some suites reported failures".into(),
                ))
            }
        }
        Command::Walk {
            group,
            class,
            t_max,
        } => {
            let spec = parse_group(group)?;
            let g =
                enumerate_group_with_guard(&spec, config.element_guard).map_err(Failure::from)?;
            let t = dixon_table(&g).map_err(Failure::from)?;
            let class = match class {
                Some(c) if *c < t.num_classes() => *c,
                Some(c) => {
                    return Err(Failure::Usage(format!(
                        "class index {} out of range (have {})",
                        c,
                        t.num_classes()
                    )))
                }
                None => (0..t.num_classes())
                    .find(|&c| t.class_sizes[c] > 1)
                    .ok_or_else(|| Failure::Usage("no noncentral class".into()))?,
            };
            if config.format == OutputFormat::Csv {
                sink.line(&csv_row(&[
                    "t".into(),
                    "linf".into(),
                    "l1".into(),
                    "ds_bound".into(),
                ]));
            }
            for tt in 1..=*t_max {
                let rep = random_walk(&t, class, tt).map_err(Failure::from)?;
                match config.format {
                    OutputFormat::Json => {
                        let doc = json!({
                            "schema": SCHEMA,
                            "spec": spec.to_string(),
                            "class": class,
                            "t": tt,
                            "linf": rat_exact(&rep.linf),
                            "l1": rat_exact(&rep.l1),
                            "ds_bound": rat_exact(&rep.ds_bound),
                        });
                        sink.line(&doc.to_string());
                    }
                    OutputFormat::Csv => {
                        sink.line(&csv_row(&[
                            tt.to_string(),
                            rat_exact(&rep.linf),
                            rat_exact(&rep.l1),
                            rat_exact(&rep.ds_bound),
                        ]));
                    }
                }
            }
            Ok(())
        }
        Command::Thresholds { cee, m, k_max } => {
            let c = parse_rat(cee)?;
            let mut calc = ThresholdCalc::new(c.clone()).map_err(Failure::from)?;
            let mut rows = Vec::new();
            for k in 0..=*k_max {
                let f = calc.f(*m as i32, k);
                let d = calc.delta(*m as i32, k);
                rows.push((k, f, d));
            }
            let h = calc.h(*m);
            match config.format {
                OutputFormat::Json => {
                    let table: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(k, f, d)| json!({"k": k, "f": rat_exact(f), "delta": rat_exact(d)}))
                        .collect();
                    let doc = json!({
                        "schema": SCHEMA,
                        "C": rat_exact(&c),
                        "m": m,
                        "rows": table,
                        "h": rat_exact(&h),
                    });
                    sink.line(&doc.to_string());
                }
                OutputFormat::Csv => {
                    sink.line(&csv_row(&["k".into(), "f".into(), "delta".into()]));
                    for (k, f, d) in &rows {
                        sink.line(&csv_row(&[k.to_string(), rat_exact(f), rat_exact(d)]));
                    }
                    sink.line(&csv_row(&["h".into(), rat_exact(&h), String::new()]));
                }
            }
            Ok(())
        }
        Command::Orbits { eps, j, q, check_n } => {
            let eps = parse_sign(eps)?;
            let formula = orbit_formula(eps, *j, *q);
            let mut oracle_val: Option<Int> = None;
            if let Some(n) = check_n {
                let spec = GroupSpec {
                    eps,
                    n: *n,
                    q: *q,
                    special: false,
                };
                let g = enumerate_group_with_guard(&spec, config.element_guard)
                    .map_err(Failure::from)?;
                oracle_val = Some(charlevel_core::gfcore::tuple_orbit_count(&g, *j));
            }
            let bounds_pass = charlevel_core::bounds::orbit_bounds_check(eps, *j, *q, &formula);
            let matches = oracle_val.as_ref().map(|o| o == &formula);
            let doc = json!({
                "schema": SCHEMA,
                "eps": eps.to_string(),
                "j": j,
                "q": q.to_string(),
                "formula": formula.to_string(),
                "oracle": oracle_val.as_ref().map(|v| v.to_string()),
                "oracle_matches": matches,
                "bounds_pass": bounds_pass,
            });
            let csv = vec![
                csv_row(&["formula".into(), "oracle".into(), "bounds_pass".into()]),
                csv_row(&[
                    formula.to_string(),
                    oracle_val
                        .as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_default(),
                    bounds_pass.to_string(),
                ]),
            ];
            output::emit(config.format, doc.to_string(), csv, sink);
            if matches == Some(false) {
                return Err(Failure::Verification(
                    "oracle disagrees with the formula".into(),
                ));
            }
            Ok(())
        }
        Command::Pencil { j, q, n } => {
            let f = pencil_big_f(*j, *q).map_err(Failure::from)?;
            let h = pencil_big_h(*j, *q).map_err(Failure::from)?;
            let n_used = n.unwrap_or(2 * j);
            let oracle = charlevel_core::gfcore::pencil_orbit_oracle(*j, n_used, *q)
                .map_err(Failure::from)?;
            let sandwich = h <= oracle && oracle <= f;
            let equality = n_used >= 2 * j && oracle == f;
            let fs: Vec<String> = (0..=*j).map(|m| pencil_f(m).to_string()).collect();
            let hs: Vec<String> = (0..=*j).map(|m| pencil_h(m).to_string()).collect();
            let doc = json!({
                "schema": SCHEMA,
                "j": j,
                "q": q.to_string(),
                "n": n_used,
                "F": f.to_string(),
                "H": h.to_string(),
                "oracle": oracle.to_string(),
                "f_m": fs,
                "h_m": hs,
                "sandwich_pass": sandwich,
                "stable_range_equality": equality,
            });
            let csv = vec![
                csv_row(&[
                    "F".into(),
                    "H".into(),
                    "oracle".into(),
                    "sandwich_pass".into(),
                ]),
                csv_row(&[
                    f.to_string(),
                    h.to_string(),
                    oracle.to_string(),
                    sandwich.to_string(),
                ]),
            ];
            output::emit(config.format, doc.to_string(), csv, sink);
            if !sandwich {
                return Err(Failure::Verification("pencil sandwich failed".into()));
            }
            Ok(())
        }
        Command::Zeta {
            group,
            s,
            exclude_trivial,
        } => {
            let spec = parse_group(group)?;
            let degrees = if spec.special {
                let g = enumerate_group_with_guard(&spec, config.element_guard)
                    .map_err(Failure::from)?;
                let t = dixon_table(&g).map_err(Failure::from)?;
                t.degrees_multiset()
            } else {
                charlevel_core::degree_multiset(&spec).map_err(Failure::from)?
            };
            let s_rat = parse_rat(s)?;
            let value = witten_zeta(&degrees, &s_rat, *exclude_trivial).map_err(Failure::from)?;
            let doc = json!({
                "schema": SCHEMA,
                "spec": spec.to_string(),
                "s": rat_exact(&s_rat),
                "exclude_trivial": exclude_trivial,
                "value": value.decimal(config.precision),
                "precision": config.precision,
                "lo": rat_exact(&value.lo),
                "hi": rat_exact(&value.hi),
            });
            let csv = vec![
                csv_row(&["s".into(), "value".into(), "precision".into()]),
                csv_row(&[
                    rat_exact(&s_rat),
                    value.decimal(config.precision),
                    config.precision.to_string(),
                ]),
            ];
            output::emit(config.format, doc.to_string(), csv, sink);
            Ok(())
        }
        Command::Dualpair { eps, n, j, q } => {
            let eps = parse_sign(eps)?;
            let outcome = verify::dual_pair_outcome(eps, *n, *j, *q).map_err(Failure::Usage)?;
            let pass = outcome.failures.is_empty();
            let doc = json!({
                "schema": SCHEMA,
                "eps": eps.to_string(),
                "n": n,
                "j": j,
                "q": q.to_string(),
                "alphas": outcome.instances,
                "pass": pass,
                "failures": outcome.failures,
            });
            let csv = vec![
                csv_row(&["alphas".into(), "pass".into()]),
                csv_row(&[outcome.instances.to_string(), pass.to_string()]),
            ];
            output::emit(config.format, doc.to_string(), csv, sink);
            if pass {
                Ok(())
            } else {
                Err(Failure::Verification("dual-pair checks failed".into()))
            }
        }
    }
}
