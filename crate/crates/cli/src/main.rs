use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gclt_core::catalog::{self, MAX_CATALOG_ORDER};
use gclt_core::numbers::classify;
use gclt_core::predicates::{self as pred, is_aclt_group_within, is_cclt_group_within, is_clt_group_within};
use gclt_core::verify::{Settings, Suite};
use gclt_core::witness::{non_aclt_witness_within, non_cclt_witness_within};
use gclt_core::{CatalogError, FiniteGroup, GroupError, GroupSpec, WitnessError, DEFAULT_ENUMERATION_BOUND};

#[derive(Parser)]
#[command(name = "gclt", version, about = "Cyclic and abelian converse-Lagrange tools for finite groups")]
struct Cli {
    /// Raise the brute-force enumeration bound; values below the default are ignored.
    #[arg(long, global = true, value_name = "N")]
    bound: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify n as cyclic / abelian / CCLT / ACLT number.
    Classify { n: u64 },
    /// Classify every n in an inclusive range such as 1..100.
    Range {
        #[arg(value_parser = parse_range)]
        range: RangeInclusive<u64>,
        /// Emit CSV instead of JSON lines.
        #[arg(long)]
        csv: bool,
    },
    /// Inspect a group given by a spec such as "D14", "M(7,3,2)" or "C2xQ8".
    Group {
        spec: String,
        #[arg(long)]
        predicates: bool,
        #[arg(long)]
        subgroups: bool,
    },
    /// A group of order n lacking a cyclic (cclt) or abelian (aclt) subgroup of some order.
    Witness {
        n: u64,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Confirm the missing subgroup by brute force; exit 1 if it is present.
        #[arg(long)]
        verify: bool,
    },
    /// List the catalog groups of order n.
    Catalog { n: usize },
    /// Build the graph of order-n groups joined when their product is ACLT.
    Xgraph {
        n: usize,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long, env = "GCLT_MAX_ORDER", default_value_t = MAX_CATALOG_ORDER)]
        max_order: usize,
        /// Include the order-243 witness.
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cclt,
    Aclt,
}

/// Exit status for failures: `Usage` covers bad input and unsupported orders.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_range(text: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = text.split_once("..").ok_or("expected a range like 1..100")?;
    let a: u64 = a.trim().parse().map_err(|e| format!("range start: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("range end: {e}"))?;
    if a == 0 || a > b {
        return Err("range must satisfy 1 ≤ a ≤ b".into());
    }
    Ok(a..=b)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bound = match cli.bound {
        Some(b) if b >= DEFAULT_ENUMERATION_BOUND => b,
        Some(b) => {
            eprintln!("note: --bound {b} is below the default {DEFAULT_ENUMERATION_BOUND} and is ignored");
            DEFAULT_ENUMERATION_BOUND
        }
        None => DEFAULT_ENUMERATION_BOUND,
    };
    match run(cli.command, bound) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, bound: usize) -> Result<(), Failure> {
    match command {
        Command::Classify { n } => {
            println!("{}", classify(n).map_err(usage)?.to_json());
        }
        Command::Range { range, csv } => {
            if csv {
                println!("{}", gclt_core::numbers::NumberClass::CSV_HEADER);
            }
            for n in range {
                let class = classify(n).map_err(usage)?;
                println!("{}", if csv { class.csv_row() } else { class.to_json() });
            }
        }
        Command::Group {
            spec,
            predicates,
            subgroups,
        } => {
            let spec = GroupSpec::parse(&spec).map_err(usage)?;
            let g = spec.build()?;
            println!("{}", describe_group(&g, predicates, subgroups, bound)?);
        }
        Command::Witness { n, kind, verify } => {
            let built = match kind {
                Kind::Cclt => non_cclt_witness_within(n, bound),
                Kind::Aclt => non_aclt_witness_within(n, bound),
            };
            let w = built.map_err(|e| match e {
                WitnessError::VerificationFailed { .. } => Failure::Verification(e.to_string()),
                other => usage(other),
            })?;
            println!("{}", w.to_json());
            if verify {
                if !w.verified {
                    return Err(Failure::Verification(format!(
                        "n = {n}: order exceeds the enumeration bound {bound}; witness not verified"
                    )));
                }
                w.verify_within(bound).map_err(|e| Failure::Verification(e.to_string()))?;
            }
        }
        Command::Catalog { n } => {
            let entry = catalog::entry(n)?;
            println!("{}", serde_json::to_string(&entry).expect("entry serializes"));
        }
        Command::Xgraph { n, dot, json } => {
            let graph = gclt_core::xgraph::build(n)?;
            if let Some(path) = &dot {
                fs::write(path, graph.to_dot()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = &json {
                fs::write(path, graph.to_json()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            if dot.is_none() && json.is_none() {
                print!("{}", graph.to_dot());
            }
        }
        Command::Verify {
            suite,
            max_order,
            slow,
        } => {
            let suite: Suite = suite.parse().map_err(usage)?;
            let settings = Settings { max_order, bound, slow };
            let checks = suite.run(&settings);
            for c in &checks {
                println!("{c}");
            }
            let failed = checks.iter().filter(|c| !c.passed()).count();
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} of {} checks failed", checks.len())));
            }
            println!("all {} checks passed", checks.len());
        }
    }
    Ok(())
}

/// `Ok(value)` as JSON, or `null` when the group is too large to decide.
fn decided<T: Into<Value>>(r: Result<T, GroupError>) -> Result<Value, Failure> {
    match r {
        Ok(v) => Ok(v.into()),
        Err(GroupError::BoundExceeded { .. }) => Ok(Value::Null),
        Err(e) => Err(e.into()),
    }
}

fn describe_group(g: &FiniteGroup, predicates: bool, subgroups: bool, bound: usize) -> Result<Value, Failure> {
    let mut out = json!({
        "spec": g.label(),
        "order": g.order(),
        "element_orders": g.order_profile(),
    });
    if predicates {
        let report = |r: Result<pred::DivisorWitnessReport, GroupError>| {
            decided(r.map(|r| json!({ "ok": r.ok, "missing": r.missing() })))
        };
        out["predicates"] = json!({
            "abelian": pred::is_abelian(g),
            "cyclic": pred::is_cyclic(g),
            "clt": report(is_clt_group_within(g, bound))?,
            "cclt": report(is_cclt_group_within(g, bound))?,
            "aclt": report(is_aclt_group_within(g, bound))?,
            "metacyclic": pred::is_metacyclic(g),
            "z_group": pred::is_z_group(g),
            "a_group": pred::is_a_group(g),
            "metabelian": pred::is_metabelian(g),
            "nilpotent": pred::is_nilpotent(g),
            "supersolvable": decided(pred::is_supersolvable(g))?,
            "minimal_noncyclic": decided(pred::is_minimal_noncyclic(g))?,
            "minimal_nonabelian": decided(pred::is_minimal_nonabelian(g))?,
        });
    }
    if subgroups {
        let all = g.all_subgroups_within(bound)?;
        let list: Vec<Value> = all
            .iter()
            .map(|h| {
                json!({
                    "order": h.order(),
                    "elements": h.elements(),
                    "cyclic": h.is_cyclic(),
                    "abelian": h.is_abelian(),
                    "normal": g.is_normal(h).expect("own subgroup"),
                })
            })
            .collect();
        out["subgroup_count"] = all.len().into();
        out["subgroups"] = list.into();
    }
    Ok(out)
}
