//! Command-line front end: counting, checking, converting and
//! self-validating minimal factorizations of the cycle (1 2 ... n).
//!
//! Exit codes: 0 success, 1 domain failure (not arrangeable, count
//! mismatch, failed check), 2 usage or parse error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclefact::bijection::{factorization_to_tree, tree_to_factorization};
use cyclefact::cactus::{arrange, cactus_to_dot, cactus_to_tree, check_arrangeable, tree_to_cactus, Cactus};
use cyclefact::enumeration::{brute_force_classes_capped, count_by_profile, count_trees, DEFAULT_ORACLE_CAP};
use cyclefact::genfunc::xi_series;
use cyclefact::perm::text::{parse_factorization, parse_multiset, parse_type_vector};
use cyclefact::selftest::{run_all, Scale};
use cyclefact::tree::{tree_to_dot, PlaneTree};
use cyclefact::{Error, Int};

#[derive(Parser)]
#[command(name = "cyclefact", version, about = "Minimal factorizations of the cycle (1 2 ... n)")]
struct Cli {
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count inequivalent minimal factorizations of a given type, e.g. "a2=3,a3=1"
    Count {
        alpha: String,
        #[arg(long, value_enum, default_value_t = Method::Genfunc)]
        method: Method,
        /// Also print the head/tail profile table
        #[arg(long)]
        profiles: bool,
    },
    /// Evaluate a factorization like "(3 4)(1 2)(2 4)" or diagnose a
    /// multiset like "{(1 4 5),(1 3),(2 4)}"
    Check {
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// Convert between factorization text, tree JSON, cactus JSON and DOT
    Convert {
        input: String,
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Target,
        /// Ambient size for factorization input (default: largest element)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the cross-module consistency suite
    Selftest {
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Genfunc,
    Trees,
    Oracle,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Fact,
    Tree,
    Cactus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Fact,
    Tree,
    Cactus,
    Dot,
}

fn oracle_cap() -> usize {
    std::env::var("CYCLEFACT_ORACLE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

/// 2 for malformed input, 1 for every other (domain) error.
fn code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.command {
        Command::Count {
            alpha,
            method,
            profiles,
        } => cmd_count(&alpha, method, profiles, json),
        Command::Check { input, n } => cmd_check(&input, n, json),
        Command::Convert { input, from, to, n } => cmd_convert(&input, from, to, n, json),
        Command::Selftest { max_weight } => cmd_selftest(max_weight, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(code_for(&e))
        }
    }
}

fn cmd_count(alpha: &str, method: Method, profiles: bool, json: bool) -> Result<u8, Error> {
    let alpha = parse_type_vector(alpha)?;
    let n = alpha.weight() + 1;
    let cap = oracle_cap();

    let mut by_method: Vec<(&str, Int)> = Vec::new();
    if matches!(method, Method::Genfunc | Method::All) {
        let xi = xi_series::<Int>(alpha.weight());
        by_method.push(("genfunc", xi.coefficient_alpha(&alpha)));
    }
    if matches!(method, Method::Trees | Method::All) {
        by_method.push(("trees", count_trees(&alpha)));
    }
    if matches!(method, Method::Oracle) {
        by_method.push(("oracle", Int::from(brute_force_classes_capped(&alpha, n, cap)?.len())));
    }
    if matches!(method, Method::All) && n <= cap {
        by_method.push(("oracle", Int::from(brute_force_classes_capped(&alpha, n, cap)?.len())));
    }
    let count = by_method[0].1.clone();
    let agree = by_method.iter().all(|(_, c)| *c == count);

    let table = if profiles {
        Some(count_by_profile(&alpha))
    } else {
        None
    };

    if json {
        let out = serde_json::json!({
            "alpha": alpha.to_string(),
            "count": count.to_string(),
            "methods": by_method
                .iter()
                .map(|(m, c)| (m.to_string(), serde_json::Value::from(c.to_string())))
                .collect::<serde_json::Map<_, _>>(),
            "agree": agree,
            "profiles": table.as_ref().map(|t| t
                .iter()
                .map(|(p, c)| (p.to_string(), serde_json::Value::from(c.to_string())))
                .collect::<serde_json::Map<_, _>>()),
        });
        println!("{out}");
    } else {
        println!("{count}");
        if let Some(t) = &table {
            for (p, c) in t {
                println!("{p}: {c}");
            }
        }
    }
    if !agree {
        if !json {
            for (m, c) in &by_method {
                eprintln!("{m}: {c}");
            }
            eprintln!("methods disagree");
        }
        return Ok(1);
    }
    Ok(0)
}

fn cmd_check(input: &str, n: usize, json: bool) -> Result<u8, Error> {
    if input.trim_start().starts_with('{') {
        let cycles = parse_multiset(input)?;
        return Ok(match check_arrangeable(&cycles, n) {
            Ok(()) => {
                let f = arrange(&cycles, n)?;
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "arrangeable": true,
                            "factorization": f.to_string(),
                        })
                    );
                } else {
                    println!("arrangeable; class: {f}");
                }
                0
            }
            Err(Error::NotArrangeable { condition, detail }) => {
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "arrangeable": false,
                            "condition": condition,
                            "detail": detail,
                        })
                    );
                } else {
                    println!("not arrangeable: condition {condition} ({detail})");
                }
                1
            }
            Err(e) => return Err(e),
        });
    }

    let f = parse_factorization(input, n)?;
    let product = f.evaluate();
    let minimal = f.is_minimal_ncycle_factorization();
    let profile = if minimal {
        let (_, _, p) = f.heads_and_tails()?;
        Some(p)
    } else {
        None
    };
    if json {
        println!(
            "{}",
            serde_json::json!({
                "evaluates_to": product.cycle_notation(),
                "minimal": minimal,
                "type": f.type_of().to_string(),
                "heads": profile.as_ref().map(|p| p.total_heads()),
                "tails": profile.as_ref().map(|p| p.total_tails()),
            })
        );
    } else if let Some(p) = &profile {
        println!(
            "evaluates to {}; minimal; type {}; heads={} tails={}",
            product.cycle_notation(),
            f.type_of(),
            p.total_heads(),
            p.total_tails()
        );
    } else {
        println!(
            "evaluates to {}; not a minimal factorization of the {n}-cycle",
            product.cycle_notation()
        );
    }
    Ok(if minimal { 0 } else { 1 })
}

fn cmd_convert(
    input: &str,
    from: Format,
    to: Target,
    n: Option<usize>,
    _json: bool,
) -> Result<u8, Error> {
    let json_err = |e: serde_json::Error| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    };
    let (tree, cactus): (PlaneTree, Option<Cactus>) = match from {
        Format::Fact => {
            let n = match n {
                Some(n) => n,
                None => input
                    .split(|c: char| !c.is_ascii_digit())
                    .filter_map(|s| s.parse::<usize>().ok())
                    .max()
                    .ok_or(Error::Parse {
                        pos: 0,
                        msg: "cannot infer n from an empty factorization; pass --n".into(),
                    })?,
            };
            let f = parse_factorization(input, n)?;
            (factorization_to_tree(&f)?, None)
        }
        Format::Tree => (serde_json::from_str(input).map_err(json_err)?, None),
        Format::Cactus => {
            let c: Cactus = serde_json::from_str(input).map_err(json_err)?;
            (cactus_to_tree(&c)?, Some(c))
        }
    };
    let rendered = match to {
        Target::Fact => tree_to_factorization(&tree)?.to_string(),
        Target::Tree => serde_json::to_string(&tree).expect("trees serialize"),
        Target::Cactus => {
            serde_json::to_string(&tree_to_cactus(&tree)?).expect("cacti serialize")
        }
        Target::Dot => match &cactus {
            Some(c) => cactus_to_dot(c),
            None => tree_to_dot(&tree),
        },
    };
    println!("{rendered}");
    Ok(0)
}

fn cmd_selftest(max_weight: usize, json: bool) -> Result<u8, Error> {
    let scale = Scale::with_weight(max_weight, oracle_cap());
    let results = run_all(&scale);
    let all_passed = results.iter().all(|r| r.passed);
    if json {
        let out: Vec<_> = results
            .iter()
            .map(|r| {
                serde_json::json!({
                    "check": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    "millis": r.millis,
                })
            })
            .collect();
        println!("{}", serde_json::json!({"passed": all_passed, "checks": out}));
    } else {
        for r in &results {
            println!(
                "{}: {} ({} ms) - {}",
                r.name,
                if r.passed { "PASS" } else { "FAIL" },
                r.millis,
                r.detail
            );
        }
        println!(
            "{}",
            if all_passed {
                "all checks passed"
            } else {
                "some checks FAILED"
            }
        );
    }
    Ok(if all_passed { 0 } else { 1 })
}
