//! Command-line surface for the engine: decomposition numbers, bar
//! coefficients, block tables, the Mullineux map, abacus operations, and
//! the verification suites.  Text output by default, `--json` for the
//! identical data as JSON.  Exit codes: 0 success, 1 verification
//! failure, 2 usage or precondition error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fockcb::abacus::{e_core, e_weight, extended_beta_set, remove_runner, ux, ux_alt};
use fockcb::blocks::{d_set, scopes_reduce, BlockId};
use fockcb::canonical::{q_decomp, BlockTable};
use fockcb::mullineux::{mullineux, mullineux_conjugate, strip_rim, strip_rim_at};
use fockcb::partition::Partition;
use fockcb::verify::{
    verify_all, verify_llt, verify_mullineux, verify_runner_removal, verify_scopes,
    verify_triangularity, verify_welk, BlockRange, SuiteReport,
};
use fockcb::wedge::bar_standard;
use fockcb::LaurentPoly;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "fockcb",
    version,
    about = "Exact q-decomposition numbers for the level-1 Fock space",
    propagate_version = true
)]
struct Cli {
    /// Emit JSON instead of text (identical data).
    #[arg(long, global = true)]
    json: bool,

    /// Bead count for outputs that show abacus positions; commands whose
    /// results are bead-count independent validate and otherwise ignore it.
    #[arg(long, global = true)]
    r: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The q-decomposition number d^e_{lambda,mu}(q).
    Decomp {
        #[command(flatten)]
        modulus: Modulus,
        /// Row partition (comma-separated parts, `0` for the empty one).
        #[arg(long)]
        lambda: Partition,
        /// Column partition.
        #[arg(long)]
        mu: Partition,
        /// Also evaluate at q = 1.
        #[arg(long)]
        at_one: bool,
    },
    /// Bar-involution coefficients of the standard basis vector of mu.
    Bar {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        mu: Partition,
    },
    /// Members of a block, optionally with its decomposition matrix.
    Block {
        #[command(flatten)]
        modulus: Modulus,
        /// The e-core labelling the block.
        #[arg(long)]
        core: Partition,
        /// The e-weight of the block.
        #[arg(long)]
        weight: u64,
        /// Compute the full decomposition matrix (CSV in text mode).
        #[arg(long)]
        matrix: bool,
    },
    /// The Mullineux image m(mu), its conjugate, or the first rim strip.
    Mull {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        mu: Partition,
        /// Print the conjugate image m(mu)' instead.
        #[arg(long, conflicts_with = "strip")]
        conjugate: bool,
        /// Print the rim-strip data (bead moves, rim length, result).
        #[arg(long)]
        strip: bool,
    },
    /// Delete runner (r+k) mod e from a k-empty partition's display.
    RemoveRunner {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        lambda: Partition,
    },
    /// The statistic U_k of a k-empty partition.
    Ux {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        lambda: Partition,
    },
    /// The e-core and e-weight of a partition.
    Core {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        lambda: Partition,
    },
    /// Distinct q-decomposition values at a fixed weight, one
    /// representative block per Scopes class found within the core bound.
    Dset {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long, default_value_t = 3)]
        weight: u64,
        /// Largest core size to scan for blocks.
        #[arg(long, default_value_t = 8)]
        max_core: u64,
    },
    /// Reduce a block to its Scopes representative.
    Scopes {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        core: Partition,
        #[arg(long)]
        weight: u64,
    },
    /// Run a verification suite over a range of blocks.
    Verify {
        /// Which suite to run.
        suite: Suite,
        /// Moduli to cover, comma-separated.
        #[arg(long, value_delimiter = ',', default_value = "3",
              value_parser = clap::value_parser!(u32).range(2..))]
        e: Vec<u32>,
        #[arg(long, default_value_t = 2)]
        max_weight: u64,
        #[arg(long, default_value_t = 2)]
        max_core: u64,
        /// Partition size bound for the Mullineux suite (defaults to the
        /// largest member size in the block range).
        #[arg(long)]
        max_size: Option<u64>,
        /// Worker threads (defaults to FOCKCB_THREADS, then all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
}

/// The modulus flag shared by every computation command.
#[derive(Args)]
struct Modulus {
    /// The quantum characteristic e (at least 2).
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    e: u32,
}

/// Validate a residue flag against the modulus; errors exit with the
/// usage code.
fn check_residue(k: u32, e: u32) -> Option<i32> {
    if k >= e {
        eprintln!("error: residue k={k} is out of range for modulus e={e} (need 0 <= k < e)");
        return Some(2);
    }
    None
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    RunnerRemoval,
    Mullineux,
    Llt,
    Welk,
    Scopes,
    Triangularity,
    All,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

fn dominance_sorted(
    coeffs: std::collections::BTreeMap<Partition, LaurentPoly>,
    e: u32,
    r: usize,
) -> Vec<(Partition, LaurentPoly)> {
    let mut rows: Vec<(Vec<u64>, Partition, LaurentPoly)> = coeffs
        .into_iter()
        .map(|(la, c)| {
            let key = extended_beta_set(&la, e, r)
                .expect("r accommodates every partition it straightened")
                .expanded_desc();
            (key, la, c)
        })
        .collect();
    rows.sort_by(|a, b| b.0.cmp(&a.0));
    rows.into_iter().map(|(_, la, c)| (la, c)).collect()
}

fn csv_label(p: &Partition) -> String {
    format!("\"{p}\"")
}

fn run(cli: Cli) -> fockcb::Result<i32> {
    let json = cli.json;
    match cli.command {
        Command::Decomp {
            modulus,
            lambda,
            mu,
            at_one,
        } => {
            let value = q_decomp(&lambda, &mu, modulus.e);
            if json {
                let mut payload = json!({
                    "e": modulus.e,
                    "lambda": lambda,
                    "mu": mu,
                    "value": value,
                });
                if at_one {
                    payload["at_one"] =
                        serde_json::from_str(&value.eval_int(1).to_string()).unwrap();
                }
                println!("{payload}");
            } else {
                println!("{value}");
                if at_one {
                    println!("{}", value.eval_int(1));
                }
            }
        }
        Command::Bar { modulus, mu } => {
            let r = cli.r.unwrap_or(mu.size() as usize).max(1);
            let coeffs = bar_standard(&mu, modulus.e, r)?;
            let rows = dominance_sorted(coeffs, modulus.e, r);
            if json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(la, c)| json!({"partition": la, "coefficient": c}))
                    .collect();
                println!("{}", json!({"e": modulus.e, "mu": mu, "r": r, "coefficients": items}));
            } else {
                for (la, c) in rows {
                    println!("{la}: {c}");
                }
            }
        }
        Command::Block {
            modulus,
            core,
            weight,
            matrix,
        } => {
            let id = BlockId::new(modulus.e, core, weight)?;
            if matrix {
                let table = BlockTable::build(&id);
                let members = table.members();
                let dmat = table.decomposition_matrix();
                if json {
                    println!(
                        "{}",
                        json!({
                            "e": id.e,
                            "core": id.core,
                            "weight": id.weight,
                            "members": members,
                            "matrix": dmat,
                        })
                    );
                } else {
                    let header: Vec<String> =
                        std::iter::once(String::new()).chain(members.iter().map(csv_label)).collect();
                    println!("{}", header.join(","));
                    for (i, la) in members.iter().enumerate() {
                        let mut row = vec![csv_label(la)];
                        row.extend(dmat[i].iter().map(|v| v.to_string()));
                        println!("{}", row.join(","));
                    }
                }
            } else {
                let members = fockcb::blocks::enumerate_block(&id);
                if json {
                    println!(
                        "{}",
                        json!({
                            "e": id.e,
                            "core": id.core,
                            "weight": id.weight,
                            "members": members,
                        })
                    );
                } else {
                    for la in members {
                        println!("{la}");
                    }
                }
            }
        }
        Command::Mull {
            modulus,
            mu,
            conjugate,
            strip,
        } => {
            if strip {
                let data = match cli.r {
                    Some(r) => strip_rim_at(&mu, modulus.e, r)?,
                    None => strip_rim(&mu, modulus.e)?,
                };
                if json {
                    println!("{}", serde_json::to_string(&data).unwrap());
                } else {
                    let moves: Vec<String> =
                        data.pairs.iter().map(|(b, c)| format!("{b}->{c}")).collect();
                    println!("moves: {}", moves.join(", "));
                    println!("rim length: {}", data.rim_length);
                    println!("result: {}", data.result);
                }
            } else {
                let image = if conjugate {
                    mullineux_conjugate(&mu, modulus.e)?
                } else {
                    mullineux(&mu, modulus.e)?
                };
                if json {
                    println!("{}", serde_json::to_string(&image).unwrap());
                } else {
                    println!("{image}");
                }
            }
        }
        Command::RemoveRunner { modulus, k, lambda } => {
            if let Some(code) = check_residue(k, modulus.e) {
                return Ok(code);
            }
            let image = remove_runner(&lambda, modulus.e, k)?;
            if json {
                println!("{}", serde_json::to_string(&image).unwrap());
            } else {
                println!("{image}");
            }
        }
        Command::Ux { modulus, k, lambda } => {
            if let Some(code) = check_residue(k, modulus.e) {
                return Ok(code);
            }
            let value = ux(&lambda, modulus.e, k)?;
            if let Some(r) = cli.r {
                let alt = ux_alt(&lambda, modulus.e, k, r)?;
                assert_eq!(alt, value, "U_k must not depend on the bead count");
            }
            // A bare integer is the same in both output modes.
            println!("{value}");
        }
        Command::Core { modulus, lambda } => {
            let core = e_core(&lambda, modulus.e);
            let weight = e_weight(&lambda, modulus.e);
            if json {
                println!("{}", json!({"core": core, "weight": weight}));
            } else {
                println!("core: {core}");
                println!("weight: {weight}");
            }
        }
        Command::Dset {
            modulus,
            weight,
            max_core,
        } => {
            let (values, representatives) = d_set(modulus.e, weight, max_core);
            if json {
                println!(
                    "{}",
                    json!({
                        "e": modulus.e,
                        "weight": weight,
                        "max_core": max_core,
                        "values": values,
                        "representatives": representatives,
                    })
                );
            } else {
                eprintln!("representative blocks: {}", representatives.len());
                for v in values {
                    println!("{v}");
                }
            }
        }
        Command::Scopes {
            modulus,
            core,
            weight,
        } => {
            let id = BlockId::new(modulus.e, core, weight)?;
            let (representative, moves) = scopes_reduce(&id);
            if json {
                let steps: Vec<_> = moves
                    .iter()
                    .map(|(mv, core)| json!({"k": mv.k, "stripped": mv.a, "core": core}))
                    .collect();
                println!(
                    "{}",
                    json!({"representative": representative, "moves": steps})
                );
            } else {
                for (mv, core) in &moves {
                    println!("strip k={} ({} nodes) -> core {core}", mv.k, mv.a);
                }
                println!(
                    "representative: core {} weight {}",
                    representative.core, representative.weight
                );
            }
        }
        Command::Verify {
            suite,
            e,
            max_weight,
            max_core,
            max_size,
            threads,
        } => {
            let range = BlockRange::new(&e, max_weight, max_core);
            let mull_size = max_size.unwrap_or_else(|| {
                e.iter()
                    .map(|&ev| max_core + ev as u64 * max_weight)
                    .max()
                    .unwrap_or(0)
            });
            let reports: Vec<SuiteReport> = match suite {
                Suite::RunnerRemoval => vec![verify_runner_removal(&range, threads)],
                Suite::Mullineux => vec![verify_mullineux(&e, mull_size, threads)],
                Suite::Llt => vec![verify_llt(&range, threads)],
                Suite::Welk => vec![verify_welk(&range, threads)],
                Suite::Scopes => vec![verify_scopes(&range, threads)],
                Suite::Triangularity => vec![verify_triangularity(&range, threads)],
                Suite::All => verify_all(&range, threads),
            };
            if json {
                println!("{}", serde_json::to_string(&reports).unwrap());
            } else {
                for report in &reports {
                    println!("{report}");
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
