//! CLI harness: verify one spec, sweep a parameter grid, or print a witness.

use clap::{Parser, Subcommand};
use std::process::ExitCode;
use stiefel::lie::{build_m_algebra, decompose, Family, FamilySpec};
use stiefel::sweep::{families_for, grid, sweep};
use stiefel::verify::{dim_cap_reason, verify, VerifyOptions};

#[derive(Parser)]
#[command(name = "stiefel", version, about = "Exact verification of Stiefel-manifold affine algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification battery for one spec and emit a JSON report.
    Verify {
        /// orth-rr | unitary-c | unitary-h | symp-r | symp-c | orth-c
        #[arg(long)]
        family: String,
        /// comma-separated counts: orth-rr p,q,k,l; unitary n1,n2,m1,m2; symplectic/orth-c n,m
        #[arg(long)]
        params: String,
        /// write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// refuse specs with dim m above this cap
        #[arg(long, default_value_t = 40)]
        max_dim: usize,
        /// include per-phase timings in the report (breaks byte-for-byte reproducibility)
        #[arg(long, default_value_t = false)]
        timings: bool,
    },
    /// Verify every spec of a family (or all) up to a total block size.
    Sweep {
        /// family name or "all"
        #[arg(long)]
        family: String,
        /// maximum total block size (n + m blocks)
        #[arg(long)]
        range: usize,
        /// write rows as CSV here
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
        /// parallel workers across specs (output identical to sequential)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// skip specs with dim m above this cap
        #[arg(long, default_value_t = 40)]
        max_dim: usize,
    },
    /// Print the first non-derivation witness triple of a spec.
    Witness {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 40)]
        max_dim: usize,
    },
}

fn parse_spec(family: &str, params: &str) -> stiefel::Result<FamilySpec> {
    let family = Family::from_cli_name(family)?;
    let params: Vec<usize> = params
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| stiefel::Error::InvalidSpec(format!("bad count '{p}'")))
        })
        .collect::<stiefel::Result<_>>()?;
    FamilySpec::new(family, &params)
}

fn usage_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            family,
            params,
            out,
            max_dim,
            timings,
        } => {
            let spec = match parse_spec(&family, &params) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            if let Some(reason) = dim_cap_reason(&spec, max_dim) {
                return usage_error(format!("{spec}: {reason} (raise --max-dim)"));
            }
            let opts = VerifyOptions {
                max_dim,
                with_timings: timings,
                skip_centralizer: false,
            };
            let report = match verify(&spec, &opts) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let json = report.to_json();
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, json + "\n") {
                        return usage_error(format!("writing {}: {e}", path.display()));
                    }
                }
                None => println!("{json}"),
            }
            if report.passes() {
                ExitCode::SUCCESS
            } else {
                eprintln!("{spec}: in-scope checks failed");
                ExitCode::from(2)
            }
        }
        Command::Sweep {
            family,
            range,
            csv,
            jobs,
            max_dim,
        } => {
            let fams = match families_for(&family) {
                Ok(f) => f,
                Err(e) => return usage_error(e),
            };
            let mut specs = Vec::new();
            for f in fams {
                specs.extend(grid(f, range));
            }
            let summary = sweep(&specs, max_dim, jobs.max(1));
            let csv_text = summary.to_csv();
            match csv {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &csv_text) {
                        return usage_error(format!("writing {}: {e}", path.display()));
                    }
                }
                None => print!("{csv_text}"),
            }
            eprintln!(
                "swept {} specs: {} skipped, {} in scope, {} matching, {} failing",
                summary.total,
                summary.skipped,
                summary.in_scope,
                summary.in_scope_matching,
                summary.in_scope_failing
            );
            if summary.all_in_scope_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Command::Witness {
            family,
            params,
            max_dim,
        } => {
            let spec = match parse_spec(&family, &params) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            if let Some(reason) = dim_cap_reason(&spec, max_dim) {
                return usage_error(format!("{spec}: {reason} (raise --max-dim)"));
            }
            let dec = match decompose(&spec) {
                Ok(d) => d,
                Err(e) => return usage_error(e),
            };
            let m = match build_m_algebra(&dec) {
                Ok(m) => m,
                Err(e) => return usage_error(e),
            };
            match stiefel::deriv::witness_non_derivation(&m) {
                Some(w) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&w).expect("witness serialization")
                    );
                    ExitCode::SUCCESS
                }
                None => {
                    println!("null");
                    println!("# every ad_x for basis x in p satisfies the derivation identity");
                    ExitCode::SUCCESS
                }
            }
        }
    }
}
