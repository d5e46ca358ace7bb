use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ekr_cli::{
    action_of, analyze_action, any_not_computed, build_construction, construction_doc,
    parse_checks, parse_group_description, render_report, run_manifest, verify::render_manifest,
    Check, CliError, ConstructParams, OutputFormat, RunConfig,
};

/// Exact analysis of intersecting sets in finite transitive
/// permutation groups: constructions, maximum-set computation, and a
/// replayable verification manifest.
#[derive(Parser)]
#[command(name = "ekr", version, disable_help_subcommand = true)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Enumeration budget: the maximum number of group elements or
    /// cosets any single closure is allowed to produce.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    cap: usize,
    /// Largest group order for which the exact clique search runs.
    #[arg(long, global = true, default_value_t = 2500)]
    clique_cap: usize,
    /// Budget for enumerating maximum intersecting sets (strict-EKR).
    #[arg(long, global = true, default_value_t = 10_000)]
    enum_limit: usize,
    /// Worker threads for the verification manifest. Falls back to
    /// the EKR_WORKERS environment variable, then to 1.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output format: json, csv, or table.
    #[arg(long, global = true, default_value = "json")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and print its metrics and subgroup
    /// orders.
    Construct {
        /// One of: nobo, agl-example, wreath, asc, table1, psl2,
        /// pglexam.
        id: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run EKR checks on a construction or on a group description
    /// read from a file.
    Analyze {
        /// Construction id (omit when using --input).
        id: Option<String>,
        /// JSON group description: {"schema": "ekr/1", "kind":
        /// "group", "degree": n, "generators": ["(0 1 2)", ...]}.
        #[arg(long, conflicts_with = "id")]
        input: Option<PathBuf>,
        /// Comma-separated checks: max, strict, sharply, frobenius,
        /// prime-power.
        #[arg(long, default_value = "max")]
        checks: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Replay the claim manifest and report pass/fail per claim.
    VerifyPaper {
        /// Run a single claim by id.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args, Default)]
struct ParamArgs {
    /// Field characteristic.
    #[arg(long)]
    p: Option<u64>,
    /// Extension degree over the prime field.
    #[arg(long)]
    d: Option<usize>,
    /// Second extension parameter (agl-example).
    #[arg(long)]
    f: Option<usize>,
    /// Table row (table1).
    #[arg(long)]
    row: Option<usize>,
    /// Prime power q (asc, pglexam).
    #[arg(long)]
    q: Option<u64>,
    /// Subgroup family (psl2): borel, d-minus, d-plus, a4, s4, a5.
    #[arg(long)]
    family: Option<String>,
    /// Base degree (wreath).
    #[arg(long)]
    n: Option<usize>,
    /// Number of wreath factors, a prime (wreath).
    #[arg(long)]
    ell: Option<usize>,
}

impl From<ParamArgs> for ConstructParams {
    fn from(a: ParamArgs) -> ConstructParams {
        ConstructParams {
            p: a.p,
            d: a.d,
            f: a.f,
            row: a.row,
            q: a.q,
            family: a.family,
            n: a.n,
            ell: a.ell,
        }
    }
}

fn run_config(global: &GlobalArgs) -> Result<(RunConfig, OutputFormat), CliError> {
    let format: OutputFormat = global
        .format
        .parse()
        .map_err(|e: String| CliError::Invalid(e))?;
    let workers = match global.workers {
        Some(w) => w,
        None => match std::env::var("EKR_WORKERS") {
            Ok(text) => text
                .parse::<usize>()
                .map_err(|_| CliError::Invalid(format!("EKR_WORKERS={text:?} is not a number")))?,
            Err(_) => 1,
        },
    };
    if workers == 0 {
        return Err(CliError::Invalid("--workers must be at least 1".into()));
    }
    Ok((
        RunConfig {
            cap: global.cap,
            clique_cap: global.clique_cap,
            enum_limit: global.enum_limit,
            workers,
            format,
        },
        format,
    ))
}

fn run(cli: Cli) -> Result<String, CliError> {
    let (cfg, format) = run_config(&cli.global)?;
    match cli.command {
        Command::Construct { id, params } => {
            let built = build_construction(&id, &params.into(), &cfg)?;
            Ok(construction_doc(&built).render(format))
        }
        Command::Analyze {
            id,
            input,
            checks,
            params,
        } => {
            let checks: BTreeSet<Check> = parse_checks(&checks)?;
            let (action, name) = match (&id, &input) {
                (Some(id), None) => {
                    let built = build_construction(id, &params.into(), &cfg)?;
                    (action_of(&built)?.clone(), built.main.name.clone())
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        CliError::Invalid(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let action = parse_group_description(&text, cfg.cap)?;
                    let name = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| "input".to_string());
                    (action, name)
                }
                _ => {
                    return Err(CliError::Invalid(
                        "analyze needs a construction id or --input FILE".into(),
                    ))
                }
            };
            let (doc, _) = analyze_action(&action, &name, &checks, &cfg)?;
            let rendered = render_report(&doc, format)?;
            if any_not_computed(&doc) {
                // Print the partial report, then exit 4.
                println!("{rendered}");
                return Err(CliError::NotComputed(
                    "some verdicts stopped at a cap; raise --enum-limit or --cap".into(),
                ));
            }
            Ok(rendered)
        }
        Command::VerifyPaper { only } => {
            let doc = run_manifest(only.as_deref(), &cfg)?;
            let rendered = render_manifest(&doc, format);
            if doc.all_pass {
                Ok(rendered)
            } else {
                println!("{rendered}");
                let failing: Vec<&str> = doc
                    .claims
                    .iter()
                    .filter(|c| c.status != "pass")
                    .map(|c| c.id.as_str())
                    .collect();
                Err(CliError::VerifyFailed(format!(
                    "failing claims: {}",
                    failing.join(", ")
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
