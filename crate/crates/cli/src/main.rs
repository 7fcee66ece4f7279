//! `holp`: higher-order link prediction on temporal simplicial datasets.
//!
//! Datasets live in a directory as three aligned text files sharing a name
//! prefix: `<name>-nverts.txt`, `<name>-simplices.txt`, `<name>-times.txt`.
//!
//! Exit codes: 0 on success, 1 on a usage error (bad flag values), 2 when a
//! run fails (missing data, inconsistent files, degenerate evaluation).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use holp_core::{
    dataset_stats, evaluate, generate_synthetic, load_dataset, report_csv, report_json, sweep,
    write_dataset, EvalConfig, EvalReport, Method, DEFAULT_CANDIDATE_LIMIT, MAX_ORDER,
};

#[derive(Parser)]
#[command(name = "holp", version, about = "Higher-order link prediction in temporal simplicial networks", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print node, skeleton-edge, and interaction counts for a dataset.
    Stats {
        /// Directory holding the dataset files.
        #[arg(long)]
        data: PathBuf,
        /// Dataset name (file prefix).
        #[arg(long)]
        name: String,
    },
    /// Rank candidate simplices at one training fraction.
    Predict(PredictArgs),
    /// Rank candidates across several training fractions.
    Sweep(SweepArgs),
    /// Generate a seeded synthetic dataset.
    Synth {
        #[arg(long)]
        seed: u64,
        /// Number of nodes to draw interactions from.
        #[arg(long)]
        nodes: usize,
        /// Number of interactions to generate.
        #[arg(long)]
        interactions: usize,
        /// Largest interaction size.
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Directory to write the three dataset files into.
        #[arg(long)]
        out: PathBuf,
        /// Override the default `synth-<seed>` dataset name.
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Args)]
struct PredictArgs {
    #[arg(long)]
    data: PathBuf,
    #[arg(long)]
    name: String,
    /// Candidate order: 3 for triangles, 4 for tetrahedra.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Fraction of interactions used for training, in (0, 1).
    #[arg(long, default_value_t = 0.8)]
    train_frac: f64,
    /// Comma-separated method names, or `all`.
    #[arg(long, default_value = "all")]
    methods: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Abort if the window has more k-cliques than this.
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_LIMIT)]
    max_candidates: usize,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    data: PathBuf,
    #[arg(long)]
    name: String,
    /// Candidate order: 3 for triangles, 4 for tetrahedra.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Comma-separated training fractions, each in (0, 1).
    #[arg(long, default_value = "0.5,0.6,0.7,0.8")]
    fracs: String,
    /// Comma-separated method names, or `all`.
    #[arg(long, default_value = "all")]
    methods: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Abort if the window has more k-cliques than this.
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_LIMIT)]
    max_candidates: usize,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum CliError {
    Usage(String),
    Run(String),
}

impl From<holp_core::Error> for CliError {
    fn from(e: holp_core::Error) -> Self {
        CliError::Run(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_methods(arg: &str) -> Result<Vec<Method>, CliError> {
    if arg.trim().eq_ignore_ascii_case("all") {
        return Ok(Vec::new()); // empty means every method
    }
    arg.split(',')
        .map(|tok| tok.parse().map_err(|e: holp_core::Error| CliError::Usage(e.to_string())))
        .collect()
}

fn parse_fracs(arg: &str) -> Result<Vec<f64>, CliError> {
    let fracs: Vec<f64> = arg
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid training fraction `{tok}`")))
        })
        .collect::<Result<_, _>>()?;
    if fracs.is_empty() {
        return Err(CliError::Usage("--fracs must list at least one fraction".into()));
    }
    for &f in &fracs {
        check_frac(f)?;
    }
    Ok(fracs)
}

fn check_k(k: usize) -> Result<(), CliError> {
    if k == 3 || k == 4 {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--k must be 3 or 4, got {k}")))
    }
}

fn check_frac(f: f64) -> Result<(), CliError> {
    if f > 0.0 && f < 1.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "training fraction {f} is outside (0, 1)"
        )))
    }
}

fn init_threads(threads: Option<usize>) -> Result<(), CliError> {
    holp_core::init_thread_pool(threads).map_err(CliError::Run)
}

fn emit(reports: &[EvalReport], format: Format, output: Option<&PathBuf>) -> Result<(), CliError> {
    let text = match format {
        Format::Csv => report_csv(reports),
        Format::Json => report_json(reports) + "\n",
    };
    match output {
        Some(path) => fs::write(path, text).map_err(|e| {
            CliError::Run(format!("cannot write {}: {e}", path.display()))
        })?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Stats { data, name } => {
            let ds = load_dataset(&data, &name)?;
            let s = dataset_stats(&ds);
            println!("dataset,nodes,edges,simplices");
            println!("{},{},{},{}", ds.name(), s.nodes, s.skeleton_edges, s.simplices);
            if ds.dropped_oversize() > 0 || ds.dropped_degenerate() > 0 {
                eprintln!(
                    "note: dropped {} oversize and {} degenerate interactions",
                    ds.dropped_oversize(),
                    ds.dropped_degenerate()
                );
            }
        }
        Command::Predict(args) => {
            check_k(args.k)?;
            check_frac(args.train_frac)?;
            let methods = parse_methods(&args.methods)?;
            init_threads(args.threads)?;
            let ds = load_dataset(&args.data, &args.name)?;
            let report = evaluate(
                &ds,
                &EvalConfig {
                    k: args.k,
                    train_fraction: args.train_frac,
                    methods,
                    max_candidates: args.max_candidates,
                },
            )?;
            emit(&[report], args.format, args.output.as_ref())?;
        }
        Command::Sweep(args) => {
            check_k(args.k)?;
            let fracs = parse_fracs(&args.fracs)?;
            let methods = parse_methods(&args.methods)?;
            init_threads(args.threads)?;
            let ds = load_dataset(&args.data, &args.name)?;
            let reports = sweep(&ds, args.k, &fracs, &methods, args.max_candidates)?;
            emit(&reports, args.format, args.output.as_ref())?;
        }
        Command::Synth {
            seed,
            nodes,
            interactions,
            max_order,
            out,
            name,
        } => {
            if !(2..=MAX_ORDER).contains(&max_order) {
                return Err(CliError::Usage(format!(
                    "--max-order must be in 2..={MAX_ORDER}, got {max_order}"
                )));
            }
            if nodes < max_order {
                return Err(CliError::Usage(format!(
                    "--nodes must be at least --max-order ({max_order}), got {nodes}"
                )));
            }
            if interactions == 0 {
                return Err(CliError::Usage("--interactions must be positive".into()));
            }
            let mut ds = generate_synthetic(seed, nodes, interactions, max_order);
            if let Some(n) = &name {
                ds.rename(n);
            }
            write_dataset(&ds, &out)?;
            println!(
                "wrote {} ({} interactions, {} nodes) to {}",
                ds.name(),
                ds.len(),
                ds.node_count(),
                out.display()
            );
        }
    }
    Ok(())
}
