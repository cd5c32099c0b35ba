use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use trifree_cli::commands::{self, CommandError, Ctx, ExperimentArgs, OutputFormat};
use trifree_cli::sweep::{SweepConfig, SweepSource};
use trifree_core::Budget;

/// Exact solvers, constructions and enumeration pipelines for the acyclic
/// and dichromatic numbers of oriented triangle-free graphs.
#[derive(Parser)]
#[command(name = "trifree", version, about)]
struct Cli {
    /// Node budget for exhaustive searches
    #[arg(long, global = true, default_value_t = 1_000_000_000)]
    budget: u64,
    /// Output format for machine consumption
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    G6,
    D6,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Dichromatic number, or k-dicolourability when --k is given
    Dichromatic {
        #[arg(long)]
        k: Option<usize>,
        /// digraph6 input file ('-' for stdin)
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Exact acyclic number with witness
    Acyclic {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check chromatic = k and that every vertex/arc deletion drops it
    Dicritical {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// m-backward-blowup of each input digraph
    Blowup {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Verify the 25-vertex construction: dichromatic number 3 and
    /// 3-dicriticality, with certificates
    VerifyD25 {
        /// Write the certificate documents (one JSON line each) here
        #[arg(long)]
        certificates: Option<PathBuf>,
    },
    /// Degree-halving vertex order
    Order {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Directed linear forests: exact maximum (digraph6 input) or the
    /// minimising orientation (graph6 input)
    Linforest {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Enumerate triangle-free graphs, one graph6 line each
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_deg: usize,
    },
    /// Decomposition sweep over internal enumeration or graph6 files
    Sweep {
        /// Internal enumeration up to this order
        #[arg(long, conflicts_with = "input")]
        n_max: Option<usize>,
        /// External graph6 files
        #[arg(long, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Worker threads (default: the TRIFREE_THREADS variable, then
        /// available parallelism)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Sparse-orientation experiment and the acyclic-number demonstration
    Experiment {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        /// Edge probability of the random triangle-free model
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0.513)]
        c0: f64,
    },
    /// Evaluate the local-lemma constant conditions with margins
    Constants {
        #[arg(long, default_value_t = 0.513)]
        c0: f64,
        #[arg(long, default_value_t = 3.43)]
        c1: f64,
        #[arg(long, default_value_t = 3.1)]
        c2: f64,
        #[arg(long, default_value_t = 1e-4)]
        eps: f64,
    },
    /// Extremal acyclic/dichromatic values over all oriented triangle-free
    /// graphs of tiny order
    Extremal {
        #[arg(long)]
        n: usize,
    },
    /// Re-validate a certificate file (one JSON document per line)
    VerifyCert {
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn threads_from(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("TRIFREE_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CommandError> {
    let format = match cli.format {
        Format::Json => OutputFormat::Json,
        _ => OutputFormat::Human,
    };
    let mut ctx = Ctx {
        out,
        format,
        budget: Budget::new(cli.budget),
    };
    match cli.command {
        Command::Dichromatic { k, input } => {
            let digraphs = commands::read_digraphs(&input)?;
            commands::dichromatic(&mut ctx, &digraphs, k)
        }
        Command::Acyclic { input } => {
            let digraphs = commands::read_digraphs(&input)?;
            commands::acyclic_cmd(&mut ctx, &digraphs)
        }
        Command::Dicritical { k, input } => {
            let digraphs = commands::read_digraphs(&input)?;
            commands::dicritical(&mut ctx, &digraphs, k)
        }
        Command::Blowup { m, input } => {
            let digraphs = commands::read_digraphs(&input)?;
            commands::blowup(&mut ctx, &digraphs, m)
        }
        Command::VerifyD25 { certificates } => match certificates {
            Some(path) => {
                let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
                let code = commands::verify_d25(&mut ctx, Some(&mut file))?;
                std::io::Write::flush(&mut file)?;
                Ok(code)
            }
            None => commands::verify_d25(&mut ctx, None),
        },
        Command::Order { input } => {
            let digraphs = commands::read_digraphs(&input)?;
            commands::order_cmd(&mut ctx, &digraphs)
        }
        Command::Linforest { input } => commands::linforest_cmd(&mut ctx, &input),
        Command::Enumerate { n, min_deg } => commands::enumerate_cmd(&mut ctx, n, min_deg),
        Command::Sweep {
            n_max,
            input,
            checkpoint,
            threads,
        } => {
            let source = match (n_max, input.is_empty()) {
                (Some(n), true) => SweepSource::Internal { n_max: n },
                (None, false) => SweepSource::Files(input),
                _ => {
                    return Err(CommandError::Usage(
                        "pass exactly one of --n-max or --input".into(),
                    ))
                }
            };
            let config = SweepConfig {
                threads: threads_from(threads),
                checkpoint,
            };
            commands::sweep_cmd(&mut ctx, &source, &config)
        }
        Command::Experiment {
            n,
            seed,
            trials,
            edge_prob,
            c0,
        } => commands::experiment(
            &mut ctx,
            &ExperimentArgs {
                n,
                seed,
                trials,
                edge_prob,
                c0,
            },
        ),
        Command::Constants { c0, c1, c2, eps } => commands::constants(&mut ctx, c0, c1, c2, eps),
        Command::Extremal { n } => commands::extremal_cmd(&mut ctx, n),
        Command::VerifyCert { input } => commands::verify_cert_cmd(&mut ctx, &input),
    }
}

fn main() {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let code = match output {
        Some(path) => {
            let file = match std::fs::File::create(&path) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("trifree: cannot open {}: {e}", path.display());
                    std::process::exit(commands::EXIT_USAGE);
                }
            };
            let mut writer = std::io::BufWriter::new(file);
            let code = dispatch(cli, &mut writer);
            let _ = writer.flush();
            code
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            let code = dispatch(cli, &mut lock);
            let _ = lock.flush();
            code
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> i32 {
    match run(cli, out) {
        Ok(code) => code,
        Err(CommandError::Usage(msg)) => {
            eprintln!("trifree: {msg}");
            commands::EXIT_USAGE
        }
        Err(e) => {
            eprintln!("trifree: {e}");
            commands::EXIT_USAGE
        }
    }
}
