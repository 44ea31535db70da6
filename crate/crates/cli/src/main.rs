//! The `tangled` binary: counting, enumeration, and the vacillating-tableau
//! bijection for tangled diagrams, with machine-readable output.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! or input errors. Diagnostics go to stderr; stdout carries only results.

mod verify;

use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use tangled::{
    beta, beta_inv, count_no_isolated, count_tableaux, sequence_table, tangled_diagrams, Count,
    Move, TangledDiagram, VacillatingTableau,
};

#[derive(Parser)]
#[command(
    name = "tangled",
    version,
    about = "Tangled diagrams over [n]: exact counts, exhaustive enumeration, and the bijection with vacillating tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count k-noncrossing tangled diagrams over [n].
    Count(CountArgs),
    /// Emit the table of k-noncrossing counts for n = 1..=max-n.
    Table(TableArgs),
    /// Stream all diagrams over [n] as JSON lines, optionally filtered.
    Enumerate(EnumerateArgs),
    /// Map a diagram to its vacillating tableau or back (JSON on stdin).
    Map(MapArgs),
    /// Run a verification suite and report pass/fail per property.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct CountArgs {
    /// Forbid k mutually crossing arcs (k >= 2).
    #[arg(long)]
    k: usize,
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// Count only diagrams without isolated vertices.
    #[arg(long)]
    no_isolated: bool,
    #[arg(long, value_enum, default_value_t = Method::Formula)]
    method: Method,
    /// Cap for the exhaustive method.
    #[arg(long, default_value_t = tangled::DEFAULT_DIAGRAM_BOUND)]
    max_brute_n: usize,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Method {
    /// Matching counts summed over split ground sets.
    Formula,
    /// DP over vacillating-tableau shapes.
    VtDp,
    /// Exhaustive generation with crossing-number filtering.
    Brute,
}

#[derive(clap::Args)]
struct TableArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(ValueEnum, Clone, Copy)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Keep only diagrams with crossing number below k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ClassFilter::All)]
    class: ClassFilter,
    #[arg(long, value_enum, default_value_t = StreamFormat::JsonLines)]
    format: StreamFormat,
    #[arg(long, default_value_t = tangled::DEFAULT_DIAGRAM_BOUND)]
    max_brute_n: usize,
}

#[derive(ValueEnum, Clone, Copy)]
enum ClassFilter {
    All,
    Matching,
    Partition,
    Braid,
}

#[derive(ValueEnum, Clone, Copy)]
enum StreamFormat {
    JsonLines,
}

#[derive(clap::Args)]
struct MapArgs {
    #[arg(long, value_enum)]
    direction: Direction,
}

#[derive(ValueEnum, Clone, Copy)]
enum Direction {
    /// Diagram JSON in, vacillating-tableau JSON out.
    ToTableau,
    /// Vacillating-tableau JSON in, diagram JSON out.
    ToDiagram,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: verify::Suite,
    #[arg(long)]
    n: usize,
    /// Cap for the exhaustive parts of the suites.
    #[arg(long, default_value_t = tangled::DEFAULT_DIAGRAM_BOUND)]
    max_brute_n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Count(args) => {
            println!("{}", count(&args)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table(args) => {
            require_k(args.k)?;
            let table = sequence_table(args.k, args.max_n);
            match args.format {
                TableFormat::Csv => print!("{}", table.to_csv()),
                TableFormat::Json => println!("{}", serde_json::to_string(&table)?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate(args) => {
            if let Some(k) = args.k {
                require_k(k)?;
            }
            let StreamFormat::JsonLines = args.format;
            let stdout = std::io::stdout().lock();
            let mut out = std::io::BufWriter::new(stdout);
            for diagram in tangled_diagrams(args.n, args.max_brute_n)? {
                if let Some(k) = args.k {
                    if diagram.crossing_number() >= k {
                        continue;
                    }
                }
                let keep = match args.class {
                    ClassFilter::All => true,
                    ClassFilter::Matching => diagram.classify().perfect_matching,
                    ClassFilter::Partition => diagram.classify().partition,
                    ClassFilter::Braid => diagram.classify().braid,
                };
                if keep {
                    serde_json::to_writer(&mut out, &diagram)?;
                    writeln!(out)?;
                }
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Map(args) => {
            let mut input = String::new();
            std::io::stdin()
                .read_to_string(&mut input)
                .context("reading stdin")?;
            let output = match args.direction {
                Direction::ToTableau => {
                    let diagram: TangledDiagram =
                        serde_json::from_str(&input).context("parsing diagram JSON")?;
                    serde_json::to_string(&beta_inv(&diagram)?)?
                }
                Direction::ToDiagram => {
                    let tableau: VacillatingTableau =
                        serde_json::from_str(&input).context("parsing tableau JSON")?;
                    serde_json::to_string(&beta(&tableau)?)?
                }
            };
            println!("{output}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let passed = verify::run(args.suite, args.n, args.max_brute_n)?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn require_k(k: usize) -> Result<()> {
    if k < 2 {
        bail!("--k must be at least 2, got {k}");
    }
    Ok(())
}

fn count(args: &CountArgs) -> Result<Count> {
    require_k(args.k)?;
    match args.method {
        Method::Formula => Ok(if args.no_isolated {
            count_no_isolated(args.k, args.n)
        } else {
            tangled::count_all(args.k, args.n)
        }),
        Method::VtDp => {
            // An isolated vertex is exactly a do-nothing step.
            let moves: Vec<Move> = Move::ALL
                .into_iter()
                .filter(|m| !(args.no_isolated && *m == Move::NothingNothing))
                .collect();
            Ok(count_tableaux(args.n, Some(args.k - 1), &moves))
        }
        Method::Brute => {
            let mut total = 0usize;
            for diagram in tangled_diagrams(args.n, args.max_brute_n)? {
                if diagram.crossing_number() < args.k
                    && !(args.no_isolated && diagram.has_isolated_vertex())
                {
                    total += 1;
                }
            }
            Ok(Count::from(total))
        }
    }
}
