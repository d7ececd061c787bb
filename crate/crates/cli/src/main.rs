use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bourbaki_cli::{analyze_document, batch, parse_field, table, verify, CliError, Options};
use bourbaki_core::bourbaki::EpsilonChoice;
use bourbaki_core::polyring::Field;

#[derive(Parser)]
#[command(
    name = "bourbaki",
    version,
    about = "Bourbaki degrees of reduced plane projective curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coefficient field: qq, fp or fp=<p>.
    #[arg(long, global = true, default_value = "qq", value_parser = field_arg)]
    field: Field,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Use the i-th minimal syzygy of least degree instead of the smallest.
    #[arg(long, global = true)]
    epsilon: Option<usize>,
    /// Record wall-clock time per stage in reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one curve.
    Analyze {
        #[arg(long)]
        curve: String,
    },
    /// Analyze every curve of a JSON-lines file.
    Batch {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare computed and expected degrees on the built-in corpus.
    #[command(name = "paper-table")]
    Table,
    /// Cross-check one curve against the brute-force oracle.
    Verify {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 10)]
        max_check_degree: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn field_arg(s: &str) -> Result<Field, String> {
    parse_field(s).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let opts = Options {
        field: cli.field,
        seed: cli.seed,
        epsilon: cli
            .epsilon
            .map_or(EpsilonChoice::Smallest, EpsilonChoice::Index),
        timings: cli.timings,
    };
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Analyze { curve } => {
            let (_, doc) = analyze_document(&curve, &opts)?;
            if json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            Ok(if doc.consistent() { 0 } else { 2 })
        }
        Command::Batch { input, out } => {
            let rows = batch::run_batch(&input, &out, &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                print!("{}", batch::render(&rows));
            }
            Ok(batch::exit_code(&rows))
        }
        Command::Table => {
            let rows = table::degree_table(&opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                print!("{}", table::render(&rows));
            }
            Ok(if rows.iter().all(|r| r.ok) { 0 } else { 2 })
        }
        Command::Verify {
            curve,
            max_check_degree,
        } => {
            let (_, checks) = verify::verify(&curve, &opts, max_check_degree)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&checks)?);
            } else {
                print!("{}", verify::render(&checks));
            }
            Ok(if checks.iter().all(|c| c.passed) {
                0
            } else {
                2
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; 2 is reserved for failed checks
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
