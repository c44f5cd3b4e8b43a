use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use m1plus::checks::{self, CheckConfig, PUBLISHED_DIMENSIONS};
use m1plus::fock::graded_dimension;
use m1plus::twisted::top_level_table;
use m1plus::zhu;
use m1plus::{Error, Parity, Sector, Status};

mod expr;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "m1plus", version, about = "Exact verification harness for M(1)+ and its Zhu algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Toplevels,
    Dims,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks and stream one report per check.
    Verify {
        /// Check ids (comma separated or repeated), or "all".
        #[arg(long = "check", value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        /// Weight cutoff for truncated computations.
        #[arg(long, env = "M1PLUS_MAX_WEIGHT", default_value_t = checks::DEFAULT_MAX_WEIGHT)]
        max_weight: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Exit with status 3 when a check is inconclusive.
        #[arg(long)]
        strict: bool,
        /// Add elapsed_ms to JSON records.
        #[arg(long)]
        timings: bool,
        /// Print only the status line of each check.
        #[arg(long, short)]
        quiet: bool,
    },
    /// Reduce an expression in omega and J to a polynomial in x = [ω], y = [J].
    Reduce {
        expression: String,
        #[arg(long, env = "M1PLUS_MAX_WEIGHT", default_value_t = checks::DEFAULT_MAX_WEIGHT)]
        max_weight: u32,
    },
    /// Print the top-level table or the graded dimensions.
    Table {
        #[arg(value_enum)]
        table: Table,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Largest weight for the dimension table.
        #[arg(long, default_value_t = 10)]
        max_weight: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { checks, max_weight, format, strict, timings, quiet } => {
            verify(&checks, max_weight, format, strict, timings, quiet)
        }
        Command::Reduce { expression, max_weight } => reduce(&expression, max_weight),
        Command::Table { table, format, max_weight } => {
            print_table(table, format, max_weight);
            0
        }
    };
    ExitCode::from(code)
}

fn verify(ids: &[String], max_weight: u32, format: Format, strict: bool, timings: bool, quiet: bool) -> u8 {
    let ids = match checks::resolve(ids) {
        Ok(ids) => ids,
        Err(e) => {
            eprintln!("error: {e}; known checks: all, {}", checks::CHECK_IDS.join(", "));
            return EXIT_USAGE;
        }
    };
    let config = CheckConfig { max_weight, ..Default::default() };
    let mut worst = Status::Pass;
    let stdout = io::stdout();
    for id in ids {
        let report = checks::run_check(id, &config).expect("resolved id");
        worst = worst.max(report.status);
        let line = match format {
            Format::Json if timings => report.to_json_line_with_timing() + "\n",
            Format::Json => report.to_json_line() + "\n",
            Format::Text => report.to_text(!quiet),
        };
        let mut out = stdout.lock();
        let _ = out.write_all(line.as_bytes());
        let _ = out.flush();
    }
    match worst {
        Status::Fail => EXIT_FAIL,
        Status::Inconclusive if strict => EXIT_INCONCLUSIVE,
        _ => 0,
    }
}

fn reduce(expression: &str, max_weight: u32) -> u8 {
    let element = match expr::parse(expression) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Some(top) = element.top_weight().filter(|&w| w > max_weight) {
        eprintln!("error: representative has weight {top}, above the cutoff {max_weight}; raise --max-weight");
        return EXIT_USAGE;
    }
    match zhu::reduce(&element, max_weight) {
        Ok(f) => {
            println!("{f}");
            0
        }
        Err(Error::Inconclusive { cutoff }) => {
            println!("inconclusive: no reduction found at cutoff {cutoff}");
            EXIT_INCONCLUSIVE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn print_table(table: Table, format: Format, max_weight: u32) {
    match table {
        Table::Toplevels => {
            let rows = top_level_table().expect("top levels are eigenvectors");
            for row in rows {
                match format {
                    Format::Json => println!(
                        "{}",
                        json!({"module": row.family.to_string(), "top": row.top, "omega": row.omega.to_string(), "J": row.j.to_string()})
                    ),
                    Format::Text => println!(
                        "{:<10} {:<12} ω = {:<10} J = {}",
                        row.family.to_string(),
                        row.top,
                        row.omega.to_string(),
                        row.j
                    ),
                }
            }
        }
        Table::Dims => {
            let dims: Vec<usize> = (0..=max_weight as i64)
                .map(|m| graded_dimension(Sector::Untwisted, &m1plus::exactlin::int(m), Some(Parity::Even)))
                .collect();
            match format {
                Format::Json => {
                    for (m, d) in dims.iter().enumerate() {
                        let published = PUBLISHED_DIMENSIONS.get(m);
                        println!("{}", json!({"m": m, "dim": d, "published": published}));
                    }
                }
                Format::Text => {
                    let row = |f: &dyn Fn(usize) -> String| (0..dims.len()).map(f).collect::<Vec<_>>().join(" ");
                    println!("m   {}", row(&|m| format!("{m:>2}")));
                    println!("dim {}", row(&|m| format!("{:>2}", dims[m])));
                }
            }
        }
    }
}
