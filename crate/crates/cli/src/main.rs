use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use omin::suites::{self, Options, DEFAULT_TRIALS};

#[derive(Parser)]
#[command(name = "omin", version, about = "Exact verification of minimal-orbit, quiver and triality constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a JSON report.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Overrides the positional suite name.
        #[arg(long = "suite", value_enum)]
        filter: Option<Suite>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// JSON is the only output format; the flag is accepted for compatibility.
        #[arg(long, default_value_t = true)]
        json: bool,
        /// Include wall-clock timings, which makes output vary between runs.
        #[arg(long)]
        timings: bool,
    },
    /// Print exact random samples as a JSON array.
    Sample {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Chevalley,
    Triality,
    Kostant,
    Bridge,
    Membership,
    Kks,
    Weyl,
    Affinize,
    Flags,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Orbit,
    Quiver,
    Window,
}

fn name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, filter, seed, trials, json: _, timings } => {
            let suite = name(filter.unwrap_or(suite));
            let mut report = suites::run(&suite, Options { seed, trials }).expect("suite names come from the enum");
            if !timings {
                report = report.without_timings();
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Sample { kind, seed, count } => {
            let out = suites::sample(&name(kind), seed, count).expect("sample kinds come from the enum");
            println!("{}", serde_json::to_string_pretty(&out).expect("samples serialize"));
            ExitCode::SUCCESS
        }
    }
}
