use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use coxkit_cli::{render, run_text, CliError, Options, Subcommand};

#[derive(Parser)]
#[command(name = "coxkit", version, about = "Exact computations with affine monoids, toric Cox rings and graded automorphisms")]
struct Cli {
    command: Subcommand,
    /// Input JSON file, or `-` for standard input.
    input: PathBuf,
    /// Bound on monoid element size in bounded searches.
    #[arg(long, default_value_t = coxkit::monoids::DEFAULT_DEPTH)]
    depth: u32,
    /// Maximum number of group elements during closure.
    #[arg(long, default_value_t = coxkit::finite_quotient::DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    pretty: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = if cli.input.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(&cli.input)
    };
    let (out, code) = match text {
        Ok(text) => run_text(cli.command, &text, &Options { depth: cli.depth, cap: cli.cap }, cli.pretty),
        Err(e) => {
            let err = CliError::Malformed(format!("cannot read {}: {e}", cli.input.display()));
            (render(&err.to_json(), cli.pretty), err.exit_code())
        }
    };
    println!("{out}");
    ExitCode::from(code as u8)
}
