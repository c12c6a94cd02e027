//! `rbsys <command> <model.toml> [flags]`
//!
//! Exit codes: 0 every check passes, 1 a check failed (report still printed),
//! 2 the input could not be used.

use clap::Parser;
use rbsys::cli::{exit_code, run_text, Command, Format, Options};
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "rbsys", version, about = "Exact checks for generalized Rota-Baxter systems")]
struct Args {
    /// validate, check-rbs, characterize, induce, gauge, reduce, cohomology,
    /// deform, aybp, covariant, perturb, averaging, homotopy, quadri
    command: String,
    /// Model document (TOML); `-` reads standard input.
    model: String,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    arity_bound: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "machine")]
    format: String,
    /// aybp|frobenius for `aybp`, left|right|both for `averaging`.
    #[arg(long)]
    mode: Option<String>,
}

fn read(path: &str) -> std::io::Result<String> {
    if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let fail = |msg: String| {
        eprintln!("rbsys: {msg}");
        ExitCode::from(2)
    };
    let cmd: Command = match args.command.parse() {
        Ok(c) => c,
        Err(e) => return fail(e.to_string()),
    };
    let format: Format = match args.format.parse() {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let text = match read(&args.model) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", args.model)),
    };
    let opts = Options {
        max_degree: args.max_degree,
        arity_bound: args.arity_bound,
        order: args.order,
        seed: args.seed,
        mode: args.mode,
    };
    match run_text(cmd, &text, &opts) {
        Ok(rep) => {
            print!("{}", rep.emit(format));
            ExitCode::from(exit_code(&rep) as u8)
        }
        Err(e) => fail(e.to_string()),
    }
}
