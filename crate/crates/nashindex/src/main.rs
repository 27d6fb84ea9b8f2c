use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nashindex::{parse_problem_file, run, Command, Flags, RunError};

/// Homological indices of 1-forms on hypersurface germs.
#[derive(Parser)]
#[command(name = "nashindex", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Homological index of the form at the origin.
    Index(Common),
    /// Milnor number of the function on a smooth graph hypersurface.
    Milnor(Common),
    /// Whether the form has an isolated zero on the regular part.
    Check(Common),
    /// Independent cross-checks.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Critical points of f - t l on the regular part tending to the origin.
    BranchCount(Common),
}

#[derive(Args)]
struct Common {
    /// Problem file; standard input when omitted.
    file: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// Linear form of the morsification.
    #[arg(long, value_name = "EXPR")]
    linear: Option<String>,
    #[arg(long, value_name = "D")]
    bound_override: Option<u32>,
    /// Skip the isolated-zero check.
    #[arg(long)]
    force: bool,
    #[arg(long, value_name = "N")]
    work_limit: Option<u64>,
}

fn read_input(file: &Option<PathBuf>) -> Result<String, RunError> {
    let mut text = String::new();
    match file {
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| RunError::Usage(format!("{}: {e}", path.display())))?;
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| RunError::Usage(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn execute(cmd: Command, args: Common) -> Result<String, RunError> {
    let text = read_input(&args.file)?;
    let file = parse_problem_file(&text)?;
    let flags = Flags {
        json: args.json,
        linear: args.linear,
        bound_override: args.bound_override,
        force: args.force,
        work_limit: args.work_limit,
    };
    run(cmd, &file, &flags)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (cmd, args) = match cli.command {
        Cmd::Index(a) => (Command::Index, a),
        Cmd::Milnor(a) => (Command::Milnor, a),
        Cmd::Check(a) => (Command::Check, a),
        Cmd::Oracle { oracle: OracleCmd::BranchCount(a) } => (Command::BranchCount, a),
    };
    match execute(cmd, args) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
