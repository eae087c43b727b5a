use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use conley_cli::{run, Command, Format, Options, EXIT_USER};

#[derive(Parser)]
#[command(name = "conley", version, about = "Conley index, zeta functions and Morse checks for zero-dimensional basic sets")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Common {
    /// System description (JSON).
    file: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Degree for the Morse check.
    #[arg(long)]
    q: Option<usize>,
    /// Largest period enumerated by `verify`.
    #[arg(long, default_value_t = 6)]
    max_enum: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced homological Conley index of each basic set.
    Index(Common),
    /// Jordan block structure of each structure matrix.
    Jordan(Common),
    /// Homology zeta functions and their product.
    Zeta(Common),
    /// Solve the Morse polynomial identity at degree --q.
    Morse(Common),
    /// Cross-check the computations against independent oracles.
    Verify(Common),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USER) } else { ExitCode::SUCCESS };
        }
    };
    let (command, args) = match cli.command {
        Cmd::Index(a) => (Command::Index, a),
        Cmd::Jordan(a) => (Command::Jordan, a),
        Cmd::Zeta(a) => (Command::Zeta, a),
        Cmd::Morse(a) => (Command::Morse, a),
        Cmd::Verify(a) => (Command::Verify, a),
    };
    let opts = Options {
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        q: args.q,
        max_enum: args.max_enum,
    };
    match run(command, &args.file, &opts) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
