//! `observer`: simulate, compare, measure and minimize finite observers.
//!
//! Exit codes: 0 success (or EQUIVALENT), 1 domain negative or error,
//! 2 usage error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "observer", version, about = "Finite observer analyses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceFormat {
    Tsv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Frontier {
    Overwrite,
    Gate,
}

#[derive(Subcommand)]
enum Command {
    /// Run an observer coupled to an environment and print the trace.
    Simulate {
        #[arg(long)]
        observer: PathBuf,
        #[arg(long)]
        env: PathBuf,
        /// Starting state and environment state, as `X0,S0`.
        #[arg(long)]
        init: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        trace: TraceFormat,
    },
    /// Decide whether two observers are isomorphic.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        /// Require the state map to send `XA` to `XB`, as `XA,XB`.
        #[arg(long)]
        anchors: Option<String>,
    },
    /// Report the complexity measure and reduced sizes.
    Complexity {
        file: PathBuf,
        /// Report in bits instead of nats.
        #[arg(long)]
        bits: bool,
    },
    /// Write the behaviorally minimized observer.
    Minimize {
        file: PathBuf,
        /// Output path; standard output when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Steps until the closed loop settles or reaches a goal.
    Adapt {
        #[arg(long)]
        observer: PathBuf,
        #[arg(long)]
        env: PathBuf,
        #[arg(long)]
        init: String,
        /// Disjunction (`|`) of conjunctions (`&`) of `x=STATE` / `s=ENV_STATE`.
        #[arg(long)]
        goal: Option<String>,
        /// Step limit; defaults to the number of joint states.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Expected hitting time of a goal set in a Markov chain.
    Hit {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        start: usize,
        /// Comma-separated goal state indices.
        #[arg(long, value_delimiter = ',', required = true)]
        goal: Vec<usize>,
    },
    /// Evolve an elementary cellular automaton, optionally with an embedded observer.
    Ca {
        #[arg(long)]
        rule: u32,
        #[arg(long)]
        width: usize,
        #[arg(long)]
        steps: usize,
        /// `single`, or a row of `.`/`#` (or `0`/`1`) cells of the given width.
        #[arg(long)]
        init: String,
        /// Observer document to embed; needs 2^k states and 4 inputs and outputs.
        #[arg(long, requires = "at")]
        embed: Option<PathBuf>,
        /// First cell of the embedded block.
        #[arg(long, requires = "embed")]
        at: Option<usize>,
        /// How the observer's output acts on the frontier cells.
        #[arg(long, value_enum, default_value = "overwrite")]
        frontier: Frontier,
        /// Also write the diagram as a binary PBM image.
        #[arg(long)]
        pbm: Option<PathBuf>,
    },
    /// Print the canonical serialization of an observer, environment or chain document.
    Fmt { file: PathBuf },
    /// Parse a document and, with an environment, check the minimality conditions.
    Validate {
        #[arg(long)]
        observer: PathBuf,
        #[arg(long, requires = "init")]
        env: Option<PathBuf>,
        #[arg(long, requires = "env")]
        init: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
