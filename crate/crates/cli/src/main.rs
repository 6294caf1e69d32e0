mod commands;
mod output;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{Format, Report};

#[derive(Parser)]
#[command(name = "tymrep", version, about = "Exact braid and string link representation calculator")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a representation on a braid word.
    Eval {
        /// burau, tym, wtym, reduced-lm3 or onedim:<unit>.
        #[arg(long)]
        rep: String,
        /// Braid word file.
        #[arg(long)]
        word: PathBuf,
        /// Variable substitutions `var=poly`; variables the ring lacks are ignored.
        #[arg(long, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Tong-Yang-Ma invariant of a (welded) string link.
    Invariant {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[command(flatten)]
        input: Input,
        /// Skip the self-writhe correction.
        #[arg(long)]
        no_correction: bool,
    },
    /// Linking data of a (welded) string link.
    Linking {
        #[command(flatten)]
        input: Input,
    },
    /// Compare a linking-number kernel criterion with the invariant.
    KernelCheck {
        #[arg(long, value_parser = ["318", "319", "48", "49"])]
        thm: String,
        #[command(flatten)]
        input: Input,
    },
    /// Long-Moody constructions.
    Lm {
        #[command(subcommand)]
        command: LmCommand,
    },
    /// Batteries of reference checks.
    Paper {
        #[command(subcommand)]
        command: PaperCommand,
    },
}

#[derive(Subcommand)]
enum LmCommand {
    /// Print the generator images of a Long-Moody representation of B_n.
    Build {
        /// tym, burau, onedim:<unit> or eta.
        #[arg(long)]
        source: String,
        #[arg(long)]
        n: usize,
        /// Apply q^{-1} ⊗ LM(q ⊗ -).
        #[arg(long)]
        q_twist: bool,
    },
    /// Check the splitting of LM_q(TYM_{n+1}).
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Probe absolute irreducibility over a prime field.
    Irreducible {
        /// reduced-lm3, burau:<n>, tym:<n>, lm-eta:<n> or lm-tym:<n>.
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 10007)]
        prime: u64,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Evaluate the Burau kernel words under Bur, LM(TYM) and the twisted LM_q(TYM).
    KernelWords,
}

#[derive(Subcommand)]
enum PaperCommand {
    /// Run every reference check and report PASS/FAIL.
    Reproduce,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Braid word file.
    #[arg(long)]
    word: Option<PathBuf>,
    /// Diagram file.
    #[arg(long)]
    diagram: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    #[value(name = "2var")]
    TwoVar,
    Multi,
    W3,
    Wmulti,
}

impl From<ModeArg> for tymrep::Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::TwoVar => tymrep::Mode::TwoVar,
            ModeArg::Multi => tymrep::Mode::Multi,
            ModeArg::W3 => tymrep::Mode::Welded3,
            ModeArg::Wmulti => tymrep::Mode::WeldedMulti,
        }
    }
}

/// A failure with its exit status: 1 for domain errors, 2 for parse errors.
#[derive(Debug)]
pub enum Failure {
    Domain(String),
    Parse(String),
}

impl From<tymrep::Error> for Failure {
    fn from(e: tymrep::Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let f = cli.format;
    match cli.command {
        Command::Eval { rep, word, spec } => commands::eval(f, &rep, &word, &spec),
        Command::Invariant { mode, input, no_correction } => {
            commands::invariant(f, mode.into(), &input.load()?, !no_correction)
        }
        Command::Linking { input } => commands::linking(f, &input.load()?),
        Command::KernelCheck { thm, input } => commands::kernel_check(f, &thm, &input.load()?),
        Command::Lm { command } => match command {
            LmCommand::Build { source, n, q_twist } => commands::lm_build(f, &source, n, q_twist),
            LmCommand::Decompose { n } => commands::lm_decompose(f, n),
            LmCommand::Irreducible { rep, prime, trials } => commands::lm_irreducible(f, &rep, prime, trials, cli.seed),
            LmCommand::KernelWords => commands::lm_kernel_words(f),
        },
        Command::Paper { command: PaperCommand::Reproduce } => reproduce::run(f, cli.seed),
    }
}

impl Input {
    fn load(&self) -> Result<tymrep::Diagram, Failure> {
        match (&self.word, &self.diagram) {
            (Some(p), _) => Ok(tymrep::Diagram::from_word(&commands::read_word(p)?)),
            (_, Some(p)) => Ok(tymrep::Diagram::parse(&commands::read(p)?)?),
            _ => unreachable!("clap requires one input"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(r) => {
            print!("{}", r.out);
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
