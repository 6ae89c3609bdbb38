//! Command-line front end.
//!
//! Exit codes: 0 success or positive verdict, 1 input or usage error,
//! 2 resource limit exceeded, 3 negative verdict.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::algebra::{green_report_with_cap, MonoidError, DEFAULT_ELEMENT_CAP};
use crate::automata::{
    minimize, parse_dfa, sup_variation, sup_variation_witness, variation, Dfa, SupVariation,
};
use crate::decision::{
    is_lmo_member, verify_construction_with_budget, DecisionError, DEFAULT_WORD_BUDGET,
};
use crate::quantum::{
    build_mon1qfa, cutpoint_params, emit_mon1qfa, parse_mon1qfa, Mon1qfa, PtSpec,
};
use crate::Symbol;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "moqfa",
    version,
    about = "Measure-only quantum automata and their language class"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PatternArgs {
    /// Pattern letters a₁ … aₖ (adjacent letters must differ)
    #[arg(long, num_args = 0.., required = true)]
    letters: Vec<String>,
    /// Alphabet as a string of single-character symbols, e.g. `ab`
    #[arg(long)]
    alphabet: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the automaton for a subsequence pattern
    Synth {
        #[command(flatten)]
        pattern: PatternArgs,
        /// Write the automaton in text form to this path
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Acceptance probability of a word
    Prob {
        #[arg(long, num_args = 0..)]
        letters: Option<Vec<String>>,
        #[arg(long)]
        alphabet: Option<String>,
        /// Automaton file previously written by `synth --emit`
        #[arg(long, conflicts_with_all = ["letters", "alphabet"])]
        qfa: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Check the construction exhaustively on all short words
    Verify {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long)]
        maxlen: usize,
        /// Maximum number of words to enumerate
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        budget: u64,
    },
    /// Decide whether a DFA's language is recognized by some measure-only automaton
    Check { dfa: PathBuf },
    /// Syntactic monoid and Green's-relation properties of a DFA's language
    Monoid {
        dfa: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
    },
    /// Variation of a word, or its supremum over all words
    Variation {
        dfa: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
}

/// A failure with its exit code; the message goes to standard error.
struct Failure {
    code: i32,
    message: String,
}

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: e.to_string(),
    }
}

impl From<MonoidError> for Failure {
    fn from(e: MonoidError) -> Self {
        Failure {
            code: EXIT_RESOURCE,
            message: e.to_string(),
        }
    }
}

impl From<DecisionError> for Failure {
    fn from(e: DecisionError) -> Self {
        let code = match e {
            DecisionError::Budget { .. } => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn letters_of(values: &[String]) -> Vec<Symbol> {
    values.iter().flat_map(|v| v.chars()).collect()
}

fn spec_of(letters: &[String], alphabet: &str) -> Result<PtSpec, Failure> {
    PtSpec::new(letters_of(letters), alphabet.chars().collect()).map_err(input_error)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_dfa(path: &Path) -> Result<Dfa, Failure> {
    parse_dfa(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| input_error(e);
    match command {
        Command::Synth { pattern, emit } => {
            let spec = spec_of(&pattern.letters, &pattern.alphabet)?;
            let a = build_mon1qfa(&spec).map_err(input_error)?;
            let (lambda, delta) = cutpoint_params(&spec);
            writeln!(out, "dim: {}", a.dimension()).map_err(io)?;
            writeln!(out, "lambda: {lambda:.12}").map_err(io)?;
            writeln!(out, "delta: {delta:.12}").map_err(io)?;
            if let Some(path) = emit {
                std::fs::write(&path, emit_mon1qfa(&a))
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                writeln!(out, "emitted: {}", path.display()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Prob {
            letters,
            alphabet,
            qfa,
            word,
        } => {
            let a: Mon1qfa = match (qfa, letters, alphabet) {
                (Some(path), _, _) => parse_mon1qfa(&read(&path)?)
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?,
                (None, Some(letters), Some(alphabet)) => {
                    build_mon1qfa(&spec_of(&letters, &alphabet)?).map_err(input_error)?
                }
                _ => {
                    return Err(input_error(
                        "prob needs either --qfa <file> or both --letters and --alphabet",
                    ))
                }
            };
            let word: Vec<Symbol> = word.chars().collect();
            let p = a.acceptance_probability(&word).map_err(input_error)?;
            writeln!(out, "{p:.12}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            pattern,
            maxlen,
            budget,
        } => {
            let spec = spec_of(&pattern.letters, &pattern.alphabet)?;
            let report = verify_construction_with_budget(&spec, maxlen, budget)?;
            write!(out, "{report}").map_err(io)?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Check { dfa } => {
            let d = load_dfa(&dfa)?;
            let diagnosis = is_lmo_member(&d);
            write!(out, "{diagnosis}").map_err(io)?;
            Ok(if diagnosis.verdict {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Monoid { dfa, cap } => {
            let min = minimize(&load_dfa(&dfa)?);
            let report = green_report_with_cap(&min, cap)?;
            writeln!(out, "minimal_states: {}", min.state_count()).map_err(io)?;
            write!(out, "{report}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Variation { dfa, word } => {
            let min = minimize(&load_dfa(&dfa)?);
            match word {
                Some(w) => {
                    let w: Vec<Symbol> = w.chars().collect();
                    let v = variation(&min, &w).map_err(input_error)?;
                    writeln!(out, "variation: {v}").map_err(io)?;
                }
                None => {
                    let sup = sup_variation(&min);
                    writeln!(out, "sup: {sup}").map_err(io)?;
                    if let (SupVariation::Finite(_), Some(w)) = (sup, sup_variation_witness(&min)) {
                        let w: String = w.into_iter().collect();
                        let shown = if w.is_empty() { "ε".to_string() } else { w };
                        writeln!(out, "witness: {shown}").map_err(io)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
