use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use seqthy_core::axioms::{check_axioms, AxiomSystem};
use seqthy_core::cert::{check_cert_reason, prove_sigma, ProveError};
use seqthy_core::eval::{eval_sigma, Verdict};
use seqthy_core::hf::{hf_to_snake, snake_to_hf, OrderedSnake};
use seqthy_core::logic::{relativize, translate_ast};
use seqthy_core::snake::{polish_to_tree, snake_to_polish, snake_to_tree, tree_to_snake};

use seqthy::certio::{cert_from_json, cert_to_json};
use seqthy::report::{all_passed, format_report};
use seqthy::text::{
    parse_formula, parse_hf, parse_polish, parse_snake, parse_tree, print_formula, print_hf,
};

/// Sequence theories over the standard model of nested sequences:
/// evaluation, proof certificates, translations and codecs.
#[derive(Parser)]
#[command(name = "seqthy", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a closed Sigma-sentence up to a witness-size budget
    Eval {
        formula: String,
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
    /// Produce a proof certificate for a true closed Sigma-sentence
    Cert {
        formula: String,
        #[arg(long, default_value_t = 4)]
        budget: usize,
        /// Write the certificate here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a certificate file against a sentence
    Check { cert_file: PathBuf, formula: String },
    /// Translate a formula into another signature
    #[command(subcommand)]
    Translate(TranslateCommand),
    /// Relativize a formula to a class given by a one-variable formula
    Relativize { formula: String, class: String },
    /// Encode a value as a snake
    #[command(subcommand)]
    Encode(EncodeCommand),
    /// Decode a snake
    #[command(subcommand)]
    Decode(DecodeCommand),
    /// Check an axiom system exhaustively over a bounded domain
    Axioms {
        system: SystemName,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
}

#[derive(Subcommand)]
enum TranslateCommand {
    /// Rewrite set-membership atoms into the sequence signature
    Ast { formula: String },
}

#[derive(Subcommand)]
enum EncodeCommand {
    /// From a Polish string or a (pair ..) term
    Tree { input: String },
    /// From a set literal such as {{},{{}}}
    Hf { input: String },
}

#[derive(Subcommand)]
enum DecodeCommand {
    Snake {
        input: String,
        #[arg(long = "as", value_enum)]
        target: DecodeTarget,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecodeTarget {
    Tree,
    Hf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemName {
    Seq,
    SeqStar,
    SeqPlus,
    Wseq,
    TOnSnakes,
    AstViaTau,
    AstExt,
}

impl From<SystemName> for AxiomSystem {
    fn from(name: SystemName) -> AxiomSystem {
        match name {
            SystemName::Seq => AxiomSystem::Seq,
            SystemName::SeqStar => AxiomSystem::SeqStar,
            SystemName::SeqPlus => AxiomSystem::SeqPlus,
            SystemName::Wseq => AxiomSystem::WSeq,
            SystemName::TOnSnakes => AxiomSystem::TOnSnakes,
            SystemName::AstViaTau => AxiomSystem::AstViaTau,
            SystemName::AstExt => AxiomSystem::AstExtOnOrderedSnakes,
        }
    }
}

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn usage_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Eval { formula, budget } => {
            let phi = match parse_formula(&formula) {
                Ok(phi) => phi,
                Err(e) => return usage_error(e),
            };
            match eval_sigma(&phi, budget) {
                Ok(Verdict::True(witnesses)) => {
                    println!("TRUE");
                    for (var, value) in witnesses {
                        println!("{var} = {value}");
                    }
                    EXIT_OK
                }
                Ok(Verdict::False) => {
                    println!("FALSE");
                    EXIT_NEGATIVE
                }
                Ok(Verdict::Unknown) => {
                    println!("UNKNOWN");
                    EXIT_NEGATIVE
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Cert { formula, budget, out } => {
            let phi = match parse_formula(&formula) {
                Ok(phi) => phi,
                Err(e) => return usage_error(e),
            };
            match prove_sigma(&phi, budget) {
                Ok(cert) => {
                    let json = cert_to_json(&cert);
                    match out {
                        Some(path) => {
                            if let Err(e) = fs::write(&path, json + "\n") {
                                return usage_error(format_args!("{}: {e}", path.display()));
                            }
                        }
                        None => println!("{json}"),
                    }
                    EXIT_OK
                }
                Err(e @ (ProveError::False | ProveError::Unknown)) => {
                    eprintln!("no certificate: {e}");
                    EXIT_NEGATIVE
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Check { cert_file, formula } => {
            let phi = match parse_formula(&formula) {
                Ok(phi) => phi,
                Err(e) => return usage_error(e),
            };
            let raw = match fs::read_to_string(&cert_file) {
                Ok(raw) => raw,
                Err(e) => return usage_error(format_args!("{}: {e}", cert_file.display())),
            };
            let cert = match cert_from_json(&raw) {
                Ok(cert) => cert,
                Err(e) => {
                    println!("REJECT {e}");
                    return EXIT_NEGATIVE;
                }
            };
            match check_cert_reason(&cert, &phi) {
                Ok(()) => {
                    println!("ACCEPT");
                    EXIT_OK
                }
                Err(reason) => {
                    println!("REJECT {reason}");
                    EXIT_NEGATIVE
                }
            }
        }
        Command::Translate(TranslateCommand::Ast { formula }) => {
            let phi = match parse_formula(&formula) {
                Ok(phi) => phi,
                Err(e) => return usage_error(e),
            };
            match translate_ast(&phi) {
                Ok(image) => {
                    println!("{}", print_formula(&image));
                    EXIT_OK
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Relativize { formula, class } => {
            let phi = match parse_formula(&formula) {
                Ok(phi) => phi,
                Err(e) => return usage_error(e),
            };
            let class = match parse_formula(&class) {
                Ok(class) => class,
                Err(e) => return usage_error(e),
            };
            match relativize(&phi, &class) {
                Ok(image) => {
                    println!("{}", print_formula(&image));
                    EXIT_OK
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Encode(EncodeCommand::Tree { input }) => {
            let trimmed = input.trim();
            let tree = if trimmed == "bot" || trimmed.starts_with('(') {
                parse_tree(trimmed)
            } else {
                parse_polish(trimmed).map(|s| polish_to_tree(&s).expect("validated"))
            };
            match tree {
                Ok(tree) => {
                    println!("{}", tree_to_snake(&tree));
                    EXIT_OK
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Encode(EncodeCommand::Hf { input }) => match parse_hf(&input) {
            Ok(set) => {
                println!("{}", hf_to_snake(&set));
                EXIT_OK
            }
            Err(e) => usage_error(e),
        },
        Command::Decode(DecodeCommand::Snake { input, target }) => {
            let snake = match parse_snake(&input) {
                Ok(snake) => snake,
                Err(e) => return usage_error(e),
            };
            match target {
                DecodeTarget::Tree => {
                    // print the Polish string; `encode tree` reads it back
                    let _ = snake_to_tree(&snake);
                    println!("{}", snake_to_polish(&snake));
                    EXIT_OK
                }
                DecodeTarget::Hf => match OrderedSnake::new(snake) {
                    Ok(ordered) => {
                        println!("{}", print_hf(&snake_to_hf(&ordered)));
                        EXIT_OK
                    }
                    Err(e) => usage_error(e),
                },
            }
        }
        Command::Axioms { system, bound } => {
            let results = check_axioms(system.into(), bound);
            print!("{}", format_report(&results));
            if all_passed(&results) {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            }
        }
    }
}
