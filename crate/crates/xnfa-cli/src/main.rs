//! Command-line front end: generators, gadgets, normal-form conversions,
//! language rendering, decision procedures, number theory, and a seeded
//! verification harness. Automata travel as the text format of the `format`
//! module; commands read standard input when `--in` is omitted, so
//! generators, converters and deciders compose in a pipe.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use thiserror::Error;

use xnfa_cli::format;

use xnfa::chrobak::{to_chrobak, ChrobakAutomaton};
use xnfa::decide::{self, DecisionReport, TernaryDigits};
use xnfa::numtheory::{greedy_g, landau_f, lcm, progression};
use xnfa::periodic::extract_periodic;
use xnfa::witness::{complement_gadget, okhotin_nfa, random_automaton, witness_xnfa, SplitMix64};
use xnfa::{SemanticsMode, UnaryAutomaton};

#[derive(Parser)]
#[command(name = "xnfa", version, about = "Unary exclusive-NFA toolbox")]
struct Cli {
    /// Distinct count vectors the periodic extraction may explore.
    #[arg(long, global = true, default_value_t = xnfa::periodic::DEFAULT_VECTOR_CAP)]
    vector_cap: usize,
    /// Component-sequence budget of the normal-form conversion.
    #[arg(long, global = true, default_value_t = xnfa::chrobak::DEFAULT_SUPERPATH_BUDGET)]
    superpath_budget: usize,
    /// State budget of the determinized cycle.
    #[arg(long, global = true, default_value_t = xnfa::chrobak::DEFAULT_DFA_STATE_BUDGET)]
    dfa_state_budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an automaton family member.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Wrap an automaton in a gadget.
    Gadget {
        #[command(subcommand)]
        gadget: GadgetCommand,
    },
    /// Convert to Chrobak normal form or to a DFA.
    Convert {
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the canonical ultimately-periodic language of an automaton.
    Lang {
        #[command(flatten)]
        input: InputArg,
    },
    /// Decide a property; exit code 0 means true, 1 means false.
    Decide {
        #[command(subcommand)]
        question: DecideCommand,
    },
    /// Landau's function F or the greedy prime-sum bound G.
    Landau {
        #[arg(long, conflicts_with = "g")]
        f: Option<u64>,
        #[arg(long)]
        g: Option<u64>,
    },
    /// Arithmetic progression generated by a coin set above n^2.
    Progression {
        #[arg(long, value_delimiter = ',', required = true)]
        coins: Vec<u64>,
        #[arg(long)]
        n: u64,
    },
    /// Run the seeded oracle property suite end to end.
    Verify {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_states: usize,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Exclusive automaton accepting lengths divisible by exactly one prime.
    WitnessXnfa {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
    },
    /// NFA accepting the empty word and every length not divisible by the
    /// lcm of the cycles.
    OkhotinNfa {
        #[arg(long, value_delimiter = ',', required = true)]
        cycles: Vec<u64>,
    },
    /// Seed-deterministic random automaton (read as an exclusive NFA).
    Random {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        trim: bool,
    },
}

#[derive(Subcommand)]
enum GadgetCommand {
    /// Exclusive complement of an existentially-read automaton.
    Complement {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum DecideCommand {
    /// Is the word of the given length in the language?
    Member {
        #[command(flatten)]
        input: InputArg,
        /// Decimal, optionally with an e power-of-ten suffix, e.g. 1e18.
        #[arg(long)]
        length: String,
    },
    /// Is the language empty?
    Empty {
        #[command(flatten)]
        input: InputArg,
    },
    /// Does the language contain every length?
    Universal {
        #[command(flatten)]
        input: InputArg,
    },
    /// Is the language of --a contained in the language of --b?
    Subset {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Are the languages of --a and --b equal?
    Equal {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Chrobak,
    Dfa,
}

#[derive(Args)]
struct InputArg {
    /// Automaton file; standard input when omitted.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Format(#[from] format::FormatError),
    #[error("{0}")]
    Lib(#[from] xnfa::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(arg: &InputArg) -> Result<(UnaryAutomaton, SemanticsMode), CliError> {
    let text = match &arg.input {
        Some(path) => fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            text
        }
    };
    let (automaton, mode) = format::parse(&text)?;
    automaton.validate(mode)?;
    Ok((automaton, mode))
}

fn read_file(path: &std::path::Path) -> Result<(UnaryAutomaton, SemanticsMode), CliError> {
    read_input(&InputArg {
        input: Some(path.to_path_buf()),
    })
}

fn emit(
    automaton: &UnaryAutomaton,
    mode: SemanticsMode,
    out: Option<&PathBuf>,
) -> Result<(), CliError> {
    let text = format::serialize(automaton, mode);
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Decimal with an optional `e` power-of-ten suffix, in arbitrary precision.
fn parse_length(text: &str) -> Result<BigUint, CliError> {
    let bad = || CliError::Usage(format!("`{text}` is not a length"));
    let (mantissa, exponent) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, Some(e)),
        None => (text, None),
    };
    let mut value = BigUint::parse_bytes(mantissa.as_bytes(), 10).ok_or_else(bad)?;
    if let Some(e) = exponent {
        let exp: u32 = e.parse().map_err(|_| bad())?;
        value *= BigUint::from(10u32).pow(exp);
    }
    Ok(value)
}

fn print_report(report: &DecisionReport) -> u8 {
    match (&report.verdict, &report.witness_length) {
        (true, _) => {
            println!("true");
            0
        }
        (false, Some(w)) => {
            println!("false witness={w}");
            1
        }
        (false, None) => {
            println!("false");
            1
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let vector_cap = cli.vector_cap;
    match cli.command {
        Command::Gen { family } => {
            let (automaton, mode) = match family {
                GenCommand::WitnessXnfa { primes } => {
                    (witness_xnfa(&primes)?, SemanticsMode::Exclusive)
                }
                GenCommand::OkhotinNfa { cycles } => {
                    (okhotin_nfa(&cycles)?, SemanticsMode::Existential)
                }
                GenCommand::Random {
                    states,
                    density,
                    seed,
                    trim,
                } => {
                    if states == 0 || !(0.0..=1.0).contains(&density) {
                        return Err(CliError::Usage(
                            "need --states >= 1 and --density within [0, 1]".into(),
                        ));
                    }
                    (
                        random_automaton(states, density, seed, trim),
                        SemanticsMode::Exclusive,
                    )
                }
            };
            emit(&automaton, mode, None)?;
            Ok(0)
        }
        Command::Gadget { gadget } => match gadget {
            GadgetCommand::Complement { input } => {
                let (automaton, _) = read_input(&input)?;
                emit(&complement_gadget(&automaton), SemanticsMode::Exclusive, None)?;
                Ok(0)
            }
        },
        Command::Convert { to, input, out } => {
            let (automaton, _) = read_input(&input)?;
            let form = to_chrobak(&automaton, cli.superpath_budget)?;
            match to {
                ConvertTarget::Chrobak => {
                    emit(&form.as_automaton(), SemanticsMode::Exclusive, out.as_ref())?
                }
                ConvertTarget::Dfa => {
                    let dfa = form.to_dfa(cli.dfa_state_budget)?;
                    emit(&dfa, SemanticsMode::Deterministic, out.as_ref())?
                }
            }
            Ok(0)
        }
        Command::Lang { input } => {
            let (automaton, mode) = read_input(&input)?;
            println!("{}", extract_periodic(&automaton, mode, vector_cap)?);
            Ok(0)
        }
        Command::Decide { question } => {
            let report = match question {
                DecideCommand::Member { input, length } => {
                    let (automaton, mode) = read_input(&input)?;
                    let digits = TernaryDigits::from_biguint(&parse_length(&length)?);
                    decide::member_at(&automaton, mode, &digits)
                }
                DecideCommand::Empty { input } => {
                    let (automaton, mode) = read_input(&input)?;
                    decide::is_empty(&automaton, mode, vector_cap)?
                }
                DecideCommand::Universal { input } => {
                    let (automaton, mode) = read_input(&input)?;
                    decide::is_universal(&automaton, mode, vector_cap)?
                }
                DecideCommand::Subset { a, b } => {
                    let (first, mode_a) = read_file(&a)?;
                    let (second, mode_b) = read_file(&b)?;
                    decide::includes(&first, mode_a, &second, mode_b, vector_cap)?
                }
                DecideCommand::Equal { a, b } => {
                    let (first, mode_a) = read_file(&a)?;
                    let (second, mode_b) = read_file(&b)?;
                    decide::equivalent(&first, mode_a, &second, mode_b, vector_cap)?
                }
            };
            Ok(print_report(&report))
        }
        Command::Landau { f, g } => match (f, g) {
            (Some(n), None) => {
                println!("{}", landau_f(n));
                Ok(0)
            }
            (None, Some(n)) => {
                let (value, primes) = greedy_g(n)?;
                let rendered: Vec<String> = primes.iter().map(u64::to_string).collect();
                println!("{value} primes={}", rendered.join(","));
                Ok(0)
            }
            _ => Err(CliError::Usage("pass exactly one of --f N or --g N".into())),
        },
        Command::Progression { coins, n } => {
            let p = progression(&coins, n)?;
            println!("t={} d={}", p.offset, p.period);
            Ok(0)
        }
        Command::Verify {
            seed,
            count,
            max_states,
        } => verify(
            seed,
            count,
            max_states,
            vector_cap,
            cli.superpath_budget,
            cli.dfa_state_budget,
        ),
    }
}

/// One named check group of the verification harness.
struct Tally {
    name: &'static str,
    passed: usize,
    total: usize,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            passed: 0,
            total: 0,
        }
    }

    fn record(&mut self, ok: bool, failures: &mut Vec<String>, case: usize, detail: &str) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            failures.push(format!("case {case}: {} failed: {detail}", self.name));
        }
    }
}

fn verify(
    seed: u64,
    count: usize,
    max_states: usize,
    vector_cap: usize,
    superpath_budget: usize,
    dfa_state_budget: usize,
) -> Result<u8, CliError> {
    if max_states < 2 {
        return Err(CliError::Usage("need --max-states >= 2".into()));
    }
    const DENSITIES: [f64; 4] = [0.15, 0.25, 0.35, 0.5];
    let mode = SemanticsMode::Exclusive;
    let mut stream = SplitMix64::new(seed);
    let mut failures: Vec<String> = Vec::new();
    let mut round_trip = Tally::new("parse round trip");
    let mut equivalence = Tally::new("normal-form equivalence");
    let mut size_bounds = Tally::new("normal-form size bounds");
    let mut determinization = Tally::new("determinization");
    let mut membership = Tally::new("matrix membership");
    let mut gadget = Tally::new("complement gadget");
    let mut decisions = Tally::new("decision procedures");
    let mut previous: Option<UnaryAutomaton> = None;

    println!("verify seed={seed} count={count} max-states={max_states}");
    for case in 0..count {
        let states = 2 + case % (max_states - 1);
        let density = DENSITIES[case % DENSITIES.len()];
        let raw = random_automaton(states, density, stream.next_u64(), false);
        let trimmed = raw.trim();

        let reparsed = format::parse(&format::serialize(&trimmed, mode)).ok();
        round_trip.record(
            reparsed == Some((trimmed.clone(), mode)),
            &mut failures,
            case,
            "serialize/parse mismatch",
        );

        let input_set = extract_periodic(&trimmed, mode, vector_cap)?;
        let form: ChrobakAutomaton = to_chrobak(&trimmed, superpath_budget)?;
        let embedded = extract_periodic(&form.as_automaton(), mode, vector_cap)?;
        equivalence.record(
            input_set == embedded,
            &mut failures,
            case,
            "embedding language drifted",
        );

        let m = form.m;
        size_bounds.record(
            form.total_cycle_length() <= 2 * m && form.state_count() <= m * m * m + 2 + 2 * m,
            &mut failures,
            case,
            "size formula violated",
        );

        let dfa = form.to_dfa(dfa_state_budget)?;
        let dfa_ok = dfa.validate(SemanticsMode::Deterministic).is_ok()
            && extract_periodic(&dfa, SemanticsMode::Deterministic, vector_cap)? == input_set
            && BigUint::from(dfa.state_count()) <= BigUint::from(m * m * m + 2) + landau_f(m as u64);
        determinization.record(dfa_ok, &mut failures, case, "dfa invalid or drifted");

        let bits = trimmed.acceptance_bits(mode, 150);
        let member_ok = bits.iter().enumerate().all(|(len, &bit)| {
            let digits = TernaryDigits::from_u64(len as u64);
            let report = decide::member_at(&trimmed, mode, &digits);
            report.verdict == bit && report.work <= 4 * digits.digit_count()
        });
        membership.record(member_ok, &mut failures, case, "matrix power disagreed");

        let complement = complement_gadget(&raw);
        let complement_ok = complement.state_count() == raw.state_count() + 2
            && extract_periodic(&complement, mode, vector_cap)?
                == extract_periodic(&raw, SemanticsMode::Existential, vector_cap)?.complement();
        gadget.record(complement_ok, &mut failures, case, "complement drifted");

        if let Some(other) = &previous {
            let other_set = extract_periodic(other, mode, vector_cap)?;
            let horizon = input_set.threshold().max(other_set.threshold())
                + 2 * lcm(input_set.period() as u64, other_set.period() as u64) as usize;
            let here = trimmed.acceptance_bits(mode, horizon);
            let there = other.acceptance_bits(mode, horizon);
            let inclusion = decide::includes(&trimmed, mode, other, mode, vector_cap)?;
            let equal = decide::equivalent(&trimmed, mode, other, mode, vector_cap)?;
            let empty = decide::is_empty(&trimmed, mode, vector_cap)?;
            let universal = decide::is_universal(&trimmed, mode, vector_cap)?;
            let ok = inclusion.verdict == here.iter().zip(&there).all(|(&x, &y)| !x | y)
                && equal.verdict == (here == there)
                && empty.verdict == here.iter().all(|&x| !x)
                && universal.verdict == here.iter().all(|&x| x);
            decisions.record(ok, &mut failures, case, "verdict diverged from scan");
        }
        previous = Some(trimmed);
    }

    for tally in [
        &round_trip,
        &equivalence,
        &size_bounds,
        &determinization,
        &membership,
        &gadget,
        &decisions,
    ] {
        println!("{:<24} {}/{}", tally.name, tally.passed, tally.total);
    }
    if failures.is_empty() {
        println!("verify: PASS");
        Ok(0)
    } else {
        for failure in &failures {
            eprintln!("{failure}");
        }
        println!("verify: FAIL");
        Ok(2)
    }
}
