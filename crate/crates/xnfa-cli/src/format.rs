//! The line-oriented automaton text format.
//!
//! ```text
//! # optional comments
//! mode xnfa
//! states 6
//! initial 0
//! accepting 1 4
//! edge 0 1
//! edge 0 4
//! ```
//!
//! Serialization is canonical: LF line endings, single spaces, no trailing
//! whitespace, edges sorted by (from, to). Parsing is lenient about blank and
//! `#` comment lines but otherwise expects the keys in order, and reports the
//! offending line on error.

use thiserror::Error;
use xnfa::{SemanticsMode, StateId, UnaryAutomaton};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: expected `{expected}`")]
    Expected { line: usize, expected: &'static str },
    #[error("line {line}: unknown mode `{got}`, expected xnfa, nfa, or dfa")]
    UnknownMode { line: usize, got: String },
    #[error("line {line}: `{token}` is not a number")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: state index {index} out of range for {states} states")]
    OutOfRange {
        line: usize,
        index: usize,
        states: usize,
    },
    #[error("unexpected end of input: missing `{expected}` line")]
    Truncated { expected: &'static str },
}

pub fn mode_name(mode: SemanticsMode) -> &'static str {
    match mode {
        SemanticsMode::Exclusive => "xnfa",
        SemanticsMode::Existential => "nfa",
        SemanticsMode::Deterministic => "dfa",
    }
}

fn parse_mode(token: &str, line: usize) -> Result<SemanticsMode, FormatError> {
    match token {
        "xnfa" => Ok(SemanticsMode::Exclusive),
        "nfa" => Ok(SemanticsMode::Existential),
        "dfa" => Ok(SemanticsMode::Deterministic),
        other => Err(FormatError::UnknownMode {
            line,
            got: other.to_string(),
        }),
    }
}

fn parse_number(token: &str, line: usize) -> Result<usize, FormatError> {
    token.parse().map_err(|_| FormatError::BadNumber {
        line,
        token: token.to_string(),
    })
}

pub fn parse(text: &str) -> Result<(UnaryAutomaton, SemanticsMode), FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let mut expect = |keyword: &'static str| -> Result<(usize, Vec<String>), FormatError> {
        let (line, content) = lines.next().ok_or(FormatError::Truncated { expected: keyword })?;
        let mut tokens = content.split_whitespace();
        if tokens.next() != Some(keyword) {
            return Err(FormatError::Expected {
                line,
                expected: keyword,
            });
        }
        Ok((line, tokens.map(str::to_string).collect()))
    };

    let (line, tokens) = expect("mode")?;
    let [token] = tokens.as_slice() else {
        return Err(FormatError::Expected {
            line,
            expected: "mode xnfa|nfa|dfa",
        });
    };
    let mode = parse_mode(token, line)?;

    let (line, tokens) = expect("states")?;
    let [token] = tokens.as_slice() else {
        return Err(FormatError::Expected {
            line,
            expected: "states <n>",
        });
    };
    let states = parse_number(token, line)?;

    let (line, tokens) = expect("initial")?;
    let [token] = tokens.as_slice() else {
        return Err(FormatError::Expected {
            line,
            expected: "initial <index>",
        });
    };
    let initial = parse_number(token, line)?;
    check_range(initial, states, line)?;

    let (line, tokens) = expect("accepting")?;
    let mut accepting: Vec<StateId> = Vec::new();
    for token in tokens {
        let index = parse_number(&token, line)?;
        check_range(index, states, line)?;
        accepting.push(index);
    }

    let mut edges: Vec<(StateId, StateId)> = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["edge", from, to] => {
                let from = parse_number(from, line)?;
                let to = parse_number(to, line)?;
                check_range(from, states, line)?;
                check_range(to, states, line)?;
                edges.push((from, to));
            }
            _ => {
                return Err(FormatError::Expected {
                    line,
                    expected: "edge <from> <to>",
                })
            }
        }
    }

    Ok((
        UnaryAutomaton::from_parts(states, initial, accepting, edges),
        mode,
    ))
}

fn check_range(index: usize, states: usize, line: usize) -> Result<(), FormatError> {
    if index >= states {
        Err(FormatError::OutOfRange {
            line,
            index,
            states,
        })
    } else {
        Ok(())
    }
}

pub fn serialize(a: &UnaryAutomaton, mode: SemanticsMode) -> String {
    let mut out = String::new();
    out.push_str(&format!("mode {}\n", mode_name(mode)));
    out.push_str(&format!("states {}\n", a.state_count()));
    out.push_str(&format!("initial {}\n", a.initial()));
    out.push_str("accepting");
    for q in a.accepting() {
        out.push_str(&format!(" {q}"));
    }
    out.push('\n');
    for (from, to) in a.edges() {
        out.push_str(&format!("edge {from} {to}\n"));
    }
    out
}
