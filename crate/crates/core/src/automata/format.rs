//! Text format for total DFAs.
//!
//! ```text
//! # contains at least one `a`
//! states 2
//! alphabet a b
//! initial 0
//! accepting 1
//! trans 0 a 1
//! trans 0 b 0
//! trans 1 a 1
//! trans 1 b 1
//! ```
//!
//! Exactly one `trans` line is required per (state, symbol) pair, in any
//! order. A token starting with `#` comments out the rest of its line.

use std::fmt::Write as _;

use super::{Dfa, DfaError};
use crate::Symbol;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn symbol(tok: &str, line: usize) -> Result<Symbol, ParseError> {
    let mut cs = tok.chars();
    match (cs.next(), cs.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(err(
            line,
            format!("symbol must be a single character, found `{tok}`"),
        )),
    }
}

fn number(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| err(line, format!("expected a state number, found `{tok}`")))
}

pub fn parse_dfa(text: &str) -> Result<Dfa, ParseError> {
    let mut states: Option<(usize, usize)> = None;
    let mut alphabet: Option<(Vec<Symbol>, usize)> = None;
    let mut initial: Option<(usize, usize)> = None;
    let mut accepting: Option<(Vec<usize>, usize)> = None;
    let mut trans: Vec<(usize, usize, Symbol, usize)> = Vec::new();
    let mut last_line = 1;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks: Vec<&str> = raw
            .split_whitespace()
            .take_while(|t| !t.starts_with('#'))
            .collect();
        let Some((&head, args)) = toks.split_first() else {
            continue;
        };
        let once = |seen: bool| {
            if seen {
                Err(err(line, format!("duplicate `{head}` line")))
            } else {
                Ok(())
            }
        };
        match head {
            "states" => {
                once(states.is_some())?;
                let [n] = args else {
                    return Err(err(line, "`states` takes exactly one number"));
                };
                let n = number(n, line)?;
                if n == 0 {
                    return Err(err(line, "a DFA needs at least one state"));
                }
                states = Some((n, line));
            }
            "alphabet" => {
                once(alphabet.is_some())?;
                let mut syms = Vec::with_capacity(args.len());
                for t in args {
                    let s = symbol(t, line)?;
                    if syms.contains(&s) {
                        return Err(err(line, format!("symbol `{s}` listed twice")));
                    }
                    syms.push(s);
                }
                alphabet = Some((syms, line));
            }
            "initial" => {
                once(initial.is_some())?;
                let [q] = args else {
                    return Err(err(line, "`initial` takes exactly one state"));
                };
                initial = Some((number(q, line)?, line));
            }
            "accepting" => {
                once(accepting.is_some())?;
                let qs = args
                    .iter()
                    .map(|t| number(t, line))
                    .collect::<Result<_, _>>()?;
                accepting = Some((qs, line));
            }
            "trans" => {
                let [from, sym, to] = args else {
                    return Err(err(line, "`trans` takes `<from> <symbol> <to>`"));
                };
                trans.push((
                    line,
                    number(from, line)?,
                    symbol(sym, line)?,
                    number(to, line)?,
                ));
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }

    let (n, _) = states.ok_or_else(|| err(last_line, "missing `states` line"))?;
    let (alphabet, _) = alphabet.ok_or_else(|| err(last_line, "missing `alphabet` line"))?;
    let (initial, init_line) = initial.ok_or_else(|| err(last_line, "missing `initial` line"))?;
    let (accepting, acc_line) =
        accepting.ok_or_else(|| err(last_line, "missing `accepting` line"))?;
    let range = |q: usize, line: usize| {
        if q < n {
            Ok(q)
        } else {
            Err(err(line, format!("state {q} out of range (states {n})")))
        }
    };
    range(initial, init_line)?;
    for &q in &accepting {
        range(q, acc_line)?;
    }

    let k = alphabet.len();
    let mut table: Vec<Option<usize>> = vec![None; n * k];
    for (line, from, sym, to) in trans {
        range(from, line)?;
        range(to, line)?;
        let i = alphabet
            .iter()
            .position(|&s| s == sym)
            .ok_or_else(|| err(line, format!("unknown symbol `{sym}`")))?;
        let slot = &mut table[from * k + i];
        if slot.is_some() {
            return Err(err(
                line,
                format!("duplicate transition for state {from} on `{sym}`"),
            ));
        }
        *slot = Some(to);
    }
    let mut rows = Vec::with_capacity(n);
    for q in 0..n {
        let mut row = Vec::with_capacity(k);
        for (i, &s) in alphabet.iter().enumerate() {
            match table[q * k + i] {
                Some(t) => row.push(t),
                None => {
                    return Err(err(
                        last_line,
                        format!("missing transition for state {q} on `{s}`"),
                    ))
                }
            }
        }
        rows.push(row);
    }
    Dfa::new(alphabet, rows, initial, accepting)
        .map_err(|e: DfaError| err(last_line, e.to_string()))
}

/// Writes the canonical text form: header lines, then `trans` lines in
/// state-major, alphabet order.
pub fn serialize_dfa(dfa: &Dfa) -> String {
    let mut out = String::new();
    writeln!(out, "states {}", dfa.state_count()).unwrap();
    out.push_str("alphabet");
    for s in dfa.alphabet() {
        write!(out, " {s}").unwrap();
    }
    out.push('\n');
    writeln!(out, "initial {}", dfa.initial()).unwrap();
    out.push_str("accepting");
    for q in dfa.accepting_states() {
        write!(out, " {q}").unwrap();
    }
    out.push('\n');
    for q in 0..dfa.state_count() {
        for (i, s) in dfa.alphabet().iter().enumerate() {
            writeln!(out, "trans {q} {s} {}", dfa.next(q, i)).unwrap();
        }
    }
    out
}
