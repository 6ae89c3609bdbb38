//! Line-oriented text form of a [`Mon1qfa`].
//!
//! ```text
//! mon1qfa dim=2 alphabet=ab
//! initial: 1,0 0,0
//! observable a
//! outcome up
//! 0.5,0 0.5,0
//! 0.5,0 0.5,0
//! outcome down
//! ...
//! end-observable
//! outcome accept
//! ...
//! accepting: accept
//! ```
//!
//! Tokens are whitespace separated, so line breaks inside a block are
//! cosmetic. Lines whose first non-blank character is `#` are comments.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::{ComplexMatrix, Mon1qfa, Observable, QuantumError};
use crate::Symbol;

fn write_entry(out: &mut String, z: Complex64) {
    // `{}` on f64 prints the shortest string that parses back exactly.
    write!(out, "{},{}", z.re, z.im).unwrap();
}

fn write_matrix(out: &mut String, m: &ComplexMatrix) {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if c > 0 {
                out.push(' ');
            }
            write_entry(out, m[(r, c)]);
        }
        out.push('\n');
    }
}

fn write_outcomes(out: &mut String, obs: &Observable) {
    for o in obs.outcomes() {
        writeln!(out, "outcome {}", o.label).unwrap();
        write_matrix(out, &o.projector);
    }
}

pub fn emit_mon1qfa(a: &Mon1qfa) -> String {
    let mut out = String::new();
    let alphabet: String = a.alphabet().iter().collect();
    writeln!(out, "mon1qfa dim={} alphabet={}", a.dimension(), alphabet).unwrap();
    out.push_str("initial:");
    for &z in a.initial() {
        out.push(' ');
        write_entry(&mut out, z);
    }
    out.push('\n');
    for (sym, obs) in a.observables() {
        writeln!(out, "observable {sym}").unwrap();
        write_outcomes(&mut out, obs);
    }
    out.push_str("end-observable\n");
    write_outcomes(&mut out, a.end_observable());
    out.push_str("accepting:");
    for label in a.accepting() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    out
}

struct Tokens<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim_start().starts_with('#'))
            .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)))
            .collect();
        Tokens { items, pos: 0 }
    }

    fn peek(&self) -> Option<&'a str> {
        self.items.get(self.pos).map(|&(_, t)| t)
    }

    fn line(&self) -> usize {
        self.items
            .get(self.pos)
            .or(self.items.last())
            .map_or(1, |&(l, _)| l)
    }

    fn err(&self, msg: impl Into<String>) -> QuantumError {
        QuantumError::Format {
            line: self.line(),
            message: msg.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<&'a str, QuantumError> {
        let t = self
            .peek()
            .ok_or_else(|| self.err(format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, keyword: &str) -> Result<(), QuantumError> {
        let t = self.next(keyword)?;
        if t != keyword {
            self.pos -= 1;
            return Err(self.err(format!("expected `{keyword}`, found `{t}`")));
        }
        Ok(())
    }

    fn entry(&mut self) -> Result<Complex64, QuantumError> {
        let t = self.next("matrix entry `re,im`")?;
        let parsed = t
            .split_once(',')
            .and_then(|(re, im)| Some(Complex64::new(re.parse().ok()?, im.parse().ok()?)));
        match parsed {
            Some(z) if z.re.is_finite() && z.im.is_finite() => Ok(z),
            _ => {
                self.pos -= 1;
                Err(self.err(format!("malformed complex entry `{t}`")))
            }
        }
    }
}

fn parse_outcomes(tokens: &mut Tokens<'_>, dim: usize) -> Result<Observable, QuantumError> {
    let mut outcomes = Vec::new();
    while tokens.peek() == Some("outcome") {
        tokens.pos += 1;
        let label = tokens.next("outcome label")?.to_string();
        let entries = (0..dim * dim)
            .map(|_| tokens.entry())
            .collect::<Result<Vec<_>, _>>()?;
        outcomes.push((label, ComplexMatrix::from_row_major(dim, dim, entries)?));
    }
    if outcomes.is_empty() {
        return Err(tokens.err("observable has no outcomes"));
    }
    Observable::new(dim, outcomes)
}

pub fn parse_mon1qfa(text: &str) -> Result<Mon1qfa, QuantumError> {
    let mut t = Tokens::new(text);
    t.expect("mon1qfa")?;
    let dim: usize = t
        .next("dim=<m>")?
        .strip_prefix("dim=")
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| {
            t.pos -= 1;
            t.err("expected `dim=<m>`")
        })?;
    let alphabet: Vec<Symbol> = match t.next("alphabet=<symbols>")?.strip_prefix("alphabet=") {
        Some(a) => a.chars().collect(),
        None => {
            t.pos -= 1;
            return Err(t.err("expected `alphabet=<symbols>`"));
        }
    };
    t.expect("initial:")?;
    let initial = (0..dim).map(|_| t.entry()).collect::<Result<Vec<_>, _>>()?;
    let mut observables = Vec::new();
    while t.peek() == Some("observable") {
        t.pos += 1;
        let sym_tok = t.next("symbol")?;
        let mut chars = sym_tok.chars();
        let sym = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => {
                t.pos -= 1;
                return Err(t.err(format!("symbol must be one character, found `{sym_tok}`")));
            }
        };
        if !alphabet.contains(&sym) {
            t.pos -= 1;
            return Err(t.err(format!("symbol `{sym}` is not in the declared alphabet")));
        }
        observables.push((sym, parse_outcomes(&mut t, dim)?));
    }
    if let Some(missing) = alphabet
        .iter()
        .find(|s| !observables.iter().any(|(o, _)| o == *s))
    {
        return Err(t.err(format!("no observable for symbol `{missing}`")));
    }
    t.expect("end-observable")?;
    let end = parse_outcomes(&mut t, dim)?;
    t.expect("accepting:")?;
    let mut accepting = Vec::new();
    while let Some(label) = t.peek() {
        accepting.push(label.to_string());
        t.pos += 1;
    }
    // Keep the declared alphabet order.
    observables.sort_by_key(|(s, _)| alphabet.iter().position(|a| a == s));
    Mon1qfa::new(initial, observables, end, accepting)
}
