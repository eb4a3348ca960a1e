//! Line-oriented text formats for GSEs and posets.
//!
//! ```text
//! gse
//! states s1 s2
//! event a = 1/5 3/5
//! ```
//!
//! ```text
//! poset
//! elements 0 a b 1
//! leq a b
//! prime a b
//! ```
//!
//! `#` starts a comment. In poset files `0` and `1` must be declared; they
//! are the bottom and top and are paired by prime unless stated otherwise.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::events::{EventError, EventSet, ONE_LABEL, ZERO_LABEL};
use crate::poset::{InvolutivePoset, PosetError};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{at}: {message}")]
    Syntax { at: Location, message: String },
    #[error("{}{source}", at.as_ref().map(|l| format!("{l}: ")).unwrap_or_default())]
    Event {
        at: Option<Location>,
        source: EventError,
    },
    #[error("{}{source}", at.as_ref().map(|l| format!("{l}: ")).unwrap_or_default())]
    Poset {
        at: Option<Location>,
        source: PosetError,
    },
}

impl FormatError {
    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Syntax { at, .. } => Some(at.line),
            FormatError::Event { at, .. } | FormatError::Poset { at, .. } => {
                at.as_ref().map(|l| l.line)
            }
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Non-comment lines split into whitespace-separated tokens with 1-based
/// line and column numbers.
fn lines(input: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    input.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content
            .char_indices()
            .chain(std::iter::once((content.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..pos],
                        column: s + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        at: Location { line, column },
        message: message.into(),
    }
}

fn expect_header<'a>(
    it: &mut impl Iterator<Item = (usize, Vec<Token<'a>>)>,
    header: &str,
) -> Result<(), FormatError> {
    match it.next() {
        Some((line, tokens)) => {
            if tokens[0].text != header || tokens.len() != 1 {
                Err(syntax(
                    line,
                    tokens[0].column,
                    format!("expected `{header}` header"),
                ))
            } else {
                Ok(())
            }
        }
        None => Err(syntax(
            1,
            1,
            format!("empty input, expected `{header}` header"),
        )),
    }
}

pub fn parse_gse(input: &str, autoclose: bool) -> Result<EventSet, FormatError> {
    let mut it = lines(input);
    expect_header(&mut it, "gse")?;
    let mut states: Option<(usize, Vec<String>)> = None;
    let mut events: Vec<(String, Vec<Rational>)> = Vec::new();
    let mut event_lines: Vec<Location> = Vec::new();
    for (line, tokens) in it {
        match tokens[0].text {
            "states" => {
                if states.is_some() {
                    return Err(syntax(
                        line,
                        tokens[0].column,
                        "duplicate `states` declaration",
                    ));
                }
                if tokens.len() < 2 {
                    return Err(syntax(
                        line,
                        tokens[0].column,
                        "`states` needs at least one state",
                    ));
                }
                states = Some((
                    line,
                    tokens[1..].iter().map(|t| t.text.to_string()).collect(),
                ));
            }
            "event" => {
                let Some((_, declared)) = &states else {
                    return Err(syntax(line, tokens[0].column, "`event` before `states`"));
                };
                if tokens.len() < 3 || tokens[2].text != "=" {
                    return Err(syntax(
                        line,
                        tokens[0].column,
                        "expected `event <label> = <values>`",
                    ));
                }
                let label = tokens[1].text.to_string();
                let mut values = Vec::new();
                for t in &tokens[3..] {
                    let v = parse_rational(t.text).ok_or_else(|| {
                        syntax(line, t.column, format!("invalid rational `{}`", t.text))
                    })?;
                    values.push(v);
                }
                if values.len() != declared.len() {
                    return Err(syntax(
                        line,
                        tokens[1].column,
                        format!(
                            "event `{label}` has {} values, expected {}",
                            values.len(),
                            declared.len()
                        ),
                    ));
                }
                event_lines.push(Location {
                    line,
                    column: tokens[1].column,
                });
                events.push((label, values));
            }
            other => {
                return Err(syntax(
                    line,
                    tokens[0].column,
                    format!("unknown declaration `{other}`"),
                ));
            }
        }
    }
    let Some((states_line, states)) = states else {
        return Err(syntax(1, 1, "missing `states` declaration"));
    };
    let locate = |label: &str| {
        events
            .iter()
            .position(|(l, _)| l == label)
            .map(|i| event_lines[i].clone())
    };
    EventSet::build(states, events.clone(), autoclose).map_err(|e| {
        let at = match &e {
            EventError::ValueOutOfRange { label, .. }
            | EventError::MissingComplement(label)
            | EventError::ReservedLabel(label)
            | EventError::WrongArity { label, .. } => locate(label),
            EventError::DuplicateLabel(label) => events
                .iter()
                .enumerate()
                .filter(|(_, (l, _))| l == label)
                .nth(1)
                .map(|(i, _)| event_lines[i].clone()),
            EventError::DuplicateState(_) | EventError::EmptyStates => Some(Location {
                line: states_line,
                column: 1,
            }),
            _ => None,
        };
        FormatError::Event { at, source: e }
    })
}

pub fn write_gse(g: &EventSet) -> String {
    let mut out = String::from("gse\n");
    let _ = writeln!(out, "states {}", g.states().join(" "));
    for i in 1..g.len() - 1 {
        let values: Vec<String> = g.member(i).values().iter().map(format_rational).collect();
        let _ = writeln!(out, "event {} = {}", g.label(i), values.join(" "));
    }
    out
}

pub fn parse_poset(input: &str) -> Result<InvolutivePoset, FormatError> {
    let mut it = lines(input);
    expect_header(&mut it, "poset")?;
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut generators: Vec<(String, String)> = Vec::new();
    let mut primes: Vec<(String, String)> = Vec::new();
    let mut mentions: Vec<(String, Location)> = Vec::new();
    for (line, tokens) in it {
        let keyword = tokens[0].text;
        match keyword {
            "elements" => {
                if elements.is_some() {
                    return Err(syntax(
                        line,
                        tokens[0].column,
                        "duplicate `elements` declaration",
                    ));
                }
                elements = Some((
                    line,
                    tokens[1..].iter().map(|t| t.text.to_string()).collect(),
                ));
            }
            "leq" | "prime" => {
                if elements.is_none() {
                    return Err(syntax(
                        line,
                        tokens[0].column,
                        format!("`{keyword}` before `elements`"),
                    ));
                }
                if tokens.len() != 3 {
                    return Err(syntax(
                        line,
                        tokens[0].column,
                        format!("expected `{keyword} <a> <b>`"),
                    ));
                }
                for t in &tokens[1..] {
                    mentions.push((
                        t.text.to_string(),
                        Location {
                            line,
                            column: t.column,
                        },
                    ));
                }
                let pair = (tokens[1].text.to_string(), tokens[2].text.to_string());
                if keyword == "leq" {
                    generators.push(pair);
                } else {
                    primes.push(pair);
                }
            }
            other => {
                return Err(syntax(
                    line,
                    tokens[0].column,
                    format!("unknown declaration `{other}`"),
                ));
            }
        }
    }
    let Some((elements_line, elements)) = elements else {
        return Err(syntax(1, 1, "missing `elements` declaration"));
    };
    for reserved in [ZERO_LABEL, ONE_LABEL] {
        if !elements.iter().any(|e| e == reserved) {
            return Err(syntax(
                elements_line,
                1,
                format!("element `{reserved}` must be declared"),
            ));
        }
    }
    for (name, at) in &mentions {
        if !elements.contains(name) {
            return Err(FormatError::Poset {
                at: Some(at.clone()),
                source: PosetError::UnknownElement(name.clone()),
            });
        }
    }
    for e in &elements {
        if e != ZERO_LABEL {
            generators.push((ZERO_LABEL.to_string(), e.clone()));
        }
        if e != ONE_LABEL {
            generators.push((e.clone(), ONE_LABEL.to_string()));
        }
    }
    let locate = |a: &str| {
        mentions
            .iter()
            .find(|(n, _)| n == a)
            .map(|(_, l)| l.clone())
    };
    let poset = InvolutivePoset::validate(&elements, &generators, &primes).map_err(|e| {
        let at = match &e {
            PosetError::DuplicateElement(_) => Some(Location {
                line: elements_line,
                column: 1,
            }),
            PosetError::Antisymmetry(a, _)
            | PosetError::NotInvolution(a)
            | PosetError::PrimeUndefined(a)
            | PosetError::NotAntitone(a, _) => locate(a),
            _ => None,
        };
        FormatError::Poset { at, source: e }
    })?;
    Ok(poset)
}

pub fn write_poset(p: &InvolutivePoset) -> String {
    let mut out = String::from("poset\n");
    let _ = writeln!(out, "elements {}", p.labels().join(" "));
    for (a, b) in p.covers() {
        if a != p.bottom() && b != p.top() {
            let _ = writeln!(out, "leq {} {}", p.label(a), p.label(b));
        }
    }
    for x in p.elements() {
        let px = p.prime(x);
        if x <= px && x != p.bottom() && x != p.top() {
            let _ = writeln!(out, "prime {} {}", p.label(x), p.label(px));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::ratio;

    #[test]
    fn minimal_gse() {
        let g = parse_gse("gse\nstates s1\n", false).unwrap();
        assert_eq!(g, fixtures::two());
    }

    #[test]
    fn gse_round_trip() {
        for (name, g) in fixtures::named_gse() {
            let text = write_gse(&g);
            let back = parse_gse(&text, false).unwrap();
            assert_eq!(back, g, "{name}");
            assert_eq!(write_gse(&back), text, "{name}");
        }
    }

    #[test]
    fn poset_round_trip() {
        for (name, p) in fixtures::named_posets() {
            let text = write_poset(&p);
            let back = parse_poset(&text).unwrap();
            assert_eq!(back, p, "{name}");
            assert_eq!(write_poset(&back), text, "{name}");
        }
    }

    #[test]
    fn comments_and_autoclose() {
        let text = "# MO1\ngse   # header\nstates s1 s2\nevent p = 1/3 2/3 # only one\n";
        let g = parse_gse(text, true).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.member(2).values(), &[ratio(2, 3), ratio(1, 3)]);
        assert!(parse_gse(text, false).is_err());
    }

    #[test]
    fn gse_diagnostics() {
        let e = parse_gse("gse\nstates s1\nevent x = 5/4\n", false).unwrap_err();
        assert_eq!(e.line(), Some(3));
        assert!(e.to_string().contains("outside [0,1]"), "{e}");
        let e = parse_gse("gse\nstates s1\nevent x = 1/0\n", false).unwrap_err();
        assert_eq!(e.to_string(), "line 3, column 11: invalid rational `1/0`");
        let e = parse_gse("poset\n", false).unwrap_err();
        assert_eq!(e.line(), Some(1));
        let e = parse_gse("gse\nevent x = 1\n", false).unwrap_err();
        assert_eq!(e.line(), Some(2));
        let e = parse_gse("gse\nstates a b\nevent x = 1\n", false).unwrap_err();
        assert!(e.to_string().contains("1 values, expected 2"));
    }

    #[test]
    fn poset_diagnostics() {
        let e = parse_poset("poset\nelements 0 a 1\nleq a 0\n").unwrap_err();
        assert!(matches!(
            e,
            FormatError::Poset {
                source: PosetError::Antisymmetry(..),
                ..
            }
        ));
        assert_eq!(e.line(), Some(3));
        let e = parse_poset("poset\nelements 0 a 1\nleq a b\n").unwrap_err();
        assert_eq!(e.to_string(), "line 3, column 7: unknown element `b`");
        let e = parse_poset("poset\nelements a 1\n").unwrap_err();
        assert_eq!(e.line(), Some(2));
        let e = parse_poset("poset\nelements 0 a b 1\nleq a b\n").unwrap_err();
        assert!(matches!(
            e,
            FormatError::Poset {
                source: PosetError::PrimeUndefined(_),
                ..
            }
        ));
    }
}
