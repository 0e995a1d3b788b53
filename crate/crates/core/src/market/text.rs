//! Line-oriented instance format.
//!
//! ```text
//! n: 5
//! axis: 1 2 3 4 5          # optional
//! pref 1: 3 4 5 2 1        # most- to least-preferred resource labels
//! ...
//! pref 5: 1 2 3 4 5
//! endow: 1 2 3 4 5         # endow[i] = resource of agent i
//! ```
//!
//! Labels are 1-based. `#` starts a comment.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{check_permutation, Allocation, Instance, LinearOrder};
use crate::error::{MarketError, Result};
use crate::sp::Axis;

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(MarketError::Parse { line, message: message.into() })
}

fn parse_labels(line: usize, body: &str, n: Option<usize>) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for tok in body.split_whitespace() {
        match tok.parse::<usize>() {
            Ok(0) | Err(_) => return parse_err(line, format!("`{tok}` is not a positive label")),
            Ok(v) => out.push(v - 1),
        }
    }
    if let Some(n) = n {
        if out.len() != n {
            return parse_err(line, format!("expected {n} labels, found {}", out.len()));
        }
    }
    if let Err(e) = check_permutation(&out) {
        return parse_err(line, format!("not a permutation: {e}"));
    }
    Ok(out)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut n: Option<usize> = None;
    let mut axis = None;
    let mut endow = None;
    let mut prefs: Vec<Option<LinearOrder>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, body)) = content.split_once(':') else {
            return parse_err(line, "expected `key: values`");
        };
        let key = key.trim();
        if key == "n" {
            if n.is_some() {
                return parse_err(line, "duplicate `n`");
            }
            match body.trim().parse::<usize>() {
                Ok(v) if v > 0 => {
                    n = Some(v);
                    prefs = vec![None; v];
                }
                _ => return parse_err(line, format!("invalid agent count `{}`", body.trim())),
            }
            continue;
        }
        let Some(size) = n else {
            return parse_err(line, "`n:` must come first");
        };
        if key == "axis" {
            let order = parse_labels(line, body, Some(size))?;
            axis = Some(Axis::new(order).map_err(|e| MarketError::Parse { line, message: e.to_string() })?);
        } else if key == "endow" {
            let holdings = parse_labels(line, body, Some(size))?;
            endow = Some(Allocation::new(holdings).map_err(|e| MarketError::Parse { line, message: e.to_string() })?);
        } else if let Some(agent) = key.strip_prefix("pref") {
            let agent = match agent.trim().parse::<usize>() {
                Ok(a) if (1..=size).contains(&a) => a - 1,
                _ => return parse_err(line, format!("invalid agent in `{key}`")),
            };
            if prefs[agent].is_some() {
                return parse_err(line, format!("duplicate preferences for agent {}", agent + 1));
            }
            let ranking = parse_labels(line, body, Some(size))?;
            prefs[agent] = Some(LinearOrder::new(ranking).map_err(|e| MarketError::Parse { line, message: e.to_string() })?);
        } else {
            return parse_err(line, format!("unknown key `{key}`"));
        }
    }

    let Some(_) = n else {
        return parse_err(last_line.max(1), "missing `n:`");
    };
    let mut profile = Vec::with_capacity(prefs.len());
    for (a, p) in prefs.into_iter().enumerate() {
        match p {
            Some(o) => profile.push(o),
            None => return parse_err(last_line, format!("missing preferences for agent {}", a + 1)),
        }
    }
    let Some(endowment) = endow else {
        return parse_err(last_line, "missing `endow:`");
    };
    Instance::new(profile, endowment, axis).map_err(|e| MarketError::Parse { line: last_line, message: e.to_string() })
}

fn push_labels(out: &mut String, items: &[usize]) {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{}", x + 1);
    }
    out.push('\n');
}

pub fn format_instance(instance: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", instance.n());
    if let Some(axis) = instance.axis() {
        out.push_str("axis: ");
        push_labels(&mut out, axis.order());
    }
    for (a, o) in instance.profile().iter().enumerate() {
        let _ = write!(out, "pref {}: ", a + 1);
        push_labels(&mut out, o.ranking());
    }
    out.push_str("endow: ");
    push_labels(&mut out, instance.endowment().holdings());
    out
}

impl FromStr for Instance {
    type Err = MarketError;

    fn from_str(s: &str) -> Result<Self> {
        parse_instance(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
# five agents
n: 5
axis: 1 2 3 4 5
pref 1: 3 4 5 2 1
pref 2: 3 4 5 2 1
pref 3: 4 5 3 2 1
pref 4: 3 4 5 2 1
pref 5: 1 2 3 4 5
endow: 1 2 3 4 5   # identity
";

    #[test]
    fn parses_and_formats() {
        let inst = parse_instance(EXAMPLE).unwrap();
        assert_eq!(inst.n(), 5);
        assert_eq!(inst.rank(2, 3), 5);
        assert!(inst.axis().is_some());
        let again = parse_instance(&format_instance(&inst)).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn non_permutation_reports_line() {
        let bad = EXAMPLE.replace("pref 3: 4 5 3 2 1", "pref 3: 4 5 3 3 1");
        match parse_instance(&bad) {
            Err(MarketError::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_pieces_are_errors() {
        assert!(parse_instance("").is_err());
        assert!(parse_instance("n: 2\npref 1: 1 2\nendow: 1 2\n").is_err());
        assert!(parse_instance("n: 2\npref 1: 1 2\npref 2: 2 1\n").is_err());
        assert!(parse_instance("pref 1: 1 2\n").is_err());
        assert!(parse_instance("n: 2\npref 3: 1 2\n").is_err());
        assert!(parse_instance("n: 2\nfoo: 1 2\n").is_err());
        assert!(parse_instance("n: 2\npref 1: 1 0\n").is_err());
    }

    #[test]
    fn axis_violation_is_reported() {
        let bad = EXAMPLE.replace("pref 5: 1 2 3 4 5", "pref 5: 1 5 3 4 2");
        assert!(matches!(parse_instance(&bad), Err(MarketError::Parse { .. })));
    }
}
