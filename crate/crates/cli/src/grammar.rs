//! Text grammar for colored values, sets and permutations.
//!
//! ```text
//! value       := INT ":" INT            color, then magnitude
//! set         := "empty" | value ("," value)*
//! permutation := value (WS value)*      listed w(n) … w(1)
//! ```

use std::fmt;

use pinnacle_core::{Ambient, ColoredValue, GenPerm, PinSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based token index, 0 when the whole input is at fault.
    pub position: usize,
    pub token: String,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.position == 0 {
            write!(f, "{}", self.reason)
        } else {
            write!(f, "token {} `{}`: {}", self.position, self.token, self.reason)
        }
    }
}

impl std::error::Error for ParseError {}

fn fail(position: usize, token: &str, reason: impl Into<String>) -> ParseError {
    ParseError {
        position,
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn number(position: usize, token: &str, part: &str) -> Result<u32, ParseError> {
    if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(fail(
            position,
            token,
            "expected <color>:<magnitude> with decimal integers",
        ));
    }
    part.parse().map_err(|_| fail(position, token, "integer too large"))
}

/// Parses `a:x` without range checks.
fn raw_token(token: &str, position: usize) -> Result<ColoredValue, ParseError> {
    let (a, x) = token
        .split_once(':')
        .ok_or_else(|| fail(position, token, "expected <color>:<magnitude>"))?;
    Ok(ColoredValue::new(
        number(position, token, a)?,
        number(position, token, x)?,
    ))
}

/// Parses `a:x`, checking `a < m` and `1 ≤ x ≤ n`.
pub fn parse_colored_token(text: &str, ambient: Ambient, position: usize) -> Result<ColoredValue, ParseError> {
    let v = raw_token(text, position)?;
    if v.color() >= ambient.modulus() {
        return Err(fail(
            position,
            text,
            format!("color {} out of range for m = {}", v.color(), ambient.modulus()),
        ));
    }
    if v.magnitude() == 0 || v.magnitude() > ambient.degree() {
        return Err(fail(
            position,
            text,
            format!("magnitude {} out of range for n = {}", v.magnitude(), ambient.degree()),
        ));
    }
    Ok(v)
}

pub fn parse_set(text: &str, ambient: Ambient) -> Result<PinSet, ParseError> {
    let text = text.trim();
    if text == "empty" {
        return Ok(PinSet::in_ambient(ambient, []).expect("empty set is valid"));
    }
    let values = text
        .split(',')
        .enumerate()
        .map(|(i, t)| parse_colored_token(t.trim(), ambient, i + 1))
        .collect::<Result<Vec<_>, _>>()?;
    PinSet::in_ambient(ambient, values).map_err(|e| fail(0, text, e.to_string()))
}

/// Parses a permutation in modulus `m`; the degree is the number of tokens.
pub fn parse_perm(text: &str, modulus: u32) -> Result<GenPerm, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(fail(0, text, "empty permutation"));
    }
    let ambient = Ambient::new(modulus, tokens.len() as u32).map_err(|e| fail(0, text, e.to_string()))?;
    let pairs = tokens
        .iter()
        .enumerate()
        .map(|(i, t)| parse_colored_token(t, ambient, i + 1).map(|v| (v.color(), v.magnitude())))
        .collect::<Result<Vec<_>, _>>()?;
    GenPerm::from_one_line(modulus, &pairs).map_err(|e| fail(0, text, e.to_string()))
}

pub fn format_value(v: ColoredValue) -> String {
    format!("{}:{}", v.color(), v.magnitude())
}

/// Comma-separated in increasing `≺` order, or `empty`.
pub fn format_set(p: &PinSet) -> String {
    if p.is_empty() {
        return "empty".to_string();
    }
    p.elements()
        .iter()
        .map(|&v| format_value(v))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_perm(w: &GenPerm) -> String {
    w.one_line().map(format_value).collect::<Vec<_>>().join(" ")
}

/// `a..b` (inclusive) or a single integer.
pub fn parse_range(text: &str) -> Result<(u32, u32), String> {
    let bad = || format!("expected <int> or <int>..<int>, got `{text}`");
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{text}`"));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amb(m: u32, n: u32) -> Ambient {
        Ambient::new(m, n).unwrap()
    }

    #[test]
    fn token_examples() {
        assert_eq!(parse_colored_token("1:3", amb(3, 10), 1), Ok(ColoredValue::new(1, 3)));
        let e = parse_colored_token("4:3", amb(3, 10), 1).unwrap_err();
        assert!(e.reason.contains("color 4"));
        let e = parse_colored_token("0:11", amb(3, 10), 2).unwrap_err();
        assert_eq!(e.position, 2);
        assert!(e.to_string().contains("magnitude 11"));
        assert!(parse_colored_token("0:0", amb(3, 10), 1).is_err());
        for bad in ["", "1", "1:", ":1", "a:1", "1:2:3", "-1:2", "+1:2", " 1:2"] {
            assert!(parse_colored_token(bad, amb(3, 10), 1).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn sets() {
        let p = parse_set("0:2,1:3,0:5", amb(3, 10)).unwrap();
        assert_eq!(format_set(&p), "1:3,0:5,0:2");
        assert!(parse_set("empty", amb(2, 4)).unwrap().is_empty());
        assert_eq!(format_set(&parse_set("empty", amb(2, 4)).unwrap()), "empty");
        let e = parse_set("0:1,0:9", amb(2, 4)).unwrap_err();
        assert_eq!(e.position, 2);
        assert!(parse_set("0:1,0:1", amb(2, 4)).is_err());
        assert!(parse_set("", amb(2, 4)).is_err());
    }

    #[test]
    fn perms() {
        let w = parse_perm("1:2 0:1", 2).unwrap();
        assert_eq!(w.at(2), ColoredValue::new(1, 2));
        assert_eq!(w.at(1), ColoredValue::new(0, 1));
        assert_eq!(format_perm(&w), "1:2 0:1");
        assert!(parse_perm("0:1 0:1", 2).is_err());
        assert!(parse_perm("0:1 0:3", 2).is_err());
        assert!(parse_perm("  ", 2).is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..10"), Ok((1, 10)));
        assert_eq!(parse_range("4"), Ok((4, 4)));
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x..3").is_err());
    }
}
