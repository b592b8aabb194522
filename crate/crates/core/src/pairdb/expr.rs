//! Text form of module descriptions:
//!
//! ```text
//! module    := term (" + " term)*
//! term      := [int "*"] product [" +dual"] | "trivial(" int ")"
//! product   := factorrep (" x " factorrep)*
//! factorrep := repname "@" index          (index is 1-based)
//! ```

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::repkit::RepName;
use crate::rho::{ModuleSpec, SemisimpleAlg, Summand};

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        let t = self.rest();
        self.pos += t.len() - t.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &'a str {
        let t = self.rest();
        let n = t.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(t.len());
        self.pos += n;
        &t[..n]
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        let t = self.rest();
        let n = t.find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len());
        if n == 0 {
            return self.err("expected a number");
        }
        self.pos += n;
        self.s[start..self.pos].parse().or_else(|_| self.err("number too large"))
    }

    /// Balanced `( ... )` immediately following, returned without the parentheses.
    fn parens(&mut self) -> Result<&'a str> {
        if !self.eat('(') {
            return self.err("expected `(`");
        }
        let start = self.pos;
        let mut depth = 1;
        for (i, c) in self.rest().char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        self.pos = start + i + 1;
                        return Ok(&self.s[start..start + i]);
                    }
                }
                _ => {}
            }
        }
        self.err("unbalanced parenthesis")
    }

    fn repname(&mut self) -> Result<RepName> {
        let start = self.pos;
        let w = self.word();
        if w.is_empty() {
            return self.err("expected a representation name");
        }
        if self.peek() == Some('(') {
            self.parens()?;
        }
        let text = &self.s[start..self.pos];
        text.parse().map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { pos: start, msg },
            other => other,
        })
    }

    /// After a `+`: is the next word the `dual` marker (not `dual(...)`)?
    fn at_dual_marker(&self) -> bool {
        let t = self.rest().trim_start();
        t.strip_prefix("dual")
            .is_some_and(|r| !r.starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_' || c == '('))
    }
}

pub fn parse_module(text: &str) -> Result<ModuleSpec> {
    let mut c = Cursor { s: text, pos: 0 };
    let mut spec = ModuleSpec::default();
    loop {
        c.skip_ws();
        if c.rest().starts_with("trivial") {
            c.word();
            let inner = c.parens()?;
            spec.trivial += inner.trim().parse::<u64>().or_else(|_| c.err("bad trivial dimension"))?;
        } else {
            let mut mult = 1u32;
            if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
                mult = u32::try_from(c.number()?).or_else(|_| c.err("multiplicity too large"))?;
                c.skip_ws();
                if !c.eat('*') {
                    return c.err("expected `*` after multiplicity");
                }
                c.skip_ws();
            }
            let mut reps: Vec<(usize, RepName)> = Vec::new();
            loop {
                let rep = c.repname()?;
                c.skip_ws();
                if !c.eat('@') {
                    return c.err("expected `@index`");
                }
                c.skip_ws();
                let idx = c.number()? as usize;
                if idx == 0 {
                    return c.err("factor indices are 1-based");
                }
                if reps.iter().any(|(i, _)| *i == idx - 1) {
                    return c.err(format!("factor {idx} used twice in one product"));
                }
                reps.push((idx - 1, rep));
                c.skip_ws();
                let t = c.rest();
                if t.starts_with('x') && t[1..].starts_with(char::is_whitespace) {
                    c.pos += 1;
                    c.skip_ws();
                    continue;
                }
                break;
            }
            reps.sort_by_key(|(i, _)| *i);
            let mut plus_dual = false;
            if c.rest().starts_with('+') {
                let save = c.pos;
                c.pos += 1;
                if c.at_dual_marker() {
                    c.skip_ws();
                    c.pos += "dual".len();
                    plus_dual = true;
                } else {
                    c.pos = save;
                }
            }
            spec.summands.push(Summand { mult, reps, plus_dual });
        }
        c.skip_ws();
        if c.rest().is_empty() {
            break;
        }
        if !c.eat('+') {
            return c.err("expected ` + ` between terms");
        }
    }
    Ok(spec)
}

impl FromStr for ModuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_module(s)
    }
}

/// Parses and validates against `alg`.
pub fn parse_module_for(text: &str, alg: &SemisimpleAlg) -> Result<ModuleSpec> {
    let spec = parse_module(text)?;
    spec.validate(alg)?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_plus_dual_pair() {
        let s = parse_module("trivial(1) + std@1 +dual").unwrap();
        assert_eq!(s.trivial, 1);
        assert_eq!(s.summands.len(), 1);
        assert!(s.summands[0].plus_dual);
    }

    #[test]
    fn products_and_multiplicities() {
        let s = parse_module("2*std@1 x ext0(3)@2 + dual(ext(2))@2").unwrap();
        assert_eq!(s.summands[0].mult, 2);
        assert_eq!(s.summands[0].reps.len(), 2);
        assert_eq!(s.summands[1].reps[0].1, RepName::Dual(Box::new(RepName::Ext(2))));
        assert_eq!(s.to_string(), "2*std@1 x ext0(3)@2 + dual(ext(2))@2");
    }

    #[test]
    fn errors_carry_positions() {
        let Err(Error::Parse { pos, .. }) = parse_module("std@1 x bogus@2") else { panic!() };
        assert_eq!(pos, 8);
        assert!(parse_module("std@0").is_err());
        assert!(parse_module("std@1 x sym(2)@1").is_err());
        assert!(parse_module("std@1 +").is_err());
    }
}
