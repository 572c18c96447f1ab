//! Parser for the canonical textual form, e.g.
//! `3/2*kappa_1*m_{0,1} - m_{-1,2}^2`.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | name ['^' integer]
//! name   := kappa_<n> | kappa_{<n>} | m_{<i>,<j>} | lambda | zeta | eta
//!         | e | y | x | u | <identifier>
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::generator::{is_identifier, Symbol};
use super::{AlgebraError, Element, Generator, Monomial, Rational, Universe};

pub const GRAMMAR: &str = "expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*; \
factor := integer ['/' integer] | name ['^' integer]; \
name := kappa_<n> | m_{<i>,<j>} | lambda | zeta | eta | e | y | x | u";

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> AlgebraError {
        AlgebraError::Parse(format!(
            "{what} at byte {} of {:?}; accepted grammar: {GRAMMAR}",
            self.pos, self.src
        ))
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn name(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(c) = self.peek() {
            let ok = match c {
                '{' => {
                    depth += 1;
                    true
                }
                '}' if depth > 0 => {
                    depth -= 1;
                    true
                }
                ',' | '-' | ' ' if depth > 0 => true,
                c if c.is_ascii_alphanumeric() || c == '_' => true,
                _ => false,
            };
            if !ok {
                break;
            }
            self.pos += c.len_utf8();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }
}

/// Parses `text` in the default universe, resolving names against the
/// built-in generators and `extra`.
pub fn parse_element(text: &str, extra: &[Generator]) -> Result<Element, AlgebraError> {
    parse_element_in(text, Universe::default(), extra)
}

pub fn parse_element_in(
    text: &str,
    universe: Universe,
    extra: &[Generator],
) -> Result<Element, AlgebraError> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut out = Element::zero_in(universe.clone());
    let mut negative = cur.eat('-');
    loop {
        let term = parse_term(&mut cur, extra)?.in_universe(universe.clone());
        out = out.checked_add(&if negative { -term } else { term })?;
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else {
            break;
        }
    }
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(out)
}

fn parse_term(cur: &mut Cursor<'_>, extra: &[Generator]) -> Result<Element, AlgebraError> {
    let mut coeff = Rational::from_integer(1.into());
    let mut factors: Vec<(Generator, u32)> = Vec::new();
    loop {
        cur.skip_ws();
        if let Some(num) = cur.digits() {
            let num: BigInt = num.parse().expect("digits");
            let den: BigInt = if cur.eat('/') {
                cur.digits()
                    .ok_or_else(|| cur.error("expected denominator"))?
                    .parse()
                    .expect("digits")
            } else {
                1.into()
            };
            if den.is_zero() {
                return Err(cur.error("zero denominator"));
            }
            coeff *= Rational::new(num, den);
        } else if let Some(name) = cur.name() {
            let g = resolve(name, extra).map_err(|e| match e {
                AlgebraError::Parse(msg) => cur.error(&msg),
                other => other,
            })?;
            let exp = if cur.eat('^') {
                cur.digits()
                    .ok_or_else(|| cur.error("expected exponent"))?
                    .parse::<u32>()
                    .map_err(|_| cur.error("exponent out of range"))?
            } else {
                1
            };
            factors.push((g, exp));
        } else {
            return Err(cur.error("expected a number or generator name"));
        }
        if !cur.eat('*') {
            break;
        }
    }
    Ok(match Monomial::from_factors(factors) {
        Some((m, negative)) => Element::term(if negative { -coeff } else { coeff }, m),
        None => Element::zero(),
    })
}

/// Resolves a single generator name.
pub fn resolve(name: &str, extra: &[Generator]) -> Result<Generator, AlgebraError> {
    if let Some(builtin) = Symbol::builtin_from_name(name) {
        return builtin;
    }
    if let Some(g) = extra.iter().find(|g| g.to_string() == name) {
        return Ok(g.clone());
    }
    if is_identifier(name) {
        Err(AlgebraError::Parse(format!("unknown generator {name:?}")))
    } else {
        Err(AlgebraError::Parse(format!("malformed generator name {name:?}")))
    }
}
