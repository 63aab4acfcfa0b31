//! Text syntax for rings and elements.
//!
//! Rings: `Z`, `Z/<n>`, `GF(<p>)`, `GF(<p>)[v1,...,vk]`, `(<ring>)x(<ring>)`.
//! Elements: integer literals and polynomial expressions built from `+`, `-`,
//! `*`, `^` and parentheses (`3*x^2*y + x + 1`, `(x+y^2)*(y+x^2)`); in a
//! product ring `(a|b)` is the pair with components `a` and `b`.

use num_bigint::BigInt;

use super::{PolyRing, RingElement, RingSpec};
use crate::error::{Error, Result};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_ring(text: &str) -> Result<RingSpec> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    parse_ring_compact(&s)
}

fn parse_ring_compact(s: &str) -> Result<RingSpec> {
    if s == "Z" {
        return Ok(RingSpec::Integers);
    }
    if let Some(rest) = s.strip_prefix("Z/") {
        let n: u64 = rest.parse().map_err(|_| perr(format!("bad modulus in {s:?}")))?;
        return RingSpec::integers_mod(n);
    }
    if let Some(rest) = s.strip_prefix("GF(") {
        let close = rest.find(')').ok_or_else(|| perr(format!("unclosed GF( in {s:?}")))?;
        let p: u64 = rest[..close].parse().map_err(|_| perr(format!("bad characteristic in {s:?}")))?;
        let tail = &rest[close + 1..];
        if tail.is_empty() {
            return RingSpec::prime_field(p);
        }
        let vars = tail
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| perr(format!("expected [vars] after GF({p}) in {s:?}")))?;
        let vars: Vec<String> = vars.split(',').map(str::to_string).collect();
        return Ok(RingSpec::Poly(PolyRing::new(p, vars)?));
    }
    if s.starts_with('(') {
        let close = matching_paren(s, 0).ok_or_else(|| perr(format!("unbalanced parentheses in {s:?}")))?;
        let left = &s[1..close];
        let rest = s[close + 1..]
            .strip_prefix('x')
            .ok_or_else(|| perr(format!("expected 'x' between product factors in {s:?}")))?;
        if !rest.starts_with('(') || matching_paren(rest, 0) != Some(rest.len() - 1) {
            return Err(perr(format!("expected (<ring>) after 'x' in {s:?}")));
        }
        let right = &rest[1..rest.len() - 1];
        return RingSpec::product(parse_ring_compact(left)?, parse_ring_compact(right)?);
    }
    Err(perr(format!("unrecognized ring {s:?}")))
}

fn matching_paren(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices().skip(open) {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Num(digits.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()|".contains(c) {
            out.push(Token::Sym(c));
            i += 1;
        } else {
            return Err(perr(format!("unexpected character {c:?} in {text:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(perr(format!("expected {c:?} at token {}", self.pos)))
        }
    }

    fn expr(&mut self, ring: &RingSpec) -> Result<RingElement> {
        let mut acc = if self.eat('-') {
            ring.neg(&self.term(ring)?)?
        } else {
            self.eat('+');
            self.term(ring)?
        };
        loop {
            if self.eat('+') {
                acc = ring.add(&acc, &self.term(ring)?)?;
            } else if self.eat('-') {
                acc = ring.sub(&acc, &self.term(ring)?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, ring: &RingSpec) -> Result<RingElement> {
        let mut acc = self.power(ring)?;
        while self.eat('*') {
            acc = ring.mul(&acc, &self.power(ring)?)?;
        }
        Ok(acc)
    }

    fn power(&mut self, ring: &RingSpec) -> Result<RingElement> {
        let base = self.atom(ring)?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Num(k)) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().map_err(|_| perr("exponent too large"))?;
                    ring.pow(&base, k)
                }
                _ => Err(perr("expected a nonnegative integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self, ring: &RingSpec) -> Result<RingElement> {
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(ring.from_bigint(&v))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let r = ring
                    .as_poly_ring()
                    .ok_or_else(|| perr(format!("variable {name} used outside a polynomial ring")))?;
                let i = r
                    .var_index(&name)
                    .ok_or_else(|| perr(format!("unknown variable {name} in {ring}")))?;
                Ok(RingElement::Poly(r.var(i)))
            }
            Some(Token::Sym('-')) => {
                self.pos += 1;
                ring.neg(&self.atom(ring)?)
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                if let Some((left, right)) = ring.factors() {
                    let a = self.expr(left)?;
                    self.expect('|')?;
                    let b = self.expr(right)?;
                    self.expect(')')?;
                    Ok(RingElement::pair(a, b))
                } else {
                    let e = self.expr(ring)?;
                    self.expect(')')?;
                    Ok(e)
                }
            }
            other => Err(perr(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_element(ring: &RingSpec, text: &str) -> Result<RingElement> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(perr("empty element"));
    }
    let mut p = Parser { tokens: &tokens, pos: 0 };
    let e = p.expr(ring)?;
    if p.pos != tokens.len() {
        return Err(perr(format!("trailing input in {text:?}")));
    }
    Ok(e)
}

/// Splits on top-level `;` or `,` and parses each piece. Blank input is the empty list.
pub fn parse_element_list(ring: &RingSpec, text: &str) -> Result<Vec<RingElement>> {
    split_top_level(text)
        .into_iter()
        .filter(|piece| !piece.trim().is_empty())
        .map(|piece| parse_element(ring, piece))
        .collect()
}

pub(crate) fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            ';' | ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}
