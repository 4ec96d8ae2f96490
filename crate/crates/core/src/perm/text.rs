//! Text format for cycles and factorizations: "(1 5 6 8)" and the
//! concatenation "(4 5)(2 3 5)(1 5 6 8)(6 7)".  Multisets are written in
//! braces: "{(1 4 5),(1 3),(2 4)}".  Parser and printer roundtrip exactly.

use crate::error::{Error, Result};

use super::cycle::Cycle;
use super::factorization::Factorization;
use super::typevec::TypeVector;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn error(&self, msg: String) -> Error {
        Error::Parse {
            pos: self.pos,
            msg,
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn cycle(&mut self) -> Result<Cycle> {
        let start = self.pos;
        self.expect(b'(')?;
        let mut elements = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(b) if b.is_ascii_digit() => elements.push(self.number()?),
                _ => return Err(self.error("expected element or ')'".into())),
            }
        }
        Cycle::new(&elements).map_err(|e| Error::Parse {
            pos: start,
            msg: e.to_string(),
        })
    }
}

/// Parses a concatenation of cycles into a factorization of ambient size `n`.
/// The empty string is the empty product.
pub fn parse_factorization(s: &str, n: usize) -> Result<Factorization> {
    let mut sc = Scanner::new(s);
    let mut factors = Vec::new();
    loop {
        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some(b'(') => factors.push(sc.cycle()?),
            _ => return Err(sc.error("expected '(' starting a cycle".into())),
        }
    }
    Factorization::new(n, factors)
}

/// Parses a single cycle like "(1 5 6 8)".
pub fn parse_cycle(s: &str) -> Result<Cycle> {
    let mut sc = Scanner::new(s);
    sc.skip_ws();
    let c = sc.cycle()?;
    sc.skip_ws();
    if sc.peek().is_some() {
        return Err(sc.error("trailing input after cycle".into()));
    }
    Ok(c)
}

/// Parses a multiset of cycles: "{(1 4 5),(1 3),(2 4)}".  Commas between
/// cycles are optional.
pub fn parse_multiset(s: &str) -> Result<Vec<Cycle>> {
    let mut sc = Scanner::new(s);
    sc.skip_ws();
    sc.expect(b'{')?;
    let mut cycles = Vec::new();
    loop {
        sc.skip_ws();
        match sc.peek() {
            Some(b'}') => {
                sc.pos += 1;
                break;
            }
            Some(b',') => {
                sc.pos += 1;
            }
            Some(b'(') => cycles.push(sc.cycle()?),
            _ => return Err(sc.error("expected '(', ',' or '}'".into())),
        }
    }
    sc.skip_ws();
    if sc.peek().is_some() {
        return Err(sc.error("trailing input after multiset".into()));
    }
    Ok(cycles)
}

/// Parses a type vector like "a2=3,a3=1"; a zero count ("a2=0") is
/// accepted and dropped.
pub fn parse_type_vector(s: &str) -> Result<TypeVector> {
    let mut sc = Scanner::new(s);
    let mut counts = Vec::new();
    loop {
        sc.skip_ws();
        if sc.peek().is_none() {
            break;
        }
        sc.expect(b'a')?;
        let j = sc.number()?;
        if j < 2 {
            return Err(sc.error("cycle length must be at least 2".into()));
        }
        sc.skip_ws();
        sc.expect(b'=')?;
        sc.skip_ws();
        let count = sc.number()?;
        if count > 0 {
            counts.push((j, count));
        }
        sc.skip_ws();
        if sc.peek() == Some(b',') {
            sc.pos += 1;
        } else if sc.peek().is_some() {
            return Err(sc.error("expected ',' between entries".into()));
        }
    }
    Ok(TypeVector::from_counts(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_factorization() {
        let text = "(4 5)(2 3 5)(1 5 6 8)(6 7)";
        let f = parse_factorization(text, 8).unwrap();
        assert_eq!(f.to_string(), text);
    }

    #[test]
    fn empty_input_is_empty_product() {
        let f = parse_factorization("", 3).unwrap();
        assert!(f.is_empty());
        assert_eq!(f.to_string(), "");
    }

    #[test]
    fn whitespace_tolerated_printing_is_canonical() {
        let f = parse_factorization("  ( 3   4 ) (1 2)", 4).unwrap();
        assert_eq!(f.to_string(), "(3 4)(1 2)");
    }

    #[test]
    fn multiset_parses_with_or_without_commas() {
        let a = parse_multiset("{(1 4 5),(1 3),(2 4)}").unwrap();
        let b = parse_multiset("{(1 4 5) (1 3) (2 4)}").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn type_vector_text() {
        let tv = parse_type_vector("a2=3,a3=1").unwrap();
        assert_eq!(tv.to_string(), "a2=3,a3=1");
        assert!(parse_type_vector("a2=0").unwrap().is_zero());
        assert!(parse_type_vector("").unwrap().is_zero());
        assert!(parse_type_vector("a1=2").is_err());
        assert!(parse_type_vector("b2=1").is_err());
    }

    #[test]
    fn errors_carry_position() {
        match parse_factorization("(1 2)(x)", 4) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_factorization("(1 2)", 1).is_err()); // element beyond n
    }
}
