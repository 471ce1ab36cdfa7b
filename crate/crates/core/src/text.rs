//! Parsing of data-set literals.
//!
//! The accepted text form is `(n, gt, a; (c1, x1), ..., (cl, xl))` with
//! arbitrary whitespace, e.g. `(6,0,5;(1,2),(2,3))` or `(1, 4, 1;)`. The
//! same content is also accepted as a JSON object
//! `{"n": .., "gt": .., "a": .., "cones": [[c, x], ...]}`.
//!
//! Negative residues (`a` or a cone's `c`) are legal in the input and are
//! reduced to least positive representatives here, in the parser; they
//! never reach the validator. Nonnegative values pass through untouched,
//! so out-of-range positives are still reported by validation.

use serde::Deserialize;

use crate::arith::least_positive;
use crate::data_set::Candidate;

/// A tuple as read from text or JSON, before residue normalization.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct RawInput {
    pub n: i64,
    pub gt: i64,
    pub a: i64,
    pub cones: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("{field} must be nonnegative, got {value}")]
    NegativeField { field: &'static str, value: i64 },
    #[error("cannot reduce negative residue {value} without a positive modulus")]
    IrreducibleResidue { value: i64 },
    #[error("not a data-set literal or JSON object: {0}")]
    Json(String),
}

impl RawInput {
    /// Reduces negative residues modulo their respective moduli and checks
    /// that structural fields are nonnegative.
    pub fn normalize(&self) -> Result<Candidate, ParseError> {
        if self.n < 0 {
            return Err(ParseError::NegativeField {
                field: "n",
                value: self.n,
            });
        }
        if self.gt < 0 {
            return Err(ParseError::NegativeField {
                field: "gt",
                value: self.gt,
            });
        }
        let n = self.n as u64;
        let a = reduce_residue(self.a, n)?;
        let mut cones = Vec::with_capacity(self.cones.len());
        for &(c, x) in &self.cones {
            if x < 0 {
                return Err(ParseError::NegativeField {
                    field: "cone order",
                    value: x,
                });
            }
            cones.push((reduce_residue(c, x as u64)?, x as u64));
        }
        Ok(Candidate {
            n,
            gt: self.gt as u64,
            a,
            cones,
        })
    }
}

fn reduce_residue(value: i64, modulus: u64) -> Result<u64, ParseError> {
    if value >= 0 {
        return Ok(value as u64);
    }
    if modulus == 0 {
        return Err(ParseError::IrreducibleResidue { value });
    }
    Ok(least_positive(value, modulus))
}

/// Parses the text literal form into a raw tuple.
pub fn parse_literal(input: &str) -> Result<RawInput, ParseError> {
    let mut parser = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    parser.skip_ws();
    parser.expect(b'(')?;
    let n = parser.integer()?;
    parser.expect(b',')?;
    let gt = parser.integer()?;
    parser.expect(b',')?;
    let a = parser.integer()?;
    parser.expect(b';')?;
    let mut cones = Vec::new();
    parser.skip_ws();
    while !parser.peek(b')') {
        if !cones.is_empty() {
            parser.expect(b',')?;
        }
        parser.expect(b'(')?;
        let c = parser.integer()?;
        parser.expect(b',')?;
        let x = parser.integer()?;
        parser.expect(b')')?;
        cones.push((c, x));
        parser.skip_ws();
    }
    parser.expect(b')')?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("trailing input after closing parenthesis"));
    }
    Ok(RawInput { n, gt, a, cones })
}

/// Parses either the text literal or a JSON object, normalizing residues.
pub fn parse_candidate(input: &str) -> Result<Candidate, ParseError> {
    let trimmed = input.trim_start();
    let raw = if trimmed.starts_with('{') {
        serde_json::from_str::<RawInput>(trimmed).map_err(|e| ParseError::Json(e.to_string()))?
    } else {
        parse_literal(input)?
    };
    raw.normalize()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self, byte: u8) -> bool {
        self.bytes.get(self.pos) == Some(&byte)
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", byte as char)))
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek(b'-') || self.peek(b'+') {
            self.pos += 1;
        }
        let digits_from = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_from {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse::<i64>()
            .map_err(|_| self.error("integer out of range"))
    }
}
