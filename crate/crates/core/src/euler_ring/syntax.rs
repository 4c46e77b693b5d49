//! Text grammar for elements of `U(T²)`:
//!
//! ```text
//! elem := '0' | term (('+' | '-') term)*
//! term := [int '*'] gen
//! gen  := 'T' | 'H(' int ',' int ')' | 'F(' int ',' int ';' int ',' int ')'
//! ```
//!
//! `T` is the generator of `𝕀`, `H(m,n)` the 1-dimensional kernel of `(m,n)` and
//! `F(a,0;b,d)` the finite subgroup annihilated by the two rows. Whitespace is allowed
//! between tokens. Generators are canonicalized on parse, so `H(-1,-2)` reads as `H(1,2)`
//! and an `F(..)` whose rows are dependent denotes a positive-dimensional subgroup.

use num_bigint::BigInt;
use num_traits::One;

use super::{EulerElementT2, TorusSubgroup};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    /// The input with a caret under the offending column.
    pub fn annotate(&self, input: &str) -> String {
        let col = input[..self.position.min(input.len())].chars().count();
        format!("{self}\n  {input}\n  {}^", " ".repeat(col))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

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

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        self.skip_ws();
        match self.digits() {
            Some(d) => {
                let v: BigInt = d.parse().expect("ascii digits");
                Ok(if negative { -v } else { v })
            }
            None => self.err("expected an integer"),
        }
    }

    fn gen(&mut self) -> Result<TorusSubgroup, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('T') => {
                self.pos += 1;
                Ok(TorusSubgroup::torus())
            }
            Some('H') => {
                self.pos += 1;
                self.expect('(')?;
                let m = self.int()?;
                self.expect(',')?;
                let n = self.int()?;
                self.expect(')')?;
                Ok(TorusSubgroup::from_characters([(m, n)]))
            }
            Some('F') => {
                self.pos += 1;
                self.expect('(')?;
                let a = self.int()?;
                self.expect(',')?;
                let zero_pos = self.pos;
                let z = self.int()?;
                if z != BigInt::from(0) {
                    self.pos = zero_pos;
                    return self.err("second entry of the first F row must be 0");
                }
                self.expect(';')?;
                let b = self.int()?;
                self.expect(',')?;
                let d = self.int()?;
                self.expect(')')?;
                Ok(TorusSubgroup::from_characters([(a, z), (b, d)]))
            }
            _ => self.err("expected a generator 'T', 'H(m,n)' or 'F(a,0;b,d)'"),
        }
    }

    /// `[int '*'] gen`. A bare sign in front of a generator (`-T`) is accepted.
    fn term(&mut self) -> Result<(BigInt, TorusSubgroup), ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        self.skip_ws();
        let coeff = match self.digits() {
            Some(d) => {
                let v: BigInt = d.parse().expect("ascii digits");
                self.expect('*')?;
                v
            }
            None => BigInt::one(),
        };
        let g = self.gen()?;
        Ok((if negative { -coeff } else { coeff }, g))
    }

    fn elem(&mut self) -> Result<EulerElementT2, ParseError> {
        if self.src.trim() == "0" {
            return Ok(EulerElementT2::zero());
        }
        if self.at_end() {
            return self.err("empty expression");
        }
        let mut terms = vec![self.term()?];
        loop {
            if self.at_end() {
                break;
            }
            let negate = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else {
                return self.err("expected '+', '-' or end of input");
            };
            let (c, g) = self.term()?;
            terms.push((if negate { -c } else { c }, g));
        }
        Ok(EulerElementT2::from_terms(terms))
    }
}

/// Parses an element of `U(T²)`.
pub fn parse_t2(src: &str) -> Result<EulerElementT2, ParseError> {
    Parser { src, pos: 0 }.elem()
}

/// Parses a single generator token.
pub fn parse_generator(src: &str) -> Result<TorusSubgroup, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let g = p.gen()?;
    if !p.at_end() {
        return p.err("trailing input after generator");
    }
    Ok(g)
}
