//! Text form of rational divisors on `P^1`.
//!
//! ```text
//! divisor     := signed_term { ("+" | "-") term }
//! signed_term := ["+" | "-"] term
//! term        := rational ["*"] point
//! rational    := integer ["/" positive_integer]
//! point       := "[" label "]"
//! label       := "inf" | ["-"] rational
//! ```
//!
//! Whitespace is ignored everywhere. Coefficients are reduced to lowest
//! terms after parsing; repeated points are rejected.

use std::fmt;

use ffrt_core::qdiv::DivisorTerm;
use ffrt_core::{PointLabel, Rational, RationalDivisor};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: &'static str },
    #[error("{0}")]
    Semantic(String),
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn error(&mut self, expected: &'static str) -> ParseError {
        self.skip_ws();
        ParseError::Syntax { position: self.pos, expected }
    }

    fn digits(&mut self, expected: &'static str) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::Syntax { position: start, expected });
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits("an integer")?;
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(num));
        }
        let position = {
            self.skip_ws();
            self.pos
        };
        let den = self.digits("a positive integer denominator")?;
        if den.is_zero() {
            return Err(ParseError::Syntax { position, expected: "a positive integer denominator" });
        }
        Ok(Rational::new(num, den))
    }

    fn label(&mut self) -> Result<PointLabel, ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"inf") {
            self.pos += 3;
            return Ok(PointLabel::Infinity);
        }
        let negative = self.eat(b'-');
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.error("\"inf\" or a rational point")),
        }
        let value = self.rational()?;
        Ok(PointLabel::Affine(if negative { -value } else { value }))
    }

    fn term(&mut self, negative: bool) -> Result<(PointLabel, Rational), ParseError> {
        let coefficient = self.rational()?;
        self.eat(b'*');
        self.expect(b'[', "'[' opening a point")?;
        let point = self.label()?;
        self.expect(b']', "']' closing a point")?;
        Ok((point, if negative { -coefficient } else { coefficient }))
    }
}

fn small(value: &BigInt, what: &str) -> Result<i64, ParseError> {
    i64::try_from(value).map_err(|_| ParseError::Semantic(format!("{what} {value} does not fit in 64 bits")))
}

pub fn parse_divisor(text: &str) -> Result<RationalDivisor, ParseError> {
    let mut cur = Cursor::new(text);
    let mut parsed = Vec::new();
    let mut negative = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        parsed.push(cur.term(negative)?);
        negative = match cur.peek() {
            None => break,
            Some(b'+') => false,
            Some(b'-') => true,
            Some(_) => return Err(cur.error("'+', '-' or end of input")),
        };
        cur.pos += 1;
    }

    let mut terms = Vec::with_capacity(parsed.len());
    for (k, (point, c)) in parsed.iter().enumerate() {
        if parsed[..k].iter().any(|(q, _)| q == point) {
            return Err(ParseError::Semantic(format!("point [{point}] appears more than once")));
        }
        terms.push(DivisorTerm::new(
            point.clone(),
            small(c.numer(), "numerator")?,
            small(c.denom(), "denominator")?,
        ));
    }
    Ok(RationalDivisor::new(terms).reduced())
}

fn write_rational(out: &mut String, x: &Rational) {
    if x.is_integer() {
        out.push_str(&x.numer().to_string());
    } else {
        out.push_str(&format!("{}/{}", x.numer(), x.denom()));
    }
}

/// Canonical text of a divisor, e.g. `1/2*[inf] - 1/3*[0] - 1/7*[1]`.
/// The empty divisor renders as `0*[inf]`.
pub fn render_divisor(divisor: &RationalDivisor) -> String {
    let mut out = String::new();
    for (k, t) in divisor.terms().iter().enumerate() {
        let c = t.coefficient();
        match (k, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        write_rational(&mut out, &c.abs());
        out.push_str("*[");
        match &t.point {
            PointLabel::Infinity => out.push_str("inf"),
            PointLabel::Affine(v) => write_rational(&mut out, v),
        }
        out.push(']');
    }
    if out.is_empty() {
        out.push_str("0*[inf]");
    }
    out
}

/// Terms `1/r_i` at the default points `∞, 0, 1, 2, …`.
pub fn divisor_from_weights(weights: &[i64]) -> RationalDivisor {
    let terms = weights
        .iter()
        .enumerate()
        .map(|(k, &r)| {
            let point = if k == 0 { PointLabel::Infinity } else { PointLabel::integer(k as i64 - 1) };
            DivisorTerm::new(point, 1, r)
        })
        .collect();
    RationalDivisor::new(terms)
}

/// Parses `2,3,7` into weights.
pub fn parse_weights(text: &str) -> Result<Vec<i64>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| ParseError::Semantic(format!("weight {:?} is not an integer", part.trim())))
        })
        .collect()
}

/// Displays a rational as `n` or `n/d`.
pub struct RatText<'a>(pub &'a Rational);

impl fmt::Display for RatText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}
