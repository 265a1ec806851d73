//! Integer polynomials in `x, y, z`, e.g. `x^3 + y^3 + z^3` or `2x*y^2 - 3z`.

use crate::dsl::ParseError;

/// Monomials as `(coefficient, [deg_x, deg_y, deg_z])`, in input order.
pub type Terms = Vec<(i64, [u32; 3])>;

pub fn parse_polynomial(text: &str) -> Result<Terms, ParseError> {
    let src: Vec<(usize, u8)> =
        text.bytes().enumerate().filter(|(_, c)| !c.is_ascii_whitespace()).collect();
    let mut pos = 0;
    let at = |pos: usize| src.get(pos).map(|&(_, c)| c);
    let offset = |pos: usize| src.get(pos).map_or(text.len(), |&(i, _)| i);
    let err = |pos: usize, expected| ParseError::Syntax { position: offset(pos), expected };

    let number = |pos: &mut usize| -> Result<Option<u64>, ParseError> {
        let start = *pos;
        while at(*pos).is_some_and(|c| c.is_ascii_digit()) {
            *pos += 1;
        }
        if start == *pos {
            return Ok(None);
        }
        let digits: String = src[start..*pos].iter().map(|&(_, c)| c as char).collect();
        digits
            .parse()
            .map(Some)
            .map_err(|_| ParseError::Semantic(format!("integer {digits} is too large")))
    };

    let mut terms = Terms::new();
    let mut sign = match at(pos) {
        Some(b'-') => {
            pos += 1;
            -1
        }
        Some(b'+') => {
            pos += 1;
            1
        }
        _ => 1,
    };
    loop {
        let mut coeff = 1i64;
        let mut exps = [0u32; 3];
        let mut factors = 0;
        if let Some(n) = number(&mut pos)? {
            coeff = i64::try_from(n).map_err(|_| ParseError::Semantic(format!("coefficient {n} is too large")))?;
            factors += 1;
        }
        loop {
            let save = pos;
            if factors > 0 && at(pos) == Some(b'*') {
                pos += 1;
            }
            let var = match at(pos) {
                Some(b'x') => 0,
                Some(b'y') => 1,
                Some(b'z') => 2,
                _ if pos != save => return Err(err(pos, "a variable x, y or z")),
                _ => break,
            };
            pos += 1;
            let mut k = 1u32;
            if at(pos) == Some(b'^') {
                pos += 1;
                let n = number(&mut pos)?.ok_or_else(|| err(pos, "an exponent"))?;
                k = u32::try_from(n).map_err(|_| ParseError::Semantic(format!("exponent {n} is too large")))?;
            }
            exps[var] += k;
            factors += 1;
        }
        if factors == 0 {
            return Err(err(pos, "a coefficient or a variable"));
        }
        terms.push((sign * coeff, exps));
        sign = match at(pos) {
            None => break,
            Some(b'+') => 1,
            Some(b'-') => -1,
            Some(_) => return Err(err(pos, "'+', '-' or end of input")),
        };
        pos += 1;
    }
    Ok(terms)
}
