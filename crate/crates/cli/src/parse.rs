//! Parser for univariate polynomials in the variable `u`, e.g.
//! "u^24+u^18+1", "3u^2 - u + 4", "1/2*u^2". Errors carry a byte position.

use cocert_core::{Characteristic, FieldElement, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError {
                position: start,
                message: "expected an integer".to_string(),
            });
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                position: start,
                message: "integer out of range".to_string(),
            })
    }
}

/// Parses a polynomial in `u` over the given field. Coefficients are
/// integers, or `a/b` fractions when the characteristic is 0.
pub fn parse_univariate(input: &str, ch: Characteristic) -> Result<LaurentPoly, ParseError> {
    let vars = vec!["u".to_string()];
    let mut poly = LaurentPoly::zero(&vars, ch);
    let mut c = Cursor {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let mut first = true;
    loop {
        let sign: i64;
        match c.peek() {
            None if first => {
                return Err(ParseError {
                    position: 0,
                    message: "empty polynomial".to_string(),
                })
            }
            None => return Ok(poly),
            Some(b'+') => {
                c.bump();
                sign = 1;
            }
            Some(b'-') => {
                c.bump();
                sign = -1;
            }
            Some(_) if first => {
                sign = 1;
            }
            Some(other) => {
                return Err(ParseError {
                    position: c.pos,
                    message: format!("expected '+' or '-', found '{}'", other as char),
                })
            }
        }
        first = false;
        // One term: [coeff ['/' den]] ['*'] ['u' ['^' exp]].
        let mut coeff_num: Option<i64> = None;
        let mut coeff_den: i64 = 1;
        if matches!(c.peek(), Some(b) if b.is_ascii_digit()) {
            coeff_num = Some(c.integer()?);
            if c.peek() == Some(b'/') {
                if !ch.is_rational() {
                    return Err(ParseError {
                        position: c.pos,
                        message: "fractional coefficients need characteristic 0".to_string(),
                    });
                }
                c.bump();
                coeff_den = c.integer()?;
                if coeff_den == 0 {
                    return Err(ParseError {
                        position: c.pos,
                        message: "zero denominator".to_string(),
                    });
                }
            }
        }
        if c.peek() == Some(b'*') {
            c.bump();
        }
        let mut exp = 0i64;
        if c.peek() == Some(b'u') {
            c.bump();
            exp = 1;
            if c.peek() == Some(b'^') {
                c.bump();
                let neg = if c.peek() == Some(b'-') {
                    c.bump();
                    true
                } else {
                    false
                };
                exp = c.integer()?;
                if neg {
                    exp = -exp;
                }
            }
        } else if coeff_num.is_none() {
            return Err(ParseError {
                position: c.pos,
                message: "expected a coefficient or 'u'".to_string(),
            });
        }
        let num = sign * coeff_num.unwrap_or(1);
        let coeff = if ch.is_rational() && coeff_den != 1 {
            FieldElement::from_rational(num, coeff_den).expect("nonzero denominator")
        } else {
            FieldElement::from_integer(num, ch)
        };
        poly.add_term(&[exp], &coeff);
    }
}
