use num_bigint::BigInt;

use super::monomial::Variable;
use super::{AlgebraError, Scalar};

/// Parses the canonical text form (and any other expression built from
/// integers, variables such as `x[-1]` or `q`, `+ - * / ^` and parentheses).
pub fn parse_scalar(input: &str) -> Result<Scalar, AlgebraError> {
    let mut p = Parser {
        s: input.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, AlgebraError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let e = self.integer()?;
            let e: i32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<Scalar, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_bigint(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                let family = c as char;
                if self.eat(b'[') {
                    let neg = self.eat(b'-');
                    let i = self.integer()?;
                    let i: i32 = i.try_into().map_err(|_| self.err("index too large"))?;
                    if !self.eat(b']') {
                        return Err(self.err("expected ']'"));
                    }
                    Ok(Scalar::var(Variable::indexed(
                        family,
                        if neg { -i } else { i },
                    )))
                } else {
                    Ok(Scalar::var(Variable::symbol(family)))
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_canonical_strings() {
        for text in [
            "(1-x[-1]*x[0])/(1-x[0])",
            "1+q",
            "3/4*x[3]-x[-1]*x[0]^2",
            "x[2]^-1",
            "0",
            "-7/3",
        ] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(parse_scalar(&s.to_string()).unwrap(), s, "{text}");
        }
        assert_eq!(
            parse_scalar("(1-x[-1]*x[0])/(1-x[0])").unwrap().to_string(),
            "(1-x[-1]*x[0])/(1-x[0])"
        );
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(
            parse_scalar("1+"),
            Err(AlgebraError::Parse { pos: 2, .. })
        ));
        assert!(parse_scalar("x[1").is_err());
        assert!(parse_scalar("1/0").is_err());
    }
}
