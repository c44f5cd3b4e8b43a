//! Expressions in `omega`, `J`, rational constants, `*`, `+`, `-` and
//! parentheses, evaluated to Zhu-algebra representatives.
//!
//! `*` is Zhu's product, applied left to right; constants are multiples of
//! the vacuum.

use m1plus::exactlin::Rational;
use m1plus::zhu::ZhuElement;
use m1plus::Error;
use num_bigint::BigInt;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
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

    fn expr(&mut self) -> Result<ZhuElement, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ZhuElement, Error> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.star(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ZhuElement, Error> {
        if self.eat('-') {
            return Ok(self.factor()?.scale(&Rational::from_integer((-1).into())));
        }
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(inner);
        }
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat('/') {
                    self.skip_ws();
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                if den == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
                Ok(ZhuElement::constant(Rational::new(num, den)))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric()) {
                    self.pos += self.peek().map_or(0, char::len_utf8);
                }
                match &self.src[start..self.pos] {
                    "omega" | "ω" => Ok(ZhuElement::omega()),
                    "J" => Ok(ZhuElement::j()),
                    other => {
                        self.pos = start;
                        Err(self.err(&format!("unknown generator '{other}'")))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err("expected an integer"))
    }
}

pub fn parse(src: &str) -> Result<ZhuElement, Error> {
    let mut p = Parser { src, pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use m1plus::exactlin::rat;

    #[test]
    fn parses_generators_and_constants() {
        assert_eq!(parse("omega").unwrap(), ZhuElement::omega());
        assert_eq!(parse(" J ").unwrap(), ZhuElement::j());
        assert_eq!(parse("3/4").unwrap(), ZhuElement::constant(rat(3, 4)));
        assert_eq!(parse("J*J").unwrap(), ZhuElement::j().star(&ZhuElement::j()));
        let w = ZhuElement::omega();
        let expect = w.sub(&ZhuElement::constant(rat(1, 16))).star(&w);
        assert_eq!(parse("(omega - 1/16) * omega").unwrap(), expect);
        assert_eq!(parse("-J + J").unwrap().vector().is_zero(), true);
    }

    #[test]
    fn reports_positions() {
        assert!(matches!(parse("J +"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse("K"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse("(J"), Err(Error::Parse { .. })));
        assert!(matches!(parse("1/0"), Err(Error::Parse { .. })));
    }
}
