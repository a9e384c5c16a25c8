//! Plain-text expression syntax: integers, rationals `p/q`, the imaginary
//! unit `i`, identifiers, operators `+ - * / ^` and parentheses. The printed
//! canonical form of [`RatFun`] parses back to an equal value.

use super::gaussrat::GaussRat;
use super::poly::Ring;
use super::ratfun::RatFun;
use super::{ExactError, ExactResult};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn next_tok(&mut self) -> ExactResult<Tok> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                Tok::Int(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
            }
            other => {
                return Err(ExactError::Parse(format!(
                    "unexpected character {:?}",
                    other as char
                )))
            }
        })
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    cur: Tok,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, ring: &'a Ring) -> ExactResult<Self> {
        let mut lex = Lexer::new(src);
        let cur = lex.next_tok()?;
        Ok(Parser { lex, cur, ring })
    }

    fn bump(&mut self) -> ExactResult<()> {
        self.cur = self.lex.next_tok()?;
        Ok(())
    }

    fn expr(&mut self) -> ExactResult<RatFun> {
        let mut acc = self.term()?;
        loop {
            match self.cur {
                Tok::Plus => {
                    self.bump()?;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump()?;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> ExactResult<RatFun> {
        let mut acc = self.unary()?;
        loop {
            match self.cur {
                Tok::Star => {
                    self.bump()?;
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    self.bump()?;
                    acc = acc.div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> ExactResult<RatFun> {
        match self.cur {
            Tok::Minus => {
                self.bump()?;
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump()?;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> ExactResult<RatFun> {
        let base = self.atom()?;
        if self.cur == Tok::Caret {
            self.bump()?;
            let mut neg = false;
            while matches!(self.cur, Tok::Minus) {
                neg = !neg;
                self.bump()?;
            }
            let n = match &self.cur {
                Tok::Int(s) => s
                    .parse::<i64>()
                    .map_err(|e| ExactError::Parse(e.to_string()))?,
                other => {
                    return Err(ExactError::Parse(format!(
                        "expected integer exponent, found {other:?}"
                    )))
                }
            };
            self.bump()?;
            return base.pow(if neg { -n } else { n });
        }
        Ok(base)
    }

    fn atom(&mut self) -> ExactResult<RatFun> {
        match self.cur.clone() {
            Tok::Int(s) => {
                self.bump()?;
                let n = s
                    .parse::<i64>()
                    .map_err(|e| ExactError::Parse(e.to_string()))?;
                Ok(RatFun::int(self.ring, n))
            }
            Tok::Ident(name) => {
                self.bump()?;
                if name == "i" {
                    Ok(RatFun::constant(self.ring, GaussRat::i()))
                } else if self.ring.var_index(&name).is_some() {
                    Ok(RatFun::var(self.ring, &name))
                } else {
                    Err(ExactError::UnknownIndeterminate(name))
                }
            }
            Tok::LParen => {
                self.bump()?;
                let e = self.expr()?;
                if self.cur != Tok::RParen {
                    return Err(ExactError::Parse("expected ')'".into()));
                }
                self.bump()?;
                Ok(e)
            }
            other => Err(ExactError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse an expression over the given ring.
pub fn parse_expr(src: &str, ring: &Ring) -> ExactResult<RatFun> {
    let mut p = Parser::new(src, ring)?;
    let e = p.expr()?;
    if p.cur != Tok::End {
        return Err(ExactError::Parse(format!(
            "trailing input at token {:?}",
            p.cur
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_i() {
        let ring = Ring::new(&["t", "q"]);
        let f = parse_expr("1/2 - 3/4*i", &ring).unwrap();
        assert_eq!(
            f.as_constant().unwrap(),
            GaussRat::from_ratio(1, 2) + GaussRat::from_ratio_i(-3, 4)
        );
    }

    #[test]
    fn parses_polynomials() {
        let ring = Ring::new(&["t", "q"]);
        let f = parse_expr("(q^2 - 1)/(q - 1)", &ring).unwrap();
        let q = RatFun::var(&ring, "q");
        assert_eq!(f, q.add(&RatFun::one(&ring)));
    }

    #[test]
    fn print_parse_round_trip() {
        let ring = Ring::new(&["t", "q", "a"]);
        let q = RatFun::var(&ring, "q");
        let t = RatFun::var(&ring, "t");
        let a = RatFun::var(&ring, "a");
        let f = q
            .pow(3)
            .unwrap()
            .mul_scalar(&GaussRat::from_ratio_i(-2, 3))
            .add(&a.mul(&t))
            .div(&t.sub(&q))
            .unwrap();
        let s = f.to_string();
        let g = parse_expr(&s, &ring).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn rejects_unknown_symbols() {
        let ring = Ring::new(&["t"]);
        assert!(parse_expr("nope + 1", &ring).is_err());
    }
}
