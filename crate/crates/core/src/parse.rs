//! Text grammar for polynomials.
//!
//! ```text
//! expr     := ('+'|'-')? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' nat)?
//! atom     := rational | var | '(' expr ')'
//! var      := ('x'|'a'|'c') nat | 'mu' nat?
//! rational := int ('/' nat)?
//! ```
//!
//! Whitespace is insignificant. `x` and `a` are interchangeable aliases for
//! the sequence variables; `c` names the second-sequence block and `mu` the
//! scalar parameters.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::monomial::Var;
use crate::num::Rat;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn lex(input: &str) -> Result<Vec<Spanned>, Error> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                digits.push(chars[i]);
                advance(&mut i, &mut line, &mut col);
            }
            let n: BigInt = digits.parse().expect("digit string");
            toks.push(Spanned {
                tok: Tok::Num(n),
                line: tline,
                col: tcol,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                name.push(chars[i]);
                advance(&mut i, &mut line, &mut col);
            }
            let mut digits = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                digits.push(chars[i]);
                advance(&mut i, &mut line, &mut col);
            }
            let index = if digits.is_empty() {
                None
            } else {
                Some(
                    digits
                        .parse::<u32>()
                        .map_err(|_| err(tline, tcol, "variable index overflow"))?,
                )
            };
            let var = match (name.as_str(), index) {
                ("x" | "a", Some(n)) => Var::X(n),
                ("c", Some(n)) => Var::C(n),
                ("mu", n) => Var::Param(n.unwrap_or(0)),
                ("x" | "a" | "c", None) => {
                    return Err(err(
                        tline,
                        tcol,
                        format!("variable '{name}' needs an index"),
                    ))
                }
                _ => return Err(err(tline, tcol, format!("unknown token '{name}'"))),
            };
            toks.push(Spanned {
                tok: Tok::Var(var),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(err(tline, tcol, format!("unknown token '{c}'"))),
        };
        toks.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
        advance(&mut i, &mut line, &mut col);
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), Error> {
        let (l, c) = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(err(l, c, format!("expected {what}"))),
        }
    }

    fn parse_nat_u32(&mut self, what: &str, overflow: &str) -> Result<u32, Error> {
        let (l, c) = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => u32::try_from(n).map_err(|_| err(l, c, overflow)),
            _ => Err(err(l, c, format!("expected {what}"))),
        }
    }

    fn parse_expr(&mut self) -> Result<Polynomial, Error> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.parse_term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc += &t;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc -= &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.parse_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial, Error> {
        let atom = self.parse_atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let e = self.parse_nat_u32("natural exponent after '^'", "exponent overflow")?;
            return Ok(atom.pow(e));
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<Polynomial, Error> {
        let (l, c) = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => self.finish_rational(n),
            Some(Tok::Minus) => {
                // signed integer literal, e.g. "x0*-3"
                let (l2, c2) = self.here();
                match self.bump() {
                    Some(Tok::Num(n)) => self.finish_rational(-n),
                    _ => Err(err(l2, c2, "expected integer after sign")),
                }
            }
            Some(Tok::Var(v)) => Ok(Polynomial::var(v)),
            Some(Tok::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(err(l, c, "expected rational, variable, or '('")),
        }
    }

    fn finish_rational(&mut self, numer: BigInt) -> Result<Polynomial, Error> {
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let (l, c) = self.here();
            match self.bump() {
                Some(Tok::Num(d)) => {
                    if d.is_zero() {
                        return Err(err(l, c, "zero denominator"));
                    }
                    Ok(Polynomial::constant(Rat::new(numer, d)))
                }
                _ => Err(err(l, c, "expected natural denominator after '/'")),
            }
        } else {
            Ok(Polynomial::constant(Rat::from_integer(numer)))
        }
    }
}

/// Parses the polynomial grammar; inverse of the canonical printer.
pub fn parse_poly(input: &str) -> Result<Polynomial, Error> {
    let toks = lex(input)?;
    let lines = input.lines().count().max(1);
    let last_len = input.lines().last().map(|l| l.chars().count()).unwrap_or(0);
    let mut p = Parser {
        toks,
        pos: 0,
        end_line: lines,
        end_col: last_len + 1,
    };
    if p.peek().is_none() {
        return Err(err(1, 1, "empty input"));
    }
    let poly = p.parse_expr()?;
    if p.peek().is_some() {
        let (l, c) = p.here();
        return Err(err(l, c, "unexpected trailing input"));
    }
    Ok(poly)
}
