//! Expression language: lexer, Pratt parser, and a renderer whose output
//! parses back to the same tree.
//!
//! Precedence from tightest: `^` (integer exponent), unary `-`, `* /`,
//! `+ -`. Function forms: `exp(e)`, `R(k, z0)`, `Li(k)`, `ene(e1, e2)`,
//! `zinf(m, z0)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// `n·i`; the bare identifier `i` is `Imag(1)`.
    Imag(BigInt),
    Z,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Exp(Box<Expr>),
    /// `R_k(z/z0)`.
    R(i64, Box<Expr>),
    Li(i64),
    Ene(Box<Expr>, Box<Expr>),
    /// `(1 − z/z0)^{m·∞}`.
    Zinf(i64, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Imag(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Imag(n) => write!(f, "`{n}i`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n: BigInt = digits.parse().expect("digits");
            let imag = i < chars.len()
                && chars[i] == 'i'
                && !chars.get(i + 1).is_some_and(|c| c.is_alphanumeric() || *c == '_');
            if imag {
                i += 1;
            }
            column += i - start;
            out.push(Token {
                tok: if imag { Tok::Imag(n) } else { Tok::Int(n) },
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
            continue;
        }
        if "+-*/^(),".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                line: l0,
                column: c0,
            });
            column += 1;
            i += 1;
            continue;
        }
        return Err(ParseError {
            line,
            column,
            message: format!("unexpected character `{c}`"),
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_NEG: u8 = 3;
const PREC_POW: u8 = 4;
const PREC_ATOM: u8 = 5;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: String) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            Err(Self::error_at(&t, format!("expected `{c}`, found {}", t.tok)))
        }
    }

    fn expression(&mut self, min_prec: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.prefix()?;
        loop {
            let prec = match self.peek().tok {
                Tok::Sym('+') | Tok::Sym('-') => PREC_ADD,
                Tok::Sym('*') | Tok::Sym('/') => PREC_MUL,
                _ => break,
            };
            if prec < min_prec {
                break;
            }
            let op = self.next();
            let rhs = self.expression(prec + 1)?;
            lhs = match op.tok {
                Tok::Sym('+') => Expr::Add(Box::new(lhs), Box::new(rhs)),
                Tok::Sym('-') => Expr::Sub(Box::new(lhs), Box::new(rhs)),
                Tok::Sym('*') => Expr::Mul(Box::new(lhs), Box::new(rhs)),
                _ => Expr::Div(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Sym('-') {
            self.next();
            return Ok(Expr::Neg(Box::new(self.prefix()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Sym('^') {
            return Ok(base);
        }
        self.next();
        let e = self.signed_integer("exponent")?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    /// An integer literal with optional sign, optionally parenthesized.
    fn signed_integer(&mut self, what: &str) -> Result<i64, ParseError> {
        let start = self.peek().clone();
        if start.tok == Tok::Sym('(') {
            self.next();
            let v = self.signed_integer(what)?;
            self.expect(')')?;
            return Ok(v);
        }
        let neg = if self.peek().tok == Tok::Sym('-') {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        let Tok::Int(n) = &t.tok else {
            return Err(Self::error_at(
                &t,
                format!("non-integer {what}: expected an integer literal, found {}", t.tok),
            ));
        };
        if matches!(self.peek().tok, Tok::Sym('/') | Tok::Sym('*') | Tok::Sym('^'))
            && what != "exponent"
        {
            let t = self.peek().clone();
            return Err(Self::error_at(&t, format!("non-integer {what}")));
        }
        let v: i64 = i64::try_from(n).map_err(|_| Self::error_at(&t, format!("{what} out of range")))?;
        Ok(if neg { -v } else { v })
    }

    fn args_open(&mut self, name: &str) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok != Tok::Sym('(') {
            return Err(Self::error_at(&t, format!("expected `(` after `{name}`, found {}", t.tok)));
        }
        Ok(())
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => Ok(Expr::Int(n.clone())),
            Tok::Imag(n) => Ok(Expr::Imag(n.clone())),
            Tok::Sym('(') => {
                let e = self.expression(PREC_ADD)?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "z" => Ok(Expr::Z),
                "i" => Ok(Expr::Imag(BigInt::one())),
                "exp" => {
                    self.args_open(name)?;
                    let e = self.expression(PREC_ADD)?;
                    self.expect(')')?;
                    Ok(Expr::Exp(Box::new(e)))
                }
                "ene" => {
                    self.args_open(name)?;
                    let a = self.expression(PREC_ADD)?;
                    self.expect(',')?;
                    let b = self.expression(PREC_ADD)?;
                    self.expect(')')?;
                    Ok(Expr::Ene(Box::new(a), Box::new(b)))
                }
                "R" | "zinf" => {
                    self.args_open(name)?;
                    let k = self.signed_integer("index argument")?;
                    self.expect(',')?;
                    let z0 = self.expression(PREC_ADD)?;
                    self.expect(')')?;
                    Ok(if name == "R" {
                        Expr::R(k, Box::new(z0))
                    } else {
                        Expr::Zinf(k, Box::new(z0))
                    })
                }
                "Li" => {
                    self.args_open(name)?;
                    let k = self.signed_integer("index argument")?;
                    self.expect(')')?;
                    Ok(Expr::Li(k))
                }
                _ => Err(Self::error_at(&t, format!("unknown identifier `{name}`"))),
            },
            _ => Err(Self::error_at(&t, format!("expected expression, found {}", t.tok))),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let e = p.expression(PREC_ADD)?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return Err(Parser::error_at(&t, format!("unexpected {} after expression", t.tok)));
    }
    Ok(e)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => PREC_ADD,
            Expr::Mul(..) | Expr::Div(..) => PREC_MUL,
            Expr::Neg(_) => PREC_NEG,
            Expr::Pow(..) => PREC_POW,
            _ => PREC_ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            fmt::Display::fmt(self, f)?;
            return f.write_str(")");
        }
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Imag(n) if n.is_one() => f.write_str("i"),
            Expr::Imag(n) => write!(f, "{n}i"),
            Expr::Z => f.write_str("z"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.write_at(f, PREC_NEG)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, PREC_ADD)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write_at(f, PREC_MUL)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(f, PREC_MUL)?;
                f.write_str(if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                b.write_at(f, PREC_NEG)
            }
            Expr::Pow(b, e) => {
                b.write_at(f, PREC_ATOM)?;
                if *e < 0 {
                    write!(f, "^({e})")
                } else {
                    write!(f, "^{e}")
                }
            }
            Expr::Exp(e) => write!(f, "exp({e})"),
            Expr::R(k, z0) => write!(f, "R({k}, {z0})"),
            Expr::Li(k) => write!(f, "Li({k})"),
            Expr::Ene(a, b) => write!(f, "ene({a}, {b})"),
            Expr::Zinf(m, z0) => write!(f, "zinf({m}, {z0})"),
        }
    }
}

/// An exact scalar as an expression, e.g. `(1/2 - 3/4*i)`.
pub fn scalar_expr(g: &ene::algebra::Gaussian) -> Expr {
    use ene::algebra::ExactRational;

    fn rational(q: &ExactRational, imag: bool) -> Expr {
        let num = q.numer().abs();
        let mut e = if imag {
            Expr::Imag(num)
        } else {
            Expr::Int(num)
        };
        if !q.denom().is_one() {
            e = Expr::Div(Box::new(e), Box::new(Expr::Int(q.denom().clone())));
        }
        e
    }

    let (re, im) = (&g.re, &g.im);
    if im.is_zero() {
        let e = rational(re, false);
        return if re.is_negative() { Expr::Neg(Box::new(e)) } else { e };
    }
    let i_part = rational(im, true);
    if re.is_zero() {
        return if im.is_negative() { Expr::Neg(Box::new(i_part)) } else { i_part };
    }
    let r_part = rational(re, false);
    let r_part = if re.is_negative() { Expr::Neg(Box::new(r_part)) } else { r_part };
    if im.is_negative() {
        Expr::Sub(Box::new(r_part), Box::new(i_part))
    } else {
        Expr::Add(Box::new(r_part), Box::new(i_part))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Box<Expr> {
        Box::new(Expr::Int(n.into()))
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse("-z^2").unwrap(),
            Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Z), 2)))
        );
        assert_eq!(
            parse("1 - z/2").unwrap(),
            Expr::Sub(int(1), Box::new(Expr::Div(Box::new(Expr::Z), int(2))))
        );
        assert_eq!(
            parse("1 - 2 - 3").unwrap(),
            Expr::Sub(Box::new(Expr::Sub(int(1), int(2))), int(3))
        );
    }

    #[test]
    fn function_forms() {
        assert_eq!(
            parse("exp(R(3, 1/2))").unwrap(),
            Expr::Exp(Box::new(Expr::R(3, Box::new(Expr::Div(int(1), int(2))))))
        );
        assert!(matches!(parse("ene(1 - z/2, 1 - z/3)").unwrap(), Expr::Ene(..)));
        assert_eq!(parse("Li(-2)").unwrap(), Expr::Li(-2));
        assert_eq!(parse("2 + 3i").unwrap(), Expr::Add(int(2), Box::new(Expr::Imag(3.into()))));
        assert_eq!(parse("z^(-2)").unwrap(), parse("z^-2").unwrap());
    }

    #[test]
    fn errors() {
        let e = parse("1 -").unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        let e = parse("R(1/2, 1)").unwrap_err();
        assert!(e.message.contains("non-integer index"), "{e}");
        let e = parse("R(z, 1)").unwrap_err();
        assert!(e.message.contains("non-integer index"), "{e}");
        let e = parse("foo(1)").unwrap_err();
        assert!(e.message.contains("unknown identifier"));
        let e = parse("1 +\n  (z").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        assert!(parse("z^z").is_err());
        assert!(parse("1 $ 2").is_err());
    }

    #[test]
    fn render_round_trip() {
        for s in [
            "-(z - 1)^3",
            "(1 - z)/(1 + z)",
            "z/(2*z)",
            "1 - (2 - z)",
            "exp(-R(2, 1/3)) * zinf(-1, 1 + i)",
            "-(-z)",
            "(-z)^2",
            "z^(-2)",
            "ene(exp(R(1, 1)), exp(-Li(2)))",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{s} -> {e}");
        }
    }

    #[test]
    fn scalars_render_parseably() {
        use ene::algebra::Gaussian;
        for g in [
            Gaussian::ratio(-1, 2),
            Gaussian::complex(1, 2, -3, 4),
            Gaussian::complex(0, 1, -1, 1),
            Gaussian::from_int(-7),
        ] {
            let s = scalar_expr(&g).to_string();
            assert_eq!(parse(&s).unwrap(), scalar_expr(&g), "{s}");
        }
        assert_eq!(scalar_expr(&Gaussian::complex(1, 2, -3, 4)).to_string(), "1/2 - 3i/4");
    }
}
