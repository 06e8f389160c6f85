//! ASCII expressions for polynomials, forms and multivector fields.
//!
//! ```text
//! sum      = term , { ( "+" | "-" ) , term } ;
//! term     = [ "+" | "-" ] , product ;
//! product  = power , { "*" , power | "/" , integer } ;
//! power    = primary , [ "^" , integer ] ;
//! primary  = integer | variable | "(" , sum , ")" | wedge ;
//! wedge    = "[" , atom , { "^" , atom } , "]" ;
//! atom     = "dx" , index | "e" , index ;
//! variable = "x" , index ;
//! index    = digit , { digit } ;
//! integer  = digit , { digit } ;
//! ```
//!
//! Whitespace (space, tab, newline) may separate tokens. Inside a wedge
//! group `^` is the exterior product; elsewhere it is an integer power.
//! Forms and multivectors are written as `coefficient * [dx1^dx3]` and
//! `coefficient * [e2^e4]`; the two kinds cannot be mixed.

use std::fmt;

use poisson_forge_core::rational::one;
use poisson_forge_core::{ExteriorIndex, GradedElement, Kind, Polynomial, Rational};
use thiserror::Error;

const MAX_EXPONENT: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("non-ASCII input")]
    NonAscii,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("variable index {index} outside 1..={dim}")]
    UnknownVariable { index: usize, dim: usize },
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent larger than {MAX_EXPONENT}")]
    ExponentTooLarge,
    #[error("division by zero")]
    DivisionByZero,
    #[error("forms and multivectors mixed")]
    MixedKinds,
    #[error("terms of different degree added")]
    MixedDegrees,
    #[error("only polynomials can be raised to a power")]
    NonScalarPower,
    #[error("expected a polynomial, found a {0}")]
    NotAPolynomial(&'static str),
    #[error("expected a {expected}, found a {found}")]
    WrongKind { expected: &'static str, found: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(offset: usize, kind: ParseErrorKind) -> Self {
        Self { offset, kind }
    }
}

type Parsed<T> = Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Number(Rational),
    /// Zero-based axis.
    Variable(usize),
    /// Zero-based axes in written order.
    Wedge(Kind, Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Rational),
    Pow(Box<Expr>, u32),
}

/// A parsed expression; `offset` is the byte where it starts.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub offset: usize,
    pub kind: ExprKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Integer(String),
    Variable(usize),
    Atom(Kind, usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
}

impl<'a> Lexer<'a> {
    fn skip_space(&mut self) {
        while self.pos < self.src.len() && matches!(self.src[self.pos], b' ' | b'\t' | b'\n' | b'\r') {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }

    fn index(&mut self, start: usize) -> Parsed<usize> {
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(ParseError::new(at, ParseErrorKind::Expected("an index")));
        }
        let index: usize = digits.parse().unwrap_or(usize::MAX);
        if index == 0 || index > self.dim {
            return Err(ParseError::new(start, ParseErrorKind::UnknownVariable { index, dim: self.dim }));
        }
        Ok(index - 1)
    }

    fn next(&mut self) -> Parsed<(usize, Token)> {
        self.skip_space();
        let start = self.pos;
        let Some(&b) = self.src.get(self.pos) else { return Ok((start, Token::End)) };
        let single = match b {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'/' => Some(Token::Slash),
            b'^' => Some(Token::Caret),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            b'[' => Some(Token::LBracket),
            b']' => Some(Token::RBracket),
            _ => None,
        };
        if let Some(t) = single {
            self.pos += 1;
            return Ok((start, t));
        }
        if b.is_ascii_digit() {
            return Ok((start, Token::Integer(self.digits().to_owned())));
        }
        if b.is_ascii_alphabetic() {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                self.pos += 1;
            }
            let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
            let token = match word {
                "x" => Token::Variable(self.index(start)?),
                "dx" => Token::Atom(Kind::Form, self.index(start)?),
                "e" => Token::Atom(Kind::Multivector, self.index(start)?),
                _ => return Err(ParseError::new(start, ParseErrorKind::UnknownIdentifier(word.to_owned()))),
            };
            return Ok((start, token));
        }
        Err(ParseError::new(start, ParseErrorKind::UnexpectedChar(b as char)))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<(usize, Token)>,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Parsed<&(usize, Token)> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next()?);
        }
        Ok(self.peeked.as_ref().expect("peeked"))
    }

    fn bump(&mut self) -> Parsed<(usize, Token)> {
        self.peek()?;
        Ok(self.peeked.take().expect("peeked"))
    }

    fn unexpected(offset: usize, token: &Token, wanted: &'static str) -> ParseError {
        match token {
            Token::End => ParseError::new(offset, ParseErrorKind::UnexpectedEnd),
            _ => ParseError::new(offset, ParseErrorKind::Expected(wanted)),
        }
    }

    fn sum(&mut self) -> Parsed<Expr> {
        let mut left = self.term()?;
        loop {
            let token = self.peek()?.1.clone();
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match token {
                Token::Plus => ExprKind::Add,
                Token::Minus => ExprKind::Sub,
                _ => return Ok(left),
            };
            self.bump()?;
            let right = self.term()?;
            left = Expr { offset: left.offset, kind: ctor(Box::new(left), Box::new(right)) };
        }
    }

    fn term(&mut self) -> Parsed<Expr> {
        let (offset, token) = self.peek()?.clone();
        match token {
            Token::Minus => {
                self.bump()?;
                let inner = self.product()?;
                Ok(Expr { offset, kind: ExprKind::Neg(Box::new(inner)) })
            }
            Token::Plus => {
                self.bump()?;
                self.product()
            }
            _ => self.product(),
        }
    }

    fn product(&mut self) -> Parsed<Expr> {
        let mut left = self.power()?;
        loop {
            let (offset, token) = self.peek()?.clone();
            match token {
                Token::Star => {
                    self.bump()?;
                    let right = self.power()?;
                    left = Expr { offset: left.offset, kind: ExprKind::Mul(Box::new(left), Box::new(right)) };
                }
                Token::Slash => {
                    self.bump()?;
                    let (at, t) = self.bump()?;
                    let Token::Integer(digits) = t else { return Err(Self::unexpected(at, &t, "an integer divisor")) };
                    let d: Rational = digits.parse().expect("digits");
                    if d == Rational::default() {
                        return Err(ParseError::new(offset, ParseErrorKind::DivisionByZero));
                    }
                    left = Expr { offset: left.offset, kind: ExprKind::Div(Box::new(left), d) };
                }
                _ => return Ok(left),
            }
        }
    }

    fn exponent(&mut self) -> Parsed<u32> {
        let (at, t) = self.bump()?;
        match t {
            Token::Integer(digits) => match digits.parse::<u32>() {
                Ok(e) if e <= MAX_EXPONENT => Ok(e),
                _ => Err(ParseError::new(at, ParseErrorKind::ExponentTooLarge)),
            },
            Token::Minus => Err(ParseError::new(at, ParseErrorKind::NegativeExponent)),
            t => Err(Self::unexpected(at, &t, "a non-negative integer exponent")),
        }
    }

    fn power(&mut self) -> Parsed<Expr> {
        let base = self.primary()?;
        if self.peek()?.1 == Token::Caret {
            self.bump()?;
            let e = self.exponent()?;
            return Ok(Expr { offset: base.offset, kind: ExprKind::Pow(Box::new(base), e) });
        }
        Ok(base)
    }

    fn primary(&mut self) -> Parsed<Expr> {
        let (offset, token) = self.bump()?;
        let kind = match token {
            Token::Integer(digits) => ExprKind::Number(digits.parse().expect("digits")),
            Token::Variable(i) => ExprKind::Variable(i),
            Token::LParen => {
                let inner = self.sum()?;
                let (at, t) = self.bump()?;
                if t != Token::RParen {
                    return Err(Self::unexpected(at, &t, "')'"));
                }
                return Ok(Expr { offset, kind: inner.kind });
            }
            Token::LBracket => self.wedge()?,
            Token::Atom(..) => return Err(ParseError::new(offset, ParseErrorKind::Expected("'[' before a wedge atom"))),
            t => return Err(Self::unexpected(offset, &t, "a number, variable, '(' or '['")),
        };
        Ok(Expr { offset, kind })
    }

    fn wedge(&mut self) -> Parsed<ExprKind> {
        let mut kind = None;
        let mut axes = Vec::new();
        loop {
            let (at, t) = self.bump()?;
            let Token::Atom(k, axis) = t else { return Err(Self::unexpected(at, &t, "dx<i> or e<i>")) };
            if kind.is_some_and(|seen| seen != k) {
                return Err(ParseError::new(at, ParseErrorKind::MixedKinds));
            }
            kind = Some(k);
            axes.push(axis);
            let (at, t) = self.bump()?;
            match t {
                Token::Caret => continue,
                Token::RBracket => return Ok(ExprKind::Wedge(k, axes)),
                t => return Err(Self::unexpected(at, &t, "'^' or ']'")),
            }
        }
    }
}

/// Parse `src` into an expression over `x1..x{dim}`.
pub fn parse_expression(src: &str, dim: usize) -> Parsed<Expr> {
    if let Some(at) = src.bytes().position(|b| !b.is_ascii()) {
        return Err(ParseError::new(at, ParseErrorKind::NonAscii));
    }
    let mut p = Parser { lexer: Lexer { src: src.as_bytes(), pos: 0, dim }, peeked: None };
    let e = p.sum()?;
    let (at, t) = p.bump()?;
    if t != Token::End {
        return Err(ParseError::new(at, ParseErrorKind::Expected("an operator or end of input")));
    }
    Ok(e)
}

/// The value of an expression: a polynomial or a homogeneous element.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Polynomial),
    Element(GradedElement),
}

impl Value {
    fn describe(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "polynomial",
            Value::Element(e) if e.kind() == Kind::Form => "form",
            Value::Element(_) => "multivector",
        }
    }
}

fn add_values(at: usize, a: Value, b: Value, negate: bool) -> Parsed<Value> {
    let b = match (negate, b) {
        (false, b) => b,
        (true, Value::Scalar(p)) => Value::Scalar(-p),
        (true, Value::Element(e)) => Value::Element(-&e),
    };
    match (a, b) {
        (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(&p + &q)),
        (Value::Element(e), Value::Element(f)) => {
            if e.kind() != f.kind() {
                return Err(ParseError::new(at, ParseErrorKind::MixedKinds));
            }
            e.try_add(&f).map(Value::Element).map_err(|_| ParseError::new(at, ParseErrorKind::MixedDegrees))
        }
        (Value::Scalar(p), e @ Value::Element(_)) | (e @ Value::Element(_), Value::Scalar(p)) => {
            if p.is_zero() {
                Ok(e)
            } else {
                Err(ParseError::new(at, ParseErrorKind::MixedDegrees))
            }
        }
    }
}

fn lower(e: &Expr, dim: usize) -> Parsed<Value> {
    Ok(match &e.kind {
        ExprKind::Number(q) => Value::Scalar(Polynomial::constant(dim, q.clone())),
        ExprKind::Variable(i) => Value::Scalar(Polynomial::var(dim, *i)),
        ExprKind::Wedge(kind, axes) => {
            let mut out = GradedElement::scalar(*kind, Polynomial::one(dim));
            for &a in axes {
                let atom = GradedElement::monomial_element(*kind, ExteriorIndex::single(a), Polynomial::one(dim));
                out = out.wedge(&atom).expect("same kind");
            }
            Value::Element(out)
        }
        ExprKind::Neg(inner) => match lower(inner, dim)? {
            Value::Scalar(p) => Value::Scalar(-p),
            Value::Element(x) => Value::Element(-&x),
        },
        ExprKind::Add(a, b) => add_values(b.offset, lower(a, dim)?, lower(b, dim)?, false)?,
        ExprKind::Sub(a, b) => add_values(b.offset, lower(a, dim)?, lower(b, dim)?, true)?,
        ExprKind::Mul(a, b) => match (lower(a, dim)?, lower(b, dim)?) {
            (Value::Scalar(p), Value::Scalar(q)) => Value::Scalar(&p * &q),
            (Value::Scalar(p), Value::Element(x)) | (Value::Element(x), Value::Scalar(p)) => Value::Element(x.mul_poly(&p)),
            (Value::Element(x), Value::Element(y)) => {
                if x.kind() != y.kind() {
                    return Err(ParseError::new(b.offset, ParseErrorKind::MixedKinds));
                }
                Value::Element(x.wedge(&y).map_err(|_| ParseError::new(b.offset, ParseErrorKind::MixedKinds))?)
            }
        },
        ExprKind::Div(a, d) => {
            let inv = one() / d;
            match lower(a, dim)? {
                Value::Scalar(p) => Value::Scalar(p.scale(&inv)),
                Value::Element(x) => Value::Element(x.scale(&inv)),
            }
        }
        ExprKind::Pow(a, n) => match lower(a, dim)? {
            Value::Scalar(p) => Value::Scalar(p.pow(*n)),
            Value::Element(_) => return Err(ParseError::new(e.offset, ParseErrorKind::NonScalarPower)),
        },
    })
}

/// Parse and evaluate `src`.
pub fn evaluate(src: &str, dim: usize) -> Parsed<Value> {
    lower(&parse_expression(src, dim)?, dim)
}

pub fn parse_polynomial(src: &str, dim: usize) -> Parsed<Polynomial> {
    match evaluate(src, dim)? {
        Value::Scalar(p) => Ok(p),
        v => Err(ParseError::new(0, ParseErrorKind::NotAPolynomial(v.describe()))),
    }
}

/// Parse a form or multivector; a bare polynomial is read as degree zero.
pub fn parse_element(src: &str, dim: usize, kind: Kind) -> Parsed<GradedElement> {
    match evaluate(src, dim)? {
        Value::Scalar(p) => Ok(GradedElement::scalar(kind, p)),
        Value::Element(e) if e.kind() == kind => Ok(e),
        v => {
            let expected = if kind == Kind::Form { "form" } else { "multivector" };
            Err(ParseError::new(0, ParseErrorKind::WrongKind { expected, found: v.describe() }))
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(p) => write!(f, "{p}"),
            Value::Element(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poisson_forge_core::catalog::{f1, LefschetzCatalog};
    use poisson_forge_core::rational::frac;

    fn poly(src: &str) -> Polynomial {
        parse_polynomial(src, 4).unwrap()
    }

    fn err(src: &str) -> ParseError {
        parse_polynomial(src, 4).unwrap_err()
    }

    #[test]
    fn first_casimir() {
        assert_eq!(poly("x1^2 - x2^2 + x3^2 - x4^2"), f1());
    }

    #[test]
    fn zero_and_ring_laws() {
        assert!(poly("0").is_zero());
        assert!(poly("x1 - x1").is_zero());
        assert_eq!(poly("x1*(x3 + x4) - x1*x3"), Polynomial::from_int_terms(4, &[(1, &[1, 0, 0, 1])]));
        assert_eq!(poly("(x1 + x2)^2"), poly("x1^2 + 2*x1*x2 + x2^2"));
    }

    #[test]
    fn rationals_and_whitespace() {
        let p = poly(" 1/2*x1^2\t-\n3/4 ");
        assert_eq!(p.coeff(&poisson_forge_core::Monomial::new(vec![2, 0, 0, 0])), frac(1, 2));
        assert_eq!(p.constant_term(), frac(-3, 4));
        assert_eq!(poly("x1/2"), poly("1/2*x1"));
        assert_eq!(poly("-x1^2"), poly("-(x1^2)"));
        assert_eq!(poly("2^3"), poly("8"));
    }

    #[test]
    fn error_offsets() {
        assert_eq!(err("x1^-2"), ParseError::new(3, ParseErrorKind::NegativeExponent));
        assert_eq!(err("x1 + x5"), ParseError::new(5, ParseErrorKind::UnknownVariable { index: 5, dim: 4 }));
        assert_eq!(err("x0").kind, ParseErrorKind::UnknownVariable { index: 0, dim: 4 });
        assert_eq!(err("x1 + "), ParseError::new(5, ParseErrorKind::UnexpectedEnd));
        assert_eq!(err("x1 $ x2"), ParseError::new(3, ParseErrorKind::UnexpectedChar('$')));
        assert_eq!(err("(x1 + x2"), ParseError::new(8, ParseErrorKind::UnexpectedEnd));
        assert_eq!(err("x1 x2"), ParseError::new(3, ParseErrorKind::Expected("an operator or end of input")));
        assert_eq!(err("x1/0"), ParseError::new(2, ParseErrorKind::DivisionByZero));
        assert_eq!(err("y1").kind, ParseErrorKind::UnknownIdentifier("y".into()));
        assert_eq!(err("x1^999"), ParseError::new(3, ParseErrorKind::ExponentTooLarge));
        assert_eq!(err("x1*-x2").offset, 3);
        assert_eq!(poly("x1 - -x2"), poly("x1 + x2"));
    }

    #[test]
    fn unicode_is_rejected() {
        assert_eq!(err("x\u{2081} + x2"), ParseError::new(1, ParseErrorKind::NonAscii));
        assert_eq!(err("x1 \u{2212} x2"), ParseError::new(3, ParseErrorKind::NonAscii));
        assert_eq!(err("x1\u{b2}").offset, 2);
    }

    #[test]
    fn display_of_errors_carries_the_offset() {
        assert_eq!(err("x1^-2").to_string(), "negative exponent at byte 3");
    }

    #[test]
    fn forms_and_fields() {
        let c = LefschetzCatalog::new();
        let df1 = parse_element("2*x1*[dx1] - 2*x2*[dx2] + 2*x3*[dx3] - 2*x4*[dx4]", 4, Kind::Form).unwrap();
        assert_eq!(df1, c.df1);
        let a = parse_element("[dx2^dx1]", 4, Kind::Form).unwrap();
        assert_eq!(a, -&parse_element("[dx1^dx2]", 4, Kind::Form).unwrap());
        assert!(parse_element("[dx1^dx1]", 4, Kind::Form).unwrap().is_zero());
        let w = parse_element("[dx1]*[dx2]", 4, Kind::Form).unwrap();
        assert_eq!(w, parse_element("[dx1^dx2]", 4, Kind::Form).unwrap());
        let v = parse_element("x1*[e1] + x2*[e2]", 4, Kind::Multivector).unwrap();
        assert_eq!(v.degree(), 1);
        assert_eq!(parse_element("x1", 4, Kind::Form).unwrap().degree(), 0);
    }

    #[test]
    fn element_errors() {
        let e = |s: &str| parse_element(s, 4, Kind::Form).unwrap_err();
        assert_eq!(e("[dx1^e2]"), ParseError::new(5, ParseErrorKind::MixedKinds));
        assert_eq!(e("[dx1] + [dx1^dx2]").kind, ParseErrorKind::MixedDegrees);
        assert_eq!(e("x1 + [dx1]").kind, ParseErrorKind::MixedDegrees);
        assert_eq!(e("[dx1]^2"), ParseError::new(0, ParseErrorKind::NonScalarPower));
        assert_eq!(e("dx1"), ParseError::new(0, ParseErrorKind::Expected("'[' before a wedge atom")));
        assert_eq!(e("[e1]").kind, ParseErrorKind::WrongKind { expected: "form", found: "multivector" });
        assert_eq!(err("[dx1]").kind, ParseErrorKind::NotAPolynomial("form"));
    }

    #[test]
    fn printed_elements_parse_back() {
        let c = LefschetzCatalog::new();
        for a in [&c.df1, &c.zeta1, &c.beta2, &c.mu] {
            assert_eq!(&parse_element(&a.to_string(), 4, Kind::Form).unwrap(), a);
        }
        for v in [&c.e1, &c.t2, &c.w1, c.pi()] {
            assert_eq!(&parse_element(&v.to_string(), 4, Kind::Multivector).unwrap(), v);
        }
    }
}
