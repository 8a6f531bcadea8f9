//! Recursive-descent parser for exact expressions and one-forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | factor
//! factor := base ('^' uint)?
//! base   := '(' expr ')' | 'x' | 'y' | 'i' | 'dx' | 'dy' | int
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::{Form, GaussianRational, Poly, RatFun};

pub const MAX_EXPONENT: u32 = 1000;
/// Largest total degree an intermediate result may reach.
pub const MAX_DEGREE: u32 = 1000;
/// Largest total degree of a power of a non-monomial base.
pub const MAX_EXPANDED_DEGREE: u32 = 256;
pub const MAX_DIGITS: usize = 1000;
pub const MAX_INPUT_LEN: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("non-ASCII character {0:?}")]
    NonAscii(char),
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("expected {expected}, found {found}")]
    UnexpectedToken { expected: &'static str, found: String },
    #[error("nonlinear differential")]
    NonlinearDifferential,
    #[error("cannot add a function and a differential")]
    MixedDegree,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("exponent exceeds {MAX_EXPONENT}")]
    ExponentTooLarge,
    #[error("expected a function, found a one-form")]
    ExpectedFunction,
    #[error("expected a one-form, found a function")]
    ExpectedForm,
    #[error("expected a polynomial")]
    ExpectedPolynomial,
    #[error("resource bound exceeded: {0}")]
    ResourceLimit(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self.kind, ParseErrorKind::ResourceLimit(_))
    }
}

/// A parsed expression: a rational function or a one-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Function(RatFun),
    Form(Form),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Function(r) => write!(f, "{r}"),
            Expr::Form(w) => write!(f, "{w}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    I,
    Dx,
    Dy,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::X => write!(f, "'x'"),
            Tok::Y => write!(f, "'y'"),
            Tok::I => write!(f, "'i'"),
            Tok::Dx => write!(f, "'dx'"),
            Tok::Dy => write!(f, "'dy'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(pos: Pos, kind: ParseErrorKind) -> ParseError {
    ParseError { line: pos.line, column: pos.column, kind }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut pos = Pos { line: 1, column: 1 };
    if text.len() > MAX_INPUT_LEN {
        return Err(err(pos, ParseErrorKind::ResourceLimit("input too long")));
    }
    let bytes: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < bytes.len() {
        let ch = bytes[k];
        let start = pos;
        if !ch.is_ascii() {
            return Err(err(start, ParseErrorKind::NonAscii(ch)));
        }
        if ch == '\n' {
            pos.line += 1;
            pos.column = 1;
            k += 1;
            continue;
        }
        if ch.is_ascii_whitespace() {
            pos.column += 1;
            k += 1;
            continue;
        }
        let len;
        let tok = if ch.is_ascii_digit() {
            let end = bytes[k..].iter().position(|c| !c.is_ascii_digit()).map_or(bytes.len(), |p| k + p);
            len = end - k;
            if len > MAX_DIGITS {
                return Err(err(start, ParseErrorKind::ResourceLimit("integer literal too long")));
            }
            let digits: String = bytes[k..end].iter().collect();
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let end =
                bytes[k..].iter().position(|c| !(c.is_ascii_alphanumeric() || *c == '_')).map_or(bytes.len(), |p| k + p);
            len = end - k;
            let word: String = bytes[k..end].iter().collect();
            match word.as_str() {
                "x" => Tok::X,
                "y" => Tok::Y,
                "i" => Tok::I,
                "dx" => Tok::Dx,
                "dy" => Tok::Dy,
                _ => return Err(err(start, ParseErrorKind::UnknownIdentifier(word))),
            }
        } else {
            len = 1;
            match ch {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(err(start, ParseErrorKind::UnexpectedChar(ch))),
            }
        };
        out.push((tok, start));
        k += len;
        pos.column += len;
    }
    out.push((Tok::End, pos));
    Ok(out)
}

/// Intermediate value; a form is `a dx + b dy`.
#[derive(Clone)]
enum Val {
    F(RatFun),
    W(RatFun, RatFun),
}

fn degree(r: &RatFun) -> u32 {
    r.num().total_degree().unwrap_or(0).max(r.den().total_degree().unwrap_or(0))
}

fn check_degree(v: Val, pos: Pos) -> Result<Val, ParseError> {
    let d = match &v {
        Val::F(r) => degree(r),
        Val::W(a, b) => degree(a).max(degree(b)),
    };
    if d > MAX_DEGREE {
        return Err(err(pos, ParseErrorKind::ResourceLimit("degree too large")));
    }
    Ok(v)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    k: usize,
    depth: usize,
}

const MAX_NESTING: usize = 256;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.k].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.k].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.k].clone();
        if self.k + 1 < self.toks.len() {
            self.k += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        err(self.pos(), ParseErrorKind::UnexpectedToken { expected, found: self.peek().to_string() })
    }

    fn expr(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => true,
                Tok::Minus => false,
                _ => return Ok(acc),
            };
            let (_, pos) = self.bump();
            let rhs = self.term()?;
            acc = match (acc, rhs) {
                (Val::F(a), Val::F(b)) => Val::F(if op { &a + &b } else { &a - &b }),
                (Val::W(a1, b1), Val::W(a2, b2)) => {
                    if op {
                        Val::W(&a1 + &a2, &b1 + &b2)
                    } else {
                        Val::W(&a1 - &a2, &b1 - &b2)
                    }
                }
                // a literal zero function is a zero form
                (Val::F(f), w @ Val::W(..)) if f.is_zero() => {
                    if op {
                        w
                    } else {
                        neg(w)
                    }
                }
                (w @ Val::W(..), Val::F(f)) if f.is_zero() => w,
                _ => return Err(err(pos, ParseErrorKind::MixedDegree)),
            };
            acc = check_degree(acc, pos)?;
        }
    }

    fn term(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let mul = match self.peek() {
                Tok::Star => true,
                Tok::Slash => false,
                _ => return Ok(acc),
            };
            let (_, pos) = self.bump();
            let rpos = self.pos();
            let rhs = self.unary()?;
            acc = match (acc, rhs, mul) {
                (Val::F(a), Val::F(b), true) => Val::F(&a * &b),
                (Val::F(c), Val::W(a, b), true) | (Val::W(a, b), Val::F(c), true) => Val::W(&c * &a, &c * &b),
                (Val::W(..), Val::W(..), true) => return Err(err(pos, ParseErrorKind::NonlinearDifferential)),
                (_, Val::W(..), false) => return Err(err(rpos, ParseErrorKind::NonlinearDifferential)),
                (lhs, Val::F(d), false) => {
                    if d.is_zero() {
                        return Err(err(rpos, ParseErrorKind::DivisionByZero));
                    }
                    let inv = (&RatFun::one()).checked_div(&d).map_err(|_| err(rpos, ParseErrorKind::DivisionByZero))?;
                    match lhs {
                        Val::F(a) => Val::F(&a * &inv),
                        Val::W(a, b) => Val::W(&a * &inv, &b * &inv),
                    }
                }
            };
            acc = check_degree(acc, pos)?;
        }
    }

    fn unary(&mut self) -> Result<Val, ParseError> {
        match self.peek() {
            Tok::Minus | Tok::Plus => {
                let (t, pos) = self.bump();
                self.enter(pos)?;
                let v = self.unary()?;
                self.depth -= 1;
                Ok(if t == Tok::Minus { neg(v) } else { v })
            }
            _ => self.factor(),
        }
    }

    fn enter(&mut self, pos: Pos) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(err(pos, ParseErrorKind::ResourceLimit("nesting too deep")));
        }
        Ok(())
    }

    fn factor(&mut self) -> Result<Val, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (_, pos) = self.bump();
        let epos = self.pos();
        let Tok::Int(e) = self.peek().clone() else {
            return Err(self.unexpected("an unsigned integer exponent"));
        };
        self.bump();
        if e > BigInt::from(MAX_EXPONENT) {
            return Err(err(epos, ParseErrorKind::ExponentTooLarge));
        }
        let e: u32 = e.try_into().expect("bounded exponent");
        match base {
            Val::W(a, b) => {
                if e == 1 {
                    Ok(Val::W(a, b))
                } else {
                    Err(err(pos, ParseErrorKind::NonlinearDifferential))
                }
            }
            Val::F(r) => {
                let d = degree(&r).saturating_mul(e);
                let monomial = r.num().terms().count() <= 1 && r.den().terms().count() <= 1;
                if d > MAX_DEGREE || (!monomial && d > MAX_EXPANDED_DEGREE) {
                    return Err(err(pos, ParseErrorKind::ResourceLimit("power too large")));
                }
                Ok(Val::F(r.pow(e)))
            }
        }
    }

    fn base(&mut self) -> Result<Val, ParseError> {
        if matches!(self.peek(), Tok::End | Tok::RParen | Tok::Star | Tok::Slash | Tok::Caret | Tok::Plus | Tok::Minus) {
            return Err(self.unexpected("an operand"));
        }
        let (t, pos) = self.bump();
        Ok(match t {
            Tok::Int(n) => Val::F(RatFun::constant(GaussianRational::real(BigRational::from_integer(n)))),
            Tok::X => Val::F(RatFun::x()),
            Tok::Y => Val::F(RatFun::y()),
            Tok::I => Val::F(RatFun::constant(GaussianRational::i())),
            Tok::Dx => Val::W(RatFun::one(), RatFun::zero()),
            Tok::Dy => Val::W(RatFun::zero(), RatFun::one()),
            Tok::LParen => {
                self.enter(pos)?;
                let v = self.expr()?;
                self.depth -= 1;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                v
            }
            Tok::End | Tok::RParen | Tok::Star | Tok::Slash | Tok::Caret | Tok::Plus | Tok::Minus => {
                unreachable!("rejected above")
            }
        })
    }
}

fn neg(v: Val) -> Val {
    match v {
        Val::F(a) => Val::F(-&a),
        Val::W(a, b) => Val::W(-&a, -&b),
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, k: 0, depth: 0 };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(match v {
        Val::F(r) => Expr::Function(r),
        Val::W(a, b) => Expr::Form(Form::new(a, b)),
    })
}

pub fn parse_function(text: &str) -> Result<RatFun, ParseError> {
    match parse_expression(text)? {
        Expr::Function(r) => Ok(r),
        Expr::Form(_) => Err(ParseError { line: 1, column: 1, kind: ParseErrorKind::ExpectedFunction }),
    }
}

/// A one-form; the literal `0` is accepted as the zero form.
pub fn parse_form(text: &str) -> Result<Form, ParseError> {
    match parse_expression(text)? {
        Expr::Form(w) => Ok(w),
        Expr::Function(r) if r.is_zero() => Ok(Form::zero()),
        Expr::Function(_) => Err(ParseError { line: 1, column: 1, kind: ParseErrorKind::ExpectedForm }),
    }
}

pub fn parse_polynomial(text: &str) -> Result<Poly, ParseError> {
    let r = parse_function(text)?;
    if !r.is_polynomial() {
        return Err(ParseError { line: 1, column: 1, kind: ParseErrorKind::ExpectedPolynomial });
    }
    let lc = r.den().leading_coeff().cloned().unwrap_or_else(GaussianRational::one);
    Ok(if lc.is_one() { r.num().clone() } else { r.num().scale(&crate::scalar::ExactField::inverse(&lc).unwrap()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn g(n: i64, d: i64) -> GaussianRational {
        GaussianRational::rational(n, d)
    }

    #[test]
    fn parses_forms() {
        let w = parse_form("x*dy - (1/2)*y*dx").unwrap();
        assert_eq!(w, Form::new(RatFun::y().scale(&g(-1, 2)), RatFun::x()));
        assert_eq!(parse_form("dx").unwrap(), Form::dx());
        assert_eq!(parse_form("-dy/x").unwrap(), Form::new(RatFun::zero(), -&(&RatFun::one() / &RatFun::x())));
        assert_eq!(parse_form("0").unwrap(), Form::zero());
    }

    #[test]
    fn parses_gaussian_coefficients() {
        let p = parse_polynomial("(3/2+1/3*i)*x^2*y").unwrap();
        let c = GaussianRational::new(g(3, 2).re, g(1, 3).re);
        assert_eq!(p, Poly::monomial(c, 2, 1));
        assert_eq!(p.terms().count(), 1);
        assert_eq!(p.coeff(Monomial::new(2, 1)), GaussianRational::new(g(3, 2).re, g(1, 3).re));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_function("-x^2").unwrap(), -&(&RatFun::x() * &RatFun::x()));
        assert_eq!(parse_function("2/3*x").unwrap(), RatFun::x().scale(&g(2, 3)));
        assert_eq!(parse_function("1 - 2 - 3").unwrap(), RatFun::from_int(-4));
        assert_eq!(parse_function("i^2").unwrap(), RatFun::from_int(-1));
    }

    #[test]
    fn error_positions() {
        let e = parse_expression("dx*dy").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonlinearDifferential);
        assert_eq!((e.line, e.column), (1, 3));
        assert_eq!(e.to_string(), "line 1, column 3: nonlinear differential");

        let e = parse_expression("x +\n  z").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert_eq!(e.kind, ParseErrorKind::UnknownIdentifier("z".into()));

        assert_eq!(parse_expression("x/(y - y)").unwrap_err().kind, ParseErrorKind::DivisionByZero);
        assert_eq!(parse_expression("x + dx").unwrap_err().kind, ParseErrorKind::MixedDegree);
        assert_eq!(parse_expression("x^1001").unwrap_err().kind, ParseErrorKind::ExponentTooLarge);
        assert_eq!(parse_expression("1/dx").unwrap_err().kind, ParseErrorKind::NonlinearDifferential);
        assert_eq!(parse_expression("dx^2").unwrap_err().kind, ParseErrorKind::NonlinearDifferential);
        assert!(parse_expression("(x+y)^900").unwrap_err().is_resource_limit());
        assert!(matches!(parse_expression("x −y").unwrap_err().kind, ParseErrorKind::NonAscii(_)));
        assert!(matches!(parse_expression("(x").unwrap_err().kind, ParseErrorKind::UnexpectedToken { .. }));
        assert!(matches!(parse_expression("").unwrap_err().kind, ParseErrorKind::UnexpectedToken { .. }));
        assert!(matches!(parse_expression("x y").unwrap_err().kind, ParseErrorKind::UnexpectedToken { .. }));
    }

    #[test]
    fn printer_round_trip() {
        for s in ["x*dy - (1/2)*y*dx", "(3/2+1/3*i)*x^2*y - i*y + 7", "(x^2 + 1)/(y - i*x)", "y^2*dx - x*dy", "0"] {
            let v = parse_expression(s).unwrap();
            assert_eq!(parse_expression(&v.to_string()).unwrap(), v, "{s} -> {v}");
        }
    }
}
