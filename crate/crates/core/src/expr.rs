//! Expressions over the extended reals.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | '+inf' | '-inf' | 'neg' factor | '(' expr ')'
//!         | ('sup'|'inf') '(' expr (',' expr)* ')'
//! rational := ['-'] digits ['/' digits]
//! ```
//!
//! Binary `-` is the pseudodifference of the evaluation mode. Unary minus is
//! spelled `neg`. In `a * b` one side must be a nonnegative rational literal.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::extreal::{fold_inf, fold_sup, neg, ArithMode, ExtReal};
use crate::qnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Literal(ExtReal),
    Add(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    /// Coefficient is nonnegative.
    Scale(Rational, Box<Expr>),
    Neg(Box<Expr>),
    /// Nonempty.
    Sup(Vec<Expr>),
    /// Nonempty.
    Inf(Vec<Expr>),
}

impl Expr {
    pub fn lit(x: impl Into<ExtReal>) -> Expr {
        Expr::Literal(x.into())
    }

    pub fn plus(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn minus(a: Expr, b: Expr) -> Expr {
        Expr::Diff(Box::new(a), Box::new(b))
    }

    pub fn scale(s: Rational, e: Expr) -> Result<Expr> {
        if s.is_negative() {
            return Err(Error::InvalidMultiplier(s.to_string()));
        }
        Ok(Expr::Scale(s, Box::new(e)))
    }

    pub fn negate(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }

    pub fn eval(&self, mode: ArithMode) -> Result<ExtReal> {
        eval(self, mode)
    }
}

pub fn eval(e: &Expr, mode: ArithMode) -> Result<ExtReal> {
    Ok(match e {
        Expr::Literal(x) => x.clone(),
        Expr::Add(a, b) => mode.add(&eval(a, mode)?, &eval(b, mode)?),
        Expr::Diff(a, b) => mode.diff(&eval(a, mode)?, &eval(b, mode)?),
        Expr::Scale(s, a) => mode.scale(s, &eval(a, mode)?)?,
        Expr::Neg(a) => neg(&eval(a, mode)?),
        Expr::Sup(xs) => fold_sup(&xs.iter().map(|x| eval(x, mode)).collect::<Result<Vec<_>>>()?),
        Expr::Inf(xs) => fold_inf(&xs.iter().map(|x| eval(x, mode)).collect::<Result<Vec<_>>>()?),
    })
}

/// Parse and evaluate in one step.
pub fn eval_str(text: &str, mode: ArithMode) -> Result<ExtReal> {
    parse(text)?.eval(mode)
}

// ---------------------------------------------------------------------------
// Parsing

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: &str) -> Error {
        Error::Parse {
            what: "expression",
            input: self.src.to_string(),
            reason: format!("{reason} at position {}", self.pos),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        &self.rest()[..len]
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::plus(lhs, self.term()?);
            } else if self.eat('-') {
                lhs = Expr::minus(lhs, self.term()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            let at = self.pos;
            if !self.eat('*') {
                return Ok(lhs);
            }
            let rhs = self.factor()?;
            lhs = match (coefficient(&lhs), coefficient(&rhs)) {
                (Some(s), _) => Expr::Scale(s, Box::new(rhs)),
                (None, Some(s)) => Expr::Scale(s, Box::new(lhs)),
                (None, None) => {
                    self.pos = at;
                    return Err(self.error("'*' needs a nonnegative rational operand"));
                }
            };
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c @ ('+' | '-')) => {
                let after = &self.rest()[1..];
                if after.starts_with("inf") && !after[3..].starts_with(|c: char| c.is_ascii_alphabetic()) {
                    self.pos += 4;
                    Ok(Expr::Literal(if c == '+' { ExtReal::PosInf } else { ExtReal::NegInf }))
                } else if c == '-' && after.starts_with(|c: char| c.is_ascii_digit()) {
                    self.rational()
                } else {
                    Err(self.error("expected an operand"))
                }
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() => {
                let w = self.word();
                match w {
                    "neg" => {
                        self.pos += w.len();
                        Ok(Expr::negate(self.factor()?))
                    }
                    "sup" | "inf" => {
                        self.pos += w.len();
                        if self.peek() != Some('(') {
                            return Err(self.error(&format!("expected '(' after '{w}'")));
                        }
                        self.pos += 1;
                        let mut args = vec![self.expr()?];
                        while self.eat(',') {
                            args.push(self.expr()?);
                        }
                        self.expect(')')?;
                        Ok(if w == "sup" { Expr::Sup(args) } else { Expr::Inf(args) })
                    }
                    _ => Err(self.error(&format!("unknown word '{w}'"))),
                }
            }
            Some(c) => Err(self.error(&format!("unexpected '{c}'"))),
        }
    }

    fn rational(&mut self) -> Result<Expr> {
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if bytes.get(end) == Some(&b'-') {
            end += 1;
        }
        let digits = |mut i: usize| {
            while bytes.get(i).is_some_and(u8::is_ascii_digit) {
                i += 1;
            }
            i
        };
        end = digits(end);
        if bytes.get(end) == Some(&b'/') {
            let den_end = digits(end + 1);
            if den_end == end + 1 {
                self.pos = end + 1;
                return Err(self.error("expected digits after '/'"));
            }
            end = den_end;
        }
        let q: Rational = self.src[start..end].parse().map_err(|_| self.error("invalid rational"))?;
        self.pos = end;
        Ok(Expr::Literal(ExtReal::Fin(q)))
    }
}

fn coefficient(e: &Expr) -> Option<Rational> {
    match e {
        Expr::Literal(ExtReal::Fin(q)) if !q.is_negative() => Some(q.clone()),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Printing

fn is_atom(e: &Expr) -> bool {
    match e {
        Expr::Literal(ExtReal::Fin(q)) => !q.is_negative(),
        Expr::Literal(_) | Expr::Neg(_) | Expr::Sup(_) | Expr::Inf(_) => true,
        _ => false,
    }
}

struct Operand<'a>(&'a Expr);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if is_atom(self.0) {
            write!(f, "{}", self.0)
        } else {
            write!(f, "({})", self.0)
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, xs: &[Expr]) -> fmt::Result {
    write!(f, "{name}(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(x) => write!(f, "{x}"),
            Expr::Add(a, b) | Expr::Diff(a, b) => {
                let op = if matches!(self, Expr::Add(..)) { '+' } else { '-' };
                if matches!(**a, Expr::Add(..) | Expr::Diff(..) | Expr::Scale(..)) {
                    write!(f, "{a} {op} {}", Operand(b))
                } else {
                    write!(f, "{} {op} {}", Operand(a), Operand(b))
                }
            }
            Expr::Scale(s, a) => write!(f, "{s} * {}", Operand(a)),
            Expr::Neg(a) => write!(f, "neg {}", Operand(a)),
            Expr::Sup(xs) => write_list(f, "sup", xs),
            Expr::Inf(xs) => write_list(f, "inf", xs),
        }
    }
}
