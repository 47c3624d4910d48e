//! A small arithmetic expression language for exact inputs.
//!
//! Accepts `+ - * / ^`, parentheses, `sqrt(…)`, the constant `sqrt2`, integer
//! literals (exact), decimal literals (real) and identifiers. Used for ξ
//! entries, catalogued closed forms and literal equation systems.

use std::str::FromStr;

use super::ring::Ring;
use super::{AlgebraError, QSqrt2, Scalar, Symbolic};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Scalar),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Sqrt(Box<Expr>),
}

pub fn parse_expr(src: &str) -> Result<Expr, AlgebraError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> AlgebraError {
        AlgebraError::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, AlgebraError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, AlgebraError> {
        let mut lhs = self.unary()?;
        loop {
            if self.peek() == Some(b'*') && self.src.get(self.pos + 1) != Some(&b'*') {
                self.pos += 1;
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, AlgebraError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, AlgebraError> {
        let base = self.atom()?;
        let caret = if self.eat(b'^') {
            true
        } else if self.peek() == Some(b'*') && self.src.get(self.pos + 1) == Some(&b'*') {
            self.pos += 2;
            true
        } else {
            false
        };
        if !caret {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        let exp: i64 = digits.parse().map_err(|_| AlgebraError::Parse {
            offset: start,
            message: "exponent must be an integer literal".into(),
        })?;
        Ok(Expr::Pow(Box::new(base), if negative { -exp } else { exp }))
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Expr, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                match name.as_str() {
                    "sqrt" => {
                        if !self.eat(b'(') {
                            return Err(self.error("expected '(' after sqrt"));
                        }
                        let e = self.expr()?;
                        if !self.eat(b')') {
                            return Err(self.error("expected ')'"));
                        }
                        Ok(Expr::Sqrt(Box::new(e)))
                    }
                    "sqrt2" => Ok(Expr::Num(Scalar::Sqrt2(QSqrt2::sqrt2()))),
                    _ => Ok(Expr::Var(name)),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Expr, AlgebraError> {
        let start = self.pos;
        let mut text = self.take_while(|c| c.is_ascii_digit() || c == b'.');
        let mut real = text.contains('.');
        if matches!(self.src.get(self.pos), Some(b'e') | Some(b'E')) {
            let save = self.pos;
            self.pos += 1;
            let mut exp = String::from("e");
            if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
                exp.push(self.src[self.pos] as char);
                self.pos += 1;
            }
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                self.pos = save;
            } else {
                text.push_str(&exp);
                text.push_str(&digits);
                real = true;
            }
        }
        let bad = || AlgebraError::Parse {
            offset: start,
            message: format!("malformed number '{text}'"),
        };
        if real {
            let v: f64 = text.parse().map_err(|_| bad())?;
            Ok(Expr::Num(Scalar::Real(v)))
        } else {
            let v: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Expr::Num(Scalar::Rational(v.into())))
        }
    }
}

impl Expr {
    /// True when the expression contains a decimal literal.
    pub fn has_real_literal(&self) -> bool {
        match self {
            Expr::Num(s) => !s.is_exact(),
            Expr::Var(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Sqrt(a) => a.has_real_literal(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.has_real_literal() || b.has_real_literal()
            }
        }
    }

    /// Evaluates with variables looked up in `env`.
    pub fn eval_with(&self, env: &dyn Fn(&str) -> Option<Scalar>) -> Result<Scalar, AlgebraError> {
        Ok(match self {
            Expr::Num(s) => s.clone(),
            Expr::Var(name) => env(name).ok_or_else(|| AlgebraError::Parse {
                offset: 0,
                message: format!("unknown variable '{name}'"),
            })?,
            Expr::Neg(a) => -a.eval_with(env)?,
            Expr::Add(a, b) => a.eval_with(env)? + b.eval_with(env)?,
            Expr::Sub(a, b) => a.eval_with(env)? - b.eval_with(env)?,
            Expr::Mul(a, b) => a.eval_with(env)? * b.eval_with(env)?,
            Expr::Div(a, b) => a.eval_with(env)?.checked_div(&b.eval_with(env)?)?,
            Expr::Pow(a, e) => {
                let base = a.eval_with(env)?;
                let p = base.pow(e.unsigned_abs() as u32);
                if *e < 0 {
                    p.checked_inv()?
                } else {
                    p
                }
            }
            Expr::Sqrt(a) => {
                let v = a.eval_with(env)?;
                if v.is_exact() {
                    v.sqrt()?
                } else if v.signum() < 0 {
                    return Err(AlgebraError::NegativeSqrt(v.to_string()));
                } else {
                    Scalar::Real(v.to_f64().sqrt())
                }
            }
        })
    }

    pub fn eval_scalar(&self) -> Result<Scalar, AlgebraError> {
        self.eval_with(&|_| None)
    }

    /// Evaluates as a polynomial in the listed variable names.
    ///
    /// Division and square roots are allowed only on constant subexpressions.
    pub fn eval_symbolic(&self, names: &[&str]) -> Result<Symbolic, AlgebraError> {
        Ok(match self {
            Expr::Num(s) => Symbolic::constant(s.clone()),
            Expr::Var(name) => match names.iter().position(|n| n == name) {
                Some(i) => Symbolic::var(i),
                None => {
                    return Err(AlgebraError::Parse {
                        offset: 0,
                        message: format!("unknown variable '{name}'"),
                    })
                }
            },
            Expr::Neg(a) => -a.eval_symbolic(names)?,
            Expr::Add(a, b) => a.eval_symbolic(names)? + b.eval_symbolic(names)?,
            Expr::Sub(a, b) => a.eval_symbolic(names)? - b.eval_symbolic(names)?,
            Expr::Mul(a, b) => a.eval_symbolic(names)? * b.eval_symbolic(names)?,
            Expr::Div(a, b) => {
                let den = b
                    .eval_symbolic(names)?
                    .as_constant()
                    .ok_or(AlgebraError::NotConstant)?;
                let inv = den.checked_inv()?;
                a.eval_symbolic(names)?
                    .map_coeffs(|c| c.clone() * inv.clone())
            }
            Expr::Pow(a, e) => {
                if *e < 0 {
                    let c = a
                        .eval_symbolic(names)?
                        .as_constant()
                        .ok_or(AlgebraError::NotConstant)?;
                    Symbolic::constant(c.pow(e.unsigned_abs() as u32).checked_inv()?)
                } else {
                    a.eval_symbolic(names)?.pow(*e as u32)
                }
            }
            Expr::Sqrt(a) => {
                let c = a
                    .eval_symbolic(names)?
                    .as_constant()
                    .ok_or(AlgebraError::NotConstant)?;
                Symbolic::constant(Expr::Sqrt(Box::new(Expr::Num(c))).eval_scalar()?)
            }
        })
    }
}

impl FromStr for Scalar {
    type Err = AlgebraError;

    /// Parses a constant expression such as `3/4`, `1+2*sqrt2` or `0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s)?.eval_scalar()
    }
}
