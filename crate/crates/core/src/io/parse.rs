//! Recursive-descent parser for polynomial expressions, rational functions
//! and linear difference equations in one unknown function.
//!
//! ```text
//! equation := expr "=" expr
//! expr     := term (("+" | "-") term)*
//! term     := unary (("*" | "/") unary)*
//! unary    := ("+" | "-") unary | power
//! power    := atom ("^" integer)?
//! atom     := integer | variable | call | "(" expr ")"
//! call     := name "(" arg ("," arg)* ")"
//! arg      := variable (("+" | "-") integer)?
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::bound::Plde;
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Rat, ShiftVector};

use super::RationalFunction;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|x| x.1).collect())));
        } else if "+-*/^(),=".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((pos, Tok::Sym('-')));
            i += 1;
        } else {
            return Err(Error::Syntax { pos, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Num(BigInt),
    Var(usize),
    Call(ShiftVector),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>, usize),
    Pow(Box<Ast>, u32),
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a [String],
    function: Option<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, vars: &'a [String]) -> Result<Self> {
        Ok(Parser { toks: tokenize(text)?, at: 0, end: text.len(), vars, function: None })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn finish(&self) -> Result<()> {
        if self.at < self.toks.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let pos = self.pos();
                self.at += 1;
                lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.eat('-') {
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.eat('^') {
            let Some(Tok::Int(e)) = self.peek().cloned() else {
                return self.err("expected a nonnegative integer exponent");
            };
            let Ok(e) = u32::try_from(e) else {
                return self.err("exponent too large");
            };
            self.at += 1;
            return Ok(Ast::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn variable(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Ast::Num(n))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if self.peek() == Some(&Tok::Sym('(')) {
                    self.at += 1;
                    return self.call(name);
                }
                Ok(Ast::Var(self.variable(&name)?))
            }
            _ => self.err("expected a number, variable, call or '('"),
        }
    }

    fn call(&mut self, name: String) -> Result<Ast> {
        match &self.function {
            Some(f) if *f != name => return self.err(format!("only one unknown function allowed, found {f} and {name}")),
            _ => self.function = Some(name.clone()),
        }
        let mut offsets = Vec::new();
        loop {
            let Some(Tok::Ident(v)) = self.peek().cloned() else {
                return self.err("expected a variable in the argument list");
            };
            let idx = self.variable(&v)?;
            if idx != offsets.len() {
                return self.err(format!("argument {} of {name} must be {}", offsets.len() + 1, self.vars.get(offsets.len()).map(String::as_str).unwrap_or("absent")));
            }
            self.at += 1;
            let sign = if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else {
                0
            };
            let mut off = 0i64;
            if sign != 0 {
                let Some(Tok::Int(n)) = self.peek().cloned() else {
                    return self.err("expected an integer offset");
                };
                self.at += 1;
                off = sign * i64::try_from(n).map_err(|_| Error::Syntax { pos: self.pos(), msg: "offset too large".into() })?;
            }
            offsets.push(off);
            if self.eat(')') {
                break;
            }
            self.expect(',')?;
        }
        if offsets.len() != self.vars.len() {
            return Err(Error::Equation(format!("{name} takes {} arguments, found {}", self.vars.len(), offsets.len())));
        }
        Ok(Ast::Call(ShiftVector(offsets)))
    }
}

fn poly_of(ast: &Ast, n: usize) -> Result<MultiPoly> {
    Ok(match ast {
        Ast::Num(v) => MultiPoly::constant(n, Rat::from_integer(v.clone())),
        Ast::Var(i) => MultiPoly::var(n, *i),
        Ast::Call(_) => return Err(Error::Equation("unknown function in a polynomial expression".into())),
        Ast::Neg(a) => -&poly_of(a, n)?,
        Ast::Add(a, b) => &poly_of(a, n)? + &poly_of(b, n)?,
        Ast::Sub(a, b) => &poly_of(a, n)? - &poly_of(b, n)?,
        Ast::Mul(a, b) => &poly_of(a, n)? * &poly_of(b, n)?,
        Ast::Div(a, b, pos) => {
            let d = poly_of(b, n)?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            if !d.is_constant() {
                return Err(Error::Syntax { pos: *pos, msg: "polynomial division needs a constant divisor".into() });
            }
            poly_of(a, n)?.scale(&d.constant_term().recip())
        }
        Ast::Pow(a, e) => poly_of(a, n)?.pow(*e),
    })
}

fn rf_of(ast: &Ast, n: usize) -> Result<RationalFunction> {
    Ok(match ast {
        Ast::Num(_) | Ast::Var(_) => RationalFunction::from_poly(poly_of(ast, n)?),
        Ast::Call(_) => return Err(Error::Equation("unknown function in a rational expression".into())),
        Ast::Neg(a) => rf_of(a, n)?.neg(),
        Ast::Add(a, b) => rf_of(a, n)?.add(&rf_of(b, n)?)?,
        Ast::Sub(a, b) => rf_of(a, n)?.sub(&rf_of(b, n)?)?,
        Ast::Mul(a, b) => rf_of(a, n)?.mul(&rf_of(b, n)?)?,
        Ast::Div(a, b, _) => rf_of(a, n)?.div(&rf_of(b, n)?)?,
        Ast::Pow(a, e) => {
            let base = rf_of(a, n)?;
            let mut acc = RationalFunction::from_poly(MultiPoly::one(n));
            for _ in 0..*e {
                acc = acc.mul(&base)?;
            }
            acc
        }
    })
}

/// `poly + Σ coeff · f(n + shift)`.
#[derive(Clone, Debug)]
struct Linear {
    poly: MultiPoly,
    unknown: BTreeMap<ShiftVector, MultiPoly>,
}

impl Linear {
    fn known(poly: MultiPoly) -> Self {
        Linear { poly, unknown: BTreeMap::new() }
    }

    fn combine(mut self, other: Linear, sign: i64) -> Linear {
        let s = Rat::from_integer(sign.into());
        self.poly = &self.poly + &other.poly.scale(&s);
        for (k, v) in other.unknown {
            let e = self.unknown.entry(k).or_insert_with(|| MultiPoly::zero(v.nvars()));
            *e = &*e + &v.scale(&s);
        }
        self
    }

    fn scale_by(self, c: &MultiPoly) -> Linear {
        Linear { poly: &self.poly * c, unknown: self.unknown.into_iter().map(|(k, v)| (k, &v * c)).collect() }
    }
}

fn linear_of(ast: &Ast, n: usize) -> Result<Linear> {
    Ok(match ast {
        Ast::Call(s) => Linear { poly: MultiPoly::zero(n), unknown: BTreeMap::from([(s.clone(), MultiPoly::one(n))]) },
        Ast::Neg(a) => Linear::known(MultiPoly::zero(n)).combine(linear_of(a, n)?, -1),
        Ast::Add(a, b) => linear_of(a, n)?.combine(linear_of(b, n)?, 1),
        Ast::Sub(a, b) => linear_of(a, n)?.combine(linear_of(b, n)?, -1),
        Ast::Mul(a, b) => {
            let (x, y) = (linear_of(a, n)?, linear_of(b, n)?);
            match (x.unknown.is_empty(), y.unknown.is_empty()) {
                (true, _) => y.scale_by(&x.poly),
                (_, true) => x.scale_by(&y.poly),
                _ => return Err(Error::Equation("product of two unknown terms is not linear".into())),
            }
        }
        Ast::Div(a, b, pos) => {
            let d = poly_of(b, n)?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            if !d.is_constant() {
                return Err(Error::Syntax { pos: *pos, msg: "equation terms may only be divided by constants".into() });
            }
            linear_of(a, n)?.scale_by(&MultiPoly::constant(n, d.constant_term().recip()))
        }
        Ast::Num(_) | Ast::Var(_) | Ast::Pow(..) => Linear::known(poly_of(ast, n)?),
    })
}

pub fn parse_poly(text: &str, vars: &[String]) -> Result<MultiPoly> {
    let mut p = Parser::new(text, vars)?;
    let ast = p.expr()?;
    p.finish()?;
    poly_of(&ast, vars.len())
}

pub fn parse_rational_function(text: &str, vars: &[String]) -> Result<RationalFunction> {
    let mut p = Parser::new(text, vars)?;
    let ast = p.expr()?;
    p.finish()?;
    rf_of(&ast, vars.len())
}

/// Parses `lhs = rhs`, collecting unknown-function terms into coefficients
/// and the rest into the right-hand side.
pub fn parse_equation(text: &str, vars: &[String]) -> Result<Plde> {
    let n = vars.len();
    let mut p = Parser::new(text, vars)?;
    let lhs = p.expr()?;
    p.expect('=')?;
    let rhs = p.expr()?;
    p.finish()?;
    let total = linear_of(&lhs, n)?.combine(linear_of(&rhs, n)?, -1);
    if total.unknown.is_empty() {
        return Err(Error::Equation("no unknown-function terms: empty support".into()));
    }
    if let Some((s, _)) = total.unknown.iter().find(|(_, c)| c.is_zero()) {
        return Err(Error::Equation(format!("coefficients of the shift {s} cancel to zero")));
    }
    Plde::new(total.unknown, -&total.poly)
}

/// Variable names from the first unknown-function call, e.g. `f(n+1,k)`.
pub fn infer_vars(text: &str) -> Result<Vec<String>> {
    let toks = tokenize(text)?;
    for w in 0..toks.len().saturating_sub(1) {
        if let (Tok::Ident(_), Tok::Sym('(')) = (&toks[w].1, &toks[w + 1].1) {
            let mut vars = Vec::new();
            let mut i = w + 2;
            while i < toks.len() {
                match &toks[i].1 {
                    Tok::Ident(v) if matches!(toks.get(i - 1).map(|t| &t.1), Some(Tok::Sym('(')) | Some(Tok::Sym(','))) => vars.push(v.clone()),
                    Tok::Sym(')') => return Ok(vars),
                    _ => {}
                }
                i += 1;
            }
            return Err(Error::Syntax { pos: toks[w].0, msg: "unterminated argument list".into() });
        }
    }
    Err(Error::Equation("no unknown-function call to take variable names from".into()))
}

/// An equation file: `#` comments, an optional `vars: n, k` line, and the
/// equation text (which may span lines).
#[derive(Clone, Debug)]
pub struct EquationSource {
    pub vars: Vec<String>,
    pub text: String,
    pub equation: Plde,
}

pub fn parse_equation_file(contents: &str) -> Result<EquationSource> {
    let mut vars: Option<Vec<String>> = None;
    let mut body = String::new();
    for line in contents.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            vars = Some(parse_var_list(rest)?);
            continue;
        }
        if !body.is_empty() {
            body.push(' ');
        }
        body.push_str(line);
    }
    let vars = match vars {
        Some(v) => v,
        None => infer_vars(&body)?,
    };
    let equation = parse_equation(&body, &vars)?;
    Ok(EquationSource { vars, text: body, equation })
}

/// Splits `n, k` into names, rejecting empties and duplicates.
pub fn parse_var_list(text: &str) -> Result<Vec<String>> {
    let vars: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    if vars.iter().any(|v| v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_') || v.starts_with(|c: char| c.is_ascii_digit())) {
        return Err(Error::Syntax { pos: 0, msg: format!("bad variable list {text:?}") });
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(Error::Syntax { pos: 0, msg: format!("variable {v} declared twice") });
        }
    }
    Ok(vars)
}
