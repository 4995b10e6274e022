//! Text input and output: parsing, canonical printing, rational functions
//! and the JSON schema.

pub mod parse;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::bound::{DenomBound, Plde};
use crate::error::{Error, Result};
use crate::poly::{gcd, MultiPoly, Rat, ShiftVector};
use crate::spread::SpreadSet;

pub use parse::{infer_vars, parse_equation, parse_equation_file, parse_poly, parse_rational_function, parse_var_list, EquationSource};

/// A reduced quotient of polynomials with primitive, positive-leading
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        num.check_dim(&den)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            let n = num.nvars();
            return Ok(RationalFunction { num, den: MultiPoly::one(n) });
        }
        let g = gcd(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let dn = den.normalize();
        let c = den.leading_coeff() / dn.leading_coeff();
        Ok(RationalFunction { num: num.scale(&c.recip()), den: dn })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        RationalFunction { num: p, den: MultiPoly::one(n) }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone());
        }
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// `y(n + by)`; shifting keeps the quotient reduced.
    pub fn shift(&self, by: &ShiftVector) -> Self {
        let den = self.den.shift(by);
        let dn = den.normalize();
        let c = den.leading_coeff() / dn.leading_coeff();
        RationalFunction { num: self.num.shift(by).scale(&c.recip()), den: dn }
    }
}

fn format_rat(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form: grevlex-descending terms, variables in declaration
/// order, `*` and `^` explicit, rational coefficients as `a/b`.
pub fn format_poly(p: &MultiPoly, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let a = c.abs();
        let factors: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(j, e)| if *e == 1 { vars[j].clone() } else { format!("{}^{e}", vars[j]) })
            .collect();
        if factors.is_empty() {
            out.push_str(&format_rat(&a));
        } else {
            if !a.is_one() {
                out.push_str(&format_rat(&a));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

fn parenthesized(p: &MultiPoly, vars: &[String]) -> String {
    let atom = p.is_constant() || (p.leading_coeff().is_one() && p.variables().len() == 1);
    if p.len() == 1 && !p.leading_coeff().is_negative() && atom {
        format_poly(p, vars)
    } else {
        format!("({})", format_poly(p, vars))
    }
}

pub fn format_rational_function(y: &RationalFunction, vars: &[String]) -> String {
    if y.den.is_one() {
        return format_poly(&y.num, vars);
    }
    format!("{}/{}", parenthesized(&y.num, vars), parenthesized(&y.den, vars))
}

/// `(a_s)*f(n+s_1,k+s_2) + ... = rhs`, one term per support point.
pub fn format_equation(e: &Plde, vars: &[String]) -> String {
    let terms: Vec<String> = e
        .coeffs()
        .iter()
        .map(|(s, a)| {
            let args: Vec<String> = vars
                .iter()
                .zip(&s.0)
                .map(|(v, &o)| match o {
                    0 => v.clone(),
                    o if o > 0 => format!("{v}+{o}"),
                    o => format!("{v}{o}"),
                })
                .collect();
            format!("({})*f({})", format_poly(a, vars), args.join(","))
        })
        .collect();
    format!("{} = {}", terms.join(" + "), format_poly(e.rhs(), vars))
}

/// Product of the shifted factors, each printed expanded.
pub fn format_bound(b: &DenomBound, vars: &[String]) -> String {
    if b.is_one() {
        return "1".into();
    }
    b.factors()
        .iter()
        .map(|f| {
            let s = format!("({})", format_poly(&f.base.shift(&f.shift), vars));
            if f.mult > 1 {
                format!("{s}^{}", f.mult)
            } else {
                s
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// One line per factor: `N^shift (base)` with a multiplicity suffix.
pub fn format_bound_factored(b: &DenomBound, vars: &[String]) -> String {
    if b.is_one() {
        return "1".into();
    }
    b.factors()
        .iter()
        .map(|f| {
            let mut s = format!("N^{} ({})", f.shift, format_poly(&f.base, vars));
            if f.mult > 1 {
                s.push_str(&format!("^{}", f.mult));
            }
            s
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn format_spread(s: &SpreadSet) -> String {
    s.to_string()
}

#[derive(Serialize)]
struct JsonFactor {
    shift: Vec<i64>,
    base: String,
    mult: u32,
}

#[derive(Serialize)]
struct JsonCoset {
    base: Vec<i64>,
    lattice: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct JsonSpread {
    points: Vec<Vec<i64>>,
    cosets: Vec<JsonCoset>,
}

/// `[{"shift": [..], "base": "..", "mult": m}, ..]`
pub fn bound_json(b: &DenomBound, vars: &[String]) -> String {
    let items: Vec<JsonFactor> = b
        .factors()
        .iter()
        .map(|f| JsonFactor { shift: f.shift.0.clone(), base: format_poly(&f.base, vars), mult: f.mult })
        .collect();
    serde_json::to_string_pretty(&items).expect("serializable")
}

/// `{"points": [[..]], "cosets": [{"base": [..], "lattice": [[..]]}]}`
pub fn spread_json(s: &SpreadSet) -> String {
    let out = JsonSpread {
        points: s.points().into_iter().map(|p| p.0).collect(),
        cosets: s
            .cosets()
            .iter()
            .filter(|c| !c.is_point())
            .map(|c| JsonCoset { base: c.base().0.clone(), lattice: c.basis().iter().map(|v| v.0.clone()).collect() })
            .collect(),
    };
    serde_json::to_string_pretty(&out).expect("serializable")
}
