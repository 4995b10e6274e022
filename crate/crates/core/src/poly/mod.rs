//! Sparse multivariate polynomials over Q in variables `n_1..n_r`.
//!
//! Terms are kept in a `BTreeMap` ordered by graded reverse lexicographic
//! order, so the leading term is always the last entry. No zero
//! coefficients are ever stored.

mod gcd;
pub mod modp;
pub mod univariate;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use gcd::{gcd, gcd_many, lcm};
pub(crate) use gcd::{content_in, coprime_screen};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exponent vector, ordered by grevlex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // reverse lex: the smaller exponent in the last differing variable wins
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An integer vector in Z^r.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct ShiftVector(pub Vec<i64>);

impl ShiftVector {
    pub fn zero(r: usize) -> Self {
        ShiftVector(vec![0; r])
    }

    pub fn unit(r: usize, index: usize) -> Self {
        let mut v = vec![0; r];
        v[index] = 1;
        ShiftVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &ShiftVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: i64) -> ShiftVector {
        ShiftVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn norm_l1(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).sum()
    }

    pub fn norm_inf(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl Add for &ShiftVector {
    type Output = ShiftVector;
    fn add(self, rhs: &ShiftVector) -> ShiftVector {
        ShiftVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ShiftVector {
    type Output = ShiftVector;
    fn sub(self, rhs: &ShiftVector) -> ShiftVector {
        ShiftVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ShiftVector {
    type Output = ShiftVector;
    fn neg(self) -> ShiftVector {
        ShiftVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for ShiftVector {
    fn from(v: Vec<i64>) -> Self {
        ShiftVector(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, rat(c))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(nvars, index), Rat::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor from `(coefficient, exponents)` pairs.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(c, e)| (Monomial(e.to_vec()), rat(*c))))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Monomial::one(self.nvars)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.terms.values().next_back().cloned().unwrap_or_else(Rat::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn check_dim(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dim(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dim(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dim(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Result<u32> {
        self.leading_monomial()
            .map(Monomial::degree)
            .ok_or(Error::ZeroPolynomial("total degree"))
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }

    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Rational content: the positive rational `c` such that `self / c` has
    /// coprime integer coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rat {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rat::zero();
        }
        Rat::new(num, den)
    }

    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.content().recip())
    }

    /// Primitive over Z with positive leading coefficient.
    pub fn normalize(&self) -> MultiPoly {
        let pp = self.primitive_part();
        if pp.leading_coeff().is_negative() {
            -&pp
        } else {
            pp
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// `N^i p`: replace every `n_j` by `n_j + i_j`.
    pub fn shift(&self, by: &ShiftVector) -> MultiPoly {
        assert_eq!(by.dim(), self.nvars, "shift dimension");
        if by.is_zero() || self.is_constant() {
            return self.clone();
        }
        let mut cache: Vec<Vec<Vec<(u32, BigInt)>>> = vec![Vec::new(); self.nvars];
        for m in self.terms.keys() {
            for (j, &e) in m.0.iter().enumerate() {
                while cache[j].len() <= e as usize {
                    let k = cache[j].len() as u32;
                    cache[j].push(binomial_expansion(k, by.0[j]));
                }
            }
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            // cartesian product of the per-variable expansions
            let mut partial: Vec<(Vec<u32>, BigInt)> = vec![(Vec::with_capacity(self.nvars), BigInt::one())];
            for (j, &e) in m.0.iter().enumerate() {
                let exp = &cache[j][e as usize];
                let mut next = Vec::with_capacity(partial.len() * exp.len());
                for (mono, k) in &partial {
                    for (d, b) in exp {
                        let mut mm = mono.clone();
                        mm.push(*d);
                        next.push((mm, k * b));
                    }
                }
                partial = next;
            }
            for (mono, k) in partial {
                out.add_term(Monomial(mono), c * Rat::from_integer(k));
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut mm = m.clone();
                mm.0[var] -= 1;
                out.add_term(mm, c * rat(e as i64));
            }
        }
        out
    }

    /// Substitute `n_var := value`; the variable stays in the ring with exponent 0.
    pub fn substitute(&self, var: usize, value: &Rat) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        let mut powers: Vec<Rat> = vec![Rat::one()];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let last = powers.last().unwrap() * value;
                powers.push(last);
            }
            let mut mm = m.clone();
            mm.0[var] = 0;
            out.add_term(mm, c * &powers[e]);
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients with respect to `var`: `self = Σ_k out[k]·var^k`,
    /// where each `out[k]` is free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut mm = m.clone();
            mm.0[var] = 0;
            out[e].terms.insert(mm, c.clone());
        }
        out
    }

    pub fn from_coefficients_in(nvars: usize, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut mm = m.clone();
                mm.0[var] += k as u32;
                out.add_term(mm, a.clone());
            }
        }
        out
    }

    /// Multivariate division by leading terms (grevlex). Returns `(q, r)`
    /// with `self = q·d + r` and no term of `r` divisible by `lt(d)`.
    pub fn div_rem(&self, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (lm, lc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut q = Self::zero(self.nvars);
        let mut r = Self::zero(self.nvars);
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = &c / &lc;
                p = &p - &d.mul_monomial(&qm, &qc);
                q.add_term(qm, qc);
            } else {
                p.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        (q, r)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(self.clone());
        }
        if d.is_constant() {
            return Some(self.scale(&d.constant_term().recip()));
        }
        let (lm, lc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        // quick degree screen per variable
        for v in 0..self.nvars {
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let mut q = Self::zero(self.nvars);
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = &c / &lc;
            p = &p - &d.mul_monomial(&qm, &qc);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// True when both are equal up to a nonzero rational factor.
    pub fn associate(&self, other: &MultiPoly) -> bool {
        self.normalize() == other.normalize()
    }

    /// Re-embed in a ring with `new_nvars` variables; variable `j` goes to `map[j]`.
    pub fn embed(&self, new_nvars: usize, map: &[usize]) -> MultiPoly {
        let mut out = Self::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; new_nvars];
            for (j, &x) in m.0.iter().enumerate() {
                e[map[j]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitute each variable by a polynomial (all in the same target ring).
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(p.nvars), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    t = &t * &powers[j][e];
                }
            }
            out = &out + &t;
        }
        out
    }
}

/// Expansion of `(x + a)^k` as `(degree, coefficient)` pairs.
fn binomial_expansion(k: u32, a: i64) -> Vec<(u32, BigInt)> {
    let a = BigInt::from(a);
    let mut out = Vec::with_capacity(k as usize + 1);
    let mut binom = BigInt::one();
    for d in (0..=k).rev() {
        // coefficient of x^d is C(k, d) a^(k-d)
        let j = k - d;
        let coeff = &binom * num_traits::pow(a.clone(), j as usize);
        if !coeff.is_zero() {
            out.push((d, coeff));
        }
        binom = binom * BigInt::from(d) / BigInt::from(j + 1);
    }
    out
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "dimension mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc: Option<MultiPoly> = None;
        for p in iter {
            acc = Some(match acc {
                None => p,
                Some(a) => &a * &p,
            });
        }
        acc.expect("product of an empty iterator has no dimension")
    }
}

/// Product of `polys`, or one in `nvars` variables when empty.
pub fn product(nvars: usize, polys: impl IntoIterator<Item = MultiPoly>) -> MultiPoly {
    polys.into_iter().fold(MultiPoly::one(nvars), |a, p| &a * &p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nk(terms: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(2, terms)
    }

    #[test]
    fn grevlex_order() {
        let n2 = Monomial(vec![2, 0]);
        let nk_ = Monomial(vec![1, 1]);
        let k2 = Monomial(vec![0, 2]);
        let n = Monomial(vec![1, 0]);
        assert!(n2 > nk_ && nk_ > k2 && k2 > n);
        // x y^2 z^0 vs x^2 z: same degree, last var decides
        assert!(Monomial(vec![1, 2, 0]) > Monomial(vec![2, 0, 1]));
    }

    #[test]
    fn cancellation_and_expansion() {
        let a = nk(&[(1, &[1, 0]), (1, &[0, 1])]);
        let b = nk(&[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(&a + &b, nk(&[(2, &[1, 0])]));
        assert_eq!(&a * &b, nk(&[(1, &[2, 0]), (-1, &[0, 2])]));
        assert!((&a - &a).is_zero());
        assert!(MultiPoly::one(2).try_add(&MultiPoly::one(3)).is_err());
    }

    #[test]
    fn shift_examples() {
        let n = MultiPoly::var(2, 0);
        assert_eq!(n.shift(&ShiftVector(vec![1, 0])), nk(&[(1, &[1, 0]), (1, &[0, 0])]));
        let nmk = nk(&[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(nmk.shift(&ShiftVector(vec![1, 1])), nmk);
        let p = nk(&[(2, &[1, 1]), (1, &[0, 0])]);
        let expect = nk(&[(2, &[1, 1]), (2, &[0, 1]), (4, &[1, 0]), (5, &[0, 0])]);
        assert_eq!(p.shift(&ShiftVector(vec![1, 2])), expect);
        assert_eq!(p.shift(&ShiftVector(vec![1, 2])).shift(&ShiftVector(vec![-1, -2])), p);
    }

    #[test]
    fn degree_content_components() {
        let p = nk(&[(1, &[2, 0]), (1, &[0, 2]), (1, &[0, 0])]);
        assert_eq!(p.homogeneous_component(2), nk(&[(1, &[2, 0]), (1, &[0, 2])]));
        assert_eq!(nk(&[(2, &[1, 1]), (1, &[0, 0])]).total_degree().unwrap(), 2);
        assert!(MultiPoly::zero(2).total_degree().is_err());
        let q = nk(&[(4, &[1, 0]), (6, &[0, 1])]);
        assert_eq!(q.content(), rat(2));
        assert_eq!(q.primitive_part(), nk(&[(2, &[1, 0]), (3, &[0, 1])]));
        let half = MultiPoly::from_terms(1, [(Monomial(vec![1]), Rat::new(1.into(), 2.into())), (Monomial(vec![0]), Rat::new(1.into(), 3.into()))]);
        assert_eq!(half.primitive_part(), MultiPoly::from_int_terms(1, &[(3, &[1]), (2, &[0])]));
    }

    #[test]
    fn example_coefficient_product() {
        // (2kn+1)(6k^2+12k-4n^2-4n+5) with variables (n, k)
        let a = nk(&[(2, &[1, 1]), (1, &[0, 0])]);
        let b = nk(&[(6, &[0, 2]), (12, &[0, 1]), (-4, &[2, 0]), (-4, &[1, 0]), (5, &[0, 0])]);
        let prod = &a * &b;
        let expect = nk(&[
            (12, &[1, 3]),
            (24, &[1, 2]),
            (-8, &[3, 1]),
            (-8, &[2, 1]),
            (10, &[1, 1]),
            (6, &[0, 2]),
            (12, &[0, 1]),
            (-4, &[2, 0]),
            (-4, &[1, 0]),
            (5, &[0, 0]),
        ]);
        assert_eq!(prod, expect);
    }

    #[test]
    fn division() {
        let a = nk(&[(1, &[2, 0]), (-1, &[0, 2])]);
        let b = nk(&[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(a.div_exact(&b).unwrap(), nk(&[(1, &[1, 0]), (1, &[0, 1])]));
        assert!(b.div_exact(&a).is_none());
        let c = nk(&[(1, &[1, 0]), (2, &[0, 1])]);
        assert!(a.div_exact(&c).is_none());
    }
}
