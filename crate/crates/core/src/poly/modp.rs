//! Dense univariate polynomials over a prime field `Z/p`, `p < 2^31`.
//!
//! Coefficient vectors are little-endian (`v[k]` is the coefficient of
//! `x^k`) and always trimmed, so the zero polynomial is the empty vector.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use super::Rat;

pub type Poly = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp {
    pub p: u64,
}

pub fn trim(v: &mut Poly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn degree(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

impl Zp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < (1 << 31));
        Zp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn from_bigint(&self, a: &BigInt) -> u64 {
        a.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    /// Image of a rational, or `None` if the denominator vanishes mod p.
    pub fn from_rat(&self, a: &Rat) -> Option<u64> {
        let d = self.from_bigint(a.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(self.from_bigint(a.numer()), self.inv(d)))
    }

    pub fn symmetric(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        let mut out: Poly = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        let mut out: Poly = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn poly_scale(&self, a: &[u64], c: u64) -> Poly {
        let mut out: Poly = a.iter().map(|&x| self.mul(x, c)).collect();
        trim(&mut out);
        out
    }

    pub fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (Poly, Poly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let db = b.len() - 1;
        let inv_lc = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let c = self.mul(r[dr], inv_lc);
            let shift = dr - db;
            q[shift] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = self.sub(r[shift + j], self.mul(c, bj));
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn poly_rem(&self, a: &[u64], b: &[u64]) -> Poly {
        self.poly_divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.poly_scale(a, self.inv(lc)),
        }
    }

    pub fn poly_gcd(&self, a: &[u64], b: &[u64]) -> Poly {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn poly_xgcd(&self, a: &[u64], b: &[u64]) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.last() {
            None => (r0, s0, t0),
            Some(&lc) => {
                let inv = self.inv(lc);
                (self.poly_scale(&r0, inv), self.poly_scale(&s0, inv), self.poly_scale(&t0, inv))
            }
        }
    }

    pub fn derivative(&self, a: &[u64]) -> Poly {
        let mut out: Poly = a.iter().enumerate().skip(1).map(|(k, &c)| self.mul(c, k as u64 % self.p)).collect();
        trim(&mut out);
        out
    }

    /// `base^e mod m`.
    pub fn poly_powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> Poly {
        let mut acc = self.poly_rem(&[1], m);
        let b = self.poly_rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.poly_rem(&self.poly_mul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        if d.is_empty() {
            return a.len() <= 1;
        }
        self.poly_gcd(a, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn distinct_degree(&self, f: &[u64]) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x: Poly = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                let deg = f.len() - 1;
                out.push((f, deg));
                break;
            }
            h = self.poly_powmod(&h, &BigUint::from(self.p), &f);
            let g = self.poly_gcd(&f, &self.poly_sub(&h, &x));
            if g.len() > 1 {
                f = self.poly_divrem(&f, &g).0;
                h = self.poly_rem(&h, &f);
                out.push((g, d));
            }
        }
        out
    }

    /// Equal-degree splitting (Cantor–Zassenhaus), odd `p` only.
    fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R, out: &mut Vec<Poly>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.to_vec());
            return;
        }
        let e = (num_traits::pow(BigUint::from(self.p), d) - 1u32) / 2u32;
        loop {
            let a: Poly = {
                let mut a: Poly = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
                trim(&mut a);
                a
            };
            if a.len() < 2 {
                continue;
            }
            let b = self.poly_sub(&self.poly_powmod(&a, &e, f), &[1]);
            let g = self.poly_gcd(f, &b);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.poly_divrem(f, &g).0;
                self.equal_degree(&g, d, rng, out);
                self.equal_degree(&self.monic(&h), d, rng, out);
                return;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial of positive degree.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<Poly> {
        let f = self.monic(f);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(&f) {
            self.equal_degree(&g, d, rng, &mut out);
        }
        out.sort();
        out
    }
}

/// Reduce a rational vector mod p; `None` if a denominator vanishes.
pub fn image(zp: &Zp, coeffs: &[Rat]) -> Option<Poly> {
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if c.is_zero() {
            out.push(0);
        } else {
            out.push(zp.from_rat(c)?);
        }
    }
    trim(&mut out);
    Some(out)
}
