//! Dense univariate polynomials over Q, little-endian and trimmed.

use num_traits::{One, Zero};

use super::Rat;

pub type QPoly = Vec<Rat>;

pub fn trim(v: &mut QPoly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub fn add(a: &[Rat], b: &[Rat]) -> QPoly {
    let n = a.len().max(b.len());
    let zero = Rat::zero();
    let mut out: QPoly = (0..n).map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[Rat], b: &[Rat]) -> QPoly {
    let n = a.len().max(b.len());
    let zero = Rat::zero();
    let mut out: QPoly = (0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect();
    trim(&mut out);
    out
}

pub fn mul(a: &[Rat], b: &[Rat]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[Rat], c: &Rat) -> QPoly {
    let mut out: QPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

pub fn divrem(a: &[Rat], b: &[Rat]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let inv_lc = b[db].recip();
    let mut q = vec![Rat::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = &r[dr] * &inv_lc;
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn rem(a: &[Rat], b: &[Rat]) -> QPoly {
    divrem(a, b).1
}

pub fn monic(a: &[Rat]) -> QPoly {
    match a.last() {
        None => Vec::new(),
        Some(lc) => scale(a, &lc.recip()),
    }
}

/// Extended Euclid over Q: `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn xgcd(a: &[Rat], b: &[Rat]) -> (QPoly, QPoly, QPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (vec![Rat::one()], Vec::new());
    let (mut t0, mut t1): (QPoly, QPoly) = (Vec::new(), vec![Rat::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last().cloned() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = lc.recip();
            (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv))
        }
    }
}

pub fn gcd(a: &[Rat], b: &[Rat]) -> QPoly {
    xgcd(a, b).0
}

pub fn derivative(a: &[Rat]) -> QPoly {
    let mut out: QPoly = a.iter().enumerate().skip(1).map(|(k, c)| c * Rat::from_integer((k as i64).into())).collect();
    trim(&mut out);
    out
}

pub fn is_squarefree(a: &[Rat]) -> bool {
    gcd(a, &derivative(a)).len() <= 1
}
