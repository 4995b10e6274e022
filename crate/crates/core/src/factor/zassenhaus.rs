//! Univariate factorization over Z: modular factorization, linear Hensel
//! lifting to a Mignotte-sized modulus, and recombination by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::SmallRng;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::poly::modp::{self, Zp};

pub type ZPoly = Vec<BigInt>;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233,
    239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367,
];

/// Largest number of modular factors for which subsets are enumerated.
pub const MAX_MODULAR_FACTORS: usize = 20;

fn trim(v: &mut ZPoly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
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

/// Exact division in Z[x]; `None` if `b` does not divide `a`.
pub fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return Some(r);
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

pub fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

pub fn primitive(a: &[BigInt]) -> ZPoly {
    let c = content(a);
    if c.is_zero() {
        return a.to_vec();
    }
    let sign = if a.last().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
    let c = c * sign;
    a.iter().map(|x| x / &c).collect()
}

fn reduce(zp: &Zp, a: &[BigInt]) -> modp::Poly {
    let mut out: modp::Poly = a.iter().map(|c| zp.from_bigint(c)).collect();
    modp::trim(&mut out);
    out
}

fn lift_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn from_modp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift `target ≡ g·h (mod p)` to `target ≡ G·H (mod p^k)` with `G` monic.
/// `h` carries the leading coefficient of `target`.
fn hensel_two(zp: &Zp, target: &[BigInt], g: &[u64], h: &[u64], k: u32) -> (ZPoly, ZPoly) {
    let p = BigInt::from(zp.p);
    let (one, _, t) = zp.poly_xgcd(g, h);
    debug_assert_eq!(one, vec![1]);
    let mut gz = from_modp(g);
    let mut hz = from_modp(h);
    let lc = target.last().cloned().unwrap_or_else(BigInt::zero);
    *hz.last_mut().unwrap() = lc;
    let mut pj = p.clone();
    for _ in 1..k {
        let next = &pj * &p;
        let prod = zmul(&gz, &hz);
        let n = target.len().max(prod.len());
        let diff: ZPoly = (0..n)
            .map(|i| {
                let a = target.get(i).cloned().unwrap_or_else(BigInt::zero);
                let b = prod.get(i).cloned().unwrap_or_else(BigInt::zero);
                (a - b).mod_floor(&next) / &pj
            })
            .collect();
        let e = reduce(zp, &diff);
        if !e.is_empty() {
            // dg = t·e mod g, dh = (e − dg·h) / g
            let dg = zp.poly_rem(&zp.poly_mul(&t, &e), g);
            let (dh, rem) = zp.poly_divrem(&zp.poly_sub(&e, &zp.poly_mul(&dg, h)), g);
            debug_assert!(rem.is_empty());
            for (i, c) in dg.iter().enumerate() {
                gz[i] += &pj * BigInt::from(*c);
            }
            for (i, c) in dh.iter().enumerate() {
                hz[i] += &pj * BigInt::from(*c);
            }
        }
        pj = next;
        gz = lift_mod(&gz, &pj);
        hz = lift_mod(&hz, &pj);
    }
    (gz, hz)
}

/// Lift monic modular factors of `f` to `p^k`; factors stay monic.
fn hensel_multi(zp: &Zp, f: &[BigInt], factors: &[modp::Poly], k: u32) -> Vec<ZPoly> {
    let mut out = Vec::with_capacity(factors.len());
    let mut target = f.to_vec();
    let lc_mod = zp.from_bigint(f.last().unwrap());
    for i in 0..factors.len() {
        if i + 1 == factors.len() {
            // remaining target ≡ lc · g_last; make it monic mod p^k
            let m = num_traits::pow(BigInt::from(zp.p), k as usize);
            let lc = target.last().unwrap().clone();
            let inv = lc.modinv(&m).expect("leading coefficient invertible mod p^k");
            out.push(lift_mod(&target.iter().map(|c| c * &inv).collect::<Vec<_>>(), &m));
            break;
        }
        let rest = factors[i + 1..].iter().fold(vec![lc_mod], |a, g| zp.poly_mul(&a, g));
        let (g, h) = hensel_two(zp, &target, &factors[i], &rest, k);
        out.push(g);
        target = h;
    }
    out
}

fn norm2_ceil(f: &[BigInt]) -> BigInt {
    let s: BigInt = f.iter().map(|c| c * c).sum();
    s.sqrt() + 1
}

/// Factor a primitive squarefree polynomial of positive degree with positive
/// leading coefficient into irreducible primitive factors over Z.
pub fn factor_squarefree(f: &[BigInt]) -> Result<Vec<ZPoly>> {
    let n = f.len() - 1;
    if n <= 1 {
        return Ok(vec![f.to_vec()]);
    }
    let lc = f.last().unwrap().clone();
    let mut rng = SmallRng::seed_from_u64(0x5eed);
    let mut best: Option<(Zp, Vec<modp::Poly>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        let zp = Zp::new(p);
        if zp.from_bigint(&lc) == 0 {
            continue;
        }
        let fp = reduce(&zp, f);
        if fp.len() != f.len() || !zp.is_squarefree(&fp) {
            continue;
        }
        let fs = zp.factor_squarefree(&fp, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((zp, fs));
        }
        tried += 1;
        if tried >= 4 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    let (zp, modular) = best.ok_or_else(|| Error::Capacity(format!("no suitable prime for degree {n} polynomial")))?;
    if modular.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }
    if modular.len() > MAX_MODULAR_FACTORS {
        return Err(Error::Capacity(format!(
            "{} modular factors exceed the recombination limit of {MAX_MODULAR_FACTORS}",
            modular.len()
        )));
    }
    // candidate coefficients are bounded by |lc|·2^n·‖f‖₂
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm2_ceil(f);
    let pz = BigInt::from(zp.p);
    let mut k = 1u32;
    let mut m = pz.clone();
    while m <= bound {
        m *= &pz;
        k += 1;
    }
    let lifted = hensel_multi(&zp, f, &modular, k);
    Ok(recombine(f.to_vec(), lifted, &m))
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut progress = false;
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let lc = f.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &combo {
                cand = symmetric(&zmul(&cand, &lifted[i]), m);
            }
            let cand = primitive(&cand);
            // constant-term screen before full division
            let c0 = cand.first().cloned().unwrap_or_else(BigInt::zero);
            let f0 = f.first().cloned().unwrap_or_else(BigInt::zero);
            let screen = c0.is_zero() || (&f0 % &c0).is_zero();
            if screen {
                if let Some(q) = zdiv_exact(&f, &cand) {
                    found.push(cand);
                    f = q;
                    for &i in combo.iter().rev() {
                        lifted.remove(i);
                    }
                    progress = true;
                    break;
                }
            }
            if !next_combination(&mut combo, lifted.len()) {
                break;
            }
        }
        if !progress {
            size += 1;
        }
    }
    let f = primitive(&f);
    if f.len() > 1 {
        found.push(f);
    }
    found
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(f: &[i64], expected_count: usize) {
        let f = z(f);
        let fs = factor_squarefree(&f).unwrap();
        assert_eq!(fs.len(), expected_count, "{fs:?}");
        let prod = fs.iter().fold(z(&[1]), |a, g| zmul(&a, g));
        assert_eq!(primitive(&prod), primitive(&f));
    }

    #[test]
    fn small_cases() {
        check(&[-1, 0, 1], 2);
        check(&[1, 0, 1], 1);
        // x^4 + 1 splits mod every prime but is irreducible over Z
        check(&[1, 0, 0, 0, 1], 1);
        // (2x+1)(3x-2)(x^2+x+1)
        let f = zmul(&zmul(&z(&[1, 2]), &z(&[-2, 3])), &z(&[1, 1, 1]));
        let fs = factor_squarefree(&f).unwrap();
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible but splits into quadratics mod p
        check(&[1, 0, -10, 0, 1], 1);
        // (x^4-10x^2+1)(x^2-2)
        let f = zmul(&z(&[1, 0, -10, 0, 1]), &z(&[-2, 0, 1]));
        let fs = factor_squarefree(&f).unwrap();
        assert_eq!(fs.len(), 2);
    }
}
