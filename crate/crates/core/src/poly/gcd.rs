//! Multivariate gcd over Q by recursive primitive remainder sequences.
//!
//! A variable `v` is chosen as main variable, contents with respect to `v`
//! are handled recursively, and the primitive parts are reduced with a
//! primitive PRS in `Q[others][v]`. A modular screen (`coprime_screen`)
//! proves coprimality cheaply in the common case.

use super::modp::{self, Zp};
use super::MultiPoly;
use crate::error::{Error, Result};

const SCREEN_PRIME: u64 = 2_147_483_629;

/// Greatest common divisor, primitive over Z with positive leading
/// coefficient. `gcd(0, q) = normalize(q)`.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.check_dim(q)?;
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(Error::UndefinedGcd),
        (true, false) => Ok(q.normalize()),
        (false, true) => Ok(p.normalize()),
        (false, false) => Ok(gcd_nonzero(&p.normalize(), &q.normalize()).normalize()),
    }
}

pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a MultiPoly>) -> Result<MultiPoly> {
    let mut acc: Option<MultiPoly> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.normalize(),
            Some(a) => {
                if a.is_one() {
                    return Ok(a);
                }
                gcd(&a, p)?
            }
        });
    }
    acc.ok_or(Error::UndefinedGcd)
}

pub fn lcm(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero(p.nvars()));
    }
    let g = gcd(p, q)?;
    Ok((p * &q.div_exact(&g).expect("gcd divides")).normalize())
}

fn gcd_nonzero(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    if a == b {
        return a.clone();
    }
    if coprime_screen(a, b) {
        return MultiPoly::one(n);
    }
    let in_a = a.variables();
    let in_b = b.variables();
    let v = match in_a.iter().find(|v| in_b.contains(v)) {
        Some(&v) => v,
        None => return MultiPoly::one(n),
    };
    // variables occurring in only one argument can only live in its content
    if let Some(&w) = in_a.iter().find(|w| !in_b.contains(w)) {
        return gcd_nonzero(&content_in(a, w), b);
    }
    if let Some(&w) = in_b.iter().find(|w| !in_a.contains(w)) {
        return gcd_nonzero(a, &content_in(b, w));
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_nonzero(&ca, &cb);
    let g = primitive_prs(pa, pb, v);
    (&c * &g).normalize()
}

/// gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub(crate) fn content_in(p: &MultiPoly, var: usize) -> MultiPoly {
    let coeffs = p.coefficients_in(var);
    let mut acc: Option<MultiPoly> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        acc = Some(match acc {
            None => c.normalize(),
            Some(g) => {
                if g.is_constant() {
                    return MultiPoly::one(p.nvars());
                }
                gcd_nonzero(&g, &c.normalize())
            }
        });
    }
    acc.map(|g| g.normalize()).unwrap_or_else(|| MultiPoly::one(p.nvars()))
}

pub(crate) fn primitive_part_in(p: &MultiPoly, var: usize) -> MultiPoly {
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides").normalize()
}

fn primitive_prs(mut a: MultiPoly, mut b: MultiPoly, var: usize) -> MultiPoly {
    if a.degree_in(var) < b.degree_in(var) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return primitive_part_in(&b, var);
        }
        if r.degree_in(var) == 0 {
            return MultiPoly::one(a.nvars());
        }
        a = b;
        b = primitive_part_in(&r, var);
    }
}

/// `lc(b)^(deg a - deg b + 1) · a  mod  b`, all in `var`.
pub(crate) fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let n = a.nvars();
    let mut r = a.coefficients_in(var);
    let bc = b.coefficients_in(var);
    let db = bc.len() - 1;
    let lb = &bc[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r := lb·r − lr·x^(dr−db)·b
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bj) in bc.iter().enumerate() {
            let t = &lr * bj;
            r[dr - db + j] = &r[dr - db + j] - &t;
        }
        while r.last().is_some_and(MultiPoly::is_zero) {
            r.pop();
        }
    }
    MultiPoly::from_coefficients_in(n, var, &r)
}

/// Image of `p` in `Z/P[var]` after evaluating every other variable at
/// `point`. `None` if a denominator vanishes.
pub(crate) fn univariate_image(zp: &Zp, p: &MultiPoly, var: usize, point: &[u64]) -> Option<modp::Poly> {
    let deg = p.degree_in(var) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in p.terms() {
        let mut t = zp.from_rat(c)?;
        for (j, &e) in m.0.iter().enumerate() {
            if j != var && e > 0 {
                t = zp.mul(t, zp.pow(point[j], e as u64));
            }
        }
        let k = m.0[var] as usize;
        out[k] = zp.add(out[k], t);
    }
    modp::trim(&mut out);
    Some(out)
}

/// Returns `true` only when `a` and `b` are certainly coprime.
///
/// A common factor `g` involving `v` survives evaluation of the other
/// variables at a point where the leading coefficients in `v` do not vanish,
/// so a trivial modular gcd for every shared variable proves coprimality.
pub(crate) fn coprime_screen(a: &MultiPoly, b: &MultiPoly) -> bool {
    let zp = Zp::new(SCREEN_PRIME);
    let n = a.nvars();
    let a = a.primitive_part();
    let b = b.primitive_part();
    for v in 0..n {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da == 0 || db == 0 {
            continue;
        }
        let mut ok = false;
        for attempt in 0..3u64 {
            let point: Vec<u64> = (0..n).map(|j| pseudo_point(j as u64, v as u64, attempt)).collect();
            let (Some(ia), Some(ib)) = (univariate_image(&zp, &a, v, &point), univariate_image(&zp, &b, v, &point)) else {
                return false;
            };
            if ia.len() != da as usize + 1 || ib.len() != db as usize + 1 {
                continue;
            }
            if zp.poly_gcd(&ia, &ib).len() > 1 {
                return false;
            }
            ok = true;
            break;
        }
        if !ok {
            return false;
        }
    }
    true
}

fn pseudo_point(j: u64, v: u64, attempt: u64) -> u64 {
    // deterministic, spread-out evaluation points
    let mut x = j.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ v.wrapping_mul(0xC2B2_AE3D_27D4_EB4F) ^ (attempt + 1).wrapping_mul(0x1656_67B1_9E37_79F9);
    x ^= x >> 31;
    x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 29;
    x % (SCREEN_PRIME - 2) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nk(terms: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(2, terms)
    }

    #[test]
    fn spec_examples() {
        let a = nk(&[(1, &[2, 0]), (-1, &[0, 2])]);
        let b = nk(&[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(gcd(&a, &b).unwrap(), b);
        let c = nk(&[(1, &[1, 0]), (1, &[0, 1])]);
        let d = nk(&[(1, &[1, 0]), (2, &[0, 1])]);
        assert!(gcd(&c, &d).unwrap().is_one());
        assert!(gcd(&a, &MultiPoly::one(2)).unwrap().is_one());
        assert_eq!(gcd(&MultiPoly::zero(2), &MultiPoly::zero(2)), Err(Error::UndefinedGcd));
    }

    #[test]
    fn common_factor_recovered() {
        // s = 2kn+1, p = s·(n+k+3), q = s·(n^2+k)
        let s = nk(&[(2, &[1, 1]), (1, &[0, 0])]);
        let p = &s * &nk(&[(1, &[1, 0]), (1, &[0, 1]), (3, &[0, 0])]);
        let q = &s * &nk(&[(1, &[2, 0]), (1, &[0, 1])]);
        assert_eq!(gcd(&p, &q).unwrap(), s);
        assert_eq!(gcd(&p.scale(&crate::poly::rat(-6)), &q).unwrap(), s);
    }

    #[test]
    fn content_only_gcd() {
        // (k+1)·n and (k+1)·(k+2)
        let k1 = nk(&[(1, &[0, 1]), (1, &[0, 0])]);
        let p = &k1 * &MultiPoly::var(2, 0);
        let q = &k1 * &nk(&[(1, &[0, 1]), (2, &[0, 0])]);
        assert_eq!(gcd(&p, &q).unwrap(), k1);
    }
}
