//! Independent reference computations: exhaustive spread search, direct
//! substitution into an equation, and the univariate Abramov bound.

pub mod random;

use crate::bound::Plde;
use crate::error::{Error, Result};
use crate::factor;
use crate::io::RationalFunction;
use crate::par;
use crate::poly::{coprime_screen, gcd, product, MultiPoly, ShiftVector};
use crate::spread::{self, ExtInt};

fn box_point(idx: u64, r: usize, b: i64) -> ShiftVector {
    let side = (2 * b + 1) as u64;
    let mut idx = idx;
    let mut v = vec![0i64; r];
    for x in v.iter_mut().rev() {
        *x = (idx % side) as i64 - b;
        idx /= side;
    }
    ShiftVector(v)
}

fn box_size(r: usize, b: i64) -> u64 {
    ((2 * b + 1) as u64).checked_pow(r as u32).expect("search box too large")
}

fn shares_factor(p: &MultiPoly, q: &MultiPoly, i: &ShiftVector) -> bool {
    let qs = q.shift(i);
    if coprime_screen(p, &qs) {
        return false;
    }
    !gcd(p, &qs).expect("nonzero inputs").is_constant()
}

/// `{ i ∈ [−b, b]^r : gcd(p, N^i q) ≠ 1 }` by exhaustive gcd computation,
/// sorted lexicographically.
pub fn brute_force_spread(p: &MultiPoly, q: &MultiPoly, b: i64) -> Result<Vec<ShiftVector>> {
    check(p, q)?;
    let r = p.nvars();
    let hits = par::filter_range(0..box_size(r, b), |idx| shares_factor(p, q, &box_point(idx, r, b)));
    Ok(hits.into_iter().map(|idx| box_point(idx, r, b)).collect())
}

/// Single-threaded variant of [`brute_force_spread`].
pub fn brute_force_spread_sequential(p: &MultiPoly, q: &MultiPoly, b: i64) -> Result<Vec<ShiftVector>> {
    check(p, q)?;
    let r = p.nvars();
    Ok((0..box_size(r, b)).map(|idx| box_point(idx, r, b)).filter(|i| shares_factor(p, q, i)).collect())
}

fn check(p: &MultiPoly, q: &MultiPoly) -> Result<()> {
    p.check_dim(q)?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("brute-force spread"));
    }
    Ok(())
}

/// `Σ_s a_s · y(n + s) − f`, reduced. Zero exactly when `y` solves `e`.
///
/// Works over the factored denominator of `y`, so the common denominator
/// is an lcm of shifted factors rather than a product of full
/// denominators.
pub fn apply_plde(e: &Plde, y: &RationalFunction) -> Result<RationalFunction> {
    let n = e.dim();
    if y.nvars() != n {
        return Err(Error::Dimension { expected: n, found: y.nvars() });
    }
    let fd = factor::factor(y.denominator())?;
    // distinct shifted factors with their largest multiplicity
    let mut lcm: Vec<(MultiPoly, u32)> = Vec::new();
    let mut per_shift: Vec<(ShiftVector, Vec<(MultiPoly, u32)>)> = Vec::new();
    for s in e.coeffs().keys() {
        let shifted: Vec<(MultiPoly, u32)> = fd.factors.iter().map(|(b, m)| (b.shift(s).normalize(), *m)).collect();
        for (b, m) in &shifted {
            match lcm.iter_mut().find(|(c, _)| c == b) {
                Some(entry) => entry.1 = entry.1.max(*m),
                None => lcm.push((b.clone(), *m)),
            }
        }
        per_shift.push((s.clone(), shifted));
    }
    let unit = fd.unit.recip();
    let full = product(n, lcm.iter().map(|(b, m)| b.pow(*m)));
    let mut total = -&(e.rhs() * &full);
    for (s, shifted) in &per_shift {
        let cof = product(
            n,
            lcm.iter().map(|(b, m)| {
                let own = shifted.iter().find(|(c, _)| c == b).map(|(_, m)| *m).unwrap_or(0);
                b.pow(m - own)
            }),
        );
        let a = e.coeff(s).expect("support point");
        total = &total + &(&(a * &y.numerator().shift(s)) * &cof).scale(&unit);
    }
    if total.is_zero() {
        return Ok(RationalFunction::from_poly(total));
    }
    let mut den = MultiPoly::one(n);
    for (b, m) in lcm {
        let mut left = m;
        while left > 0 {
            match total.div_exact(&b) {
                Some(q) => {
                    total = q;
                    left -= 1;
                }
                None => break,
            }
        }
        den = &den * &b.pow(left);
    }
    RationalFunction::new(total, den)
}

/// Classical dispersion `max{ i ≥ 0 : gcd(N^i a0, N^{−m} am) ≠ 1 }`.
pub fn abramov_dispersion(a0: &MultiPoly, am: &MultiPoly, m: i64) -> Result<ExtInt> {
    if a0.nvars() != 1 || am.nvars() != 1 {
        return Err(Error::Contract("the classical dispersion is univariate".into()));
    }
    let s = spread::spread(a0, &am.shift(&ShiftVector(vec![-m])))?;
    // gcd(N^i a0, N^{-m} am) ≠ 1 iff −i lies in Spread(a0, N^{-m} am)
    Ok(s.points().iter().map(|v| -v.0[0]).filter(|i| *i >= 0).map(ExtInt::Finite).max().unwrap_or(ExtInt::NegInf))
}

/// `gcd(Π_{i=0}^{s} N^i a_0, Π_{i=0}^{s} N^{−m−i} a_m)` for a univariate
/// equation with support `{lo, …, lo+m}`, translated back to `y`.
pub fn abramov_bound(e: &Plde) -> Result<MultiPoly> {
    if e.dim() != 1 {
        return Err(Error::Contract("the classical bound is univariate".into()));
    }
    let pts = e.support().points();
    let lo = pts.first().expect("nonempty").0[0];
    let hi = pts.last().expect("nonempty").0[0];
    let m = hi - lo;
    let a0 = e.coeff(&pts[0]).expect("support point");
    let am = e.coeff(&pts[pts.len() - 1]).expect("support point");
    let s = match abramov_dispersion(a0, am, m)? {
        ExtInt::Finite(s) => s,
        _ => return Ok(MultiPoly::one(1)),
    };
    let sv = |k: i64| ShiftVector(vec![k]);
    let left = product(1, (0..=s).map(|i| a0.shift(&sv(i))));
    let right = product(1, (0..=s).map(|i| am.shift(&sv(-m - i))));
    // the bound above is for N^lo y
    Ok(gcd(&left, &right)?.shift(&sv(-lo)).normalize())
}
