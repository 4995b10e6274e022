//! Seeded generators for random polynomials and planted instances.

use std::collections::BTreeMap;

use rand::rngs::SmallRng;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::bound::Plde;
use crate::io::RationalFunction;
use crate::poly::{product, rat, Monomial, MultiPoly, ShiftVector};
use crate::spread;

/// Random polynomial with up to `terms` monomials of total degree at most
/// `max_deg` and integer coefficients in `[−c, c]`. Never zero.
pub fn poly(rng: &mut SmallRng, nvars: usize, max_deg: u32, terms: usize, c: i64) -> MultiPoly {
    loop {
        let mut p = MultiPoly::zero(nvars);
        for _ in 0..rng.gen_range(1..=terms) {
            let d = rng.gen_range(0..=max_deg);
            let mut e = vec![0u32; nvars];
            for _ in 0..d {
                e[rng.gen_range(0..nvars)] += 1;
            }
            let k = rng.gen_range(-c..=c);
            p = &p + &MultiPoly::from_terms(nvars, [(Monomial(e), rat(k))]);
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Nonconstant polynomial of total degree exactly `deg`.
pub fn poly_of_degree(rng: &mut SmallRng, nvars: usize, deg: u32, terms: usize, c: i64) -> MultiPoly {
    loop {
        let p = poly(rng, nvars, deg, terms, c);
        if p.total_degree().ok() == Some(deg) {
            return p;
        }
    }
}

pub fn shift_vector(rng: &mut SmallRng, nvars: usize, b: i64) -> ShiftVector {
    ShiftVector((0..nvars).map(|_| rng.gen_range(-b..=b)).collect())
}

/// A pair of total degree at most 4 in `r` variables. Most pairs share a
/// shifted factor so that the spread is usually nonempty.
pub fn spread_pair(rng: &mut SmallRng, r: usize) -> (MultiPoly, MultiPoly) {
    let kind = rng.gen_range(0..4);
    if kind == 0 {
        let (dp, dq) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        return (poly_of_degree(rng, r, dp, 4, 3), poly_of_degree(rng, r, dq, 4, 3));
    }
    let du = rng.gen_range(1..=2);
    let u = poly_of_degree(rng, r, du, 4, 3);
    let t = shift_vector(rng, r, 4);
    let v = poly(rng, r, 4 - du, 3, 3);
    let w = poly(rng, r, 4 - du, 3, 3);
    (&u * &v, &u.shift(&t) * &w)
}

fn fits(s: &spread::SpreadSet, lo: i64, hi: i64) -> bool {
    s.is_finite() && s.points().iter().all(|v| (lo..=hi).contains(&v.0[0]))
}

/// Univariate equation `Σ_{i=0}^{m} a_i N^i y = f` with `m ≤ 3`, every
/// coefficient of degree at most 4, and `Spread(a_0, N^{−m} a_m) ⊆ [−3, 0]`
/// containing a planted element.
pub fn planted_univariate(rng: &mut SmallRng) -> Plde {
    loop {
        let m = rng.gen_range(1..=3i64);
        let d = rng.gen_range(0..=3i64);
        let du = rng.gen_range(1..=2);
        let u = poly_of_degree(rng, 1, du, 3, 4);
        let a0 = &u * &poly(rng, 1, 4 - du, 3, 4);
        let am = &u.shift(&ShiftVector(vec![m + d])) * &poly(rng, 1, 4 - du, 3, 4);
        let Ok(s) = spread::spread(&a0, &am.shift(&ShiftVector(vec![-m]))) else { continue };
        if !fits(&s, -3, 0) {
            continue;
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert(ShiftVector(vec![0]), a0);
        coeffs.insert(ShiftVector(vec![m]), am);
        for i in 1..m {
            if rng.gen_bool(0.7) {
                coeffs.insert(ShiftVector(vec![i]), poly(rng, 1, 4, 3, 4));
            }
        }
        let rhs = poly(rng, 1, 3, 3, 4);
        if let Ok(e) = Plde::new(coeffs, rhs) {
            return e;
        }
    }
}

/// A planted equation together with its known solution.
#[derive(Clone, Debug)]
pub struct Planted {
    pub equation: Plde,
    pub solution: RationalFunction,
}

/// `y = P/Q` with `a_s = r_s · N^s Q` and `f = Σ r_s · N^s P`, so that `y`
/// solves the equation and `f` is a polynomial.
fn plant(rng: &mut SmallRng, support: Vec<ShiftVector>, den: MultiPoly, rdeg: u32) -> Option<Planted> {
    let r = den.nvars();
    let num = poly(rng, r, 2, 3, 4);
    let y = RationalFunction::new(num, den).ok()?;
    let mut coeffs = BTreeMap::new();
    let mut rhs = MultiPoly::zero(r);
    for s in support {
        let rs = poly(rng, r, rdeg, 3, 3);
        rhs = &rhs + &(&rs * &y.numerator().shift(&s));
        coeffs.insert(s.clone(), &rs * &y.denominator().shift(&s));
    }
    let equation = Plde::new(coeffs, rhs).ok()?;
    Some(Planted { equation, solution: y })
}

/// Univariate planted instance with a denominator built from shifted
/// copies of one or two small factors.
pub fn planted_univariate_solution(rng: &mut SmallRng) -> Planted {
    loop {
        let m = rng.gen_range(1..=3i64);
        let support: Vec<ShiftVector> = (0..=m).map(|i| ShiftVector(vec![i])).collect();
        let mut parts = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            let du = rng.gen_range(1..=2);
            let u = poly_of_degree(rng, 1, du, 3, 4);
            parts.push(u.shift(&shift_vector(rng, 1, 3)));
            if rng.gen_bool(0.5) {
                parts.push(u);
            }
        }
        if let Some(p) = plant(rng, support, product(1, parts), 1) {
            return p;
        }
    }
}

/// Bivariate planted instance with `2 ≤ |S| ≤ 5` in `[0, 2]^2` and a
/// denominator mixing aperiodic quadratics, their shifts and periodic
/// linear factors.
pub fn planted_bivariate(rng: &mut SmallRng) -> Planted {
    let grid: Vec<ShiftVector> = (0..3).flat_map(|a| (0..3).map(move |b| ShiftVector(vec![a, b]))).collect();
    loop {
        let size = rng.gen_range(2..=5);
        let support: Vec<ShiftVector> = grid.choose_multiple(rng, size).cloned().collect();
        let mut parts = Vec::new();
        // a fifth of the instances have a purely periodic denominator
        if rng.gen_bool(0.8) {
            let u = aperiodic_quadratic(rng);
            parts.push(u.clone());
            if rng.gen_bool(0.5) {
                parts.push(u.shift(&shift_vector(rng, 2, 2)));
            }
        }
        if parts.is_empty() || rng.gen_bool(0.4) {
            parts.push(poly_of_degree(rng, 2, 1, 3, 3));
        }
        if let Some(p) = plant(rng, support, product(2, parts), 1) {
            return p;
        }
    }
}

fn aperiodic_quadratic(rng: &mut SmallRng) -> MultiPoly {
    loop {
        let q = poly_of_degree(rng, 2, 2, 5, 3);
        if matches!(spread::is_periodic(&q), Ok(false)) {
            return q;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::apply_plde;
    use crate::spread::ExtInt;
    use rand::SeedableRng;

    #[test]
    fn planted_instances_solve() {
        let mut rng = SmallRng::seed_from_u64(7);
        for _ in 0..5 {
            let p = planted_bivariate(&mut rng);
            assert!(apply_plde(&p.equation, &p.solution).unwrap().is_zero());
            let p = planted_univariate_solution(&mut rng);
            assert!(apply_plde(&p.equation, &p.solution).unwrap().is_zero());
        }
    }

    #[test]
    fn univariate_dispersion_window() {
        let mut rng = SmallRng::seed_from_u64(3);
        for _ in 0..5 {
            let e = planted_univariate(&mut rng);
            let pts = e.support().points();
            let m = pts.last().unwrap().0[0];
            let a0 = e.coeff(&pts[0]).unwrap();
            let am = e.coeff(pts.last().unwrap()).unwrap();
            let d = spread::disp(a0, &am.shift(&ShiftVector(vec![-m]))).unwrap();
            assert!(matches!(d, ExtInt::Finite(0..=3)));
        }
    }
}
