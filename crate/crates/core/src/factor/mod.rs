//! Irreducible factorization of multivariate polynomials over Q.
//!
//! Squarefree decomposition (Yun, with recursive contents) followed by
//! per-part factorization. Multivariate parts are made monic in a main
//! variable (by a linear change `y_j ↦ y_j + b_j·x` when needed), evaluated
//! at a lucky integer point, factored as univariate polynomials, and
//! lifted back with `hensel`.

mod hensel;
mod zassenhaus;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::univariate::{self as uni, QPoly};
use crate::poly::{gcd, rat, Monomial, MultiPoly, Rat, ShiftVector};

pub use zassenhaus::factor_squarefree as factor_univariate_squarefree;

/// Total degree above which factorization refuses to run.
pub const MAX_DEGREE: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    pub unit: Rat,
    pub factors: Vec<(MultiPoly, u32)>,
}

impl FactoredPoly {
    pub fn nvars(&self) -> Option<usize> {
        self.factors.first().map(|(b, _)| b.nvars())
    }

    pub fn expand(&self, nvars: usize) -> MultiPoly {
        let mut acc = MultiPoly::constant(nvars, self.unit.clone());
        for (b, m) in &self.factors {
            acc = &acc * &b.pow(*m);
        }
        acc
    }

    pub fn is_constant(&self) -> bool {
        self.factors.is_empty()
    }
}

/// `p = unit · Π part_k^k` with squarefree, pairwise coprime parts.
pub fn squarefree_decompose(p: &MultiPoly) -> Result<Vec<(MultiPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree decomposition"));
    }
    let mut parts: Vec<(MultiPoly, u32)> = Vec::new();
    sqf_rec(&p.normalize(), &mut parts);
    parts.sort_by(|a, b| a.1.cmp(&b.1));
    // merge equal multiplicities
    let mut merged: Vec<(MultiPoly, u32)> = Vec::new();
    for (q, m) in parts {
        match merged.last_mut() {
            Some((r, k)) if *k == m => *r = (&*r * &q).normalize(),
            _ => merged.push((q, m)),
        }
    }
    Ok(merged)
}

fn sqf_rec(p: &MultiPoly, out: &mut Vec<(MultiPoly, u32)>) {
    let vars = p.variables();
    let Some(&v) = vars.first() else { return };
    let c = crate::poly::content_in(p, v);
    if !c.is_constant() {
        sqf_rec(&c, out);
    }
    let pp = p.div_exact(&c).expect("content divides").normalize();
    yun(&pp, v, out);
}

fn yun(f: &MultiPoly, v: usize, out: &mut Vec<(MultiPoly, u32)>) {
    let df = f.derivative(v);
    let a0 = gcd(f, &df).expect("nonzero");
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let mut c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative(v);
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d).expect("nonzero");
        if !a.is_constant() {
            out.push((a.normalize(), i));
        }
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative(v);
        i += 1;
    }
}

/// Complete factorization over Q. Factors are normalized (primitive over Z,
/// positive leading coefficient) and sorted by leading monomial.
pub fn factor(p: &MultiPoly) -> Result<FactoredPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("factorization"));
    }
    let deg = p.total_degree()?;
    if deg > MAX_DEGREE {
        return Err(Error::Capacity(format!("total degree {deg} exceeds the factorization limit {MAX_DEGREE}")));
    }
    let mut factors = Vec::new();
    for (part, m) in squarefree_decompose(p)? {
        for g in factor_squarefree(&part)? {
            factors.push((g, m));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    let lc_prod = factors.iter().fold(Rat::one(), |acc, (b, m)| acc * num_traits::pow(b.leading_coeff(), *m as usize));
    let unit = p.leading_coeff() / lc_prod;
    Ok(FactoredPoly { unit, factors })
}

/// Deterministic order on polynomials: by leading monomial, then by the
/// full term sequence.
pub fn canonical_cmp(a: &MultiPoly, b: &MultiPoly) -> std::cmp::Ordering {
    let ta: Vec<_> = a.terms().rev().collect();
    let tb: Vec<_> = b.terms().rev().collect();
    for (x, y) in ta.iter().zip(&tb) {
        match x.0.cmp(y.0) {
            std::cmp::Ordering::Equal => {}
            o => return o,
        }
        match x.1.cmp(y.1) {
            std::cmp::Ordering::Equal => {}
            o => return o,
        }
    }
    ta.len().cmp(&tb.len())
}

/// Irreducible factors of a normalized squarefree polynomial.
pub fn factor_squarefree(f: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let vars = f.variables();
    match vars.len() {
        0 => Ok(Vec::new()),
        1 => factor_in_one_variable(f, vars[0]),
        _ => factor_multivariate(f, &vars),
    }
}

fn to_qpoly(p: &MultiPoly, var: usize) -> QPoly {
    let mut out = vec![Rat::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        out[m.0[var] as usize] += c;
    }
    uni::trim(&mut out);
    out
}

fn from_zpoly(nvars: usize, var: usize, coeffs: &[BigInt]) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mut m = Monomial::one(nvars);
            m.0[var] = k as u32;
            (m, Rat::from_integer(c.clone()))
        }),
    )
}

/// Integer primitive image of a univariate rational polynomial.
fn integer_primitive(q: &[Rat]) -> Vec<BigInt> {
    let den = q.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = q.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    zassenhaus::primitive(&ints)
}

fn factor_in_one_variable(f: &MultiPoly, var: usize) -> Result<Vec<MultiPoly>> {
    let z = integer_primitive(&to_qpoly(f, var));
    let fs = zassenhaus::factor_squarefree(&z)?;
    let mut out: Vec<MultiPoly> = fs.iter().map(|g| from_zpoly(f.nvars(), var, g).normalize()).collect();
    out.sort_by(canonical_cmp);
    Ok(out)
}

/// Monic irreducible factors over Q of a squarefree univariate polynomial.
fn univariate_images(q: &[Rat]) -> Result<Vec<QPoly>> {
    let z = integer_primitive(q);
    let fs = zassenhaus::factor_squarefree(&z)?;
    Ok(fs
        .iter()
        .map(|g| uni::monic(&g.iter().map(|c| Rat::from_integer(c.clone())).collect::<Vec<_>>()))
        .collect())
}

fn factor_multivariate(f: &MultiPoly, vars: &[usize]) -> Result<Vec<MultiPoly>> {
    let n = f.nvars();
    // prefer a main variable whose leading coefficient is already constant
    let lc_constant = |v: usize| f.coefficients_in(v).last().is_some_and(MultiPoly::is_constant);
    let x = vars
        .iter()
        .copied()
        .filter(|&v| lc_constant(v))
        .min_by_key(|&v| f.degree_in(v))
        .unwrap_or_else(|| vars.iter().copied().min_by_key(|&v| f.degree_in(v)).unwrap());

    let c = crate::poly::content_in(f, x);
    if !c.is_constant() {
        let mut out = factor_squarefree(&c)?;
        out.extend(factor_squarefree(&f.div_exact(&c).expect("content divides").normalize())?);
        out.sort_by(canonical_cmp);
        return Ok(out);
    }

    let others: Vec<usize> = vars.iter().copied().filter(|&v| v != x).collect();
    let shear = if lc_constant(x) { None } else { Some(find_shear(f, x, &others)?) };
    let g = match &shear {
        None => f.clone(),
        Some(b) => apply_shear(f, x, &others, b, 1),
    };

    let (point, images) = choose_point(&g, x, &others)?;
    if images.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let mut offset = ShiftVector::zero(n);
    for (&v, a) in others.iter().zip(&point) {
        offset.0[v] = *a;
    }
    let centered = g.shift(&offset);
    let lifted = hensel::lift_and_recombine(&centered, x, &images)?;

    let back = -&offset;
    let mut out = Vec::with_capacity(lifted.len());
    for h in lifted {
        let h = h.shift(&back);
        let h = match &shear {
            None => h,
            Some(b) => apply_shear(&h, x, &others, b, -1),
        };
        out.push(h.normalize());
    }
    out.sort_by(canonical_cmp);
    debug_assert_eq!(crate::poly::product(n, out.iter().cloned()).normalize(), f.normalize());
    Ok(out)
}

/// `y_j ↦ y_j + sign·b_j·x` for every `y_j` in `others`.
fn apply_shear(f: &MultiPoly, x: usize, others: &[usize], b: &[i64], sign: i64) -> MultiPoly {
    let n = f.nvars();
    let xs = MultiPoly::var(n, x);
    let images: Vec<MultiPoly> = (0..n)
        .map(|v| match others.iter().position(|&w| w == v) {
            Some(j) => &MultiPoly::var(n, v) + &xs.scale(&rat(sign * b[j])),
            None => MultiPoly::var(n, v),
        })
        .collect();
    f.compose(&images)
}

/// A shear vector `b` making the leading coefficient in `x` constant:
/// the top homogeneous form must not vanish at `x = 1, y = b`.
fn find_shear(f: &MultiPoly, x: usize, others: &[usize]) -> Result<Vec<i64>> {
    let top = f.homogeneous_component(f.total_degree()?);
    let n = f.nvars();
    for b in small_vectors(others.len()).take(2000) {
        let mut point = vec![Rat::zero(); n];
        point[x] = Rat::one();
        for (&v, &bv) in others.iter().zip(&b) {
            point[v] = rat(bv);
        }
        if !top.eval(&point).is_zero() {
            return Ok(b);
        }
    }
    Err(Error::Capacity("no shear makes the polynomial monic".into()))
}

/// Evaluation point for `others` keeping `g(x, a)` squarefree of full
/// degree; among a few lucky points the one with fewest factors wins.
fn choose_point(g: &MultiPoly, x: usize, others: &[usize]) -> Result<(Vec<i64>, Vec<QPoly>)> {
    let deg = g.degree_in(x) as usize;
    let mut best: Option<(Vec<i64>, Vec<QPoly>)> = None;
    let mut lucky = 0;
    for a in small_vectors(others.len()).take(5000) {
        let mut img = g.clone();
        for (&v, &av) in others.iter().zip(&a) {
            img = img.substitute(v, &rat(av));
        }
        let q = to_qpoly(&img, x);
        if q.len() != deg + 1 || !uni::is_squarefree(&q) {
            continue;
        }
        let images = univariate_images(&q)?;
        let better = best.as_ref().is_none_or(|(_, b)| images.len() < b.len());
        if better {
            best = Some((a, images));
        }
        lucky += 1;
        if lucky >= 3 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best.ok_or_else(|| Error::Capacity("no squarefree evaluation point found".into()))
}

/// Integer vectors of length `k` in order of increasing max-norm, zero first.
fn small_vectors(k: usize) -> impl Iterator<Item = Vec<i64>> {
    (0i64..).flat_map(move |r| {
        let side = 2 * r + 1;
        let total = (side as usize).pow(k as u32);
        (0..total).filter_map(move |mut idx| {
            let mut v = Vec::with_capacity(k);
            for _ in 0..k {
                let d = (idx % side as usize) as i64;
                idx /= side as usize;
                // 0, 1, -1, 2, -2, ...
                v.push(if d % 2 == 1 { (d + 1) / 2 } else { -(d / 2) });
            }
            (v.iter().map(|c| c.abs()).max().unwrap_or(0) == r).then_some(v)
        })
    })
}

/// True when `f` multiplies back to `p` with normalized bases.
pub fn verify(p: &MultiPoly, f: &FactoredPoly) -> bool {
    f.expand(p.nvars()) == *p && f.factors.iter().all(|(b, _)| !b.leading_coeff().is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nk(terms: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(2, terms)
    }

    #[test]
    fn sqf_examples() {
        let a = nk(&[(1, &[1, 0]), (-1, &[0, 1])]);
        let b = nk(&[(1, &[1, 0]), (1, &[0, 1])]);
        let p = &a.pow(2) * &b;
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d, vec![(b.clone(), 1), (a.clone(), 2)]);
        assert_eq!(squarefree_decompose(&b).unwrap(), vec![(b.clone(), 1)]);
        let s = nk(&[(2, &[1, 1]), (1, &[0, 0])]);
        assert_eq!(squarefree_decompose(&s.pow(3)).unwrap(), vec![(s, 3)]);
        assert!(squarefree_decompose(&MultiPoly::zero(2)).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let p = nk(&[(1, &[2, 0]), (-1, &[0, 2])]);
        let f = factor(&p).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert!(verify(&p, &f));
    }

    #[test]
    fn showcase_p_has_three_factors() {
        // (n^2+k^2)((n+1)^2+(k-3)^2)(k-n+3)
        let a = nk(&[(1, &[2, 0]), (1, &[0, 2])]);
        let b = a.shift(&ShiftVector(vec![1, -3]));
        let c = nk(&[(1, &[0, 1]), (-1, &[1, 0]), (3, &[0, 0])]);
        let p = &(&a * &b) * &c;
        let f = factor(&p).unwrap();
        assert!(verify(&p, &f));
        let bases: Vec<_> = f.factors.iter().map(|(b, _)| b.clone()).collect();
        assert_eq!(bases.len(), 3);
        for x in [&a, &b, &c] {
            assert!(bases.iter().any(|y| y.associate(x)), "missing {x:?}");
        }
    }

    #[test]
    fn irreducible_quadratic() {
        let p = nk(&[(1, &[2, 0]), (1, &[0, 2]), (1, &[0, 0])]);
        let f = factor(&p).unwrap();
        assert_eq!(f.factors, vec![(p, 1)]);
    }

    #[test]
    fn nonmonic_needs_shear() {
        // (2kn+1)(kn - k + 3n) has non-constant leading coefficients in both variables
        let a = nk(&[(2, &[1, 1]), (1, &[0, 0])]);
        let b = nk(&[(1, &[1, 1]), (-1, &[0, 1]), (3, &[1, 0])]);
        let p = &a * &b;
        let f = factor(&p).unwrap();
        assert!(verify(&p, &f));
        assert_eq!(f.factors.len(), 2);
    }
}
