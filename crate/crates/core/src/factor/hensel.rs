//! Multivariate Hensel lifting over Q.
//!
//! The input is monic (up to a constant) in the main variable `x` and its
//! image at `y = 0` is squarefree. Factors are lifted degree by degree in
//! the total degree of the remaining variables, then recombined by exact
//! trial division.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::univariate::{self as uni, QPoly};
use crate::poly::{Monomial, MultiPoly, Rat};

/// Largest number of univariate images for which subsets are enumerated.
pub const MAX_LIFTED_FACTORS: usize = 16;

type Series = BTreeMap<Monomial, QPoly>;

fn y_degree(m: &Monomial, xv: usize) -> u32 {
    m.degree() - m.0[xv]
}

fn to_series(p: &MultiPoly, xv: usize) -> Series {
    let mut out: Series = BTreeMap::new();
    for (m, c) in p.terms() {
        let k = m.0[xv] as usize;
        let mut ym = m.clone();
        ym.0[xv] = 0;
        let entry = out.entry(ym).or_default();
        if entry.len() <= k {
            entry.resize(k + 1, Rat::zero());
        }
        entry[k] += c;
    }
    out.retain(|_, v| {
        uni::trim(v);
        !v.is_empty()
    });
    out
}

fn from_series(s: &Series, xv: usize, nvars: usize) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        s.iter().flat_map(|(ym, coeffs)| {
            coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| {
                let mut m = ym.clone();
                m.0[xv] = k as u32;
                (m, c.clone())
            })
        }),
    )
}

fn mul_trunc(a: &Series, b: &Series, xv: usize, max_deg: u32) -> Series {
    let mut out: Series = BTreeMap::new();
    for (ma, ca) in a {
        let da = y_degree(ma, xv);
        for (mb, cb) in b {
            if da + y_degree(mb, xv) > max_deg {
                continue;
            }
            let m = ma.mul(mb);
            let prod = uni::mul(ca, cb);
            let e = out.entry(m).or_default();
            *e = uni::add(e, &prod);
        }
    }
    out.retain(|_, v| !v.is_empty());
    out
}

fn max_y_degree(p: &MultiPoly, xv: usize) -> u32 {
    p.terms().map(|(m, _)| y_degree(m, xv)).max().unwrap_or(0)
}

/// Lift `f(x, 0) = lc · Π images` and recover the irreducible factors of
/// `f`. `images` are monic, pairwise coprime, and `f` has constant leading
/// coefficient in `x`.
pub fn lift_and_recombine(f: &MultiPoly, xv: usize, images: &[QPoly]) -> Result<Vec<MultiPoly>> {
    let nvars = f.nvars();
    if images.len() > MAX_LIFTED_FACTORS {
        return Err(Error::Capacity(format!(
            "{} univariate images exceed the recombination limit of {MAX_LIFTED_FACTORS}",
            images.len()
        )));
    }
    let coeffs = f.coefficients_in(xv);
    let lc = coeffs.last().expect("nonzero").clone();
    if !lc.is_constant() {
        return Err(Error::Contract("Hensel lifting needs a constant leading coefficient".into()));
    }
    let fm = f.scale(&lc.constant_term().recip());
    let target = to_series(&fm, xv);
    let max_deg = max_y_degree(&fm, xv);

    // partial-fraction cofactors: Σ s_i · Π_{j≠i} u_j = 1
    let k = images.len();
    let mut cofactors = Vec::with_capacity(k);
    for i in 0..k {
        let others = images
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(vec![Rat::from_integer(1.into())], |acc, (_, u)| uni::mul(&acc, u));
        let (g, s, _) = uni::xgcd(&uni::rem(&others, &images[i]), &images[i]);
        if g.len() != 1 {
            return Err(Error::Contract("univariate images are not coprime".into()));
        }
        cofactors.push(s);
    }

    let unit = Monomial::one(nvars);
    let mut lifted: Vec<Series> = images.iter().map(|u| BTreeMap::from([(unit.clone(), u.clone())])).collect();
    for d in 1..=max_deg {
        let prod = lifted.iter().skip(1).fold(lifted[0].clone(), |acc, g| mul_trunc(&acc, g, xv, d));
        let mut monos: Vec<&Monomial> = target.keys().chain(prod.keys()).filter(|m| y_degree(m, xv) == d).collect();
        monos.sort();
        monos.dedup();
        let mut updates: Vec<(usize, Monomial, QPoly)> = Vec::new();
        for m in monos {
            let empty = Vec::new();
            let e = uni::sub(target.get(m).unwrap_or(&empty), prod.get(m).unwrap_or(&empty));
            if e.is_empty() {
                continue;
            }
            for (i, u) in images.iter().enumerate() {
                let delta = uni::rem(&uni::mul(&e, &cofactors[i]), u);
                if !delta.is_empty() {
                    updates.push((i, m.clone(), delta));
                }
            }
        }
        for (i, m, delta) in updates {
            let e = lifted[i].entry(m).or_default();
            *e = uni::add(e, &delta);
        }
    }

    let mut remaining = fm;
    let mut pool: Vec<MultiPoly> = lifted.iter().map(|s| from_series(s, xv, nvars)).collect();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let bound = max_y_degree(&remaining, xv);
        let mut combo: Vec<usize> = (0..size).collect();
        let mut progress = false;
        loop {
            let cand = combo.iter().skip(1).fold(to_series(&pool[combo[0]], xv), |acc, &i| {
                mul_trunc(&acc, &to_series(&pool[i], xv), xv, bound)
            });
            let cand = from_series(&cand, xv, nvars);
            if let Some(q) = remaining.div_exact(&cand) {
                found.push(cand.normalize());
                remaining = q;
                for &i in combo.iter().rev() {
                    pool.remove(i);
                }
                progress = true;
                break;
            }
            if !next_combination(&mut combo, pool.len()) {
                break;
            }
        }
        if !progress {
            size += 1;
        }
    }
    if !remaining.is_constant() {
        found.push(remaining.normalize());
    }
    Ok(found)
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
