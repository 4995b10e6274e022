//! Spread and dispersion of polynomials under multi-shifts, and the
//! periodic/aperiodic split.

pub mod groebner;
pub mod lattice;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factor::{self, squarefree_decompose};
use crate::poly::{Monomial, MultiPoly, Rat, ShiftVector};
use crate::par;

pub use lattice::{integer_affine_solutions, AffineCoset};

/// Integers extended by −∞ and ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => write!(f, "inf"),
        }
    }
}

/// A finite union of affine lattice cosets in `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SpreadSet {
    cosets: Vec<AffineCoset>,
}

impl SpreadSet {
    pub fn empty() -> Self {
        SpreadSet::default()
    }

    /// Builds a set from arbitrary cosets: duplicates and cosets contained
    /// in others are dropped, the rest sorted.
    pub fn from_cosets(mut cosets: Vec<AffineCoset>) -> Self {
        cosets.sort();
        cosets.dedup();
        let keep: Vec<bool> = (0..cosets.len())
            .map(|i| !cosets.iter().enumerate().any(|(j, other)| j != i && coset_within(&cosets[i], other)))
            .collect();
        let mut cosets: Vec<AffineCoset> = cosets.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect();
        // positive-dimensional cosets after points
        cosets.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        SpreadSet { cosets }
    }

    pub fn from_points(points: impl IntoIterator<Item = ShiftVector>) -> Self {
        Self::from_cosets(points.into_iter().map(AffineCoset::point).collect())
    }

    pub fn cosets(&self) -> &[AffineCoset] {
        &self.cosets
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.cosets.iter().all(AffineCoset::is_point)
    }

    /// The isolated points (all elements when the set is finite).
    pub fn points(&self) -> Vec<ShiftVector> {
        self.cosets.iter().filter(|c| c.is_point()).map(|c| c.base().clone()).collect()
    }

    pub fn contains(&self, v: &ShiftVector) -> bool {
        self.cosets.iter().any(|c| c.contains(v))
    }

    pub fn union(&self, other: &SpreadSet) -> SpreadSet {
        Self::from_cosets(self.cosets.iter().chain(&other.cosets).cloned().collect())
    }

    pub fn negate(&self) -> SpreadSet {
        Self::from_cosets(self.cosets.iter().map(AffineCoset::negate).collect())
    }

    pub fn translate(&self, by: &ShiftVector) -> SpreadSet {
        Self::from_cosets(self.cosets.iter().map(|c| c.translate(by)).collect())
    }

    /// `max |i_k|` over the set: −∞ when empty, ∞ when unbounded.
    pub fn max_abs_coordinate(&self, k: usize) -> ExtInt {
        let mut best = ExtInt::NegInf;
        for c in &self.cosets {
            if c.unbounded_in(k) {
                return ExtInt::PosInf;
            }
            best = best.max(ExtInt::Finite(c.base().0[k].abs()));
        }
        best
    }

    /// Maximum of `max_abs_coordinate` over all `r` coordinates.
    pub fn max_abs(&self, r: usize) -> ExtInt {
        (0..r).map(|k| self.max_abs_coordinate(k)).max().unwrap_or(ExtInt::NegInf)
    }

    /// All members in the box `[−b, b]^r`, sorted.
    pub fn in_box(&self, r: usize, b: i64) -> Vec<ShiftVector> {
        let side = (2 * b + 1) as u64;
        let total = side.checked_pow(r as u32).expect("box size");
        let decode = |mut idx: u64| {
            let mut v = vec![0i64; r];
            for x in v.iter_mut().rev() {
                *x = (idx % side) as i64 - b;
                idx /= side;
            }
            ShiftVector(v)
        };
        let mut out: Vec<ShiftVector> = (0..total).map(decode).filter(|v| self.contains(v)).collect();
        out.sort();
        out
    }
}

fn coset_within(a: &AffineCoset, b: &AffineCoset) -> bool {
    if a.dim() > b.dim() || !b.contains(a.base()) {
        return false;
    }
    a.basis().iter().all(|v| b.contains(&(a.base() + v)))
}

impl fmt::Display for SpreadSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cosets.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .cosets
            .iter()
            .map(|c| {
                let mut s = c.base().to_string();
                for v in c.basis() {
                    s.push_str(&format!("+Z{v}"));
                }
                s
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Spread of two irreducible polynomials: all `i` with `p = c·N^i q`.
pub fn spread_irreducible(p: &MultiPoly, q: &MultiPoly) -> Result<SpreadSet> {
    p.check_dim(q)?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("spread"));
    }
    if p.is_constant() || q.is_constant() {
        return Ok(SpreadSet::empty());
    }
    let (p, q) = (p.monic(), q.monic());
    // shifting keeps the leading monomial and coefficient
    if p.leading_monomial() != q.leading_monomial() {
        return Ok(SpreadSet::empty());
    }
    let r = p.nvars();
    let system = shift_system(&p, &q);
    let g = linearize(&system, r)?;
    if g.len() == 1 && g[0].is_one() {
        return Ok(SpreadSet::empty());
    }
    let zero_i = Monomial::one(r);
    let rows: Vec<Vec<Rat>> = g.iter().map(|e| (0..r).map(|j| e.coeff(&Monomial::var(r, j))).collect()).collect();
    let rhs: Vec<Rat> = g.iter().map(|e| -e.coeff(&zero_i)).collect();
    Ok(match integer_affine_solutions(&rows, &rhs, r) {
        Some(c) => SpreadSet::from_cosets(vec![c]),
        None => SpreadSet::empty(),
    })
}

/// Coefficients of `p(n) − q(n+i)` with respect to `n`, as polynomials in `i`.
fn shift_system(p: &MultiPoly, q: &MultiPoly) -> Vec<MultiPoly> {
    let r = p.nvars();
    let images: Vec<MultiPoly> = (0..r).map(|j| &MultiPoly::var(2 * r, j) + &MultiPoly::var(2 * r, r + j)).collect();
    let map: Vec<usize> = (0..r).collect();
    let diff = &p.embed(2 * r, &map) - &q.compose(&images);
    let mut coeffs: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    for (m, c) in diff.terms() {
        let (n_part, i_part) = m.0.split_at(r);
        let e = coeffs.entry(n_part.to_vec()).or_insert_with(|| MultiPoly::zero(r));
        *e = &*e + &MultiPoly::from_terms(r, [(Monomial(i_part.to_vec()), c.clone())]);
    }
    coeffs.into_values().filter(|c| !c.is_zero()).collect()
}

fn squarefree_part(p: &MultiPoly) -> Result<MultiPoly> {
    if p.is_constant() {
        return Ok(p.clone());
    }
    let parts = squarefree_decompose(p)?;
    Ok(parts.into_iter().fold(MultiPoly::one(p.nvars()), |acc, (b, _)| &acc * &b))
}

/// Gröbner basis of the radical, reached by the squarefree/eliminant fixed
/// point; errors when the result is still nonlinear.
fn linearize(system: &[MultiPoly], r: usize) -> Result<Vec<MultiPoly>> {
    let mut g = groebner::groebner_basis(system);
    for _ in 0..16 {
        if groebner::is_linear(&g) {
            return Ok(g);
        }
        let mut next = g.iter().map(squarefree_part).collect::<Result<Vec<_>>>()?;
        if groebner::is_zero_dimensional(&g) {
            for v in 0..r {
                if let Some(e) = groebner::eliminant(&g, v) {
                    let terms = e.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
                        let mut m = vec![0u32; r];
                        m[v] = k as u32;
                        (Monomial(m), c.clone())
                    });
                    next.push(squarefree_part(&MultiPoly::from_terms(r, terms))?);
                }
            }
        }
        let g2 = groebner::groebner_basis(&next);
        if g2 == g {
            break;
        }
        g = g2;
    }
    if groebner::is_linear(&g) {
        return Ok(g);
    }
    let shown: Vec<String> = g.iter().map(|e| format!("{e:?}")).collect();
    Err(Error::Radical(format!("shift system did not become linear: [{}]", shown.join(", "))))
}

/// Distinct nonconstant irreducible factors.
pub fn irreducible_factors(p: &MultiPoly) -> Result<Vec<MultiPoly>> {
    Ok(factor::factor(p)?.factors.into_iter().map(|(b, _)| b).collect())
}

/// Union of the pairwise spreads of two lists of irreducible polynomials.
pub fn spread_of_factors(ps: &[MultiPoly], qs: &[MultiPoly]) -> Result<SpreadSet> {
    let pairs: Vec<(&MultiPoly, &MultiPoly)> = ps.iter().flat_map(|a| qs.iter().map(move |b| (a, b))).collect();
    let parts = par::try_map(&pairs, |(a, b)| spread_irreducible(a, b))?;
    Ok(SpreadSet::from_cosets(parts.into_iter().flat_map(|s| s.cosets).collect()))
}

/// `{ i ∈ Z^r : gcd(p, N^i q) ≠ 1 }`.
pub fn spread(p: &MultiPoly, q: &MultiPoly) -> Result<SpreadSet> {
    p.check_dim(q)?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("spread"));
    }
    spread_of_factors(&irreducible_factors(p)?, &irreducible_factors(q)?)
}

pub fn disp_k(p: &MultiPoly, q: &MultiPoly, k: usize) -> Result<ExtInt> {
    if k >= p.nvars() {
        return Err(Error::Coordinate { index: k, nvars: p.nvars() });
    }
    Ok(spread(p, q)?.max_abs_coordinate(k))
}

pub fn disp(p: &MultiPoly, q: &MultiPoly) -> Result<ExtInt> {
    Ok(spread(p, q)?.max_abs(p.nvars()))
}

/// Periodicity of an irreducible polynomial.
pub fn is_irreducible_periodic(f: &MultiPoly) -> Result<bool> {
    Ok(!spread_irreducible(f, f)?.is_finite())
}

pub fn is_periodic(p: &MultiPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("periodicity test"));
    }
    for f in irreducible_factors(p)? {
        if is_irreducible_periodic(&f)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Irreducible factors with multiplicities, split into (periodic, aperiodic).
pub fn split_periodic_factors(p: &MultiPoly) -> Result<(Vec<(MultiPoly, u32)>, Vec<(MultiPoly, u32)>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("periodic split"));
    }
    let fp = factor::factor(p)?;
    let flags = par::try_map(&fp.factors, |(b, _)| is_irreducible_periodic(b))?;
    let (per, aper): (Vec<_>, Vec<_>) = fp.factors.into_iter().zip(flags).partition(|(_, f)| *f);
    Ok((per.into_iter().map(|(x, _)| x).collect(), aper.into_iter().map(|(x, _)| x).collect()))
}

/// `(periodic part, aperiodic part)`, both normalized.
pub fn split_periodic(p: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    let n = p.nvars();
    let (per, aper) = split_periodic_factors(p)?;
    let expand = |fs: Vec<(MultiPoly, u32)>| fs.into_iter().fold(MultiPoly::one(n), |acc, (b, m)| &acc * &b.pow(m)).normalize();
    Ok((expand(per), expand(aper)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(terms: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(2, terms)
    }

    fn sv(v: &[i64]) -> ShiftVector {
        ShiftVector(v.to_vec())
    }

    #[test]
    fn algorithm_examples() {
        let s = spread_irreducible(&p2(&[(1, &[1, 0]), (1, &[0, 1])]), &p2(&[(1, &[1, 0]), (2, &[0, 1])])).unwrap();
        assert!(s.is_empty());
        let p = p2(&[(3, &[0, 2]), (6, &[1, 1]), (-7, &[0, 1]), (3, &[2, 0]), (-7, &[1, 0]), (1, &[0, 0])]);
        let q = p2(&[(3, &[0, 2]), (6, &[1, 1]), (-13, &[0, 1]), (3, &[2, 0]), (-13, &[1, 0]), (11, &[0, 0])]);
        let s = spread_irreducible(&p, &q).unwrap();
        assert_eq!(s.cosets(), &[AffineCoset::new(sv(&[1, 0]), vec![sv(&[1, -1])])]);
        assert_eq!(s.cosets()[0].base(), &sv(&[1, 0]));
        let nk = p2(&[(1, &[1, 0]), (-1, &[0, 1])]);
        let s = spread_irreducible(&nk, &nk).unwrap();
        assert_eq!(s.to_string(), "{(0,0)+Z(1,1)}");
        assert_eq!(s.max_abs(2), ExtInt::PosInf);
    }

    #[test]
    fn spread_of_n_in_two_variables() {
        let n = MultiPoly::var(2, 0);
        assert_eq!(spread(&n, &n).unwrap().to_string(), "{(0,0)+Z(0,1)}");
        assert!(spread(&MultiPoly::from_int(2, 5), &n).unwrap().is_empty());
        assert_eq!(disp(&MultiPoly::from_int(2, 5), &n).unwrap(), ExtInt::NegInf);
    }

    #[test]
    fn periodic_split() {
        let nk = p2(&[(1, &[1, 0]), (-1, &[0, 1])]);
        let circ = p2(&[(1, &[2, 0]), (1, &[0, 2]), (1, &[0, 0])]);
        assert!(is_periodic(&nk).unwrap());
        assert!(!is_periodic(&circ).unwrap());
        let (u, v) = split_periodic(&(&nk * &circ)).unwrap();
        assert_eq!(u, nk);
        assert_eq!(v, circ);
        let (u, v) = split_periodic(&p2(&[(2, &[1, 1]), (1, &[0, 0])])).unwrap();
        assert!(u.is_one());
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn showcase_pair() {
        let n = MultiPoly::var(2, 0);
        let k = MultiPoly::var(2, 1);
        let c = |v: i64| MultiPoly::from_int(2, v);
        let sq = |a: &MultiPoly| a * a;
        let p = &(&(&sq(&n) + &sq(&k)) * &(&sq(&(&n + &c(1))) + &sq(&(&k - &c(3))))) * &(&(&k - &n) + &c(3));
        let q = &(&(&sq(&(&n + &c(2))) + &sq(&(&k - &c(1)))) * &(&sq(&(&n - &c(2))) + &sq(&(&k + &c(7))))) * &(&k.scale(&crate::poly::rat(2)) - &n.scale(&crate::poly::rat(3)));
        let s = spread(&p, &q).unwrap();
        assert_eq!(s.points(), vec![sv(&[-2, 1]), sv(&[-1, -2]), sv(&[2, -7]), sv(&[3, -10])]);
        assert_eq!(spread(&q, &p).unwrap(), s.negate());
        assert_eq!(s.max_abs(2), ExtInt::Finite(10));
    }

    #[test]
    fn in_box_enumeration() {
        let s = SpreadSet::from_cosets(vec![AffineCoset::new(sv(&[0, 0]), vec![sv(&[1, 1])]), AffineCoset::point(sv(&[2, 2]))]);
        assert_eq!(s.cosets().len(), 1);
        assert_eq!(s.in_box(2, 1), vec![sv(&[-1, -1]), sv(&[0, 0]), sv(&[1, 1])]);
    }
}
