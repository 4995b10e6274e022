//! Corner points of a support set and the structure-set construction.

pub mod simplex;

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{rat, Rat, ShiftVector};

/// A nonempty finite set of shift vectors of a common dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    r: usize,
    points: Vec<ShiftVector>,
}

impl SupportSet {
    pub fn new(points: impl IntoIterator<Item = ShiftVector>) -> Result<Self> {
        let set: BTreeSet<ShiftVector> = points.into_iter().collect();
        let Some(first) = set.iter().next() else {
            return Err(Error::Contract("support set must be nonempty".into()));
        };
        let r = first.dim();
        if let Some(bad) = set.iter().find(|p| p.dim() != r) {
            return Err(Error::Dimension { expected: r, found: bad.dim() });
        }
        Ok(SupportSet { r, points: set.into_iter().collect() })
    }

    pub fn dim(&self) -> usize {
        self.r
    }

    /// Points in increasing lexicographic order.
    pub fn points(&self) -> &[ShiftVector] {
        &self.points
    }

    pub fn contains(&self, p: &ShiftVector) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn translate(&self, t: &ShiftVector) -> SupportSet {
        SupportSet { r: self.r, points: self.points.iter().map(|p| p + t).collect() }
    }
}

/// A corner `point` with an inner vector: `⟨v, x − p⟩ > 0` for every other
/// support point `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerData {
    pub point: ShiftVector,
    pub inner: ShiftVector,
}

impl CornerData {
    /// Checks the separation property exactly.
    pub fn validate(&self, s: &SupportSet) -> Result<()> {
        if !s.contains(&self.point) {
            return Err(Error::NotInSupport(self.point.0.clone()));
        }
        if self.inner.dim() != s.dim() {
            return Err(Error::Dimension { expected: s.dim(), found: self.inner.dim() });
        }
        let separated = s.points().iter().filter(|x| **x != self.point).all(|x| self.inner.dot(&(x - &self.point)) > 0);
        if !separated || self.inner.is_zero() {
            return Err(Error::NotACorner(self.point.0.clone()));
        }
        Ok(())
    }
}

/// Separating inner vector for `p`, if `p` is an extreme point of `S`.
///
/// Maximizes the margin `t` subject to `⟨v, x − p⟩ ≥ t` and `‖v‖₁ ≤ 1`;
/// `p` is a corner iff the optimum is positive. The optimal `v` is scaled
/// to a primitive integer vector.
pub fn is_corner(s: &SupportSet, p: &ShiftVector) -> Result<Option<CornerData>> {
    if !s.contains(p) {
        return Err(Error::NotInSupport(p.0.clone()));
    }
    let r = s.dim();
    let others: Vec<ShiftVector> = s.points().iter().filter(|x| *x != p).map(|x| x - p).collect();
    if others.is_empty() {
        return Ok(Some(CornerData { point: p.clone(), inner: ShiftVector::unit(r, 0) }));
    }
    // variables: v+ (r), v- (r), t
    let mut a: Vec<Vec<Rat>> = Vec::new();
    let mut b: Vec<Rat> = Vec::new();
    for d in &others {
        let mut row: Vec<Rat> = d.0.iter().map(|&x| rat(-x)).collect();
        row.extend(d.0.iter().map(|&x| rat(x)));
        row.push(rat(1));
        a.push(row);
        b.push(rat(0));
    }
    let mut norm = vec![rat(1); 2 * r];
    norm.push(rat(0));
    a.push(norm);
    b.push(rat(1));
    let mut c = vec![rat(0); 2 * r];
    c.push(rat(1));
    let (opt, x) = simplex::maximize(&a, &b, &c).expect("margin is bounded by the norm constraint");
    if !opt.is_positive() {
        return Ok(None);
    }
    let v: Vec<Rat> = (0..r).map(|j| &x[j] - &x[r + j]).collect();
    Ok(Some(CornerData { point: p.clone(), inner: primitive_integer(&v) }))
}

fn primitive_integer(v: &[Rat]) -> ShiftVector {
    let den = v.iter().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    ShiftVector(ints.iter().map(|x| (x / &g).to_i64().expect("inner vector fits i64")).collect())
}

/// All extreme points of the convex hull of `S`, each with an inner vector,
/// in the support's point order.
pub fn corner_points(s: &SupportSet) -> Vec<CornerData> {
    par::map(s.points(), |p| is_corner(s, p).expect("point taken from the support"))
        .into_iter()
        .flatten()
        .collect()
}

/// Structure set `W` for corner `c` and depth `s`: the layers of the
/// semigroup generated by `S − p` nearest to the border plane, up to slab
/// depth `s·‖v‖₁`.
pub fn find_structure_set(s: &SupportSet, c: &CornerData, depth: u64) -> Result<Vec<ShiftVector>> {
    c.validate(s)?;
    let p = &c.point;
    let v = &c.inner;
    let limit = (depth as i64)
        .checked_mul(v.norm_l1())
        .ok_or_else(|| Error::Capacity("slab depth overflows".into()))?;
    let level = |x: &ShiftVector| v.dot(&(x - p));
    let tilde: Vec<ShiftVector> = s.points().iter().filter(|x| *x != p).cloned().collect();

    let mut w: BTreeSet<ShiftVector> = BTreeSet::from([p.clone()]);
    let mut rest: BTreeSet<ShiftVector> = tilde.iter().cloned().collect();
    // layer values are positive integers ≤ limit and strictly increase
    let cap = limit + 1;
    let mut iterations = 0;
    let mut last = 0;
    loop {
        let Some(m) = rest.iter().map(level).min() else { break };
        if m > limit {
            break;
        }
        iterations += 1;
        assert!(m > last && iterations <= cap, "structure-set loop exceeded its iteration cap");
        last = m;
        let layer: Vec<ShiftVector> = rest.iter().filter(|x| level(x) == m).cloned().collect();
        for x in &layer {
            rest.remove(x);
            w.insert(x.clone());
        }
        for x in &layer {
            let t = x - p;
            rest.extend(tilde.iter().map(|y| y + &t));
        }
    }
    debug_assert!(rest.iter().all(|x| level(x) > limit));
    Ok(w.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[i64]) -> ShiftVector {
        ShiftVector(v.to_vec())
    }

    fn support(pts: &[&[i64]]) -> SupportSet {
        SupportSet::new(pts.iter().map(|p| sv(p))).unwrap()
    }

    #[test]
    fn corners_of_small_sets() {
        let s = support(&[&[0], &[1], &[2], &[3]]);
        let c = corner_points(&s);
        assert_eq!(c, vec![CornerData { point: sv(&[0]), inner: sv(&[1]) }, CornerData { point: sv(&[3]), inner: sv(&[-1]) }]);
        let s = support(&[&[0, 0], &[1, 0], &[0, 2], &[1, 2]]);
        assert_eq!(corner_points(&s).len(), 4);
        let s = support(&[&[0, 0], &[1, 0], &[2, 0]]);
        assert!(is_corner(&s, &sv(&[1, 0])).unwrap().is_none());
        assert_eq!(corner_points(&s).len(), 2);
        let s = support(&[&[0, 1], &[1, 0]]);
        let c = is_corner(&s, &sv(&[0, 1])).unwrap().unwrap();
        c.validate(&s).unwrap();
        assert!(is_corner(&s, &sv(&[5, 5])).is_err());
    }

    #[test]
    fn structure_sets() {
        let s = support(&[&[0], &[1], &[2], &[3]]);
        let c = CornerData { point: sv(&[3]), inner: sv(&[-1]) };
        assert_eq!(find_structure_set(&s, &c, 2).unwrap(), vec![sv(&[1]), sv(&[2]), sv(&[3])]);
        let s = support(&[&[0, 0], &[1, 0], &[0, 2], &[1, 2]]);
        let c = CornerData { point: sv(&[0, 0]), inner: sv(&[1, 1]) };
        let w = find_structure_set(&s, &c, 4).unwrap();
        assert_eq!(w.len(), 25);
        assert!(w.iter().all(|x| x.0[1] % 2 == 0 && x.0[0] + x.0[1] <= 8));
        assert_eq!(find_structure_set(&s, &c, 0).unwrap(), vec![sv(&[0, 0])]);
        let single = support(&[&[4, 4]]);
        let c = &corner_points(&single)[0];
        assert_eq!(find_structure_set(&single, c, 3).unwrap(), vec![sv(&[4, 4])]);
        let bad = CornerData { point: sv(&[0, 0]), inner: sv(&[1, -1]) };
        assert!(find_structure_set(&s, &bad, 1).is_err());
    }
}
