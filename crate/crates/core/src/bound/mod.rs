//! Dispersion bounds and aperiodic denominator bounds for linear partial
//! difference equations `Σ_s a_s N^s y = f`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hull::{self, CornerData, SupportSet};
use crate::par;
use crate::poly::{MultiPoly, ShiftVector};
use crate::spread::{self, ExtInt};

/// A linear partial difference equation with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plde {
    support: SupportSet,
    coeffs: BTreeMap<ShiftVector, MultiPoly>,
    rhs: MultiPoly,
}

impl Plde {
    pub fn new(coeffs: BTreeMap<ShiftVector, MultiPoly>, rhs: MultiPoly) -> Result<Self> {
        let support = SupportSet::new(coeffs.keys().cloned())?;
        let r = support.dim();
        for (s, a) in &coeffs {
            if a.is_zero() {
                return Err(Error::ZeroPolynomial("coefficient on a support point"));
            }
            if a.nvars() != r {
                return Err(Error::Dimension { expected: r, found: a.nvars() });
            }
            debug_assert_eq!(s.dim(), r);
        }
        if rhs.nvars() != r {
            return Err(Error::Dimension { expected: r, found: rhs.nvars() });
        }
        Ok(Plde { support, coeffs, rhs })
    }

    pub fn dim(&self) -> usize {
        self.support.dim()
    }

    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    pub fn coeffs(&self) -> &BTreeMap<ShiftVector, MultiPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, s: &ShiftVector) -> Option<&MultiPoly> {
        self.coeffs.get(s)
    }

    pub fn rhs(&self) -> &MultiPoly {
        &self.rhs
    }
}

/// Aperiodic irreducible factors of every coefficient.
#[derive(Clone, Debug)]
pub struct AperiodicParts {
    parts: BTreeMap<ShiftVector, Vec<(MultiPoly, u32)>>,
}

impl AperiodicParts {
    pub fn compute(e: &Plde) -> Result<Self> {
        let entries: Vec<(&ShiftVector, &MultiPoly)> = e.coeffs.iter().collect();
        let split = par::try_map(&entries, |(_, a)| spread::split_periodic_factors(a).map(|(_, aper)| aper))?;
        Ok(AperiodicParts { parts: entries.into_iter().map(|(s, _)| s.clone()).zip(split).collect() })
    }

    pub fn at(&self, s: &ShiftVector) -> &[(MultiPoly, u32)] {
        self.parts.get(s).map(Vec::as_slice).unwrap_or(&[])
    }

    fn bases(&self, s: &ShiftVector) -> Vec<MultiPoly> {
        self.at(s).iter().map(|(b, _)| b.clone()).collect()
    }

    /// Keeps only factors shift-equivalent to one of `filter`.
    fn restricted(&self, filter: &[MultiPoly]) -> Result<Self> {
        let mut parts = BTreeMap::new();
        for (s, fs) in &self.parts {
            let mut kept = Vec::new();
            for (b, m) in fs {
                if shift_equivalent_to_any(b, filter)? {
                    kept.push((b.clone(), *m));
                }
            }
            parts.insert(s.clone(), kept);
        }
        Ok(AperiodicParts { parts })
    }
}

fn shift_equivalent_to_any(b: &MultiPoly, others: &[MultiPoly]) -> Result<bool> {
    for c in others {
        if !spread::spread_irreducible(b, c)?.is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Irreducible aperiodic factors of the first corner coefficient that have
/// a shift-equivalent factor in every other corner coefficient.
pub fn must_contain_filter(e: &Plde) -> Result<Vec<MultiPoly>> {
    let parts = AperiodicParts::compute(e)?;
    must_contain_with(&parts, &hull::corner_points(&e.support))
}

fn must_contain_with(parts: &AperiodicParts, corners: &[CornerData]) -> Result<Vec<MultiPoly>> {
    let Some((first, rest)) = corners.split_first() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for b in parts.bases(&first.point) {
        let mut everywhere = true;
        for c in rest {
            if !shift_equivalent_to_any(&b, &parts.bases(&c.point))? {
                everywhere = false;
                break;
            }
        }
        if everywhere {
            out.push(b);
        }
    }
    Ok(out)
}

/// Bound `s_i` on the `i`-th dispersion of the aperiodic denominator part
/// of any rational solution.
pub fn coordinate_dispersion_bound(e: &Plde, i: usize, refined: bool) -> Result<ExtInt> {
    let parts = parts_for(e, refined)?;
    coordinate_bound_with(e, &parts, i)
}

fn parts_for(e: &Plde, refined: bool) -> Result<AperiodicParts> {
    let parts = AperiodicParts::compute(e)?;
    if !refined {
        return Ok(parts);
    }
    let filter = must_contain_with(&parts, &hull::corner_points(&e.support))?;
    parts.restricted(&filter)
}

fn coordinate_bound_with(e: &Plde, parts: &AperiodicParts, i: usize) -> Result<ExtInt> {
    let r = e.dim();
    if i >= r {
        return Err(Error::Coordinate { index: i, nvars: r });
    }
    let pts = e.support.points();
    let lo = pts.iter().map(|p| p.0[i]).min().expect("nonempty support");
    let hi = pts.iter().map(|p| p.0[i]).max().expect("nonempty support");
    let k = hi - lo;
    let a: Vec<&ShiftVector> = pts.iter().filter(|p| p.0[i] == lo).collect();
    let b: Vec<&ShiftVector> = pts.iter().filter(|p| p.0[i] == hi).collect();
    let back = ShiftVector::unit(r, i).scale(-k);
    let pairs: Vec<(&ShiftVector, &ShiftVector)> = a.iter().flat_map(|s| b.iter().map(move |t| (*s, *t))).collect();
    let values = par::try_map(&pairs, |(s, t)| {
        let fs = parts.bases(s);
        let ft: Vec<MultiPoly> = parts.bases(t).iter().map(|f| f.shift(&back)).collect();
        Ok::<_, Error>(spread::spread_of_factors(&fs, &ft)?.max_abs_coordinate(i))
    })?;
    Ok(values.into_iter().max().unwrap_or(ExtInt::NegInf))
}

/// `s = max_i s_i`, a bound on the dispersion of the aperiodic
/// denominator part of any rational solution.
pub fn dispersion_bound(e: &Plde, refined: bool) -> Result<ExtInt> {
    let parts = parts_for(e, refined)?;
    dispersion_bound_with(e, &parts)
}

fn dispersion_bound_with(e: &Plde, parts: &AperiodicParts) -> Result<ExtInt> {
    let mut best = ExtInt::NegInf;
    for i in 0..e.dim() {
        best = best.max(coordinate_bound_with(e, parts, i)?);
    }
    Ok(best)
}

/// One factor `N^shift base` raised to `mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundFactor {
    pub shift: ShiftVector,
    pub base: MultiPoly,
    pub mult: u32,
}

/// A denominator bound kept as a product of shifted irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenomBound {
    nvars: usize,
    factors: Vec<BoundFactor>,
    corners: Vec<ShiftVector>,
}

impl DenomBound {
    pub fn one(nvars: usize, corners: Vec<ShiftVector>) -> Self {
        DenomBound { nvars, factors: Vec::new(), corners }
    }

    pub fn factors(&self) -> &[BoundFactor] {
        &self.factors
    }

    /// Corner points the bound was derived from.
    pub fn corners(&self) -> &[ShiftVector] {
        &self.corners
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.base.total_degree().unwrap_or(0) * f.mult).sum()
    }

    /// The product, normalized to a primitive polynomial.
    pub fn expand(&self) -> MultiPoly {
        let n = self.nvars;
        self.factors
            .iter()
            .fold(MultiPoly::one(n), |acc, f| &acc * &f.base.shift(&f.shift).pow(f.mult))
            .normalize()
    }
}

/// Shift-equivalence classes of irreducible aperiodic polynomials: every
/// member is `N^offset` of its class representative.
#[derive(Default)]
struct ClassTable {
    reps: Vec<MultiPoly>,
}

impl ClassTable {
    fn locate(&mut self, b: &MultiPoly) -> Result<(usize, ShiftVector)> {
        for (idx, c) in self.reps.iter().enumerate() {
            let s = spread::spread_irreducible(c, b)?;
            if let Some(coset) = s.cosets().first() {
                // c = N^i b, so b = N^{-i} c
                return Ok((idx, -coset.base()));
            }
        }
        self.reps.push(b.normalize());
        Ok((self.reps.len() - 1, ShiftVector::zero(b.nvars())))
    }
}

type Aligned = BTreeMap<(usize, ShiftVector), u32>;

fn align(table: &mut ClassTable, items: &[(ShiftVector, MultiPoly, u32)]) -> Result<Aligned> {
    let mut out = Aligned::new();
    let mut cache: Vec<(MultiPoly, usize, ShiftVector)> = Vec::new();
    for (w, b, m) in items {
        let (idx, off) = match cache.iter().find(|(c, _, _)| c == b) {
            Some((_, idx, off)) => (*idx, off.clone()),
            None => {
                let (idx, off) = table.locate(b)?;
                cache.push((b.clone(), idx, off.clone()));
                (idx, off)
            }
        };
        *out.entry((idx, w + &off)).or_default() += m;
    }
    Ok(out)
}

fn from_aligned(table: &ClassTable, nvars: usize, aligned: Aligned, corners: Vec<ShiftVector>) -> DenomBound {
    let mut factors: Vec<BoundFactor> = aligned
        .into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|((idx, shift), mult)| BoundFactor { shift, base: table.reps[idx].clone(), mult })
        .collect();
    factors.sort_by(|a, b| crate::factor::canonical_cmp(&a.base, &b.base).then_with(|| a.shift.cmp(&b.shift)));
    DenomBound { nvars, factors, corners }
}

fn corner_items(e: &Plde, parts: &AperiodicParts, c: &CornerData, s: ExtInt) -> Result<Vec<(ShiftVector, MultiPoly, u32)>> {
    let depth = match s {
        ExtInt::NegInf => return Ok(Vec::new()),
        ExtInt::Finite(d) => d.max(0) as u64,
        ExtInt::PosInf => return Err(Error::Contract("dispersion bound is infinite".into())),
    };
    let w = hull::find_structure_set(&e.support, c, depth)?;
    let twice = c.point.scale(2);
    let mut items = Vec::new();
    for x in &w {
        let shift = x - &twice;
        for (b, m) in parts.at(&c.point) {
            items.push((shift.clone(), b.clone(), *m));
        }
    }
    Ok(items)
}

/// `Π_{w ∈ W − 2p} N^w a'_p` for corner `c` and dispersion bound `s`.
pub fn aperiodic_bound_at_corner(e: &Plde, c: &CornerData, s: ExtInt) -> Result<DenomBound> {
    c.validate(&e.support)?;
    let parts = AperiodicParts::compute(e)?;
    let items = corner_items(e, &parts, c, s)?;
    let mut table = ClassTable::default();
    let aligned = align(&mut table, &items)?;
    Ok(from_aligned(&table, e.dim(), aligned, vec![c.point.clone()]))
}

/// gcd of the per-corner bounds over all corners.
pub fn combined_bound(e: &Plde, refined: bool) -> Result<DenomBound> {
    combined_bound_at(e, &hull::corner_points(&e.support), refined)
}

/// gcd of the per-corner bounds over the given corners.
pub fn combined_bound_at(e: &Plde, corners: &[CornerData], refined: bool) -> Result<DenomBound> {
    let r = e.dim();
    let points: Vec<ShiftVector> = corners.iter().map(|c| c.point.clone()).collect();
    for c in corners {
        c.validate(&e.support)?;
    }
    if corners.is_empty() {
        return Err(Error::Contract("no corner points given".into()));
    }
    let parts = AperiodicParts::compute(e)?;

    // a corner coefficient without aperiodic factors forces a trivial bound
    if corners.iter().any(|c| parts.at(&c.point).is_empty()) {
        return Ok(DenomBound::one(r, points));
    }
    // so does a pair of corner coefficients with empty mutual spread
    for (i, a) in corners.iter().enumerate() {
        for b in &corners[i + 1..] {
            if spread::spread_of_factors(&parts.bases(&a.point), &parts.bases(&b.point))?.is_empty() {
                return Ok(DenomBound::one(r, points));
            }
        }
    }

    let s = if refined {
        let filter = must_contain_with(&parts, corners)?;
        dispersion_bound_with(e, &parts.restricted(&filter)?)?
    } else {
        dispersion_bound_with(e, &parts)?
    };
    if s == ExtInt::NegInf {
        return Ok(DenomBound::one(r, points));
    }
    let per_corner = par::try_map(corners, |c| corner_items(e, &parts, c, s))?;
    let mut table = ClassTable::default();
    let mut acc: Option<Aligned> = None;
    for items in &per_corner {
        let aligned = align(&mut table, items)?;
        acc = Some(match acc {
            None => aligned,
            Some(prev) => prev
                .into_iter()
                .filter_map(|(key, m)| aligned.get(&key).map(|&m2| (key, m.min(m2))))
                .collect(),
        });
    }
    Ok(from_aligned(&table, r, acc.unwrap_or_default(), points))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[i64]) -> ShiftVector {
        ShiftVector(v.to_vec())
    }

    fn example_one() -> Plde {
        let t = |terms: &[(i64, &[u32])]| MultiPoly::from_int_terms(2, terms);
        // variables (n, k)
        let a00 = &t(&[(2, &[1, 1]), (1, &[0, 0])]) * &t(&[(6, &[0, 2]), (12, &[0, 1]), (-4, &[2, 0]), (-4, &[1, 0]), (5, &[0, 0])]);
        let a10 = &t(&[(2, &[1, 1]), (4, &[0, 1]), (1, &[0, 0])]) * &t(&[(6, &[0, 2]), (10, &[0, 1]), (4, &[2, 0]), (8, &[1, 0]), (-7, &[0, 0])]);
        let a02 = -&(&t(&[(2, &[1, 1]), (8, &[1, 0]), (1, &[0, 0])]) * &t(&[(6, &[0, 2]), (24, &[0, 1]), (4, &[2, 0]), (-20, &[1, 0]), (-7, &[0, 0])]));
        let a12 = -&(&t(&[(2, &[1, 1]), (4, &[0, 1]), (8, &[1, 0]), (17, &[0, 0])]) * &t(&[(6, &[0, 2]), (22, &[0, 1]), (-4, &[2, 0]), (16, &[1, 0]), (45, &[0, 0])]));
        let coeffs = BTreeMap::from([(sv(&[0, 0]), a00), (sv(&[1, 0]), a10), (sv(&[0, 2]), a02), (sv(&[1, 2]), a12)]);
        Plde::new(coeffs, MultiPoly::zero(2)).unwrap()
    }

    #[test]
    fn example_one_bound() {
        let e = example_one();
        assert_eq!(coordinate_dispersion_bound(&e, 0, false).unwrap(), ExtInt::Finite(1));
        assert_eq!(dispersion_bound(&e, false).unwrap(), ExtInt::Finite(2));
        let b = combined_bound(&e, false).unwrap();
        let shifts: Vec<&ShiftVector> = b.factors().iter().map(|f| &f.shift).collect();
        assert_eq!(shifts, vec![&sv(&[0, 0]), &sv(&[0, 2]), &sv(&[1, 0]), &sv(&[1, 2])]);
        assert!(b.factors().iter().all(|f| f.mult == 1));
        let c = CornerData { point: sv(&[0, 0]), inner: sv(&[1, 1]) };
        let per = aperiodic_bound_at_corner(&e, &c, ExtInt::Finite(4)).unwrap();
        assert_eq!(per.factors().len(), 50);
        let filter = must_contain_filter(&e).unwrap();
        assert_eq!(filter.len(), 1);
        assert_eq!(combined_bound(&e, true).unwrap().factors(), b.factors());
    }

    #[test]
    fn trivial_bounds() {
        let one = MultiPoly::one(2);
        let coeffs = BTreeMap::from([(sv(&[1, 0]), one.clone()), (sv(&[0, 1]), -&one)]);
        let e = Plde::new(coeffs, MultiPoly::zero(2)).unwrap();
        assert_eq!(dispersion_bound(&e, false).unwrap(), ExtInt::NegInf);
        assert!(combined_bound(&e, false).unwrap().is_one());
        assert!(must_contain_filter(&e).unwrap().is_empty());
    }
}
