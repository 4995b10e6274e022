//! Integer points of rational affine-linear systems, and canonical
//! Hermite-normal-form presentations of affine lattice cosets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{Rat, ShiftVector};

/// `base + Z·basis_1 + … + Z·basis_e`, kept in canonical form: the basis is
/// in Hermite normal form with respect to the reversed coordinate order and
/// the base is reduced modulo it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineCoset {
    base: ShiftVector,
    basis: Vec<ShiftVector>,
}

impl AffineCoset {
    pub fn point(p: ShiftVector) -> Self {
        AffineCoset { base: p, basis: Vec::new() }
    }

    /// Canonicalizes the presentation. The basis vectors must be linearly
    /// independent.
    pub fn new(base: ShiftVector, basis: Vec<ShiftVector>) -> Self {
        let r = base.dim();
        let rev = |v: &[BigInt]| -> Vec<BigInt> { v.iter().rev().cloned().collect() };
        let rows: Vec<Vec<BigInt>> = basis.iter().map(|v| rev(&to_big(&v.0))).collect();
        let h = row_hnf(rows, r);
        let mut b = rev(&to_big(&base.0));
        for row in &h {
            let (c, pivot) = row.iter().enumerate().find(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).unwrap();
            let q = b[c].div_floor(&pivot);
            for (bj, hj) in b.iter_mut().zip(row) {
                *bj -= &q * hj;
            }
        }
        let base = ShiftVector(rev(&b).iter().map(|x| x.to_i64().expect("coordinate fits i64")).collect());
        let basis = h
            .iter()
            .map(|row| {
                let mut v: Vec<i64> = rev(row).iter().map(|x| x.to_i64().expect("coordinate fits i64")).collect();
                if v.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
                ShiftVector(v)
            })
            .collect();
        AffineCoset { base, basis }
    }

    pub fn base(&self) -> &ShiftVector {
        &self.base
    }

    pub fn basis(&self) -> &[ShiftVector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_point(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &ShiftVector) -> bool {
        let d = v - &self.base;
        if self.basis.is_empty() {
            return d.is_zero();
        }
        in_lattice(&self.basis, &d)
    }

    pub fn translate(&self, by: &ShiftVector) -> AffineCoset {
        AffineCoset::new(&self.base + by, self.basis.clone())
    }

    pub fn negate(&self) -> AffineCoset {
        AffineCoset::new(-&self.base, self.basis.clone())
    }

    /// Whether coordinate `k` is unbounded on the coset.
    pub fn unbounded_in(&self, k: usize) -> bool {
        self.basis.iter().any(|b| b.0[k] != 0)
    }
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Row Hermite normal form of linearly independent integer rows: pivots
/// (first nonzero entries) positive and strictly increasing, entries above
/// each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub(crate) fn row_hnf(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut col = 0;
    while col < ncols && !rows.is_empty() {
        // gcd-combine all rows on this column into one
        let mut pivot_row: Option<Vec<BigInt>> = None;
        let mut rest = Vec::new();
        for row in rows.drain(..) {
            if row[col].is_zero() {
                rest.push(row);
                continue;
            }
            match pivot_row.take() {
                None => pivot_row = Some(row),
                Some(p) => {
                    let ext = p[col].extended_gcd(&row[col]);
                    let (g, s, t) = (ext.gcd, ext.x, ext.y);
                    let a = &p[col] / &g;
                    let b = &row[col] / &g;
                    let new_p: Vec<BigInt> = p.iter().zip(&row).map(|(x, y)| &s * x + &t * y).collect();
                    let new_r: Vec<BigInt> = p.iter().zip(&row).map(|(x, y)| &b * x - &a * y).collect();
                    pivot_row = Some(new_p);
                    if new_r.iter().any(|x| !x.is_zero()) {
                        rest.push(new_r);
                    }
                }
            }
        }
        rows = rest;
        if let Some(mut p) = pivot_row {
            if p[col].is_negative() {
                p.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push(p);
        }
        col += 1;
    }
    // reduce entries above pivots
    for i in 0..out.len() {
        let c = out[i].iter().position(|x| !x.is_zero()).unwrap();
        let pivot = out[i][c].clone();
        for j in 0..i {
            let q = out[j][c].div_floor(&pivot);
            if !q.is_zero() {
                let row_i = out[i].clone();
                for (x, y) in out[j].iter_mut().zip(&row_i) {
                    *x -= &q * y;
                }
            }
        }
    }
    out
}

fn in_lattice(basis: &[ShiftVector], d: &ShiftVector) -> bool {
    // basis is canonical (reversed HNF), so peel off one pivot at a time
    let r = d.dim();
    let rows: Vec<Vec<BigInt>> = basis.iter().map(|v| to_big(&v.0).into_iter().rev().collect()).collect();
    let h = row_hnf(rows, r);
    let mut rem: Vec<BigInt> = to_big(&d.0).into_iter().rev().collect();
    for row in &h {
        let c = row.iter().position(|x| !x.is_zero()).unwrap();
        for x in rem.iter().take(c) {
            if !x.is_zero() {
                return false;
            }
        }
        let (q, m) = rem[c].div_rem(&row[c]);
        if !m.is_zero() {
            return false;
        }
        for (x, y) in rem.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    rem.iter().all(Zero::is_zero)
}

/// Integer solutions of `Σ_j a[i][j]·x_j = b[i]`, or `None` when there are
/// none. Rows are rational; the result has a primitive canonical basis.
pub fn integer_affine_solutions(a: &[Vec<Rat>], b: &[Rat], r: usize) -> Option<AffineCoset> {
    // integer rows
    let mut m: Vec<Vec<BigInt>> = Vec::new();
    let mut rhs: Vec<BigInt> = Vec::new();
    for (row, bi) in a.iter().zip(b) {
        let den = row.iter().chain(std::iter::once(bi)).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = Rat::from_integer(den);
        m.push(row.iter().map(|c| (c * &scale).to_integer()).collect());
        rhs.push((bi * &scale).to_integer());
    }
    // column operations: m·u = lower echelon, tracked in u
    let mut u: Vec<Vec<BigInt>> = (0..r).map(|i| (0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, column)
    let mut next_col = 0;
    for i in 0..m.len() {
        if next_col == r {
            break;
        }
        // fold columns next_col..r of row i into next_col by gcd column operations
        for c in next_col + 1..r {
            if m[i][c].is_zero() {
                continue;
            }
            if m[i][next_col].is_zero() {
                swap_cols(&mut m, &mut u, next_col, c);
                continue;
            }
            let ext = m[i][next_col].extended_gcd(&m[i][c]);
            let (g, s, t) = (ext.gcd, ext.x, ext.y);
            let alpha = &m[i][next_col] / &g;
            let beta = &m[i][c] / &g;
            // [col_p, col_c] <- [s·col_p + t·col_c, −beta·col_p + alpha·col_c]
            combine_cols(&mut m, &mut u, next_col, c, &s, &t, &beta, &alpha);
        }
        if !m[i][next_col].is_zero() {
            pivots.push((i, next_col));
            next_col += 1;
        }
    }
    // forward substitution for z (m·z = rhs)
    let mut z: Vec<BigInt> = vec![BigInt::zero(); r];
    let rank = next_col;
    let mut pivot_iter = pivots.iter().peekable();
    for i in 0..m.len() {
        let acc: BigInt = (0..rank).filter(|&c| pivots.iter().any(|&(pi, pc)| pc == c && pi < i)).map(|c| &m[i][c] * &z[c]).sum();
        match pivot_iter.peek() {
            Some(&&(pi, pc)) if pi == i => {
                let (q, rem) = (&rhs[i] - &acc).div_rem(&m[i][pc]);
                if !rem.is_zero() {
                    return None;
                }
                z[pc] = q;
                pivot_iter.next();
            }
            _ => {
                if acc != rhs[i] {
                    return None;
                }
            }
        }
    }
    let base: Vec<i64> = (0..r)
        .map(|row| (0..rank).map(|c| &u[row][c] * &z[c]).sum::<BigInt>().to_i64().expect("fits i64"))
        .collect();
    let basis: Vec<ShiftVector> = (rank..r)
        .map(|c| ShiftVector((0..r).map(|row| u[row][c].to_i64().expect("fits i64")).collect()))
        .collect();
    Some(AffineCoset::new(ShiftVector(base), basis))
}

fn swap_cols(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut().chain(u.iter_mut()) {
        row.swap(a, b);
    }
}

#[allow(clippy::too_many_arguments)]
fn combine_cols(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], p: usize, c: usize, s: &BigInt, t: &BigInt, beta: &BigInt, alpha: &BigInt) {
    for row in m.iter_mut().chain(u.iter_mut()) {
        let x = row[p].clone();
        let y = row[c].clone();
        row[p] = s * &x + t * &y;
        row[c] = alpha * &y - beta * &x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn sv(v: &[i64]) -> ShiftVector {
        ShiftVector(v.to_vec())
    }

    #[test]
    fn line_i_plus_j_eq_1() {
        let c = integer_affine_solutions(&[vec![rat(1), rat(1)]], &[rat(1)], 2).unwrap();
        assert_eq!(c.base(), &sv(&[1, 0]));
        assert_eq!(c.basis(), &[sv(&[1, -1])]);
    }

    #[test]
    fn determined_and_inconsistent() {
        let c = integer_affine_solutions(&[vec![rat(1), rat(0)], vec![rat(0), rat(1)]], &[rat(-3), rat(2)], 2).unwrap();
        assert_eq!(c, AffineCoset::point(sv(&[-3, 2])));
        assert!(integer_affine_solutions(&[vec![rat(2)]], &[rat(1)], 1).is_none());
        let half = Rat::new(1.into(), 2.into());
        let c = integer_affine_solutions(&[vec![half.clone(), half]], &[rat(3)], 2).unwrap();
        assert!(c.contains(&sv(&[6, 0])) && c.contains(&sv(&[0, 6])) && !c.contains(&sv(&[1, 0])));
        // contradictory dependent rows
        assert!(integer_affine_solutions(&[vec![rat(1), rat(1)], vec![rat(2), rat(2)]], &[rat(1), rat(3)], 2).is_none());
    }

    #[test]
    fn canonical_presentation() {
        let a = AffineCoset::new(sv(&[5, -4]), vec![sv(&[-2, 2])]);
        let b = AffineCoset::new(sv(&[1, 0]), vec![sv(&[1, -1])]);
        assert_ne!(a, b); // 5-4 = 1 but basis (2,-2) is coarser
        let c = AffineCoset::new(sv(&[3, -2]), vec![sv(&[3, -3]), sv(&[1, -1])]);
        assert_eq!(c, b);
        assert_eq!(AffineCoset::new(sv(&[4, 4]), vec![sv(&[-1, -1])]), AffineCoset::new(sv(&[0, 0]), vec![sv(&[1, 1])]));
        assert!(a.contains(&sv(&[1, 0])) && !a.contains(&sv(&[2, -1])));
    }
}
