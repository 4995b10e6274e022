//! Buchberger's algorithm over Q in grevlex, with Gebauer–Möller pair
//! discarding. Meant for the tiny systems produced by shift ansätze.

use num_traits::Zero;

use crate::poly::{Monomial, MultiPoly, Rat};

/// Full normal form of `p` modulo `basis` (all terms reduced).
pub fn normal_form(p: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let n = p.nvars();
    let mut rem = MultiPoly::zero(n);
    let mut work = p.clone();
    'outer: while let Some((m, c)) = work.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            let (lm, lc) = g.leading_term().unwrap();
            if lm.divides(&m) {
                let q = lm.quotient_of(&m);
                work = &work - &g.mul_monomial(&q, &(&c / lc));
                continue 'outer;
            }
        }
        let t = MultiPoly::from_terms(n, [(m, c)]);
        work = &work - &t;
        rem = &rem + &t;
    }
    rem
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_monomial(&fm.quotient_of(&l), &fc.recip());
    let b = g.mul_monomial(&gm.quotient_of(&l), &gc.recip());
    &a - &b
}

fn lm(p: &MultiPoly) -> &Monomial {
    p.leading_monomial().expect("nonzero basis element")
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced Gröbner basis (monic, sorted by leading monomial). The unit
/// ideal yields `[1]`; the zero ideal yields `[]`.
pub fn groebner_basis(generators: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let mut gens: Vec<MultiPoly> = generators.iter().filter(|g| !g.is_zero()).map(MultiPoly::monic).collect();
    gens.sort_by(|a, b| lm(a).cmp(lm(b)));
    for g in gens {
        let h = normal_form(&g, &active_elems(&basis, &active));
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![MultiPoly::one(g.nvars())];
        }
        basis.push(h.monic());
        active.push(true);
        update(&basis, &mut active, &mut pairs, basis.len() - 1);
    }

    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| lm(&basis[a.0]).lcm(lm(&basis[a.1])).cmp(&lm(&basis[b.0]).lcm(lm(&basis[b.1]))))
            .unwrap();
        let (i, j) = pairs.swap_remove(idx);
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = normal_form(&s, &active_elems(&basis, &active));
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![MultiPoly::one(h.nvars())];
        }
        basis.push(h.monic());
        active.push(true);
        update(&basis, &mut active, &mut pairs, basis.len() - 1);
    }

    reduce_basis(active_elems(&basis, &active))
}

fn active_elems(basis: &[MultiPoly], active: &[bool]) -> Vec<MultiPoly> {
    basis.iter().zip(active).filter(|(_, a)| **a).map(|(b, _)| b.clone()).collect()
}

/// Gebauer–Möller update after appending `basis[h]`.
fn update(basis: &[MultiPoly], active: &mut [bool], pairs: &mut Vec<(usize, usize)>, h: usize) {
    let lh = lm(&basis[h]).clone();
    let candidates: Vec<usize> = (0..h).filter(|&g| active[g]).collect();

    // chain criterion among the new pairs
    let mut kept: Vec<usize> = Vec::new();
    for (pos, &g) in candidates.iter().enumerate() {
        let lcm_gh = lm(&basis[g]).lcm(&lh);
        if coprime(lm(&basis[g]), &lh) {
            kept.push(g);
            continue;
        }
        let dominated = candidates.iter().enumerate().any(|(pos2, &g2)| {
            if g2 == g {
                return false;
            }
            let l2 = lm(&basis[g2]).lcm(&lh);
            l2.divides(&lcm_gh) && (l2 != lcm_gh || pos2 < pos)
        });
        if !dominated {
            kept.push(g);
        }
    }
    // product criterion
    let new_pairs: Vec<(usize, usize)> = kept.into_iter().filter(|&g| !coprime(lm(&basis[g]), &lh)).map(|g| (g, h)).collect();

    pairs.retain(|&(a, b)| {
        let l = lm(&basis[a]).lcm(lm(&basis[b]));
        !(lh.divides(&l) && lm(&basis[a]).lcm(&lh) != l && lm(&basis[b]).lcm(&lh) != l)
    });
    pairs.extend(new_pairs);

    for g in 0..h {
        if active[g] && lh.divides(lm(&basis[g])) {
            active[g] = false;
            pairs.retain(|&(a, b)| a != g && b != g);
        }
    }
}

fn reduce_basis(mut g: Vec<MultiPoly>) -> Vec<MultiPoly> {
    // drop elements whose leading monomial is divisible by another's
    g.sort_by(|a, b| lm(a).cmp(lm(b)));
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for p in g {
        if !minimal.iter().any(|q| lm(q).divides(lm(&p))) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        let lead = minimal[i].leading_term().map(|(m, c)| MultiPoly::from_terms(minimal[i].nvars(), [(m.clone(), c.clone())])).unwrap();
        let tail = &minimal[i] - &lead;
        let r = &lead + &normal_form(&tail, &others);
        out.push(r.monic());
    }
    out.sort_by(|a, b| lm(a).cmp(lm(b)));
    out
}

/// True when every element has total degree at most one.
pub fn is_linear(basis: &[MultiPoly]) -> bool {
    basis.iter().all(|g| g.total_degree().map(|d| d <= 1).unwrap_or(true))
}

/// Zero-dimensional check: each variable has a pure power as a leading monomial.
pub fn is_zero_dimensional(basis: &[MultiPoly]) -> bool {
    let Some(first) = basis.first() else { return false };
    (0..first.nvars()).all(|v| {
        basis.iter().any(|g| {
            let m = lm(g);
            m.0.iter().enumerate().all(|(j, &e)| (j == v) == (e > 0))
        })
    })
}

/// Minimal polynomial of variable `var` modulo a zero-dimensional ideal,
/// as coefficients (little-endian), found by linear dependence of the
/// normal forms of `1, x, x^2, …`.
pub fn eliminant(basis: &[MultiPoly], var: usize) -> Option<Vec<Rat>> {
    let n = basis.first()?.nvars();
    let x = MultiPoly::var(n, var);
    // rows: normal forms as sparse vectors; track combination coefficients
    let mut reduced: Vec<(MultiPoly, Vec<Rat>)> = Vec::new();
    let mut power = MultiPoly::one(n);
    for k in 0..=64usize {
        let nf = normal_form(&power, basis);
        let mut combo = vec![Rat::zero(); k + 1];
        combo[k] = Rat::from_integer(1.into());
        let mut v = nf;
        // eliminate against previous pivots (pivot = leading monomial)
        loop {
            let Some(lead) = v.leading_monomial().cloned() else { break };
            let Some((row, rc)) = reduced.iter().find(|(r, _)| r.leading_monomial() == Some(&lead)) else { break };
            let f = v.coeff(&lead) / row.coeff(&lead);
            v = &v - &row.scale(&f);
            for (i, c) in rc.iter().enumerate() {
                combo[i] -= &f * c;
            }
        }
        if v.is_zero() {
            return Some(combo);
        }
        reduced.push((v, combo));
        power = normal_form(&(&power * &x), basis);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(terms: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(2, terms)
    }

    #[test]
    fn unit_ideal() {
        // i + 2j ... contradiction: {-i+2j, 1 } from n+k vs n+2k
        let g = groebner_basis(&[p2(&[(-1, &[1, 0]), (2, &[0, 1])]), p2(&[(-1, &[0, 0])])]);
        assert_eq!(g, vec![MultiPoly::one(2)]);
    }

    #[test]
    fn linear_factor_absorbs() {
        // (i+j-1)(3i+3j-10), 6(i+j-1)
        let l = p2(&[(1, &[1, 0]), (1, &[0, 1]), (-1, &[0, 0])]);
        let m = p2(&[(3, &[1, 0]), (3, &[0, 1]), (-10, &[0, 0])]);
        let g = groebner_basis(&[&l * &m, l.scale(&crate::poly::rat(6)), l.scale(&crate::poly::rat(-6))]);
        assert_eq!(g, vec![l]);
        assert!(is_linear(&g));
    }

    #[test]
    fn circle_and_line() {
        // x^2 + y^2 - 1, x - y  ->  reduced basis {x - y, y^2 - 1/2}
        let c = p2(&[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])]);
        let l = p2(&[(1, &[1, 0]), (-1, &[0, 1])]);
        let g = groebner_basis(&[c, l.clone()]);
        assert_eq!(g.len(), 2);
        assert!(is_zero_dimensional(&g));
        let e = eliminant(&g, 0).unwrap();
        assert_eq!(e.len(), 3);
        assert!(e[1].is_zero());
        assert_eq!(&e[0] / &e[2], Rat::new((-1).into(), 2.into()));
    }
}
