//! Dense-tableau primal simplex over Q with Bland's rule, for problems
//! `max c·x  s.t.  A x ≤ b, x ≥ 0` with `b ≥ 0` (the origin is feasible).

use num_traits::{Signed, Zero};

use crate::poly::Rat;

/// Optimal value and solution, or `None` when unbounded.
pub fn maximize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Option<(Rat, Vec<Rat>)> {
    let m = a.len();
    let n = c.len();
    debug_assert!(b.iter().all(|x| !x.is_negative()));
    // columns: n structural, m slack, then rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row = vec![Rat::zero(); width];
            row[..n].clone_from_slice(&a[i]);
            row[n + i] = Rat::from_integer(1.into());
            row[width - 1] = b[i].clone();
            row
        })
        .collect();
    // objective row holds reduced costs −c
    let mut obj: Vec<Rat> = vec![Rat::zero(); width];
    for j in 0..n {
        obj[j] = -c[j].clone();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else { break };
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (row, _) = leave?;
        let piv = t[row][enter].clone();
        t[row].iter_mut().for_each(|x| *x /= &piv);
        let prow = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != row && !r[enter].is_zero() {
                let f = r[enter].clone();
                r.iter_mut().zip(&prow).for_each(|(x, y)| *x -= &f * y);
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            obj.iter_mut().zip(&prow).for_each(|(x, y)| *x -= &f * y);
        }
        basis[row] = enter;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some((obj[width - 1].clone(), x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn small_lp() {
        // max 3x + 2y, x + y ≤ 4, x + 3y ≤ 6, x ≤ 3
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(3)], vec![rat(1), rat(0)]];
        let (v, x) = maximize(&a, &[rat(4), rat(6), rat(3)], &[rat(3), rat(2)]).unwrap();
        assert_eq!(v, rat(11));
        assert_eq!(x, vec![rat(3), rat(1)]);
        assert!(maximize(&[vec![rat(-1)]], &[rat(0)], &[rat(1)]).is_none());
    }
}
