//! Exact linear feasibility by the two-phase simplex method (phase one only).

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Whether `A x = b` has a solution with `x ≥ 0`, decided exactly.
///
/// Phase-one simplex on artificial variables with Bland's rule, so the
/// iteration terminates without cycling.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<BigRational> = a[i].iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { BigRational::from_integer(1.into()) } else { BigRational::zero() }));
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, r)) => ratio < *r || (ratio == *r && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else { break };
        let p = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, y) in obj.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        basis[r] = enter;
    }
    obj[width - 1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn segment_membership() {
        // Convex combinations of 0 and 2 on a line.
        let a = vec![vec![r(0), r(2)], vec![r(1), r(1)]];
        assert!(feasible(&a, &[r(1), r(1)]));
        assert!(feasible(&a, &[r(2), r(1)]));
        assert!(!feasible(&a, &[r(3), r(1)]));
        assert!(!feasible(&a, &[r(-1), r(1)]));
    }

    #[test]
    fn degenerate_systems() {
        let a = vec![vec![r(1), r(1), r(1)], vec![r(1), r(1), r(1)]];
        assert!(feasible(&a, &[r(1), r(1)]));
        assert!(!feasible(&a, &[r(1), r(2)]));
    }
}
