//! Dense linear algebra over an exact field.

use crate::scalar::ExactField;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<K: ExactField>(rows: &mut [Vec<K>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().unwrap();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * pv.clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// One solution of `A·z = b`, with free variables set to zero.
pub fn solve<K: ExactField>(a: &[Vec<K>], b: &[K]) -> Option<Vec<K>> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<K>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut z = vec![K::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        z[c] = aug[r][n].clone();
    }
    Some(z)
}

/// Basis of the right null space of `A` (`ncols` unknowns).
pub fn nullspace<K: ExactField>(a: &[Vec<K>], ncols: usize) -> Vec<Vec<K>> {
    let mut m: Vec<Vec<K>> = a.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![K::zero(); ncols];
            v[f] = K::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn rank<K: ExactField>(a: &[Vec<K>], ncols: usize) -> usize {
    let mut m = a.to_vec();
    rref(&mut m, ncols).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as G;

    fn g(n: i64) -> G {
        G::int(n)
    }

    #[test]
    fn solve_and_nullspace() {
        let a = vec![vec![g(1), g(2)], vec![g(2), g(4)]];
        assert_eq!(solve(&a, &[g(3), g(6)]), Some(vec![g(3), g(0)]));
        assert_eq!(solve(&a, &[g(3), g(7)]), None);
        let ns = nullspace(&a, 2);
        assert_eq!(ns, vec![vec![g(-2), g(1)]]);
        assert_eq!(rank(&a, 2), 1);
    }
}
