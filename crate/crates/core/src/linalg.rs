//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::{Rational, Vector};

/// Reduced row echelon form. Returns the reduced nonzero rows and the pivot
/// column of each.
pub fn rref(rows: &[Vector]) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let ncols = rows.first().map_or(0, Vector::dim);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m.into_iter().map(Vector::new).collect(), pivots)
}

pub fn rank(rows: &[Vector]) -> usize {
    rref(rows).1.len()
}

/// Dimension of the affine hull of `points` (−1 encoded as `None` for the
/// empty set).
pub fn affine_dim(points: &[&Vector]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vector> = rest.iter().map(|p| *p - *first).collect();
    Some(rank(&diffs))
}

pub fn determinant(rows: &[Vector]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (j, pc) in pivot_row.iter().enumerate().skip(c) {
                row[j] -= &f * pc;
            }
        }
    }
    det
}

/// Solves the square system `A x = b`; `None` if `A` is singular.
pub fn solve(a: &[Vector], b: &[Rational]) -> Option<Vector> {
    let n = a.len();
    let aug: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.concat(&Vector::new(vec![bi.clone()])))
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn rank_and_rref() {
        let rows = vec![
            Vector::from_ints(&[1, 2, 3]),
            Vector::from_ints(&[2, 4, 6]),
            Vector::from_ints(&[0, 1, 1]),
        ];
        assert_eq!(rank(&rows), 2);
        let (red, piv) = rref(&rows);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(red[0], Vector::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn determinant_and_solve() {
        let a = vec![Vector::from_ints(&[2, 1]), Vector::from_ints(&[1, 3])];
        assert_eq!(determinant(&a), int(5));
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, Vector::new(vec![rat(4, 5), rat(7, 5)]));
        let sing = vec![Vector::from_ints(&[1, 1]), Vector::from_ints(&[2, 2])];
        assert!(solve(&sing, &[int(1), int(2)]).is_none());
        assert_eq!(determinant(&sing), int(0));
    }

    #[test]
    fn affine_dimension() {
        let p = [
            Vector::from_ints(&[1, 1]),
            Vector::from_ints(&[2, 2]),
            Vector::from_ints(&[3, 3]),
        ];
        let refs: Vec<&Vector> = p.iter().collect();
        assert_eq!(affine_dim(&refs), Some(1));
        assert_eq!(affine_dim(&[]), None);
    }
}
