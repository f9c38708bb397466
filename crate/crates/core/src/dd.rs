//! Double description method: extreme rays of a pointed polyhedral cone
//! `{x : a_i·x ≥ 0}` in exact arithmetic, and vertex enumeration of bounded
//! polytopes through homogenization.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn empty(n: usize) -> Self {
        RowSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &RowSet) -> RowSet {
        RowSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains_all(&self, other: &RowSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    dir: Vector,
    zeros: RowSet,
}

/// Extreme rays of `{x : row·x ≥ 0 for every row}`, each scaled to a
/// primitive integer vector. Errors if the cone contains a line.
pub fn extreme_rays(rows: &[Vector], dim: usize) -> Result<Vec<Vector>> {
    for r in rows {
        crate::error::check_dim(dim, r.dim())?;
    }
    // Greedily pick `dim` independent rows to seed the iteration.
    let mut basis_idx = Vec::with_capacity(dim);
    let mut basis_rows: Vec<Vector> = Vec::with_capacity(dim);
    for (i, r) in rows.iter().enumerate() {
        if basis_idx.len() == dim {
            break;
        }
        basis_rows.push(r.clone());
        if linalg::rank(&basis_rows) == basis_rows.len() {
            basis_idx.push(i);
        } else {
            basis_rows.pop();
        }
    }
    if basis_idx.len() < dim {
        return Err(Error::Geometry(
            "cone has a nontrivial lineality space (unbounded region)".into(),
        ));
    }

    let n_rows = rows.len();
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[j] = Rational::from_integer(1.into());
        let dir = linalg::solve(&basis_rows, &e).expect("independent rows");
        let mut zeros = RowSet::empty(n_rows);
        for (k, &bi) in basis_idx.iter().enumerate() {
            if k != j {
                zeros.insert(bi);
            }
        }
        rays.push(Ray {
            dir: dir.primitive(),
            zeros,
        });
    }

    for (i, row) in rows.iter().enumerate() {
        if basis_idx.contains(&i) {
            continue;
        }
        let vals: Vec<Rational> = rays.iter().map(|r| row.dot(&r.dir)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();

        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.intersect(&rays[q].zeros);
                if common.len() + 2 < dim {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(k, r)| {
                    k == p || k == q || !r.zeros.contains_all(&common)
                });
                if !adjacent {
                    continue;
                }
                let dir = &rays[q].dir.scale(&vals[p]) - &rays[p].dir.scale(&vals[q]);
                let mut zeros = common;
                zeros.insert(i);
                fresh.push(Ray {
                    dir: dir.primitive(),
                    zeros,
                });
            }
        }

        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                r.zeros.insert(i);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }

    let mut out: Vec<Vector> = rays.into_iter().map(|r| r.dir).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Vertices of the bounded polytope `{x : row·x ≤ bound}`. An empty
/// polytope yields an empty list; an unbounded one is an error.
pub fn polytope_vertices(constraints: &[(Vector, Rational)], dim: usize) -> Result<Vec<Vector>> {
    let mut rows = Vec::with_capacity(constraints.len() + 1);
    let mut lead = vec![Rational::from_integer(1.into())];
    lead.extend(std::iter::repeat_n(Rational::zero(), dim));
    rows.push(Vector::new(lead));
    for (a, b) in constraints {
        crate::error::check_dim(dim, a.dim())?;
        let mut r = vec![b.clone()];
        r.extend(a.iter().map(|x| -x.clone()));
        rows.push(Vector::new(r));
    }
    let rays = extreme_rays(&rows, dim + 1)?;
    let mut verts = Vec::with_capacity(rays.len());
    for r in rays {
        if r[0].is_zero() {
            return Err(Error::Geometry("polyhedron is unbounded".into()));
        }
        let inv = r[0].recip();
        verts.push(Vector::new(r.iter().skip(1).map(|x| x * &inv).collect()));
    }
    verts.sort();
    verts.dedup();
    Ok(verts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn cube_rows(n: usize) -> Vec<(Vector, Rational)> {
        (0..n)
            .flat_map(|k| {
                let e = Vector::unit(n, k);
                [(e.clone(), int(1)), (-&e, int(1))]
            })
            .collect()
    }

    #[test]
    fn cube_vertices() {
        let v = polytope_vertices(&cube_rows(3), 3).unwrap();
        assert_eq!(v.len(), 8);
        assert!(v.iter().all(|p| p.iter().all(|c| c.abs() == int(1))));
    }

    #[test]
    fn triangle_with_redundant_row() {
        let rows = vec![
            (Vector::from_ints(&[-1, 0]), int(0)),
            (Vector::from_ints(&[0, -1]), int(0)),
            (Vector::from_ints(&[1, 1]), int(1)),
            (Vector::from_ints(&[1, 1]), int(2)),
        ];
        let v = polytope_vertices(&rows, 2).unwrap();
        assert_eq!(
            v,
            vec![
                Vector::from_ints(&[0, 0]),
                Vector::from_ints(&[0, 1]),
                Vector::from_ints(&[1, 0])
            ]
        );
    }

    #[test]
    fn equality_as_two_inequalities() {
        // x + y = 1 inside the unit square: the segment (1,0)-(0,1).
        let mut rows = cube_rows(2);
        rows.push((Vector::from_ints(&[1, 1]), int(1)));
        rows.push((Vector::from_ints(&[-1, -1]), int(-1)));
        let v = polytope_vertices(&rows, 2).unwrap();
        assert_eq!(v, vec![Vector::from_ints(&[0, 1]), Vector::from_ints(&[1, 0])]);
    }

    #[test]
    fn empty_and_unbounded() {
        let mut rows = cube_rows(2);
        rows.push((Vector::from_ints(&[1, 0]), rat(-3, 2)));
        assert!(polytope_vertices(&rows, 2).unwrap().is_empty());
        let half = vec![(Vector::from_ints(&[1, 0]), int(1))];
        assert!(polytope_vertices(&half, 2).is_err());
    }
}
