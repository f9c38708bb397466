//! Exact polytopes: origin-symmetric unit balls with paired V/H
//! representations, and general (possibly lower-dimensional) polytopes used
//! for faces, sections and difference bodies.

mod format;
mod general;

pub use format::{emit, parse, Representation};
pub use general::GeneralPolytope;

use std::collections::BTreeSet;

use num_traits::{One, Signed};

use crate::dd;
use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::rational::{Rational, Vector};

/// A full-dimensional, origin-symmetric polytope.
///
/// Facet functionals are scaled so every facet reads `d·x ≤ 1`; the set of
/// functionals is exactly the vertex set of the polar body. Both lists are
/// kept sorted, which makes structural equality polytope equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricPolytope {
    dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Vector>,
}

/// A facet of a symmetric polytope together with its supporting functional.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub functional: Vector,
    pub vertices: Vec<Vector>,
}

impl Facet {
    pub fn as_polytope(&self) -> GeneralPolytope {
        GeneralPolytope::from_extreme_points(self.functional.dim(), self.vertices.clone())
    }
}

fn check_symmetric(points: &BTreeSet<Vector>) -> Result<()> {
    for p in points {
        if !points.contains(&-p) {
            return Err(Error::Symmetry(p.clone()));
        }
    }
    Ok(())
}

fn dedup_points(dim: usize, points: &[Vector]) -> Result<BTreeSet<Vector>> {
    if points.is_empty() {
        return Err(Error::Geometry("empty point set".into()));
    }
    let mut set = BTreeSet::new();
    for p in points {
        check_dim(dim, p.dim())?;
        set.insert(p.clone());
    }
    Ok(set)
}

impl SymmetricPolytope {
    /// Builds the ball spanned by `points`.
    ///
    /// Points strictly inside the hull are dropped. A point on the boundary
    /// that is not a vertex is rejected, since it signals a degenerate
    /// (collinear) configuration rather than a genuine vertex list.
    pub fn from_vertices(dim: usize, points: &[Vector]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Geometry("dimension must be positive".into()));
        }
        let set = dedup_points(dim, points)?;
        check_symmetric(&set)?;
        let pts: Vec<Vector> = set.into_iter().collect();
        if linalg::rank(&pts) < dim {
            return Err(Error::Geometry(
                "points are not full-dimensional; origin is not interior".into(),
            ));
        }
        let polar_rows: Vec<(Vector, Rational)> =
            pts.iter().map(|p| (p.clone(), Rational::one())).collect();
        let facets = dd::polytope_vertices(&polar_rows, dim)?;

        let mut vertices = Vec::new();
        for p in pts {
            let tight: Vec<Vector> = facets
                .iter()
                .filter(|f| f.dot(&p).is_one())
                .cloned()
                .collect();
            if tight.is_empty() {
                continue;
            }
            if linalg::rank(&tight) < dim {
                return Err(Error::Geometry(format!(
                    "boundary point {p} is not a vertex (collinear configuration)"
                )));
            }
            vertices.push(p);
        }
        Ok(SymmetricPolytope {
            dim,
            vertices,
            facets,
        })
    }

    /// Builds the ball `{x : d·x ≤ 1 for every row d}`. Redundant rows are
    /// discarded.
    pub fn from_halfspaces(dim: usize, rows: &[Vector]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Geometry("dimension must be positive".into()));
        }
        let set = dedup_points(dim, rows)?;
        let constraints: Vec<(Vector, Rational)> =
            set.iter().map(|d| (d.clone(), Rational::one())).collect();
        let vertices = dd::polytope_vertices(&constraints, dim)?;
        check_symmetric(&set)?;
        let facets: Vec<Vector> = set
            .into_iter()
            .filter(|d| {
                let tight: Vec<Vector> = vertices
                    .iter()
                    .filter(|v| d.dot(v).is_one())
                    .cloned()
                    .collect();
                linalg::rank(&tight) == dim
            })
            .collect();
        Ok(SymmetricPolytope {
            dim,
            vertices,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    /// Facet functionals, i.e. the extreme points of the polar body.
    pub fn facet_functionals(&self) -> &[Vector] {
        &self.facets
    }

    pub fn polar_dual(&self) -> SymmetricPolytope {
        SymmetricPolytope {
            dim: self.dim,
            vertices: self.facets.clone(),
            facets: self.vertices.clone(),
        }
    }

    /// Canonical form: vertices and functionals sorted lexicographically.
    /// Values are always stored canonically, so this is a sorted copy.
    pub fn canonicalize(&self) -> SymmetricPolytope {
        let mut c = self.clone();
        c.vertices.sort();
        c.facets.sort();
        c
    }

    /// Applies the invertible linear map with the given matrix rows.
    pub fn linear_image(&self, matrix: &[Vector]) -> Result<SymmetricPolytope> {
        check_dim(self.dim, matrix.len())?;
        if linalg::rank(matrix) < self.dim {
            return Err(Error::Input("linear map is singular".into()));
        }
        let pts: Vec<Vector> = self
            .vertices
            .iter()
            .map(|v| matrix.iter().map(|row| row.dot(v)).collect())
            .collect();
        SymmetricPolytope::from_vertices(self.dim, &pts)
    }

    /// Vertices on which `functional` equals 1.
    pub fn face_vertices(&self, functional: &Vector) -> Vec<Vector> {
        self.vertices
            .iter()
            .filter(|v| functional.dot(v).is_one())
            .cloned()
            .collect()
    }

    /// One facet per extreme dual point; each facet is followed by its
    /// antipode, and vertex lists are sorted.
    pub fn facets_of(&self) -> Vec<Facet> {
        let mut out = Vec::with_capacity(self.facets.len());
        for d in self.facets.iter().filter(|d| d.is_positive_leading()) {
            for f in [d.clone(), -d] {
                let vertices = self.face_vertices(&f);
                out.push(Facet {
                    functional: f,
                    vertices,
                });
            }
        }
        out
    }

    pub fn facet_for(&self, functional: &Vector) -> Option<Facet> {
        self.facets.binary_search(functional).ok().map(|_| Facet {
            functional: functional.clone(),
            vertices: self.face_vertices(functional),
        })
    }

    fn tight_set(&self, v: &Vector) -> BTreeSet<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.dot(v).is_one())
            .map(|(i, _)| i)
            .collect()
    }

    /// Pairs of vertex indices joined by an edge.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let tight: Vec<BTreeSet<usize>> = self.vertices.iter().map(|v| self.tight_set(v)).collect();
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                let common: BTreeSet<usize> = tight[i].intersection(&tight[j]).copied().collect();
                if common.len() + 1 < self.dim {
                    continue;
                }
                let normals: Vec<Vector> = common.iter().map(|&k| self.facets[k].clone()).collect();
                if linalg::rank(&normals) + 1 != self.dim {
                    continue;
                }
                let blocked = (0..self.vertices.len())
                    .any(|k| k != i && k != j && common.is_subset(&tight[k]));
                if !blocked {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `P ∩ {x : d·x = 0}`.
    pub fn hyperplane_section(&self, d: &Vector) -> Result<GeneralPolytope> {
        check_dim(self.dim, d.dim())?;
        if d.is_zero() {
            return Err(Error::Input("section functional must be nonzero".into()));
        }
        let vals: Vec<Rational> = self.vertices.iter().map(|v| d.dot(v)).collect();
        let mut pts: Vec<Vector> = self
            .vertices
            .iter()
            .zip(&vals)
            .filter(|(_, s)| num_traits::Zero::is_zero(*s))
            .map(|(v, _)| v.clone())
            .collect();
        for (i, j) in self.edges() {
            let (si, sj) = (&vals[i], &vals[j]);
            if (si.is_positive() && sj.is_negative()) || (si.is_negative() && sj.is_positive()) {
                // v_i + t (v_j - v_i) with t = s_i / (s_i - s_j)
                let t = si / (si - sj);
                let dir = &self.vertices[j] - &self.vertices[i];
                pts.push(&self.vertices[i] + &dir.scale(&t));
            }
        }
        GeneralPolytope::from_points(self.dim, &pts)
    }

    pub fn as_general(&self) -> GeneralPolytope {
        GeneralPolytope::from_extreme_points(self.dim, self.vertices.clone())
    }

    /// Structural validation of every representation invariant.
    pub fn check_invariants(&self) -> bool {
        let n = self.dim;
        let vset: BTreeSet<&Vector> = self.vertices.iter().collect();
        let fset: BTreeSet<&Vector> = self.facets.iter().collect();
        let symmetric = self.vertices.iter().all(|v| vset.contains(&-v))
            && self.facets.iter().all(|f| fset.contains(&-f));
        let inside = self
            .vertices
            .iter()
            .all(|v| self.facets.iter().all(|f| f.dot(v) <= Rational::one()));
        let vertices_pinned = self.vertices.iter().all(|v| {
            let tight: Vec<Vector> = self
                .facets
                .iter()
                .filter(|f| f.dot(v).is_one())
                .cloned()
                .collect();
            linalg::rank(&tight) == n
        });
        let facets_spanning = self
            .facets
            .iter()
            .all(|f| linalg::rank(&self.face_vertices(f)) == n);
        symmetric && inside && vertices_pinned && facets_spanning
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn v(c: &[&str]) -> Vector {
        Vector::from_strs(c)
    }

    fn square() -> SymmetricPolytope {
        SymmetricPolytope::from_vertices(
            2,
            &[v(&["1", "1"]), v(&["1", "-1"]), v(&["-1", "1"]), v(&["-1", "-1"])],
        )
        .unwrap()
    }

    fn hex_tilde() -> SymmetricPolytope {
        SymmetricPolytope::from_vertices(
            2,
            &[
                v(&["1", "0"]),
                v(&["-1", "0"]),
                v(&["1/2", "1"]),
                v(&["-1/2", "-1"]),
                v(&["-1/2", "1"]),
                v(&["1/2", "-1"]),
            ],
        )
        .unwrap()
    }

    fn sorted(mut xs: Vec<Vector>) -> Vec<Vector> {
        xs.sort();
        xs
    }

    #[test]
    fn square_from_vertices() {
        let sq = square();
        assert_eq!(
            sq.facet_functionals(),
            &sorted(vec![
                v(&["1", "0"]),
                v(&["-1", "0"]),
                v(&["0", "1"]),
                v(&["0", "-1"])
            ])[..]
        );
        assert!(sq.check_invariants());
    }

    #[test]
    fn hexagon_functionals() {
        // Adjacent vertex pairs solved by hand: d·(1,0)=1, d·(1/2,1)=1 gives
        // d=(1,1/2); the norm max{|a2|, |a1|+|a2|/2} agrees.
        let hex = hex_tilde();
        let expected = sorted(vec![
            v(&["1", "1/2"]),
            v(&["-1", "-1/2"]),
            v(&["1", "-1/2"]),
            v(&["-1", "1/2"]),
            v(&["0", "1"]),
            v(&["0", "-1"]),
        ]);
        assert_eq!(hex.facet_functionals(), &expected[..]);
    }

    #[test]
    fn asymmetric_input_rejected() {
        let err = SymmetricPolytope::from_vertices(
            2,
            &[v(&["1", "0"]), v(&["0", "1"]), v(&["-1", "0"])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Symmetry(_)));
    }

    #[test]
    fn interior_points_dropped_and_collinear_rejected() {
        let mut pts = square().vertices().to_vec();
        pts.push(v(&["1/2", "0"]));
        pts.push(v(&["-1/2", "0"]));
        assert_eq!(SymmetricPolytope::from_vertices(2, &pts).unwrap(), square());

        // The degenerate member of the hexagon family: (1/2,1/2) lies on the
        // edge between (1,0) and (0,1).
        let degenerate = [
            v(&["1", "0"]),
            v(&["-1", "0"]),
            v(&["0", "1"]),
            v(&["0", "-1"]),
            v(&["1/2", "1/2"]),
            v(&["-1/2", "-1/2"]),
        ];
        assert!(matches!(
            SymmetricPolytope::from_vertices(2, &degenerate),
            Err(Error::Geometry(_))
        ));
    }

    #[test]
    fn flat_input_rejected() {
        let pts = [v(&["1", "1"]), v(&["-1", "-1"])];
        assert!(matches!(
            SymmetricPolytope::from_vertices(2, &pts),
            Err(Error::Geometry(_))
        ));
    }

    #[test]
    fn from_halfspaces_examples() {
        let sq = SymmetricPolytope::from_halfspaces(
            2,
            &[v(&["1", "0"]), v(&["-1", "0"]), v(&["0", "1"]), v(&["0", "-1"])],
        )
        .unwrap();
        assert_eq!(sq, square());

        let hex = SymmetricPolytope::from_halfspaces(2, hex_tilde().facet_functionals()).unwrap();
        assert_eq!(hex, hex_tilde());

        assert!(matches!(
            SymmetricPolytope::from_halfspaces(2, &[v(&["1", "0"])]),
            Err(Error::Geometry(_))
        ));
    }

    #[test]
    fn redundant_halfspaces_pruned() {
        let mut rows = square().facet_functionals().to_vec();
        rows.push(v(&["1/2", "1/2"]));
        rows.push(v(&["-1/2", "-1/2"]));
        assert_eq!(SymmetricPolytope::from_halfspaces(2, &rows).unwrap(), square());
    }

    #[test]
    fn polar_dual_examples() {
        let diamond = square().polar_dual();
        assert_eq!(
            diamond.vertices(),
            &sorted(vec![
                v(&["1", "0"]),
                v(&["-1", "0"]),
                v(&["0", "1"]),
                v(&["0", "-1"])
            ])[..]
        );
        let hd = hex_tilde().polar_dual();
        assert_eq!(hd.vertices(), hex_tilde().facet_functionals());
        assert_eq!(hd.polar_dual(), hex_tilde());
        assert!(hd.check_invariants());
    }

    #[test]
    fn facets_come_in_antipodal_pairs() {
        let fs = hex_tilde().facets_of();
        assert_eq!(fs.len(), 6);
        for pair in fs.chunks(2) {
            assert_eq!(pair[1].functional, -&pair[0].functional);
        }
        let top = fs
            .iter()
            .find(|f| f.functional == v(&["0", "1"]))
            .unwrap();
        assert_eq!(top.vertices, vec![v(&["-1/2", "1"]), v(&["1/2", "1"])]);
        assert!(square().facets_of().iter().all(|f| f.vertices.len() == 2));
    }

    #[test]
    fn sections() {
        let s = square().hyperplane_section(&v(&["1", "0"])).unwrap();
        assert_eq!(s.vertices(), &[v(&["0", "-1"]), v(&["0", "1"])]);
        let s = hex_tilde().hyperplane_section(&v(&["0", "1"])).unwrap();
        assert_eq!(s.vertices(), &[v(&["-1", "0"]), v(&["1", "0"])]);
        let s = square()
            .polar_dual()
            .hyperplane_section(&v(&["1", "1"]))
            .unwrap();
        assert_eq!(s.vertices(), &[v(&["-1/2", "1/2"]), v(&["1/2", "-1/2"])]);
        assert!(square().hyperplane_section(&v(&["0", "0"])).is_err());
    }

    #[test]
    fn canonical_form_ignores_input_order() {
        let mut pts = square().vertices().to_vec();
        pts.reverse();
        assert_eq!(SymmetricPolytope::from_vertices(2, &pts).unwrap(), square());
        let h = hex_tilde();
        let mut rot = h.vertices().to_vec();
        rot.rotate_left(2);
        assert_eq!(SymmetricPolytope::from_vertices(2, &rot).unwrap().canonicalize(), h);
        assert_ne!(square(), square().polar_dual());
    }

    #[test]
    fn edges_of_cube() {
        let pts: Vec<Vector> = (0..8)
            .map(|m| {
                Vector::new(
                    (0..3)
                        .map(|k| if m >> k & 1 == 1 { int(1) } else { int(-1) })
                        .collect(),
                )
            })
            .collect();
        let cube = SymmetricPolytope::from_vertices(3, &pts).unwrap();
        assert_eq!(cube.edges().len(), 12);
        assert_eq!(cube.facets_of().len(), 6);
        let sec = cube.hyperplane_section(&v(&["1", "1", "1"])).unwrap();
        // The central section of the cube orthogonal to a diagonal is a hexagon.
        assert_eq!(sec.vertices().len(), 6);
        assert_eq!(sec.affine_dim(), 2);
        let _ = rat(1, 2);
    }
}
