use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::dd;
use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::rational::{Rational, Vector};

/// The convex hull of finitely many points, stored by its extreme points.
/// It may be lower-dimensional; volume and containment work inside the
/// affine hull.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralPolytope {
    dim: usize,
    vertices: Vec<Vector>,
}

/// Affine hull of a point set. `basis` is in reduced row echelon form, so
/// projecting onto the pivot coordinates is a bijection from the hull to
/// `Q^m`; volumes of lower-dimensional bodies are measured in that chart.
#[derive(Clone, Debug)]
pub(crate) struct AffineFrame {
    origin: Vector,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl AffineFrame {
    fn of(points: &[Vector]) -> AffineFrame {
        let origin = points[0].clone();
        let diffs: Vec<Vector> = points[1..].iter().map(|p| p - &origin).collect();
        let (basis, pivots) = if diffs.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            linalg::rref(&diffs)
        };
        AffineFrame {
            origin,
            basis,
            pivots,
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn chart(&self, x: &Vector) -> Vector {
        let d = x - &self.origin;
        self.pivots.iter().map(|&p| d[p].clone()).collect()
    }

    fn contains(&self, x: &Vector) -> bool {
        let d = x - &self.origin;
        let mut rebuilt = Vector::zeros(d.dim());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            rebuilt = &rebuilt + &b.scale(&d[p]);
        }
        rebuilt == d
    }
}

/// Inequalities `h·y ≤ b` of a full-dimensional point set in `Q^m`.
fn local_halfspaces(points: &[Vector], m: usize) -> Result<Vec<(Vector, Rational)>> {
    let count = Rational::from_integer((points.len() as i64).into());
    let mut centroid = Vector::zeros(m);
    for p in points {
        centroid = &centroid + p;
    }
    let centroid = centroid.scale(&count.recip());
    let polar: Vec<(Vector, Rational)> = points
        .iter()
        .map(|p| (p - &centroid, Rational::one()))
        .collect();
    let normals = dd::polytope_vertices(&polar, m)?;
    Ok(normals
        .into_iter()
        .map(|h| {
            let b = Rational::one() + h.dot(&centroid);
            (h, b)
        })
        .collect())
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| {
        acc * Rational::from_integer(i.into())
    })
}

impl GeneralPolytope {
    /// Convex hull of `points`; only extreme points are kept.
    pub fn from_points(dim: usize, points: &[Vector]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Geometry("empty point set".into()));
        }
        let mut set = BTreeSet::new();
        for p in points {
            check_dim(dim, p.dim())?;
            set.insert(p.clone());
        }
        let pts: Vec<Vector> = set.into_iter().collect();
        let frame = AffineFrame::of(&pts);
        let m = frame.dim();
        if m == 0 {
            return Ok(GeneralPolytope { dim, vertices: pts });
        }
        let local: Vec<Vector> = pts.iter().map(|p| frame.chart(p)).collect();
        let rows = local_halfspaces(&local, m)?;
        let vertices = pts
            .into_iter()
            .zip(&local)
            .filter(|(_, y)| {
                let tight: Vec<Vector> = rows
                    .iter()
                    .filter(|(h, b)| &h.dot(y) == b)
                    .map(|(h, _)| h.clone())
                    .collect();
                linalg::rank(&tight) == m
            })
            .map(|(p, _)| p)
            .collect();
        Ok(GeneralPolytope { dim, vertices })
    }

    /// Wraps a list already known to consist of extreme points.
    pub(crate) fn from_extreme_points(dim: usize, mut vertices: Vec<Vector>) -> Self {
        vertices.sort();
        vertices.dedup();
        GeneralPolytope { dim, vertices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub(crate) fn frame(&self) -> AffineFrame {
        AffineFrame::of(&self.vertices)
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        self.frame().dim()
    }

    pub fn neg(&self) -> GeneralPolytope {
        GeneralPolytope::from_extreme_points(self.dim, self.vertices.iter().map(|v| -v).collect())
    }

    pub fn translate(&self, by: &Vector) -> GeneralPolytope {
        GeneralPolytope::from_extreme_points(self.dim, self.vertices.iter().map(|v| v + by).collect())
    }

    pub fn minkowski_sum(&self, other: &GeneralPolytope) -> Result<GeneralPolytope> {
        check_dim(self.dim, other.dim)?;
        let sums: Vec<Vector> = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| a + b))
            .collect();
        GeneralPolytope::from_points(self.dim, &sums)
    }

    /// `A − A`.
    pub fn difference_body(&self) -> GeneralPolytope {
        self.minkowski_sum(&self.neg())
            .expect("difference body of a valid polytope")
    }

    /// True iff every vertex of `other` lies in `self`.
    pub fn contains(&self, other: &GeneralPolytope) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        let frame = self.frame();
        let m = frame.dim();
        if !other.vertices.iter().all(|v| frame.contains(v)) {
            return Ok(false);
        }
        if m == 0 {
            return Ok(true);
        }
        let local: Vec<Vector> = self.vertices.iter().map(|p| frame.chart(p)).collect();
        let rows = local_halfspaces(&local, m)?;
        Ok(other.vertices.iter().all(|v| {
            let y = frame.chart(v);
            rows.iter().all(|(h, b)| &h.dot(&y) <= b)
        }))
    }

    /// Volume in the affine hull's own dimension, measured in the pivot
    /// coordinate chart (ordinary volume for full-dimensional bodies).
    pub fn volume(&self) -> Rational {
        let frame = self.frame();
        self.volume_in(&frame)
    }

    /// Volume in a chart shared with another body, so that ratios between
    /// bodies in parallel affine subspaces are meaningful.
    pub(crate) fn volume_in(&self, frame: &AffineFrame) -> Rational {
        let m = frame.dim();
        if m == 0 {
            return Rational::one();
        }
        let local: Vec<Vector> = self.vertices.iter().map(|p| frame.chart(p)).collect();
        let rows = local_halfspaces(&local, m).expect("full-dimensional chart");
        let all: Vec<usize> = (0..local.len()).collect();
        let simplices = pulling_triangulation(&local, &rows, all, m);
        let mut total = Rational::zero();
        for s in simplices {
            let base = &local[s[0]];
            let edges: Vec<Vector> = s[1..].iter().map(|&i| &local[i] - base).collect();
            total += linalg::determinant(&edges).abs();
        }
        total / factorial(m)
    }
}

/// Pulling triangulation of the face spanned by `face` (of dimension `k`):
/// cone the lowest-index vertex over every facet of the face not containing
/// it.
fn pulling_triangulation(
    points: &[Vector],
    rows: &[(Vector, Rational)],
    face: Vec<usize>,
    k: usize,
) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![face[0]]];
    }
    let apex = face[0];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for (h, b) in rows {
        let sub: Vec<usize> = face
            .iter()
            .copied()
            .filter(|&i| &h.dot(&points[i]) == b)
            .collect();
        if sub.is_empty() || sub.len() == face.len() || sub.contains(&apex) {
            continue;
        }
        let refs: Vec<&Vector> = sub.iter().map(|&i| &points[i]).collect();
        if linalg::affine_dim(&refs) != Some(k - 1) || !seen.insert(sub.clone()) {
            continue;
        }
        for mut simplex in pulling_triangulation(points, rows, sub, k - 1) {
            simplex.push(apex);
            out.push(simplex);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn gp(pts: &[&[i64]]) -> GeneralPolytope {
        let dim = pts[0].len();
        let v: Vec<Vector> = pts.iter().map(|p| Vector::from_ints(p)).collect();
        GeneralPolytope::from_points(dim, &v).unwrap()
    }

    fn triangle() -> GeneralPolytope {
        gp(&[&[0, 0], &[1, 0], &[0, 1]])
    }

    #[test]
    fn extreme_points_only() {
        let p = gp(&[&[0, 0], &[2, 0], &[1, 0], &[0, 2], &[1, 1], &[0, 1]]);
        assert_eq!(p.vertices().len(), 3);
        let seg = gp(&[&[0, 0], &[1, 1], &[3, 3], &[2, 2]]);
        assert_eq!(
            seg.vertices(),
            &[Vector::from_ints(&[0, 0]), Vector::from_ints(&[3, 3])]
        );
        assert_eq!(seg.affine_dim(), 1);
    }

    #[test]
    fn volumes() {
        let sq = gp(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        assert_eq!(sq.volume(), int(4));
        assert_eq!(triangle().volume(), rat(1, 2));
        let d = triangle().difference_body();
        assert_eq!(d.volume(), int(3));
        let cube = gp(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        assert_eq!(cube.volume(), int(1));
        let tet = gp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(tet.volume(), rat(1, 6));
        assert_eq!(tet.difference_body().volume(), rat(20, 6));
    }

    #[test]
    fn triangle_difference_body_is_hexagon() {
        // Brute force: all differences of the three vertices.
        let d = triangle().difference_body();
        let mut expected = [Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[-1, 0]),
            Vector::from_ints(&[0, 1]),
            Vector::from_ints(&[0, -1]),
            Vector::from_ints(&[1, -1]),
            Vector::from_ints(&[-1, 1])];
        expected.sort();
        assert_eq!(d.vertices(), &expected[..]);
    }

    #[test]
    fn segment_difference_body() {
        let seg = GeneralPolytope::from_points(
            2,
            &[Vector::from_strs(&["1/2", "1"]), Vector::from_strs(&["-1/2", "1"])],
        )
        .unwrap();
        assert_eq!(
            seg.difference_body().vertices(),
            &[Vector::from_ints(&[-1, 0]), Vector::from_ints(&[1, 0])]
        );
        assert_eq!(seg.volume(), int(1));
    }

    #[test]
    fn symmetric_difference_body_doubles() {
        let sq = gp(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        let twice = gp(&[&[2, 2], &[2, -2], &[-2, 2], &[-2, -2]]);
        assert_eq!(sq.difference_body(), twice);
    }

    #[test]
    fn containment_in_lower_dimensions() {
        let seg = gp(&[&[-1, 0], &[1, 0]]);
        let inner = gp(&[&[-1, 0], &[1, 0]]);
        assert!(seg.contains(&inner).unwrap());
        let off = gp(&[&[0, 1]]);
        assert!(!seg.contains(&off).unwrap());
        let longer = gp(&[&[-2, 0], &[1, 0]]);
        assert!(!seg.contains(&longer).unwrap());
        assert!(longer.contains(&seg).unwrap());
        assert!(seg.contains(&gp(&[&[1, 1, 1]])).is_err());
    }

    #[test]
    fn point_polytope() {
        let p = gp(&[&[3, 4]]);
        assert_eq!(p.affine_dim(), 0);
        assert_eq!(p.volume(), int(1));
        assert!(p.contains(&gp(&[&[3, 4]])).unwrap());
        assert!(!p.contains(&gp(&[&[3, 5]])).unwrap());
    }
}
