//! Two-dimensional spaces: classification of GL polygons, edge-length census,
//! the λ-hexagon family and the Property A probe on the hexagon Ẽ.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::corpus;
use crate::error::{check_dim, Error, Result};
use crate::gl::is_gl;
use crate::normed::PolyhedralSpace;
use crate::polytope::SymmetricPolytope;
use crate::rational::{int, rat, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarClass {
    /// Ball vertices are exactly `±v_1, ±v_2`.
    Parallelogram(Vector, Vector),
    /// Ball vertices are exactly `±v_1, ±v_2, ±(v_1 + v_2)`.
    AffineRegularHexagon(Vector, Vector),
    NotGL,
}

impl PlanarClass {
    pub fn name(&self) -> &'static str {
        match self {
            PlanarClass::Parallelogram(..) => "parallelogram",
            PlanarClass::AffineRegularHexagon(..) => "affine-regular hexagon",
            PlanarClass::NotGL => "not GL",
        }
    }

    pub fn witness(&self) -> Option<(&Vector, &Vector)> {
        match self {
            PlanarClass::Parallelogram(a, b) | PlanarClass::AffineRegularHexagon(a, b) => Some((a, b)),
            PlanarClass::NotGL => None,
        }
    }

    pub fn is_gl(&self) -> bool {
        !matches!(self, PlanarClass::NotGL)
    }
}

fn cross(a: &Vector, b: &Vector) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// 0 for angles in `[0, π)`, 1 for `[π, 2π)`.
fn half_plane(p: &Vector) -> u8 {
    if p[1].is_positive() || (p[1].is_zero() && p[0].is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: &Vector, b: &Vector) -> Ordering {
    half_plane(a)
        .cmp(&half_plane(b))
        .then_with(|| Rational::zero().cmp(&cross(a, b)))
}

/// Ball vertices in counterclockwise order, starting at the smallest
/// nonnegative angle.
pub fn angular_order(ball: &SymmetricPolytope) -> Vec<Vector> {
    let mut vs = ball.vertices().to_vec();
    vs.sort_by(angle_cmp);
    vs
}

fn require_planar(x: &PolyhedralSpace) -> Result<()> {
    check_dim(2, x.dim())
}

fn same_vertex_set(ball: &SymmetricPolytope, candidates: &[Vector]) -> bool {
    let mut c = candidates.to_vec();
    c.sort();
    c.dedup();
    c == ball.vertices()
}

pub fn classify_2d(x: &PolyhedralSpace) -> Result<PlanarClass> {
    require_planar(x)?;
    if !is_gl(x)?.is_gl {
        return Ok(PlanarClass::NotGL);
    }
    let ring = angular_order(x.ball());
    let n = ring.len();
    match n {
        4 => Ok(PlanarClass::Parallelogram(ring[0].clone(), ring[1].clone())),
        6 => {
            for i in 0..n {
                let (a, b, c) = (&ring[i], &ring[(i + 1) % n], &ring[(i + 2) % n]);
                if b == &(a + c) {
                    let all = [a.clone(), -a, c.clone(), -c, b.clone(), -b];
                    if same_vertex_set(x.ball(), &all) {
                        return Ok(PlanarClass::AffineRegularHexagon(a.clone(), c.clone()));
                    }
                }
            }
            Err(Error::TheoremViolation(format!(
                "GL hexagon {:?} admits no labeling ±v1, ±v2, ±(v1+v2)",
                ring.iter().map(ToString::to_string).collect::<Vec<_>>()
            )))
        }
        _ => Err(Error::TheoremViolation(format!(
            "GL polygon with {n} vertices is neither a parallelogram nor a hexagon"
        ))),
    }
}

/// One antipodal pair of edges, represented by the edge `(from, to)` in
/// counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub from: Vector,
    pub to: Vector,
    pub length: Rational,
}

/// Own-norm edge lengths, one entry per antipodal edge pair, sorted by
/// decreasing length.
pub fn segment_census(x: &PolyhedralSpace) -> Result<Vec<CensusEntry>> {
    require_planar(x)?;
    let ring = angular_order(x.ball());
    let n = ring.len();
    let mut out: Vec<CensusEntry> = (0..n / 2)
        .map(|i| {
            let (from, to) = (ring[i].clone(), ring[(i + 1) % n].clone());
            let length = x.norm_unchecked(&(&to - &from));
            CensusEntry { from, to, length }
        })
        .collect();
    out.sort_by(|a, b| b.length.cmp(&a.length));
    Ok(out)
}

/// Checks both clauses of the segment bound: at most three pairs have length
/// at least 1, and when exactly three do, at least two have length exactly 1.
pub fn census_bound_holds(census: &[CensusEntry]) -> bool {
    let long: Vec<&CensusEntry> = census.iter().filter(|e| e.length >= Rational::one()).collect();
    match long.len() {
        0..=2 => true,
        3 => long.iter().filter(|e| e.length.is_one()).count() >= 2,
        _ => false,
    }
}

/// The hexagon with vertices `±x_1, ±x_2, ±λ(x_1 + x_2)` written in the
/// `x_1, x_2` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaHexagon {
    lambda: Rational,
    ball: SymmetricPolytope,
}

impl LambdaHexagon {
    pub fn new(lambda: Rational) -> Result<Self> {
        let ball = corpus::hex_lambda(&lambda)?;
        Ok(LambdaHexagon { lambda, ball })
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn ball(&self) -> &SymmetricPolytope {
        &self.ball
    }

    pub fn space(&self) -> PolyhedralSpace {
        PolyhedralSpace::new(self.ball.clone())
    }

    /// `f_1 = (1, c)`, `f_2 = (c, 1)`, `f_3 = (−1, 1)` with `c = (1 − λ)/λ`.
    pub fn functionals(&self) -> [Vector; 3] {
        let c = (Rational::one() - &self.lambda) / &self.lambda;
        [
            Vector::new(vec![int(1), c.clone()]),
            Vector::new(vec![c, int(1)]),
            Vector::from_ints(&[-1, 1]),
        ]
    }

    /// `max_i |f_i(x)|`.
    pub fn norm(&self, x: &Vector) -> Result<Rational> {
        check_dim(2, x.dim())?;
        Ok(self
            .functionals()
            .iter()
            .map(|f| f.dot(x).abs())
            .max()
            .expect("three functionals"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyAProbe {
    pub min_distance: Rational,
    pub bound: Rational,
    pub consistent: bool,
}

/// On Ẽ, with `ỹ = t·ẽ_2 + (1 − t)·ẽ_1`, computes `min ‖x − αỹ‖` over the
/// face of `ẽ_2* = (0, 1)` and compares it with `1 − αt`.
pub fn property_a_probe(t: &Rational, alpha: &Rational) -> Result<PropertyAProbe> {
    if t.is_negative() || t > &Rational::one() {
        return Err(Error::Input(format!("t = {t} outside [0, 1]")));
    }
    if !alpha.is_positive() {
        return Err(Error::Input(format!("α = {alpha} must be positive")));
    }
    let space = PolyhedralSpace::new(corpus::hex_tilde());
    let e1 = Vector::from_ints(&[1, 0]);
    let e2 = Vector::new(vec![rat(1, 2), int(1)]);
    let y = &e2.scale(t) + &e1.scale(&(Rational::one() - t));
    let face = space.face_of_functional(&Vector::from_ints(&[0, 1]))?;
    let min_distance = space.dist_to_polytope(&y.scale(alpha), &face)?.value;
    let bound = Rational::one() - alpha * t;
    let consistent = alpha <= &Rational::one() || min_distance > bound;
    Ok(PropertyAProbe {
        min_distance,
        bound,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::fixture;

    fn space(name: &str) -> PolyhedralSpace {
        PolyhedralSpace::new(fixture(name).unwrap())
    }

    fn v(c: &[&str]) -> Vector {
        Vector::from_strs(c)
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_2d(&space("square")).unwrap(),
            PlanarClass::Parallelogram(v(&["1", "1"]), v(&["-1", "1"]))
        );
        assert_eq!(
            classify_2d(&space("hex_lambda(1)")).unwrap(),
            PlanarClass::AffineRegularHexagon(v(&["1", "0"]), v(&["0", "1"]))
        );
        assert_eq!(classify_2d(&space("hex_lambda(3/4)")).unwrap(), PlanarClass::NotGL);
        assert_eq!(classify_2d(&space("oct_rational")).unwrap(), PlanarClass::NotGL);
        assert!(classify_2d(&space("hex_tilde")).unwrap().is_gl());
        assert!(matches!(
            classify_2d(&space("cube3")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn census_examples() {
        let lengths = |name: &str| -> Vec<Rational> {
            segment_census(&space(name)).unwrap().into_iter().map(|e| e.length).collect()
        };
        assert_eq!(lengths("square"), vec![int(2), int(2)]);
        assert_eq!(lengths("hex_lambda(3/4)"), vec![rat(4, 3), int(1), int(1)]);
        assert_eq!(lengths("hex_lambda(1)"), vec![int(1), int(1), int(1)]);
        for name in ["square", "hex_lambda(3/4)", "hex_lambda(1)", "oct_rational", "hex_tilde"] {
            assert!(census_bound_holds(&segment_census(&space(name)).unwrap()), "{name}");
        }
    }

    #[test]
    fn lambda_hexagon_norm_matches_ball() {
        for l in [rat(3, 4), rat(2, 3), int(1), rat(9, 10)] {
            let h = LambdaHexagon::new(l).unwrap();
            let x = h.space();
            for a in -3..=3 {
                for b in -3..=3 {
                    let p = Vector::new(vec![rat(a, 2), rat(b, 3)]);
                    assert_eq!(h.norm(&p).unwrap(), x.norm(&p).unwrap());
                }
            }
        }
        assert!(LambdaHexagon::new(rat(1, 2)).is_err());
        assert!(LambdaHexagon::new(rat(5, 4)).is_err());
    }

    #[test]
    fn property_a_examples() {
        let p = property_a_probe(&rat(1, 2), &rat(3, 2)).unwrap();
        assert_eq!((p.min_distance.clone(), p.bound.clone()), (rat(3, 4), rat(1, 4)));
        assert!(p.consistent);

        let p = property_a_probe(&rat(1, 2), &int(1)).unwrap();
        assert_eq!(p.min_distance, rat(1, 2));
        assert_eq!(p.bound, rat(1, 2));

        let p = property_a_probe(&int(0), &int(2)).unwrap();
        assert_eq!(p.bound, int(1));
        assert_eq!(p.min_distance, int(2));
        assert!(p.consistent);

        assert!(property_a_probe(&rat(3, 2), &int(1)).is_err());
    }

    #[test]
    fn property_a_grid() {
        for t in [0, 1, 2, 3, 4] {
            for alpha in [rat(9, 8), rat(5, 4), rat(3, 2), int(2)] {
                assert!(property_a_probe(&rat(t, 4), &alpha).unwrap().consistent);
            }
        }
    }
}
