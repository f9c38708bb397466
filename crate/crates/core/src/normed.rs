//! A symmetric polytope viewed as the unit ball of a norm.

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::lp::{self, LpProblem};
use crate::polytope::{Facet, GeneralPolytope, SymmetricPolytope};
use crate::rational::{Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralSpace {
    ball: SymmetricPolytope,
    dual: SymmetricPolytope,
}

/// Result of a distance computation: the exact value and one point of the
/// target set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance {
    pub value: Rational,
    pub minimizer: Vector,
}

impl PolyhedralSpace {
    pub fn new(ball: SymmetricPolytope) -> Self {
        let dual = ball.polar_dual();
        PolyhedralSpace { ball, dual }
    }

    pub fn dim(&self) -> usize {
        self.ball.dim()
    }

    pub fn ball(&self) -> &SymmetricPolytope {
        &self.ball
    }

    pub fn dual_ball(&self) -> &SymmetricPolytope {
        &self.dual
    }

    pub fn dual_space(&self) -> PolyhedralSpace {
        PolyhedralSpace {
            ball: self.dual.clone(),
            dual: self.ball.clone(),
        }
    }

    pub fn facets(&self) -> Vec<Facet> {
        self.ball.facets_of()
    }

    /// `max_d |d·x|` over the facet functionals.
    pub fn norm(&self, x: &Vector) -> Result<Rational> {
        check_dim(self.dim(), x.dim())?;
        Ok(self.norm_unchecked(x))
    }

    pub(crate) fn norm_unchecked(&self, x: &Vector) -> Rational {
        // The functional set is symmetric, so the plain maximum is the
        // maximum of absolute values.
        self.ball
            .facet_functionals()
            .iter()
            .map(|d| d.dot(x))
            .max()
            .unwrap_or_else(Rational::zero)
            .max(Rational::zero())
    }

    /// Norm of `d` as a functional: `max_v d·v` over ball vertices.
    pub fn dual_norm(&self, d: &Vector) -> Result<Rational> {
        check_dim(self.dim(), d.dim())?;
        Ok(self
            .ball
            .vertices()
            .iter()
            .map(|v| d.dot(v))
            .max()
            .unwrap_or_else(Rational::zero)
            .max(Rational::zero()))
    }

    /// `min_{a ∈ A} ‖y − a‖`, solved as a linear program over barycentric
    /// coordinates of `A`'s vertices.
    pub fn dist_to_polytope(&self, y: &Vector, target: &GeneralPolytope) -> Result<Distance> {
        check_dim(self.dim(), y.dim())?;
        check_dim(self.dim(), target.dim())?;
        self.dist_to_points(y, target.vertices())
    }

    pub fn dist_to_facet(&self, y: &Vector, facet: &Facet) -> Result<Distance> {
        check_dim(self.dim(), y.dim())?;
        self.dist_to_points(y, &facet.vertices)
    }

    pub(crate) fn dist_to_points(&self, y: &Vector, points: &[Vector]) -> Result<Distance> {
        if points.is_empty() {
            return Err(Error::Input("distance to an empty set".into()));
        }
        let k = points.len();
        let mut objective = Vector::zeros(k + 1);
        objective[k] = Rational::one();
        let mut lp = LpProblem::new(k + 1).minimize(objective);
        for i in 0..k {
            lp.set_nonnegative(i);
        }
        let mut sum_row = Vector::zeros(k + 1);
        for i in 0..k {
            sum_row[i] = Rational::one();
        }
        lp.add_eq(sum_row, Rational::one());
        for d in self.ball.facet_functionals() {
            // d·(y − Σ λ_i a_i) ≤ t
            let mut coords: Vec<Rational> = points.iter().map(|a| -d.dot(a)).collect();
            coords.push(-Rational::one());
            lp.add_le(Vector::new(coords), -d.dot(y));
        }
        let (value, sol) = lp::solve_optimal(&lp)?;
        let mut minimizer = Vector::zeros(self.dim());
        for (lambda, a) in sol.iter().zip(points) {
            if !lambda.is_zero() {
                minimizer = &minimizer + &a.scale(lambda);
            }
        }
        Ok(Distance { value, minimizer })
    }

    /// Hausdorff distance between two polytopes. `dist(·, B)` is convex, so
    /// its maximum over `A` is attained at a vertex of `A`.
    pub fn hausdorff(&self, a: &GeneralPolytope, b: &GeneralPolytope) -> Result<Rational> {
        check_dim(self.dim(), a.dim())?;
        check_dim(self.dim(), b.dim())?;
        let mut worst = Rational::zero();
        for (from, to) in [(a, b), (b, a)] {
            for v in from.vertices() {
                let d = self.dist_to_points(v, to.vertices())?.value;
                if d > worst {
                    worst = d;
                }
            }
        }
        Ok(worst)
    }

    /// `Face(d) = {x ∈ B : d·x = 1}` for a norm-one functional `d`.
    pub fn face_of_functional(&self, d: &Vector) -> Result<GeneralPolytope> {
        let norm = self.dual_norm(d)?;
        if !norm.is_one() {
            return Err(Error::FunctionalNotNorming {
                functional: d.clone(),
                norm: norm.to_string(),
            });
        }
        GeneralPolytope::from_points(self.dim(), &self.ball.face_vertices(d))
    }

    /// Whether `x` lies in the unit ball.
    pub fn in_ball(&self, x: &Vector) -> bool {
        !(self.norm_unchecked(x) > Rational::one())
    }
}

/// `1 − x*(y)`, the value a plump face's distance function must take.
pub fn plump_target(functional: &Vector, y: &Vector) -> Rational {
    Rational::one() - functional.dot(y)
}
