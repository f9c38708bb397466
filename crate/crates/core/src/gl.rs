//! Plump facets and the generalized-lush (GL) property of polyhedral spaces.
//!
//! A face `F = Face(x*)` is plump exactly when `dist(y, F) = 1 − x*(y)` for
//! every `y` in the ball. The map `y ↦ dist(y, F) + x*(y) − 1` is convex and
//! never negative, so it suffices to check the ball's vertices. In finite
//! dimensions a space is GL iff every sphere point lies in a plump face, and
//! since a relative-interior point of a facet lies in no other face, that is
//! the same as every facet being plump.

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::normed::{plump_target, PolyhedralSpace};
use crate::par::Execution;
use crate::polytope::{Facet, GeneralPolytope};
use crate::rational::{Rational, Vector};

/// Distance data for one ball vertex against one facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRecord {
    pub vertex: Vector,
    /// `dist(y, F)`.
    pub distance: Rational,
    /// `1 − x*(y)`, a lower bound for `distance`.
    pub target: Rational,
    /// A point of `F` attaining `distance`.
    pub nearest: Vector,
}

impl VertexRecord {
    pub fn gap(&self) -> Rational {
        &self.distance - &self.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumpnessReport {
    pub facet: Facet,
    pub plump: bool,
    pub records: Vec<VertexRecord>,
    /// Index into `records` of the vertex with the largest gap, when the
    /// facet is not plump.
    pub witness: Option<usize>,
}

impl PlumpnessReport {
    pub fn witness_record(&self) -> Option<&VertexRecord> {
        self.witness.map(|i| &self.records[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlVerdict {
    pub is_gl: bool,
    /// One report per facet, in canonical facet order.
    pub reports: Vec<PlumpnessReport>,
}

impl GlVerdict {
    pub fn plump_facets(&self) -> impl Iterator<Item = &PlumpnessReport> {
        self.reports.iter().filter(|r| r.plump)
    }

    pub fn non_plump_facets(&self) -> impl Iterator<Item = &PlumpnessReport> {
        self.reports.iter().filter(|r| !r.plump)
    }

    pub fn plump_count(&self) -> usize {
        self.plump_facets().count()
    }
}

fn check_facet(space: &PolyhedralSpace, facet: &Facet) -> Result<()> {
    check_dim(space.dim(), facet.functional.dim())?;
    match space.ball().facet_for(&facet.functional) {
        Some(f) if f.vertices == facet.vertices => Ok(()),
        _ => Err(Error::Input(format!(
            "{} is not a facet functional of the ball",
            facet.functional
        ))),
    }
}

/// Decides whether `facet` is plump by comparing `dist(y, F)` with
/// `1 − x*(y)` at every ball vertex `y`.
pub fn is_plump_facet(space: &PolyhedralSpace, facet: &Facet) -> Result<PlumpnessReport> {
    check_facet(space, facet)?;
    plumpness_unchecked(space, facet)
}

pub(crate) fn plumpness_unchecked(space: &PolyhedralSpace, facet: &Facet) -> Result<PlumpnessReport> {
    let mut records = Vec::with_capacity(space.ball().vertices().len());
    for y in space.ball().vertices() {
        let target = plump_target(&facet.functional, y);
        let (distance, nearest) = if target.is_zero() {
            (Rational::zero(), y.clone())
        } else {
            let d = space.dist_to_facet(y, facet)?;
            (d.value, d.minimizer)
        };
        records.push(VertexRecord {
            vertex: y.clone(),
            distance,
            target,
            nearest,
        });
    }
    let mut witness: Option<usize> = None;
    for (i, r) in records.iter().enumerate() {
        if r.gap().is_zero() {
            continue;
        }
        if witness.is_none_or(|w| r.gap() > records[w].gap()) {
            witness = Some(i);
        }
    }
    Ok(PlumpnessReport {
        facet: facet.clone(),
        plump: witness.is_none(),
        records,
        witness,
    })
}

pub fn is_gl(space: &PolyhedralSpace) -> Result<GlVerdict> {
    is_gl_with(space, Execution::Sequential)
}

/// [`is_gl`] with a choice of facet-level scheduling. The verdict does not
/// depend on `exec`.
pub fn is_gl_with(space: &PolyhedralSpace, exec: Execution) -> Result<GlVerdict> {
    let facets = space.facets();
    let reports = exec
        .map(&facets, |f| plumpness_unchecked(space, f))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(GlVerdict {
        is_gl: reports.iter().all(|r| r.plump),
        reports,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferenceBodyOutcome {
    /// `F − F` contains the central section `B ∩ ker x*`.
    Holds,
    Violated,
    /// The facet is not plump, so no containment is claimed.
    Skipped,
}

/// Whether `F − F ⊇ B ∩ ker x*`, regardless of plumpness.
pub fn difference_body_contains_section(space: &PolyhedralSpace, facet: &Facet) -> Result<bool> {
    check_facet(space, facet)?;
    let diff = facet.as_polytope().difference_body();
    let section = space.ball().hyperplane_section(&facet.functional)?;
    diff.contains(&section)
}

/// Checks the difference-body containment for a plump facet.
pub fn difference_body_check(space: &PolyhedralSpace, facet: &Facet) -> Result<DifferenceBodyOutcome> {
    if !is_plump_facet(space, facet)?.plump {
        return Ok(DifferenceBodyOutcome::Skipped);
    }
    Ok(if difference_body_contains_section(space, facet)? {
        DifferenceBodyOutcome::Holds
    } else {
        DifferenceBodyOutcome::Violated
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RogersShephard {
    /// Dimension of the body's affine hull.
    pub m: usize,
    /// `vol_m(K − K)`.
    pub lhs: Rational,
    /// `C(2m, m) · vol_m(K)`.
    pub rhs: Rational,
    pub ok: bool,
}

pub fn binomial(n: u64, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into());
    }
    acc
}

/// `vol(K − K) ≤ C(2m, m) vol(K)`, evaluated exactly for bodies of affine
/// dimension at most 3.
pub fn rogers_shephard_audit(body: &GeneralPolytope) -> Result<RogersShephard> {
    let m = body.affine_dim();
    if m > 3 {
        return Err(Error::UnsupportedDimension {
            what: "volume audit",
            dim: m,
            limit: 3,
        });
    }
    // K − K spans the same direction space as K, and the reduced echelon
    // chart of a subspace is unique, so both volumes use the same measure.
    let lhs = body.difference_body().volume();
    let rhs = binomial(2 * m as u64, m as u64) * body.volume();
    let ok = lhs <= rhs;
    Ok(RogersShephard { m, lhs, rhs, ok })
}
