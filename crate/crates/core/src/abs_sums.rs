//! Absolute norms on `R^n`, their sums of polyhedral spaces, and the
//! GL-monotone decision procedure.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dd;
use crate::error::{check_dim, Error, Result};
use crate::gl::{is_gl_with, is_plump_facet, GlVerdict, PlumpnessReport};
use crate::lp::{solve_lp, LpOutcome, LpProblem};
use crate::normed::PolyhedralSpace;
use crate::par::Execution;
use crate::polytope::{Facet, SymmetricPolytope};
use crate::rational::{int, rat, Rational, Vector};

pub const MAX_OUTER_DIM: usize = 3;
pub const MAX_COMPONENT_DIM: usize = 2;
pub const MAX_SUM_DIM: usize = 4;

/// A polyhedral norm on `R^n` invariant under coordinate sign flips with
/// `‖e_k‖ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteNormSpace {
    space: PolyhedralSpace,
}

fn flip(v: &Vector, k: usize) -> Vector {
    let mut w = v.clone();
    w[k] = -w[k].clone();
    w
}

pub fn validate_absolute(ball: SymmetricPolytope) -> Result<AbsoluteNormSpace> {
    let n = ball.dim();
    let space = PolyhedralSpace::new(ball);
    for k in 0..n {
        let norm = space.norm_unchecked(&Vector::unit(n, k));
        if !norm.is_one() {
            return Err(Error::NotAbsolute(format!("‖e_{}‖ = {norm}, expected 1", k + 1)));
        }
    }
    let ball = space.ball();
    for k in 0..n {
        for (what, set) in [("vertex", ball.vertices()), ("facet functional", ball.facet_functionals())] {
            for v in set {
                let w = flip(v, k);
                if set.binary_search(&w).is_err() {
                    return Err(Error::NotAbsolute(format!(
                        "flipping coordinate {} sends {what} {v} to {w}, which is not a {what}",
                        k + 1
                    )));
                }
            }
        }
    }
    // Monotonicity on the positive orthant: shrinking one coordinate of |v|
    // never increases the norm.
    for v in ball.vertices() {
        let top = v.abs();
        for k in 0..n {
            for s in [rat(0, 1), rat(1, 2)] {
                let mut lower = top.clone();
                lower[k] = &lower[k] * &s;
                if space.norm_unchecked(&lower) > space.norm_unchecked(&top) {
                    return Err(Error::NotAbsolute(format!(
                        "norm not monotone: ‖{lower}‖ > ‖{top}‖"
                    )));
                }
            }
        }
    }
    Ok(AbsoluteNormSpace { space })
}

impl AbsoluteNormSpace {
    pub fn space(&self) -> &PolyhedralSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Extreme points of the dual ball with all coordinates nonnegative.
    pub fn nonnegative_dual_vertices(&self) -> Vec<Vector> {
        self.space
            .ball()
            .facet_functionals()
            .iter()
            .filter(|d| d.iter().all(|c| !c.is_negative()))
            .cloned()
            .collect()
    }
}

/// An `(a, z)` pair for which no admissible `b` exists, with the Farkas
/// certificate of the infeasible system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub a: Vector,
    pub z: Vector,
    pub farkas: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonePlumpResult {
    pub functional: Vector,
    pub support: Vec<usize>,
    pub prefilter_pass: bool,
    pub monotone_plump: bool,
    pub counterexample: Option<Counterexample>,
    /// Number of `(a, z)` parameter vertices checked; zero when the full
    /// procedure was skipped.
    pub vertices_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlmVerdict {
    pub results: Vec<MonotonePlumpResult>,
    pub is_glm: bool,
}

/// Outcome of searching for `b` given `(a, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BSearch {
    Found(Vector),
    Infeasible(Vector),
}

/// Searches for `b ∈ B_E` with `d·b = 1`, `b_k ≥ a_k` on the support of `d`,
/// and `b − z` a nonnegative combination of the vertices of `Face(d)`. The
/// last condition is exactly `‖b − z‖ = d·(b − z) = 1 − d·z`.
pub fn find_b(e: &AbsoluteNormSpace, d: &Vector, a: &Vector, z: &Vector) -> Result<BSearch> {
    let n = e.dim();
    check_dim(n, d.dim())?;
    check_dim(n, a.dim())?;
    check_dim(n, z.dim())?;
    let face = e.space.ball().face_vertices(d);
    let m = face.len();
    let mut lp = LpProblem::new(n + m);
    for j in n..n + m {
        lp.set_nonnegative(j);
    }
    let pad = |row: &Vector| {
        let mut r = row.clone().into_coords();
        r.resize(n + m, Rational::zero());
        Vector::new(r)
    };
    for g in e.space.ball().facet_functionals() {
        lp.add_le(pad(g), int(1));
    }
    lp.add_eq(pad(d), int(1));
    for k in 0..n {
        if !d[k].is_zero() {
            lp.add_le(pad(&Vector::unit(n, k).scale(&int(-1))), -a[k].clone());
        }
    }
    for k in 0..n {
        let mut row = Vector::zeros(n + m);
        row[k] = int(1);
        for (j, f) in face.iter().enumerate() {
            row[n + j] = -f[k].clone();
        }
        lp.add_eq(row, z[k].clone());
    }
    match solve_lp(&lp)? {
        LpOutcome::Optimal { point, .. } => Ok(BSearch::Found(point.slice(0, n))),
        LpOutcome::Infeasible { farkas } => Ok(BSearch::Infeasible(farkas)),
        LpOutcome::Unbounded => unreachable!("feasibility problem has zero objective"),
    }
}

fn support(d: &Vector) -> Vec<usize> {
    (0..d.dim()).filter(|&k| !d[k].is_zero()).collect()
}

/// Vertices of the parameter polytope over `(a, z)` for one facet `f` of
/// `B_E`: `a` on the facet and nonnegative, `z ∈ B_E`, `0 ≤ z_k ≤ a_k` on
/// the support of `d`.
fn parameter_vertices(e: &AbsoluteNormSpace, d: &Vector, f: &Vector) -> Result<Vec<Vector>> {
    let n = e.dim();
    let zero = Vector::zeros(n);
    let mut rows: Vec<(Vector, Rational)> = Vec::new();
    rows.push((f.concat(&zero), int(1)));
    rows.push((f.scale(&int(-1)).concat(&zero), int(-1)));
    for g in e.space.ball().facet_functionals() {
        rows.push((g.concat(&zero), int(1)));
        rows.push((zero.concat(g), int(1)));
    }
    for k in 0..n {
        rows.push((Vector::unit(n, k).scale(&int(-1)).concat(&zero), int(0)));
    }
    for k in support(d) {
        let ek = Vector::unit(n, k);
        rows.push((zero.concat(&ek.scale(&int(-1))), int(0)));
        rows.push((ek.scale(&int(-1)).concat(&ek), int(0)));
    }
    dd::polytope_vertices(&rows, 2 * n)
}

/// Decides whether `Face(d)` is monotone plump. `d` must be an extreme point
/// of the dual ball; it is replaced by `|d|`. When the coordinate prefilter
/// fails the verdict is negative without further work unless `audit` is set,
/// in which case the full vertex enumeration runs anyway and must produce a
/// counterexample.
pub fn is_monotone_plump_with(e: &AbsoluteNormSpace, d: &Vector, audit: bool) -> Result<MonotonePlumpResult> {
    check_dim(e.dim(), d.dim())?;
    let d = d.abs();
    let functionals = e.space.ball().facet_functionals();
    if functionals.binary_search(&d).is_err() {
        return Err(Error::Input(format!("{d} is not an extreme point of the dual ball")));
    }
    let supp = support(&d);
    let prefilter_pass = d.iter().all(|c| c.is_zero() || c.is_one());
    let mut result = MonotonePlumpResult {
        functional: d.clone(),
        support: supp,
        prefilter_pass,
        monotone_plump: false,
        counterexample: None,
        vertices_checked: 0,
    };
    if !prefilter_pass && !audit {
        return Ok(result);
    }
    let mut seen: Vec<Vector> = Vec::new();
    for f in functionals {
        for p in parameter_vertices(e, &d, f)? {
            if seen.contains(&p) {
                continue;
            }
            seen.push(p.clone());
            let n = e.dim();
            let (a, z) = (p.slice(0, n), p.slice(n, 2 * n));
            if let BSearch::Infeasible(farkas) = find_b(e, &d, &a, &z)? {
                result.vertices_checked = seen.len();
                result.counterexample = Some(Counterexample { a, z, farkas });
                return Ok(result);
            }
        }
    }
    result.vertices_checked = seen.len();
    result.monotone_plump = prefilter_pass;
    if !prefilter_pass {
        return Err(Error::TheoremViolation(format!(
            "{d} fails the coordinate test but every parameter vertex admits b"
        )));
    }
    Ok(result)
}

pub fn is_monotone_plump(e: &AbsoluteNormSpace, d: &Vector) -> Result<MonotonePlumpResult> {
    is_monotone_plump_with(e, d, false)
}

pub fn is_glm(e: &AbsoluteNormSpace) -> Result<GlmVerdict> {
    is_glm_with(e, Execution::Sequential, false)
}

pub fn is_glm_with(e: &AbsoluteNormSpace, exec: Execution, audit: bool) -> Result<GlmVerdict> {
    let ds = e.nonnegative_dual_vertices();
    let results = exec
        .map(&ds, |d| is_monotone_plump_with(e, d, audit))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(GlmVerdict {
        is_glm: results.iter().all(|r| r.monotone_plump),
        results,
    })
}

/// GL-respecting and GL-monotone coincide for absolute norms, so this is
/// [`is_glm`].
pub fn is_gl_respecting(e: &AbsoluteNormSpace) -> Result<bool> {
    Ok(is_glm(e)?.is_glm)
}

/// Random `(a, z)` with `a ∈ S_E` nonnegative and `|z_k| ≤ a_k` on the
/// support of `d`, `z ∈ B_E`.
pub fn extended_z_samples(e: &AbsoluteNormSpace, d: &Vector, count: usize, seed: u64) -> Vec<(Vector, Vector)> {
    let n = e.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let supp = support(d);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let raw: Vector = (0..n).map(|_| rat(rng.gen_range(0..=8), 8)).collect();
        if raw.is_zero() {
            continue;
        }
        let a = raw.scale(&(Rational::one() / e.space.norm_unchecked(&raw)));
        let mut z: Vector = (0..n)
            .map(|k| {
                let s = rat(rng.gen_range(-8..=8), 8);
                if supp.contains(&k) {
                    &a[k] * &s
                } else {
                    s
                }
            })
            .collect();
        if !e.space.in_ball(&z) {
            for k in (0..n).filter(|k| !supp.contains(k)) {
                z[k] = Rational::zero();
            }
        }
        out.push((a, z));
    }
    out
}

/// Checks that `b` exists for every sample, where `z` only satisfies
/// `|z_k| ≤ a_k` on the support of `d`.
pub fn extended_z_probe(e: &AbsoluteNormSpace, d: &Vector, samples: &[(Vector, Vector)]) -> Result<bool> {
    let d = d.abs();
    for (a, z) in samples {
        let on_sphere = e.space.norm(a)?.is_one() && a.iter().all(|c| !c.is_negative());
        let bounded = support(&d).iter().all(|&k| z[k].abs() <= a[k]) && e.space.in_ball(z);
        if !on_sphere || !bounded {
            return Err(Error::Input(format!("sample (a = {a}, z = {z}) outside the probe domain")));
        }
        if let BSearch::Infeasible(_) = find_b(e, &d, a, z)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `E(X_1, …, X_n)`: `R^{n_1} × … × R^{n_n}` normed by
/// `‖x‖ = ‖(‖x_1‖, …, ‖x_n‖)‖_E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumSpace {
    outer: AbsoluteNormSpace,
    components: Vec<PolyhedralSpace>,
    space: PolyhedralSpace,
}

impl SumSpace {
    pub fn outer(&self) -> &AbsoluteNormSpace {
        &self.outer
    }

    pub fn components(&self) -> &[PolyhedralSpace] {
        &self.components
    }

    pub fn space(&self) -> &PolyhedralSpace {
        &self.space
    }

    pub fn ball(&self) -> &SymmetricPolytope {
        self.space.ball()
    }

    fn ranges(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.components
            .iter()
            .map(|c| {
                let r = (start, start + c.dim());
                start = r.1;
                r
            })
            .collect()
    }

    /// `(‖x_1‖, …, ‖x_n‖)`.
    pub fn component_norms(&self, x: &Vector) -> Result<Vector> {
        check_dim(self.space.dim(), x.dim())?;
        Ok(self
            .ranges()
            .into_iter()
            .zip(&self.components)
            .map(|((s, t), c)| c.norm_unchecked(&x.slice(s, t)))
            .collect())
    }

    /// Concatenates `(d_k w_k)` into one functional on the sum.
    pub fn composite_functional(&self, d: &Vector, parts: &[Vector]) -> Vector {
        let mut out = Vec::new();
        for (k, w) in parts.iter().enumerate() {
            out.extend(w.scale(&d[k]).into_coords());
        }
        Vector::new(out)
    }
}

fn cartesian(lists: &[Vec<Vector>]) -> Vec<Vec<Vector>> {
    let mut acc: Vec<Vec<Vector>> = vec![Vec::new()];
    for list in lists {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |g| {
                    let mut p = prefix.clone();
                    p.push(g.clone());
                    p
                })
            })
            .collect();
    }
    acc
}

/// Builds the unit ball of the sum from composite functionals
/// `(d_1 g_1, …, d_n g_n)` over nonnegative dual vertices `d` of `E` and
/// dual vertices `g_k` of the components, then checks the norm identity on
/// 20 seeded random vectors.
pub fn build_e_sum(outer: &AbsoluteNormSpace, components: &[PolyhedralSpace]) -> Result<SumSpace> {
    let n = outer.dim();
    if n > MAX_OUTER_DIM {
        return Err(Error::UnsupportedDimension {
            what: "outer absolute norm",
            dim: n,
            limit: MAX_OUTER_DIM,
        });
    }
    if components.len() != n {
        return Err(Error::Input(format!(
            "outer norm has dimension {n} but {} components were given",
            components.len()
        )));
    }
    for c in components {
        if c.dim() > MAX_COMPONENT_DIM {
            return Err(Error::UnsupportedDimension {
                what: "sum component",
                dim: c.dim(),
                limit: MAX_COMPONENT_DIM,
            });
        }
    }
    let total: usize = components.iter().map(|c| c.dim()).sum();
    if total > MAX_SUM_DIM {
        return Err(Error::UnsupportedDimension {
            what: "sum space",
            dim: total,
            limit: MAX_SUM_DIM,
        });
    }
    let mut rows = Vec::new();
    for d in outer.nonnegative_dual_vertices() {
        let choices: Vec<Vec<Vector>> = components
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if d[k].is_zero() {
                    vec![Vector::zeros(c.dim())]
                } else {
                    c.ball().facet_functionals().to_vec()
                }
            })
            .collect();
        for parts in cartesian(&choices) {
            let mut row = Vec::with_capacity(total);
            for (k, g) in parts.iter().enumerate() {
                row.extend(g.scale(&d[k]).into_coords());
            }
            rows.push(Vector::new(row));
        }
    }
    rows.sort();
    rows.dedup();
    let ball = SymmetricPolytope::from_halfspaces(total, &rows)?;
    let sum = SumSpace {
        outer: outer.clone(),
        components: components.to_vec(),
        space: PolyhedralSpace::new(ball),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..20 {
        let x: Vector = (0..total)
            .map(|_| rat(rng.gen_range(-12..=12), rng.gen_range(1..=6)))
            .collect();
        let lhs = sum.space.norm_unchecked(&x);
        let rhs = outer.space.norm_unchecked(&sum.component_norms(&x)?);
        if lhs != rhs {
            return Err(Error::Geometry(format!(
                "sum norm identity fails at {x}: {lhs} ≠ {rhs}"
            )));
        }
    }
    Ok(sum)
}

/// Builds the facet of the sum generated by `x* = (d_k w_k)` and checks
/// that it is plump. `d` must be monotone plump in `E`; `facets[k]` must be
/// a plump facet functional of `X_k` for every `k` in the support of `d`
/// (entries off the support are ignored).
pub fn compose_sum_face(sum: &SumSpace, d: &Vector, facets: &[Option<Vector>]) -> Result<(Facet, PlumpnessReport)> {
    let n = sum.outer.dim();
    if facets.len() != n {
        return Err(Error::Input(format!("expected {n} component facets, got {}", facets.len())));
    }
    let d = d.abs();
    let mp = is_monotone_plump(&sum.outer, &d)?;
    if !mp.monotone_plump {
        return Err(Error::Input(format!("{d} is not monotone plump in the outer norm")));
    }
    let mut parts = Vec::with_capacity(n);
    for (k, (w, x)) in facets.iter().zip(&sum.components).enumerate() {
        if d[k].is_zero() {
            parts.push(Vector::zeros(x.dim()));
            continue;
        }
        let w = w
            .as_ref()
            .ok_or_else(|| Error::Input(format!("missing facet for component {}", k + 1)))?;
        let facet = x
            .ball()
            .facet_for(w)
            .ok_or_else(|| Error::Input(format!("{w} is not a facet functional of component {}", k + 1)))?;
        if !is_plump_facet(x, &facet)?.plump {
            return Err(Error::Input(format!("facet {w} of component {} is not plump", k + 1)));
        }
        parts.push(w.clone());
    }
    let functional = sum.composite_functional(&d, &parts);
    let facet = sum.ball().facet_for(&functional).ok_or_else(|| {
        Error::Geometry(format!("{functional} does not expose a facet of the sum ball"))
    })?;
    let report = is_plump_facet(&sum.space, &facet)?;
    if !report.plump {
        return Err(Error::TheoremViolation(format!(
            "composite functional {functional} built from plump data has a non-plump facet"
        )));
    }
    Ok((facet, report))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossValidation {
    pub glm: bool,
    pub sum_gl: bool,
    pub agree: bool,
    pub sum_verdict: GlVerdict,
}

impl CrossValidation {
    /// A non-plump facet of the sum, if any.
    pub fn witness(&self) -> Option<&PlumpnessReport> {
        self.sum_verdict.non_plump_facets().next()
    }
}

/// Compares the GL-monotone verdict for `E` with the GL verdict for the
/// sum of the given GL components. Disagreement is a `TheoremViolation`.
pub fn cross_validate(outer: &AbsoluteNormSpace, components: &[PolyhedralSpace], exec: Execution) -> Result<CrossValidation> {
    for (k, c) in components.iter().enumerate() {
        if !is_gl_with(c, exec)?.is_gl {
            return Err(Error::Input(format!("component {} is not a GL-space", k + 1)));
        }
    }
    let glm = is_glm_with(outer, exec, false)?.is_glm;
    let sum = build_e_sum(outer, components)?;
    let sum_verdict = is_gl_with(&sum.space, exec)?;
    let sum_gl = sum_verdict.is_gl;
    if glm != sum_gl {
        return Err(Error::TheoremViolation(format!(
            "outer norm GL-monotone = {glm} but the sum is GL = {sum_gl}"
        )));
    }
    Ok(CrossValidation {
        glm,
        sum_gl,
        agree: true,
        sum_verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cross_polytope, cube, fixture};

    fn abs(name: &str) -> AbsoluteNormSpace {
        validate_absolute(fixture(name).unwrap()).unwrap()
    }

    fn sp(name: &str) -> PolyhedralSpace {
        PolyhedralSpace::new(fixture(name).unwrap())
    }

    fn v(c: &[&str]) -> Vector {
        Vector::from_strs(c)
    }

    #[test]
    fn validation_examples() {
        abs("square");
        abs("hex_tilde");
        abs("diamond");
        assert!(matches!(
            validate_absolute(fixture("hex_lambda(1)").unwrap()),
            Err(Error::NotAbsolute(_))
        ));
        let stretched = SymmetricPolytope::from_vertices(
            2,
            &[v(&["2", "0"]), v(&["-2", "0"]), v(&["0", "1"]), v(&["0", "-1"])],
        )
        .unwrap();
        assert!(matches!(validate_absolute(stretched), Err(Error::NotAbsolute(_))));
    }

    #[test]
    fn monotone_plump_examples() {
        let l1 = abs("diamond");
        let r = is_monotone_plump(&l1, &v(&["1", "1"])).unwrap();
        assert!(r.prefilter_pass && r.monotone_plump && r.vertices_checked > 0);

        let linf = abs("square");
        assert!(is_monotone_plump(&linf, &v(&["1", "0"])).unwrap().monotone_plump);
        assert!(is_monotone_plump(&linf, &v(&["-1", "0"])).unwrap().monotone_plump);

        let h = abs("hex_tilde");
        let r = is_monotone_plump(&h, &v(&["1", "1/2"])).unwrap();
        assert!(!r.prefilter_pass && !r.monotone_plump && r.counterexample.is_none());
        let audited = is_monotone_plump_with(&h, &v(&["1", "1/2"]), true).unwrap();
        let ce = audited.counterexample.expect("audit finds a counterexample");
        assert!(h.space().norm(&ce.a).unwrap().is_one());
        assert!(matches!(find_b(&h, &v(&["1", "1/2"]), &ce.a, &ce.z).unwrap(), BSearch::Infeasible(_)));

        assert!(matches!(is_monotone_plump(&linf, &v(&["1", "1"])), Err(Error::Input(_))));
    }

    #[test]
    fn glm_verdicts() {
        for n in 2..=3 {
            for ball in [cube(n), cross_polytope(n)] {
                let e = validate_absolute(ball).unwrap();
                assert!(is_gl_respecting(&e).unwrap());
            }
        }
        let h = abs("hex_tilde");
        let verdict = is_glm(&h).unwrap();
        assert!(!verdict.is_glm);
        // (0, 1) passes; (1, 1/2) fails.
        assert_eq!(verdict.results.iter().filter(|r| r.monotone_plump).count(), 1);
        let parallel = is_glm_with(&h, Execution::Parallel, true).unwrap();
        assert_eq!(parallel.is_glm, verdict.is_glm);
    }

    #[test]
    fn extended_z_examples() {
        let linf = abs("square");
        let d = v(&["1", "0"]);
        assert!(matches!(
            find_b(&linf, &d, &v(&["1", "1"]), &v(&["-1", "0"])).unwrap(),
            BSearch::Found(_)
        ));
        assert!(extended_z_probe(&linf, &d, &[(v(&["1", "1"]), v(&["-1", "0"]))]).unwrap());

        let l1 = abs("diamond");
        let d = v(&["1", "1"]);
        assert!(extended_z_probe(&l1, &d, &[(v(&["1/2", "1/2"]), v(&["-1/2", "1/2"]))]).unwrap());
        let samples = extended_z_samples(&l1, &d, 15, 7);
        assert!(extended_z_probe(&l1, &d, &samples).unwrap());
        let samples = extended_z_samples(&linf, &v(&["0", "1"]), 15, 8);
        assert!(extended_z_probe(&linf, &v(&["0", "1"]), &samples).unwrap());
        assert!(extended_z_probe(&l1, &d, &[(v(&["1", "1"]), v(&["0", "0"]))]).is_err());
    }

    #[test]
    fn sum_examples() {
        let s = build_e_sum(&abs("square"), &[sp("square"), sp("square")]).unwrap();
        assert_eq!(s.ball(), &cube(4));
        let s = build_e_sum(&abs("diamond"), &[sp("diamond"), sp("diamond")]).unwrap();
        assert_eq!(s.ball(), &cross_polytope(4));
        let s = build_e_sum(&abs("square"), &[sp("hex_tilde"), sp("hex_tilde")]).unwrap();
        assert_eq!(s.ball().facet_functionals().len(), 12);
        assert_eq!(s.ball().vertices().len(), 36);
        assert_eq!(
            s.component_norms(&v(&["1", "1", "0", "2"])).unwrap(),
            v(&["3/2", "2"])
        );

        assert!(matches!(
            build_e_sum(&abs("square"), &[sp("square")]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            build_e_sum(&abs("square"), &[sp("cube3"), sp("square")]),
            Err(Error::UnsupportedDimension { .. })
        ));
    }

    #[test]
    fn composed_faces_are_plump() {
        let s = build_e_sum(&abs("square"), &[sp("square"), sp("square")]).unwrap();
        let (facet, report) = compose_sum_face(&s, &v(&["1", "0"]), &[Some(v(&["1", "0"])), None]).unwrap();
        assert_eq!(facet.functional, v(&["1", "0", "0", "0"]));
        assert_eq!(facet.vertices.len(), 8);
        assert!(report.plump);

        let s = build_e_sum(&abs("diamond"), &[sp("diamond"), sp("diamond")]).unwrap();
        let (_, report) =
            compose_sum_face(&s, &v(&["1", "1"]), &[Some(v(&["1", "1"])), Some(v(&["1", "1"]))]).unwrap();
        assert!(report.plump);

        let s = build_e_sum(&abs("square"), &[sp("hex_tilde"), sp("hex_tilde")]).unwrap();
        let (_, report) = compose_sum_face(&s, &v(&["0", "1"]), &[None, Some(v(&["0", "1"]))]).unwrap();
        assert!(report.plump);

        let h = build_e_sum(&abs("hex_tilde"), &[sp("square"), sp("square")]).unwrap();
        assert!(matches!(
            compose_sum_face(&h, &v(&["1", "1/2"]), &[Some(v(&["1", "0"])), Some(v(&["1", "0"]))]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn cross_validation_cells() {
        let hexes = [sp("hex_tilde"), sp("hex_tilde")];
        let c = cross_validate(&abs("square"), &hexes, Execution::Sequential).unwrap();
        assert!(c.glm && c.sum_gl && c.agree);
        let c = cross_validate(&abs("hex_tilde"), &hexes, Execution::Parallel).unwrap();
        assert!(!c.glm && !c.sum_gl && c.agree);
        assert!(c.witness().is_some());
        let c = cross_validate(&abs("diamond"), &[sp("square"), sp("diamond")], Execution::Parallel).unwrap();
        assert!(c.glm && c.sum_gl);
        assert!(matches!(
            cross_validate(&abs("square"), &[sp("oct_rational"), sp("square")], Execution::Sequential),
            Err(Error::Input(_))
        ));
    }
}
