//! Deterministic test polytopes: named fixtures and seeded random bodies.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polytope::SymmetricPolytope;
use crate::rational::{int, parse_rational, rat, Rational, Vector};

pub const FIXTURE_NAMES: &[&str] = &[
    "square",
    "diamond",
    "hex_tilde",
    "hex_lambda(<q>)",
    "oct_rational",
    "cube3",
    "crosspoly3",
    "prism_hex3",
];

const MAX_ATTEMPTS: usize = 200_000;

fn symmetric_closure(points: &[Vector]) -> Vec<Vector> {
    points.iter().flat_map(|p| [p.clone(), -p]).collect()
}

fn from_reps(dim: usize, reps: &[Vector]) -> SymmetricPolytope {
    SymmetricPolytope::from_vertices(dim, &symmetric_closure(reps)).expect("valid fixture")
}

/// Hexagon with vertices `±(1,0), ±(0,1), ±(λ,λ)`, for `λ ∈ (1/2, 1]`.
pub fn hex_lambda(lambda: &Rational) -> Result<SymmetricPolytope> {
    if !(lambda > &rat(1, 2) && lambda <= &int(1)) {
        return Err(Error::Input(format!(
            "hexagon parameter {lambda} outside (1/2, 1]"
        )));
    }
    Ok(from_reps(
        2,
        &[
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[0, 1]),
            Vector::new(vec![lambda.clone(), lambda.clone()]),
        ],
    ))
}

/// The hexagon `±(1,0), ±(1/2,1), ±(−1/2,1)`, unit ball of the norm
/// `max{|a_2|, |a_1| + |a_2|/2}`.
pub fn hex_tilde() -> SymmetricPolytope {
    from_reps(
        2,
        &[
            Vector::from_strs(&["1", "0"]),
            Vector::from_strs(&["1/2", "1"]),
            Vector::from_strs(&["-1/2", "1"]),
        ],
    )
}

pub fn cube(dim: usize) -> SymmetricPolytope {
    let pts: Vec<Vector> = (0..1usize << dim)
        .map(|mask| {
            (0..dim)
                .map(|k| if mask >> k & 1 == 1 { int(1) } else { int(-1) })
                .collect()
        })
        .collect();
    SymmetricPolytope::from_vertices(dim, &pts).expect("cube")
}

pub fn cross_polytope(dim: usize) -> SymmetricPolytope {
    let reps: Vec<Vector> = (0..dim).map(|k| Vector::unit(dim, k)).collect();
    from_reps(dim, &reps)
}

/// Looks up a named fixture. `hex_lambda` takes its parameter as
/// `hex_lambda(3/4)` or `hex_lambda:3/4`.
pub fn fixture(name: &str) -> Result<SymmetricPolytope> {
    let name = name.trim();
    if let Some(arg) = name
        .strip_prefix("hex_lambda(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| name.strip_prefix("hex_lambda:"))
    {
        return hex_lambda(&parse_rational(arg)?);
    }
    match name {
        "square" => Ok(cube(2)),
        "diamond" => Ok(cross_polytope(2)),
        "hex_tilde" => Ok(hex_tilde()),
        "oct_rational" => Ok(from_reps(
            2,
            &[
                Vector::from_strs(&["1", "0"]),
                Vector::from_strs(&["0", "1"]),
                Vector::from_strs(&["3/4", "3/4"]),
                Vector::from_strs(&["3/4", "-3/4"]),
            ],
        )),
        "cube3" => Ok(cube(3)),
        "crosspoly3" => Ok(cross_polytope(3)),
        "prism_hex3" => {
            let pts: Vec<Vector> = hex_tilde()
                .vertices()
                .iter()
                .flat_map(|v| [v.concat(&Vector::from_ints(&[1])), v.concat(&Vector::from_ints(&[-1]))])
                .collect();
            SymmetricPolytope::from_vertices(3, &pts)
        }
        other => Err(Error::Input(format!(
            "unknown fixture `{other}` (known: {})",
            FIXTURE_NAMES.join(", ")
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    Fixture(String),
    /// Centrally symmetric polygon with the given number of antipodal vertex
    /// pairs (2..=6).
    Polygon { pairs: usize },
    /// Centrally symmetric 3-polytope with the given number of vertex pairs
    /// (3..=6).
    Polytope3 { pairs: usize },
    /// Random invertible integer linear image of a fixture.
    LinearImage(String),
    /// Absolute (coordinate-sign invariant) polyhedral norm on `R^dim` with
    /// unit basis vectors.
    Absolute { dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub seed: u64,
    /// Coordinates are drawn from the grid `(1/denominator) Z`.
    pub denominator: u32,
}

impl CorpusSpec {
    pub fn new(kind: CorpusKind, seed: u64) -> Self {
        CorpusSpec {
            kind,
            seed,
            denominator: 16,
        }
    }
}

impl FromStr for CorpusKind {
    type Err = Error;

    /// `polygon:<k>`, `polytope3:<k>`, `image:<fixture>`, `absolute:<n>`, or
    /// a fixture name.
    fn from_str(s: &str) -> Result<Self> {
        let count = |arg: &str| -> Result<usize> {
            arg.parse()
                .map_err(|_| Error::Input(format!("bad count `{arg}` in `{s}`")))
        };
        Ok(match s.split_once(':') {
            Some(("polygon", k)) => CorpusKind::Polygon { pairs: count(k)? },
            Some(("polytope3", k)) => CorpusKind::Polytope3 { pairs: count(k)? },
            Some(("image", base)) => CorpusKind::LinearImage(base.to_string()),
            Some(("absolute", n)) => CorpusKind::Absolute { dim: count(n)? },
            _ => {
                fixture(s)?;
                CorpusKind::Fixture(s.to_string())
            }
        })
    }
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusKind::Fixture(n) => write!(f, "{n}"),
            CorpusKind::Polygon { pairs } => write!(f, "polygon:{pairs}"),
            CorpusKind::Polytope3 { pairs } => write!(f, "polytope3:{pairs}"),
            CorpusKind::LinearImage(n) => write!(f, "image:{n}"),
            CorpusKind::Absolute { dim } => write!(f, "absolute:{dim}"),
        }
    }
}

pub fn generate(spec: &CorpusSpec) -> Result<SymmetricPolytope> {
    match &spec.kind {
        CorpusKind::Fixture(name) => fixture(name),
        CorpusKind::Polygon { pairs } => random_symmetric_polygon(*pairs, spec.seed, spec.denominator),
        CorpusKind::Polytope3 { pairs } => random_symmetric_polytope3(*pairs, spec.seed, spec.denominator),
        CorpusKind::LinearImage(base) => random_linear_image(&fixture(base)?, spec.seed),
        CorpusKind::Absolute { dim } => random_absolute_norm(*dim, spec.seed, spec.denominator),
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn cross(a: &Vector, b: &Vector) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn in_upper_half(p: &Vector) -> bool {
    p[1].is_positive() || (p[1].is_zero() && p[0].is_positive())
}

/// Random centrally symmetric convex polygon with exactly `pairs` antipodal
/// vertex pairs. Candidates are grid points in an annulus, ordered by angle
/// with exact cross products; non-convex draws are rejected.
pub fn random_symmetric_polygon(pairs: usize, seed: u64, denominator: u32) -> Result<SymmetricPolytope> {
    if !(2..=6).contains(&pairs) {
        return Err(Error::Input(format!("polygon vertex pairs must be in 2..=6, got {pairs}")));
    }
    let den = denominator.max(4) as i64;
    let mut rng = rng_for(seed, pairs as u64);
    let inner = (den * 13 / 16).pow(2);
    for _ in 0..MAX_ATTEMPTS {
        let mut reps: Vec<Vector> = Vec::with_capacity(pairs);
        while reps.len() < pairs {
            let (i, j) = (rng.gen_range(-den..=den), rng.gen_range(0..=den));
            let r2 = i * i + j * j;
            if r2 < inner || r2 > den * den {
                continue;
            }
            let p = Vector::new(vec![rat(i, den), rat(j, den)]);
            if in_upper_half(&p) {
                reps.push(p);
            }
        }
        reps.sort_by(|a, b| cross(b, a).cmp(&Rational::zero()));
        if reps.windows(2).any(|w| cross(&w[0], &w[1]).is_zero()) {
            continue;
        }
        let mut ring = reps.clone();
        ring.extend(reps.iter().map(|p| -p));
        let n = ring.len();
        let convex = (0..n).all(|i| {
            let a = &ring[i];
            let b = &ring[(i + 1) % n];
            let c = &ring[(i + 2) % n];
            cross(&(b - a), &(c - b)).is_positive()
        });
        if !convex {
            continue;
        }
        let p = SymmetricPolytope::from_vertices(2, &ring)?;
        debug_assert_eq!(p.vertices().len(), 2 * pairs);
        return Ok(p);
    }
    Err(Error::Geometry(format!(
        "no convex polygon with {pairs} vertex pairs after {MAX_ATTEMPTS} attempts"
    )))
}

/// Random centrally symmetric 3-polytope whose `2·pairs` points are all
/// vertices.
pub fn random_symmetric_polytope3(pairs: usize, seed: u64, denominator: u32) -> Result<SymmetricPolytope> {
    if !(3..=6).contains(&pairs) {
        return Err(Error::Input(format!("3-polytope vertex pairs must be in 3..=6, got {pairs}")));
    }
    let den = denominator.max(4) as i64;
    let mut rng = rng_for(seed, 0x3d00 + pairs as u64);
    let inner = (den * 10 / 16).pow(2);
    for _ in 0..MAX_ATTEMPTS {
        let mut reps = Vec::with_capacity(pairs);
        while reps.len() < pairs {
            let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-den..=den)).collect();
            let r2: i64 = c.iter().map(|x| x * x).sum();
            if r2 < inner || r2 > den * den {
                continue;
            }
            reps.push(Vector::new(c.iter().map(|&x| rat(x, den)).collect()));
        }
        let pts = symmetric_closure(&reps);
        match SymmetricPolytope::from_vertices(3, &pts) {
            Ok(p) if p.vertices().len() == 2 * pairs => return Ok(p),
            _ => continue,
        }
    }
    Err(Error::Geometry(format!(
        "no 3-polytope with {pairs} vertex pairs after {MAX_ATTEMPTS} attempts"
    )))
}

/// Image of `base` under a random invertible integer matrix with entries in
/// `[-2, 2]`.
pub fn random_linear_image(base: &SymmetricPolytope, seed: u64) -> Result<SymmetricPolytope> {
    let n = base.dim();
    let mut rng = rng_for(seed, 0x11);
    loop {
        let m: Vec<Vector> = (0..n)
            .map(|_| (0..n).map(|_| int(rng.gen_range(-2..=2))).collect())
            .collect();
        if crate::linalg::rank(&m) == n {
            return base.linear_image(&m);
        }
    }
}

/// Random absolute polyhedral norm on `R^dim`: the hull of all sign flips of
/// the basis vectors and of one to three grid points in `(0, 1]^dim` lying
/// outside the cross-polytope.
pub fn random_absolute_norm(dim: usize, seed: u64, denominator: u32) -> Result<SymmetricPolytope> {
    if !(2..=3).contains(&dim) {
        return Err(Error::Input(format!("absolute norms supported for dim 2..=3, got {dim}")));
    }
    let den = denominator.max(2) as i64;
    let mut rng = rng_for(seed, 0xab5 + dim as u64);
    for _ in 0..MAX_ATTEMPTS {
        let count = rng.gen_range(1..=3);
        let mut seeds: Vec<Vector> = (0..dim).map(|k| Vector::unit(dim, k)).collect();
        for _ in 0..count {
            let c: Vec<i64> = (0..dim).map(|_| rng.gen_range(1..=den)).collect();
            if c.iter().sum::<i64>() <= den {
                continue;
            }
            seeds.push(Vector::new(c.iter().map(|&x| rat(x, den)).collect()));
        }
        if seeds.len() == dim {
            continue;
        }
        let mut pts = Vec::new();
        for s in &seeds {
            for mask in 0..1usize << dim {
                let flipped: Vector = (0..dim)
                    .map(|k| if mask >> k & 1 == 1 { -s[k].clone() } else { s[k].clone() })
                    .collect();
                pts.push(flipped);
            }
        }
        if let Ok(p) = SymmetricPolytope::from_vertices(dim, &pts) {
            let has_unit = (0..dim).all(|k| p.vertices().contains(&Vector::unit(dim, k)));
            if has_unit && p.vertices().len() > 2 * dim {
                return Ok(p);
            }
        }
    }
    Err(Error::Geometry("no absolute norm found".into()))
}

/// The first `count` seeded absolute norms on `R^dim` (seeds counted up
/// from `seed`) whose dual ball has a nonnegative extreme point with a
/// coordinate outside `{0, 1}`.
pub fn fractional_absolute_norms(dim: usize, count: usize, seed: u64) -> Result<Vec<(u64, SymmetricPolytope)>> {
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        let p = random_absolute_norm(dim, s, 8)?;
        let fractional = p.facet_functionals().iter().any(|d| {
            d.iter().all(|c| !c.is_negative()) && d.iter().any(|c| !c.is_zero() && !c.is_one())
        });
        if fractional {
            out.push((s, p));
        }
        s += 1;
        if s - seed > 10_000 {
            return Err(Error::Geometry("no absolute norm with fractional dual vertices".into()));
        }
    }
    Ok(out)
}

/// Mixed planar corpus: linear images of the square and of the
/// affine-regular hexagon, plus random polygons with 2 to 6 vertex pairs.
pub fn polygon_corpus(count: usize, seed: u64) -> Result<Vec<SymmetricPolytope>> {
    (0..count)
        .map(|i| {
            let s = seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
            let kind = match i % 7 {
                0 => CorpusKind::LinearImage("square".into()),
                1 => CorpusKind::LinearImage("hex_lambda(1)".into()),
                r => CorpusKind::Polygon { pairs: r },
            };
            generate(&CorpusSpec::new(kind, s))
        })
        .collect()
}

/// Seeded polygons with 4–6 vertex pairs.
pub fn many_sided_polygons(count: usize, seed: u64) -> Result<Vec<SymmetricPolytope>> {
    (0..count)
        .map(|i| {
            let s = seed.wrapping_mul(7_919).wrapping_add(i as u64);
            random_symmetric_polygon(4 + i % 3, s, 16)
        })
        .collect()
}

/// Whether every standard basis vector has norm one.
pub fn is_unit_basis_normed(p: &SymmetricPolytope) -> bool {
    (0..p.dim()).all(|k| {
        let e = Vector::unit(p.dim(), k);
        p.facet_functionals()
            .iter()
            .map(|d| d.dot(&e))
            .max()
            .is_some_and(|m| m.is_one())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_match_their_definitions() {
        let h = fixture("hex_tilde").unwrap();
        let mut expected = symmetric_closure(&[
            Vector::from_strs(&["1", "0"]),
            Vector::from_strs(&["1/2", "1"]),
            Vector::from_strs(&["-1/2", "1"]),
        ]);
        expected.sort();
        assert_eq!(h.vertices(), &expected[..]);

        let l = fixture("hex_lambda(3/4)").unwrap();
        let mut expected = symmetric_closure(&[
            Vector::from_strs(&["1", "0"]),
            Vector::from_strs(&["0", "1"]),
            Vector::from_strs(&["3/4", "3/4"]),
        ]);
        expected.sort();
        assert_eq!(l.vertices(), &expected[..]);
        assert_eq!(fixture("hex_lambda:3/4").unwrap(), l);

        assert_eq!(fixture("square").unwrap().vertices().len(), 4);
        assert_eq!(fixture("oct_rational").unwrap().vertices().len(), 8);
        assert_eq!(fixture("cube3").unwrap().facet_functionals().len(), 6);
        assert_eq!(fixture("crosspoly3").unwrap().facet_functionals().len(), 8);
        assert_eq!(fixture("prism_hex3").unwrap().vertices().len(), 12);
        assert!(fixture("dodecahedron").is_err());
        assert!(fixture("hex_lambda(1/2)").is_err());
    }

    #[test]
    fn parallelograms_from_two_pairs() {
        let p = random_symmetric_polygon(2, 1, 16).unwrap();
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn generation_is_deterministic() {
        for k in 2..=6 {
            let a = random_symmetric_polygon(k, 42, 16).unwrap();
            let b = random_symmetric_polygon(k, 42, 16).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.vertices().len(), 2 * k);
            assert!(a.check_invariants());
        }
        let a = random_symmetric_polytope3(5, 3, 16).unwrap();
        assert_eq!(a, random_symmetric_polytope3(5, 3, 16).unwrap());
        assert!(a.check_invariants());
    }

    #[test]
    fn absolute_norms_are_flip_closed_with_unit_basis() {
        for seed in 0..4 {
            let p = random_absolute_norm(2, seed, 8).unwrap();
            assert!(is_unit_basis_normed(&p));
            for v in p.vertices() {
                let flipped = Vector::new(vec![-v[0].clone(), v[1].clone()]);
                assert!(p.vertices().contains(&flipped));
            }
        }
    }

    #[test]
    fn kinds_parse_and_print() {
        for s in ["polygon:4", "polytope3:5", "image:square", "absolute:3", "hex_tilde"] {
            let k: CorpusKind = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        assert!("polygon:x".parse::<CorpusKind>().is_err());
        assert!("nonsense".parse::<CorpusKind>().is_err());
    }
}
