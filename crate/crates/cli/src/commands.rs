use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use glspace::abs_sums::{self, AbsoluteNormSpace};
use glspace::corpus::{self, CorpusKind, CorpusSpec};
use glspace::gl::{self, PlumpnessReport};
use glspace::normed::{plump_target, PolyhedralSpace};
use glspace::planar::{self, PlanarClass};
use glspace::polytope::{self, Representation};
use glspace::{Error, Execution, SymmetricPolytope, Vector};
use serde_json::{json, Value};

use crate::report::{digest, Report};
use crate::{Cli, Command, Format, Repr};

pub struct Output {
    pub stdout: String,
    pub code: i32,
}

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

struct Loaded {
    space: PolyhedralSpace,
    bytes: Vec<u8>,
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn load(path: &Path, max_dim: usize) -> Result<Loaded> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError(format!("{}: not valid UTF-8", path.display())))?;
    let ball = polytope::parse(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    if ball.dim() > max_dim {
        return Err(CliError(format!(
            "{}: dimension {} exceeds --max-dim {max_dim}",
            path.display(),
            ball.dim()
        )));
    }
    Ok(Loaded {
        space: PolyhedralSpace::new(ball),
        bytes,
    })
}

fn repr(r: Repr) -> Representation {
    match r {
        Repr::Vrep => Representation::Vertices,
        Repr::Hrep => Representation::Halfspaces,
    }
}

fn s(v: &impl ToString) -> Value {
    Value::String(v.to_string())
}

fn vecs(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(s).collect())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

pub fn run(cli: &Cli) -> Result<Output> {
    let start = Instant::now();
    let exec = Execution::from_flag(cli.parallel);
    let mut report = match &cli.command {
        Command::CheckGl { file } => check_gl(&load(file, cli.max_dim)?, exec)?,
        Command::Classify2d { file } => classify(&load(file, cli.max_dim)?)?,
        Command::CheckGlm { file, audit } => check_glm(&load(file, cli.max_dim)?, exec, *audit)?,
        Command::CheckGlr { file } => check_glr(&load(file, cli.max_dim)?, exec)?,
        Command::BuildSum {
            outer,
            components,
            out,
            repr: r,
            check,
        } => {
            let outer = load(outer, cli.max_dim)?;
            let comps = components
                .iter()
                .map(|c| load(c, cli.max_dim))
                .collect::<Result<Vec<_>>>()?;
            build_sum(&outer, &comps, out.as_deref(), repr(*r), *check, exec)?
        }
        Command::Audit { file } => audit(&load(file, cli.max_dim)?, exec)?,
        Command::Gen { spec, out, repr: r } => {
            let (report, text) = gen(spec, cli.seed, cli.max_dim, repr(*r))?;
            match out {
                Some(path) => write_file(path, &text)?,
                None if cli.format == Format::Text => {
                    return Ok(Output { stdout: text, code: 0 });
                }
                None => {}
            }
            let mut report = report;
            if out.is_none() {
                report.detail("polytope", Value::String(text));
            }
            report
        }
        Command::Distance { file, point, facet } => distance(&load(file, cli.max_dim)?, point, *facet)?,
    };
    if cli.timing {
        report.set_elapsed(start.elapsed());
    }
    let stdout = match cli.format {
        Format::Text => report.text(),
        Format::Json => report.json(),
    };
    Ok(Output {
        stdout,
        code: report.exit_code(),
    })
}

fn facet_json(index: usize, r: &PlumpnessReport) -> Value {
    let witness = r.witness_record().map(|w| {
        json!({
            "vertex": s(&w.vertex),
            "distance": s(&w.distance),
            "target": s(&w.target),
            "nearest": s(&w.nearest),
        })
    });
    json!({
        "index": index,
        "functional": s(&r.facet.functional),
        "vertices": vecs(&r.facet.vertices),
        "plump": r.plump,
        "witness": witness,
    })
}

fn non_plump_line(index: usize, r: &PlumpnessReport) -> Option<String> {
    r.witness_record().map(|w| {
        format!(
            "non-plump facet #{index} {}, vertex {}: dist {} ≠ {}",
            r.facet.functional, w.vertex, w.distance, w.target
        )
    })
}

fn check_gl(input: &Loaded, exec: Execution) -> Result<Report> {
    let mut rep = Report::new("check-gl", digest(&[&input.bytes]));
    let verdict = gl::is_gl_with(&input.space, exec)?;
    let total = verdict.reports.len();
    rep.verdict = Some(verdict.is_gl);
    rep.say(format!(
        "GL: {}; {}/{total} facets plump",
        if verdict.is_gl { "yes" } else { "no" },
        verdict.plump_count()
    ));
    for (i, r) in verdict.reports.iter().enumerate() {
        if let Some(line) = non_plump_line(i, r) {
            rep.say(line);
        }
    }
    rep.detail("dim", json!(input.space.dim()));
    rep.detail(
        "facets",
        Value::Array(verdict.reports.iter().enumerate().map(|(i, r)| facet_json(i, r)).collect()),
    );
    Ok(rep)
}

fn classify(input: &Loaded) -> Result<Report> {
    let mut rep = Report::new("classify-2d", digest(&[&input.bytes]));
    let class = planar::classify_2d(&input.space)?;
    rep.verdict = Some(class.is_gl());
    match class.witness() {
        Some((a, b)) => {
            let shape = match class {
                PlanarClass::Parallelogram(..) => format!("vertices ±{a}, ±{b}"),
                _ => format!("vertices ±{a}, ±{b}, ±{}", a + b),
            };
            rep.say(format!("class: {}; basis {a}, {b}; {shape}", class.name()));
            rep.detail("witness", json!([s(a), s(b)]));
        }
        None => rep.say(format!("class: {}", class.name())),
    }
    rep.detail("class", json!(class.name()));
    let census = planar::segment_census(&input.space)?;
    let lengths: Vec<String> = census.iter().map(|e| e.length.to_string()).collect();
    rep.say(format!("edge pair lengths: {}", lengths.join(", ")));
    rep.detail("edge_pair_lengths", json!(lengths));
    Ok(rep)
}

fn absolute(input: &Loaded) -> Result<AbsoluteNormSpace> {
    Ok(abs_sums::validate_absolute(input.space.ball().clone())?)
}

fn check_glm(input: &Loaded, exec: Execution, audit: bool) -> Result<Report> {
    let e = absolute(input)?;
    let mut rep = Report::new("check-glm", digest(&[&input.bytes]));
    let verdict = abs_sums::is_glm_with(&e, exec, audit)?;
    rep.verdict = Some(verdict.is_glm);
    let good = verdict.results.iter().filter(|r| r.monotone_plump).count();
    rep.say(format!(
        "GL-monotone: {}; {good}/{} nonnegative extreme dual points monotone plump",
        if verdict.is_glm { "yes" } else { "no" },
        verdict.results.len()
    ));
    let mut items = Vec::new();
    for r in &verdict.results {
        if !r.prefilter_pass {
            rep.say(format!(
                "extreme dual point {} has coordinate outside {{0,±1}}",
                r.functional
            ));
        }
        if let Some(ce) = &r.counterexample {
            rep.say(format!(
                "extreme dual point {}: no admissible b for a = {}, z = {}",
                r.functional, ce.a, ce.z
            ));
        }
        items.push(json!({
            "functional": s(&r.functional),
            "support": r.support.iter().map(|k| k + 1).collect::<Vec<_>>(),
            "prefilter_pass": r.prefilter_pass,
            "monotone_plump": r.monotone_plump,
            "vertices_checked": r.vertices_checked,
            "counterexample": r.counterexample.as_ref().map(|c| json!({
                "a": s(&c.a),
                "z": s(&c.z),
                "farkas": s(&c.farkas),
            })),
        }));
    }
    rep.detail("functionals", Value::Array(items));
    Ok(rep)
}

fn check_glr(input: &Loaded, exec: Execution) -> Result<Report> {
    let mut rep = check_glm(input, exec, false)?;
    rep.command = "check-glr";
    let yes = rep.verdict == Some(true);
    rep.messages[0] = format!(
        "GL-respecting: {} (equivalent to GL-monotone)",
        if yes { "yes" } else { "no" }
    );
    Ok(rep)
}

fn build_sum(
    outer: &Loaded,
    comps: &[Loaded],
    out: Option<&Path>,
    r: Representation,
    check: bool,
    exec: Execution,
) -> Result<Report> {
    let e = absolute(outer)?;
    let mut parts: Vec<&[u8]> = vec![&outer.bytes];
    parts.extend(comps.iter().map(|c| c.bytes.as_slice()));
    let mut rep = Report::new("build-sum", digest(&parts));
    let spaces: Vec<PolyhedralSpace> = comps.iter().map(|c| c.space.clone()).collect();
    let sum = abs_sums::build_e_sum(&e, &spaces)?;
    let ball = sum.ball();
    rep.say(format!(
        "sum: dimension {}, {} vertices, {} facets; norm identity verified on 20 probes",
        ball.dim(),
        ball.vertices().len(),
        ball.facet_functionals().len()
    ));
    rep.detail("dim", json!(ball.dim()));
    rep.detail("vertices", json!(ball.vertices().len()));
    rep.detail("facets", json!(ball.facet_functionals().len()));
    let text = polytope::emit(ball, r);
    match out {
        Some(path) => {
            write_file(path, &text)?;
            rep.say(format!("written to {}", path.display()));
        }
        None => rep.detail("polytope", Value::String(text)),
    }
    if check {
        let verdict = gl::is_gl_with(sum.space(), exec)?;
        rep.verdict = Some(verdict.is_gl);
        rep.say(format!(
            "GL: {}; {}/{} facets plump",
            if verdict.is_gl { "yes" } else { "no" },
            verdict.plump_count(),
            verdict.reports.len()
        ));
        for (i, r) in verdict.reports.iter().enumerate() {
            if let Some(line) = non_plump_line(i, r) {
                rep.say(line);
            }
        }
    }
    Ok(rep)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn audit(input: &Loaded, exec: Execution) -> Result<Report> {
    let space = &input.space;
    let mut rep = Report::new("audit", digest(&[&input.bytes]));
    let verdict = gl::is_gl_with(space, exec)?;
    rep.say(format!(
        "GL: {}; {}/{} facets plump",
        if verdict.is_gl { "yes" } else { "no" },
        verdict.plump_count(),
        verdict.reports.len()
    ));
    let mut all_ok = true;

    let lower = verdict
        .reports
        .iter()
        .all(|r| r.records.iter().all(|w| w.distance >= w.target));
    rep.say(format!("lower bound dist(y,F) ≥ 1 − x*(y): {}", pass(lower)));
    all_ok &= lower;

    let plump: Vec<_> = verdict.plump_facets().map(|r| r.facet.clone()).collect();
    let contained = exec
        .map(&plump, |f| gl::difference_body_contains_section(space, f))
        .into_iter()
        .collect::<std::result::Result<Vec<bool>, Error>>()?;
    let diff_ok = contained.iter().all(|&b| b);
    rep.say(format!(
        "difference body F − F ⊇ B ∩ ker x* on {} plump facets: {}",
        plump.len(),
        pass(diff_ok)
    ));
    all_ok &= diff_ok;

    let mut bodies: Vec<_> = space.facets().iter().map(|f| f.as_polytope()).collect();
    if space.dim() <= 3 {
        bodies.push(space.ball().as_general());
    }
    let rs = bodies
        .iter()
        .filter(|b| b.affine_dim() <= 3)
        .map(gl::rogers_shephard_audit)
        .collect::<std::result::Result<Vec<_>, Error>>()?;
    let rs_ok = rs.iter().all(|r| r.ok);
    rep.say(format!("Rogers–Shephard bound on {} bodies: {}", rs.len(), pass(rs_ok)));
    all_ok &= rs_ok;

    if space.dim() == 2 {
        let census = planar::segment_census(space)?;
        let census_ok = planar::census_bound_holds(&census);
        rep.say(format!("edge census bound: {}", pass(census_ok)));
        all_ok &= census_ok;
        let class = planar::classify_2d(space)?;
        let agree = class.is_gl() == verdict.is_gl;
        rep.say(format!("classification ({}) agrees with GL verdict: {}", class.name(), pass(agree)));
        all_ok &= agree;
    }

    if let Ok(e) = abs_sums::validate_absolute(space.ball().clone()) {
        let glm = abs_sums::is_glm_with(&e, exec, true)?;
        let consistent = glm
            .results
            .iter()
            .all(|r| r.prefilter_pass || r.counterexample.is_some());
        rep.say(format!(
            "absolute norm; GL-monotone: {}; coordinate test consistent with full procedure: {}",
            if glm.is_glm { "yes" } else { "no" },
            pass(consistent)
        ));
        let implication = !glm.is_glm || verdict.is_gl;
        rep.say(format!("GL-monotone implies GL: {}", pass(implication)));
        all_ok &= consistent && implication;
    }
    rep.verdict = Some(all_ok);
    rep.detail("gl", json!(verdict.is_gl));
    Ok(rep)
}

fn gen(spec: &str, seed: u64, max_dim: usize, r: Representation) -> Result<(Report, String)> {
    let kind: CorpusKind = spec.parse()?;
    let cs = CorpusSpec::new(kind, seed);
    let p: SymmetricPolytope = corpus::generate(&cs)?;
    if p.dim() > max_dim {
        return Err(CliError(format!("dimension {} exceeds --max-dim {max_dim}", p.dim())));
    }
    let text = polytope::emit(&p, r);
    let mut rep = Report::new("gen", digest(&[format!("{}#{seed}", cs.kind).as_bytes()]));
    rep.say(format!(
        "generated {} (seed {seed}): dimension {}, {} vertices, {} facets",
        cs.kind,
        p.dim(),
        p.vertices().len(),
        p.facet_functionals().len()
    ));
    Ok((rep, text))
}

fn parse_point(text: &str) -> Result<Vector> {
    let cleaned: String = text
        .chars()
        .filter(|c| *c != '(' && *c != ')')
        .map(|c| if c == ',' { ' ' } else { c })
        .collect();
    Ok(Vector::parse(&cleaned)?)
}

fn distance(input: &Loaded, point: &str, index: usize) -> Result<Report> {
    let space = &input.space;
    let y = parse_point(point)?;
    let facets = space.facets();
    let facet = facets.get(index).ok_or_else(|| {
        CliError(format!("facet index {index} out of range (ball has {} facets)", facets.len()))
    })?;
    let d = space.dist_to_facet(&y, facet)?;
    let target = plump_target(&facet.functional, &y);
    let mut rep = Report::new("distance", digest(&[&input.bytes, point.as_bytes()]));
    rep.say(format!(
        "dist({y}, facet #{index} {}) = {}",
        facet.functional, d.value
    ));
    rep.say(format!("nearest point: {}", d.minimizer));
    rep.say(format!("1 − x*(y) = {target}"));
    rep.detail("distance", s(&d.value));
    rep.detail("nearest", s(&d.minimizer));
    rep.detail("target", s(&target));
    Ok(rep)
}
