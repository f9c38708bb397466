//! Plain-text polytope files.
//!
//! ```text
//! # optional comments
//! polytope
//! dim 2
//! vrep
//! 1 0
//! -1 0
//! 1/2 1
//! ...
//! end
//! ```
//!
//! `hrep` rows are facet functionals `d` meaning `d·x ≤ 1`.

use std::fmt::Write;

use super::SymmetricPolytope;
use crate::error::{Error, Result};
use crate::rational::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    Vertices,
    Halfspaces,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<SymmetricPolytope> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    });

    let (ln, head) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
    if head != "polytope" {
        return Err(perr(ln, format!("expected `polytope`, found `{head}`")));
    }
    let (ln, dim_line) = lines.next().ok_or_else(|| perr(ln, "missing `dim` line"))?;
    let dim: usize = match dim_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["dim", n] => n
            .parse()
            .map_err(|_| perr(ln, format!("bad dimension `{n}`")))?,
        _ => return Err(perr(ln, format!("expected `dim <n>`, found `{dim_line}`"))),
    };
    if dim == 0 {
        return Err(perr(ln, "dimension must be positive"));
    }
    let (ln, kind) = lines
        .next()
        .ok_or_else(|| perr(ln, "missing `vrep`/`hrep` line"))?;
    let repr = match kind {
        "vrep" => Representation::Vertices,
        "hrep" => Representation::Halfspaces,
        other => return Err(perr(ln, format!("expected `vrep` or `hrep`, found `{other}`"))),
    };

    let mut rows = Vec::new();
    let mut last = ln;
    let mut terminated = false;
    for (ln, body) in lines.by_ref() {
        last = ln;
        if body == "end" {
            terminated = true;
            break;
        }
        let row = Vector::parse(body).map_err(|e| perr(ln, e.to_string()))?;
        if row.dim() != dim {
            return Err(perr(
                ln,
                format!("row has {} entries, expected {dim}", row.dim()),
            ));
        }
        rows.push(row);
    }
    if !terminated {
        return Err(perr(last, "missing `end`"));
    }
    if let Some((ln, extra)) = lines.next() {
        return Err(perr(ln, format!("unexpected content after `end`: `{extra}`")));
    }
    match repr {
        Representation::Vertices => SymmetricPolytope::from_vertices(dim, &rows),
        Representation::Halfspaces => SymmetricPolytope::from_halfspaces(dim, &rows),
    }
}

pub fn emit(p: &SymmetricPolytope, repr: Representation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polytope");
    let _ = writeln!(out, "dim {}", p.dim());
    let rows = match repr {
        Representation::Vertices => {
            let _ = writeln!(out, "vrep");
            p.vertices()
        }
        Representation::Halfspaces => {
            let _ = writeln!(out, "hrep");
            p.facet_functionals()
        }
    };
    for r in rows {
        let line: Vec<String> = r.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    let _ = writeln!(out, "end");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEX: &str = "\
# the hexagon with vertices ±(1,0), ±(1/2,1), ±(-1/2,1)
polytope
dim 2
vrep
1 0
-1 0
1/2 1   # top right
-1/2 -1
-1/2 1
1/2 -1
end
";

    #[test]
    fn parses_and_round_trips() {
        let p = parse(HEX).unwrap();
        assert_eq!(p.vertices().len(), 6);
        for repr in [Representation::Vertices, Representation::Halfspaces] {
            assert_eq!(parse(&emit(&p, repr)).unwrap(), p);
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = HEX.replace("1/2 1   # top right", "1/2 x");
        match parse(&bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 7),
            other => panic!("unexpected {other:?}"),
        }
        let short = HEX.replace("-1/2 -1\n", "-1/2\n");
        assert!(matches!(parse(&short), Err(Error::Parse { line: 8, .. })));
        let unterminated = HEX.replace("end\n", "");
        assert!(matches!(parse(&unterminated), Err(Error::Parse { .. })));
        assert!(matches!(parse("polytope\ndim 2\nxrep\nend\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn geometric_errors_pass_through() {
        let asym = "polytope\ndim 2\nvrep\n1 0\n0 1\n-1 0\nend\n";
        assert!(matches!(parse(asym), Err(Error::Symmetry(_))));
    }
}
