//! Plain-text point and sphere files.
//!
//! ```text
//! q=5 d=2 kind=points
//! # anything after '#' is ignored
//! 1 2
//! 4 0
//! ```
//!
//! Points carry `d` canonical residues per line; spheres carry `d + 1`
//! (center, then `lambda`). Blank lines are skipped. Line numbers in errors
//! are 1-based.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use fq_incidence::{FieldSpec, PointSet, Space, Sphere, SphereFamily};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Points,
    Spheres,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Points => "points",
            Kind::Spheres => "spheres",
        }
    }
}

/// A parsed file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ingested {
    Points(PointSet),
    Spheres(SphereFamily),
}

impl Ingested {
    pub fn space(&self) -> Space {
        match self {
            Ingested::Points(p) => p.space(),
            Ingested::Spheres(s) => s.space(),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Ingested::Points(_) => Kind::Points,
            Ingested::Spheres(_) => Kind::Spheres,
        }
    }
}

struct Header {
    q: u64,
    d: usize,
    kind: Kind,
}

fn parse_header(text: &str) -> Result<Header, String> {
    let (mut q, mut d, mut kind) = (None, None, None);
    for token in text.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| format!("malformed header field {token:?}"))?;
        let dup = || format!("repeated header field {key:?}");
        match key {
            "q" => {
                let v = value.parse().map_err(|_| format!("bad q {value:?}"))?;
                if q.replace(v).is_some() {
                    return Err(dup());
                }
            }
            "d" => {
                let v = value.parse().map_err(|_| format!("bad d {value:?}"))?;
                if d.replace(v).is_some() {
                    return Err(dup());
                }
            }
            "kind" => {
                let v = match value {
                    "points" => Kind::Points,
                    "spheres" => Kind::Spheres,
                    _ => return Err(format!("unknown kind {value:?}")),
                };
                if kind.replace(v).is_some() {
                    return Err(dup());
                }
            }
            _ => return Err(format!("unknown header field {key:?}")),
        }
    }
    Ok(Header {
        q: q.ok_or("header is missing q")?,
        d: d.ok_or("header is missing d")?,
        kind: kind.ok_or("header is missing kind")?,
    })
}

/// Parses file contents. `origin` only labels error messages.
pub fn parse(text: &str, origin: &Path) -> Result<Ingested, CliError> {
    let err = |line: usize, message: String| CliError::Format {
        path: origin.to_path_buf(),
        line,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header_text) = lines
        .next()
        .ok_or_else(|| err(1, "missing header line".into()))?;
    let header = parse_header(header_text).map_err(|m| err(header_line, m))?;
    let field = FieldSpec::new(header.q).map_err(|e| err(header_line, e.to_string()))?;
    let space = Space::new(field, header.d).map_err(|e| err(header_line, e.to_string()))?;
    let arity = match header.kind {
        Kind::Points => header.d,
        Kind::Spheres => header.d + 1,
    };

    let mut rows: Vec<(usize, Vec<u64>)> = Vec::new();
    for (n, line) in lines {
        let values = line
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| err(n, format!("not a nonnegative integer: {t:?}")))
            })
            .collect::<Result<Vec<u64>, _>>()?;
        if values.len() != arity {
            return Err(err(
                n,
                format!("expected {arity} values, found {}", values.len()),
            ));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= header.q) {
            return Err(err(
                n,
                format!("coordinate {v} out of range for q = {}", header.q),
            ));
        }
        rows.push((n, values));
    }

    let duplicate = |index: usize| err(rows[index].0, format!("duplicate at line {}", rows[index].0));
    Ok(match header.kind {
        Kind::Points => {
            let points = rows.iter().map(|(_, v)| space.point(v).expect("validated"));
            match PointSet::new(space, points) {
                Ok(p) => Ingested::Points(p),
                Err(fq_incidence::Error::DuplicatePoint(i)) => return Err(duplicate(i)),
                Err(e) => return Err(e.into()),
            }
        }
        Kind::Spheres => {
            let spheres = rows.iter().map(|(_, v)| {
                let center = space.point(&v[..header.d]).expect("validated");
                Sphere::new(center, field.elem(v[header.d])).expect("same field")
            });
            match SphereFamily::new(space, spheres) {
                Ok(s) => Ingested::Spheres(s),
                Err(fq_incidence::Error::DuplicateSphere(i)) => return Err(duplicate(i)),
                Err(e) => return Err(e.into()),
            }
        }
    })
}

/// Reads and parses a file from disk.
pub fn ingest(path: impl AsRef<Path>) -> Result<Ingested, CliError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: PathBuf::from(path),
        source,
    })?;
    parse(&text, path)
}

fn header(space: Space, kind: Kind) -> String {
    format!("q={} d={} kind={}\n", space.q(), space.dim(), kind.as_str())
}

pub fn write_points(points: &PointSet) -> String {
    let mut out = header(points.space(), Kind::Points);
    for p in points {
        let row: Vec<String> = p.coords().iter().map(u64::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn write_spheres(spheres: &SphereFamily) -> String {
    let mut out = header(spheres.space(), Kind::Spheres);
    for s in spheres {
        let mut row: Vec<String> = s.center().coords().iter().map(u64::to_string).collect();
        row.push(s.lambda().value().to_string());
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
