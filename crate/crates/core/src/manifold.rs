//! Manifold data files.
//!
//! A file carries the dual vertices of the norm ball, and per fibered face
//! its functional, its Teichmüller polynomial, the cubes to census and,
//! for cusped manifolds, optional boundary functionals. Rationals are
//! strings (`"1/4"`), so a file round-trips exactly.

use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::conegeom::{FiberedFace, NormData};
use crate::dilatation::TeichPoly;
use crate::error::{Error, Result};
use crate::lattice::CubeRegion;
use crate::rational::parse_rational;

/// Environment variable naming the fixture directory.
pub const DATA_DIR_ENV: &str = "FIBERED_CENSUS_DATA";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldFile {
    pub name: String,
    pub closed: bool,
    pub b1: usize,
    pub dual_vertices: Vec<Vec<i64>>,
    pub faces: Vec<FaceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceEntry {
    pub psi: Vec<i64>,
    pub teich_poly: Vec<TermEntry>,
    pub cubes: Vec<CubeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_functionals: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub exponents: Vec<i64>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeEntry {
    pub center: Vec<String>,
    pub radius: String,
}

impl ManifoldFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Canonical text: sorted keys, two-space indent, short containers on
    /// one line, trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("manifold files serialize");
        let mut out = String::new();
        write_value(&mut out, &value, 0, 0);
        out.push('\n');
        out
    }
}

const WIDTH: usize = 80;

fn compact(value: &Value) -> String {
    match value {
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(compact).collect();
            format!("[{}]", inner.join(", "))
        }
        Value::Object(map) => {
            let inner: Vec<String> = map
                .iter()
                .map(|(k, v)| format!("{}: {}", Value::String(k.clone()), compact(v)))
                .collect();
            format!("{{{}}}", inner.join(", "))
        }
        scalar => scalar.to_string(),
    }
}

/// `used` is the width already taken on the current line.
fn write_value(out: &mut String, value: &Value, indent: usize, used: usize) {
    let flat = compact(value);
    let is_container = matches!(value, Value::Array(_) | Value::Object(_));
    if !is_container || used + flat.len() <= WIDTH {
        out.push_str(&flat);
        return;
    }
    let pad = " ".repeat(indent + 2);
    match value {
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, item, indent + 2, indent + 2);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                let key = format!("{}: ", Value::String(k.clone()));
                out.push_str(&pad);
                out.push_str(&key);
                write_value(out, v, indent + 2, indent + 2 + key.len());
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        _ => unreachable!(),
    }
}

/// One validated face.
#[derive(Debug, Clone)]
pub struct Face {
    pub face: FiberedFace,
    pub theta: TeichPoly,
    pub cubes: Vec<CubeRegion>,
    pub boundary_functionals: Option<Vec<Vec<i64>>>,
}

/// A validated manifold file.
#[derive(Debug, Clone)]
pub struct Manifold {
    pub file: ManifoldFile,
    pub norm: NormData,
    pub faces: Vec<Face>,
}

fn at(location: &str, err: Error) -> Error {
    match err {
        Error::Validation {
            location: inner,
            invariant,
        } => Error::validation(format!("{location}.{inner}"), invariant),
        other => Error::validation(location, other.to_string()),
    }
}

fn parse_rat(location: String, text: &str) -> Result<BigRational> {
    parse_rational(text).map_err(|e| Error::validation(location, format!("not a rational: {e}")))
}

impl Manifold {
    pub fn from_file(file: ManifoldFile) -> Result<Self> {
        if file.name.trim().is_empty() {
            return Err(Error::validation("name", "name must be nonempty"));
        }
        let norm = NormData::new(file.b1, file.dual_vertices.clone())?;
        if file.closed {
            norm.check_even_on_samples()?;
        }
        if file.faces.is_empty() {
            return Err(Error::validation(
                "faces",
                "at least one fibered face is required",
            ));
        }
        let mut faces = Vec::with_capacity(file.faces.len());
        for (i, entry) in file.faces.iter().enumerate() {
            let loc = format!("faces[{i}]");
            if file.faces[..i].iter().any(|f| f.psi == entry.psi) {
                return Err(Error::validation(
                    format!("{loc}.psi"),
                    "duplicate face functional",
                ));
            }
            let face = FiberedFace::new(&norm, entry.psi.clone()).map_err(|e| at(&loc, e))?;
            let theta = TeichPoly::new(
                file.b1,
                entry
                    .teich_poly
                    .iter()
                    .map(|t| (t.exponents.clone(), t.coeff))
                    .collect(),
            )
            .map_err(|e| at(&loc, e))?;
            let mut cubes = Vec::with_capacity(entry.cubes.len());
            for (j, cube) in entry.cubes.iter().enumerate() {
                let cloc = format!("{loc}.cubes[{j}]");
                let center = cube
                    .center
                    .iter()
                    .enumerate()
                    .map(|(k, c)| parse_rat(format!("{cloc}.center[{k}]"), c))
                    .collect::<Result<Vec<_>>>()?;
                let radius = parse_rat(format!("{cloc}.radius"), &cube.radius)?;
                cubes.push(CubeRegion::new(&norm, &face, center, radius).map_err(|e| at(&cloc, e))?);
            }
            if let Some(functionals) = &entry.boundary_functionals {
                let bloc = format!("{loc}.boundary_functionals");
                if file.closed {
                    return Err(Error::validation(
                        bloc,
                        "closed manifolds have no boundary functionals",
                    ));
                }
                for (k, b) in functionals.iter().enumerate() {
                    if b.len() != file.b1 {
                        return Err(Error::validation(
                            format!("{bloc}[{k}]"),
                            format!(
                                "dimension mismatch: expected length {}, found {}",
                                file.b1,
                                b.len()
                            ),
                        ));
                    }
                }
                // (norm - punctures) must be even on the cone, where norm = psi.
                let odd = (0..file.b1).any(|c| functionals.iter().map(|b| b[c]).sum::<i64>() % 2 != 0);
                if odd {
                    return Err(Error::validation(
                        bloc,
                        "boundary parity violated: the functionals must sum to an even vector",
                    ));
                }
            }
            faces.push(Face {
                face,
                theta,
                cubes,
                boundary_functionals: entry.boundary_functionals.clone(),
            });
        }
        Ok(Manifold { file, norm, faces })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(ManifoldFile::from_json(text)?)
    }

    pub fn name(&self) -> &str {
        &self.file.name
    }

    pub fn is_closed(&self) -> bool {
        self.file.closed
    }

    pub fn b1(&self) -> usize {
        self.file.b1
    }
}

/// Reads, parses and validates a manifold file. Relative paths that do not
/// exist as given are also looked up in [`data_dir`].
pub fn load(path: impl AsRef<Path>) -> Result<Manifold> {
    let path = resolve(path.as_ref());
    let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Manifold::from_json(&text)
}

/// The fixture directory: `$FIBERED_CENSUS_DATA` if set, else the `data`
/// directory of the source tree.
pub fn data_dir() -> PathBuf {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"),
    }
}

pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    let candidate = data_dir().join(path);
    if candidate.exists() {
        candidate
    } else {
        path.to_path_buf()
    }
}

/// Every `*.json` file in the fixture directory, sorted by name.
pub fn bundled_fixtures() -> Result<Vec<PathBuf>> {
    let dir = data_dir();
    let mut out: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    out.sort();
    Ok(out)
}
