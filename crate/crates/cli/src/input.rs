use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use toric_core::fan::Fan;
use toric_core::lattice::IntVector;
use toric_core::polytope::LatticePolytope;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: field `{field}` (line {line}, column {column}): {message}")]
    Parse {
        path: PathBuf,
        field: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: field `{field}`: {message}")]
    Invalid {
        path: PathBuf,
        field: String,
        message: String,
    },
    #[error("{path}: {source}")]
    Core {
        path: PathBuf,
        source: toric_core::Error,
    },
}

/// Fan file: rays as integer arrays, maximal cones as 0-based ray indices.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub complete: bool,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

/// A loaded input file with its raw bytes (for the digest).
pub struct Loaded<T> {
    pub doc: T,
    pub bytes: Vec<u8>,
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<Loaded<T>, InputError> {
    let bytes = std::fs::read(path).map_err(|source| InputError::Io {
        path: path.to_owned(),
        source,
    })?;
    let mut de = serde_json::Deserializer::from_slice(&bytes);
    let doc: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        InputError::Parse {
            path: path.to_owned(),
            field,
            line: inner.line(),
            column: inner.column(),
            message: inner.to_string(),
        }
    })?;
    Ok(Loaded { doc, bytes })
}

fn check_dims(path: &Path, field: &str, dim: usize, vs: &[Vec<i64>]) -> Result<(), InputError> {
    if dim == 0 {
        return Err(InputError::Invalid {
            path: path.to_owned(),
            field: "dim".into(),
            message: "dimension must be positive".into(),
        });
    }
    for (i, v) in vs.iter().enumerate() {
        if v.len() != dim {
            return Err(InputError::Invalid {
                path: path.to_owned(),
                field: format!("{field}[{i}]"),
                message: format!("expected {dim} coordinates, found {}", v.len()),
            });
        }
    }
    Ok(())
}

pub fn load_fan(path: &Path) -> Result<(Fan, Vec<u8>), InputError> {
    let Loaded { doc, bytes } = load::<FanDoc>(path)?;
    check_dims(path, "rays", doc.dim, &doc.rays)?;
    let rays = doc.rays.iter().map(|r| IntVector::from(r.as_slice())).collect();
    let fan = Fan::new(doc.dim, rays, doc.max_cones.clone()).map_err(|source| InputError::Core {
        path: path.to_owned(),
        source,
    })?;
    Ok((fan.assert_complete(doc.complete), bytes))
}

pub fn load_polytope(path: &Path) -> Result<(LatticePolytope, Vec<u8>), InputError> {
    let Loaded { doc, bytes } = load::<PolytopeDoc>(path)?;
    check_dims(path, "vertices", doc.dim, &doc.vertices)?;
    let vertices = doc.vertices.iter().map(|r| IntVector::from(r.as_slice())).collect();
    let p = LatticePolytope::new(vertices).map_err(|source| InputError::Core {
        path: path.to_owned(),
        source,
    })?;
    Ok((p, bytes))
}

/// Serializes a fan back into the input format.
pub fn fan_doc(f: &Fan) -> Option<FanDoc> {
    let rays = f
        .rays()
        .iter()
        .map(|r| r.generator().to_i64s())
        .collect::<Option<Vec<_>>>()?;
    Some(FanDoc {
        note: None,
        dim: f.dim(),
        rays,
        max_cones: f.max_cones().iter().map(|c| c.rays().to_vec()).collect(),
        complete: f.complete_asserted(),
    })
}

/// Fan document with one ray or cone per line.
pub fn render_fan_doc(doc: &FanDoc) -> String {
    let arr = |v: &[String]| format!("[{}]", v.join(", "));
    let rows = |xs: Vec<String>| format!("[\n    {}\n  ]", xs.join(",\n    "));
    let rays = doc
        .rays
        .iter()
        .map(|r| arr(&r.iter().map(ToString::to_string).collect::<Vec<_>>()))
        .collect();
    let cones = doc
        .max_cones
        .iter()
        .map(|c| arr(&c.iter().map(ToString::to_string).collect::<Vec<_>>()))
        .collect();
    let mut out = format!(
        "{{\n  \"dim\": {},\n  \"rays\": {},\n  \"max_cones\": {}",
        doc.dim,
        rows(rays),
        rows(cones)
    );
    if doc.complete {
        out.push_str(",\n  \"complete\": true");
    }
    out.push_str("\n}");
    out
}
