use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use toric_core::classgroup::ClassElement;
use toric_core::fan::Cone;
use toric_core::lattice::{IntMatrix, IntVector};

/// Collected results of one command. `serde_json::Map` is ordered by key,
/// so the machine output is stable.
pub struct Report {
    command: &'static str,
    digest: String,
    verdicts: Map<String, Value>,
    witnesses: Map<String, Value>,
    diagnostics: Map<String, Value>,
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, input: &[u8]) -> Self {
        Report {
            command,
            digest: hex::encode(Sha256::digest(input)),
            verdicts: Map::new(),
            witnesses: Map::new(),
            diagnostics: Map::new(),
            lines: Vec::new(),
        }
    }

    pub fn verdict(&mut self, name: &str, value: bool) {
        self.verdicts.insert(name.into(), Value::Bool(value));
    }

    pub fn witness(&mut self, name: &str, value: Value) {
        self.witnesses.insert(name.into(), value);
    }

    pub fn diagnostic(&mut self, name: &str, value: Value) {
        self.diagnostics.insert(name.into(), value);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input_sha256": self.digest,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "diagnostics": self.diagnostics,
        })
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn vector(v: &IntVector) -> Value {
    ints(v.coords())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.nrows()).map(|i| ints(m.row(i))).collect())
}

pub fn class(c: &ClassElement) -> Value {
    json!({ "free": ints(&c.free_part), "torsion": ints(&c.torsion_part) })
}

pub fn cone(c: &Cone) -> Value {
    json!({ "rays": c.rays(), "label": c.label() })
}

pub fn indices(xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|&i| Value::from(i)).collect())
}

/// `[D_i]` with a 1-based index.
pub fn divisor(i: usize) -> String {
    format!("[D{}]", i + 1)
}

/// `Σ coeffs[j]·[D_{basis[j]}]`, e.g. `[D2] + 2[D3]`.
pub fn combination(basis: &[usize], coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (&b, c) in basis.iter().zip(coeffs) {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let neg = c.sign() == num_bigint::Sign::Minus;
        let mag = if neg { -c } else { c.clone() };
        let term = if mag.is_one() {
            divisor(b)
        } else {
            format!("{mag}{}", divisor(b))
        };
        if out.is_empty() {
            out = if neg { format!("-{term}") } else { term };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn labels(cones: &[&Cone]) -> String {
    cones.iter().map(|c| c.label()).collect::<Vec<_>>().join(", ")
}

/// One-line rendering of a 1-based ray permutation, e.g. `ρ1→ρ1, ρ2→ρ3`.
pub fn permutation(perm: &[usize]) -> String {
    perm.iter()
        .enumerate()
        .map(|(i, &j)| format!("ρ{}→ρ{}", i + 1, j + 1))
        .collect::<Vec<_>>()
        .join(", ")
}
