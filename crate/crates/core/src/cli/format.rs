//! JSON group files and element-set files.
//!
//! A group file:
//!
//! ```json
//! {
//!   "name": "klein_bottle",
//!   "dimension": 2,
//!   "holonomy_generators": [[[1, 0], [0, -1]]],
//!   "lifts": [["1/2", "0"]],
//!   "expected": {"torsion_free": true, "max_generators": 2}
//! }
//! ```
//!
//! A set file is a JSON array of `{"translation": [...], "holonomy": [[...]]}`
//! objects in the same coordinates as the group file.

use serde::{Deserialize, Serialize};

use crate::crystal::{AffineElement, BasisChange, CrystalGroup};
use crate::linalg::{parse_rational, IntMatrix, RatMatrix, RatVector};

/// Malformed or invalid input, with the offending location.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("field `{field}`: {message}")]
    NotInGroup { field: String, message: String },
    #[error("{0}")]
    Io(String),
}

impl InputError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self::Field { field: field.into(), message: message.into() }
    }

    fn from_json(e: &serde_json::Error) -> Self {
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        Self::Syntax { line: e.line(), column: e.column(), message }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion_free: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_generators: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub dimension: usize,
    pub holonomy_generators: Vec<Vec<Vec<i64>>>,
    pub lifts: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementRecord {
    pub translation: Vec<String>,
    pub holonomy: Vec<Vec<i64>>,
}

fn check_matrix(rows: &[Vec<i64>], n: usize, field: &str) -> Result<IntMatrix, InputError> {
    if rows.len() != n {
        return Err(InputError::field(field, format!("expected {n} rows, found {}", rows.len())));
    }
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(InputError::field(format!("{field}[{i}]"), format!("expected {n} entries, found {}", r.len())));
    }
    let m = IntMatrix::from_rows(rows);
    if !m.is_unimodular() {
        return Err(InputError::field(field, "matrix is not unimodular"));
    }
    Ok(m)
}

fn parse_vector(coords: &[String], n: usize, field: &str) -> Result<RatVector, InputError> {
    if coords.len() != n {
        return Err(InputError::field(field, format!("expected {n} coordinates, found {}", coords.len())));
    }
    let values = coords
        .iter()
        .enumerate()
        .map(|(i, c)| parse_rational(c, true).map_err(|m| InputError::field(format!("{field}[{i}]"), m)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RatVector::new(values))
}

/// A parsed group in file coordinates together with its normalized form.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub file: GroupFile,
    /// The group with translation subgroup `Z^n`.
    pub group: CrystalGroup,
    /// From file coordinates (old) to normalized coordinates (new).
    pub change: BasisChange,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::from_json(&e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group files serialize")
    }

    /// Checks shapes and unimodularity, enumerates the holonomy and
    /// normalizes the lattice.
    pub fn load(self, cap: usize) -> Result<LoadedGroup, InputError> {
        let n = self.dimension;
        if n == 0 {
            return Err(InputError::field("dimension", "must be at least 1"));
        }
        if self.holonomy_generators.len() != self.lifts.len() {
            return Err(InputError::field(
                "lifts",
                format!("{} lifts for {} holonomy generators", self.lifts.len(), self.holonomy_generators.len()),
            ));
        }
        let gens = self
            .holonomy_generators
            .iter()
            .enumerate()
            .map(|(i, m)| check_matrix(m, n, &format!("holonomy_generators[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let lifts = self
            .lifts
            .iter()
            .enumerate()
            .map(|(i, v)| parse_vector(v, n, &format!("lifts[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let raw = CrystalGroup::from_generators(Some(self.name.clone()), n, &gens, lifts, cap)
            .map_err(|e| InputError::field("holonomy_generators", e.to_string()))?;
        let (group, change) = raw.normalize_lattice().map_err(|e| InputError::field("lifts", e.to_string()))?;
        Ok(LoadedGroup { file: self, group, change })
    }
}

impl LoadedGroup {
    /// An element in file coordinates.
    pub fn to_record(&self, e: &AffineElement) -> ElementRecord {
        let m = self.group.holonomy().element(e.holonomy);
        let old = self.change.forward.mul(&RatMatrix::from_int(m)).mul(&self.change.inverse);
        let old = old.to_int().expect("holonomy stays integral in file coordinates");
        ElementRecord {
            translation: self.change.to_old(&e.translation).to_strings(),
            holonomy: old.to_i64_rows().expect("holonomy entries fit in i64"),
        }
    }

    /// Reads an element given in file coordinates; the holonomy part must be
    /// an element of the holonomy group.
    pub fn from_record(&self, r: &ElementRecord, field: &str) -> Result<AffineElement, InputError> {
        let n = self.group.dim();
        let rows = &r.holonomy;
        if rows.len() != n || rows.iter().any(|row| row.len() != n) {
            return Err(InputError::field(format!("{field}.holonomy"), format!("expected a {n}x{n} matrix")));
        }
        let m = RatMatrix::from_int(&IntMatrix::from_rows(rows));
        let new = self.change.inverse.mul(&m).mul(&self.change.forward).to_int();
        let idx = new.and_then(|m| self.group.holonomy().index_of(&m)).ok_or_else(|| InputError::NotInGroup {
            field: format!("{field}.holonomy"),
            message: "matrix is not in the holonomy group".into(),
        })?;
        let t = parse_vector(&r.translation, n, &format!("{field}.translation"))?;
        Ok(AffineElement::new(self.change.to_new(&t), idx))
    }

    pub fn parse_set(&self, text: &str) -> Result<Vec<AffineElement>, InputError> {
        let records: Vec<ElementRecord> = serde_json::from_str(text).map_err(|e| InputError::from_json(&e))?;
        records.iter().enumerate().map(|(i, r)| self.from_record(r, &format!("[{i}]"))).collect()
    }

    pub fn set_to_json(&self, set: &[AffineElement]) -> String {
        let records: Vec<ElementRecord> = set.iter().map(|e| self.to_record(e)).collect();
        serde_json::to_string_pretty(&records).expect("records serialize")
    }
}
