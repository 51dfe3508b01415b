//! JSON configuration files.
//!
//! ```json
//! {"field": "rational", "points": [["0", "0", "1"], ["3", "1/2", "1"]], "metadata": {"seed": 1}}
//! ```
//!
//! `field` is `"rational"` or `{"prime": p}`; every coordinate is an exact
//! string `"num"` or `"num/den"`.

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::kernel::{Field, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime { prime: u64 },
}

impl FieldSpec {
    pub fn of(field: Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Named("rational".into()),
            Field::Prime(p) => FieldSpec::Prime { prime: p },
        }
    }

    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldSpec::Named(s) if s == "rational" => Ok(Field::Rational),
            FieldSpec::Named(s) => Err(GeomError::Parse(format!("unknown field {s:?}"))),
            FieldSpec::Prime { prime } => Field::prime(*prime),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub field: FieldSpec,
    pub points: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl ConfigFile {
    pub fn from_points(points: &[ProjPoint], metadata: Option<Metadata>) -> Self {
        let field = points.first().map(ProjPoint::field).unwrap_or(Field::Rational);
        ConfigFile {
            field: FieldSpec::of(field),
            points: points.iter().map(|p| p.coords().clone().map(|s| s.to_string())).collect(),
            metadata,
        }
    }

    pub fn field(&self) -> Result<Field> {
        self.field.to_field()
    }

    /// The points, canonicalized. Errors name the offending entry.
    pub fn points(&self) -> Result<Vec<ProjPoint>> {
        let field = self.field()?;
        self.points
            .iter()
            .enumerate()
            .map(|(i, [x, y, z])| {
                let at = |j: usize, e: GeomError| match e {
                    GeomError::Parse(m) => GeomError::Parse(format!("points[{i}][{j}]: {m}")),
                    e => GeomError::Parse(format!("points[{i}][{j}]: {e}")),
                };
                let x = field.parse_scalar(x).map_err(|e| at(0, e))?;
                let y = field.parse_scalar(y).map_err(|e| at(1, e))?;
                let z = field.parse_scalar(z).map_err(|e| at(2, e))?;
                ProjPoint::new(x, y, z).map_err(|e| GeomError::Parse(format!("points[{i}]: {e}")))
            })
            .collect()
    }

    /// The same file with every point in canonical form.
    pub fn canonical(&self) -> Result<ConfigFile> {
        Ok(ConfigFile::from_points(&self.points()?, self.metadata.clone()).with_field(self.field()?))
    }

    fn with_field(mut self, field: Field) -> Self {
        self.field = FieldSpec::of(field);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

fn json_error(e: serde_json::Error) -> GeomError {
    GeomError::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
}

pub fn parse(text: &str) -> Result<ConfigFile> {
    serde_json::from_str(text).map_err(json_error)
}

/// A single file or a JSON array of files.
pub fn parse_many(text: &str) -> Result<Vec<ConfigFile>> {
    match serde_json::from_str::<serde_json::Value>(text).map_err(json_error)? {
        serde_json::Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, v)| serde_json::from_value(v).map_err(|e| GeomError::Parse(format!("entry {i}: {e}"))))
            .collect(),
        v => serde_json::from_value(v).map(|c| vec![c]).map_err(|e| GeomError::Parse(e.to_string())),
    }
}

pub fn serialize(cfg: &ConfigFile) -> String {
    cfg.to_json()
}

pub fn serialize_many(cfgs: &[ConfigFile]) -> String {
    serde_json::to_string_pretty(cfgs).expect("serializable") + "\n"
}
