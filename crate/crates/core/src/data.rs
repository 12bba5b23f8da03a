//! Construction data: the generator sets and boundary images that define a
//! 2-skeletal free simplicial algebra.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use xsquare_algebra::{Field, PolyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    Fp(u32),
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field, DataError> {
        match self {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::Fp(p) if Field::valid_prime(p as u64) => Ok(Field::Prime(p)),
            FieldSpec::Fp(p) => Err(DataError::Field(format!("{p} is not a prime below 2^31"))),
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Q => f.write_str("Q"),
            FieldSpec::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generator {
    pub name: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionData {
    pub field: FieldSpec,
    #[serde(rename = "S1")]
    pub s1: Vec<String>,
    #[serde(rename = "S2", default)]
    pub s2: Vec<Generator>,
    #[serde(rename = "S3", default)]
    pub s3: Vec<Generator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DataError {
    #[error("malformed input: {0}")]
    Json(String),
    #[error("field: {0}")]
    Field(String),
    #[error("{set}: bad name `{name}`: {msg}")]
    Name { set: &'static str, name: String, msg: String },
    #[error("{set}: image of `{name}` does not parse: {source}")]
    Image {
        set: &'static str,
        name: String,
        #[source]
        source: PolyError,
    },
    #[error("S3: image of `{name}` is {image}, which has a term free of S2 variables")]
    NotAugmented { name: String, image: String },
    #[error("S3: image of `{name}` is {image}, whose boundary {boundary} is nonzero")]
    NonzeroBoundary { name: String, image: String, boundary: String },
}

impl ConstructionData {
    pub fn from_json(text: &str) -> Result<Self, DataError> {
        serde_json::from_str(text).map_err(|e| DataError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// The data of the `i`-skeleton: `i = 0` drops S2 and S3, `i = 1` drops S3.
    /// Data above dimension 2 is never present, so `i >= 2` changes nothing.
    pub fn truncate(&self, i: usize) -> ConstructionData {
        let mut out = self.clone();
        if i < 2 {
            out.s3.clear();
        }
        if i < 1 {
            out.s2.clear();
        }
        out
    }

    /// Names are identifiers, pairwise distinct, and cannot be mistaken for
    /// generated degeneracy names such as `s1s0_S`.
    pub fn check_names(&self) -> Result<(), DataError> {
        let mut seen: Vec<&str> = Vec::new();
        let all = self
            .s1
            .iter()
            .map(|n| ("S1", n.as_str()))
            .chain(self.s2.iter().map(|g| ("S2", g.name.as_str())))
            .chain(self.s3.iter().map(|g| ("S3", g.name.as_str())));
        for (set, name) in all {
            let bad = |msg: &str| DataError::Name { set, name: name.to_string(), msg: msg.to_string() };
            if !is_identifier(name) {
                return Err(bad("not an identifier"));
            }
            if looks_generated(name) {
                return Err(bad("reserved: clashes with generated degeneracy names"));
            }
            if seen.contains(&name) {
                return Err(bad("duplicate name"));
            }
            seen.push(name);
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `s<digits>` repeated, then `_`.
fn looks_generated(name: &str) -> bool {
    let Some((head, _)) = name.split_once('_') else {
        return false;
    };
    if head.is_empty() {
        return false;
    }
    head.split('s').skip(1).all(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()))
        && head.starts_with('s')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_field_forms() {
        let a = ConstructionData::from_json(r#"{"field":"Q","S1":["x"],"S2":[{"name":"S","image":"x^2"}]}"#)
            .unwrap();
        assert_eq!(a.field, FieldSpec::Q);
        assert!(a.s3.is_empty());
        let b = ConstructionData::from_json(r#"{"field":{"Fp":7},"S1":["x"]}"#).unwrap();
        assert_eq!(b.field, FieldSpec::Fp(7));
        assert_eq!(b.field.to_field().unwrap(), Field::Prime(7));
        assert!(FieldSpec::Fp(8).to_field().is_err());
    }

    #[test]
    fn rejects_unknown_keys_and_bad_names() {
        assert!(ConstructionData::from_json(r#"{"field":"Q","S1":[],"S4":[]}"#).is_err());
        let dup = ConstructionData::from_json(r#"{"field":"Q","S1":["x","x"]}"#).unwrap();
        assert!(matches!(dup.check_names(), Err(DataError::Name { .. })));
        let gen = ConstructionData::from_json(r#"{"field":"Q","S1":["s1s0_S"]}"#).unwrap();
        assert!(gen.check_names().is_err());
        let ok = ConstructionData::from_json(r#"{"field":"Q","S1":["s","s_x","x1"]}"#).unwrap();
        assert!(ok.check_names().is_ok());
    }

    #[test]
    fn truncation() {
        let c = ConstructionData::from_json(
            r#"{"field":"Q","S1":["x","y"],"S2":[{"name":"S1","image":"x^2"},{"name":"S2","image":"x*y"}],
                "S3":[{"name":"T","image":"y*S1 - x*S2"}]}"#,
        )
        .unwrap();
        assert_eq!(c.truncate(1).s3.len(), 0);
        assert_eq!(c.truncate(0).s2.len(), 0);
        assert_eq!(c.truncate(3), c);
        assert_eq!(ConstructionData::from_json(&c.to_json()).unwrap(), c);
    }
}
