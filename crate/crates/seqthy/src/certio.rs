//! Certificate files: a JSON encoding with a tag field per node,
//! terms as symbolic expressions and sequences in parenthesis
//! notation.  Keys are emitted in sorted order, so serialization is
//! byte-for-byte reproducible.

use std::fmt;

use seqthy_core::cert::Certificate;
use seqthy_core::logic::Term;
use seqthy_core::seq::Seq;
use serde_json::{json, Map, Value};

use crate::text::{parse_seq, parse_term, print_term, ParseError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertIoError {
    Json(String),
    /// A field inside the JSON tree is missing or has the wrong shape.
    Malformed { path: String, message: String },
    Text(ParseError),
}

impl fmt::Display for CertIoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertIoError::Json(e) => write!(f, "invalid JSON: {e}"),
            CertIoError::Malformed { path, message } => write!(f, "{path}: {message}"),
            CertIoError::Text(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CertIoError {}

pub fn cert_to_json(cert: &Certificate) -> String {
    cert_to_value(cert).to_string()
}

pub fn cert_to_value(cert: &Certificate) -> Value {
    match cert {
        Certificate::EqNorm { lhs, rhs, canon } => json!({
            "node": "eq-norm",
            "lhs": print_term(lhs),
            "rhs": print_term(rhs),
            "canon": canon.to_string(),
        }),
        Certificate::NeqSequeral { lhs, rhs, left_value, right_value } => json!({
            "node": "neq-sequeral",
            "lhs": print_term(lhs),
            "rhs": print_term(rhs),
            "left-value": left_value.to_string(),
            "right-value": right_value.to_string(),
        }),
        Certificate::PrefixWitness { lhs, rhs, rest } => json!({
            "node": "prefix-witness",
            "lhs": print_term(lhs),
            "rhs": print_term(rhs),
            "rest": rest.to_string(),
        }),
        Certificate::NotPrefix { lhs, rhs, segments } => json!({
            "node": "not-prefix",
            "lhs": print_term(lhs),
            "rhs": print_term(rhs),
            "segments": segments.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        }),
        Certificate::AndNode(a, b) => json!({
            "node": "and",
            "left": cert_to_value(a),
            "right": cert_to_value(b),
        }),
        Certificate::OrLeft(a) => json!({ "node": "or-left", "sub": cert_to_value(a) }),
        Certificate::OrRight(a) => json!({ "node": "or-right", "sub": cert_to_value(a) }),
        Certificate::ExistsWitness { witness, sub } => json!({
            "node": "exists",
            "witness": witness.to_string(),
            "sub": cert_to_value(sub),
        }),
        Certificate::BoundedAll { bound_value, subs } => json!({
            "node": "bounded-all",
            "bound": bound_value.to_string(),
            "subs": subs.iter().map(cert_to_value).collect::<Vec<_>>(),
        }),
    }
}

pub fn cert_from_json(input: &str) -> Result<Certificate, CertIoError> {
    let value: Value =
        serde_json::from_str(input).map_err(|e| CertIoError::Json(e.to_string()))?;
    cert_from_value(&value, "root")
}

fn cert_from_value(value: &Value, path: &str) -> Result<Certificate, CertIoError> {
    let object = value.as_object().ok_or_else(|| malformed(path, "expected an object"))?;
    let tag = string_field(object, "node", path)?;
    match tag.as_str() {
        "eq-norm" => Ok(Certificate::EqNorm {
            lhs: term_field(object, "lhs", path)?,
            rhs: term_field(object, "rhs", path)?,
            canon: seq_field(object, "canon", path)?,
        }),
        "neq-sequeral" => Ok(Certificate::NeqSequeral {
            lhs: term_field(object, "lhs", path)?,
            rhs: term_field(object, "rhs", path)?,
            left_value: seq_field(object, "left-value", path)?,
            right_value: seq_field(object, "right-value", path)?,
        }),
        "prefix-witness" => Ok(Certificate::PrefixWitness {
            lhs: term_field(object, "lhs", path)?,
            rhs: term_field(object, "rhs", path)?,
            rest: seq_field(object, "rest", path)?,
        }),
        "not-prefix" => {
            let raw = array_field(object, "segments", path)?;
            let mut segments = Vec::with_capacity(raw.len());
            for (i, item) in raw.iter().enumerate() {
                let sub_path = format!("{path}.segments[{i}]");
                let text = item
                    .as_str()
                    .ok_or_else(|| malformed(&sub_path, "expected a string"))?;
                segments.push(parse_seq_at(text, &sub_path)?);
            }
            Ok(Certificate::NotPrefix {
                lhs: term_field(object, "lhs", path)?,
                rhs: term_field(object, "rhs", path)?,
                segments,
            })
        }
        "and" => Ok(Certificate::AndNode(
            Box::new(cert_from_value(
                field(object, "left", path)?,
                &format!("{path}.left"),
            )?),
            Box::new(cert_from_value(
                field(object, "right", path)?,
                &format!("{path}.right"),
            )?),
        )),
        "or-left" => Ok(Certificate::OrLeft(Box::new(cert_from_value(
            field(object, "sub", path)?,
            &format!("{path}.sub"),
        )?))),
        "or-right" => Ok(Certificate::OrRight(Box::new(cert_from_value(
            field(object, "sub", path)?,
            &format!("{path}.sub"),
        )?))),
        "exists" => Ok(Certificate::ExistsWitness {
            witness: seq_field(object, "witness", path)?,
            sub: Box::new(cert_from_value(
                field(object, "sub", path)?,
                &format!("{path}.sub"),
            )?),
        }),
        "bounded-all" => {
            let raw = array_field(object, "subs", path)?;
            let mut subs = Vec::with_capacity(raw.len());
            for (i, item) in raw.iter().enumerate() {
                subs.push(cert_from_value(item, &format!("{path}.subs[{i}]"))?);
            }
            Ok(Certificate::BoundedAll { bound_value: seq_field(object, "bound", path)?, subs })
        }
        other => Err(malformed(path, &format!("unknown node tag {other:?}"))),
    }
}

fn malformed(path: &str, message: &str) -> CertIoError {
    CertIoError::Malformed { path: path.to_string(), message: message.to_string() }
}

fn field<'a>(
    object: &'a Map<String, Value>,
    name: &str,
    path: &str,
) -> Result<&'a Value, CertIoError> {
    object.get(name).ok_or_else(|| malformed(path, &format!("missing field {name:?}")))
}

fn string_field(
    object: &Map<String, Value>,
    name: &str,
    path: &str,
) -> Result<String, CertIoError> {
    field(object, name, path)?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| malformed(path, &format!("field {name:?} must be a string")))
}

fn array_field<'a>(
    object: &'a Map<String, Value>,
    name: &str,
    path: &str,
) -> Result<&'a Vec<Value>, CertIoError> {
    field(object, name, path)?
        .as_array()
        .ok_or_else(|| malformed(path, &format!("field {name:?} must be an array")))
}

fn term_field(object: &Map<String, Value>, name: &str, path: &str) -> Result<Term, CertIoError> {
    let text = string_field(object, name, path)?;
    parse_term(&text).map_err(CertIoError::Text)
}

fn seq_field(object: &Map<String, Value>, name: &str, path: &str) -> Result<Seq, CertIoError> {
    let text = string_field(object, name, path)?;
    parse_seq_at(&text, path)
}

fn parse_seq_at(text: &str, _path: &str) -> Result<Seq, CertIoError> {
    parse_seq(text).map_err(CertIoError::Text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_formula;
    use seqthy_core::cert::{check_cert, prove_sigma};

    #[test]
    fn round_trips_and_is_deterministic() {
        let phi = parse_formula(
            "(exists x (and (prefix x (app e (app e e))) (not (= x e))))",
        )
        .unwrap();
        let cert = prove_sigma(&phi, 3).unwrap();
        let a = cert_to_json(&cert);
        let b = cert_to_json(&prove_sigma(&phi, 3).unwrap());
        assert_eq!(a, b, "serialization must be byte-for-byte reproducible");
        let back = cert_from_json(&a).unwrap();
        assert_eq!(back, cert);
        assert!(check_cert(&back, &phi));
    }

    #[test]
    fn keys_are_sorted() {
        let phi = parse_formula("(= (cat e e) e)").unwrap();
        let json = cert_to_json(&prove_sigma(&phi, 1).unwrap());
        assert_eq!(json, r#"{"canon":"()","lhs":"(cat e e)","node":"eq-norm","rhs":"e"}"#);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(matches!(cert_from_json("not json"), Err(CertIoError::Json(_))));
        let err = cert_from_json(r#"{"node":"mystery"}"#).unwrap_err();
        assert!(matches!(err, CertIoError::Malformed { .. }));
        let err = cert_from_json(r#"{"node":"eq-norm","lhs":"e","rhs":"e"}"#).unwrap_err();
        let CertIoError::Malformed { message, .. } = err else { panic!() };
        assert!(message.contains("canon"));
        let err =
            cert_from_json(r#"{"node":"and","left":{"node":"or-left"},"right":3}"#).unwrap_err();
        let CertIoError::Malformed { path, .. } = err else { panic!() };
        assert_eq!(path, "root.left");
    }
}
