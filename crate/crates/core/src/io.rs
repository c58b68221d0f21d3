//! JSON formats for polynomials, matrices and functionals.
//!
//! ```text
//! {"field": "Q", "coeffs": ["-1", "0", "1"]}           ascending degree
//! {"field": "GF(5)", "diag": ["1", "4"], "sub": ["2"]}
//! {"kind": "pair", "p": {...}, "q": {...}}
//! {"kind": "points", "field": "Q", "nodes": [...], "weights": [...]}
//! {"kind": "derivative", "field": "Q", "a": "2", "omegas": ["3"]}
//! ```
//!
//! Values are strings (`"num/den"`, `"int"`, or a residue); bare JSON
//! integers are accepted too. A `derivative` functional takes either
//! `omegas` (one entry: `ω f'(a) - ω² f(a)`; two entries: the second-order
//! form in `ω₁, ω₂`) or a raw `derivative_weights` list `w_j` for
//! `Σ w_j f^{(j)}(a)`.

use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{AlgebraError, Field, FieldValue, Polynomial};
use crate::functional::{FunctionalError, MomentFunctional};
use crate::tridiagonal::TridiagMatrix;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{context}: malformed JSON: {msg}")]
    Json { context: String, msg: String },
    #[error("{context}: cannot read {path}: {msg}")]
    Read { context: String, path: String, msg: String },
    #[error("{context}: {msg}")]
    Invalid { context: String, msg: String },
    #[error("{context}: {source}")]
    Functional { context: String, source: FunctionalError },
}

fn invalid(context: &str, msg: impl Into<String>) -> IoError {
    IoError::Invalid { context: context.to_string(), msg: msg.into() }
}

fn algebra(context: &str, e: AlgebraError) -> IoError {
    invalid(context, e.to_string())
}

/// An argument that is either inline JSON or a path to a JSON file.
pub fn load_json_arg(context: &str, arg: &str) -> Result<Value, IoError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| IoError::Read {
            context: context.to_string(),
            path: arg.to_string(),
            msg: e.to_string(),
        })?
    };
    serde_json::from_str(&text).map_err(|e| IoError::Json { context: context.to_string(), msg: e.to_string() })
}

/// The `"field"` key when present, else `default`; a clash with an explicit default is an error.
fn resolve_field(context: &str, v: &Value, default: Option<Field>) -> Result<Field, IoError> {
    match v.get("field") {
        Some(Value::String(s)) => {
            let f: Field = s.parse().map_err(|e| algebra(&format!("{context}.field"), e))?;
            match default {
                Some(d) if d != f => Err(invalid(&format!("{context}.field"), format!("is {f} but the command uses {d}"))),
                _ => Ok(f),
            }
        }
        Some(_) => Err(invalid(&format!("{context}.field"), "expected a string such as \"Q\" or \"GF(5)\"")),
        None => default.ok_or_else(|| invalid(context, "missing \"field\" and no --field given")),
    }
}

fn value_text(context: &str, v: &Value) -> Result<String, IoError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        _ => Err(invalid(context, "expected a string like \"3/4\" or an integer")),
    }
}

pub fn parse_value(context: &str, field: Field, v: &Value) -> Result<FieldValue, IoError> {
    field.parse_value(&value_text(context, v)?).map_err(|e| algebra(context, e))
}

fn parse_list(context: &str, field: Field, v: &Value, key: &str) -> Result<Vec<FieldValue>, IoError> {
    let ctx = format!("{context}.{key}");
    let arr = v.get(key).and_then(Value::as_array).ok_or_else(|| invalid(&ctx, "missing or not an array"))?;
    arr.iter().enumerate().map(|(i, x)| parse_value(&format!("{ctx}[{i}]"), field, x)).collect()
}

pub fn value_to_json(v: &FieldValue) -> Value {
    Value::String(v.to_string())
}

fn values_json(vs: &[FieldValue]) -> Value {
    Value::Array(vs.iter().map(value_to_json).collect())
}

pub fn poly_from_json(context: &str, v: &Value, default: Option<Field>) -> Result<Polynomial, IoError> {
    let field = resolve_field(context, v, default)?;
    let coeffs = parse_list(context, field, v, "coeffs")?;
    Polynomial::new(field, coeffs).map_err(|e| algebra(context, e))
}

pub fn poly_to_json(p: &Polynomial) -> Value {
    json!({ "field": p.field().to_string(), "coeffs": values_json(p.coeffs()) })
}

pub fn matrix_from_json(context: &str, v: &Value, default: Option<Field>) -> Result<TridiagMatrix, IoError> {
    let field = resolve_field(context, v, default)?;
    let diag = parse_list(context, field, v, "diag")?;
    let sub = parse_list(context, field, v, "sub")?;
    TridiagMatrix::new(field, diag, sub).map_err(|e| algebra(context, e))
}

pub fn matrix_to_json(m: &TridiagMatrix) -> Value {
    json!({ "field": m.field().to_string(), "diag": values_json(m.diag()), "sub": values_json(m.sub()) })
}

pub fn functional_from_json(context: &str, v: &Value, default: Option<Field>) -> Result<MomentFunctional, IoError> {
    let wrap = |source| IoError::Functional { context: context.to_string(), source };
    let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| invalid(&format!("{context}.kind"), "missing"))?;
    match kind {
        "pair" => {
            let field = v.get("field").map(|_| resolve_field(context, v, default)).transpose()?.or(default);
            let sub = |key: &str, field: Option<Field>| {
                let inner = v.get(key).ok_or_else(|| invalid(&format!("{context}.{key}"), "missing"))?;
                let field = field.or_else(|| inner.get("field").is_none().then_some(Field::Q));
                poly_from_json(&format!("{context}.{key}"), inner, field)
            };
            let p = sub("p", field)?;
            let q = sub("q", Some(field.unwrap_or(p.field())))?;
            MomentFunctional::from_pair(&p, &q).map_err(wrap)
        }
        "points" => {
            let field = resolve_field(context, v, default.or(Some(Field::Q)))?;
            let nodes = parse_list(context, field, v, "nodes")?;
            let weights = parse_list(context, field, v, "weights")?;
            MomentFunctional::point_masses(nodes, weights).map_err(wrap)
        }
        "derivative" => {
            let field = resolve_field(context, v, default.or(Some(Field::Q)))?;
            let a = parse_value(&format!("{context}.a"), field, v.get("a").unwrap_or(&Value::Null))?;
            if v.get("derivative_weights").is_some() {
                let w = parse_list(context, field, v, "derivative_weights")?;
                return MomentFunctional::derivative_form(a, w).map_err(wrap);
            }
            let omegas = parse_list(context, field, v, "omegas")?;
            match omegas.as_slice() {
                [w] => MomentFunctional::first_order_form(a, w.clone()).map_err(wrap),
                [w1, w2] => MomentFunctional::second_order_form(a, w1.clone(), w2.clone()).map_err(wrap),
                other => Err(invalid(&format!("{context}.omegas"), format!("expected 1 or 2 entries, got {}", other.len()))),
            }
        }
        other => Err(invalid(&format!("{context}.kind"), format!("unknown kind {other:?}, expected pair, points or derivative"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_round_trip() {
        let p = Polynomial::from_i64(Field::Q, &[-30, -1, 6, 1]);
        let v = poly_to_json(&p);
        assert_eq!(v, json!({"field": "Q", "coeffs": ["-30", "-1", "6", "1"]}));
        assert_eq!(poly_from_json("p", &v, None).unwrap(), p);
        let gf = json!({"field": "GF(5)", "coeffs": [7, "-1", 1]});
        let p = poly_from_json("p", &gf, None).unwrap();
        assert_eq!(p, Polynomial::from_i64(Field::prime(5).unwrap(), &[2, 4, 1]));
    }

    #[test]
    fn errors_name_the_offending_key() {
        let e = poly_from_json("p", &json!({"field": "Q", "coeffs": ["1", "x"]}), None).unwrap_err();
        assert!(e.to_string().starts_with("p.coeffs[1]"), "{e}");
        let e = poly_from_json("q", &json!({"field": "GF(2)", "coeffs": []}), Some(Field::Q)).unwrap_err();
        assert!(e.to_string().starts_with("q.field"), "{e}");
        let e = poly_from_json("q", &json!({"coeffs": ["1"]}), None).unwrap_err();
        assert!(e.to_string().contains("field"), "{e}");
    }

    #[test]
    fn matrix_round_trip() {
        let m = TridiagMatrix::from_i64(Field::Q, &[1, 2, 3], &[4, 5]).unwrap();
        assert_eq!(matrix_from_json("matrix", &matrix_to_json(&m), None).unwrap(), m);
    }

    #[test]
    fn functional_kinds() {
        let pair = json!({"kind": "pair", "p": {"field": "Q", "coeffs": [0, -2, 0, 1]}, "q": {"field": "Q", "coeffs": [-1, 0, 1]}});
        assert!(functional_from_json("functional", &pair, None).unwrap().pair().is_some());
        let pts = json!({"kind": "points", "nodes": ["1", "2"], "weights": ["1/2", "3"]});
        let l = functional_from_json("functional", &pts, None).unwrap();
        assert_eq!(l.moments(2)[1].to_string(), "13/2");
        let der = json!({"kind": "derivative", "a": "1", "omegas": ["2"]});
        let l = functional_from_json("functional", &der, None).unwrap();
        assert_eq!(l.moments(1)[0].to_string(), "-4");
        let bad = json!({"kind": "derivative", "a": "1", "omegas": []});
        assert!(functional_from_json("functional", &bad, None).unwrap_err().to_string().contains("omegas"));
    }

    #[test]
    fn inline_or_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.json");
        std::fs::write(&path, r#"{"field":"Q","coeffs":["1","1"]}"#).unwrap();
        let a = load_json_arg("p", path.to_str().unwrap()).unwrap();
        let b = load_json_arg("p", r#"{"field":"Q","coeffs":["1","1"]}"#).unwrap();
        assert_eq!(a, b);
        assert!(matches!(load_json_arg("p", "/nonexistent/x.json"), Err(IoError::Read { .. })));
        assert!(matches!(load_json_arg("p", "{oops"), Err(IoError::Json { .. })));
    }
}
