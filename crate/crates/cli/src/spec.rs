//! Potential specification files.
//!
//! ```json
//! {"model": "binary_quartic",
//!  "couplings": {"lambda_40": 1, "lambda_31": 0, "lambda_22": "-1/3", "lambda_13": 0, "lambda_04": 1},
//!  "arithmetic": "float"}
//! ```
//!
//! Numbers are kept as exact decimals; a `"p/q"` string anywhere switches
//! the instance to rational arithmetic.

use std::collections::BTreeMap;

use quartic_pd::{parse_rational, Rational, Scalar};
use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("line {line}, column {column}: {msg}")]
    Syntax {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("unknown keys: {}", .0.join(", "))]
    UnknownKeys(Vec<String>),
    #[error("missing couplings: {}", .0.join(", "))]
    MissingKeys(Vec<String>),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    BinaryQuartic,
    TwoSingletsHiggs,
}

pub const QUARTIC_KEYS: [&str; 5] = [
    "lambda_40",
    "lambda_31",
    "lambda_22",
    "lambda_13",
    "lambda_04",
];
pub const PORTAL_KEYS: [&str; 4] = ["lambda_H", "lambda_H20", "lambda_H11", "lambda_H02"];

impl Model {
    pub fn parse(name: &str) -> Option<Model> {
        match name {
            "binary_quartic" => Some(Model::BinaryQuartic),
            "two_singlets_higgs" => Some(Model::TwoSingletsHiggs),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Model::BinaryQuartic => "binary_quartic",
            Model::TwoSingletsHiggs => "two_singlets_higgs",
        }
    }

    /// Coupling names in array order (portal couplings first).
    pub fn keys(self) -> Vec<&'static str> {
        match self {
            Model::BinaryQuartic => QUARTIC_KEYS.to_vec(),
            Model::TwoSingletsHiggs => PORTAL_KEYS
                .iter()
                .chain(QUARTIC_KEYS.iter())
                .copied()
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arith {
    Float,
    Rational,
}

impl Arith {
    pub fn parse(name: &str) -> Option<Arith> {
        match name {
            "float" => Some(Arith::Float),
            "rational" => Some(Arith::Rational),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Arith::Float => "float",
            Arith::Rational => "rational",
        }
    }
}

/// A coupling value: its source text and the exact rational it denotes.
#[derive(Debug, Clone, PartialEq)]
pub struct Number {
    pub text: String,
    pub exact: Rational,
}

impl Number {
    pub fn from_exact(exact: Rational) -> Self {
        Number {
            text: quartic_pd::scalar::format_rational(&exact),
            exact,
        }
    }

    /// Nearest double; decimal text parses with correct rounding.
    pub fn to_f64(&self) -> f64 {
        self.text
            .parse::<f64>()
            .unwrap_or_else(|_| self.exact.approx())
    }
}

#[derive(Debug, Clone)]
pub struct PotentialSpec {
    pub model: Model,
    pub couplings: BTreeMap<String, Number>,
    pub arithmetic: Arith,
}

fn syntax(err: serde_json::Error) -> SpecError {
    SpecError::Syntax {
        line: err.line(),
        column: err.column(),
        msg: err.to_string(),
    }
}

fn parse_value(key: &str, v: &Value, saw_fraction: &mut bool) -> Result<Number, SpecError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => {
            if s.contains('/') {
                *saw_fraction = true;
            }
            s.trim().to_string()
        }
        _ => {
            return Err(SpecError::Invalid(format!(
                "{key}: expected a number or \"p/q\" string"
            )))
        }
    };
    let exact = parse_rational(&text)
        .map_err(|_| SpecError::Invalid(format!("{key}: cannot parse {text:?}")))?;
    Ok(Number { text, exact })
}

impl PotentialSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        Self::parse_partial(text, &[])
    }

    /// Like [`PotentialSpec::parse`], but the couplings named in `supplied`
    /// may be absent (they are filled in by the caller).
    pub fn parse_partial(text: &str, supplied: &[&str]) -> Result<Self, SpecError> {
        let root: Value = serde_json::from_str(text).map_err(syntax)?;
        let Value::Object(root) = root else {
            return Err(SpecError::Invalid("top level must be a JSON object".into()));
        };
        let unknown: Vec<String> = root
            .keys()
            .filter(|k| !matches!(k.as_str(), "model" | "couplings" | "arithmetic"))
            .cloned()
            .collect();
        if !unknown.is_empty() {
            return Err(SpecError::UnknownKeys(unknown));
        }
        let model = match root.get("model") {
            Some(Value::String(s)) => {
                Model::parse(s).ok_or_else(|| SpecError::Invalid(format!("unknown model {s:?}")))?
            }
            Some(_) => return Err(SpecError::Invalid("model must be a string".into())),
            None => return Err(SpecError::Invalid("missing key: model".into())),
        };
        let empty = Map::new();
        let couplings = match root.get("couplings") {
            Some(Value::Object(m)) => m,
            Some(_) => return Err(SpecError::Invalid("couplings must be an object".into())),
            None if supplied.is_empty() => {
                return Err(SpecError::Invalid("missing key: couplings".into()))
            }
            None => &empty,
        };
        let keys = model.keys();
        let unknown: Vec<String> = couplings
            .keys()
            .filter(|k| !keys.contains(&k.as_str()))
            .cloned()
            .collect();
        if !unknown.is_empty() {
            return Err(SpecError::UnknownKeys(unknown));
        }
        let missing: Vec<String> = keys
            .iter()
            .filter(|k| !couplings.contains_key(**k) && !supplied.contains(k))
            .map(|k| k.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(SpecError::MissingKeys(missing));
        }
        let mut saw_fraction = false;
        let mut values = BTreeMap::new();
        for (k, v) in couplings {
            values.insert(k.clone(), parse_value(k, v, &mut saw_fraction)?);
        }
        let arithmetic = match root.get("arithmetic") {
            Some(Value::String(s)) => Arith::parse(s)
                .ok_or_else(|| SpecError::Invalid(format!("unknown arithmetic {s:?}")))?,
            Some(_) => return Err(SpecError::Invalid("arithmetic must be a string".into())),
            None if saw_fraction => Arith::Rational,
            None => Arith::Float,
        };
        let arithmetic = if saw_fraction {
            Arith::Rational
        } else {
            arithmetic
        };
        for (k, v) in &values {
            if arithmetic == Arith::Float && !v.to_f64().is_finite() {
                return Err(SpecError::Invalid(format!(
                    "{k}: value out of floating-point range"
                )));
            }
        }
        Ok(PotentialSpec {
            model,
            couplings: values,
            arithmetic,
        })
    }

    /// Coupling values in [`Model::keys`] order, as doubles.
    pub fn values_f64(&self) -> Vec<f64> {
        self.model
            .keys()
            .iter()
            .map(|k| self.couplings[*k].to_f64())
            .collect()
    }

    /// Coupling values in [`Model::keys`] order, exactly.
    pub fn values_exact(&self) -> Vec<Rational> {
        self.model
            .keys()
            .iter()
            .map(|k| self.couplings[*k].exact.clone())
            .collect()
    }
}
