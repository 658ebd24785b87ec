use serde_json::{json, Map, Value};

use crate::engine::{CheckOutcome, Num, OracleOutcome};

fn num(n: &Num) -> Value {
    match n {
        Num::Float(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
        Num::Exact(s) => Value::String(s.clone()),
    }
}

fn floats(xs: &[f64]) -> Value {
    Value::Array(
        xs.iter()
            .map(|x| serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number))
            .collect(),
    )
}

pub fn check_json(out: &CheckOutcome) -> Value {
    let mut inv = Map::new();
    for (k, v) in &out.invariants {
        inv.insert((*k).to_string(), num(v));
    }
    inv.insert(
        "quartic".into(),
        Value::Array(out.quartic.iter().map(num).collect()),
    );
    json!({
        "verdict": out.class.as_str(),
        "certificate": out.certificate.label,
        "confidence": out.confidence.as_str(),
        "witness": out.witness.as_deref().map_or(Value::Null, floats),
        "invariants": Value::Object(inv),
        "model": out.model.as_str(),
        "arithmetic": out.arithmetic.as_str(),
        "boundary": out.certificate.boundary,
        "escalated": out.escalated,
        "exit_code": out.class.code(),
    })
}

pub fn check_text(out: &CheckOutcome) -> String {
    let mut s = String::new();
    let mut line = |k: &str, v: String| s.push_str(&format!("{k:<12} {v}\n"));
    line("verdict", out.class.to_string());
    line("certificate", out.certificate.to_string());
    line("confidence", out.confidence.to_string());
    let arith = if out.escalated {
        format!("{} (escalated from float)", out.arithmetic.as_str())
    } else {
        out.arithmetic.as_str().to_string()
    };
    line("arithmetic", arith);
    let witness = match &out.witness {
        Some(w) => format!(
            "({})",
            w.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        None => "none".into(),
    };
    line("witness", witness);
    for (k, v) in &out.invariants {
        line(k, v.to_string());
    }
    s
}

pub fn oracle_json(out: &OracleOutcome) -> Value {
    json!({
        "min_value": num(&out.min_value),
        "argmin": floats(&out.argmin),
        "method": out.method.as_str(),
        "sign": out.class.as_str(),
        "arithmetic": out.arithmetic.as_str(),
        "exit_code": out.class.code(),
    })
}

pub fn oracle_text(out: &OracleOutcome) -> String {
    let argmin = out
        .argmin
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!(
        "min_value    {}\nargmin       ({argmin})\nmethod       {}\nsign         {}\n",
        out.min_value,
        out.method.as_str(),
        out.class
    )
}
