use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use numsemi::{IntPolynomial, TruncatedSeries};

/// What a command produced, renderable as text or as a JSON envelope.
pub struct Output {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    /// False when a verification check reported FAIL.
    pub all_passed: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    format: &'static str,
    inputs: &'a Value,
    result: &'a Value,
}

impl Output {
    pub fn new(command: &'static str, inputs: Value, result: Value, text: String) -> Self {
        Output { command, inputs, result, text, all_passed: true }
    }

    pub fn render(&self, json: bool) -> String {
        if !json {
            return self.text.clone();
        }
        let envelope = Envelope {
            command: self.command,
            format: "json",
            inputs: &self.inputs,
            result: &self.result,
        };
        let mut s = serde_json::to_string_pretty(&envelope).expect("envelope serializes");
        s.push('\n');
        s
    }
}

/// JSON number when it fits in an `i64`, decimal string otherwise.
pub fn big(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(c.to_string()),
    }
}

/// `[[exponent, coefficient], ...]` in ascending exponent order.
pub fn poly_json(p: &IntPolynomial) -> Value {
    Value::Array(p.terms().map(|(n, c)| Value::Array(vec![Value::from(n), big(c)])).collect())
}

pub fn series_json(s: &TruncatedSeries) -> Value {
    serde_json::json!({
        "order": s.order(),
        "coefficients": s.coefficients().iter().map(big).collect::<Vec<_>>(),
    })
}
