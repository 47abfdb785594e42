//! Reading loosely typed input and writing canonical output: integers travel
//! as decimal strings, object keys are sorted.

use std::fmt::Display;

use coxkit::exactgeom::{IntMatrix, IntVector, Rat};
use coxkit::polyring::{fmt_rat, parse_poly, Poly};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    /// Input that does not fit the schema: exit code 2.
    Malformed(String),
    /// Well-formed input the computation rejects: exit code 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, msg) = match self {
            CliError::Malformed(m) => ("malformed_input", m),
            CliError::Domain(m) => ("domain_error", m),
        };
        json!({ "error": { "kind": kind, "message": msg } })
    }
}

pub type Res<T> = Result<T, CliError>;

pub fn malformed(e: impl Display) -> CliError {
    CliError::Malformed(e.to_string())
}

pub fn domain(e: impl Display) -> CliError {
    CliError::Domain(e.to_string())
}

pub fn field<'a>(v: &'a Value, key: &str) -> Res<&'a Value> {
    v.get(key).ok_or_else(|| malformed(format!("missing field `{key}`")))
}

pub fn int_of(v: &Value) -> Res<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| malformed(format!("{n} is not an integer"))),
        Value::String(s) => s.trim().parse().map_err(|_| malformed(format!("`{s}` is not an integer"))),
        other => Err(malformed(format!("expected an integer, found {other}"))),
    }
}

pub fn usize_of(v: &Value) -> Res<usize> {
    usize::try_from(int_of(v)?).map_err(|_| malformed("expected a nonnegative integer"))
}

pub fn rat_of(v: &Value) -> Res<Rat> {
    match v {
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((a, b)) => {
                    let a: BigInt = a.trim().parse().map_err(|_| malformed(format!("`{s}` is not a rational")))?;
                    let b: BigInt = b.trim().parse().map_err(|_| malformed(format!("`{s}` is not a rational")))?;
                    if b == BigInt::from(0) {
                        return Err(malformed("zero denominator"));
                    }
                    Ok(Rat::new(a, b))
                }
                None => Ok(Rat::from_integer(s.parse().map_err(|_| malformed(format!("`{s}` is not a rational")))?)),
            }
        }
        other => Ok(Rat::from_integer(int_of(other)?)),
    }
}

pub fn array_of(v: &Value) -> Res<&Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(format!("expected an array, found {v}")))
}

pub fn int_vec_of(v: &Value) -> Res<IntVector> {
    array_of(v)?.iter().map(int_of).collect()
}

pub fn int_rows_of(v: &Value) -> Res<Vec<IntVector>> {
    array_of(v)?.iter().map(int_vec_of).collect()
}

pub fn rat_rows_of(v: &Value) -> Res<Vec<Vec<Rat>>> {
    array_of(v)?.iter().map(|r| array_of(r)?.iter().map(rat_of).collect()).collect()
}

pub fn matrix_of(v: &Value, ncols: usize) -> Res<IntMatrix> {
    IntMatrix::from_rows(ncols, int_rows_of(v)?).map_err(malformed)
}

pub fn str_of(v: &Value) -> Res<&str> {
    v.as_str().ok_or_else(|| malformed(format!("expected a string, found {v}")))
}

pub fn strings_of(v: &Value) -> Res<Vec<&str>> {
    array_of(v)?.iter().map(str_of).collect()
}

pub fn poly_of(text: &str, names: &[String]) -> Res<Poly> {
    parse_poly(text, names).map_err(malformed)
}

pub fn polys_of(v: &Value, names: &[String]) -> Res<Vec<Poly>> {
    strings_of(v)?.into_iter().map(|s| poly_of(s, names)).collect()
}

pub fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn count(x: usize) -> Value {
    Value::String(x.to_string())
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn rows(v: &[IntVector]) -> Value {
    Value::Array(v.iter().map(|r| ints(r)).collect())
}

pub fn rat(x: &Rat) -> Value {
    Value::String(fmt_rat(x))
}

pub fn polys(ps: &[Poly], names: &[String]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string_with(names))).collect())
}

pub fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("values serialize")
    } else {
        serde_json::to_string(v).expect("values serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn integers_accept_numbers_and_strings() {
        assert_eq!(int_of(&json!(-7)).unwrap(), BigInt::from(-7));
        assert_eq!(int_of(&json!("123456789012345678901234567890")).unwrap().to_string(), "123456789012345678901234567890");
        assert!(int_of(&json!(1.5)).is_err());
        assert!(usize_of(&json!(-1)).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(rat(&rat_of(&json!("6/-4")).unwrap()), json!("-3/2"));
        assert_eq!(rat(&rat_of(&json!(5)).unwrap()), json!("5"));
        assert!(rat_of(&json!("1/0")).is_err());
    }

    #[test]
    fn error_codes() {
        assert_eq!(malformed("x").exit_code(), 2);
        assert_eq!(domain("x").exit_code(), 1);
        assert_eq!(domain("x").to_json()["error"]["kind"], "domain_error");
    }
}
