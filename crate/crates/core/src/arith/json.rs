//! JSON encoding of exact values.
//!
//! Rationals are strings `"num/den"` (the denominator is always written),
//! polynomials are coefficient arrays indexed by degree, and elements of
//! `Q(q)` are `{"num": [...], "den": [...]}` with coefficients in `q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RationalFunction;
use crate::error::ArithError;

pub trait JsonCoeff: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, ArithError>;
}

pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let bad = || ArithError::Parse(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl JsonCoeff for BigRational {
    fn to_json(&self) -> Value {
        Value::String(rational_to_string(self))
    }

    fn from_json(v: &Value) -> Result<Self, ArithError> {
        match v {
            Value::String(s) => parse_rational(s),
            other => Err(ArithError::Parse(other.to_string())),
        }
    }
}

impl<F: Field + JsonCoeff> Poly<F> {
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(JsonCoeff::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, ArithError> {
        let items = v
            .as_array()
            .ok_or_else(|| ArithError::Parse(v.to_string()))?;
        let coeffs = items.iter().map(F::from_json).collect::<Result<_, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl JsonCoeff for RationalFunction {
    fn to_json(&self) -> Value {
        json!({ "num": self.numer().to_json(), "den": self.denom().to_json() })
    }

    fn from_json(v: &Value) -> Result<Self, ArithError> {
        let bad = || ArithError::Parse(v.to_string());
        let num = Poly::from_json(v.get("num").ok_or_else(bad)?)?;
        let den = Poly::from_json(v.get("den").ok_or_else(bad)?)?;
        RationalFunction::new(num, den)
    }
}

impl<F: Field + JsonCoeff> Serialize for Poly<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, F: Field + JsonCoeff> Deserialize<'de> for Poly<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Poly::from_json(&v).map_err(D::Error::custom)
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        RationalFunction::from_json(&v).map_err(D::Error::custom)
    }
}
