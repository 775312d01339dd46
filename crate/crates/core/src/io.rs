//! JSON text formats for curves, places, divisors, classes and functions.
//!
//! ```text
//! curve     {"p": 7, "f": [0, -1, 0, 0, 0, 1]}      coefficients low degree first
//! place     [x, y] or "inf"
//! divisor   [[place, multiplicity], ...]
//! class     {"u": [...], "v": [...], "degree": d} or "H^k"
//! function  {"a": [...], "b": [...], "c": [...]}   b and c optional, or a bare [...]
//! ```

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::algebra::Polynomial;
use crate::curve::{Curve, Divisor, Place};
use crate::error::{Error, Result};
use crate::function::FunctionElement;
use crate::picard::DivisorClass;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub p: u64,
    pub f: Vec<i64>,
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{e} in {text:?}")))
}

fn ints(v: &Value, what: &str) -> Result<Vec<i64>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{what}: expected an integer list, got {v}")))?;
    arr.iter()
        .map(|c| {
            c.as_i64()
                .ok_or_else(|| Error::Parse(format!("{what}: {c} is not an integer")))
        })
        .collect()
}

fn int(v: &Value, what: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| Error::Parse(format!("{what}: {v} is not an integer")))
}

pub fn parse_curve(text: &str) -> Result<Curve> {
    let spec: CurveSpec = serde_json::from_str(text).map_err(|e| Error::Parse(format!("curve: {e}")))?;
    Curve::new(spec.p, &spec.f)
}

pub fn curve_to_json(curve: &Curve) -> String {
    let spec = CurveSpec {
        p: curve.p(),
        f: curve.f().coeffs().iter().map(|c| c.value() as i64).collect(),
    };
    serde_json::to_string(&spec).expect("plain data")
}

pub fn poly_to_json(p: &Polynomial) -> Value {
    Value::from(p.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>())
}

fn place_from_value(curve: &Curve, v: &Value) -> Result<Place> {
    if v.as_str() == Some("inf") {
        return Ok(Place::Infinity);
    }
    let xy = ints(v, "place")?;
    if xy.len() != 2 {
        return Err(Error::Parse(format!("place: expected [x, y] or \"inf\", got {v}")));
    }
    curve.place(xy[0], xy[1])
}

pub fn parse_place(curve: &Curve, text: &str) -> Result<Place> {
    place_from_value(curve, &parse_json(text)?)
}

pub fn place_to_json(p: &Place) -> Value {
    match p {
        Place::Infinity => json!("inf"),
        Place::Affine { x, y } => json!([x.value(), y.value()]),
    }
}

pub fn parse_divisor(curve: &Curve, text: &str) -> Result<Divisor> {
    let v = parse_json(text)?;
    let terms = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("divisor: expected a list of [place, mult], got {v}")))?;
    let mut d = Divisor::zero();
    for t in terms {
        match t.as_array().map(Vec::as_slice) {
            Some([p, m]) => d.add_term(place_from_value(curve, p)?, int(m, "multiplicity")?),
            _ => return Err(Error::Parse(format!("divisor term: expected [place, mult], got {t}"))),
        }
    }
    Ok(d)
}

pub fn divisor_to_json(d: &Divisor) -> Value {
    Value::from(
        d.terms()
            .map(|(p, &m)| json!([place_to_json(p), m]))
            .collect::<Vec<_>>(),
    )
}

/// A class as JSON, or `H^k` for a power of the hyperelliptic class.
pub fn parse_class(curve: &Curve, text: &str) -> Result<DivisorClass> {
    let t = text.trim();
    if let Some(k) = t.strip_prefix("H^") {
        let k: i64 = k
            .parse()
            .map_err(|_| Error::Parse(format!("class: bad exponent in {t:?}")))?;
        return Ok(DivisorClass::h_power(curve, k));
    }
    if t == "H" {
        return Ok(DivisorClass::h_power(curve, 1));
    }
    if t == "K" {
        return Ok(DivisorClass::canonical(curve));
    }
    let v = parse_json(t)?;
    let field = curve.field();
    let get = |key: &str| {
        v.get(key)
            .ok_or_else(|| Error::Parse(format!("class: missing field {key:?}")))
    };
    let u = Polynomial::from_i64(field, &ints(get("u")?, "u")?);
    let vv = Polynomial::from_i64(field, &ints(get("v")?, "v")?);
    let degree = int(get("degree")?, "degree")?;
    DivisorClass::new(curve, u, vv, degree)
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = |p: &Polynomial| p.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>();
        let mut st = s.serialize_struct("DivisorClass", 3)?;
        st.serialize_field("u", &coeffs(self.u()))?;
        st.serialize_field("v", &coeffs(self.v()))?;
        st.serialize_field("degree", &self.degree())?;
        st.end()
    }
}

pub fn parse_function(curve: &Curve, text: &str) -> Result<FunctionElement> {
    let v = parse_json(text)?;
    let field = curve.field();
    if v.is_array() {
        return Ok(FunctionElement::from_poly(Polynomial::from_i64(field, &ints(&v, "function")?)));
    }
    let part = |key: &str, default: &[i64]| -> Result<Polynomial> {
        match v.get(key) {
            Some(p) => Ok(Polynomial::from_i64(field, &ints(p, key)?)),
            None => Ok(Polynomial::from_i64(field, default)),
        }
    };
    if v.get("a").is_none() && v.get("b").is_none() {
        return Err(Error::Parse(format!("function: expected {{\"a\", \"b\", \"c\"}}, got {v}")));
    }
    FunctionElement::new(part("a", &[])?, part("b", &[])?, part("c", &[1])?)
}

pub fn function_to_json(h: &FunctionElement) -> Value {
    json!({ "a": poly_to_json(h.a()), "b": poly_to_json(h.b()), "c": poly_to_json(h.c()) })
}
