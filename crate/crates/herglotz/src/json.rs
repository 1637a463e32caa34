//! File formats.
//!
//! Rationals are strings `"a/b"` (`"/b"` omitted when 1; bare JSON integers
//! also accepted). Complex numbers are `{"re": ..., "im": ...}` or a bare
//! rational. Polynomials are ascending coefficient arrays. Rational
//! functions are `{"num": [...], "den": [...]}` (a bare array is a
//! polynomial). Matrices are `{"n": k, "entries": [[...], ...]}`. Divisors
//! are arrays of `{"point": ..., "value": int}` where a point is a rational
//! or `{"poly": [...], "interval": [lo, hi]}`.

use crate::debranges::DeBrangesInput;
use crate::divisor::DivisorFn;
use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::matfn::MatRatFn;
use crate::poly::Poly;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::ratfn::RatFn;
use crate::roots::{AlgebraicReal, Point};
use crate::rpoly::RPoly;
use crate::scalar::InterlacingData;
use num_traits::Zero;
use serde_json::{json, Map, Value};

fn bad(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

pub fn parse_rat_value(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(crate::rat::rat_int(i))
            } else {
                Err(bad(format!("non-integer number {n}; use a rational string")))
            }
        }
        _ => Err(bad(format!("expected rational, got {v}"))),
    }
}

pub fn parse_gauss_value(v: &Value) -> Result<GaussRat> {
    match v {
        Value::Object(m) => {
            let zero = || Rat::from(num_bigint::BigInt::from(0));
            let re = m.get("re").map(parse_rat_value).transpose()?.unwrap_or_else(zero);
            let im = m.get("im").map(parse_rat_value).transpose()?.unwrap_or_else(zero);
            for k in m.keys() {
                if k != "re" && k != "im" {
                    return Err(bad(format!("unexpected key {k:?} in complex literal")));
                }
            }
            Ok(GaussRat::new(re, im))
        }
        _ => Ok(GaussRat::from_rat(parse_rat_value(v)?)),
    }
}

pub fn parse_poly_value(v: &Value) -> Result<Poly> {
    let arr = v.as_array().ok_or_else(|| bad("polynomial must be a coefficient array"))?;
    Ok(Poly::new(arr.iter().map(parse_gauss_value).collect::<Result<Vec<_>>>()?))
}

pub fn parse_ratfn_value(v: &Value) -> Result<RatFn> {
    match v {
        Value::Array(_) => Ok(RatFn::from_poly(parse_poly_value(v)?)),
        Value::Object(m) => {
            let num = parse_poly_value(m.get("num").ok_or_else(|| bad("missing \"num\""))?)?;
            let den = match m.get("den") {
                Some(d) => parse_poly_value(d)?,
                None => Poly::one(),
            };
            RatFn::new(num, den)
        }
        // a bare rational is a constant function
        Value::String(_) | Value::Number(_) => {
            Ok(RatFn::constant(parse_gauss_value(v)?))
        }
        _ => Err(bad(format!("expected rational function, got {v}"))),
    }
}

pub fn parse_matrix_value(v: &Value) -> Result<MatRatFn> {
    let m = v.as_object().ok_or_else(|| bad("matrix must be an object"))?;
    let entries = m
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("matrix needs an \"entries\" array"))?;
    let n = match m.get("n") {
        Some(nv) => nv.as_u64().ok_or_else(|| bad("\"n\" must be an integer"))? as usize,
        None => entries.len(),
    };
    if entries.len() != n {
        return Err(bad(format!("expected {n} rows, got {}", entries.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for row in entries {
        let cells = row.as_array().ok_or_else(|| bad("matrix row must be an array"))?;
        if cells.len() != n {
            return Err(bad(format!("expected {n} columns, got {}", cells.len())));
        }
        rows.push(cells.iter().map(parse_ratfn_value).collect::<Result<Vec<_>>>()?);
    }
    MatRatFn::from_rows(rows)
}

pub fn parse_point_value(v: &Value) -> Result<Point> {
    match v {
        Value::Object(m) => {
            let poly_v = m.get("poly").ok_or_else(|| bad("algebraic point needs \"poly\""))?;
            let arr = poly_v.as_array().ok_or_else(|| bad("\"poly\" must be an array"))?;
            let coeffs = arr.iter().map(parse_rat_value).collect::<Result<Vec<_>>>()?;
            let rp = RPoly::new(coeffs);
            let interval = m
                .get("interval")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("algebraic point needs \"interval\": [lo, hi]"))?;
            if interval.len() != 2 {
                return Err(bad("\"interval\" must have two endpoints"));
            }
            let lo = parse_rat_value(&interval[0])?;
            let hi = parse_rat_value(&interval[1])?;
            canonical_point(rp, lo, hi)
        }
        _ => Ok(Point::Rational(parse_rat_value(v)?)),
    }
}

/// Canonicalizes a user-supplied algebraic point: squarefree defining
/// polynomial, verified isolation, rational roots recognized and returned
/// as rational points.
fn canonical_point(p: RPoly, lo: Rat, hi: Rat) -> Result<Point> {
    if p.is_zero() {
        return Err(bad("zero defining polynomial"));
    }
    let sf = p.squarefree_part()?;
    if sf.is_constant() {
        return Err(bad("defining polynomial has no roots"));
    }
    // the interval must isolate exactly one root
    if sf.eval(&lo).is_zero() || sf.eval(&hi).is_zero() {
        return Err(bad("interval endpoint is a root"));
    }
    if sf.sturm_count(&lo, &hi)? != 1 {
        return Err(bad("interval does not isolate exactly one root"));
    }
    let (rats, rest) = crate::roots::extract_rational_roots(&sf);
    for r in rats {
        if lo < r && r < hi {
            return Ok(Point::Rational(r));
        }
    }
    // the isolated root is (as far as extraction can tell) irrational
    let defining = if !rest.is_constant() && rest.sturm_count(&lo, &hi).ok() == Some(1) {
        rest
    } else {
        sf
    };
    Ok(Point::Algebraic(AlgebraicReal::new(defining, lo, hi)?))
}

pub fn parse_divisor_value(v: &Value) -> Result<DivisorFn> {
    let arr = v.as_array().ok_or_else(|| bad("divisor must be an array"))?;
    let mut entries = Vec::new();
    for item in arr {
        let m = item.as_object().ok_or_else(|| bad("divisor entry must be an object"))?;
        let point = parse_point_value(m.get("point").ok_or_else(|| bad("missing \"point\""))?)?;
        let value = m
            .get("value")
            .and_then(Value::as_i64)
            .ok_or_else(|| bad("missing integer \"value\""))?;
        entries.push((point, value));
    }
    DivisorFn::from_entries(entries)
}

pub fn parse_interlacing_value(v: &Value) -> Result<InterlacingData> {
    let m = v.as_object().ok_or_else(|| bad("interlacing data must be an object"))?;
    let get_list = |key: &str| -> Result<Vec<Rat>> {
        match m.get(key) {
            None => Ok(vec![]),
            Some(Value::Array(a)) => a.iter().map(parse_rat_value).collect(),
            Some(_) => Err(bad(format!("\"{key}\" must be an array"))),
        }
    };
    let scale = match m.get("scale") {
        None => Rat::from(num_bigint::BigInt::from(1)),
        Some(s) => parse_rat_value(s)?,
    };
    Ok(InterlacingData { zeros: get_list("zeros")?, poles: get_list("poles")?, scale })
}

/// A de Branges input file: either the pair or a single `E` (HB mode,
/// standing for `[E^#, E]`).
pub enum DeBrangesFile {
    Pair(DeBrangesInput),
    Single(MatRatFn),
}

pub fn parse_debranges_value(v: &Value) -> Result<DeBrangesFile> {
    let m = v.as_object().ok_or_else(|| bad("de Branges input must be an object"))?;
    if let Some(e) = m.get("E") {
        return Ok(DeBrangesFile::Single(parse_matrix_value(e)?));
    }
    let em = m.get("E_minus").ok_or_else(|| bad("missing \"E_minus\" (or \"E\")"))?;
    let ep = m.get("E_plus").ok_or_else(|| bad("missing \"E_plus\""))?;
    Ok(DeBrangesFile::Pair(DeBrangesInput::new(
        parse_matrix_value(em)?,
        parse_matrix_value(ep)?,
    )?))
}

// --- emitters ---------------------------------------------------------

pub fn rat_to_value(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

pub fn gauss_to_value(g: &GaussRat) -> Value {
    if g.is_real() {
        rat_to_value(&g.re)
    } else {
        json!({ "re": format_rat(&g.re), "im": format_rat(&g.im) })
    }
}

pub fn poly_to_value(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(gauss_to_value).collect())
}

pub fn ratfn_to_value(f: &RatFn) -> Value {
    json!({ "num": poly_to_value(f.num()), "den": poly_to_value(f.den()) })
}

pub fn matrix_to_value(m: &MatRatFn) -> Value {
    let n = m.n();
    let rows: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| ratfn_to_value(&m[(i, j)])).collect()))
        .collect();
    json!({ "n": n, "entries": rows })
}

pub fn point_to_value(p: &Point) -> Value {
    match p {
        Point::Rational(r) => rat_to_value(r),
        Point::Algebraic(a) => {
            let coeffs: Vec<Value> =
                a.poly.coeffs().iter().map(|c| Value::String(format_rat(c))).collect();
            let mut m = Map::new();
            m.insert("poly".into(), Value::Array(coeffs));
            m.insert(
                "interval".into(),
                Value::Array(vec![
                    Value::String(format_rat(&a.lo)),
                    Value::String(format_rat(&a.hi)),
                ]),
            );
            m.insert("approx".into(), json!(a.approx_f64()));
            Value::Object(m)
        }
    }
}

pub fn divisor_to_value(d: &DivisorFn) -> Value {
    Value::Array(
        d.support()
            .iter()
            .map(|(p, v)| json!({ "point": point_to_value(p), "value": v }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn ratfn_round_trip() {
        let v: Value = serde_json::from_str(r#"{"num": ["-1", "1"], "den": ["0", "1"]}"#).unwrap();
        let f = parse_ratfn_value(&v).unwrap();
        assert_eq!(
            f,
            RatFn::new(Poly::from_i64(&[-1, 1]), Poly::from_i64(&[0, 1])).unwrap()
        );
        let back = ratfn_to_value(&f);
        assert_eq!(parse_ratfn_value(&back).unwrap(), f);
        // complex coefficients and integers
        let v: Value = serde_json::from_str(r#"{"num": [{"re": "0", "im": "1"}, 2]}"#).unwrap();
        let f = parse_ratfn_value(&v).unwrap();
        assert_eq!(f.num().coeff(0), GaussRat::i());
        assert_eq!(f.num().coeff(1), GaussRat::from_int(2));
    }

    #[test]
    fn matrix_round_trip() {
        let v: Value = serde_json::from_str(
            r#"{"n": 2, "entries": [[["0","1"], ["1"]], [["1"], ["0","1"]]]}"#,
        )
        .unwrap();
        let m = parse_matrix_value(&v).unwrap();
        assert_eq!(m.n(), 2);
        assert_eq!(m[(0, 0)], RatFn::z());
        let back = matrix_to_value(&m);
        assert_eq!(parse_matrix_value(&back).unwrap(), m);
        // dimension mismatch
        let v: Value = serde_json::from_str(r#"{"n": 2, "entries": [[["1"]]]}"#).unwrap();
        assert!(parse_matrix_value(&v).is_err());
    }

    #[test]
    fn divisor_round_trip_with_algebraic_point() {
        let v: Value = serde_json::from_str(
            r#"[
                {"point": "0", "value": -3},
                {"point": {"poly": ["-2", "0", "1"], "interval": ["1", "2"]}, "value": 1},
                {"point": {"poly": ["-2", "0", "1"], "interval": ["-2", "-1"]}, "value": 1}
            ]"#,
        )
        .unwrap();
        let d = parse_divisor_value(&v).unwrap();
        assert_eq!(d.values().collect::<Vec<_>>(), vec![1, -3, 1]);
        let back = divisor_to_value(&d);
        let d2 = parse_divisor_value(&back).unwrap();
        assert_eq!(d2.len(), 3);
        for ((p, v), (q, w)) in d.support().iter().zip(d2.support()) {
            assert!(p.try_eq(q).unwrap());
            assert_eq!(v, w);
        }
    }

    #[test]
    fn algebraic_point_canonicalizes_rational_roots() {
        // root of z^2 - 4 in (1, 3) is the rational 2
        let v: Value =
            serde_json::from_str(r#"{"poly": ["-4", "0", "1"], "interval": ["1", "3"]}"#).unwrap();
        let p = parse_point_value(&v).unwrap();
        assert_eq!(p.as_rational(), Some(&rat_int(2)));
        // malformed: interval containing two roots
        let v: Value =
            serde_json::from_str(r#"{"poly": ["-2", "0", "1"], "interval": ["-2", "2"]}"#).unwrap();
        assert!(parse_point_value(&v).is_err());
    }

    #[test]
    fn interlacing_parse() {
        let v: Value =
            serde_json::from_str(r#"{"zeros": ["1"], "poles": ["0"], "scale": "1/2"}"#).unwrap();
        let d = parse_interlacing_value(&v).unwrap();
        assert_eq!(d.zeros, vec![rat_int(1)]);
        assert_eq!(d.poles, vec![rat_int(0)]);
        assert_eq!(d.scale, rat(1, 2));
    }
}
