//! Number formatting shared by the JSON writers.

use serde::Serializer;
use serde_json::value::RawValue;

/// Formats a finite `f64` like C's `%.17g`: 17 significant digits with
/// trailing zeros removed. The result always parses back to the same bits.
pub fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub(crate) fn serialize_g17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    let raw = RawValue::from_string(format_g17(*x)).map_err(serde::ser::Error::custom)?;
    serde::Serialize::serialize(&raw, s)
}

/// Writes `+inf` as the string `"inf"`, every other value as a number.
pub(crate) fn serialize_ext<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if *x == f64::INFINITY {
        s.serialize_str("inf")
    } else {
        s.serialize_f64(*x)
    }
}

pub(crate) fn serialize_ext_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => serialize_ext(v, s),
        None => s.serialize_none(),
    }
}
