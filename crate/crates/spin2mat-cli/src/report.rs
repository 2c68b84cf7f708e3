//! Deterministic report emission.
//!
//! Every command builds a [`Val`] tree and serializes it with one of two
//! writers. Floats always print as `{:.16e}` (17 significant digits), so a
//! given tree serializes to identical bytes on every run and survives a
//! parse → print round trip without loss.

use spin2mat::amplitudes::ParameterPoint;
use spin2mat::generator::{EigenPair, FamilyFlags};
use spin2mat::matrix::Matrix5;
use spin2mat::Complex64;

pub enum Val {
    Bool(bool),
    Int(i64),
    UInt(u64),
    Real(f64),
    Str(String),
    Pair(Complex64),
    Null,
    List(Vec<Val>),
    Obj(Vec<(&'static str, Val)>),
}

pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

pub fn to_json(v: &Val) -> String {
    match v {
        Val::Bool(b) => b.to_string(),
        Val::Int(n) => n.to_string(),
        Val::UInt(n) => n.to_string(),
        Val::Real(x) => real(*x),
        Val::Str(s) => format!("\"{}\"", json_escape(s)),
        Val::Pair(z) => format!("[{},{}]", real(z.re), real(z.im)),
        Val::Null => "null".into(),
        Val::List(items) => {
            let body: Vec<String> = items.iter().map(to_json).collect();
            format!("[{}]", body.join(","))
        }
        Val::Obj(fields) => {
            let body: Vec<String> = fields
                .iter()
                .map(|(k, v)| format!("\"{k}\":{}", to_json(v)))
                .collect();
            format!("{{{}}}", body.join(","))
        }
    }
}

/// Flatten to `path,value` lines; list indices are 1-based and complex
/// leaves emit `path,re,im` on one line. Paths and values never contain
/// commas, so the output needs no quoting.
pub fn to_csv(v: &Val) -> String {
    let mut out = String::new();
    flatten(v, String::new(), &mut out);
    out
}

fn flatten(v: &Val, path: String, out: &mut String) {
    let line = |out: &mut String, rest: String| {
        out.push_str(&path);
        out.push(',');
        out.push_str(&rest);
        out.push('\n');
    };
    match v {
        Val::Bool(b) => line(out, b.to_string()),
        Val::Int(n) => line(out, n.to_string()),
        Val::UInt(n) => line(out, n.to_string()),
        Val::Real(x) => line(out, real(*x)),
        Val::Str(s) => line(out, s.clone()),
        Val::Pair(z) => line(out, format!("{},{}", real(z.re), real(z.im))),
        Val::Null => line(out, "null".into()),
        Val::List(items) => {
            for (k, item) in items.iter().enumerate() {
                flatten(item, format!("{path}.{}", k + 1), out);
            }
        }
        Val::Obj(fields) => {
            for (key, item) in fields {
                let sub = if path.is_empty() {
                    (*key).to_string()
                } else {
                    format!("{path}.{key}")
                };
                flatten(item, sub, out);
            }
        }
    }
}

pub fn point_val(point: &ParameterPoint) -> Val {
    let [t, p, tp, pp] = point.angles();
    Val::Obj(vec![
        ("theta", Val::Real(t)),
        ("phi", Val::Real(p)),
        ("theta_p", Val::Real(tp)),
        ("phi_p", Val::Real(pp)),
    ])
}

pub fn matrix_val(m: &Matrix5) -> Val {
    Val::List(
        m.iter()
            .map(|row| Val::List(row.iter().map(|z| Val::Pair(*z)).collect()))
            .collect(),
    )
}

pub fn values_val(values: &[Complex64]) -> Val {
    Val::List(values.iter().map(|z| Val::Pair(*z)).collect())
}

pub fn pairs_val(pairs: &[EigenPair; 5]) -> (Val, Val) {
    let values = Val::List(pairs.iter().map(|p| Val::Pair(p.value)).collect());
    let vectors = Val::List(
        pairs
            .iter()
            .map(|p| Val::List(p.vector.iter().map(|z| Val::Pair(*z)).collect()))
            .collect(),
    );
    (values, vectors)
}

pub fn flags_val(flags: &FamilyFlags) -> Val {
    Val::Obj(
        flags
            .named()
            .iter()
            .map(|(name, on)| (*name, Val::Bool(*on)))
            .collect(),
    )
}
