//! Scalar parsing the derive macro can't do: complex literals and the
//! `--tol.<name>` override family.

use spin2mat::Complex64;

/// Parse "re", "re+imi" or "re-imi" (also bare "imi", "i", "-i").
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t = text.trim();
    let bad = || format!("malformed complex number {t:?} (expected re, re+imi or re-imi)");
    let Some(body) = t.strip_suffix(['i', 'I']) else {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    // Split at the sign that separates real from imaginary — the last +/-
    // that is neither leading nor an exponent sign.
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let imaginary_part = |s: &str| -> Result<f64, String> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            s => s.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => {
            let re = body[..k].parse::<f64>().map_err(|_| bad())?;
            Ok(Complex64::new(re, imaginary_part(&body[k..])?))
        }
        None => Ok(Complex64::new(0.0, imaginary_part(body)?)),
    }
}

/// Named tolerance values pulled off the command line.
pub type ToleranceOverrides = Vec<(String, f64)>;

/// Strip `--tol.<name> <value>` / `--tol.<name>=<value>` pairs out of argv
/// before clap sees them, returning the cleaned argv and the overrides.
pub fn extract_tolerance_args(
    argv: Vec<String>,
) -> Result<(Vec<String>, ToleranceOverrides), String> {
    let mut rest = Vec::with_capacity(argv.len());
    let mut overrides = Vec::new();
    let mut it = argv.into_iter();
    while let Some(arg) = it.next() {
        let Some(spec) = arg.strip_prefix("--tol.") else {
            rest.push(arg);
            continue;
        };
        let (name, value_text) = match spec.split_once('=') {
            Some((n, v)) => (n.to_string(), v.to_string()),
            None => match it.next() {
                Some(v) => (spec.to_string(), v),
                None => return Err(format!("--tol.{spec} needs a value")),
            },
        };
        let value: f64 = value_text
            .parse()
            .map_err(|_| format!("--tol.{name}: malformed value {value_text:?}"))?;
        if value <= 0.0 || value.is_nan() {
            return Err(format!("--tol.{name}: value must be positive"));
        }
        overrides.push((name, value));
    }
    Ok((rest, overrides))
}
