//! Matrix files: `{"n":5,"entries":[[re,im], ...25 row-major],"provenance":?}`.
//!
//! Written by hand with the same `{:.16e}` decimals as the reports, so a
//! write → read → write cycle is byte-identical. Reading goes through
//! serde_json and tolerates any whitespace or field order.

use serde::Deserialize;
use spin2mat::amplitudes::ParameterPoint;
use spin2mat::generator::Spectrum;
use spin2mat::matrix::{zero_matrix, Matrix5};
use spin2mat::Complex64;

use crate::report::real;

pub struct MatrixFile {
    pub entries: Matrix5,
    pub provenance: Option<(ParameterPoint, Spectrum)>,
}

pub fn render(m: &Matrix5, provenance: Option<(&ParameterPoint, &Spectrum)>) -> String {
    let mut out = String::from("{\"n\":5,\"entries\":[");
    for (k, z) in m.iter().flatten().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&format!("[{},{}]", real(z.re), real(z.im)));
    }
    out.push(']');
    if let Some((point, spectrum)) = provenance {
        out.push_str(",\"provenance\":{\"angles\":[");
        let angles = point.angles();
        for (k, a) in angles.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&real(*a));
        }
        out.push_str("],\"spectrum\":[");
        for (k, z) in spectrum.values.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&format!("[{},{}]", real(z.re), real(z.im)));
        }
        out.push_str("]}");
    }
    out.push_str("}\n");
    out
}

#[derive(Deserialize)]
struct RawFile {
    n: usize,
    entries: Vec<[f64; 2]>,
    provenance: Option<RawProvenance>,
}

#[derive(Deserialize)]
struct RawProvenance {
    angles: [f64; 4],
    spectrum: Vec<[f64; 2]>,
}

pub fn parse(text: &str) -> Result<MatrixFile, String> {
    let raw: RawFile =
        serde_json::from_str(text).map_err(|e| format!("invalid matrix file: {e}"))?;
    if raw.n != 5 {
        return Err(format!("unsupported matrix size n = {}", raw.n));
    }
    if raw.entries.len() != 25 {
        return Err(format!(
            "expected 25 entries (row-major 5x5), found {}",
            raw.entries.len()
        ));
    }
    let mut entries = zero_matrix();
    for (k, [re, im]) in raw.entries.iter().enumerate() {
        entries[k / 5][k % 5] = Complex64::new(*re, *im);
    }
    let provenance = match raw.provenance {
        None => None,
        Some(p) => {
            if p.spectrum.len() != 5 {
                return Err(format!(
                    "provenance spectrum must hold 5 values, found {}",
                    p.spectrum.len()
                ));
            }
            let [t, ph, tp, pp] = p.angles;
            let point = ParameterPoint::new(t, ph, tp, pp);
            let values =
                core::array::from_fn(|k| Complex64::new(p.spectrum[k][0], p.spectrum[k][1]));
            Some((point, Spectrum::new(values)))
        }
    };
    Ok(MatrixFile {
        entries,
        provenance,
    })
}
