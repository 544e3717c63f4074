//! Deterministic file I/O: CSV and binary payloads, staged atomic writes.
//!
//! Floats are written as shortest round-trip decimals with lowercase
//! e-notation (the same grammar serde_json uses), with negative zero
//! normalized, so identical runs produce byte-identical files. Binary
//! payloads are little-endian f64 pairs (real, imag) prefixed by an 8-byte
//! unsigned count.

use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::error::{CliError, CliResult};

/// Shortest round-trip decimal; rejects non-finite values.
pub fn fmt_f64(x: f64) -> CliResult<String> {
    if !x.is_finite() {
        return Err(CliError::Guard(format!("non-finite value {x} in output")));
    }
    let x = if x == 0.0 { 0.0 } else { x };
    Ok(ryu::Buffer::new().format(x).to_string())
}

/// Normalizes −0 for values embedded in JSON reports.
pub fn json_f64(x: f64) -> CliResult<f64> {
    if !x.is_finite() {
        return Err(CliError::Guard(format!("non-finite value {x} in report")));
    }
    Ok(if x == 0.0 { 0.0 } else { x })
}

// ---------------------------------------------------------------------------
// signals
// ---------------------------------------------------------------------------

pub fn write_signal_csv(values: &[Complex64]) -> CliResult<Vec<u8>> {
    let mut out = String::from("index,real,imag\n");
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{i},{},{}\n", fmt_f64(v.re)?, fmt_f64(v.im)?));
    }
    Ok(out.into_bytes())
}

pub fn read_signal_csv(bytes: &[u8], expected_len: usize) -> CliResult<Vec<Complex64>> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| CliError::invalid("signal CSV is not valid UTF-8"))?;
    let mut values = vec![None; expected_len];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (lineno == 0 && line.starts_with("index")) {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(CliError::invalid(format!(
                "signal CSV line {}: expected 3 fields, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        let index: usize = fields[0]
            .parse()
            .map_err(|_| CliError::invalid(format!("bad index {:?}", fields[0])))?;
        if index >= expected_len {
            return Err(CliError::invalid(format!(
                "signal index {index} out of range (length {expected_len})"
            )));
        }
        if values[index].is_some() {
            return Err(CliError::invalid(format!("duplicate signal index {index}")));
        }
        values[index] = Some(Complex64::new(parse_f64(fields[1])?, parse_f64(fields[2])?));
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| CliError::invalid(format!("missing signal index {i}"))))
        .collect()
}

pub fn write_complex_bin(values: &[Complex64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + 16 * values.len());
    out.extend_from_slice(&(values.len() as u64).to_le_bytes());
    for v in values {
        out.extend_from_slice(&v.re.to_le_bytes());
        out.extend_from_slice(&v.im.to_le_bytes());
    }
    out
}

pub fn read_complex_bin(bytes: &[u8], expected_len: usize) -> CliResult<Vec<Complex64>> {
    if bytes.len() < 8 {
        return Err(CliError::invalid(
            "binary payload shorter than its length prefix",
        ));
    }
    let count = u64::from_le_bytes(bytes[..8].try_into().expect("8 bytes")) as usize;
    if count != expected_len {
        return Err(CliError::invalid(format!(
            "binary payload holds {count} entries, expected {expected_len}"
        )));
    }
    if bytes.len() != 8 + 16 * count {
        return Err(CliError::invalid(format!(
            "binary payload is {} bytes, expected {}",
            bytes.len(),
            8 + 16 * count
        )));
    }
    let mut values = Vec::with_capacity(count);
    for i in 0..count {
        let at = 8 + 16 * i;
        let re = f64::from_le_bytes(bytes[at..at + 8].try_into().expect("8 bytes"));
        let im = f64::from_le_bytes(bytes[at + 8..at + 16].try_into().expect("8 bytes"));
        values.push(Complex64::new(re, im));
    }
    Ok(values)
}

/// Reads a signal payload, choosing binary for `.bin` paths and CSV otherwise.
pub fn read_signal_file(path: &Path, expected_len: usize) -> CliResult<Vec<Complex64>> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e == "bin") {
        read_complex_bin(&bytes, expected_len)
    } else {
        read_signal_csv(&bytes, expected_len)
    }
}

// ---------------------------------------------------------------------------
// coefficient arrays (point-major rows, labels fastest)
// ---------------------------------------------------------------------------

pub fn write_coefficients_csv(
    values: impl Fn(usize, usize) -> Complex64,
    n_points: usize,
    labels: &[String],
) -> CliResult<Vec<u8>> {
    let mut out = String::from("point,label,real,imag\n");
    for p in 0..n_points {
        for (y, label) in labels.iter().enumerate() {
            let v = values(p, y);
            out.push_str(&format!(
                "{p},{label},{},{}\n",
                fmt_f64(v.re)?,
                fmt_f64(v.im)?
            ));
        }
    }
    Ok(out.into_bytes())
}

pub fn read_coefficients_csv(
    bytes: &[u8],
    n_points: usize,
    labels: &[String],
) -> CliResult<Vec<Complex64>> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| CliError::invalid("coefficient CSV is not valid UTF-8"))?;
    let n_labels = labels.len();
    let mut values = vec![None; n_points * n_labels];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (lineno == 0 && line.starts_with("point")) {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(CliError::invalid(format!(
                "coefficient CSV line {}: expected 4 fields, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        let point: usize = fields[0]
            .parse()
            .map_err(|_| CliError::invalid(format!("bad point index {:?}", fields[0])))?;
        let label_idx = labels
            .iter()
            .position(|l| l == fields[1])
            .ok_or_else(|| CliError::invalid(format!("unknown label {:?}", fields[1])))?;
        if point >= n_points {
            return Err(CliError::invalid(format!(
                "point index {point} out of range"
            )));
        }
        let slot = point * n_labels + label_idx;
        if values[slot].is_some() {
            return Err(CliError::invalid(format!(
                "duplicate coefficient ({point}, {})",
                fields[1]
            )));
        }
        values[slot] = Some(Complex64::new(parse_f64(fields[2])?, parse_f64(fields[3])?));
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                CliError::invalid(format!(
                    "missing coefficient at point {}, label {:?}",
                    i / n_labels,
                    labels[i % n_labels]
                ))
            })
        })
        .collect()
}

fn parse_f64(field: &str) -> CliResult<f64> {
    let v: f64 = field
        .parse()
        .map_err(|_| CliError::invalid(format!("bad float {field:?}")))?;
    if !v.is_finite() {
        return Err(CliError::invalid(format!("non-finite float {field:?}")));
    }
    Ok(v)
}

// ---------------------------------------------------------------------------
// staged atomic output
// ---------------------------------------------------------------------------

/// Collects every output in memory; nothing touches the filesystem before
/// [`OutputStage::commit`], which writes temp files and renames them into
/// place. A failing command therefore leaves no partial outputs.
#[derive(Default)]
pub struct OutputStage {
    files: Vec<(PathBuf, Vec<u8>)>,
}

impl OutputStage {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, path: PathBuf, bytes: Vec<u8>) {
        self.files.push((path, bytes));
    }

    pub fn commit(self) -> CliResult<()> {
        let mut staged = Vec::with_capacity(self.files.len());
        for (path, bytes) in &self.files {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(".tmp");
            let tmp = PathBuf::from(tmp);
            std::fs::write(&tmp, bytes)
                .map_err(|e| CliError::invalid(format!("cannot write {}: {e}", tmp.display())))?;
            staged.push((tmp, path.clone()));
        }
        for (tmp, path) in staged {
            std::fs::rename(&tmp, &path).map_err(|e| {
                CliError::invalid(format!("cannot rename into {}: {e}", path.display()))
            })?;
        }
        Ok(())
    }
}
