//! Serializable report documents. Field order is declaration order, floats
//! are finite with negative zero normalized, so serialization is
//! byte-deterministic.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
pub struct Provenance {
    pub config_sha256: String,
    pub version: String,
}

pub fn provenance(config_bytes: &[u8]) -> Provenance {
    let digest = Sha256::digest(config_bytes);
    let config_sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
    Provenance {
        config_sha256,
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

#[derive(Serialize)]
pub struct Tolerances {
    pub singular_tol: f64,
    pub tight_tol: f64,
    pub operator_tol: f64,
}

#[derive(Serialize)]
pub struct Flags {
    pub reproducing_pair: bool,
    /// Meaningful for self-paired families only; `null` for genuine pairs.
    pub frame: Option<bool>,
    pub bessel_note: String,
    pub tight: bool,
    pub self_adjoint_positive: bool,
}

#[derive(Serialize)]
pub struct DenseVerification {
    pub cap: usize,
    pub max_deviation: f64,
    pub within_tolerance: bool,
}

/// Serialized symbol report with bounds `a ≤ b ≤ c` and diagnostic flags.
#[derive(Serialize)]
pub struct DiagnosticsDocument {
    pub kind: String,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub flags: Flags,
    pub symbol: Vec<[f64; 2]>,
    pub tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dense_verification: Option<DenseVerification>,
    pub provenance: Provenance,
}

#[derive(Serialize)]
pub struct DualReport {
    pub verification_max_symbol_deviation: f64,
    pub labels: Vec<String>,
    pub files: Vec<String>,
    pub tolerances: Tolerances,
    pub provenance: Provenance,
}

#[derive(Serialize)]
pub struct ReconstructSummary {
    pub reconstruction_norm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relative_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub within_tolerance: Option<bool>,
    pub operator_tol: f64,
    pub provenance: Provenance,
}

#[derive(Serialize)]
pub struct GridEcho {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

#[derive(Serialize)]
pub struct AwhPoint {
    pub xi: f64,
    pub value: f64,
    /// Documented tail-truncation bound `2(1+|ξ|)/cap`, reported for the
    /// warped example configuration.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound_estimate: Option<f64>,
}

#[derive(Serialize)]
pub struct XiValue {
    pub xi: f64,
    pub value: f64,
}

#[derive(Serialize)]
pub struct DerivativePoint {
    pub xi: f64,
    pub finite_diff: f64,
    pub analytic: f64,
    pub abs_error: f64,
}

#[derive(Serialize)]
pub struct WaveletPoint {
    pub xi: f64,
    pub value: f64,
    pub range_covered: bool,
}

#[derive(Serialize)]
pub struct CommutationPoint {
    pub j: i32,
    pub deviation: f64,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum JobReport {
    AwhSymbol {
        beta: String,
        eta: String,
        s: f64,
        grid: GridEcho,
        results: Vec<AwhPoint>,
    },
    ExactSymbol {
        abs_tol: f64,
        results: Vec<XiValue>,
    },
    DerivativeCheck {
        h: f64,
        results: Vec<DerivativePoint>,
    },
    EnergySeries {
        omega_density: u32,
        xi_grid: GridEcho,
        caps: Vec<f64>,
        energies: Vec<f64>,
        increments: Vec<f64>,
    },
    LambdaSection {
        lambda: f64,
        grid: GridEcho,
        value: f64,
    },
    WaveletSymbol {
        j_min: i32,
        j_max: i32,
        results: Vec<WaveletPoint>,
    },
    DualCommutation {
        xi_grid: GridEcho,
        results: Vec<CommutationPoint>,
    },
}

#[derive(Serialize)]
pub struct ReallineReport {
    pub jobs: Vec<JobReport>,
    pub exact_symbol_abs_tol: f64,
    pub operator_tol: f64,
    pub provenance: Provenance,
}

/// Pretty JSON with a trailing newline.
pub fn to_json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>, serde_json::Error> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}
