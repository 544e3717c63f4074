//! JSON run configuration: schema, validation, and builders for the domain
//! objects.
//!
//! Window values appear inline as `[real, imag]` pairs or by file reference
//! (CSV, or binary when the path ends in `.bin`). Paths inside the config are
//! resolved relative to the config file's directory.

use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Deserialize;

use nsgkit::realline::{AwhConfig, BetaSpec, EtaSpec, QuadratureGrid, SpectralWindow};
use nsgkit::{FiniteLcaGroup, PairSystem, Side, Signal, SystemKind, WindowFamily};

use crate::error::{CliError, CliResult};
use crate::io;

/// Top-level run configuration. Unknown fields are rejected.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub group: Option<GroupCfg>,
    pub kind: Option<KindCfg>,
    /// Analysis family; also the synthesis family when `synthesis_windows`
    /// is absent (single-family mode).
    pub windows: Option<Vec<WindowCfg>>,
    pub synthesis_windows: Option<Vec<WindowCfg>>,
    /// Operator tolerance recorded in reports; overridden by `--tolerance`.
    pub tolerance: Option<f64>,
    /// Cross-check the symbol against the dense resolution matrix
    /// (capped by `NSGKIT_ORACLE_CAP`, default 256).
    pub verify_dense: Option<bool>,
    /// Signal to compare against in the reconstruct summary.
    pub reference_signal: Option<String>,
    pub outputs: Option<OutputsCfg>,
    pub realline: Option<ReallineCfg>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupCfg {
    pub orders: Vec<u32>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KindCfg {
    Translation,
    Character,
}

impl From<KindCfg> for SystemKind {
    fn from(k: KindCfg) -> Self {
        match k {
            KindCfg::Translation => SystemKind::TranslationInvariant,
            KindCfg::Character => SystemKind::CharacterInvariant,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowCfg {
    pub label: String,
    pub weight: f64,
    /// Inline values, one `[real, imag]` pair per group element.
    pub values: Option<Vec<[f64; 2]>>,
    /// Signal file (CSV, or binary for `.bin` paths).
    pub file: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputsCfg {
    pub symbol_csv: Option<String>,
    pub report_json: Option<String>,
    pub coefficients: Option<String>,
    pub signal: Option<String>,
    pub summary_json: Option<String>,
    pub dual_prefix: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReallineCfg {
    pub jobs: Vec<ReallineJob>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ReallineJob {
    AwhSymbol {
        beta: BetaCfg,
        eta: EtaCfg,
        s: f64,
        psi_hat: WindowSpecCfg,
        phi_hat: WindowSpecCfg,
        grid: GridCfg,
        xi: Vec<f64>,
    },
    ExactSymbol {
        psi_hat: WindowSpecCfg,
        phi_hat: WindowSpecCfg,
        xi: Vec<f64>,
    },
    DerivativeCheck {
        psi_hat: WindowSpecCfg,
        phi_hat: WindowSpecCfg,
        xi: Vec<f64>,
        h: f64,
    },
    EnergySeries {
        psi_hat: WindowSpecCfg,
        f_hat: WindowSpecCfg,
        caps: Vec<f64>,
        xi_grid: GridCfg,
        omega_density: u32,
    },
    LambdaSection {
        psi_hat: WindowSpecCfg,
        phi_hat: WindowSpecCfg,
        lambda: f64,
        grid: GridCfg,
    },
    WaveletSymbol {
        psi_hat: WindowSpecCfg,
        j_min: i32,
        j_max: i32,
        xi: Vec<f64>,
    },
    DualCommutation {
        psi_hat: WindowSpecCfg,
        j: Vec<i32>,
        xi_grid: GridCfg,
    },
}

impl ReallineJob {
    pub fn is_wavelet(&self) -> bool {
        matches!(
            self,
            ReallineJob::WaveletSymbol { .. } | ReallineJob::DualCommutation { .. }
        )
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BetaCfg {
    Constant { c: f64 },
    Identity,
    InverseLinear,
    PowerLaw { alpha: f64 },
}

impl BetaCfg {
    pub fn build(&self) -> BetaSpec {
        match self {
            BetaCfg::Constant { c } => BetaSpec::Constant(*c),
            BetaCfg::Identity => BetaSpec::Identity,
            BetaCfg::InverseLinear => BetaSpec::InverseLinear,
            BetaCfg::PowerLaw { alpha } => BetaSpec::PowerLaw(*alpha),
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EtaCfg {
    Zero,
    Identity,
}

impl EtaCfg {
    pub fn build(&self) -> EtaSpec {
        match self {
            EtaCfg::Zero => EtaSpec::Zero,
            EtaCfg::Identity => EtaSpec::Identity,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WindowSpecCfg {
    Piecewise {
        breakpoints: Vec<f64>,
        pieces: Vec<Vec<f64>>,
    },
    Hat {
        left: f64,
        center: f64,
        right: f64,
    },
    Gaussian {
        center: f64,
        width: f64,
    },
    Indicator {
        lo: f64,
        hi: f64,
        #[serde(default = "default_true")]
        closed_hi: bool,
    },
}

fn default_true() -> bool {
    true
}

impl WindowSpecCfg {
    pub fn build(&self) -> CliResult<SpectralWindow> {
        Ok(match self {
            WindowSpecCfg::Piecewise {
                breakpoints,
                pieces,
            } => SpectralWindow::piecewise(breakpoints.clone(), pieces.clone())?,
            WindowSpecCfg::Hat {
                left,
                center,
                right,
            } => SpectralWindow::hat(*left, *center, *right)?,
            WindowSpecCfg::Gaussian { center, width } => SpectralWindow::gaussian(*center, *width)?,
            WindowSpecCfg::Indicator { lo, hi, closed_hi } => {
                if *closed_hi {
                    SpectralWindow::indicator(*lo, *hi)?
                } else {
                    SpectralWindow::indicator_half_open(*lo, *hi)?
                }
            }
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridCfg {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridCfg {
    pub fn build(&self) -> CliResult<QuadratureGrid> {
        Ok(QuadratureGrid::new(self.min, self.max, self.count)?)
    }
}

/// A loaded config with the raw bytes (for provenance hashing) and the base
/// directory used to resolve relative paths.
pub struct LoadedConfig {
    pub config: RunConfig,
    pub bytes: Vec<u8>,
    pub base_dir: PathBuf,
}

pub fn load(path: &Path) -> CliResult<LoadedConfig> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::invalid(format!("cannot read config {}: {e}", path.display())))?;
    let config: RunConfig = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::invalid(format!("config {}: {e}", path.display())))?;
    let base_dir = path
        .parent()
        .unwrap_or_else(|| Path::new("."))
        .to_path_buf();
    Ok(LoadedConfig {
        config,
        bytes,
        base_dir,
    })
}

impl LoadedConfig {
    /// Resolves a config-relative path.
    pub fn resolve(&self, rel: &str) -> PathBuf {
        let p = Path::new(rel);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base_dir.join(p)
        }
    }

    pub fn group(&self) -> CliResult<FiniteLcaGroup> {
        let cfg = self
            .config
            .group
            .as_ref()
            .ok_or_else(|| CliError::invalid("config is missing the \"group\" section"))?;
        Ok(FiniteLcaGroup::new(&cfg.orders)?)
    }

    pub fn kind(&self) -> CliResult<SystemKind> {
        let kind = self
            .config
            .kind
            .ok_or_else(|| CliError::invalid("config is missing the \"kind\" field"))?;
        Ok(kind.into())
    }

    fn family(&self, group: &FiniteLcaGroup, windows: &[WindowCfg]) -> CliResult<WindowFamily> {
        let mut entries = Vec::with_capacity(windows.len());
        for w in windows {
            validate_label(&w.label)?;
            let values = match (&w.values, &w.file) {
                (Some(values), None) => values
                    .iter()
                    .map(|[re, im]| Complex64::new(*re, *im))
                    .collect::<Vec<_>>(),
                (None, Some(file)) => {
                    let path = self.resolve(file);
                    io::read_signal_file(&path, group.cardinality())?
                }
                _ => {
                    return Err(CliError::invalid(format!(
                        "window {:?} needs exactly one of \"values\" or \"file\"",
                        w.label
                    )))
                }
            };
            let signal = Signal::new(group.clone(), Side::Group, values)?;
            entries.push((w.label.clone(), w.weight, signal));
        }
        Ok(WindowFamily::new(entries)?)
    }

    /// The pair described by the config; the flag is true in single-family
    /// mode (`Ψ = Φ`).
    pub fn pair(&self) -> CliResult<(PairSystem, bool)> {
        let group = self.group()?;
        let kind = self.kind()?;
        let windows = self
            .config
            .windows
            .as_ref()
            .ok_or_else(|| CliError::invalid("config is missing the \"windows\" section"))?;
        let analysis = self.family(&group, windows)?;
        match &self.config.synthesis_windows {
            Some(synth) => {
                let synthesis = self.family(&group, synth)?;
                Ok((PairSystem::new(kind, analysis, synthesis)?, false))
            }
            None => Ok((PairSystem::self_paired(kind, analysis), true)),
        }
    }

    pub fn realline_jobs(&self) -> CliResult<&[ReallineJob]> {
        match &self.config.realline {
            Some(r) if !r.jobs.is_empty() => Ok(&r.jobs),
            _ => Err(CliError::invalid("config has no realline jobs")),
        }
    }

    pub fn outputs(&self) -> OutputsCfg {
        OutputsCfg {
            symbol_csv: self
                .config
                .outputs
                .as_ref()
                .and_then(|o| o.symbol_csv.clone()),
            report_json: self
                .config
                .outputs
                .as_ref()
                .and_then(|o| o.report_json.clone()),
            coefficients: self
                .config
                .outputs
                .as_ref()
                .and_then(|o| o.coefficients.clone()),
            signal: self.config.outputs.as_ref().and_then(|o| o.signal.clone()),
            summary_json: self
                .config
                .outputs
                .as_ref()
                .and_then(|o| o.summary_json.clone()),
            dual_prefix: self
                .config
                .outputs
                .as_ref()
                .and_then(|o| o.dual_prefix.clone()),
        }
    }

    /// `--tolerance` flag, else config field, else `1e-10`.
    pub fn operator_tolerance(&self, flag: Option<f64>) -> CliResult<f64> {
        let tol = flag.or(self.config.tolerance).unwrap_or(1e-10);
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::invalid(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        Ok(tol)
    }

    pub fn build_awh_config(&self, beta: &BetaCfg, eta: &EtaCfg, s: f64) -> CliResult<AwhConfig> {
        Ok(AwhConfig::new(beta.build(), eta.build(), s)?)
    }
}

/// Labels land in CSV columns and file names; keep them to a safe alphabet.
fn validate_label(label: &str) -> CliResult<()> {
    let ok = !label.is_empty()
        && label
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'));
    if ok {
        Ok(())
    } else {
        Err(CliError::invalid(format!(
            "label {label:?} must be nonempty and use only [A-Za-z0-9_.-]"
        )))
    }
}
