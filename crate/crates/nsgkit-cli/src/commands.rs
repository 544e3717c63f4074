//! Implementations of the CLI verbs.
//!
//! Every command validates first, computes next, stages outputs in memory,
//! and commits them atomically at the end — a nonzero exit leaves no partial
//! output files.

use std::path::PathBuf;

use num_complex::Complex64;

use nsgkit::operators::{
    analyze, canonical_dual, dense_matrix_capped, reconstruct, resolution_fast, synthesize,
    DEFAULT_ORACLE_CAP,
};
use nsgkit::realline as rl;
use nsgkit::symbol::{diagnose, symbol, TIGHT_TOL};
use nsgkit::{CoefficientArray, PairSystem, Side, Signal, SystemKind, WindowFamily};

use crate::config::{self, BetaCfg, EtaCfg, GridCfg, LoadedConfig, ReallineJob};
use crate::error::{CliError, CliResult};
use crate::io::{self, OutputStage};
use crate::report::{
    self, AwhPoint, CommutationPoint, DenseVerification, DerivativePoint, DiagnosticsDocument,
    DualReport, Flags, GridEcho, JobReport, ReallineReport, ReconstructSummary, Tolerances,
    WaveletPoint, XiValue,
};
use crate::{CommonArgs, PayloadFormat};

fn payload_ext(format: PayloadFormat) -> &'static str {
    match format {
        PayloadFormat::Csv => "csv",
        PayloadFormat::Bin => "bin",
    }
}

/// Primary output: `--out` wins, then the config path, then a default name
/// next to the config.
fn primary_path(
    args: &CommonArgs,
    loaded: &LoadedConfig,
    configured: Option<&str>,
    default_name: &str,
) -> PathBuf {
    if let Some(out) = &args.out {
        out.clone()
    } else {
        loaded.resolve(configured.unwrap_or(default_name))
    }
}

/// Secondary output: config path or default; never touched by `--out`.
fn secondary_path(loaded: &LoadedConfig, configured: Option<&str>, default_name: &str) -> PathBuf {
    loaded.resolve(configured.unwrap_or(default_name))
}

fn required_input(args: &CommonArgs) -> CliResult<&PathBuf> {
    args.input
        .as_ref()
        .ok_or_else(|| CliError::invalid("this command needs --in <file>"))
}

fn read_payload(
    path: &PathBuf,
    format: PayloadFormat,
    expected: usize,
) -> CliResult<Vec<Complex64>> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    match format {
        PayloadFormat::Csv => io::read_signal_csv(&bytes, expected),
        PayloadFormat::Bin => io::read_complex_bin(&bytes, expected),
    }
}

fn read_coefficient_payload(
    path: &PathBuf,
    format: PayloadFormat,
    n_points: usize,
    labels: &[String],
) -> CliResult<Vec<Complex64>> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    match format {
        PayloadFormat::Csv => io::read_coefficients_csv(&bytes, n_points, labels),
        PayloadFormat::Bin => io::read_complex_bin(&bytes, n_points * labels.len()),
    }
}

fn oracle_cap() -> CliResult<usize> {
    match std::env::var("NSGKIT_ORACLE_CAP") {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::invalid(format!("NSGKIT_ORACLE_CAP={raw:?} is not a size"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORACLE_CAP),
        Err(e) => Err(CliError::invalid(format!("NSGKIT_ORACLE_CAP: {e}"))),
    }
}

fn labels_of(family: &WindowFamily) -> Vec<String> {
    family.labels().map(String::from).collect()
}

// ---------------------------------------------------------------------------
// symbol / diagnose
// ---------------------------------------------------------------------------

pub fn cmd_symbol(args: &CommonArgs, write_symbol_csv: bool) -> CliResult<()> {
    let loaded = config::load(&args.config)?;
    let (pair, self_paired) = loaded.pair()?;
    let operator_tol = loaded.operator_tolerance(args.tolerance)?;
    let rep = diagnose(&pair);

    let dense_verification = if loaded.config.verify_dense.unwrap_or(false) {
        let cap = oracle_cap()?;
        let dense = dense_matrix_capped(&pair, cap)?;
        let group = pair.group().clone();
        let n = group.cardinality();
        let mut deviation = 0.0f64;
        for (c, el) in group.elements().enumerate() {
            let fast = resolution_fast(&pair, &Signal::delta(group.clone(), &el)?)?;
            for r in 0..n {
                deviation = deviation.max((fast.values()[r] - dense.get(r, c)).norm());
            }
        }
        Some(DenseVerification {
            cap,
            max_deviation: io::json_f64(deviation)?,
            within_tolerance: deviation <= operator_tol,
        })
    } else {
        None
    };

    let doc = DiagnosticsDocument {
        kind: pair.kind().name().to_string(),
        a: io::json_f64(rep.lower_bound())?,
        b: io::json_f64(rep.upper_bound())?,
        c: io::json_f64(rep.l1_bound())?,
        flags: Flags {
            reproducing_pair: rep.is_reproducing_pair(),
            frame: if self_paired {
                Some(rep.is_reproducing_pair())
            } else {
                None
            },
            bessel_note: "finite families are always Bessel; b is the Bessel bound".to_string(),
            tight: rep.is_tight(),
            self_adjoint_positive: rep.is_self_adjoint_positive(),
        },
        symbol: rep
            .values()
            .iter()
            .map(|v| Ok([io::json_f64(v.re)?, io::json_f64(v.im)?]))
            .collect::<CliResult<_>>()?,
        tolerances: Tolerances {
            singular_tol: io::json_f64(rep.singular_tol())?,
            tight_tol: TIGHT_TOL,
            operator_tol,
        },
        dense_verification,
        provenance: report::provenance(&loaded.bytes),
    };

    let outputs = loaded.outputs();
    let mut stage = OutputStage::new();
    if write_symbol_csv {
        let csv_path = primary_path(args, &loaded, outputs.symbol_csv.as_deref(), "symbol.csv");
        stage.add(csv_path, io::write_signal_csv(rep.values())?);
        let json_path = secondary_path(&loaded, outputs.report_json.as_deref(), "report.json");
        stage.add(json_path, report::to_json_bytes(&doc)?);
    } else {
        let json_path = primary_path(args, &loaded, outputs.report_json.as_deref(), "report.json");
        stage.add(json_path, report::to_json_bytes(&doc)?);
    }
    stage.commit()
}

// ---------------------------------------------------------------------------
// analyze / synthesize / reconstruct
// ---------------------------------------------------------------------------

pub fn cmd_analyze(args: &CommonArgs) -> CliResult<()> {
    let loaded = config::load(&args.config)?;
    let (pair, _) = loaded.pair()?;
    let group = pair.group().clone();
    let values = read_payload(required_input(args)?, args.format, group.cardinality())?;
    let f = Signal::new(group, Side::Group, values)?;
    let coeffs = analyze(&pair.analysis_system(), &f)?;
    let labels = labels_of(pair.analysis());

    let bytes = match args.format {
        PayloadFormat::Csv => {
            io::write_coefficients_csv(|p, y| coeffs.get(p, y), coeffs.n_points(), &labels)?
        }
        PayloadFormat::Bin => io::write_complex_bin(coeffs.values()),
    };
    let outputs = loaded.outputs();
    let default_name = format!("coefficients.{}", payload_ext(args.format));
    let path = primary_path(
        args,
        &loaded,
        outputs.coefficients.as_deref(),
        &default_name,
    );
    let mut stage = OutputStage::new();
    stage.add(path, bytes);
    stage.commit()
}

fn read_coefficients(args: &CommonArgs, pair: &PairSystem) -> CliResult<CoefficientArray> {
    let labels = labels_of(pair.analysis());
    let group = pair.group().clone();
    let values = read_coefficient_payload(
        required_input(args)?,
        args.format,
        group.cardinality(),
        &labels,
    )?;
    Ok(CoefficientArray::from_values(
        group,
        pair.kind(),
        labels.len(),
        values,
    )?)
}

pub fn cmd_synthesize(args: &CommonArgs) -> CliResult<()> {
    let loaded = config::load(&args.config)?;
    let (pair, _) = loaded.pair()?;
    let coeffs = read_coefficients(args, &pair)?;
    let out = synthesize(&pair.synthesis_system(), &coeffs)?;

    let bytes = match args.format {
        PayloadFormat::Csv => io::write_signal_csv(out.values())?,
        PayloadFormat::Bin => io::write_complex_bin(out.values()),
    };
    let outputs = loaded.outputs();
    let default_name = format!("synthesized.{}", payload_ext(args.format));
    let path = primary_path(args, &loaded, outputs.signal.as_deref(), &default_name);
    let mut stage = OutputStage::new();
    stage.add(path, bytes);
    stage.commit()
}

pub fn cmd_reconstruct(args: &CommonArgs) -> CliResult<()> {
    let loaded = config::load(&args.config)?;
    let (pair, _) = loaded.pair()?;
    let operator_tol = loaded.operator_tolerance(args.tolerance)?;
    let coeffs = read_coefficients(args, &pair)?;
    let recovered = reconstruct(&pair, &coeffs)?;

    let (relative_error, within_tolerance) = match &loaded.config.reference_signal {
        Some(ref_path) => {
            let reference =
                io::read_signal_file(&loaded.resolve(ref_path), pair.group().cardinality())?;
            let diff: f64 = recovered
                .values()
                .iter()
                .zip(&reference)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            let ref_norm: f64 = reference.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            if ref_norm == 0.0 {
                return Err(CliError::invalid("reference signal is identically zero"));
            }
            let rel = diff / ref_norm;
            (Some(io::json_f64(rel)?), Some(rel <= operator_tol))
        }
        None => (None, None),
    };

    let summary = ReconstructSummary {
        reconstruction_norm: io::json_f64(recovered.norm())?,
        relative_error,
        within_tolerance,
        operator_tol,
        provenance: report::provenance(&loaded.bytes),
    };

    let bytes = match args.format {
        PayloadFormat::Csv => io::write_signal_csv(recovered.values())?,
        PayloadFormat::Bin => io::write_complex_bin(recovered.values()),
    };
    let outputs = loaded.outputs();
    let default_name = format!("reconstructed.{}", payload_ext(args.format));
    let signal_path = primary_path(args, &loaded, outputs.signal.as_deref(), &default_name);
    let summary_path = secondary_path(&loaded, outputs.summary_json.as_deref(), "summary.json");
    let mut stage = OutputStage::new();
    stage.add(signal_path, bytes);
    stage.add(summary_path, report::to_json_bytes(&summary)?);
    stage.commit()
}

// ---------------------------------------------------------------------------
// dual
// ---------------------------------------------------------------------------

pub fn cmd_dual(args: &CommonArgs) -> CliResult<()> {
    let loaded = config::load(&args.config)?;
    let (pair, _) = loaded.pair()?;
    if pair.kind() != SystemKind::TranslationInvariant {
        return Err(CliError::invalid(
            "the canonical dual is computed for translation-invariant families",
        ));
    }
    let operator_tol = loaded.operator_tolerance(args.tolerance)?;
    let family = pair.analysis();
    let rep = diagnose(&PairSystem::self_paired(pair.kind(), family.clone()));
    if !rep.is_reproducing_pair() {
        return Err(CliError::Singular(format!(
            "family is not a frame (A = {:e} ≤ tolerance {:e})",
            rep.lower_bound(),
            rep.singular_tol()
        )));
    }
    let dual = canonical_dual(family)?;
    let cross = PairSystem::new(pair.kind(), family.clone(), dual.clone())?;
    let verification = symbol(&cross).max_deviation_from_one();
    println!("verification: max |m - 1| = {}", io::fmt_f64(verification)?);

    let outputs = loaded.outputs();
    let prefix = if let Some(out) = &args.out {
        out.clone()
    } else {
        loaded.resolve(outputs.dual_prefix.as_deref().unwrap_or("dual_"))
    };
    let ext = payload_ext(args.format);
    let mut stage = OutputStage::new();
    let mut labels = Vec::new();
    let mut files = Vec::new();
    for entry in dual.entries() {
        let path = PathBuf::from(format!("{}{}.{ext}", prefix.display(), entry.label()));
        let bytes = match args.format {
            PayloadFormat::Csv => io::write_signal_csv(entry.window().values())?,
            PayloadFormat::Bin => io::write_complex_bin(entry.window().values()),
        };
        files.push(
            path.file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default(),
        );
        labels.push(entry.label().to_string());
        stage.add(path, bytes);
    }
    let doc = DualReport {
        verification_max_symbol_deviation: io::json_f64(verification)?,
        labels,
        files,
        tolerances: Tolerances {
            singular_tol: io::json_f64(rep.singular_tol())?,
            tight_tol: TIGHT_TOL,
            operator_tol,
        },
        provenance: report::provenance(&loaded.bytes),
    };
    let report_path = secondary_path(&loaded, outputs.report_json.as_deref(), "report.json");
    stage.add(report_path, report::to_json_bytes(&doc)?);
    stage.commit()
}

// ---------------------------------------------------------------------------
// awh / wavelet
// ---------------------------------------------------------------------------

fn grid_echo(cfg: &GridCfg) -> CliResult<GridEcho> {
    Ok(GridEcho {
        min: io::json_f64(cfg.min)?,
        max: io::json_f64(cfg.max)?,
        count: cfg.count,
    })
}

fn beta_echo(beta: &BetaCfg) -> CliResult<String> {
    Ok(match beta {
        BetaCfg::Constant { c } => format!("constant({})", io::fmt_f64(*c)?),
        BetaCfg::Identity => "identity".to_string(),
        BetaCfg::InverseLinear => "inverse_linear".to_string(),
        BetaCfg::PowerLaw { alpha } => format!("power_law({})", io::fmt_f64(*alpha)?),
    })
}

fn eta_echo(eta: &EtaCfg) -> &'static str {
    match eta {
        EtaCfg::Zero => "zero",
        EtaCfg::Identity => "identity",
    }
}

fn run_job(loaded: &LoadedConfig, job: &ReallineJob) -> CliResult<JobReport> {
    Ok(match job {
        ReallineJob::AwhSymbol {
            beta,
            eta,
            s,
            psi_hat,
            phi_hat,
            grid,
            xi,
        } => {
            let config = loaded.build_awh_config(beta, eta, *s)?;
            let psi = psi_hat.build()?;
            let phi = phi_hat.build()?;
            let quad_grid = grid.build()?;
            // tail bound of the warped example: the integrand decays like
            // (1+|ξ|)/ω², so truncation at the cap omits about 2(1+|ξ|)/cap
            let warped = matches!(beta, BetaCfg::InverseLinear)
                && matches!(eta, EtaCfg::Identity)
                && *s == 1.0;
            let mut results = Vec::with_capacity(xi.len());
            for &x in xi {
                let value = rl::awh_symbol(&config, &psi, &phi, &quad_grid, x)?;
                let tail = if warped {
                    Some(io::json_f64(2.0 * (1.0 + x.abs()) / quad_grid.omega_max())?)
                } else {
                    None
                };
                results.push(AwhPoint {
                    xi: io::json_f64(x)?,
                    value: io::json_f64(value)?,
                    tail_bound_estimate: tail,
                });
            }
            JobReport::AwhSymbol {
                beta: beta_echo(beta)?,
                eta: eta_echo(eta).to_string(),
                s: io::json_f64(*s)?,
                grid: grid_echo(grid)?,
                results,
            }
        }
        ReallineJob::ExactSymbol {
            psi_hat,
            phi_hat,
            xi,
        } => {
            let psi = psi_hat.build()?;
            let phi = phi_hat.build()?;
            let mut results = Vec::with_capacity(xi.len());
            for &x in xi {
                let value = rl::example1_symbol_exact(&psi, &phi, x)?;
                results.push(XiValue {
                    xi: io::json_f64(x)?,
                    value: io::json_f64(value)?,
                });
            }
            JobReport::ExactSymbol {
                abs_tol: 1e-9,
                results,
            }
        }
        ReallineJob::DerivativeCheck {
            psi_hat,
            phi_hat,
            xi,
            h,
        } => {
            let psi = psi_hat.build()?;
            let phi = phi_hat.build()?;
            let mut results = Vec::with_capacity(xi.len());
            for &x in xi {
                let check = rl::symbol_derivative_check(&psi, &phi, x, *h)?;
                results.push(DerivativePoint {
                    xi: io::json_f64(x)?,
                    finite_diff: io::json_f64(check.finite_diff)?,
                    analytic: io::json_f64(check.analytic)?,
                    abs_error: io::json_f64((check.finite_diff - check.analytic).abs())?,
                });
            }
            JobReport::DerivativeCheck {
                h: io::json_f64(*h)?,
                results,
            }
        }
        ReallineJob::EnergySeries {
            psi_hat,
            f_hat,
            caps,
            xi_grid,
            omega_density,
        } => {
            let psi = psi_hat.build()?;
            let f = f_hat.build()?;
            let grid = xi_grid.build()?;
            let series = rl::energy_series(&psi, &f, caps, &grid, *omega_density)?;
            JobReport::EnergySeries {
                omega_density: *omega_density,
                xi_grid: grid_echo(xi_grid)?,
                caps: series
                    .caps()
                    .iter()
                    .map(|&c| io::json_f64(c))
                    .collect::<CliResult<_>>()?,
                energies: series
                    .energies()
                    .iter()
                    .map(|&e| io::json_f64(e))
                    .collect::<CliResult<_>>()?,
                increments: series
                    .increments()
                    .iter()
                    .map(|&d| io::json_f64(d))
                    .collect::<CliResult<_>>()?,
            }
        }
        ReallineJob::LambdaSection {
            psi_hat,
            phi_hat,
            lambda,
            grid,
        } => {
            let psi = psi_hat.build()?;
            let phi = phi_hat.build()?;
            let quad_grid = grid.build()?;
            let value = rl::lambda_section_constant(&psi, &phi, *lambda, &quad_grid)?;
            JobReport::LambdaSection {
                lambda: io::json_f64(*lambda)?,
                grid: grid_echo(grid)?,
                value: io::json_f64(value)?,
            }
        }
        ReallineJob::WaveletSymbol {
            psi_hat,
            j_min,
            j_max,
            xi,
        } => {
            let psi = psi_hat.build()?;
            let mut results = Vec::with_capacity(xi.len());
            for &x in xi {
                let value = rl::wavelet_symbol(&psi, *j_min, *j_max, x)?;
                let covered = rl::wavelet_range_covers(&psi, *j_min, *j_max, x);
                if !covered {
                    eprintln!(
                        "warning: scale range [{j_min}, {j_max}] may clip the symbol at ξ = {x}"
                    );
                }
                results.push(WaveletPoint {
                    xi: io::json_f64(x)?,
                    value: io::json_f64(value)?,
                    range_covered: covered,
                });
            }
            JobReport::WaveletSymbol {
                j_min: *j_min,
                j_max: *j_max,
                results,
            }
        }
        ReallineJob::DualCommutation {
            psi_hat,
            j,
            xi_grid,
        } => {
            let psi = psi_hat.build()?;
            let grid = xi_grid.build()?;
            let mut results = Vec::with_capacity(j.len());
            for &scale in j {
                let deviation = rl::wavelet_dual_commutation(&psi, scale, &grid)?;
                results.push(CommutationPoint {
                    j: scale,
                    deviation: io::json_f64(deviation)?,
                });
            }
            JobReport::DualCommutation {
                xi_grid: grid_echo(xi_grid)?,
                results,
            }
        }
    })
}

fn run_realline(args: &CommonArgs, wavelet_mode: bool, default_report: &str) -> CliResult<()> {
    let loaded = config::load(&args.config)?;
    let operator_tol = loaded.operator_tolerance(args.tolerance)?;
    let jobs = loaded.realline_jobs()?;
    let selected: Vec<&ReallineJob> = jobs
        .iter()
        .filter(|j| j.is_wavelet() == wavelet_mode)
        .collect();
    if selected.is_empty() {
        let family = if wavelet_mode { "wavelet" } else { "awh" };
        return Err(CliError::invalid(format!("config has no {family} jobs")));
    }
    let mut job_reports = Vec::with_capacity(selected.len());
    for job in selected {
        job_reports.push(run_job(&loaded, job)?);
    }
    let doc = ReallineReport {
        jobs: job_reports,
        exact_symbol_abs_tol: 1e-9,
        operator_tol,
        provenance: report::provenance(&loaded.bytes),
    };
    let outputs = loaded.outputs();
    let path = primary_path(
        args,
        &loaded,
        outputs.report_json.as_deref(),
        default_report,
    );
    let mut stage = OutputStage::new();
    stage.add(path, report::to_json_bytes(&doc)?);
    stage.commit()
}

pub fn cmd_awh(args: &CommonArgs) -> CliResult<()> {
    run_realline(args, false, "awh_report.json")
}

pub fn cmd_wavelet(args: &CommonArgs) -> CliResult<()> {
    run_realline(args, true, "wavelet_report.json")
}
