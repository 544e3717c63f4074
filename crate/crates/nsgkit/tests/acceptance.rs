//! Acceptance suite: one test per criterion, printing a pass/fail line each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::time::Instant;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use common::{random_reproducing_pair, random_signal, rng, safe_family};
use nsgkit::equivalence::{equivalence_transform, unitary_dense, UnitarySpec};
use nsgkit::fourier::inverse_fourier;
use nsgkit::kernel::kernel_apply;
use nsgkit::operators::{
    analyze, canonical_dual, dense_matrix, resolution_direct, resolution_fast, synthesize,
    weighted_energy,
};
use nsgkit::realline::{
    energy_series, example1_symbol_exact, lambda_section_constant, symbol_derivative_check,
    wavelet_dual_commutation, wavelet_symbol, AwhConfig, QuadratureGrid, SpectralWindow,
};
use nsgkit::symbol::{diagnose, finite_stft_pair, symbol};
use nsgkit::{FiniteLcaGroup, NsgSystem, PairSystem, Side, Signal, SystemKind, WindowFamily};

fn criterion(number: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("[PASS] criterion {number:02}: {name}"),
        Err(msg) => {
            println!("[FAIL] criterion {number:02}: {name} — {msg}");
            panic!("criterion {number} failed: {msg}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if $cond {
        } else {
            return Err(format!($($fmt)*));
        }
    };
}

fn group_pool() -> Vec<FiniteLcaGroup> {
    vec![
        FiniteLcaGroup::cyclic(16).unwrap(),
        FiniteLcaGroup::cyclic(24).unwrap(),
        FiniteLcaGroup::new(&[4, 8]).unwrap(),
        FiniteLcaGroup::new(&[3, 5, 2]).unwrap(),
    ]
}

#[test]
fn criterion_01_multiplier_diagonalization() {
    criterion(1, "resolution operator is the symbol multiplier", || {
        let start = Instant::now();
        let mut r = rng(101);
        let pool = group_pool();
        let mut worst = 0.0f64;
        for trial in 0..50 {
            let group = &pool[trial % pool.len()];
            let kind = if trial % 2 == 0 {
                SystemKind::TranslationInvariant
            } else {
                SystemKind::CharacterInvariant
            };
            let n_windows = 1 + trial % 6;
            let pair = random_reproducing_pair(&mut r, group, kind, n_windows);
            let f = random_signal(&mut r, group);
            let direct = resolution_direct(&pair, &f).map_err(|e| e.to_string())?;
            let fast = resolution_fast(&pair, &f).map_err(|e| e.to_string())?;
            let dev = (&direct - &fast).norm() / (1.0 + f.norm());
            worst = worst.max(dev);
        }
        ensure!(worst <= 1e-10, "max relative deviation {worst:e} > 1e-10");
        let elapsed = start.elapsed();
        ensure!(elapsed.as_secs_f64() < 10.0, "runtime {elapsed:?} ≥ 10 s");
        Ok(())
    });
}

#[test]
fn criterion_02_frame_sandwich_and_tightness() {
    criterion(
        2,
        "frame bounds sandwich the weighted coefficient energy",
        || {
            let mut r = rng(202);
            let pool = group_pool();
            for trial in 0..20 {
                let group = &pool[trial % pool.len()];
                let kind = if trial % 2 == 0 {
                    SystemKind::TranslationInvariant
                } else {
                    SystemKind::CharacterInvariant
                };
                let family = safe_family(&mut r, group, kind, 1 + trial % 4);
                let system = NsgSystem::new(kind, family.clone());
                let report = diagnose(&PairSystem::self_paired(kind, family));
                ensure!(
                    report.is_self_adjoint_positive(),
                    "self-paired report not positive"
                );
                let f = random_signal(&mut r, group);
                let energy = weighted_energy(&system, &analyze(&system, &f).unwrap()).unwrap();
                let n2 = f.norm().powi(2);
                let slack = 1e-10 * (report.upper_bound() * n2).max(1.0);
                ensure!(
                    energy >= report.lower_bound() * n2 - slack,
                    "trial {trial}: energy {energy} below A‖f‖² = {}",
                    report.lower_bound() * n2
                );
                ensure!(
                    energy <= report.upper_bound() * n2 + slack,
                    "trial {trial}: energy {energy} above B‖f‖² = {}",
                    report.upper_bound() * n2
                );
            }

            // constructed flat-spectrum family: |ψ̂_c|² + |ψ̂_s|² ≡ 1
            let group = FiniteLcaGroup::cyclic(20).unwrap();
            let hat_c = Signal::from_fn(group.clone(), Side::Dual, |k, _| {
                Complex64::new((0.37 * k as f64).cos(), 0.0)
            });
            let hat_s = Signal::from_fn(group.clone(), Side::Dual, |k, _| {
                Complex64::new((0.37 * k as f64).sin(), 0.0)
            });
            let flat = WindowFamily::new(vec![
                ("c".into(), 1.0, inverse_fourier(&hat_c).unwrap()),
                ("s".into(), 1.0, inverse_fourier(&hat_s).unwrap()),
            ])
            .unwrap();
            let report = diagnose(&PairSystem::self_paired(
                SystemKind::TranslationInvariant,
                flat.clone(),
            ));
            ensure!(report.is_tight(), "flat-spectrum family not flagged tight");
            let system = NsgSystem::new(SystemKind::TranslationInvariant, flat);
            let f = random_signal(&mut r, &group);
            let energy = weighted_energy(&system, &analyze(&system, &f).unwrap()).unwrap();
            let expect = report.lower_bound() * f.norm().powi(2);
            ensure!(
                (energy - expect).abs() <= 1e-10 * expect.max(1.0),
                "tight energy {energy} vs A‖f‖² {expect}"
            );
            Ok(())
        },
    );
}

#[test]
fn criterion_03_finite_stft_symbol() {
    criterion(
        3,
        "finite STFT pair has constant symbol ⟨φ,ψ⟩",
        || {
            let mut r = rng(303);
            let group = FiniteLcaGroup::cyclic(32).unwrap();
            for trial in 0..5 {
                let psi_raw = random_signal(&mut r, &group);
                let phi_raw = random_signal(&mut r, &group);
                let psi = psi_raw.scaled(Complex64::new(1.0 / psi_raw.norm(), 0.0));
                let phi = phi_raw.scaled(Complex64::new(1.0 / phi_raw.norm(), 0.0));
                let pair = finite_stft_pair(&psi, &phi).unwrap();
                let expect = phi.inner(&psi).unwrap();
                let report = symbol(&pair);
                let dev = report
                    .values()
                    .iter()
                    .map(|v| (v - expect).norm())
                    .fold(0.0, f64::max);
                ensure!(
                    dev <= 1e-12,
                    "trial {trial}: symbol deviation {dev:e} > 1e-12"
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_04_adjoint_law_and_positivity() {
    criterion(
        4,
        "dense adjoint swaps the pair; frame operator is PSD",
        || {
            let mut r = rng(404);
            let group = FiniteLcaGroup::cyclic(8).unwrap();
            let pair = random_reproducing_pair(&mut r, &group, SystemKind::TranslationInvariant, 3);
            let forward = dense_matrix(&pair).unwrap();
            let swapped = dense_matrix(&pair.swapped()).unwrap();
            let dev = forward.adjoint().max_abs_diff(&swapped);
            ensure!(dev <= 1e-10, "adjoint law deviation {dev:e} > 1e-10");

            let family = safe_family(&mut r, &group, SystemKind::TranslationInvariant, 3);
            let self_pair = PairSystem::self_paired(SystemKind::TranslationInvariant, family);
            let s = dense_matrix(&self_pair).unwrap();
            let herm_dev = s.adjoint().max_abs_diff(&s);
            ensure!(
                herm_dev <= 1e-10,
                "frame operator not Hermitian: {herm_dev:e}"
            );
            let n = s.dim();
            let na_matrix = DMatrix::from_fn(n, n, |row, col| s.get(row, col));
            let eigen = na_matrix.symmetric_eigen();
            let min_eig = eigen
                .eigenvalues
                .iter()
                .cloned()
                .fold(f64::INFINITY, f64::min);
            ensure!(min_eig >= -1e-10, "minimum eigenvalue {min_eig:e} < -1e-10");
            Ok(())
        },
    );
}

#[test]
fn criterion_05_reproducing_kernel_fixed_point() {
    criterion(
        5,
        "analysis range is fixed under the kernel projection",
        || {
            let mut r = rng(505);
            let group = FiniteLcaGroup::cyclic(16).unwrap();
            for trial in 0..10 {
                let kind = if trial % 2 == 0 {
                    SystemKind::TranslationInvariant
                } else {
                    SystemKind::CharacterInvariant
                };
                let pair = random_reproducing_pair(&mut r, &group, kind, 3);
                let f = random_signal(&mut r, &group);
                let coeffs = analyze(&pair.analysis_system(), &f).unwrap();
                let projected = kernel_apply(&pair, &coeffs).map_err(|e| e.to_string())?;
                let dev: f64 = projected
                    .values()
                    .iter()
                    .zip(coeffs.values())
                    .map(|(a, b)| (a - b).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                ensure!(
                    dev <= 1e-9 * (1.0 + coeffs.norm()),
                    "trial {trial}: kernel fixed-point deviation {dev:e}"
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_06_canonical_dual() {
    criterion(
        6,
        "canonical dual has unit cross symbol and reconstructs",
        || {
            let mut r = rng(606);
            let group = FiniteLcaGroup::cyclic(24).unwrap();
            let family = safe_family(&mut r, &group, SystemKind::TranslationInvariant, 3);
            let dual = canonical_dual(&family).map_err(|e| e.to_string())?;
            let cross = PairSystem::new(
                SystemKind::TranslationInvariant,
                family.clone(),
                dual.clone(),
            )
            .unwrap();
            let dev = symbol(&cross).max_deviation_from_one();
            ensure!(dev <= 1e-10, "max|m−1| = {dev:e} > 1e-10");

            let analysis_system = NsgSystem::new(SystemKind::TranslationInvariant, family);
            let dual_system = NsgSystem::new(SystemKind::TranslationInvariant, dual);
            for trial in 0..20 {
                let f = random_signal(&mut r, &group);
                let coeffs = analyze(&analysis_system, &f).unwrap();
                let back = synthesize(&dual_system, &coeffs).unwrap();
                let rel = (&back - &f).norm() / f.norm();
                ensure!(
                    rel <= 1e-9,
                    "trial {trial}: reconstruction error {rel:e} > 1e-9"
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_07_equivalence_transforms() {
    criterion(
        7,
        "transformed pairs conjugate the dense resolution matrix",
        || {
            let mut r = rng(707);
            let group = FiniteLcaGroup::cyclic(12).unwrap();
            let t_pair =
                random_reproducing_pair(&mut r, &group, SystemKind::TranslationInvariant, 2);
            let c_pair = random_reproducing_pair(&mut r, &group, SystemKind::CharacterInvariant, 2);
            let phase_vec: Vec<Complex64> = (0..group.cardinality())
                .map(|i| Complex64::from_polar(1.0, 0.41 * i as f64))
                .collect();
            let cases: Vec<(&str, &PairSystem, UnitarySpec)> = vec![
                (
                    "fourier-conjugation",
                    &t_pair,
                    UnitarySpec::FourierConjugation,
                ),
                (
                    "translation",
                    &t_pair,
                    UnitarySpec::Translation(group.element(&[5]).unwrap()),
                ),
                (
                    "modulation",
                    &t_pair,
                    UnitarySpec::Modulation(group.element(&[7]).unwrap()),
                ),
                (
                    "diagonal-phase",
                    &c_pair,
                    UnitarySpec::DiagonalPhase(phase_vec),
                ),
            ];
            for (name, pair, spec) in cases {
                let transformed =
                    equivalence_transform(pair, &spec, None, None).map_err(|e| e.to_string())?;
                let s = dense_matrix(pair).unwrap();
                let s_tilde = dense_matrix(&transformed).unwrap();
                let u = unitary_dense(&spec, &group).unwrap();
                let conjugated = u.matmul(&s).matmul(&u.adjoint());
                let dev = s_tilde.max_abs_diff(&conjugated);
                ensure!(dev <= 1e-9, "{name}: conjugation deviation {dev:e} > 1e-9");
                ensure!(
                    symbol(pair).is_reproducing_pair()
                        == symbol(&transformed).is_reproducing_pair(),
                    "{name}: reproducing flag not preserved"
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_08_warped_closed_form_symbol() {
    criterion(
        8,
        "warped example symbol matches 3−ξ² / 2 and its quadrature",
        || {
            let start = Instant::now();
            let psi = SpectralWindow::one_minus_xi_on_unit_interval();
            let phi = SpectralWindow::one_plus_xi_on_unit_interval();
            for i in 0..21 {
                let xi = -1.0 + i as f64 / 10.0;
                let value = example1_symbol_exact(&psi, &phi, xi).map_err(|e| e.to_string())?;
                let expect = 3.0 - xi * xi;
                ensure!(
                    (value - expect).abs() <= 1e-8,
                    "exact symbol at ξ={xi}: {value} vs {expect}"
                );
            }
            for xi in [-3.0, -1.5, 1.5, 3.0] {
                let value = example1_symbol_exact(&psi, &phi, xi).map_err(|e| e.to_string())?;
                ensure!(
                    (value - 2.0).abs() <= 1e-8,
                    "exact symbol at ξ={xi}: {value} vs 2"
                );
            }

            let config = AwhConfig::warped_example();
            let grid = QuadratureGrid::new(-1e4, 1e4, 1_000_001).unwrap();
            for xi in [-0.9, -0.5, 0.0, 0.5, 0.9, 1.5, 3.0] {
                let quad = nsgkit::realline::awh_symbol(&config, &psi, &phi, &grid, xi)
                    .map_err(|e| e.to_string())?;
                let exact = example1_symbol_exact(&psi, &phi, xi).unwrap();
                let rel = (quad - exact).abs() / exact.abs();
                ensure!(
                    rel <= 1e-2,
                    "quadrature at ξ={xi}: rel error {rel:e} > 1e-2"
                );
            }
            let elapsed = start.elapsed();
            ensure!(elapsed.as_secs_f64() < 60.0, "runtime {elapsed:?} ≥ 60 s");
            Ok(())
        },
    );
}

#[test]
fn criterion_09_derivative_identity() {
    criterion(
        9,
        "finite-difference derivative matches the closed form",
        || {
            let psi = SpectralWindow::one_minus_xi_on_unit_interval();
            let phi = SpectralWindow::one_plus_xi_on_unit_interval();
            for xi in [-0.5, 0.25, 0.5] {
                let check =
                    symbol_derivative_check(&psi, &phi, xi, 1e-4).map_err(|e| e.to_string())?;
                let err = (check.finite_diff - check.analytic).abs();
                ensure!(
                    err <= 1e-4 * (1.0 + check.analytic.abs()),
                    "ξ={xi}: |fd−analytic| = {err:e}"
                );
            }
            let origin =
                symbol_derivative_check(&psi, &phi, 0.0, 1e-4).map_err(|e| e.to_string())?;
            ensure!(
                origin.analytic.abs() <= 1e-8,
                "analytic at 0 is {:e}",
                origin.analytic
            );
            ensure!(
                origin.finite_diff.abs() <= 1e-8,
                "fd at 0 is {:e}",
                origin.finite_diff
            );
            Ok(())
        },
    );
}

#[test]
fn criterion_10_non_bessel_energy_divergence() {
    criterion(10, "truncated energies diverge logarithmically", || {
        let psi = SpectralWindow::one_minus_xi_on_unit_interval();
        let f_hat = SpectralWindow::indicator(-1.0, 1.0).unwrap();
        let xi_grid = QuadratureGrid::new(-1.0, 1.0, 201).unwrap();
        let caps: Vec<f64> = (5..=12).map(|p| f64::from(2u32.pow(p))).collect();
        let series = energy_series(&psi, &f_hat, &caps, &xi_grid, 4).map_err(|e| e.to_string())?;
        let energies = series.energies();
        for w in energies.windows(2) {
            ensure!(w[1] > w[0], "energies not strictly increasing: {w:?}");
        }
        let incs = series.increments();
        for (i, pair) in incs.windows(2).enumerate() {
            ensure!(
                pair[1] >= 0.5 * pair[0],
                "increment {i}: {} < 0.5 × {}",
                pair[1],
                pair[0]
            );
            ensure!(pair[1] >= 0.1, "increment {i}: {} < 0.1", pair[1]);
        }
        ensure!(incs[0] >= 0.1, "first increment {} < 0.1", incs[0]);
        Ok(())
    });
}

#[test]
fn criterion_11_semi_discrete_wavelet() {
    criterion(
        11,
        "dyadic wavelet symbol tiles, repeats, and dualizes",
        || {
            let mut r = rng(1111);
            let tile = SpectralWindow::indicator_half_open(1.0, 2.0).unwrap();
            for _ in 0..100 {
                let xi = 10f64.powf(r.gen_range(-2.0..2.0));
                let value = wavelet_symbol(&tile, -20, 20, xi).map_err(|e| e.to_string())?;
                ensure!((value - 1.0).abs() <= 1e-12, "m({xi}) = {value}");
                let doubled = wavelet_symbol(&tile, -24, 24, 2.0 * xi).unwrap();
                let base = wavelet_symbol(&tile, -24, 24, xi).unwrap();
                ensure!(
                    (doubled - base).abs() <= 1e-12,
                    "dyadic invariance at {xi}: {doubled} vs {base}"
                );
            }
            let hat = SpectralWindow::hat(0.5, 1.0, 2.0).unwrap();
            let grid = QuadratureGrid::new(0.1, 10.0, 97).unwrap();
            for j in -2..=2 {
                let dev = wavelet_dual_commutation(&hat, j, &grid).map_err(|e| e.to_string())?;
                ensure!(dev <= 1e-10, "dual commutation at j={j}: {dev:e}");
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_12_lambda_section_constant() {
    criterion(12, "λ-section admissibility constant hits ln 2", || {
        let chi = SpectralWindow::indicator(1.0, 2.0).unwrap();
        let grid = QuadratureGrid::new(1.0, 2.0, 200_001).unwrap();
        let value = lambda_section_constant(&chi, &chi, 0.0, &grid).map_err(|e| e.to_string())?;
        let err = (value - std::f64::consts::LN_2).abs();
        ensure!(err <= 1e-6, "|{value} − ln 2| = {err:e} > 1e-6");
        Ok(())
    });
}
