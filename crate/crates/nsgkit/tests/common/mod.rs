//! Seeded generators shared by the integration suites.
#![allow(dead_code)] // each test target uses a different subset

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nsgkit::fourier::inverse_fourier;
use nsgkit::{FiniteLcaGroup, PairSystem, Side, Signal, SystemKind, WindowFamily};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_signal(rng: &mut ChaCha8Rng, group: &FiniteLcaGroup) -> Signal {
    let values = (0..group.cardinality())
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    Signal::new(group.clone(), Side::Group, values).expect("length matches")
}

/// A window whose values in the system's diagonalizing domain have magnitudes
/// in [0.5, 1.3], so self-paired symbols stay bounded away from zero.
pub fn safe_window(rng: &mut ChaCha8Rng, group: &FiniteLcaGroup, kind: SystemKind) -> Signal {
    let spectrum = Signal::from_fn(group.clone(), Side::Dual, |_, _| {
        let mag = 0.5 + 0.8 * rng.gen_range(0.0..1.0);
        let phase = rng.gen_range(0.0..std::f64::consts::TAU);
        Complex64::from_polar(mag, phase)
    });
    match kind {
        SystemKind::TranslationInvariant => inverse_fourier(&spectrum).expect("dual side"),
        SystemKind::CharacterInvariant => spectrum.with_values_on_group_side(),
    }
}

/// Arbitrary window family with positive random weights.
pub fn random_family(
    rng: &mut ChaCha8Rng,
    group: &FiniteLcaGroup,
    n_windows: usize,
) -> WindowFamily {
    let entries = (0..n_windows)
        .map(|y| {
            (
                format!("w{y}"),
                rng.gen_range(0.25..2.0),
                random_signal(rng, group),
            )
        })
        .collect();
    WindowFamily::new(entries).expect("valid family")
}

/// Self-paired family whose frame bounds are safely positive.
pub fn safe_family(
    rng: &mut ChaCha8Rng,
    group: &FiniteLcaGroup,
    kind: SystemKind,
    n_windows: usize,
) -> WindowFamily {
    let entries = (0..n_windows)
        .map(|y| {
            (
                format!("w{y}"),
                rng.gen_range(0.25..2.0),
                safe_window(rng, group, kind),
            )
        })
        .collect();
    WindowFamily::new(entries).expect("valid family")
}

/// A reproducing pair: synthesis windows are bounded multiplicative
/// perturbations of the analysis windows in the diagonalizing domain, so
/// `Re m ≥ 0.7·m_Ψ > 0`.
pub fn random_reproducing_pair(
    rng: &mut ChaCha8Rng,
    group: &FiniteLcaGroup,
    kind: SystemKind,
    n_windows: usize,
) -> PairSystem {
    let mut analysis = Vec::with_capacity(n_windows);
    let mut synthesis = Vec::with_capacity(n_windows);
    for y in 0..n_windows {
        let weight = rng.gen_range(0.25..2.0);
        let psi_spectrum = Signal::from_fn(group.clone(), Side::Dual, |_, _| {
            let mag = 0.5 + 0.8 * rng.gen_range(0.0..1.0);
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(mag, phase)
        });
        let phi_spectrum = Signal::from_fn(group.clone(), Side::Dual, |k, _| {
            let wiggle = Complex64::new(
                1.0 + 0.2 * rng.gen_range(-1.0..1.0),
                0.2 * rng.gen_range(-1.0..1.0),
            );
            psi_spectrum.values()[k] * wiggle
        });
        let (psi, phi) = match kind {
            SystemKind::TranslationInvariant => (
                inverse_fourier(&psi_spectrum).expect("dual side"),
                inverse_fourier(&phi_spectrum).expect("dual side"),
            ),
            SystemKind::CharacterInvariant => (
                psi_spectrum.with_values_on_group_side(),
                phi_spectrum.with_values_on_group_side(),
            ),
        };
        analysis.push((format!("w{y}"), weight, psi));
        synthesis.push((format!("w{y}"), weight, phi));
    }
    PairSystem::new(
        kind,
        WindowFamily::new(analysis).expect("valid"),
        WindowFamily::new(synthesis).expect("valid"),
    )
    .expect("matching index sets")
}

/// Reads a dual-side signal's raw values as a group-side signal.
trait SideCast {
    fn with_values_on_group_side(&self) -> Signal;
}

impl SideCast for Signal {
    fn with_values_on_group_side(&self) -> Signal {
        Signal::new(self.group().clone(), Side::Group, self.values().to_vec()).expect("same length")
    }
}

pub fn max_abs_dev(a: &Signal, b: &Signal) -> f64 {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
