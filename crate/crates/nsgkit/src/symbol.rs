//! The multiplier symbol of a pair and the derived diagnostics.
//!
//! For a translation-invariant pair the resolution operator acts in the
//! Fourier domain as multiplication by
//! `m(ξ) = Σ_y μ_y conj(ψ̂_y(ξ)) φ̂_y(ξ)`;
//! for a character-invariant pair it acts pointwise with
//! `m(x) = Σ_y μ_y conj(ψ_y(x)) φ_y(x)`.
//! The report carries `A = min |m|`, `B = max |m|`, the pointwise absolute sum
//! bound `C`, and the flags derived from them. `A > 0` (above the singular
//! tolerance) certifies a reproducing pair; for a self-paired family, `A` and
//! `B` are the frame bounds and `A = B` means the frame is tight.

use num_complex::Complex64;

use crate::error::Result;
use crate::fourier::fourier;
use crate::group::FiniteLcaGroup;
use crate::signal::{modulate, Signal};
use crate::window::{PairSystem, SystemKind, WindowFamily};

/// Relative factor deciding "numerically singular": `singular_tol = 1e-8 · B`.
pub const SINGULAR_TOL_FACTOR: f64 = 1e-8;

/// Relative tightness threshold: tight when `B − A ≤ 1e-12 · B`.
pub const TIGHT_TOL: f64 = 1e-12;

/// Scale factor for the self-adjoint/positive test on the symbol values.
pub const SELF_ADJOINT_TOL: f64 = 1e-10;

/// The multiplier `m` of a pair with its bounds and diagnostic flags.
#[derive(Debug, Clone)]
pub struct SymbolReport {
    kind: SystemKind,
    values: Vec<Complex64>,
    lower: f64,
    upper: f64,
    l1_bound: f64,
}

impl SymbolReport {
    fn new(kind: SystemKind, values: Vec<Complex64>, l1_bound: f64) -> Self {
        let lower = values
            .iter()
            .map(|v| v.norm())
            .fold(f64::INFINITY, f64::min);
        let upper = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        Self {
            kind,
            values,
            lower,
            upper,
            l1_bound,
        }
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    /// Symbol values, indexed by Ĝ (translation kind) or G (character kind).
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `A = min |m|`.
    pub fn lower_bound(&self) -> f64 {
        self.lower
    }

    /// `B = max |m|`.
    pub fn upper_bound(&self) -> f64 {
        self.upper
    }

    /// `C = max over points of Σ_y μ_y |ψ_y·φ_y|` (hats in the translation kind).
    pub fn l1_bound(&self) -> f64 {
        self.l1_bound
    }

    /// Absolute singularity threshold, `1e-8 · B`.
    pub fn singular_tol(&self) -> f64 {
        SINGULAR_TOL_FACTOR * self.upper
    }

    /// `A` is safely above zero: the pair is reproducing.
    pub fn is_reproducing_pair(&self) -> bool {
        self.lower > self.singular_tol()
    }

    /// `m` is real and nonnegative within tolerance, so the resolution
    /// operator is self-adjoint and positive.
    pub fn is_self_adjoint_positive(&self) -> bool {
        let tol = SELF_ADJOINT_TOL * self.upper.max(1.0);
        self.values
            .iter()
            .all(|v| v.im.abs() <= tol && v.re >= -tol)
    }

    /// `B − A ≤ 1e-12 · B`: coefficient energy is an exact multiple of `‖f‖²`.
    pub fn is_tight(&self) -> bool {
        self.upper - self.lower <= TIGHT_TOL * self.upper
    }

    /// Largest deviation of `m` from the constant 1 — the identity criterion.
    pub fn max_deviation_from_one(&self) -> f64 {
        self.values
            .iter()
            .map(|v| (v - Complex64::new(1.0, 0.0)).norm())
            .fold(0.0, f64::max)
    }
}

/// Computes the multiplier symbol of a pair with bounds `A`, `B`, `C`.
pub fn symbol(pair: &PairSystem) -> SymbolReport {
    let group = pair.group();
    let n = group.cardinality();
    let mut m = vec![Complex64::new(0.0, 0.0); n];
    let mut abs_sum = vec![0.0f64; n];
    match pair.kind() {
        SystemKind::TranslationInvariant => {
            for (a, s) in pair
                .analysis()
                .entries()
                .iter()
                .zip(pair.synthesis().entries())
            {
                let psi_hat = fourier(a.window()).expect("family windows are group-side");
                let phi_hat = fourier(s.window()).expect("family windows are group-side");
                let mu = a.weight();
                for k in 0..n {
                    let prod = psi_hat.values()[k].conj() * phi_hat.values()[k];
                    m[k] += mu * prod;
                    abs_sum[k] += mu * prod.norm();
                }
            }
        }
        SystemKind::CharacterInvariant => {
            for (a, s) in pair
                .analysis()
                .entries()
                .iter()
                .zip(pair.synthesis().entries())
            {
                let mu = a.weight();
                for x in 0..n {
                    let prod = a.window().values()[x].conj() * s.window().values()[x];
                    m[x] += mu * prod;
                    abs_sum[x] += mu * prod.norm();
                }
            }
        }
    }
    let c = abs_sum.iter().copied().fold(0.0, f64::max);
    SymbolReport::new(pair.kind(), m, c)
}

/// [`symbol`] with the flags read as pair/frame diagnostics.
///
/// For a self-paired family the report's `A`, `B` are the frame bounds of
/// `A‖f‖² ≤ weighted coefficient energy ≤ B‖f‖²`, the self-adjoint flag is
/// set, and tightness means the energy equals `A‖f‖²`.
pub fn diagnose(pair: &PairSystem) -> SymbolReport {
    symbol(pair)
}

/// The finite short-time Fourier pair: `Y = Ĝ`, `μ_k = 1/|G|`,
/// `ψ_k = M_k ψ`, `φ_k = M_k φ`, translation-invariant.
///
/// Its symbol is the constant `⟨φ,ψ⟩`, reproducing the classical inversion
/// formula after normalization.
///
/// ```
/// use nsgkit::symbol::{finite_stft_pair, symbol};
/// use nsgkit::{FiniteLcaGroup, Side, Signal};
/// use num_complex::Complex64;
///
/// let group = FiniteLcaGroup::cyclic(8)?;
/// let psi = Signal::from_fn(group.clone(), Side::Group, |i, _| {
///     Complex64::new((-(i as f64)).exp(), 0.0)
/// });
/// let phi = Signal::from_fn(group, Side::Group, |i, _| {
///     Complex64::new(1.0 / (1.0 + i as f64), 0.0)
/// });
/// let pair = finite_stft_pair(&psi, &phi)?;
/// let report = symbol(&pair);
/// let constant = phi.inner(&psi)?;
/// assert!(report
///     .values()
///     .iter()
///     .all(|m| (m - constant).norm() <= 1e-12));
/// # Ok::<(), nsgkit::Error>(())
/// ```
pub fn finite_stft_pair(psi: &Signal, phi: &Signal) -> Result<PairSystem> {
    psi.require_same_space(phi)?;
    let group: &FiniteLcaGroup = psi.group();
    let mu = 1.0 / group.cardinality() as f64;
    let mut analysis = Vec::with_capacity(group.cardinality());
    let mut synthesis = Vec::with_capacity(group.cardinality());
    for (i, k) in group.elements().enumerate() {
        let label = format!("m{i}");
        analysis.push((label.clone(), mu, modulate(&k, psi)?));
        synthesis.push((label, mu, modulate(&k, phi)?));
    }
    PairSystem::new(
        SystemKind::TranslationInvariant,
        WindowFamily::new(analysis)?,
        WindowFamily::new(synthesis)?,
    )
}
