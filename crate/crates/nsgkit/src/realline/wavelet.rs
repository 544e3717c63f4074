//! The semi-discrete dyadic wavelet system on the real line.
//!
//! With dilations on the dyadic grid `{2^j}` and the weighted counting
//! measure `μ(j) = 2^{−j}`, the system's symbol is
//! `m(ξ) = Σ_j |ψ̂(2^j ξ)|²`, defined for `ξ ≠ 0`. It is invariant under
//! dyadic scaling, `m(2ξ) = m(ξ)`, which makes the canonical dual another
//! semi-discrete wavelet system: dilating then dualizing equals dualizing
//! then dilating. [`wavelet_dual_commutation`] checks that identity on the
//! spectral side.

use crate::error::{Error, Result};
use crate::realline::quadrature::QuadratureGrid;
use crate::realline::window::SpectralWindow;

/// Relative singularity factor for the symbol lower bound, matching the
/// group-side convention.
const SINGULAR_TOL_FACTOR: f64 = 1e-8;

/// Finite dyadic symbol sum `Σ_{j=j_min}^{j_max} |ψ̂(2^j ξ)|²`.
///
/// Exact for compactly supported windows once the range covers the scales
/// that meet the support (see [`wavelet_range_covers`]). The point `ξ = 0`
/// is refused rather than assigned a convention value.
pub fn wavelet_symbol(psi_hat: &SpectralWindow, j_min: i32, j_max: i32, xi: f64) -> Result<f64> {
    if xi == 0.0 {
        return Err(Error::UndefinedPoint(
            "the dyadic symbol is undefined at ξ = 0".into(),
        ));
    }
    if !xi.is_finite() {
        return Err(Error::DomainViolation(format!("ξ = {xi}")));
    }
    if j_min > j_max {
        return Err(Error::DomainViolation(format!(
            "scale range [{j_min}, {j_max}] is empty"
        )));
    }
    let mut acc = 0.0;
    for j in j_min..=j_max {
        let v = psi_hat.eval(2f64.powi(j) * xi);
        acc += v * v;
    }
    Ok(acc)
}

/// True when the scale range `[j_min, j_max]` already sees every dilate of
/// the window support at `ξ`: the boundary scales fall outside the support on
/// both sides, so widening the range cannot change the symbol.
pub fn wavelet_range_covers(psi_hat: &SpectralWindow, j_min: i32, j_max: i32, xi: f64) -> bool {
    if xi == 0.0 || !xi.is_finite() || j_min > j_max {
        return false;
    }
    let (lo, hi) = psi_hat.support();
    if xi > 0.0 {
        if hi <= 0.0 {
            return true; // dilates of a positive ξ never meet the support
        }
        if lo <= 0.0 {
            return false; // support reaches 0: no finite range covers it
        }
        2f64.powi(j_min) * xi <= lo && 2f64.powi(j_max) * xi >= hi
    } else {
        if lo >= 0.0 {
            return true;
        }
        if hi >= 0.0 {
            return false;
        }
        2f64.powi(j_min) * xi.abs() <= hi.abs() && 2f64.powi(j_max) * xi.abs() >= lo.abs()
    }
}

/// Scale range wide enough to cover the support for every argument with
/// magnitude in `[a_min, a_max]`.
fn covering_range(psi_hat: &SpectralWindow, a_min: f64, a_max: f64) -> (i32, i32) {
    let (lo, hi) = psi_hat.support();
    let mut mags: Vec<f64> = [lo.abs(), hi.abs()]
        .into_iter()
        .filter(|m| *m > 0.0)
        .collect();
    if mags.is_empty() {
        mags.push(1.0);
    }
    let s_lo = mags.iter().cloned().fold(f64::INFINITY, f64::min);
    let s_hi = mags.iter().cloned().fold(0.0, f64::max);
    let j_lo = ((s_lo / a_max).log2().floor() as i32 - 2).max(-512);
    let j_hi = ((s_hi / a_min).log2().ceil() as i32 + 2).min(512);
    (j_lo, j_hi.max(j_lo))
}

/// Checks that dualizing commutes with dyadic dilation on the spectral side.
///
/// Route 1 dualizes the dilated window: `ψ̂(2^{−j}ξ)·2^{j/2}/m(ξ)`;
/// route 2 dilates the dual window: `2^{j/2}·(ψ̂/m)(2^{−j}ξ)`. The routes
/// agree because `m(2^{−j}ξ) = m(ξ)`; the returned value is the maximum
/// pointwise deviation over the grid.
///
/// Errors with [`Error::SymbolSingular`] when the symbol lower bound on the
/// grid falls below `1e-8` of its maximum there.
pub fn wavelet_dual_commutation(
    psi_hat: &SpectralWindow,
    j: i32,
    xi_grid: &QuadratureGrid,
) -> Result<f64> {
    let scale = 2f64.powi(-j);
    let mut args = Vec::with_capacity(2 * xi_grid.count());
    for xi in xi_grid.nodes() {
        if xi == 0.0 {
            return Err(Error::UndefinedPoint("grid contains ξ = 0".into()));
        }
        args.push(xi.abs());
        args.push((scale * xi).abs());
    }
    let a_min = args.iter().cloned().fold(f64::INFINITY, f64::min);
    let a_max = args.iter().cloned().fold(0.0, f64::max);
    let (j_lo, j_hi) = covering_range(psi_hat, a_min, a_max);

    let mut m_direct = Vec::with_capacity(xi_grid.count());
    let mut m_scaled = Vec::with_capacity(xi_grid.count());
    for xi in xi_grid.nodes() {
        m_direct.push(wavelet_symbol(psi_hat, j_lo, j_hi, xi)?);
        m_scaled.push(wavelet_symbol(psi_hat, j_lo, j_hi, scale * xi)?);
    }
    let sup = m_direct
        .iter()
        .chain(&m_scaled)
        .cloned()
        .fold(0.0, f64::max);
    let inf = m_direct
        .iter()
        .chain(&m_scaled)
        .cloned()
        .fold(f64::INFINITY, f64::min);
    if inf <= SINGULAR_TOL_FACTOR * sup {
        return Err(Error::SymbolSingular {
            min_abs: inf,
            tol: SINGULAR_TOL_FACTOR * sup,
        });
    }

    let half_power = 2f64.powf(0.5 * j as f64);
    let mut deviation = 0.0f64;
    for (i, xi) in xi_grid.nodes().enumerate() {
        let window_val = psi_hat.eval(scale * xi);
        let dual_of_dilate = window_val * half_power / m_direct[i];
        let dilate_of_dual = half_power * (window_val / m_scaled[i]);
        deviation = deviation.max((dual_of_dilate - dilate_of_dual).abs());
    }
    Ok(deviation)
}
