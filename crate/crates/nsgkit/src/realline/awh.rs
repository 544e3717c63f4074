//! Warped-system symbols on the sampled real line.
//!
//! The systems are generated by sections of the affine Weyl-Heisenberg group
//! parameterized by a scaling function `β`, a frequency shift `η` and a
//! measure exponent `s`. Their multiplier symbol is the integral
//!
//! `m(ξ) = ∫ ψ̂(β(ω)(ξ−η(ω))) · φ̂(β(ω)(ξ−η(ω))) · |β(ω)|^s dω`
//!
//! (real-valued windows). [`awh_symbol`] approximates it by composite
//! trapezoid; [`example1_symbol_exact`] evaluates the warped worked example
//! (`β(ω) = (1+|ω|)⁻¹`, `η(ω) = ω`, `s = 1`) through its substituted form
//!
//! `m(ξ) = ∫_{−1}^{ξ} ψ̂φ̂ dz/(1+z) + ∫_{ξ}^{1} ψ̂φ̂ dz/(1−z)`
//!
//! by adaptive Simpson quadrature. For that same configuration,
//! [`symbol_derivative_check`] compares the closed-form derivative
//! `m′(ξ) = 2ξ/(ξ²−1)·ψ̂(ξ)φ̂(ξ)` against a central difference, and
//! [`truncated_analysis_energy`] reproduces the logarithmically divergent
//! coefficient energy of a non-Bessel reproducing pair.

use crate::error::{Error, Result};
use crate::realline::quadrature::{adaptive_simpson, QuadratureGrid};
use crate::realline::window::SpectralWindow;

/// Absolute tolerance of the adaptive Simpson rule for the weighted
/// one-dimensional integrals.
const EXACT_SYMBOL_TOL: f64 = 1e-9;

/// Inward nudge applied at the singular endpoints `z = ∓1`; the omitted mass
/// is below `divergence guard · nudge`, far under [`EXACT_SYMBOL_TOL`] for
/// any integrand passing the guard.
const ENDPOINT_NUDGE: f64 = 1e-12;

/// Weighted integrand values above this near an endpoint mean the integral
/// does not exist.
const DIVERGENCE_GUARD: f64 = 1e10;

/// Scaling function `β(ω)`.
#[derive(Debug, Clone, PartialEq)]
pub enum BetaSpec {
    /// `β ≡ c`, `c ≠ 0`.
    Constant(f64),
    /// `β(ω) = ω`; vanishes at `ω = 0`, so grids must avoid that node.
    Identity,
    /// `β(ω) = (1+|ω|)⁻¹` — the warped worked example.
    InverseLinear,
    /// `β(ω) = (1+|ω|)^{−α}`, `α ∈ [0,1]`, interpolating between the
    /// short-time Fourier (`α = 0`) and wavelet-like (`α = 1`) regimes.
    PowerLaw(f64),
}

impl BetaSpec {
    pub fn eval(&self, omega: f64) -> f64 {
        match self {
            BetaSpec::Constant(c) => *c,
            BetaSpec::Identity => omega,
            BetaSpec::InverseLinear => 1.0 / (1.0 + omega.abs()),
            BetaSpec::PowerLaw(alpha) => (1.0 + omega.abs()).powf(-alpha),
        }
    }
}

/// Frequency shift `η(ω)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaSpec {
    Zero,
    Identity,
}

impl EtaSpec {
    pub fn eval(&self, omega: f64) -> f64 {
        match self {
            EtaSpec::Zero => 0.0,
            EtaSpec::Identity => omega,
        }
    }
}

/// Section parameters `(β, η, s)` of a warped system, one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct AwhConfig {
    beta: BetaSpec,
    eta: EtaSpec,
    s: f64,
}

impl AwhConfig {
    pub fn new(beta: BetaSpec, eta: EtaSpec, s: f64) -> Result<Self> {
        match &beta {
            BetaSpec::Constant(c) if *c == 0.0 || !c.is_finite() => {
                return Err(Error::InvalidGrid(
                    "constant β must be nonzero and finite".into(),
                ))
            }
            BetaSpec::PowerLaw(alpha) if !(0.0..=1.0).contains(alpha) => {
                return Err(Error::InvalidGrid(format!(
                    "power-law exponent {alpha} outside [0,1]"
                )))
            }
            _ => {}
        }
        if !s.is_finite() {
            return Err(Error::InvalidGrid("exponent s must be finite".into()));
        }
        Ok(Self { beta, eta, s })
    }

    /// The warped worked-example configuration: `β = (1+|ω|)⁻¹`, `η = ω`, `s = 1`.
    pub fn warped_example() -> Self {
        Self {
            beta: BetaSpec::InverseLinear,
            eta: EtaSpec::Identity,
            s: 1.0,
        }
    }

    pub fn beta(&self) -> &BetaSpec {
        &self.beta
    }

    pub fn eta(&self) -> EtaSpec {
        self.eta
    }

    pub fn s(&self) -> f64 {
        self.s
    }
}

/// Trapezoid approximation of the warped symbol at `ξ`.
///
/// Errors with [`Error::SingularNode`] when a grid node hits a zero of `β`.
pub fn awh_symbol(
    config: &AwhConfig,
    psi_hat: &SpectralWindow,
    phi_hat: &SpectralWindow,
    grid: &QuadratureGrid,
    xi: f64,
) -> Result<f64> {
    for omega in grid.nodes() {
        if config.beta.eval(omega) == 0.0 {
            return Err(Error::SingularNode { omega });
        }
    }
    let s = config.s;
    Ok(grid.trapezoid(|omega| {
        let beta = config.beta.eval(omega);
        let z = beta * (xi - config.eta.eval(omega));
        psi_hat.eval(z) * phi_hat.eval(z) * beta.abs().powf(s)
    }))
}

/// The worked example's symbol through its substituted closed form, by
/// adaptive quadrature to absolute tolerance `1e-9`.
///
/// For `|ξ| > 1` the integration limits clamp to `[−1, 1]`, matching the
/// piecewise-constant value of the symbol there. Errors with
/// [`Error::EndpointSingularity`] when the weighted integrand blows up at
/// `z = ∓1` (the window product must decay at the endpoints).
///
/// ```
/// use nsgkit::realline::{example1_symbol_exact, SpectralWindow};
///
/// let psi = SpectralWindow::one_minus_xi_on_unit_interval();
/// let phi = SpectralWindow::one_plus_xi_on_unit_interval();
/// // 3 − ξ² inside the unit interval, 2 outside
/// let inside = example1_symbol_exact(&psi, &phi, 0.5)?;
/// assert!((inside - 2.75).abs() <= 1e-8);
/// let outside = example1_symbol_exact(&psi, &phi, 2.0)?;
/// assert!((outside - 2.0).abs() <= 1e-8);
/// # Ok::<(), nsgkit::Error>(())
/// ```
pub fn example1_symbol_exact(
    psi_hat: &SpectralWindow,
    phi_hat: &SpectralWindow,
    xi: f64,
) -> Result<f64> {
    if !xi.is_finite() {
        return Err(Error::DomainViolation(format!("ξ = {xi}")));
    }
    let product = |z: f64| psi_hat.eval(z) * phi_hat.eval(z);
    let xi_c = xi.clamp(-1.0, 1.0);

    if xi_c > -1.0 {
        guard_endpoint(&product, -1.0, 1.0)?;
    }
    if xi_c < 1.0 {
        guard_endpoint(&product, 1.0, -1.0)?;
    }

    let low = adaptive_simpson(
        &|z| product(z) / (1.0 + z),
        -1.0 + ENDPOINT_NUDGE,
        xi_c,
        EXACT_SYMBOL_TOL,
    );
    let high = adaptive_simpson(
        &|z| product(z) / (1.0 - z),
        xi_c,
        1.0 - ENDPOINT_NUDGE,
        EXACT_SYMBOL_TOL,
    );
    Ok(low + high)
}

/// Samples the weighted integrand approaching `endpoint` from inside
/// (`direction` = ±1) and rejects divergent behavior.
fn guard_endpoint(product: &dyn Fn(f64) -> f64, endpoint: f64, direction: f64) -> Result<()> {
    for scale in [1.0, 1e2, 1e4, 1e6] {
        let offset = ENDPOINT_NUDGE * scale;
        let z = endpoint + direction * offset;
        let value = (product(z) / offset).abs();
        if value > DIVERGENCE_GUARD {
            return Err(Error::EndpointSingularity {
                endpoint,
                magnitude: value,
            });
        }
    }
    Ok(())
}

/// Central difference vs. closed-form derivative of the worked example's
/// symbol at `ξ ∈ (−1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeCheck {
    pub finite_diff: f64,
    pub analytic: f64,
}

pub fn symbol_derivative_check(
    psi_hat: &SpectralWindow,
    phi_hat: &SpectralWindow,
    xi: f64,
    h: f64,
) -> Result<DerivativeCheck> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::DomainViolation(format!("step h = {h}")));
    }
    if !(xi > -1.0 && xi < 1.0 && xi - h > -1.0 && xi + h < 1.0) {
        return Err(Error::DomainViolation(format!(
            "ξ ± h must stay inside (−1, 1), got ξ = {xi}, h = {h}"
        )));
    }
    let plus = example1_symbol_exact(psi_hat, phi_hat, xi + h)?;
    let minus = example1_symbol_exact(psi_hat, phi_hat, xi - h)?;
    let finite_diff = (plus - minus) / (2.0 * h);
    let analytic = 2.0 * xi / (xi * xi - 1.0) * psi_hat.eval(xi) * phi_hat.eval(xi);
    Ok(DerivativeCheck {
        finite_diff,
        analytic,
    })
}

/// Truncated analysis energy of the warped example system:
///
/// `E(Ω) = ∫_{|ω|≤Ω} ∫ |f̂(ξ)|² |ψ̂(β(ω)(ξ−ω))|² β(ω) dξ dω`,
/// `β(ω) = (1+|ω|)⁻¹`.
///
/// The ω grid is symmetric with `omega_density` nodes per unit, so the node
/// sets nest across caps and the energy is nondecreasing in `omega_cap`.
pub fn truncated_analysis_energy(
    psi_hat: &SpectralWindow,
    f_hat: &SpectralWindow,
    omega_cap: f64,
    xi_grid: &QuadratureGrid,
    omega_density: u32,
) -> Result<f64> {
    if !(omega_cap.is_finite() && omega_cap >= 0.0) {
        return Err(Error::DomainViolation(format!("ω cap = {omega_cap}")));
    }
    if omega_density == 0 {
        return Err(Error::InvalidGrid("ω density must be positive".into()));
    }
    if omega_cap == 0.0 {
        return Ok(0.0);
    }
    let half = (omega_cap * omega_density as f64).ceil() as usize;
    let omega_grid = QuadratureGrid::new(-omega_cap, omega_cap, 2 * half + 1)?;
    Ok(omega_grid.trapezoid(|omega| {
        let beta = 1.0 / (1.0 + omega.abs());
        let inner = xi_grid.trapezoid(|xi| {
            let f = f_hat.eval(xi);
            let w = psi_hat.eval(beta * (xi - omega));
            f * f * w * w
        });
        beta * inner
    }))
}

/// Truncated energies at increasing caps.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergySeries {
    caps: Vec<f64>,
    energies: Vec<f64>,
}

impl EnergySeries {
    fn new(caps: Vec<f64>, energies: Vec<f64>) -> Result<Self> {
        if energies.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidGrid(
                "energies must be nondecreasing in the cap".into(),
            ));
        }
        Ok(Self { caps, energies })
    }

    pub fn caps(&self) -> &[f64] {
        &self.caps
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// Differences between consecutive energies.
    pub fn increments(&self) -> Vec<f64> {
        self.energies.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// Computes [`truncated_analysis_energy`] at each cap of an increasing list.
pub fn energy_series(
    psi_hat: &SpectralWindow,
    f_hat: &SpectralWindow,
    caps: &[f64],
    xi_grid: &QuadratureGrid,
    omega_density: u32,
) -> Result<EnergySeries> {
    if caps.is_empty() || caps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid(
            "caps must be strictly increasing and nonempty".into(),
        ));
    }
    let energies = caps
        .iter()
        .map(|&cap| truncated_analysis_energy(psi_hat, f_hat, cap, xi_grid, omega_density))
        .collect::<Result<Vec<_>>>()?;
    EnergySeries::new(caps.to_vec(), energies)
}

/// The admissibility constant of the λ-section subgroup:
/// `∫ ψ̂(ξ)φ̂(ξ) dξ/|ξ+λ|` over the grid span.
///
/// Both windows must vanish on a neighborhood of `−λ`; a guard interval is
/// sampled and [`Error::GuardTripped`] raised if window mass is found there.
pub fn lambda_section_constant(
    psi_hat: &SpectralWindow,
    phi_hat: &SpectralWindow,
    lambda: f64,
    grid: &QuadratureGrid,
) -> Result<f64> {
    if !lambda.is_finite() {
        return Err(Error::DomainViolation(format!("λ = {lambda}")));
    }
    let singular_point = -lambda;
    let radius = (1e-3 * grid.span()).max(1e-6);
    let samples = 101;
    for i in 0..samples {
        let t = singular_point - radius + 2.0 * radius * i as f64 / (samples - 1) as f64;
        if psi_hat.eval(t) * phi_hat.eval(t) != 0.0 {
            return Err(Error::GuardTripped { point: t });
        }
    }
    Ok(grid.trapezoid(|xi| {
        let num = psi_hat.eval(xi) * phi_hat.eval(xi);
        if num == 0.0 {
            0.0
        } else {
            num / (xi + lambda).abs()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn paper_windows() -> (SpectralWindow, SpectralWindow) {
        (
            SpectralWindow::one_minus_xi_on_unit_interval(),
            SpectralWindow::one_plus_xi_on_unit_interval(),
        )
    }

    #[test]
    fn exact_symbol_matches_the_closed_form() {
        // hand check at ξ=0: ∫_{−1}^0 (1−z)dz + ∫_0^1 (1+z)dz = 3/2 + 3/2 = 3
        let (psi, phi) = paper_windows();
        assert_abs_diff_eq!(
            example1_symbol_exact(&psi, &phi, 0.0).unwrap(),
            3.0,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            example1_symbol_exact(&psi, &phi, 1.0).unwrap(),
            2.0,
            epsilon = 1e-8
        );
        for xi in [-0.9, -0.5, -0.2, 0.4, 0.75] {
            let expect = 3.0 - xi * xi;
            assert_abs_diff_eq!(
                example1_symbol_exact(&psi, &phi, xi).unwrap(),
                expect,
                epsilon = 1e-8
            );
        }
        for xi in [-3.0, -1.5, 1.5, 3.0] {
            assert_abs_diff_eq!(
                example1_symbol_exact(&psi, &phi, xi).unwrap(),
                2.0,
                epsilon = 1e-8
            );
        }
    }

    #[test]
    fn exact_symbol_is_even_for_even_products() {
        let (psi, phi) = paper_windows();
        for xi in [0.37, 0.81] {
            let plus = example1_symbol_exact(&psi, &phi, xi).unwrap();
            let minus = example1_symbol_exact(&psi, &phi, -xi).unwrap();
            assert_abs_diff_eq!(plus, minus, epsilon = 1e-9);
        }
    }

    #[test]
    fn non_decaying_endpoints_are_rejected() {
        let flat = SpectralWindow::indicator(-1.0, 1.0).unwrap();
        match example1_symbol_exact(&flat, &flat, 0.0) {
            Err(Error::EndpointSingularity { .. }) => {}
            other => panic!("expected endpoint singularity, got {other:?}"),
        }
    }

    #[test]
    fn zero_product_windows_give_zero_symbol_and_derivative() {
        let psi = SpectralWindow::indicator(-1.0, -0.5).unwrap();
        let phi = SpectralWindow::indicator(0.5, 1.0).unwrap();
        assert_eq!(example1_symbol_exact(&psi, &phi, 0.3).unwrap(), 0.0);
        let check = symbol_derivative_check(&psi, &phi, 0.3, 1e-4).unwrap();
        assert_eq!(check.analytic, 0.0);
        assert_abs_diff_eq!(check.finite_diff, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn quadrature_symbol_approaches_the_exact_one() {
        let (psi, phi) = paper_windows();
        let config = AwhConfig::warped_example();
        let grid = QuadratureGrid::new(-1e3, 1e3, 100_001).unwrap();
        for xi in [0.0, 0.5, 2.0] {
            let approx_val = awh_symbol(&config, &psi, &phi, &grid, xi).unwrap();
            let exact = example1_symbol_exact(&psi, &phi, xi).unwrap();
            let rel = (approx_val - exact).abs() / exact.abs();
            assert!(
                rel <= 1e-2,
                "ξ = {xi}: {approx_val} vs {exact} (rel {rel:.2e})"
            );
        }
    }

    #[test]
    fn omega_independent_integrand_reduces_to_the_product() {
        // β ≡ 1, η ≡ 0, s = 0: the integrand is constant in ω, so the value
        // is ψ̂(ξ)φ̂(ξ) times the interval length.
        let (psi, phi) = paper_windows();
        let config = AwhConfig::new(BetaSpec::Constant(1.0), EtaSpec::Zero, 0.0).unwrap();
        let grid = QuadratureGrid::new(0.0, 1.0, 11).unwrap();
        for xi in [-0.4, 0.0, 0.6] {
            let val = awh_symbol(&config, &psi, &phi, &grid, xi).unwrap();
            assert_abs_diff_eq!(val, psi.eval(xi) * phi.eval(xi), epsilon = 1e-13);
        }
    }

    #[test]
    fn identity_beta_rejects_grids_through_zero() {
        let (psi, phi) = paper_windows();
        let config = AwhConfig::new(BetaSpec::Identity, EtaSpec::Zero, 1.0).unwrap();
        let grid = QuadratureGrid::new(-1.0, 1.0, 5).unwrap(); // node at 0
        match awh_symbol(&config, &psi, &phi, &grid, 0.0) {
            Err(Error::SingularNode { omega }) => assert_eq!(omega, 0.0),
            other => panic!("expected singular node, got {other:?}"),
        }
        let shifted = QuadratureGrid::new(-1.0, 1.0, 4).unwrap(); // nodes avoid 0
        assert!(awh_symbol(&config, &psi, &phi, &shifted, 0.0).is_ok());
    }

    #[test]
    fn config_validation() {
        assert!(AwhConfig::new(BetaSpec::Constant(0.0), EtaSpec::Zero, 1.0).is_err());
        assert!(AwhConfig::new(BetaSpec::PowerLaw(1.5), EtaSpec::Zero, 1.0).is_err());
        assert!(AwhConfig::new(BetaSpec::PowerLaw(0.5), EtaSpec::Identity, 1.0).is_ok());
    }

    #[test]
    fn derivative_check_at_the_paper_points() {
        let (psi, phi) = paper_windows();
        // ψ̂φ̂ = 1−ξ² on the interval, so the analytic derivative is −2ξ.
        let mid = symbol_derivative_check(&psi, &phi, 0.5, 1e-4).unwrap();
        assert_abs_diff_eq!(mid.analytic, -1.0, epsilon = 1e-12);
        assert!((mid.finite_diff - mid.analytic).abs() <= 1e-4 * (1.0 + mid.analytic.abs()));

        let origin = symbol_derivative_check(&psi, &phi, 0.0, 1e-4).unwrap();
        assert_abs_diff_eq!(origin.analytic, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(origin.finite_diff, 0.0, epsilon = 1e-8);
    }

    #[test]
    fn derivative_check_domain_violations() {
        let (psi, phi) = paper_windows();
        assert!(symbol_derivative_check(&psi, &phi, 0.9999, 1e-2).is_err());
        assert!(symbol_derivative_check(&psi, &phi, 1.5, 1e-4).is_err());
        assert!(symbol_derivative_check(&psi, &phi, 0.5, 0.0).is_err());
    }

    #[test]
    fn energy_vanishes_for_zero_cap_or_zero_signal() {
        let (psi, _) = paper_windows();
        let f_hat = SpectralWindow::indicator(-1.0, 1.0).unwrap();
        let xi_grid = QuadratureGrid::new(-1.0, 1.0, 65).unwrap();
        assert_eq!(
            truncated_analysis_energy(&psi, &f_hat, 0.0, &xi_grid, 4).unwrap(),
            0.0
        );
        let zero = SpectralWindow::piecewise(vec![-1.0, 1.0], vec![vec![0.0]]).unwrap();
        assert_eq!(
            truncated_analysis_energy(&psi, &zero, 16.0, &xi_grid, 4).unwrap(),
            0.0
        );
    }

    #[test]
    fn energies_grow_with_the_cap() {
        let (psi, _) = paper_windows();
        let f_hat = SpectralWindow::indicator(-1.0, 1.0).unwrap();
        let xi_grid = QuadratureGrid::new(-1.0, 1.0, 65).unwrap();
        let series = energy_series(&psi, &f_hat, &[4.0, 8.0, 16.0, 32.0], &xi_grid, 4).unwrap();
        let incs = series.increments();
        assert!(incs.iter().all(|&d| d > 0.0), "increments {incs:?}");
        // logarithmic tail: per-doubling increments approach 8·ln 2
        let last = *incs.last().unwrap();
        assert!(
            (last - 8.0 * std::f64::consts::LN_2).abs() < 1.0,
            "increment {last}"
        );
    }

    #[test]
    fn lambda_section_hits_log_two() {
        let chi = SpectralWindow::indicator(1.0, 2.0).unwrap();
        let grid = QuadratureGrid::new(1.0, 2.0, 20_001).unwrap();
        let val = lambda_section_constant(&chi, &chi, 0.0, &grid).unwrap();
        assert_abs_diff_eq!(val, std::f64::consts::LN_2, epsilon = 1e-6);
    }

    #[test]
    fn lambda_section_with_shifted_pole() {
        // ∫₁² dξ/(ξ+1) = ln(3/2)
        let chi = SpectralWindow::indicator(1.0, 2.0).unwrap();
        let grid = QuadratureGrid::new(1.0, 2.0, 20_001).unwrap();
        let val = lambda_section_constant(&chi, &chi, 1.0, &grid).unwrap();
        assert_abs_diff_eq!(val, 1.5f64.ln(), epsilon = 1e-6);
    }

    #[test]
    fn quadrature_symbol_converges_under_refinement() {
        let (psi, phi) = paper_windows();
        let config = AwhConfig::warped_example();
        let exact = example1_symbol_exact(&psi, &phi, 0.5).unwrap();
        let coarse_grid = QuadratureGrid::new(-50.0, 50.0, 2_001).unwrap();
        let fine_grid = QuadratureGrid::new(-2e3, 2e3, 400_001).unwrap();
        let coarse = (awh_symbol(&config, &psi, &phi, &coarse_grid, 0.5).unwrap() - exact).abs();
        let fine = (awh_symbol(&config, &psi, &phi, &fine_grid, 0.5).unwrap() - exact).abs();
        assert!(
            fine < coarse,
            "refinement did not reduce the error: {fine} vs {coarse}"
        );
        assert!(fine <= 1e-2 * exact.abs());
    }

    #[test]
    fn lambda_section_linearity_and_orthogonality() {
        let chi = SpectralWindow::indicator(1.0, 2.0).unwrap();
        let grid = QuadratureGrid::new(0.5, 2.5, 20_001).unwrap();
        let base = lambda_section_constant(&chi, &chi, 0.0, &grid).unwrap();
        // scaling ψ̂ by c scales the constant by c
        let scaled = SpectralWindow::piecewise(vec![1.0, 2.0], vec![vec![3.5]]).unwrap();
        let val = lambda_section_constant(&scaled, &chi, 0.0, &grid).unwrap();
        assert_abs_diff_eq!(val, 3.5 * base, epsilon = 1e-9 * 3.5 * base.abs());
        // disjoint supports integrate to zero
        let other = SpectralWindow::indicator(-2.0, -1.0).unwrap();
        assert_eq!(
            lambda_section_constant(&chi, &other, 0.0, &grid).unwrap(),
            0.0
        );
    }

    #[test]
    fn lambda_guard_trips_on_overlap() {
        let wide = SpectralWindow::indicator(-0.5, 1.0).unwrap();
        let grid = QuadratureGrid::new(-1.0, 1.0, 101).unwrap();
        match lambda_section_constant(&wide, &wide, 0.0, &grid) {
            Err(Error::GuardTripped { .. }) => {}
            other => panic!("expected guard trip, got {other:?}"),
        }
    }
}
