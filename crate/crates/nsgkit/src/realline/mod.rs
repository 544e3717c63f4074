//! Sampled-real-line computations for affine Weyl-Heisenberg systems and the
//! semi-discrete dyadic wavelet system.
//!
//! Windows are described spectrally by closed-form [`SpectralWindow`]s,
//! evaluable at arbitrary points. Symbols of warped systems are computed by
//! composite trapezoid rules over explicit [`QuadratureGrid`]s; the
//! closed-form example uses adaptive Simpson quadrature for its weighted
//! integrals. The energy computation reproduces the logarithmic divergence
//! that shows a reproducing pair need not be Bessel.

mod awh;
mod quadrature;
mod wavelet;
mod window;

pub use awh::{
    awh_symbol, energy_series, example1_symbol_exact, lambda_section_constant,
    symbol_derivative_check, truncated_analysis_energy, AwhConfig, BetaSpec, DerivativeCheck,
    EnergySeries, EtaSpec,
};
pub use quadrature::{adaptive_simpson, QuadratureGrid, SIMPSON_MAX_DEPTH};
pub use wavelet::{wavelet_dual_commutation, wavelet_range_covers, wavelet_symbol};
pub use window::SpectralWindow;
