//! Nonstationary Gabor systems and reproducing pairs at desk scale.
//!
//! The crate has two halves:
//!
//! * **Finite abelian groups** ([`group`], [`signal`], [`fourier`], [`window`],
//!   [`symbol`], [`operators`], [`kernel`], [`equivalence`]): signals on products
//!   of cyclic groups, where every integral is a finite sum. Window families give
//!   rise to translation- or character-invariant systems whose analysis, synthesis
//!   and resolution operators are computed exactly (up to rounding). The resolution
//!   operator of such a pair is a Fourier multiplier; its symbol yields bounds,
//!   frame/reproducing-pair diagnostics, canonical duals and reproducing-kernel
//!   projections.
//!
//! * **Sampled real line** ([`realline`]): quadrature evaluation of the symbols of
//!   affine Weyl-Heisenberg systems, the closed-form warped-symbol example, the
//!   semi-discrete dyadic wavelet symbol, and the truncated-energy computation that
//!   exhibits a reproducing pair without the Bessel property.
//!
//! Haar convention: counting measure on the group, weight `1/|G|` on the dual, so
//! `Σ_x |f(x)|² = (1/|G|) Σ_k |f̂(k)|²` holds exactly.
//!
//! ```
//! use nsgkit::operators::{analyze, reconstruct};
//! use nsgkit::symbol::diagnose;
//! use nsgkit::{FiniteLcaGroup, PairSystem, Side, Signal, SystemKind, WindowFamily};
//! use num_complex::Complex64;
//!
//! // A two-window translation-invariant frame on Z/12.
//! let group = FiniteLcaGroup::cyclic(12)?;
//! let bump = Signal::from_fn(group.clone(), Side::Group, |i, _| {
//!     Complex64::new(1.0 / (1.0 + i as f64), 0.0)
//! });
//! let spike = Signal::delta(group.clone(), &group.element(&[3])?)?;
//! let family = WindowFamily::new(vec![
//!     ("bump".into(), 1.0, bump),
//!     ("spike".into(), 0.5, spike),
//! ])?;
//! let pair = PairSystem::self_paired(SystemKind::TranslationInvariant, family);
//!
//! let report = diagnose(&pair);
//! assert!(report.is_reproducing_pair()); // frame bounds A, B are positive
//!
//! // Analyze a signal and invert the transform through the resolution operator.
//! let f = Signal::from_fn(group, Side::Group, |i, _| {
//!     Complex64::new((0.7 * i as f64).sin(), (1.3 * i as f64).cos())
//! });
//! let coefficients = analyze(&pair.analysis_system(), &f)?;
//! let recovered = reconstruct(&pair, &coefficients)?;
//! assert!((&recovered - &f).norm() <= 1e-9 * f.norm());
//! # Ok::<(), nsgkit::Error>(())
//! ```

pub mod equivalence;
pub mod error;
pub mod fourier;
pub mod group;
pub mod kernel;
pub mod operators;
pub mod realline;
pub mod signal;
pub mod symbol;
pub mod window;

pub use error::{Error, Result};
pub use group::{FiniteLcaGroup, GroupElement};
pub use signal::{Side, Signal};
pub use window::{CoefficientArray, NsgSystem, PairSystem, SystemKind, WindowFamily};
