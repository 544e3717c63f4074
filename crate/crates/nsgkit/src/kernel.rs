//! The reproducing kernel of a pair and the range projection it induces.
//!
//! `R(p,q) = ⟨S⁻¹Φ(q), Ψ(p)⟩` characterizes the analysis range: a coefficient
//! array `F` equals `C_Ψf` for some `f` exactly when `F` is a fixed point of
//! the weighted kernel sum `R(F)(p) = Σ_q w_q R(p,q) F(q)`. On the analysis
//! range, applying the kernel is idempotent. [`kernel_apply`] uses the
//! factored form `R(F) = C_Ψ S⁻¹ D_Φ F`, which coincides with the double sum
//! identically; tests assemble the double sum from [`reproducing_kernel`].

use num_complex::Complex64;

use crate::error::Result;
use crate::group::GroupElement;
use crate::operators::{analyze_kind, inverse_resolution, synthesize_kind};
use crate::signal::{modulate, translate, Signal};
use crate::window::{CoefficientArray, PairSystem, SystemKind};

/// The atom `Φ(p) = T_xφ_y` (translation kind) or `M_ξφ_y` (character kind).
fn synthesis_atom(pair: &PairSystem, point: &GroupElement, label: usize) -> Result<Signal> {
    let window = pair.synthesis().entries()[label].window();
    match pair.kind() {
        SystemKind::TranslationInvariant => translate(point, window),
        SystemKind::CharacterInvariant => modulate(point, window),
    }
}

/// Kernel entry `R(p,q) = ⟨S⁻¹Φ(q), Ψ(p)⟩` for index pairs `(point, label)`.
///
/// Fails with `SymbolSingular` when the pair is not reproducing.
pub fn reproducing_kernel(
    pair: &PairSystem,
    p: (&GroupElement, usize),
    q: (&GroupElement, usize),
) -> Result<Complex64> {
    let phi_q = synthesis_atom(pair, q.0, q.1)?;
    let s_inv_phi = inverse_resolution(pair, &phi_q)?;
    // ⟨S⁻¹Φ(q), Ψ(p)⟩ = C_Ψ(S⁻¹Φ(q)) evaluated at p
    let window = pair.analysis().entries()[p.1].window();
    let psi_p = match pair.kind() {
        SystemKind::TranslationInvariant => translate(p.0, window)?,
        SystemKind::CharacterInvariant => modulate(p.0, window)?,
    };
    s_inv_phi.inner(&psi_p)
}

/// Applies the kernel projection: `R(F) = C_Ψ S⁻¹ D_Φ F`.
///
/// Arrays in the analysis range are fixed points; arbitrary arrays are
/// projected onto the range.
pub fn kernel_apply(pair: &PairSystem, coeffs: &CoefficientArray) -> Result<CoefficientArray> {
    let synthesized = synthesize_kind(pair.kind(), pair.synthesis(), coeffs)?;
    let resolved = inverse_resolution(pair, &synthesized)?;
    analyze_kind(pair.kind(), pair.analysis(), &resolved)
}
