//! Analysis, synthesis, resolution operators, canonical duals, and the dense
//! oracle matrix.
//!
//! The canonical analysis route goes through the Fourier domain:
//! `C_Ψf(·,y) = f ∗ ψ_y*` per window in the translation-invariant case, one
//! transform of `f·conj(ψ_y)` per window in the character-invariant case.
//! [`analyze_direct`] evaluates the defining inner products instead and serves
//! as the `O(|G|²|Y|)` oracle. The resolution operator
//! `S_{Ψ,Φ}f = Σ_y μ_y Σ_p ⟨f,Ψ(p,y)⟩ Φ(p,y)` is computed both by composing
//! the two operators ([`resolution_direct`]) and as a Fourier multiplier with
//! the pair's symbol ([`resolution_fast`]); the two must agree.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{fourier, inverse_fourier};
use crate::signal::{modulate, translate, Side, Signal};
use crate::symbol::{symbol, SymbolReport};
use crate::window::{CoefficientArray, NsgSystem, PairSystem, SystemKind, WindowFamily};

/// Default `|G|` cap for dense-matrix assembly.
pub const DEFAULT_ORACLE_CAP: usize = 256;

/// Nonstationary Gabor transform: `C_Ψf(p,y) = ⟨f, Ψ(p,y)⟩`, Fourier route.
pub fn analyze(system: &NsgSystem, f: &Signal) -> Result<CoefficientArray> {
    analyze_kind(system.kind(), system.family(), f)
}

pub(crate) fn analyze_kind(
    kind: SystemKind,
    family: &WindowFamily,
    f: &Signal,
) -> Result<CoefficientArray> {
    f.require_side(Side::Group)?;
    if f.group() != family.group() {
        return Err(Error::GroupMismatch);
    }
    let mut out = CoefficientArray::zeros(family.group().clone(), kind, family.len());
    match kind {
        SystemKind::TranslationInvariant => {
            // ⟨f, T_xψ_y⟩ = (f ∗ ψ_y*)(x), and (f ∗ ψ_y*)^ = f̂ · conj(ψ̂_y).
            let f_hat = fourier(f)?;
            for (y, entry) in family.entries().iter().enumerate() {
                let psi_hat = fourier(entry.window())?;
                let prod = Signal::from_fn(f.group().clone(), Side::Dual, |k, _| {
                    f_hat.values()[k] * psi_hat.values()[k].conj()
                });
                out.set_column(y, &inverse_fourier(&prod)?);
            }
        }
        SystemKind::CharacterInvariant => {
            // ⟨f, M_ξψ_y⟩ = (f · conj(ψ_y))^(ξ).
            for (y, entry) in family.entries().iter().enumerate() {
                let windowed = Signal::from_fn(f.group().clone(), Side::Group, |x, _| {
                    f.values()[x] * entry.window().values()[x].conj()
                });
                out.set_column(y, &fourier(&windowed)?);
            }
        }
    }
    Ok(out)
}

/// Analysis by the defining inner products; `O(|G|²|Y|)` test oracle.
pub fn analyze_direct(system: &NsgSystem, f: &Signal) -> Result<CoefficientArray> {
    f.require_side(Side::Group)?;
    let family = system.family();
    if f.group() != family.group() {
        return Err(Error::GroupMismatch);
    }
    let group = family.group();
    let mut out = CoefficientArray::zeros(group.clone(), system.kind(), family.len());
    for (p, el) in group.elements().enumerate() {
        for (y, entry) in family.entries().iter().enumerate() {
            let atom = match system.kind() {
                SystemKind::TranslationInvariant => translate(&el, entry.window())?,
                SystemKind::CharacterInvariant => modulate(&el, entry.window())?,
            };
            out.set(p, y, f.inner(&atom)?);
        }
    }
    Ok(out)
}

/// Synthesis `D_ΦF = Σ_y μ_y Σ_p w_p F(p,y) Φ(p,y)` with the point-axis Haar
/// weight `w_p` of the system kind.
pub fn synthesize(system: &NsgSystem, coeffs: &CoefficientArray) -> Result<Signal> {
    synthesize_kind(system.kind(), system.family(), coeffs)
}

pub(crate) fn synthesize_kind(
    kind: SystemKind,
    family: &WindowFamily,
    coeffs: &CoefficientArray,
) -> Result<Signal> {
    coeffs.matches(kind, family)?;
    let group = family.group().clone();
    match kind {
        SystemKind::TranslationInvariant => {
            // Σ_y μ_y (F(·,y) ∗ φ_y), accumulated in the Fourier domain.
            let mut acc = vec![Complex64::new(0.0, 0.0); group.cardinality()];
            for (y, entry) in family.entries().iter().enumerate() {
                let col_hat = fourier(&coeffs.column(y))?;
                let phi_hat = fourier(entry.window())?;
                let mu = entry.weight();
                for (slot, (c, p)) in acc
                    .iter_mut()
                    .zip(col_hat.values().iter().zip(phi_hat.values()))
                {
                    *slot += mu * c * p;
                }
            }
            inverse_fourier(&Signal::new(group, Side::Dual, acc)?)
        }
        SystemKind::CharacterInvariant => {
            // Σ_y μ_y (1/|G|) Σ_ξ F(ξ,y) M_ξφ_y = Σ_y μ_y φ_y · F⁻¹(F(·,y)).
            let mut acc = vec![Complex64::new(0.0, 0.0); group.cardinality()];
            for (y, entry) in family.entries().iter().enumerate() {
                let col = inverse_fourier(&coeffs.column(y))?;
                let mu = entry.weight();
                for (slot, (c, w)) in acc
                    .iter_mut()
                    .zip(col.values().iter().zip(entry.window().values()))
                {
                    *slot += mu * c * w;
                }
            }
            Signal::new(group, Side::Group, acc)
        }
    }
}

/// Weighted pairing on coefficient space:
/// `⟨F,H⟩ = Σ_y μ_y w_p Σ_p F(p,y) conj(H(p,y))`.
pub fn coefficient_inner(
    system: &NsgSystem,
    f: &CoefficientArray,
    h: &CoefficientArray,
) -> Result<Complex64> {
    let family = system.family();
    f.matches(system.kind(), family)?;
    h.matches(system.kind(), family)?;
    let w_point = system.kind().point_weight(family.group());
    let mut acc = Complex64::new(0.0, 0.0);
    for (y, entry) in family.entries().iter().enumerate() {
        let mut col = Complex64::new(0.0, 0.0);
        for p in 0..f.n_points() {
            col += f.get(p, y) * h.get(p, y).conj();
        }
        acc += entry.weight() * w_point * col;
    }
    Ok(acc)
}

/// Weighted coefficient energy `Σ_y μ_y w_p Σ_p |F(p,y)|²`.
pub fn weighted_energy(system: &NsgSystem, f: &CoefficientArray) -> Result<f64> {
    Ok(coefficient_inner(system, f, f)?.re)
}

/// `S_{Ψ,Φ}f` by composing synthesis with analysis; oracle for
/// [`resolution_fast`].
pub fn resolution_direct(pair: &PairSystem, f: &Signal) -> Result<Signal> {
    let coeffs = analyze_kind(pair.kind(), pair.analysis(), f)?;
    synthesize_kind(pair.kind(), pair.synthesis(), &coeffs)
}

/// `S_{Ψ,Φ}f` as a multiplier: `F⁻¹(m·Ff)` (translation kind) or `m·f`
/// (character kind).
pub fn resolution_fast(pair: &PairSystem, f: &Signal) -> Result<Signal> {
    let report = symbol(pair);
    apply_multiplier(pair.kind(), report.values(), f)
}

/// `S_{Ψ,Φ}⁻¹f`, the multiplier with inverse symbol.
///
/// Fails with [`Error::SymbolSingular`] when the symbol's lower bound is below
/// the singular tolerance — the pair is not reproducing.
pub fn inverse_resolution(pair: &PairSystem, f: &Signal) -> Result<Signal> {
    let report = symbol(pair);
    let inverse = invert_symbol(&report)?;
    apply_multiplier(pair.kind(), &inverse, f)
}

/// Recovers `f` from `F = C_Ψf`: applies `S⁻¹ D_Φ`. Total on arbitrary arrays.
pub fn reconstruct(pair: &PairSystem, coeffs: &CoefficientArray) -> Result<Signal> {
    let synthesized = synthesize_kind(pair.kind(), pair.synthesis(), coeffs)?;
    inverse_resolution(pair, &synthesized)
}

/// Canonical dual of a translation-invariant family: `ψ̃_y = F⁻¹(ψ̂_y / m_Ψ)`.
///
/// The pair `(Ψ, Ψ̃)` has symbol ≡ 1, so synthesis against the dual inverts
/// the transform. The dual family keeps labels and weights.
pub fn canonical_dual(family: &WindowFamily) -> Result<WindowFamily> {
    let pair = PairSystem::self_paired(SystemKind::TranslationInvariant, family.clone());
    let report = symbol(&pair);
    let inverse = invert_symbol(&report)?;
    let mut windows = Vec::with_capacity(family.len());
    for entry in family.entries() {
        let psi_hat = fourier(entry.window())?;
        let scaled = Signal::from_fn(family.group().clone(), Side::Dual, |k, _| {
            psi_hat.values()[k] * inverse[k]
        });
        windows.push(inverse_fourier(&scaled)?);
    }
    family.with_windows(windows)
}

fn invert_symbol(report: &SymbolReport) -> Result<Vec<Complex64>> {
    if report.lower_bound() <= report.singular_tol() {
        return Err(Error::SymbolSingular {
            min_abs: report.lower_bound(),
            tol: report.singular_tol(),
        });
    }
    Ok(report.values().iter().map(|v| v.inv()).collect())
}

fn apply_multiplier(kind: SystemKind, m: &[Complex64], f: &Signal) -> Result<Signal> {
    f.require_side(Side::Group)?;
    if f.group().cardinality() != m.len() {
        return Err(Error::ShapeMismatch(
            "multiplier length differs from |G|".into(),
        ));
    }
    match kind {
        SystemKind::TranslationInvariant => {
            let f_hat = fourier(f)?;
            let scaled = Signal::from_fn(f.group().clone(), Side::Dual, |k, _| {
                m[k] * f_hat.values()[k]
            });
            inverse_fourier(&scaled)
        }
        SystemKind::CharacterInvariant => {
            Ok(Signal::from_fn(f.group().clone(), Side::Group, |x, _| {
                m[x] * f.values()[x]
            }))
        }
    }
}

/// Dense square matrix with row-major complex entries; the test-oracle
/// representation of operators on `L²(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Complex64) {
        self.data[row * self.n + col] = v;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, other.n, "matrix dimensions must agree");
        let mut out = DenseMatrix::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..self.n {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.n, other.n, "matrix dimensions must agree");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.data.chunks(self.n)
    }
}

/// Assembles `S_{Ψ,Φ}` columnwise by applying [`resolution_direct`] to each
/// delta, with the default cap of [`DEFAULT_ORACLE_CAP`].
pub fn dense_matrix(pair: &PairSystem) -> Result<DenseMatrix> {
    dense_matrix_capped(pair, DEFAULT_ORACLE_CAP)
}

/// [`dense_matrix`] with an explicit `|G|` cap.
pub fn dense_matrix_capped(pair: &PairSystem, cap: usize) -> Result<DenseMatrix> {
    let group = pair.group();
    let n = group.cardinality();
    if n > cap {
        return Err(Error::OracleCapExceeded {
            cardinality: n,
            cap,
        });
    }
    let mut out = DenseMatrix::zeros(n);
    for (c, el) in group.elements().enumerate() {
        let delta = Signal::delta(group.clone(), &el)?;
        let col = resolution_direct(pair, &delta)?;
        for r in 0..n {
            out.set(r, c, col.values()[r]);
        }
    }
    Ok(out)
}
