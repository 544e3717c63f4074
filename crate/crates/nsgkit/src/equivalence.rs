//! Equivalence transforms of pairs: unitaries, phases, and reindexing.
//!
//! Transforming both members of a pair by a unitary `T`, a unimodular phase
//! and a measure-preserving reindex conjugates the resolution operator:
//! `S̃ = T S T*`. The unitaries below map nonstationary systems to
//! nonstationary systems, so the transformed pair is again structured:
//!
//! * translations and modulations keep the kind and move the windows (the
//!   commutation phases are absorbed by the index set);
//! * the unitary Fourier transform `U = F/√|G|` swaps the two kinds and
//!   rescales the label weights by `|G|^{±1}` (the point-axis Haar unit
//!   changes between counting measure and `1/|G|`);
//! * a pointwise unimodular multiplier preserves character-invariant systems
//!   only — applied to a translation-invariant family it leaves the class, so
//!   it is rejected there.
//!
//! Phases enter analysis and synthesis symmetrically and cancel in `S̃`; the
//! per-label phase accepted here is the subclass representable by window
//! families (a point-varying phase would change nothing about `S̃` but cannot
//! be stored in a [`PairSystem`]).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::fourier;
use crate::group::{FiniteLcaGroup, GroupElement};
use crate::operators::DenseMatrix;
use crate::signal::{modulate, translate, Side, Signal};
use crate::window::{PairSystem, SystemKind, WindowFamily};

/// Tolerance for "unimodular" checks on phases and diagonal entries.
const UNIMODULAR_TOL: f64 = 1e-9;

/// A unitary on `L²(G)` that maps nonstationary systems to nonstationary
/// systems.
#[derive(Debug, Clone)]
pub enum UnitarySpec {
    /// `U = F/√|G|`, with the result reinterpreted on the group side.
    FourierConjugation,
    /// `T_z`.
    Translation(GroupElement),
    /// `M_k`.
    Modulation(GroupElement),
    /// Pointwise multiplication by a unimodular vector.
    DiagonalPhase(Vec<Complex64>),
    /// Operator product; the last element acts first.
    Composition(Vec<UnitarySpec>),
}

/// A permutation of the label axis.
#[derive(Debug, Clone)]
pub enum Reindex {
    /// Permutes entries but requires equal weights at permuted positions.
    WithinWeightClasses(Vec<usize>),
    /// Moves weights along with their entries; any permutation is valid.
    CarryWeights(Vec<usize>),
}

/// Applies the unitary to a single group-side signal.
pub fn apply_unitary(spec: &UnitarySpec, f: &Signal) -> Result<Signal> {
    f.require_side(Side::Group)?;
    match spec {
        UnitarySpec::FourierConjugation => {
            let scale = 1.0 / (f.group().cardinality() as f64).sqrt();
            Ok(fourier(f)?
                .with_side(Side::Group)
                .scaled(Complex64::new(scale, 0.0)))
        }
        UnitarySpec::Translation(z) => translate(z, f),
        UnitarySpec::Modulation(k) => modulate(k, f),
        UnitarySpec::DiagonalPhase(u) => {
            check_unimodular_vector(u, f.group())?;
            Ok(Signal::from_fn(f.group().clone(), Side::Group, |x, _| {
                u[x] * f.values()[x]
            }))
        }
        UnitarySpec::Composition(specs) => {
            let mut out = f.clone();
            for s in specs.iter().rev() {
                out = apply_unitary(s, &out)?;
            }
            Ok(out)
        }
    }
}

/// Dense matrix of the unitary, assembled columnwise; test oracle for the
/// conjugation identity `S̃ = U S U*`.
pub fn unitary_dense(spec: &UnitarySpec, group: &FiniteLcaGroup) -> Result<DenseMatrix> {
    let n = group.cardinality();
    let mut out = DenseMatrix::zeros(n);
    for (c, el) in group.elements().enumerate() {
        let col = apply_unitary(spec, &Signal::delta(group.clone(), &el)?)?;
        for r in 0..n {
            out.set(r, c, col.values()[r]);
        }
    }
    Ok(out)
}

/// Transforms a pair by phase, unitary and reindex; the result's dense
/// resolution matrix equals `U·S·U*` and the reproducing-pair flag is
/// preserved.
pub fn equivalence_transform(
    pair: &PairSystem,
    unitary: &UnitarySpec,
    phase: Option<&[Complex64]>,
    reindex: Option<&Reindex>,
) -> Result<PairSystem> {
    let mut kind = pair.kind();
    let mut analysis = pair.analysis().clone();
    let mut synthesis = pair.synthesis().clone();

    if let Some(tau) = phase {
        if tau.len() != analysis.len() {
            return Err(Error::InvalidTransform(format!(
                "phase has {} entries, family has {} labels",
                tau.len(),
                analysis.len()
            )));
        }
        for (y, t) in tau.iter().enumerate() {
            if (t.norm() - 1.0).abs() > UNIMODULAR_TOL {
                return Err(Error::InvalidTransform(format!(
                    "phase entry {y} has modulus {}",
                    t.norm()
                )));
            }
        }
        analysis = scale_windows(&analysis, tau)?;
        synthesis = scale_windows(&synthesis, tau)?;
    }

    (kind, analysis) = transform_family(unitary, kind, &analysis)?;
    (_, synthesis) = transform_family(unitary, pair.kind(), &synthesis)?;

    if let Some(rx) = reindex {
        analysis = apply_reindex(rx, &analysis)?;
        synthesis = apply_reindex(rx, &synthesis)?;
    }

    PairSystem::new(kind, analysis, synthesis)
}

fn scale_windows(family: &WindowFamily, tau: &[Complex64]) -> Result<WindowFamily> {
    let windows = family
        .entries()
        .iter()
        .zip(tau)
        .map(|(e, t)| e.window().scaled(*t))
        .collect();
    family.with_windows(windows)
}

fn transform_family(
    spec: &UnitarySpec,
    kind: SystemKind,
    family: &WindowFamily,
) -> Result<(SystemKind, WindowFamily)> {
    match spec {
        UnitarySpec::Translation(_) | UnitarySpec::Modulation(_) => {
            let windows = family
                .entries()
                .iter()
                .map(|e| apply_unitary(spec, e.window()))
                .collect::<Result<Vec<_>>>()?;
            Ok((kind, family.with_windows(windows)?))
        }
        UnitarySpec::DiagonalPhase(u) => {
            if kind != SystemKind::CharacterInvariant {
                return Err(Error::InvalidTransform(
                    "a pointwise phase multiplier preserves only character-invariant systems"
                        .into(),
                ));
            }
            check_unimodular_vector(u, family.group())?;
            let windows = family
                .entries()
                .iter()
                .map(|e| apply_unitary(spec, e.window()))
                .collect::<Result<Vec<_>>>()?;
            Ok((kind, family.with_windows(windows)?))
        }
        UnitarySpec::FourierConjugation => {
            let n = family.group().cardinality() as f64;
            let (new_kind, weight_factor) = match kind {
                SystemKind::TranslationInvariant => (SystemKind::CharacterInvariant, n),
                SystemKind::CharacterInvariant => (SystemKind::TranslationInvariant, 1.0 / n),
            };
            let windows = family
                .entries()
                .iter()
                .map(|e| apply_unitary(spec, e.window()))
                .collect::<Result<Vec<_>>>()?;
            let moved = family
                .with_windows(windows)?
                .with_scaled_weights(weight_factor)?;
            Ok((new_kind, moved))
        }
        UnitarySpec::Composition(specs) => {
            let mut kind = kind;
            let mut fam = family.clone();
            for s in specs.iter().rev() {
                (kind, fam) = transform_family(s, kind, &fam)?;
            }
            Ok((kind, fam))
        }
    }
}

fn apply_reindex(rx: &Reindex, family: &WindowFamily) -> Result<WindowFamily> {
    let (perm, check_weights) = match rx {
        Reindex::WithinWeightClasses(p) => (p, true),
        Reindex::CarryWeights(p) => (p, false),
    };
    let n = family.len();
    if perm.len() != n {
        return Err(Error::InvalidReindex(format!(
            "permutation has {} entries, family has {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidReindex(
                "not a permutation of the label set".into(),
            ));
        }
        seen[p] = true;
    }
    if check_weights {
        for (i, &p) in perm.iter().enumerate() {
            let wi = family.entries()[i].weight();
            let wp = family.entries()[p].weight();
            if wi != wp {
                return Err(Error::InvalidReindex(format!(
                    "weight structure violated: position {i} carries {wi}, position {p} carries {wp}"
                )));
            }
        }
    }
    let entries = perm
        .iter()
        .map(|&p| {
            let e = &family.entries()[p];
            (e.label().to_string(), e.weight(), e.window().clone())
        })
        .collect();
    WindowFamily::new(entries)
}

fn check_unimodular_vector(u: &[Complex64], group: &FiniteLcaGroup) -> Result<()> {
    if u.len() != group.cardinality() {
        return Err(Error::InvalidTransform(format!(
            "diagonal phase has {} entries, |G| = {}",
            u.len(),
            group.cardinality()
        )));
    }
    for (i, v) in u.iter().enumerate() {
        if (v.norm() - 1.0).abs() > UNIMODULAR_TOL {
            return Err(Error::InvalidTransform(format!(
                "diagonal entry {i} has modulus {}",
                v.norm()
            )));
        }
    }
    Ok(())
}
