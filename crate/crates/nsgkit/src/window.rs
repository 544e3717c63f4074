//! Window families, nonstationary Gabor systems, pairs, and coefficient arrays.
//!
//! A [`WindowFamily`] is a finite weighted set of group-side windows
//! `{(y, μ_y, ψ_y)}` — the measure space `(Y, μ)` together with its generators.
//! An [`NsgSystem`] pins down how the family is spread over the point axis:
//! translation-invariant systems use `Ψ(x,y) = T_x ψ_y` with counting measure
//! on `x ∈ G`; character-invariant systems use `Ψ(ξ,y) = M_ξ ψ_y` with the
//! dual Haar weight `1/|G|` on `ξ ∈ Ĝ`. A [`PairSystem`] holds the analysis
//! and synthesis families over one shared index set.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::FiniteLcaGroup;
use crate::signal::{Side, Signal};

/// One `(label, weight, window)` entry of a family.
#[derive(Debug, Clone)]
pub struct WindowEntry {
    label: String,
    weight: f64,
    window: Signal,
}

impl WindowEntry {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn window(&self) -> &Signal {
        &self.window
    }
}

/// A finite weighted family of group-side windows over one group.
#[derive(Debug, Clone)]
pub struct WindowFamily {
    group: FiniteLcaGroup,
    entries: Vec<WindowEntry>,
}

impl WindowFamily {
    /// Validates labels (unique), weights (strictly positive, finite) and that
    /// every window is group-side on one shared group.
    pub fn new(entries: Vec<(String, f64, Signal)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidFamily(
                "family must contain at least one window".into(),
            ));
        }
        let group = entries[0].2.group().clone();
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(entries.len());
        for (label, weight, window) in entries {
            if !(weight.is_finite() && weight > 0.0) {
                return Err(Error::InvalidFamily(format!(
                    "weight for label {label:?} must be strictly positive and finite, got {weight}"
                )));
            }
            if !seen.insert(label.clone()) {
                return Err(Error::InvalidFamily(format!("duplicate label {label:?}")));
            }
            if window.group() != &group {
                return Err(Error::GroupMismatch);
            }
            window.require_side(Side::Group)?;
            out.push(WindowEntry {
                label,
                weight,
                window,
            });
        }
        Ok(Self {
            group,
            entries: out,
        })
    }

    /// Single window with weight 1, labelled `"w0"`.
    pub fn singleton(window: Signal) -> Result<Self> {
        Self::new(vec![("w0".into(), 1.0, window)])
    }

    pub fn group(&self) -> &FiniteLcaGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[WindowEntry] {
        &self.entries
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.label.as_str())
    }

    /// Builds a family with the same labels and weights but new windows.
    pub(crate) fn with_windows(&self, windows: Vec<Signal>) -> Result<Self> {
        if windows.len() != self.entries.len() {
            return Err(Error::ShapeMismatch(
                "window count differs from family size".into(),
            ));
        }
        Self::new(
            self.entries
                .iter()
                .zip(windows)
                .map(|(e, w)| (e.label.clone(), e.weight, w))
                .collect(),
        )
    }

    /// Same entries with all weights multiplied by `factor` (> 0).
    pub(crate) fn with_scaled_weights(&self, factor: f64) -> Result<Self> {
        Self::new(
            self.entries
                .iter()
                .map(|e| (e.label.clone(), e.weight * factor, e.window.clone()))
                .collect(),
        )
    }

    fn shares_index_set_with(&self, other: &Self) -> bool {
        self.group == other.group
            && self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.label == b.label && a.weight == b.weight)
    }
}

/// How a family is spread over the point axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    /// `Ψ(x,y) = T_x ψ_y`, points in G with counting measure.
    TranslationInvariant,
    /// `Ψ(ξ,y) = M_ξ ψ_y`, points in Ĝ with Haar weight `1/|G|`.
    CharacterInvariant,
}

impl SystemKind {
    /// Haar weight of one point of the point axis.
    pub(crate) fn point_weight(self, group: &FiniteLcaGroup) -> f64 {
        match self {
            SystemKind::TranslationInvariant => 1.0,
            SystemKind::CharacterInvariant => 1.0 / group.cardinality() as f64,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SystemKind::TranslationInvariant => "translation-invariant",
            SystemKind::CharacterInvariant => "character-invariant",
        }
    }
}

/// A window family together with its invariance kind.
#[derive(Debug, Clone)]
pub struct NsgSystem {
    kind: SystemKind,
    family: WindowFamily,
}

impl NsgSystem {
    pub fn new(kind: SystemKind, family: WindowFamily) -> Self {
        Self { kind, family }
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn family(&self) -> &WindowFamily {
        &self.family
    }

    pub fn group(&self) -> &FiniteLcaGroup {
        self.family.group()
    }
}

/// An analysis/synthesis pair `(Ψ, Φ)` over one shared measure space.
#[derive(Debug, Clone)]
pub struct PairSystem {
    kind: SystemKind,
    analysis: WindowFamily,
    synthesis: WindowFamily,
}

impl PairSystem {
    /// Both families must share group, label set and weights.
    pub fn new(kind: SystemKind, analysis: WindowFamily, synthesis: WindowFamily) -> Result<Self> {
        if !analysis.shares_index_set_with(&synthesis) {
            return Err(Error::InvalidFamily(
                "analysis and synthesis families must share group, labels and weights".into(),
            ));
        }
        Ok(Self {
            kind,
            analysis,
            synthesis,
        })
    }

    /// The self-paired system `(Ψ, Ψ)` — the frame-operator case.
    pub fn self_paired(kind: SystemKind, family: WindowFamily) -> Self {
        Self {
            kind,
            analysis: family.clone(),
            synthesis: family,
        }
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn group(&self) -> &FiniteLcaGroup {
        self.analysis.group()
    }

    pub fn analysis(&self) -> &WindowFamily {
        &self.analysis
    }

    pub fn synthesis(&self) -> &WindowFamily {
        &self.synthesis
    }

    pub fn analysis_system(&self) -> NsgSystem {
        NsgSystem::new(self.kind, self.analysis.clone())
    }

    pub fn synthesis_system(&self) -> NsgSystem {
        NsgSystem::new(self.kind, self.synthesis.clone())
    }

    /// The swapped pair `(Φ, Ψ)`, whose resolution operator is the adjoint.
    pub fn swapped(&self) -> PairSystem {
        PairSystem {
            kind: self.kind,
            analysis: self.synthesis.clone(),
            synthesis: self.analysis.clone(),
        }
    }

    /// True when analysis and synthesis windows coincide entrywise.
    pub fn is_self_paired(&self) -> bool {
        self.analysis
            .entries()
            .iter()
            .zip(self.synthesis.entries())
            .all(|(a, b)| a.window() == b.window())
    }
}

/// Dense coefficient array `|G| × |Y|`, point-major with labels fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientArray {
    group: FiniteLcaGroup,
    kind: SystemKind,
    n_labels: usize,
    values: Vec<Complex64>,
}

impl CoefficientArray {
    pub fn zeros(group: FiniteLcaGroup, kind: SystemKind, n_labels: usize) -> Self {
        let len = group.cardinality() * n_labels;
        Self {
            group,
            kind,
            n_labels,
            values: vec![Complex64::new(0.0, 0.0); len],
        }
    }

    pub fn from_values(
        group: FiniteLcaGroup,
        kind: SystemKind,
        n_labels: usize,
        values: Vec<Complex64>,
    ) -> Result<Self> {
        if values.len() != group.cardinality() * n_labels {
            return Err(Error::ShapeMismatch(format!(
                "coefficient array needs {}×{} values, got {}",
                group.cardinality(),
                n_labels,
                values.len()
            )));
        }
        Ok(Self {
            group,
            kind,
            n_labels,
            values,
        })
    }

    pub fn group(&self) -> &FiniteLcaGroup {
        &self.group
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn n_points(&self) -> usize {
        self.group.cardinality()
    }

    pub fn n_labels(&self) -> usize {
        self.n_labels
    }

    pub fn get(&self, point: usize, label: usize) -> Complex64 {
        self.values[point * self.n_labels + label]
    }

    pub fn set(&mut self, point: usize, label: usize, v: Complex64) {
        self.values[point * self.n_labels + label] = v;
    }

    /// One label's coefficients across all points, as a signal on the point axis.
    pub fn column(&self, label: usize) -> Signal {
        let side = match self.kind {
            SystemKind::TranslationInvariant => Side::Group,
            SystemKind::CharacterInvariant => Side::Dual,
        };
        Signal::from_fn(self.group.clone(), side, |p, _| self.get(p, label))
    }

    pub(crate) fn set_column(&mut self, label: usize, col: &Signal) {
        for p in 0..self.n_points() {
            self.set(p, label, col.values()[p]);
        }
    }

    /// Unweighted Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub(crate) fn matches(&self, kind: SystemKind, family: &WindowFamily) -> Result<()> {
        if self.group != *family.group() {
            return Err(Error::GroupMismatch);
        }
        if self.kind != kind {
            return Err(Error::ShapeMismatch(format!(
                "coefficient array is {}, system is {}",
                self.kind.name(),
                kind.name()
            )));
        }
        if self.n_labels != family.len() {
            return Err(Error::ShapeMismatch(format!(
                "coefficient array has {} labels, family has {}",
                self.n_labels,
                family.len()
            )));
        }
        Ok(())
    }
}
