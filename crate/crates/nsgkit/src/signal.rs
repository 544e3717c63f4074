//! Complex signals over a finite group or its dual.
//!
//! A [`Signal`] is a complex vector indexed by the flat element order of its
//! group, tagged with the side it lives on. Linear operations preserve the
//! side; Fourier transforms flip it. Inner products are the raw pairing
//! `⟨f,g⟩ = Σ_x f(x) conj(g(x))` on either side — the dual Haar weight `1/|G|`
//! appears explicitly in Parseval-type identities, never implicitly here.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{FiniteLcaGroup, GroupElement};

/// Which group a signal is indexed by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Indexed by G.
    Group,
    /// Indexed by the dual group Ĝ (character indices).
    Dual,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Group => "group",
            Side::Dual => "dual",
        }
    }
}

/// A complex amplitude vector over a group (or its dual).
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    group: FiniteLcaGroup,
    side: Side,
    values: Vec<Complex64>,
}

impl Signal {
    pub fn new(group: FiniteLcaGroup, side: Side, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != group.cardinality() {
            return Err(Error::ShapeMismatch(format!(
                "signal has {} values, group cardinality is {}",
                values.len(),
                group.cardinality()
            )));
        }
        Ok(Self {
            group,
            side,
            values,
        })
    }

    pub fn zeros(group: FiniteLcaGroup, side: Side) -> Self {
        let n = group.cardinality();
        Self {
            group,
            side,
            values: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    /// Kronecker delta at `at`, on the group side.
    pub fn delta(group: FiniteLcaGroup, at: &GroupElement) -> Result<Self> {
        let idx = group.index_of(at)?;
        let mut s = Self::zeros(group, Side::Group);
        s.values[idx] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Builds a signal by evaluating `f` at every element, in flat-index order.
    pub fn from_fn(
        group: FiniteLcaGroup,
        side: Side,
        mut f: impl FnMut(usize, &GroupElement) -> Complex64,
    ) -> Self {
        let values = group
            .elements()
            .enumerate()
            .map(|(i, el)| f(i, &el))
            .collect();
        Self {
            group,
            side,
            values,
        }
    }

    pub fn group(&self) -> &FiniteLcaGroup {
        &self.group
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Re-tags the side without touching values (used by transforms).
    pub(crate) fn with_side(mut self, side: Side) -> Self {
        self.side = side;
        self
    }

    pub fn value_at(&self, el: &GroupElement) -> Result<Complex64> {
        Ok(self.values[self.group.index_of(el)?])
    }

    /// `⟨f,g⟩ = Σ_x f(x) conj(g(x))`; conjugate-linear in `g`.
    pub fn inner(&self, other: &Signal) -> Result<Complex64> {
        self.require_same_space(other)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, b) in self.values.iter().zip(&other.values) {
            acc += a * b.conj();
        }
        Ok(acc)
    }

    /// `‖f‖ = sqrt(⟨f,f⟩)`.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, c: Complex64) -> Signal {
        Signal {
            group: self.group.clone(),
            side: self.side,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Entrywise product, used for modulations and multiplier application.
    pub(crate) fn pointwise_mul(&self, other: &Signal) -> Result<Signal> {
        self.require_same_space(other)?;
        Ok(Signal {
            group: self.group.clone(),
            side: self.side,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub(crate) fn require_side(&self, side: Side) -> Result<()> {
        if self.side != side {
            return Err(Error::SideMismatch {
                expected: side.name(),
                got: self.side.name(),
            });
        }
        Ok(())
    }

    pub(crate) fn require_same_space(&self, other: &Signal) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.side != other.side {
            return Err(Error::SideMismatch {
                expected: self.side.name(),
                got: other.side.name(),
            });
        }
        Ok(())
    }
}

impl std::ops::Add for &Signal {
    type Output = Signal;
    fn add(self, rhs: &Signal) -> Signal {
        self.require_same_space(rhs)
            .expect("signal addition on mismatched spaces");
        Signal {
            group: self.group.clone(),
            side: self.side,
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &Signal {
    type Output = Signal;
    fn sub(self, rhs: &Signal) -> Signal {
        self.require_same_space(rhs)
            .expect("signal subtraction on mismatched spaces");
        Signal {
            group: self.group.clone(),
            side: self.side,
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Translation `T_z f(x) = f(x − z)` on the group side.
pub fn translate(z: &GroupElement, f: &Signal) -> Result<Signal> {
    f.require_side(Side::Group)?;
    let g = f.group();
    g.index_of(z)?;
    let mut out = Signal::zeros(g.clone(), Side::Group);
    for (i, el) in g.elements().enumerate() {
        let src = g.index_of(&g.sub(&el, z)?)?;
        out.values[i] = f.values[src];
    }
    Ok(out)
}

/// Modulation `M_k f(x) = χ_k(x) f(x)` on the group side.
pub fn modulate(k: &GroupElement, f: &Signal) -> Result<Signal> {
    f.require_side(Side::Group)?;
    let g = f.group();
    let mut out = f.clone();
    for (i, el) in g.elements().enumerate() {
        out.values[i] *= g.character_value(k, &el)?;
    }
    Ok(out)
}

/// Involution `g*(x) = conj(g(−x))`; its Fourier transform is `conj(ĝ)`.
pub fn involution(g: &Signal) -> Result<Signal> {
    g.require_side(Side::Group)?;
    let grp = g.group();
    let mut out = Signal::zeros(grp.clone(), Side::Group);
    for (i, el) in grp.elements().enumerate() {
        let src = grp.index_of(&grp.neg(&el)?)?;
        out.values[i] = g.values[src].conj();
    }
    Ok(out)
}

/// Translation on the dual side (`T_k F(ξ) = F(ξ − k)`), used by duality checks.
pub fn translate_dual(k: &GroupElement, big_f: &Signal) -> Result<Signal> {
    big_f.require_side(Side::Dual)?;
    let g = big_f.group();
    g.index_of(k)?;
    let mut out = Signal::zeros(g.clone(), Side::Dual);
    for (i, el) in g.elements().enumerate() {
        let src = g.index_of(&g.sub(&el, k)?)?;
        out.values[i] = big_f.values[src];
    }
    Ok(out)
}
