//! Finite abelian groups `Z/N_1 × … × Z/N_d` and their characters.
//!
//! Elements are residue tuples; the flat index is row-major over the orders,
//! so index `i` ↔ residues obtained by repeated division from the right. The
//! group is written additively and is canonically self-dual: a `GroupElement`
//! doubles as a character index, with
//! `χ_k(x) = exp(2πi Σ_i k_i x_i / N_i)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A product of cyclic groups, `Z/N_1 × … × Z/N_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteLcaGroup {
    orders: Vec<u32>,
    cardinality: usize,
}

impl FiniteLcaGroup {
    /// Builds the product group with the given cyclic orders.
    pub fn new(orders: &[u32]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidGroup("order list is empty".into()));
        }
        let mut cardinality: usize = 1;
        for &n in orders {
            if n == 0 {
                return Err(Error::InvalidGroup("every order must be ≥ 1".into()));
            }
            cardinality = cardinality
                .checked_mul(n as usize)
                .ok_or_else(|| Error::InvalidGroup("cardinality overflows usize".into()))?;
        }
        Ok(Self {
            orders: orders.to_vec(),
            cardinality,
        })
    }

    /// The cyclic group `Z/n`.
    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of factors `d`.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// `|G| = N_1 ⋯ N_d`.
    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    /// The additive identity.
    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.orders.len()],
        }
    }

    /// Builds an element from (possibly unreduced, possibly negative) residues.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement> {
        if residues.len() != self.orders.len() {
            return Err(Error::InvalidElement(format!(
                "got {} residues for a rank-{} group",
                residues.len(),
                self.orders.len()
            )));
        }
        let reduced = residues
            .iter()
            .zip(&self.orders)
            .map(|(&r, &n)| r.rem_euclid(n as i64) as u32)
            .collect();
        Ok(GroupElement { residues: reduced })
    }

    /// Element at a row-major flat index.
    pub fn element_from_index(&self, index: usize) -> Result<GroupElement> {
        if index >= self.cardinality {
            return Err(Error::InvalidElement(format!(
                "flat index {index} out of range for |G| = {}",
                self.cardinality
            )));
        }
        let mut residues = vec![0u32; self.orders.len()];
        let mut rest = index;
        for (i, &n) in self.orders.iter().enumerate().rev() {
            residues[i] = (rest % n as usize) as u32;
            rest /= n as usize;
        }
        Ok(GroupElement { residues })
    }

    /// Row-major flat index of an element.
    pub fn index_of(&self, el: &GroupElement) -> Result<usize> {
        self.check(el)?;
        let mut index = 0usize;
        for (&r, &n) in el.residues.iter().zip(&self.orders) {
            index = index * n as usize + r as usize;
        }
        Ok(index)
    }

    /// Iterates over all elements in flat-index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.cardinality).map(move |i| self.element_from_index(i).expect("index in range"))
    }

    /// Componentwise addition mod the orders.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.orders)
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect();
        Ok(GroupElement { residues })
    }

    /// Additive inverse.
    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let residues = a
            .residues
            .iter()
            .zip(&self.orders)
            .map(|(&x, &n)| if x == 0 { 0 } else { n - x })
            .collect();
        Ok(GroupElement { residues })
    }

    /// `a - b`.
    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// Character value `χ_k(x) = ∏_i exp(2πi k_i x_i / N_i)`, a unit complex number.
    ///
    /// The per-factor product `k_i·x_i` is reduced mod `N_i` before the phase is
    /// accumulated, so full periods contribute exactly zero phase.
    pub fn character_value(&self, k: &GroupElement, x: &GroupElement) -> Result<Complex64> {
        self.check(k)?;
        self.check(x)?;
        let mut turns = 0.0f64;
        for ((&ki, &xi), &n) in k.residues.iter().zip(&x.residues).zip(&self.orders) {
            let t = (ki as u64 * xi as u64) % n as u64;
            turns += t as f64 / n as f64;
        }
        let angle = std::f64::consts::TAU * turns;
        Ok(Complex64::new(angle.cos(), angle.sin()))
    }

    fn check(&self, el: &GroupElement) -> Result<()> {
        if el.residues.len() != self.orders.len()
            || el.residues.iter().zip(&self.orders).any(|(&r, &n)| r >= n)
        {
            return Err(Error::InvalidElement(format!(
                "element {:?} does not belong to Z/{:?}",
                el.residues, self.orders
            )));
        }
        Ok(())
    }
}

/// A residue tuple; also used as a character index via self-duality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    residues: Vec<u32>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.residues
    }
}
