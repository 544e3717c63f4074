//! Quadrature rules: composite trapezoid grids and adaptive Simpson.

use crate::error::{Error, Result};

/// Recursion cap for [`adaptive_simpson`].
pub const SIMPSON_MAX_DEPTH: u32 = 40;

/// A uniform trapezoid grid on `[omega_min, omega_max]`.
///
/// Node `i` sits at `omega_min + i·h` with `h = span/(count−1)`; endpoint
/// weights are `h/2`, interior weights `h`, so the weights sum to the span.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    omega_min: f64,
    omega_max: f64,
    count: usize,
}

impl QuadratureGrid {
    pub fn new(omega_min: f64, omega_max: f64, count: usize) -> Result<Self> {
        if !(omega_min.is_finite() && omega_max.is_finite()) || omega_min >= omega_max {
            return Err(Error::InvalidGrid(format!(
                "need omega_min < omega_max, got [{omega_min}, {omega_max}]"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 nodes, got {count}"
            )));
        }
        Ok(Self {
            omega_min,
            omega_max,
            count,
        })
    }

    pub fn omega_min(&self) -> f64 {
        self.omega_min
    }

    pub fn omega_max(&self) -> f64 {
        self.omega_max
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn span(&self) -> f64 {
        self.omega_max - self.omega_min
    }

    pub fn step(&self) -> f64 {
        self.span() / (self.count - 1) as f64
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.step();
        let last = self.count - 1;
        (0..self.count).map(move |i| {
            if i == last {
                self.omega_max
            } else {
                self.omega_min + i as f64 * h
            }
        })
    }

    /// Composite trapezoid value of `f` over the grid.
    pub fn trapezoid(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        let h = self.step();
        let last = self.count - 1;
        let mut acc = 0.0;
        for (i, x) in self.nodes().enumerate() {
            let w = if i == 0 || i == last { 0.5 * h } else { h };
            acc += w * f(x);
        }
        acc
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `tol`, with recursion capped at [`SIMPSON_MAX_DEPTH`] (the current
/// Richardson estimate is returned when the cap is hit).
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fb = f(b);
    let fm = f(m);
    let whole = simpson_rule(a, b, fa, fm, fb);
    simpson_recurse(f, a, b, fa, fm, fb, whole, tol, SIMPSON_MAX_DEPTH)
}

fn simpson_rule(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_rule(a, m, fa, flm, fm);
    let right = simpson_rule(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn grid_validation() {
        assert!(QuadratureGrid::new(0.0, 1.0, 1).is_err());
        assert!(QuadratureGrid::new(1.0, 1.0, 10).is_err());
        assert!(QuadratureGrid::new(2.0, 1.0, 10).is_err());
        assert!(QuadratureGrid::new(f64::NEG_INFINITY, 1.0, 10).is_err());
        assert!(QuadratureGrid::new(0.0, 1.0, 2).is_ok());
    }

    #[test]
    fn weights_sum_to_the_span() {
        let grid = QuadratureGrid::new(-3.0, 5.0, 17).unwrap();
        assert_abs_diff_eq!(grid.trapezoid(|_| 1.0), 8.0, epsilon = 1e-13);
        assert_eq!(grid.nodes().count(), 17);
        let nodes: Vec<f64> = grid.nodes().collect();
        assert_eq!(nodes[0], -3.0);
        assert_eq!(*nodes.last().unwrap(), 5.0);
    }

    #[test]
    fn trapezoid_integrates_linear_functions_exactly() {
        let grid = QuadratureGrid::new(0.0, 2.0, 5).unwrap();
        assert_abs_diff_eq!(grid.trapezoid(|x| 3.0 * x + 1.0), 8.0, epsilon = 1e-13);
    }

    #[test]
    fn adaptive_simpson_is_exact_on_cubics() {
        let val = adaptive_simpson(&|x| x * x * x - 2.0 * x, 0.0, 2.0, 1e-12);
        assert_abs_diff_eq!(val, 0.0, epsilon = 1e-12);
        let quad = adaptive_simpson(&|x| x * x, 0.0, 1.0, 1e-12);
        assert_abs_diff_eq!(quad, 1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn adaptive_simpson_hits_log_two() {
        let val = adaptive_simpson(&|x| 1.0 / x, 1.0, 2.0, 1e-10);
        assert_abs_diff_eq!(val, std::f64::consts::LN_2, epsilon = 1e-9);
    }

    #[test]
    fn adaptive_simpson_on_oscillatory_integrand() {
        let val = adaptive_simpson(&|x| x.sin(), 0.0, std::f64::consts::PI, 1e-10);
        assert_abs_diff_eq!(val, 2.0, epsilon = 1e-9);
    }

    #[test]
    fn empty_interval_integrates_to_zero() {
        assert_eq!(adaptive_simpson(&|x| x, 1.0, 1.0, 1e-9), 0.0);
        assert_eq!(adaptive_simpson(&|x| x, 2.0, 1.0, 1e-9), 0.0);
    }
}
