//! Closed-form real-valued spectral windows on the real line.

use crate::error::{Error, Result};

/// A window's Fourier transform, evaluable at any real point.
///
/// All variants are real-valued and bounded on compacts. Piecewise
/// polynomials vanish outside their breakpoint span; pieces are half-open
/// `[b_i, b_{i+1})` with the last piece closed at the right end. Indicators
/// are closed at the left end, and closed or open at the right end.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectralWindow {
    PiecewisePolynomial {
        /// Strictly increasing; one more breakpoint than pieces.
        breakpoints: Vec<f64>,
        /// Ascending coefficients in the global variable: `Σ_j c_j ξ^j`.
        pieces: Vec<Vec<f64>>,
    },
    Hat {
        left: f64,
        center: f64,
        right: f64,
    },
    Gaussian {
        center: f64,
        width: f64,
    },
    Indicator {
        lo: f64,
        hi: f64,
        closed_hi: bool,
    },
}

impl SpectralWindow {
    pub fn piecewise(breakpoints: Vec<f64>, pieces: Vec<Vec<f64>>) -> Result<Self> {
        if breakpoints.len() < 2 || pieces.len() + 1 != breakpoints.len() {
            return Err(Error::InvalidWindow(format!(
                "{} breakpoints for {} pieces",
                breakpoints.len(),
                pieces.len()
            )));
        }
        if !breakpoints.iter().all(|b| b.is_finite())
            || breakpoints.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::InvalidWindow(
                "breakpoints must be finite and strictly increasing".into(),
            ));
        }
        if pieces
            .iter()
            .any(|p| p.is_empty() || p.iter().any(|c| !c.is_finite()))
        {
            return Err(Error::InvalidWindow(
                "each piece needs finite coefficients".into(),
            ));
        }
        Ok(Self::PiecewisePolynomial {
            breakpoints,
            pieces,
        })
    }

    pub fn hat(left: f64, center: f64, right: f64) -> Result<Self> {
        if !(left.is_finite() && center.is_finite() && right.is_finite())
            || !(left < center && center < right)
        {
            return Err(Error::InvalidWindow(format!(
                "hat needs left < center < right, got {left}, {center}, {right}"
            )));
        }
        Ok(Self::Hat {
            left,
            center,
            right,
        })
    }

    pub fn gaussian(center: f64, width: f64) -> Result<Self> {
        if !center.is_finite() || !(width.is_finite() && width > 0.0) {
            return Err(Error::InvalidWindow(format!(
                "gaussian needs width > 0, got {width}"
            )));
        }
        Ok(Self::Gaussian { center, width })
    }

    /// Closed indicator `χ_[lo,hi]`.
    pub fn indicator(lo: f64, hi: f64) -> Result<Self> {
        Self::indicator_with(lo, hi, true)
    }

    /// Half-open indicator `χ_[lo,hi)`.
    pub fn indicator_half_open(lo: f64, hi: f64) -> Result<Self> {
        Self::indicator_with(lo, hi, false)
    }

    fn indicator_with(lo: f64, hi: f64, closed_hi: bool) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidWindow(format!(
                "indicator needs lo < hi, got {lo}, {hi}"
            )));
        }
        Ok(Self::Indicator { lo, hi, closed_hi })
    }

    /// The window `(1−ξ)·χ_[−1,1](ξ)` of the worked warped-symbol example.
    pub fn one_minus_xi_on_unit_interval() -> Self {
        Self::PiecewisePolynomial {
            breakpoints: vec![-1.0, 1.0],
            pieces: vec![vec![1.0, -1.0]],
        }
    }

    /// The window `(1+ξ)·χ_[−1,1](ξ)` of the worked warped-symbol example.
    pub fn one_plus_xi_on_unit_interval() -> Self {
        Self::PiecewisePolynomial {
            breakpoints: vec![-1.0, 1.0],
            pieces: vec![vec![1.0, 1.0]],
        }
    }

    pub fn eval(&self, xi: f64) -> f64 {
        match self {
            Self::PiecewisePolynomial {
                breakpoints,
                pieces,
            } => {
                let first = breakpoints[0];
                let last = *breakpoints.last().expect("validated nonempty");
                if xi < first || xi > last {
                    return 0.0;
                }
                // index of the piece whose interval contains ξ; ξ = last falls
                // into the final piece
                let mut idx = match breakpoints.binary_search_by(|b| b.partial_cmp(&xi).unwrap()) {
                    Ok(i) => i,
                    Err(i) => i - 1,
                };
                if idx >= pieces.len() {
                    idx = pieces.len() - 1;
                }
                horner(&pieces[idx], xi)
            }
            Self::Hat {
                left,
                center,
                right,
            } => {
                if xi <= *left || xi >= *right {
                    0.0
                } else if xi <= *center {
                    (xi - left) / (center - left)
                } else {
                    (right - xi) / (right - center)
                }
            }
            Self::Gaussian { center, width } => {
                let t = (xi - center) / width;
                (-0.5 * t * t).exp()
            }
            Self::Indicator { lo, hi, closed_hi } => {
                let inside = if *closed_hi {
                    xi >= *lo && xi <= *hi
                } else {
                    xi >= *lo && xi < *hi
                };
                if inside {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Interval outside which the window vanishes (effective for Gaussians).
    pub fn support(&self) -> (f64, f64) {
        match self {
            Self::PiecewisePolynomial { breakpoints, .. } => (
                breakpoints[0],
                *breakpoints.last().expect("validated nonempty"),
            ),
            Self::Hat { left, right, .. } => (*left, *right),
            // exp(-0.5·40²) underflows to zero in f64
            Self::Gaussian { center, width } => (center - 40.0 * width, center + 40.0 * width),
            Self::Indicator { lo, hi, .. } => (*lo, *hi),
        }
    }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}
