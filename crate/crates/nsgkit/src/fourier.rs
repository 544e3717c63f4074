//! Fourier transforms on finite abelian groups, and convolution.
//!
//! Two routes compute the same transform:
//!
//! * [`fourier_direct`] / [`inverse_fourier_direct`] — the `O(|G|²)` character
//!   sums, taken as the reference definition;
//! * [`fourier`] / [`inverse_fourier`] — a mixed-radix fast path that applies a
//!   length-`N_i` FFT along each factor of the product group (row-column
//!   decomposition). The fast path is validated against the reference in the
//!   test suite and is what the rest of the crate calls.
//!
//! Conventions: `f̂(k) = Σ_x conj(χ_k(x)) f(x)` maps group-side to dual-side;
//! the inverse carries the dual Haar weight `1/|G|`. With these choices
//! `Σ_x |f(x)|² = (1/|G|) Σ_k |f̂(k)|²` and `(f∗g)^ = f̂·ĝ` hold exactly.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::Result;
use crate::signal::{Side, Signal};

/// Fast transform, group side → dual side.
pub fn fourier(f: &Signal) -> Result<Signal> {
    f.require_side(Side::Group)?;
    let mut out = f.clone().with_side(Side::Dual);
    transform_axes(
        out.values_mut(),
        f.group().orders(),
        rustfft::FftDirection::Forward,
    );
    Ok(out)
}

/// Fast inverse transform, dual side → group side.
pub fn inverse_fourier(big_f: &Signal) -> Result<Signal> {
    big_f.require_side(Side::Dual)?;
    let mut out = big_f.clone().with_side(Side::Group);
    transform_axes(
        out.values_mut(),
        big_f.group().orders(),
        rustfft::FftDirection::Inverse,
    );
    let scale = 1.0 / big_f.group().cardinality() as f64;
    for v in out.values_mut() {
        *v *= scale;
    }
    Ok(out)
}

/// Reference transform by direct character summation.
pub fn fourier_direct(f: &Signal) -> Result<Signal> {
    f.require_side(Side::Group)?;
    let g = f.group();
    let mut out = Signal::zeros(g.clone(), Side::Dual);
    for (ki, k) in g.elements().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (xi, x) in g.elements().enumerate() {
            acc += g.character_value(&k, &x)?.conj() * f.values()[xi];
        }
        out.values_mut()[ki] = acc;
    }
    Ok(out)
}

/// Reference inverse by direct character summation.
pub fn inverse_fourier_direct(big_f: &Signal) -> Result<Signal> {
    big_f.require_side(Side::Dual)?;
    let g = big_f.group();
    let scale = 1.0 / g.cardinality() as f64;
    let mut out = Signal::zeros(g.clone(), Side::Group);
    for (xi, x) in g.elements().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (ki, k) in g.elements().enumerate() {
            acc += g.character_value(&k, &x)? * big_f.values()[ki];
        }
        out.values_mut()[xi] = acc * scale;
    }
    Ok(out)
}

/// Convolution `(f∗g)(x) = Σ_z f(z) g(x−z)`, computed via the Fourier route.
pub fn convolve(f: &Signal, g: &Signal) -> Result<Signal> {
    f.require_side(Side::Group)?;
    g.require_same_space(f)?;
    let fh = fourier(f)?;
    let gh = fourier(g)?;
    inverse_fourier(&fh.pointwise_mul(&gh)?)
}

/// Convolution by the direct double sum; `O(|G|²)` test oracle.
pub fn convolve_direct(f: &Signal, g: &Signal) -> Result<Signal> {
    f.require_side(Side::Group)?;
    g.require_same_space(f)?;
    let grp = f.group();
    let mut out = Signal::zeros(grp.clone(), Side::Group);
    for (xi, x) in grp.elements().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (zi, z) in grp.elements().enumerate() {
            let shift = grp.index_of(&grp.sub(&x, &z)?)?;
            acc += f.values()[zi] * g.values()[shift];
        }
        out.values_mut()[xi] = acc;
    }
    Ok(out)
}

/// In-place mixed-radix transform along every axis of the row-major layout.
fn transform_axes(values: &mut [Complex64], orders: &[u32], direction: rustfft::FftDirection) {
    let mut planner = FftPlanner::<f64>::new();
    let total = values.len();
    let mut stride = total;
    for &n in orders {
        let n = n as usize;
        stride /= n;
        if n == 1 {
            continue;
        }
        let fft = planner.plan_fft(n, direction);
        let mut line = vec![Complex64::new(0.0, 0.0); n];
        let block = n * stride;
        for base in (0..total).step_by(block) {
            for offset in 0..stride {
                for (j, slot) in line.iter_mut().enumerate() {
                    *slot = values[base + offset + j * stride];
                }
                fft.process(&mut line);
                for (j, slot) in line.iter().enumerate() {
                    values[base + offset + j * stride] = *slot;
                }
            }
        }
    }
}
