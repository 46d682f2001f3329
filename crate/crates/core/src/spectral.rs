//! Floating-point spectral data: Perron root by power iteration, orbit
//! eigenvalues and growth samples of strip counts.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Ring;
use crate::symmetry::OrbitMatrix;
use crate::transfer::TransferMatrix;
use crate::IntMatrix;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_ITERATION_CAP: usize = 100_000;
pub const DEFAULT_HORIZON: usize = 20;

pub const CAPACITY_CAVEAT: &str =
    "rho(T)^(1/n) is reported as a statistic only; it is not asserted to equal the Shannon capacity";

#[derive(Clone, Debug, PartialEq)]
pub struct PowerIteration<F> {
    pub value: F,
    /// Normalized to maximum entry one.
    pub vector: Vec<F>,
    pub iterations: usize,
}

/// Dominant eigenpair of a nonnegative matrix from the all-ones start.
/// Stops when both the eigenvalue (relative) and the max-normalized vector
/// move by at most `tol` in one step.
pub fn power_iteration<F: Float + Ring>(m: &Matrix<F>, tol: F, cap: usize) -> Result<PowerIteration<F>> {
    let dim = m.ensure_square()?;
    if dim == 0 {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    let mut v = vec![F::one(); dim];
    let mut lambda = F::zero();
    let mut change = F::infinity();
    for it in 1..=cap {
        let w = m.mul_vec(&v)?;
        let norm = w.iter().fold(F::zero(), |a, x| a.max(x.abs()));
        if norm == F::zero() {
            return Ok(PowerIteration { value: F::zero(), vector: v, iterations: it });
        }
        let next: Vec<F> = w.iter().map(|&x| x / norm).collect();
        let dv = next.iter().zip(&v).fold(F::zero(), |a, (x, y)| a.max((*x - *y).abs()));
        let dl = (norm - lambda).abs() / norm;
        change = dv.max(dl);
        lambda = norm;
        v = next;
        if change <= tol {
            return Ok(PowerIteration { value: lambda, vector: v, iterations: it });
        }
    }
    Err(Error::NoConvergence { iterations: cap, last_change: change.to_f64().unwrap_or(f64::NAN) })
}

pub fn to_float_matrix(m: &IntMatrix) -> Matrix<f64> {
    m.map(|e| e.to_f64().unwrap_or(f64::NAN))
}

/// All eigenvalues of an integer matrix, sorted by decreasing real part.
pub fn numeric_eigenvalues(m: &IntMatrix) -> Result<Vec<Complex<f64>>> {
    let dim = m.ensure_square()?;
    let dm = DMatrix::from_fn(dim, dim, |i, j| m[(i, j)].to_f64().unwrap_or(f64::NAN));
    let mut ev: Vec<Complex<f64>> = dm.complex_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    Ok(ev)
}

/// `ln x` for a positive big integer without overflowing `f64`.
pub fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `I(strip d, 1)` for `d = 1..=horizon` via the orbit counting matrix.
pub fn strip_counts(orb: &OrbitMatrix, horizon: usize) -> Result<Vec<BigInt>> {
    let mut v = vec![BigInt::one(); orb.dimension()];
    let sizes: Vec<BigInt> = orb.sizes().iter().map(|&s| BigInt::from(s)).collect();
    let mut out = Vec::with_capacity(horizon);
    for d in 1..=horizon {
        if d > 1 {
            v = orb.counts().mul_vec(&v)?;
        }
        out.push(v.iter().zip(&sizes).map(|(a, s)| a * s).sum());
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub rho_t: f64,
    pub rho_orbit: f64,
    pub iterations_t: usize,
    pub iterations_orbit: usize,
    pub perron_vector_min: f64,
    /// `(re, im)` pairs.
    pub orbit_eigenvalues: Vec<(f64, f64)>,
    pub capacity_stat: f64,
    pub capacity_caveat: &'static str,
    /// `I(strip d, 1)^{1/d}` for `d = 1..=horizon`.
    pub growth_samples: Vec<f64>,
    /// `I(strip d+1, 1) / I(strip d, 1)`.
    pub growth_ratios: Vec<f64>,
}

impl SpectralReport {
    pub fn growth_at(&self, d: usize) -> Option<f64> {
        d.checked_sub(1).and_then(|i| self.growth_samples.get(i)).copied()
    }
}

pub fn spectral_report(
    t: &TransferMatrix,
    orb: &OrbitMatrix,
    horizon: usize,
    tol: f64,
    cap: usize,
) -> Result<SpectralReport> {
    if t.states().len() != orb.sizes().iter().sum::<usize>() {
        return Err(Error::InvalidArgument("transfer and orbit matrices come from different specs".into()));
    }
    let full = power_iteration(&t.to_matrix::<f64>(), tol, cap)?;
    let reduced = power_iteration(&to_float_matrix(orb.counts()), tol, cap)?;
    let eig = numeric_eigenvalues(orb.counts())?;
    let n = t.states().n() as f64;
    let counts = strip_counts(orb, horizon)?;
    let logs: Vec<f64> = counts.iter().map(ln_big).collect();
    let growth_samples = logs.iter().enumerate().map(|(i, l)| (l / (i + 1) as f64).exp()).collect();
    let growth_ratios = logs.windows(2).map(|w| (w[1] - w[0]).exp()).collect();
    Ok(SpectralReport {
        rho_t: full.value,
        rho_orbit: reduced.value,
        iterations_t: full.iterations,
        iterations_orbit: reduced.iterations,
        perron_vector_min: full.vector.iter().copied().fold(f64::INFINITY, f64::min),
        orbit_eigenvalues: eig.iter().map(|z| (z.re, z.im)).collect(),
        capacity_stat: full.value.powf(1.0 / n),
        capacity_caveat: CAPACITY_CAVEAT,
        growth_samples,
        growth_ratios,
    })
}
