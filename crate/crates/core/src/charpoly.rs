//! Exact characteristic polynomials.
//!
//! The integer path reduces modulo word-size primes, computes each
//! characteristic polynomial through a Hessenberg reduction and lifts by
//! CRT once the product of primes clears a coefficient bound. The
//! Faddeev–LeVerrier recursion is generic over any [`DivInt`] ring and
//! serves both as the small-dimension reference and as the exact path over
//! `Q(ω)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modp::{self, CrtAccumulator, ModP};
use crate::poly::Poly;
use crate::scalar::DivInt;

/// Largest dimension for which the direct Faddeev–LeVerrier path is offered
/// on integer matrices.
pub const FADDEEV_LEVERRIER_MAX_DIM: usize = 64;

/// `det(xI - A)` by the Faddeev–LeVerrier recursion.
pub fn charpoly_faddeev_leverrier<R: DivInt>(a: &Matrix<R>) -> Result<Poly<R>> {
    let n = a.ensure_square()?;
    let mut coeffs = vec![R::zero(); n + 1];
    coeffs[n] = R::one();
    let mut m = Matrix::<R>::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = a.mul(&m)?;
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            next[(i, i)] = next[(i, i)].clone() + c.clone();
        }
        let tr = a.trace_of_product(&next)?;
        coeffs[n - k] = -tr.div_int(k as u64);
        m = next;
    }
    Ok(Poly::new(coeffs))
}

/// `log2` of the largest `C(dim, j) * rho^j`, which bounds every
/// coefficient of a degree-`dim` characteristic polynomial whose
/// eigenvalues all have modulus at most `rho`.
pub fn coefficient_bound_bits(dim: usize, rho: f64) -> f64 {
    let log_rho = rho.max(f64::MIN_POSITIVE).log2();
    let mut log_binom = 0.0f64;
    let mut best = 0.0f64;
    for j in 1..=dim {
        log_binom += ((dim - j + 1) as f64).log2() - (j as f64).log2();
        best = best.max(log_binom + j as f64 * log_rho);
    }
    best + 1.0
}

/// Rigorous upper bound on the spectral radius of an integer matrix.
///
/// Uses the smaller of the absolute row and column sum norms; for
/// entrywise nonnegative input the Collatz–Wielandt bound
/// `max_i (Av)_i / v_i` at an approximate Perron vector is usually far
/// tighter and is taken when smaller.
pub fn spectral_radius_bound(a: &Matrix<BigInt>) -> Result<f64> {
    let n = a.ensure_square()?;
    let af = a.map(|v| v.to_f64().unwrap_or(f64::INFINITY));
    let row = (0..n).map(|i| af.row(i).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    let col = (0..n)
        .map(|j| (0..n).map(|i| af[(i, j)].abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut bound = row.min(col);
    if n > 0 && af.data().iter().all(|&x| x >= 0.0) {
        let mut v = vec![1.0f64; n];
        for _ in 0..200 {
            let w = af.mul_vec(&v)?;
            let scale = w.iter().cloned().fold(0.0, f64::max);
            if scale == 0.0 {
                break;
            }
            // (A + I) v keeps the iteration aperiodic
            v = w.iter().zip(&v).map(|(x, y)| x / scale + y / (1.0 + scale)).collect();
            let top = v.iter().cloned().fold(0.0, f64::max);
            v.iter_mut().for_each(|x| *x /= top);
        }
        let floor = 1e-6;
        let v: Vec<f64> = v.iter().map(|x| x + floor).collect();
        let w = af.mul_vec(&v)?;
        let cw = w.iter().zip(&v).map(|(x, y)| x / y).fold(0.0, f64::max);
        bound = bound.min(cw * (1.0 + 1e-9) + 1e-9);
    }
    Ok(bound)
}

/// Characteristic polynomial of an integer matrix via modular Hessenberg
/// reduction and CRT. One extra prime beyond the bound is used as a guard.
pub fn charpoly_exact(a: &Matrix<BigInt>) -> Result<Poly<BigInt>> {
    let n = a.ensure_square()?;
    let bits = coefficient_bound_bits(n, spectral_radius_bound(a)?) + 1.0;
    let mut crt = CrtAccumulator::new(n + 1);
    let mut guard_used = false;
    for p in modp::large_primes() {
        if crt.modulus_bits() as f64 > bits {
            if guard_used {
                break;
            }
            guard_used = true;
        }
        let f = ModP::new(p)?;
        let flat: Vec<u64> = a.data().iter().map(|v| f.from_bigint(v)).collect();
        crt.push(&f, &modp::charpoly_hessenberg(&f, &flat, n));
    }
    Ok(Poly::new(crt.finish()))
}

/// Direct Faddeev–LeVerrier path over the integers, limited to
/// [`FADDEEV_LEVERRIER_MAX_DIM`].
pub fn charpoly_direct(a: &Matrix<BigInt>) -> Result<Poly<BigInt>> {
    let n = a.ensure_square()?;
    if n > FADDEEV_LEVERRIER_MAX_DIM {
        return Err(Error::CapExceeded(format!(
            "direct charpoly limited to dimension {FADDEEV_LEVERRIER_MAX_DIM}, got {n}"
        )));
    }
    charpoly_faddeev_leverrier(a)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(a: &Matrix<BigInt>) -> Result<BigInt> {
    let n = a.ensure_square()?;
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap(k, piv);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// `det(tI - A)` for an integer `t`.
pub fn det_shifted(a: &Matrix<BigInt>, t: i64) -> Result<BigInt> {
    let n = a.ensure_square()?;
    let shifted = Matrix::from_fn(n, n, |i, j| {
        let e = -a[(i, j)].clone();
        if i == j {
            e + BigInt::from(t)
        } else {
            e
        }
    });
    det_bareiss(&shifted)
}

/// Integer matrix from nested `i64` rows.
pub fn int_matrix(rows: &[Vec<i64>]) -> Result<Matrix<BigInt>> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    fn t_orb_c7() -> Matrix<BigInt> {
        int_matrix(&[
            vec![1, 7, 7, 7, 7],
            vec![1, 4, 2, 1, 0],
            vec![1, 2, 0, 0, 0],
            vec![1, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn orbit_matrix_charpoly() {
        let expected = IntPoly::from_i64s(&[0, 42, 47, -29, -5, 1]);
        assert_eq!(charpoly_exact(&t_orb_c7()).unwrap(), expected);
        assert_eq!(charpoly_direct(&t_orb_c7()).unwrap(), expected);
    }

    #[test]
    fn identity_charpoly() {
        let id = Matrix::<BigInt>::identity(3);
        let expected = IntPoly::from_i64s(&[-1, 1]).pow(3);
        assert_eq!(charpoly_exact(&id).unwrap(), expected);
        assert_eq!(charpoly_direct(&id).unwrap(), expected);
    }

    #[test]
    fn non_square_rejected() {
        let a = int_matrix(&[vec![1, 2]]).unwrap();
        assert!(charpoly_exact(&a).is_err());
        assert!(charpoly_faddeev_leverrier(&a).is_err());
    }

    #[test]
    fn bareiss_matches_charpoly_values() {
        let a = t_orb_c7();
        let cp = charpoly_exact(&a).unwrap();
        for t in [-3, 0, 2, 11] {
            assert_eq!(det_shifted(&a, t).unwrap(), cp.eval_i64(t));
        }
    }

    #[test]
    fn bound_for_signed_matrix_is_norm_based() {
        let a = int_matrix(&[vec![0, -3], vec![2, 0]]).unwrap();
        assert_eq!(spectral_radius_bound(&a).unwrap(), 3.0);
        let b = t_orb_c7();
        let bound = spectral_radius_bound(&b).unwrap();
        assert!(bound >= 7.8457 && bound < 8.0, "{bound}");
    }
}
