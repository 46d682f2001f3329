//! Word-size prime-field arithmetic, prime generation and Chinese
//! remaindering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`ModP`]; products of two residues fit a `u64`.
pub const MAX_MODULUS: u64 = 1 << 32;

/// Arithmetic modulo a prime `p < 2^32` with Barrett reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP {
    p: u64,
    barrett: u64,
}

impl ModP {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidArgument(format!("modulus {p} exceeds 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(ModP { p, barrett: u64::MAX / p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        let r = v.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().unwrap()
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn to_signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// An element of exact multiplicative order `n`, for prime `n` dividing `p - 1`.
    pub fn root_of_unity(&self, n: u64) -> Result<u64> {
        if n < 2 || !is_prime(n) || !(self.p - 1).is_multiple_of(n) {
            return Err(Error::InvalidArgument(format!(
                "no primitive {n}-th root of unity modulo {}",
                self.p
            )));
        }
        let e = (self.p - 1) / n;
        (2..self.p)
            .map(|g| self.pow(g, e))
            .find(|&r| r != 1)
            .ok_or_else(|| Error::Arithmetic("root of unity search failed".into()))
    }
}

fn mulmod_u128(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u128(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u128(acc, a, m);
        }
        a = mulmod_u128(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below `2^31`, descending. Products of two residues fit a
/// `u64` with room to spare.
pub fn large_primes() -> impl Iterator<Item = u64> {
    (1u64..(1 << 30)).map(|k| (1u64 << 31) - 2 * k + 1).filter(|&p| is_prime(p))
}

/// Primes `p ≡ 1 (mod n)` below `2^31`, descending.
pub fn primes_one_mod(n: u64) -> impl Iterator<Item = u64> {
    let top = ((1u64 << 31) - 1) / n;
    (1..=top).rev().map(move |k| k * n + 1).filter(|&p| is_prime(p))
}

/// The first `count` primes.
pub fn small_primes(count: usize) -> Vec<u64> {
    (2u64..).filter(|&p| is_prime(p)).take(count).collect()
}

/// Incremental Chinese remaindering of a vector of residues into
/// symmetric-range integers.
#[derive(Clone, Debug)]
pub struct CrtAccumulator {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl CrtAccumulator {
    pub fn new(len: usize) -> Self {
        CrtAccumulator { modulus: BigInt::one(), values: vec![BigInt::zero(); len] }
    }

    pub fn modulus_bits(&self) -> u64 {
        self.modulus.bits()
    }

    pub fn push(&mut self, f: &ModP, residues: &[u64]) {
        assert_eq!(residues.len(), self.values.len());
        let p = BigInt::from(f.p());
        let m_mod_p = f.from_bigint(&self.modulus);
        let m_inv = f.inv(m_mod_p);
        for (x, &r) in self.values.iter_mut().zip(residues) {
            let x_mod_p = f.from_bigint(x);
            let t = f.mul(f.sub(r, x_mod_p), m_inv);
            *x += &self.modulus * BigInt::from(t);
        }
        self.modulus *= p;
    }

    /// Values lifted to the symmetric range `(-M/2, M/2]`.
    pub fn finish(self) -> Vec<BigInt> {
        let half: BigInt = &self.modulus >> 1;
        self.values
            .into_iter()
            .map(|x| if x > half { x - &self.modulus } else { x })
            .collect()
    }
}

/// Characteristic polynomial of a dense `n x n` matrix mod `p`
/// (row-major residues), via reduction to upper Hessenberg form.
/// Returns ascending coefficients of the monic `det(xI - A)`.
pub fn charpoly_hessenberg(f: &ModP, a: &[u64], n: usize) -> Vec<u64> {
    assert_eq!(a.len(), n * n);
    let mut h = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[i * n + m - 1] != 0) else {
            continue;
        };
        if piv != m {
            for j in 0..n {
                h.swap(piv * n + j, m * n + j);
            }
            for i in 0..n {
                h.swap(i * n + piv, i * n + m);
            }
        }
        let inv = f.inv(h[m * n + m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i * n + m - 1], inv);
            if u == 0 {
                continue;
            }
            let neg_u = f.neg(u);
            // row_i -= u * row_m
            let (upper, lower) = h.split_at_mut(i * n);
            let row_m = &upper[m * n..m * n + n];
            for (x, &y) in lower[..n].iter_mut().zip(row_m) {
                if y != 0 {
                    *x = f.reduce(*x + neg_u * y);
                }
            }
            // col_m += u * col_i
            for r in 0..n {
                let y = h[r * n + i];
                if y != 0 {
                    let idx = r * n + m;
                    h[idx] = f.reduce(h[idx] + u * y);
                }
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik * (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(h[k * n + k], c));
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = f.mul(t, h[(i + 1) * n + i]);
            if t == 0 {
                break;
            }
            let coef = f.mul(h[i * n + k], t);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = f.sub(next[j], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Symmetric lift of a residue as a `BigInt`.
pub fn lift_signed(f: &ModP, a: u64) -> BigInt {
    BigInt::from(f.to_signed(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn barrett_matches_naive() {
        let f = ModP::new(2_147_483_629).unwrap();
        let p = f.p();
        for (a, b) in [(p - 1, p - 1), (123_456_789, 987_654_321), (0, 5), (1, p - 1)] {
            assert_eq!(f.mul(a, b), ((a as u128 * b as u128) % p as u128) as u64);
        }
        assert_eq!(f.mul(f.inv(12345), 12345), 1);
        assert!(ModP::new(15).is_err());
        assert!(ModP::new(1 << 40).is_err());
    }

    #[test]
    fn root_of_unity_has_order_n() {
        let p = primes_one_mod(7).next().unwrap();
        let f = ModP::new(p).unwrap();
        let r = f.root_of_unity(7).unwrap();
        assert_ne!(r, 1);
        assert_eq!(f.pow(r, 7), 1);
    }

    #[test]
    fn crt_recovers_signed_values() {
        let vals = [BigInt::from(-123_456_789_012_345_678i64), BigInt::from(42), BigInt::zero()];
        let mut acc = CrtAccumulator::new(3);
        for p in large_primes().take(3) {
            let f = ModP::new(p).unwrap();
            let res: Vec<u64> = vals.iter().map(|v| f.from_bigint(v)).collect();
            acc.push(&f, &res);
        }
        assert_eq!(acc.finish(), vals.to_vec());
    }

    #[test]
    fn hessenberg_small() {
        let f = ModP::new(1_000_003).unwrap();
        // [[2,1],[1,2]] -> x^2 - 4x + 3
        let cp = charpoly_hessenberg(&f, &[2, 1, 1, 2], 2);
        assert_eq!(cp, vec![3, f.p() - 4, 1]);
        // needs a pivot swap: first subdiagonal entry is zero
        let a = [0, 1, 0, 0, 0, 1, 1, 0, 0];
        let cp = charpoly_hessenberg(&f, &a, 3);
        assert_eq!(cp, vec![f.p() - 1, 0, 0, 1]);
    }
}
