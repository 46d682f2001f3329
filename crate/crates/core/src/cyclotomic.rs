//! Arithmetic in the cyclotomic field `Q(ω)`, `ω = exp(2πi/n)`, for an odd
//! prime `n`, in the power basis `1, ω, …, ω^{n-2}` modulo
//! `Φ_n = 1 + x + … + x^{n-1}`.
//!
//! Elements carry their order `n`. Order `0` marks a plain rational, which
//! mixes freely with elements of any order; this is what lets `zero()` and
//! `one()` exist without knowing `n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modp::{self, CrtAccumulator, ModP};
use crate::poly::Poly;
use crate::scalar::{rat, DivInt};

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    fn build(order: u32, mut coords: Vec<BigRational>) -> Self {
        while coords.last().is_some_and(Zero::is_zero) {
            coords.pop();
        }
        Cyclotomic { order, coords }
    }

    fn check_order(order: u32) -> Result<()> {
        if order < 3 || !modp::is_prime(order as u64) {
            return Err(Error::Unsupported(format!(
                "cyclotomic arithmetic needs an odd prime order, got {order}"
            )));
        }
        Ok(())
    }

    /// Element from power-basis coordinates (at most `n - 1` of them).
    pub fn from_coords(order: u32, coords: Vec<BigRational>) -> Result<Self> {
        Self::check_order(order)?;
        if coords.len() > order as usize - 1 {
            return Err(Error::InvalidArgument("too many power-basis coordinates".into()));
        }
        Ok(Self::build(order, coords))
    }

    pub fn rational(q: BigRational) -> Self {
        Self::build(0, vec![q])
    }

    pub fn integer(v: i64) -> Self {
        Self::rational(rat(v))
    }

    /// `Σ_ℓ a_ℓ ω^ℓ` for `ℓ = 0..n-1`, reduced into the power basis.
    pub fn from_cyclic(order: u32, a: &[i64]) -> Result<Self> {
        Self::check_order(order)?;
        let n = order as usize;
        let mut v = vec![0i64; n];
        for (l, &x) in a.iter().enumerate() {
            v[l % n] += x;
        }
        Ok(Self::from_cyclic_vec(order, v.into_iter().map(rat).collect()))
    }

    /// Reduces a length-`n` vector of coefficients of `1, ω, …, ω^{n-1}`.
    fn from_cyclic_vec(order: u32, mut v: Vec<BigRational>) -> Self {
        let n = order as usize;
        debug_assert_eq!(v.len(), n);
        let top = v.pop().unwrap();
        if !top.is_zero() {
            for c in v.iter_mut() {
                *c -= &top;
            }
        }
        Self::build(order, v)
    }

    /// `ω^k`.
    pub fn omega_pow(order: u32, k: i64) -> Result<Self> {
        Self::check_order(order)?;
        let n = order as i64;
        let mut a = vec![0i64; order as usize];
        a[k.rem_euclid(n) as usize] = 1;
        Self::from_cyclic(order, &a)
    }

    /// `μ_k = 1 + ω^k + ω^{-k} = 1 + 2cos(2πk/n)`.
    pub fn mu(order: u32, k: i64) -> Result<Self> {
        let n = order as i64;
        let mut a = vec![0i64; order as usize];
        a[0] += 1;
        a[k.rem_euclid(n) as usize] += 1;
        a[(-k).rem_euclid(n) as usize] += 1;
        Self::from_cyclic(order, &a)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> BigRational {
        self.coords.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    fn common_order(&self, other: &Self) -> Result<u32> {
        match (self.order, other.order) {
            (0, o) | (o, 0) => Ok(o),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::Arithmetic(format!(
                "mismatched cyclotomic orders {a} and {b}"
            ))),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let order = self.common_order(other)?;
        let len = self.coords.len().max(other.coords.len());
        Ok(Self::build(order, (0..len).map(|i| self.coord(i) + other.coord(i)).collect()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let order = self.common_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::build(order, Vec::new()));
        }
        if self.coords.len() == 1 || other.coords.len() == 1 {
            let (s, e) = if self.coords.len() == 1 { (self, other) } else { (other, self) };
            let c = &s.coords[0];
            return Ok(Self::build(order, e.coords.iter().map(|x| x * c).collect()));
        }
        let n = order as usize;
        if self.coords.iter().chain(&other.coords).all(BigRational::is_integer) {
            // Integer coordinates: skip the per-product gcd normalization.
            let mut v = vec![BigInt::zero(); n];
            for (i, a) in self.coords.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.coords.iter().enumerate() {
                    if !b.is_zero() {
                        v[(i + j) % n] += a.numer() * b.numer();
                    }
                }
            }
            let top = v.pop().unwrap_or_default();
            return Ok(Self::build(order, v.into_iter().map(|c| BigRational::from_integer(c - &top)).collect()));
        }
        let mut v = vec![BigRational::zero(); n];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    v[(i + j) % n] += a * b;
                }
            }
        }
        Ok(Self::from_cyclic_vec(order, v))
    }

    /// The automorphism `ω ↦ ω^a`, `gcd(a, n) = 1`.
    pub fn galois(&self, a: i64) -> Self {
        if self.order == 0 || self.coords.len() <= 1 {
            return self.clone();
        }
        let n = self.order as i64;
        let mut v = vec![BigRational::zero(); self.order as usize];
        for (i, c) in self.coords.iter().enumerate() {
            v[(a * i as i64).rem_euclid(n) as usize] += c;
        }
        Self::from_cyclic_vec(self.order, v)
    }

    /// Complex conjugation `ω ↦ ω^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Fixed by conjugation, i.e. a member of `Q(cos(2π/n))`.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coords.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }

    /// Field trace down to `Q`: `Σ_a σ_a(self)`.
    pub fn trace(&self) -> BigRational {
        if self.order == 0 {
            return self.coord(0);
        }
        let n = self.order as i64;
        let rest: BigRational = self.coords.iter().skip(1).cloned().sum();
        self.coord(0) * rat(n - 1) - rest
    }

    /// Trace from `K = Q(cos(2π/n))` down to `Q`, for real elements.
    pub fn real_trace(&self) -> Option<BigRational> {
        self.is_real().then(|| self.trace() / rat(2))
    }

    pub fn to_complex(&self) -> Complex<f64> {
        if self.order == 0 {
            return Complex::new(self.coord(0).to_f64().unwrap_or(f64::NAN), 0.0);
        }
        let n = self.order as f64;
        self.coords.iter().enumerate().fold(Complex::new(0.0, 0.0), |acc, (i, c)| {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / n;
            acc + Complex::from_polar(1.0, theta) * c.to_f64().unwrap_or(f64::NAN)
        })
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub(crate) fn eval_mod(&self, f: &ModP, root: u64) -> Result<u64> {
        let mut acc = 0u64;
        let mut pw = 1u64;
        for c in &self.coords {
            if !c.is_integer() {
                return Err(Error::Unsupported("modular evaluation of a non-integral element".into()));
            }
            acc = f.add(acc, f.mul(f.from_bigint(&c.to_integer()), pw));
            pw = f.mul(pw, root);
        }
        Ok(acc)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.coords.len() > 1 && other.coords.len() > 1 && self.order != other.order {
            return false;
        }
        self.coords == other.coords
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::build(0, Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::integer(1)
    }
}

impl Add for Cyclotomic {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("cyclotomic addition")
    }
}

impl Sub for Cyclotomic {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_add(&-rhs).expect("cyclotomic subtraction")
    }
}

impl Mul for Cyclotomic {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("cyclotomic multiplication")
    }
}

impl Neg for Cyclotomic {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic { order: self.order, coords: self.coords.into_iter().map(|c| -c).collect() }
    }
}

impl DivInt for Cyclotomic {
    fn div_int(&self, k: u64) -> Self {
        let d = BigRational::from_integer(BigInt::from(k));
        Self::build(self.order, self.coords.iter().map(|c| c / &d).collect())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})w")?,
                _ => write!(f, "({c})w^{i}")?,
            }
        }
        Ok(())
    }
}

fn common_matrix_order(m: &Matrix<Cyclotomic>) -> Result<u32> {
    let mut order = 0;
    for e in m.data() {
        if e.order != 0 && e.coords.len() > 1 {
            if order != 0 && order != e.order {
                return Err(Error::Arithmetic("matrix mixes cyclotomic orders".into()));
            }
            order = e.order;
        }
        if e.order != 0 && order == 0 {
            order = e.order;
        }
    }
    Ok(order)
}

/// Characteristic polynomial over `Q(ω)` by evaluation at the `n - 1`
/// primitive roots of unity modulo primes `p ≡ 1 (mod n)`, recovering the
/// power-basis coordinates from the conjugate values through the field
/// trace and combining primes by CRT.
///
/// Entries must be integral (members of `Z[ω]`). The number of primes is
/// fixed up front from a bound on every conjugate of every coefficient.
pub fn charpoly_cyclotomic_modular(m: &Matrix<Cyclotomic>) -> Result<Poly<Cyclotomic>> {
    let dim = m.ensure_square()?;
    let order = common_matrix_order(m)?;
    if order == 0 {
        return Err(Error::Unsupported("matrix has no cyclotomic order".into()));
    }
    if !m.data().iter().all(Cyclotomic::is_integral) {
        return Err(Error::Unsupported("modular charpoly needs integral entries".into()));
    }
    let n = order as usize;
    // Row bound on |σ(entry)| over all embeddings.
    let row_bound = (0..dim)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|e| e.coords.iter().map(|c| c.to_integer().magnitude().to_f64().unwrap()).sum::<f64>())
                .sum::<f64>()
        })
        .fold(0.0f64, f64::max);
    let bits = crate::charpoly::coefficient_bound_bits(dim, row_bound) + 3.0;

    let width = (dim + 1) * (n - 1);
    let mut crt = CrtAccumulator::new(width);
    for p in modp::primes_one_mod(n as u64) {
        if crt.modulus_bits() as f64 > bits {
            break;
        }
        let f = ModP::new(p)?;
        let g = f.root_of_unity(n as u64)?;
        // values[a-1][j]: coefficient j of the charpoly under ω ↦ g^a
        let mut values = Vec::with_capacity(n - 1);
        for a in 1..n as u64 {
            let r = f.pow(g, a);
            let mut flat = Vec::with_capacity(dim * dim);
            for e in m.data() {
                flat.push(e.eval_mod(&f, r)?);
            }
            values.push(modp::charpoly_hessenberg(&f, &flat, dim));
        }
        let n_inv = f.inv(n as u64 % p);
        let mut residues = vec![0u64; width];
        for j in 0..=dim {
            for i in 0..n - 1 {
                let mut acc = 0u64;
                for (a0, vals) in values.iter().enumerate() {
                    let a = a0 as u64 + 1;
                    let r_a = f.pow(g, a);
                    let r_neg = f.pow(g, ((n as u64 - a) * i as u64) % n as u64);
                    acc = f.add(acc, f.mul(vals[j], f.sub(r_neg, r_a)));
                }
                residues[j * (n - 1) + i] = f.mul(acc, n_inv);
            }
        }
        crt.push(&f, &residues);
    }
    let flat = crt.finish();
    let coeffs = flat
        .chunks(n - 1)
        .map(|c| Cyclotomic::build(order, c.iter().cloned().map(BigRational::from_integer).collect()))
        .collect();
    Ok(Poly::new(coeffs))
}
