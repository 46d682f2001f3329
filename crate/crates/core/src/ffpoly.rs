//! Polynomials over `F_p` and their complete factorization.
//!
//! Factorization runs the usual three stages: square-free decomposition,
//! distinct-degree splitting, then Cantor–Zassenhaus equal-degree splitting
//! (the trace map in characteristic 2). Splitting elements come from a
//! fixed-seed generator, so results are identical from run to run.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::modp::ModP;
use crate::poly::Poly;

const SPLIT_SEED: u64 = 0x5eed_f00d;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    field: ModP,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(field: ModP, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % field.p()).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { field, coeffs }
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Result<Self> {
        let field = ModP::new(p)?;
        Ok(Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect()))
    }

    /// Reduction of an integer polynomial.
    pub fn from_int_poly(f: &Poly<BigInt>, p: u64) -> Result<Self> {
        let field = ModP::new(p)?;
        Ok(Self::new(field, f.coeffs().iter().map(|c| field.from_bigint(c)).collect()))
    }

    fn with(&self, coeffs: Vec<u64>) -> Self {
        Self::new(self.field, coeffs)
    }

    pub fn zero(field: ModP) -> Self {
        FpPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: ModP) -> Self {
        Self::new(field, vec![1])
    }

    pub fn x(field: ModP) -> Self {
        Self::new(field, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.field.p()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, t: u64) -> u64 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, t), c))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading());
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        self.with(self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        self.with((0..len).map(|i| self.field.add(get(&self.coeffs, i), get(&other.coeffs, i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        self.with((0..len).map(|i| self.field.sub(get(&self.coeffs, i), get(&other.coeffs, i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        self.with(out)
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::Arithmetic("division by the zero polynomial".into()));
        }
        let f = &self.field;
        let dd = d.deg();
        let inv = f.inv(d.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = f.mul(rem[i + dd], inv);
            if q == 0 {
                continue;
            }
            for (j, &b) in d.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(q, b));
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((self.with(quot), self.with(rem)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).expect("nonzero modulus").1
    }

    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        self.with(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, i as u64 % f.p()))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.field).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Inverse Frobenius on a polynomial whose exponents are all multiples of `p`.
    fn pth_root(&self) -> Self {
        let p = self.field.p() as usize;
        self.with(self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        let m = self.monic();
        let x = Self::x(self.field);
        let p = BigUint::from(self.field.p());
        let frob = |k: usize| x.pow_mod(&p.pow(k as u32), &m);
        if frob(n).sub(&x).rem(&m).degree().is_some() {
            return false;
        }
        prime_divisors(n).into_iter().all(|q| m.gcd(&frob(n / q).sub(&x)).is_one())
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            self.coeffs.iter().rev().cmp(other.coeffs.iter().rev())
        })
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ints: Poly<BigInt> = Poly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect());
        write!(f, "{ints}")
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Complete factorization `f = unit * Π g_i^{e_i}` with monic irreducible `g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFactorization {
    pub unit: u64,
    pub factors: Vec<(FpPoly, usize)>,
}

impl FpFactorization {
    /// Sorted multiset of irreducible factor degrees, repeated by multiplicity.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(g, e)| std::iter::repeat_n(g.deg(), *e))
            .collect();
        out.sort_unstable();
        out
    }

    /// Roots in `F_p`, ascending, one entry per linear factor.
    pub fn roots(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .factors
            .iter()
            .filter(|(g, _)| g.deg() == 1)
            .map(|(g, _)| g.field.neg(g.coeffs[0]))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn expand(&self, field: ModP) -> FpPoly {
        self.factors.iter().fold(FpPoly::new(field, vec![self.unit]), |acc, (g, e)| {
            (0..*e).fold(acc, |a, _| a.mul(g))
        })
    }
}

/// Factors a nonzero polynomial over `F_p` into monic irreducibles.
pub fn factor_mod_p(f: &FpPoly) -> Result<FpFactorization> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    }
    let unit = f.leading();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&monic) {
        for (part, d) in distinct_degree(&sqf) {
            for g in equal_degree(&part, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp_key(&b.0).then(a.1.cmp(&b.1)));
    Ok(FpFactorization { unit, factors })
}

/// Monic square-free parts with their multiplicities.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let p = f.field.p() as usize;
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.deg() > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_decomposition(&c.pth_root().monic()) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a square-free monic polynomial into products of equal-degree
/// irreducibles, tagged with that degree.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let x = FpPoly::x(f.field);
    let p = BigUint::from(f.field.p());
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(&p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.deg();
    if n == d {
        return vec![f.monic()];
    }
    let p = f.field.p();
    let exponent = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a = f.with((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^{2^{d-1}}
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod(&exponent, f).sub(&FpPoly::one(f.field))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_exact(&g), d, rng));
            return out;
        }
    }
}
