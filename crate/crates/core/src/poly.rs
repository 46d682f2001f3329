//! Dense univariate polynomials over an arbitrary [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

/// Polynomial with coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, t: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Multiplicity of the root at zero.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Splits `self = x^k * rest` with `rest(0) != 0`.
    pub fn split_zero_root(&self) -> (usize, Self) {
        let k = self.trailing_zeros();
        (k, Poly { coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec() })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * R::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Division by a monic divisor; valid over any ring.
    pub fn divrem_monic(&self, b: &Self) -> Result<(Self, Self)> {
        if !b.is_monic() {
            return Err(Error::Arithmetic("divisor is not monic".into()));
        }
        let db = b.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![R::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let q = rem[i + db].clone();
            if q.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * bj.clone();
            }
            quot[i] = q;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient by a monic divisor, failing on a nonzero remainder.
    pub fn div_exact_monic(&self, b: &Self) -> Result<Self> {
        let (q, r) = self.divrem_monic(b)?;
        if !r.is_zero() {
            return Err(Error::Arithmetic("division leaves a remainder".into()));
        }
        Ok(q)
    }
}

impl<R: Field> Poly<R> {
    /// Euclidean division over a field.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        let lead_inv = b
            .leading()
            .and_then(|c| c.inv())
            .ok_or_else(|| Error::Arithmetic("division by the zero polynomial".into()))?;
        let monic = b.scale(&lead_inv);
        let (q, r) = self.divrem_monic(&monic)?;
        Ok((q.scale(&lead_inv), r))
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s.clone();
        }
        Poly::new(coeffs)
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

// ---------------------------------------------------------------------------
// Integer polynomials

impl Poly<BigInt> {
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Division with remainder over the rationals.
    pub fn divrem_rational(&self, b: &Self) -> Result<(Poly<BigRational>, Poly<BigRational>)> {
        self.to_rational().divrem(&b.to_rational())
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings(s: &[impl AsRef<str>]) -> Result<Self> {
        let coeffs = s
            .iter()
            .map(|t| {
                t.as_ref()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("{:?}: {e}", t.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl Poly<BigRational> {
    /// Clears denominators when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Poly<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

/// Monic square root by coefficient recursion from the top, or `None` when
/// `g` is not the square of an integer polynomial.
pub fn poly_square_root(g: &Poly<BigInt>) -> Option<Poly<BigInt>> {
    let deg = g.degree()?;
    if deg % 2 != 0 || !g.is_monic() {
        return None;
    }
    let m = deg / 2;
    // f[m] = 1; f[m - j] solved from the coefficient of x^{2m - j}.
    let mut f = vec![BigInt::zero(); m + 1];
    f[m] = BigInt::one();
    let two = BigInt::from(2);
    for j in 1..=m {
        let target = g.coeff(2 * m - j);
        let mut acc = BigInt::zero();
        for i in 1..j {
            acc += &f[m - i] * &f[m - (j - i)];
        }
        let rest = target - acc;
        let (q, r) = rest.div_rem(&two);
        if !r.is_zero() {
            return None;
        }
        f[m - j] = q;
    }
    let f = Poly::new(f);
    (&f * &f == *g).then_some(f)
}

/// Exact integer square root of a nonnegative integer, or `None`.
pub fn integer_sqrt_exact(a: &BigInt) -> Result<Option<BigInt>> {
    if a.is_negative() {
        return Err(Error::Arithmetic("square root of a negative integer".into()));
    }
    let s = a.sqrt();
    Ok((&s * &s == *a).then_some(s))
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_signed_terms(f, self.coeffs.iter().enumerate().rev(), "x")
    }
}

impl fmt::Display for Poly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_signed_terms(f, self.coeffs.iter().enumerate().rev(), "x")
    }
}

fn fmt_signed_terms<'a, T>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, &'a T)>,
    var: &str,
) -> fmt::Result
where
    T: Signed + fmt::Display + 'a,
{
    let mut first = true;
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag.is_one();
        match i {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}")?;
                }
                write!(f, "{var}")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Serialize for Poly<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Poly<BigInt> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        Poly::from_strings(&raw).map_err(serde::de::Error::custom)
    }
}
