//! Transfer matrices over layer states and the strip/torus independence
//! polynomials they generate.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::circulant::{compatible, Boundary, CirculantSpec, ClosedKernel, StateSet};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Ring;
use crate::symmetry::{dihedral_orbits, OrbitMatrix};
use crate::{IntMatrix, IntPoly, PolyMatrix};

/// `T[I, J] = 1` iff `(I - J) ∩ B = ∅`.
#[derive(Clone, Debug)]
pub struct TransferMatrix {
    states: StateSet,
    kernel: ClosedKernel,
    entries: Vec<u8>,
}

impl TransferMatrix {
    pub fn dimension(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &StateSet {
        &self.states
    }

    pub fn kernel(&self) -> &ClosedKernel {
        &self.kernel
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.dimension() + j] == 1
    }

    /// Column indices of the ones in each row.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let d = self.dimension();
        (0..d).map(|i| (0..d).filter(|&j| self.get(i, j)).collect()).collect()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        let d = self.dimension();
        self.entries.chunks(d).map(|r| r.iter().map(|&e| e as usize).sum()).collect()
    }

    pub fn ones(&self) -> usize {
        self.entries.iter().map(|&e| e as usize).sum()
    }

    /// The 0/1 matrix over any ring.
    pub fn to_matrix<R: Ring>(&self) -> Matrix<R> {
        let d = self.dimension();
        Matrix::from_fn(d, d, |i, j| if self.get(i, j) { R::one() } else { R::zero() })
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        self.to_matrix()
    }
}

pub fn build_transfer(states: &StateSet, kernel: &ClosedKernel) -> Result<TransferMatrix> {
    if states.n() != kernel.n() {
        return Err(Error::InvalidArgument(format!(
            "states over Z_{} but kernel over Z_{}",
            states.n(),
            kernel.n()
        )));
    }
    let masks = states.states();
    let mut entries = Vec::with_capacity(masks.len() * masks.len());
    for &i in masks {
        let blocked = kernel.blocked_by(i);
        entries.extend(masks.iter().map(|&j| u8::from(j & blocked == 0)));
    }
    debug_assert!(masks.iter().all(|&i| masks.iter().all(|&j| {
        let e = entries[states.index_of(i).unwrap() * masks.len() + states.index_of(j).unwrap()];
        (e == 1) == compatible(i, j, kernel)
    })));
    Ok(TransferMatrix { states: states.clone(), kernel: *kernel, entries })
}

/// `M(x) = T · D_x` together with the boundary vector `w(J) = x^{|J|}`.
#[derive(Clone, Debug)]
pub struct WeightedTransfer {
    matrix: PolyMatrix,
    boundary: Vec<IntPoly>,
    weights: Vec<usize>,
    /// Column indices of the ones in each row of `T`.
    neighbors: Vec<Vec<usize>>,
}

impl WeightedTransfer {
    pub fn new(t: &TransferMatrix) -> Self {
        let d = t.dimension();
        let w = t.states().weights();
        let boundary: Vec<IntPoly> =
            w.iter().map(|&k| IntPoly::monomial(BigInt::one(), k as usize)).collect();
        let matrix = Matrix::from_fn(d, d, |i, j| {
            if t.get(i, j) {
                boundary[j].clone()
            } else {
                IntPoly::zero()
            }
        });
        let neighbors = t.neighbors();
        WeightedTransfer { matrix, boundary, weights: w.iter().map(|&k| k as usize).collect(), neighbors }
    }

    /// `M(x) v`. Entries of `M` are monomials on the support of `T`, so the
    /// product needs only shifts and additions.
    pub fn apply(&self, v: &[IntPoly]) -> Result<Vec<IntPoly>> {
        if v.len() != self.neighbors.len() {
            return Err(Error::Shape(format!("vector of length {} for dimension {}", v.len(), self.neighbors.len())));
        }
        let out = self
            .neighbors
            .iter()
            .map(|row| {
                let mut acc: Vec<BigInt> = Vec::new();
                for &j in row {
                    add_shifted(&mut acc, v[j].coeffs(), self.weights[j], &BigInt::one());
                }
                IntPoly::new(acc)
            })
            .collect();
        Ok(out)
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn boundary(&self) -> &[IntPoly] {
        &self.boundary
    }

    /// Evaluation at `x = 1`, which recovers `T`.
    pub fn at_one(&self) -> IntMatrix {
        self.matrix.map(|p| p.eval(&BigInt::one()))
    }
}

/// Independence polynomial of a strong cylinder or torus.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndependencePolynomial {
    pub n: usize,
    pub connection: Vec<usize>,
    pub layers: usize,
    pub boundary: Boundary,
    pub coefficients: IntPoly,
}

impl IndependencePolynomial {
    fn new(spec_n: usize, connection: &[usize], layers: usize, boundary: Boundary, poly: IntPoly) -> Self {
        IndependencePolynomial { n: spec_n, connection: connection.to_vec(), layers, boundary, coefficients: poly }
    }

    /// Independence number: the degree.
    pub fn alpha(&self) -> usize {
        self.coefficients.degree().unwrap_or(0)
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coefficients.eval(&BigInt::one())
    }

    pub fn leading(&self) -> BigInt {
        self.coefficients.leading().cloned().unwrap_or_default()
    }
}

/// `acc += scale · x^shift · c`.
fn add_shifted(acc: &mut Vec<BigInt>, c: &[BigInt], shift: usize, scale: &BigInt) {
    if c.is_empty() {
        return;
    }
    if acc.len() < shift + c.len() {
        acc.resize(shift + c.len(), BigInt::zero());
    }
    for (a, b) in acc[shift..].iter_mut().zip(c) {
        if scale.is_one() {
            *a += b;
        } else {
            *a += b * scale;
        }
    }
}

fn spec_of(states: &StateSet, kernel: &ClosedKernel) -> (usize, Vec<usize>) {
    let n = states.n();
    let conn = (1..n).filter(|&j| kernel.contains(j)).collect();
    (n, conn)
}

/// `wᵀ M(x)^{d-1} 1` over the full state space. Every layer carries its
/// weight exactly once: `M = T·D_x` weights layers `2..d` and `w` the first.
pub fn strip_polynomial(t: &TransferMatrix, wt: &WeightedTransfer, d: usize) -> Result<IndependencePolynomial> {
    if d < 1 {
        return Err(Error::InvalidArgument("strip needs at least one layer".into()));
    }
    let mut v = vec![IntPoly::one(); t.dimension()];
    for _ in 1..d {
        v = wt.apply(&v)?;
    }
    let mut acc = Vec::new();
    for (p, &w) in v.iter().zip(&wt.weights) {
        add_shifted(&mut acc, p.coeffs(), w, &BigInt::one());
    }
    let total = IntPoly::new(acc);
    let (n, conn) = spec_of(t.states(), t.kernel());
    Ok(IndependencePolynomial::new(n, &conn, d, Boundary::Strip, total))
}

/// Strip polynomial through the orbit-compressed weighted matrix: both
/// boundary vectors are invariant, so the recursion closes on orbit
/// representatives and the result is weighted by orbit sizes.
pub fn strip_polynomial_orbit(spec: &CirculantSpec, orb: &OrbitMatrix, d: usize) -> Result<IndependencePolynomial> {
    if d < 1 {
        return Err(Error::InvalidArgument("strip needs at least one layer".into()));
    }
    let weighted = orb.weighted();
    let mut v = vec![IntPoly::one(); orb.dimension()];
    for _ in 1..d {
        v = weighted.mul_vec(&v)?;
    }
    let total = v
        .iter()
        .zip(orb.sizes().iter().zip(orb.weights()))
        .fold(IntPoly::zero(), |acc, (p, (&s, &w))| &acc + &p.shift(w as usize).scale(&BigInt::from(s)));
    Ok(IndependencePolynomial::new(spec.n(), spec.connection(), d, Boundary::Strip, total))
}

/// `tr(M(x)^d)` for `d >= 2`. `M` commutes with the dihedral action, so
/// the diagonal of `M^d` is constant on orbits and only one column per
/// orbit is propagated.
pub fn torus_polynomial(t: &TransferMatrix, wt: &WeightedTransfer, d: usize) -> Result<IndependencePolynomial> {
    if d < 2 {
        return Err(Error::InvalidArgument(
            "one-layer torus is degenerate; use the strip with d = 1".into(),
        ));
    }
    let states = t.states();
    let mut acc = Vec::new();
    for orbit in &dihedral_orbits(states)?.orbits {
        let r = states
            .index_of(orbit.representative)
            .ok_or_else(|| Error::Structural("orbit representative is not a state".into()))?;
        let mut v = vec![IntPoly::zero(); t.dimension()];
        v[r] = IntPoly::one();
        for _ in 0..d {
            v = wt.apply(&v)?;
        }
        add_shifted(&mut acc, v[r].coeffs(), 0, &BigInt::from(orbit.size()));
    }
    let poly = IntPoly::new(acc);
    let (n, conn) = spec_of(t.states(), t.kernel());
    Ok(IndependencePolynomial::new(n, &conn, d, Boundary::Torus, poly))
}

pub fn independence_polynomial(
    t: &TransferMatrix,
    wt: &WeightedTransfer,
    d: usize,
    boundary: Boundary,
) -> Result<IndependencePolynomial> {
    match boundary {
        Boundary::Strip => strip_polynomial(t, wt, d),
        Boundary::Torus => torus_polynomial(t, wt, d),
    }
}

/// `1ᵀ T^{d-1} 1` with integer arithmetic.
pub fn strip_count(t: &TransferMatrix, d: usize) -> Result<BigInt> {
    if d < 1 {
        return Err(Error::InvalidArgument("strip needs at least one layer".into()));
    }
    let rows = t.neighbors();
    let mut v = vec![BigInt::one(); t.dimension()];
    for _ in 1..d {
        v = rows.iter().map(|r| r.iter().map(|&j| &v[j]).sum()).collect();
    }
    Ok(v.into_iter().sum())
}

/// `tr(T^d)` with integer arithmetic, one column per dihedral orbit.
pub fn torus_count(t: &TransferMatrix, d: usize) -> Result<BigInt> {
    let states = t.states();
    let rows = t.neighbors();
    let mut total = BigInt::zero();
    for orbit in &dihedral_orbits(states)?.orbits {
        let r = states
            .index_of(orbit.representative)
            .ok_or_else(|| Error::Structural("orbit representative is not a state".into()))?;
        let mut v = vec![BigInt::zero(); t.dimension()];
        v[r] = BigInt::one();
        for _ in 0..d {
            v = rows.iter().map(|row| row.iter().map(|&j| &v[j]).sum()).collect();
        }
        total += &v[r] * BigInt::from(orbit.size());
    }
    Ok(total)
}
