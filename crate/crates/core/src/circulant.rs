//! Circulant base graphs, their independent sets and the explicit stacked
//! graphs used by the brute-force oracle.

use std::collections::HashMap;

use num_complex::Complex;
use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::modp::is_prime;

/// Subset of `Z_n` as a bitmask; bit `j` is residue `j`.
pub type Mask = u64;

pub const MAX_N: usize = 64;

/// Members of a mask in ascending order.
pub fn residues(mask: Mask) -> impl Iterator<Item = usize> {
    (0..MAX_N).filter(move |&j| mask >> j & 1 == 1)
}

pub fn mask_of(residues: &[usize], n: usize) -> Mask {
    residues.iter().fold(0, |m, &j| m | 1 << (j % n))
}

fn full(n: usize) -> Mask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Cyclic shift `j ↦ j + r`.
pub fn rotate(mask: Mask, r: usize, n: usize) -> Mask {
    let r = r % n;
    if r == 0 {
        return mask;
    }
    ((mask << r) | (mask >> (n - r))) & full(n)
}

/// Negation `j ↦ -j`.
pub fn negate(mask: Mask, n: usize) -> Mask {
    residues(mask).fold(0, |m, j| m | 1 << ((n - j) % n))
}

/// Circulant graph `Cay(Z_n, C)` with symmetric connection set `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CirculantSpec {
    n: usize,
    connection: Vec<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, connection: &[usize]) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!("n must be at least 3, got {n}")));
        }
        if n > MAX_N {
            return Err(Error::InvalidSpec(format!("n must be at most {MAX_N}, got {n}")));
        }
        let mut conn: Vec<usize> = connection.to_vec();
        conn.sort_unstable();
        conn.dedup();
        if let Some(&bad) = conn.iter().find(|&&c| c == 0 || c >= n) {
            return Err(Error::InvalidSpec(format!("connection residue {bad} outside 1..{}", n - 1)));
        }
        if let Some(&c) = conn.iter().find(|&&c| conn.binary_search(&(n - c)).is_err()) {
            return Err(Error::InvalidSpec(format!(
                "connection set is not symmetric: {c} present but {} missing",
                n - c
            )));
        }
        Ok(CirculantSpec { n, connection: conn })
    }

    /// Symmetric closure `{±g}` of the given generators.
    pub fn from_generators(n: usize, gens: &[usize]) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!("n must be at least 3, got {n}")));
        }
        let mut conn = Vec::new();
        for &g in gens {
            let g = g % n;
            if g == 0 {
                return Err(Error::InvalidSpec("generator congruent to 0".into()));
            }
            conn.push(g);
            conn.push(n - g);
        }
        Self::new(n, &conn)
    }

    /// The cycle `C_n`, connection `{±1}`.
    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_generators(n, &[1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn connection(&self) -> &[usize] {
        &self.connection
    }

    pub fn connection_mask(&self) -> Mask {
        mask_of(&self.connection, self.n)
    }

    pub fn is_cycle(&self) -> bool {
        self.connection == [1, self.n - 1] || (self.n == 2 && self.connection == [1])
    }

    pub fn is_prime_order(&self) -> bool {
        is_prime(self.n as u64)
    }

    pub fn kernel(&self) -> ClosedKernel {
        ClosedKernel { n: self.n, members: self.connection_mask() | 1 }
    }
}

/// The closed connection set `B = C ∪ {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedKernel {
    n: usize,
    members: Mask,
}

impl ClosedKernel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> Mask {
        self.members
    }

    pub fn contains(&self, j: usize) -> bool {
        self.members >> (j % self.n) & 1 == 1
    }

    /// `c(j) = 1` iff `j ∉ B`.
    pub fn indicator(&self, j: usize) -> u8 {
        u8::from(!self.contains(j))
    }

    pub fn size(&self) -> usize {
        self.members.count_ones() as usize
    }

    /// Residues that a layer adjacent to `mask` must avoid: `mask + B`.
    pub fn blocked_by(&self, mask: Mask) -> Mask {
        residues(mask).fold(0, |acc, a| acc | rotate(self.members, a, self.n))
    }
}

/// `I - J = {a - b mod n : a ∈ I, b ∈ J}`.
pub fn minkowski_difference(i: Mask, j: Mask, n: usize) -> Mask {
    let neg_j = negate(j, n);
    residues(i).fold(0, |acc, a| acc | rotate(neg_j, a, n))
}

/// Layer compatibility: `(I - J) ∩ B = ∅`.
pub fn compatible(i: Mask, j: Mask, kernel: &ClosedKernel) -> bool {
    j & kernel.blocked_by(i) == 0
}

/// Independent sets of the base graph in `(weight, mask)` order.
#[derive(Clone, Debug)]
pub struct StateSet {
    n: usize,
    states: Vec<Mask>,
    weights: Vec<u32>,
    index: HashMap<Mask, usize>,
}

impl StateSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[Mask] {
        &self.states
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, mask: Mask) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    /// Number of states of each cardinality.
    pub fn weight_histogram(&self) -> Vec<u64> {
        let top = self.weights.iter().copied().max().unwrap_or(0) as usize;
        let mut h = vec![0u64; top + 1];
        for &w in &self.weights {
            h[w as usize] += 1;
        }
        h
    }
}

/// All independent sets of `Cay(Z_n, C)`.
pub fn enumerate_states(spec: &CirculantSpec) -> StateSet {
    let n = spec.n();
    let conn = spec.connection_mask();
    let neighbors: Vec<Mask> = (0..n).map(|v| rotate(conn, v, n)).collect();
    let mut states = Vec::new();
    fn grow(v: usize, n: usize, cur: Mask, nb: &[Mask], out: &mut Vec<Mask>) {
        if v == n {
            out.push(cur);
            return;
        }
        grow(v + 1, n, cur, nb, out);
        if cur & nb[v] == 0 {
            grow(v + 1, n, cur | 1 << v, nb, out);
        }
    }
    grow(0, n, 0, &neighbors, &mut states);
    states.sort_by_key(|&m| (m.count_ones(), m));
    let weights = states.iter().map(|m| m.count_ones()).collect();
    let index = states.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    StateSet { n, states, weights, index }
}

/// Layer-stacking boundary condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    /// `G ⊠ P_d`
    Strip,
    /// `G ⊠ C_d`; `d = 2` is realized as `G ⊠ K_2`.
    Torus,
}

impl std::str::FromStr for Boundary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strip" => Ok(Boundary::Strip),
            "torus" => Ok(Boundary::Torus),
            other => Err(Error::Parse(format!("unknown boundary {other:?}"))),
        }
    }
}

/// Largest explicit graph; adjacency rows are `u128` bitsets.
pub const MAX_EXPLICIT_VERTICES: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGraph {
    vertex_count: usize,
    adjacency: Vec<u128>,
}

impl ExplicitGraph {
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count > MAX_EXPLICIT_VERTICES {
            return Err(Error::CapExceeded(format!(
                "{vertex_count} vertices exceeds the explicit-graph limit of {MAX_EXPLICIT_VERTICES}"
            )));
        }
        let mut adjacency = vec![0u128; vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidArgument(format!("edge ({u}, {v}) out of range")));
            }
            if u != v {
                adjacency[u] |= 1 << v;
                adjacency[v] |= 1 << u;
            }
        }
        Ok(ExplicitGraph { vertex_count, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn adjacency(&self) -> &[u128] {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let edges = (0..self.vertex_count).flat_map(|u| {
            (0..self.vertex_count)
                .filter(move |&v| self.adjacency[u] >> v & 1 == 1)
                .map(move |v| (perm[u], perm[v]))
        });
        Self::from_edges(self.vertex_count, edges.collect::<Vec<_>>())
    }
}

/// Explicit `G ⊠ P_d` or `G ⊠ C_d`; vertex `(layer t, residue j)` is `t * n + j`.
pub fn build_strong_stack(spec: &CirculantSpec, d: usize, boundary: Boundary) -> Result<ExplicitGraph> {
    if d == 0 {
        return Err(Error::InvalidArgument("layer count must be positive".into()));
    }
    if boundary == Boundary::Torus && d == 1 {
        return Err(Error::InvalidArgument(
            "one-layer torus is degenerate; use the strip with d = 1".into(),
        ));
    }
    let n = spec.n();
    let kernel = spec.kernel();
    let mut edges = Vec::new();
    let mut layer_pairs: Vec<(usize, usize)> = (0..d.saturating_sub(1)).map(|t| (t, t + 1)).collect();
    if boundary == Boundary::Torus && d >= 3 {
        layer_pairs.push((d - 1, 0));
    }
    for t in 0..d {
        for i in 0..n {
            for &c in spec.connection() {
                edges.push((t * n + i, t * n + (i + c) % n));
            }
        }
    }
    for (s, t) in layer_pairs {
        for i in 0..n {
            for j in 0..n {
                if kernel.contains((j + n - i) % n) {
                    edges.push((s * n + i, t * n + j));
                }
            }
        }
    }
    ExplicitGraph::from_edges(n * d, edges)
}

/// One Fourier coefficient of the compatibility indicator.
#[derive(Clone, Debug, PartialEq)]
pub enum KernelValue {
    /// Exact member of `Q(ω)` (prime `n`).
    Exact(Cyclotomic),
    Numeric(Complex<f64>),
}

impl KernelValue {
    pub fn to_complex(&self) -> Complex<f64> {
        match self {
            KernelValue::Exact(c) => c.to_complex(),
            KernelValue::Numeric(z) => *z,
        }
    }
}

/// `ĉ(k) = Σ_j c(j) ω^{-jk}` for `k = 0..n-1`.
#[derive(Clone, Debug)]
pub struct KernelSpectrum {
    pub n: usize,
    pub values: Vec<KernelValue>,
}

pub fn fourier_of_kernel(spec: &CirculantSpec) -> KernelSpectrum {
    let n = spec.n();
    let kernel = spec.kernel();
    let exact = spec.is_prime_order();
    let values = (0..n)
        .map(|k| {
            if exact {
                let mut a = vec![0i64; n];
                for j in (0..n).filter(|&j| kernel.indicator(j) == 1) {
                    a[(n * n - j * k) % n] += 1;
                }
                KernelValue::Exact(Cyclotomic::from_cyclic(n as u32, &a).expect("prime order"))
            } else {
                let z = (0..n).filter(|&j| kernel.indicator(j) == 1).fold(Complex::new(0.0, 0.0), |acc, j| {
                    let theta = -2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64;
                    acc + Complex::from_polar(1.0, theta)
                });
                KernelValue::Numeric(z)
            }
        })
        .collect();
    KernelSpectrum { n, values }
}
