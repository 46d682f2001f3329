//! Dihedral and cyclic symmetry of the state space: orbits, the
//! orbit-compressed transfer matrix and its Fourier blocks over `Q(ω)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::circulant::{compatible, negate, rotate, ClosedKernel, Mask, StateSet};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modp::{self, is_prime, CrtAccumulator, ModP};
use crate::poly::Poly;
use crate::transfer::TransferMatrix;
use crate::{CycPoly, IntMatrix, IntPoly, PolyMatrix};

/// `j ↦ ε j + r` with `ε = -1` when `reflected`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflected: bool,
}

impl DihedralElement {
    pub fn identity() -> Self {
        DihedralElement { rotation: 0, reflected: false }
    }

    pub fn apply(&self, j: usize, n: usize) -> usize {
        let base = if self.reflected { (n - j % n) % n } else { j % n };
        (base + self.rotation) % n
    }

    pub fn apply_mask(&self, mask: Mask, n: usize) -> Mask {
        let m = if self.reflected { negate(mask, n) } else { mask };
        rotate(m, self.rotation, n)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self, n: usize) -> Self {
        let r = if self.reflected { (n - other.rotation % n) % n } else { other.rotation % n };
        DihedralElement { rotation: (r + self.rotation) % n, reflected: self.reflected != other.reflected }
    }

    pub fn inverse(&self, n: usize) -> Self {
        if self.reflected {
            *self
        } else {
            DihedralElement { rotation: (n - self.rotation % n) % n, reflected: false }
        }
    }

    /// All `2n` elements, rotations first.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (0..n).map(|r| DihedralElement { rotation: r, reflected: false }).collect();
        out.extend((0..n).map(|r| DihedralElement { rotation: r, reflected: true }));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Cyclic,
    Dihedral,
}

impl GroupKind {
    pub fn elements(&self, n: usize) -> Vec<DihedralElement> {
        let all = DihedralElement::all(n);
        match self {
            GroupKind::Cyclic => all[..n].to_vec(),
            GroupKind::Dihedral => all,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Orbit {
    pub representative: Mask,
    pub members: Vec<Mask>,
    pub weight: u32,
    /// Size of the rotation orbit of the representative.
    pub rotation_orbit_size: usize,
    /// Whether the set of members is closed under `j ↦ -j` as a single
    /// rotation orbit.
    pub reflection_closed: bool,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Free under rotations.
    pub fn is_free(&self, n: usize) -> bool {
        self.rotation_orbit_size == n
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitDecomposition {
    pub n: usize,
    pub kind: GroupKind,
    pub orbits: Vec<Orbit>,
    /// Orbit index of every state, aligned with the state order.
    pub orbit_of: Vec<usize>,
}

fn rotation_orbit(mask: Mask, n: usize) -> Vec<Mask> {
    let mut v: Vec<Mask> = (0..n).map(|r| rotate(mask, r, n)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Orbits of the state space under the chosen group. Representatives are
/// the least states in `(weight, mask)` order, and orbits are listed in the
/// order of their representatives.
pub fn decompose(states: &StateSet, kind: GroupKind) -> Result<OrbitDecomposition> {
    let n = states.n();
    let group = kind.elements(n);
    let mut orbit_of = vec![usize::MAX; states.len()];
    let mut orbits = Vec::new();
    for (idx, &s) in states.states().iter().enumerate() {
        if orbit_of[idx] != usize::MAX {
            continue;
        }
        let mut members: Vec<Mask> = group.iter().map(|g| g.apply_mask(s, n)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            let j = states
                .index_of(m)
                .ok_or_else(|| Error::Structural(format!("image {m:#b} of a state is not a state")))?;
            orbit_of[j] = orbits.len();
        }
        let rot = rotation_orbit(s, n);
        let neg = {
            let mut v: Vec<Mask> = rot.iter().map(|&m| negate(m, n)).collect();
            v.sort_unstable();
            v
        };
        let reflection_closed = match kind {
            GroupKind::Cyclic => neg == rot,
            GroupKind::Dihedral => members.len() == rot.len(),
        };
        orbits.push(Orbit {
            representative: s,
            weight: s.count_ones(),
            rotation_orbit_size: rot.len(),
            reflection_closed,
            members,
        });
    }
    let dec = OrbitDecomposition { n, kind, orbits, orbit_of };
    let burnside = burnside_count(states, kind);
    if burnside != dec.orbits.len() {
        return Err(Error::Structural(format!(
            "Burnside count {burnside} differs from {} orbits",
            dec.orbits.len()
        )));
    }
    Ok(dec)
}

pub fn dihedral_orbits(states: &StateSet) -> Result<OrbitDecomposition> {
    decompose(states, GroupKind::Dihedral)
}

pub fn rotation_orbits(states: &StateSet) -> Result<OrbitDecomposition> {
    decompose(states, GroupKind::Cyclic)
}

/// `|G|^{-1} Σ_g |Fix(g)|`.
pub fn burnside_count(states: &StateSet, kind: GroupKind) -> usize {
    let n = states.n();
    let group = kind.elements(n);
    let fixed: usize = group
        .iter()
        .map(|g| states.states().iter().filter(|&&s| g.apply_mask(s, n) == s).count())
        .sum();
    fixed / group.len()
}

impl OrbitDecomposition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Orbit::size).collect()
    }

    pub fn representatives(&self) -> Vec<Mask> {
        self.orbits.iter().map(|o| o.representative).collect()
    }

    /// Orbits of size `2n` under the dihedral group.
    pub fn chiral_count(&self) -> usize {
        self.orbits.iter().filter(|o| !o.reflection_closed).count()
    }
}

/// `T_orb[i, j] = #{J ∈ O_j : T[rep_i, J] = 1}`.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitMatrix {
    #[serde(skip)]
    counts: IntMatrix,
    sizes: Vec<usize>,
    weights: Vec<u32>,
}

impl OrbitMatrix {
    pub fn new(dec: &OrbitDecomposition, kernel: &ClosedKernel) -> Result<Self> {
        if dec.n != kernel.n() {
            return Err(Error::InvalidArgument("orbit decomposition and kernel disagree on n".into()));
        }
        let k = dec.len();
        let counts = Matrix::from_fn(k, k, |i, j| {
            let rep = dec.orbits[i].representative;
            let c = dec.orbits[j].members.iter().filter(|&&m| compatible(rep, m, kernel)).count();
            BigInt::from(c)
        });
        Ok(OrbitMatrix {
            counts,
            sizes: dec.sizes(),
            weights: dec.orbits.iter().map(|o| o.weight).collect(),
        })
    }

    pub fn counts(&self) -> &IntMatrix {
        &self.counts
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn dimension(&self) -> usize {
        self.sizes.len()
    }

    /// `T_orb[i, j] · x^{w_j}`.
    pub fn weighted(&self) -> PolyMatrix {
        let k = self.dimension();
        Matrix::from_fn(k, k, |i, j| IntPoly::monomial(self.counts[(i, j)].clone(), self.weights[j] as usize))
    }

    /// `diag(√size) T_orb diag(√size)^{-1}` is symmetric; this checks the
    /// integer form `size_i T_orb[i, j] = size_j T_orb[j, i]`.
    pub fn is_size_symmetric(&self) -> bool {
        let k = self.dimension();
        (0..k).all(|i| {
            (0..k).all(|j| {
                &self.counts[(i, j)] * BigInt::from(self.sizes[i])
                    == &self.counts[(j, i)] * BigInt::from(self.sizes[j])
            })
        })
    }
}

pub fn orbit_transfer(dec: &OrbitDecomposition, kernel: &ClosedKernel) -> Result<OrbitMatrix> {
    OrbitMatrix::new(dec, kernel)
}

fn require_prime_rotation(dec: &OrbitDecomposition) -> Result<()> {
    if dec.kind != GroupKind::Cyclic {
        return Err(Error::InvalidArgument("Fourier blocks need rotation orbits".into()));
    }
    if dec.n < 3 || !is_prime(dec.n as u64) {
        return Err(Error::Unsupported(format!("Fourier blocks need an odd prime n, got {}", dec.n)));
    }
    Ok(())
}

/// `a_ℓ(i, j) = T[rep_i, σ^ℓ rep_j]` for `ℓ = 0..n-1`.
pub fn rotation_counts(dec: &OrbitDecomposition, kernel: &ClosedKernel, i: usize, j: usize) -> Vec<i64> {
    let n = dec.n;
    let (ri, rj) = (dec.orbits[i].representative, dec.orbits[j].representative);
    (0..n).map(|l| i64::from(compatible(ri, rotate(rj, l, n), kernel))).collect()
}

/// Block of `T` on the `ω^k` isotypic component, in the basis
/// `f_j = Σ_ℓ ω^{ℓk} e_{σ^ℓ rep_j}` over rotation orbits. Non-free orbits
/// only contribute at `k = 0`.
#[derive(Clone, Debug)]
pub struct FourierBlock {
    pub n: usize,
    pub k: usize,
    pub orbit_indices: Vec<usize>,
    pub weights: Vec<u32>,
    pub matrix: Matrix<Cyclotomic>,
}

impl FourierBlock {
    pub fn dimension(&self) -> usize {
        self.orbit_indices.len()
    }

    /// `B_k(x)[i, j] = B_k[i, j] · x^{w_j}`.
    pub fn weighted(&self) -> Matrix<CycPoly> {
        let m = self.dimension();
        Matrix::from_fn(m, m, |i, j| Poly::monomial(self.matrix[(i, j)].clone(), self.weights[j] as usize))
    }

    /// Entries as integers when `k = 0`.
    pub fn to_int_matrix(&self) -> Option<IntMatrix> {
        let m = self.dimension();
        let mut data = Vec::with_capacity(m * m);
        for e in self.matrix.data() {
            let q = e.to_rational()?;
            if !q.is_integer() {
                return None;
            }
            data.push(q.to_integer());
        }
        Matrix::new(m, m, data).ok()
    }
}

pub fn fourier_block(dec: &OrbitDecomposition, kernel: &ClosedKernel, k: usize) -> Result<FourierBlock> {
    require_prime_rotation(dec)?;
    let n = dec.n;
    let k = k % n;
    let order = n as u32;
    let indices: Vec<usize> = (0..dec.len()).filter(|&i| k == 0 || dec.orbits[i].is_free(n)).collect();
    let m = indices.len();
    let mut data = Vec::with_capacity(m * m);
    for &i in &indices {
        for &j in &indices {
            let a = rotation_counts(dec, kernel, i, j);
            let entry = if k == 0 {
                let distinct = dec.orbits[j].rotation_orbit_size;
                Cyclotomic::integer(a[..distinct].iter().sum())
            } else {
                let mut b = vec![0i64; n];
                for (l, &v) in a.iter().enumerate() {
                    b[(l * k) % n] += v;
                }
                Cyclotomic::from_cyclic(order, &b)?
            };
            data.push(entry);
        }
    }
    Ok(FourierBlock {
        n,
        k,
        weights: indices.iter().map(|&i| dec.orbits[i].weight).collect(),
        orbit_indices: indices,
        matrix: Matrix::new(m, m, data)?,
    })
}

/// `tr(M(x)^d)` split into the `k = 0` block and the sum over `k ≠ 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SectorTraces {
    pub d: usize,
    pub anomalous: IntPoly,
    pub cyclotomic: IntPoly,
}

impl SectorTraces {
    pub fn total(&self) -> IntPoly {
        &self.anomalous + &self.cyclotomic
    }
}

pub fn sector_traces(dec: &OrbitDecomposition, kernel: &ClosedKernel, d: usize) -> Result<SectorTraces> {
    if d < 1 {
        return Err(Error::InvalidArgument("sector traces need d >= 1".into()));
    }
    let n = dec.n;
    let b0 = fourier_block(dec, kernel, 0)?;
    let b0 = b0
        .to_int_matrix()
        .ok_or_else(|| Error::Structural("k = 0 block is not integral".into()))?;
    let weights: Vec<u32> = dec.orbits.iter().map(|o| o.weight).collect();
    let rows: Vec<f64> = (0..b0.rows()).map(|i| b0.row(i).iter().map(magnitude).sum()).collect();
    let bits = trace_bound_bits(1, &rows, d);
    let anomalous = weighted_trace_crt(modp::large_primes(), &weights, d, bits, |f| {
        Ok(vec![b0.data().iter().map(|v| f.from_bigint(v)).collect()])
    })?;

    // B_k is the image of B_1 under ω ↦ ω^k, so the k ≠ 0 blocks are the
    // conjugates of B_1 and their traces sum over all primitive roots.
    let b1 = fourier_block(dec, kernel, 1)?;
    let rows: Vec<f64> = (0..b1.matrix.rows())
        .map(|i| b1.matrix.row(i).iter().map(|e| e.coords().iter().map(|c| magnitude(&c.to_integer())).sum::<f64>()).sum())
        .collect();
    let bits = trace_bound_bits(n - 1, &rows, d);
    let cyclotomic = weighted_trace_crt(modp::primes_one_mod(n as u64), &b1.weights, d, bits, |f| {
        let g = f.root_of_unity(n as u64)?;
        (1..n as u64)
            .map(|a| {
                let r = f.pow(g, a);
                b1.matrix.data().iter().map(|e| e.eval_mod(f, r)).collect::<Result<Vec<u64>>>()
            })
            .collect()
    })?;
    Ok(SectorTraces { d, anomalous, cyclotomic })
}

fn magnitude(v: &BigInt) -> f64 {
    v.magnitude().to_f64().unwrap_or(f64::INFINITY)
}

/// Bits covering `2 · copies · m · R^d`, which bounds every coefficient of
/// a sum of `copies` traces `tr((B D_x)^d)` with row sums of `|B|` at most `R`.
fn trace_bound_bits(copies: usize, row_sums: &[f64], d: usize) -> f64 {
    let r = row_sums.iter().copied().fold(1.0f64, f64::max);
    ((2 * copies.max(1) * row_sums.len().max(1)) as f64).log2() + d as f64 * r.log2() + 2.0
}

/// `Σ_B tr((B D_x)^d)` over the matrices `B` returned mod `p` by `residues`,
/// lifted by CRT once the modulus exceeds `bound_bits`. `D_x` is the diagonal
/// of `x^{w_j}`.
fn weighted_trace_crt(
    primes: impl Iterator<Item = u64>,
    weights: &[u32],
    d: usize,
    bound_bits: f64,
    residues: impl Fn(&ModP) -> Result<Vec<Vec<u64>>>,
) -> Result<IntPoly> {
    let m = weights.len();
    let len = weights.iter().copied().max().unwrap_or(0) as usize * d + 1;
    let mut crt = CrtAccumulator::new(len);
    for p in primes {
        if crt.modulus_bits() as f64 > bound_bits {
            break;
        }
        let f = ModP::new(p)?;
        let mut total = vec![0u64; len];
        for b in residues(&f)? {
            for start in 0..m {
                let mut v = vec![vec![0u64; len]; m];
                v[start][0] = 1;
                for _ in 0..d {
                    let mut next = vec![vec![0u128; len]; m];
                    for (a, out) in next.iter_mut().enumerate() {
                        for (j, col) in v.iter().enumerate() {
                            let c = b[a * m + j] as u128;
                            if c == 0 {
                                continue;
                            }
                            let w = weights[j] as usize;
                            for (o, &x) in out[w..].iter_mut().zip(col) {
                                *o += c * x as u128;
                            }
                        }
                    }
                    v = next.into_iter().map(|row| row.into_iter().map(|x| (x % p as u128) as u64).collect()).collect();
                }
                for (t, &x) in total.iter_mut().zip(&v[start]) {
                    *t = f.add(*t, x);
                }
            }
        }
        crt.push(&f, &total);
    }
    Ok(Poly::new(crt.finish()))
}
/// Isotypic multiplicities of `D_n` acting on the state space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicities {
    pub n: usize,
    pub states: usize,
    pub m_chi0: usize,
    pub m_chi1: usize,
    /// Common multiplicity of every two-dimensional irreducible.
    pub m_rho: usize,
    pub two_dim_modes: usize,
    pub dihedral_orbits: usize,
    pub rotation_orbits: usize,
    /// Rotation orbits that are not mapped to themselves by `j ↦ -j`.
    pub chiral_rotation_orbits: usize,
    pub consistent: bool,
}

pub fn multiplicity_accounting(states: &StateSet) -> Result<Multiplicities> {
    let n = states.n();
    if !is_prime(n as u64) || n < 3 {
        return Err(Error::Unsupported(format!("multiplicities are tabulated for odd prime n, got {n}")));
    }
    let dih = dihedral_orbits(states)?;
    let rot = rotation_orbits(states)?;
    let m_chi0 = dih.len();
    let m_chi1 = dih.orbits.iter().filter(|o| o.is_free(n) && !o.reflection_closed).count();
    let m_rho = dih
        .orbits
        .iter()
        .filter(|o| o.is_free(n))
        .map(|o| if o.reflection_closed { 1 } else { 2 })
        .sum();
    let two_dim_modes = (n - 1) / 2;
    let chiral_rotation_orbits = rot.orbits.iter().filter(|o| !o.reflection_closed).count();
    let consistent = m_chi0 + m_chi1 + 2 * two_dim_modes * m_rho == states.len()
        && m_chi0 + m_chi1 == rot.len()
        && chiral_rotation_orbits == 2 * m_chi1;
    Ok(Multiplicities {
        n,
        states: states.len(),
        m_chi0,
        m_chi1,
        m_rho,
        two_dim_modes,
        dihedral_orbits: dih.len(),
        rotation_orbits: rot.len(),
        chiral_rotation_orbits,
        consistent,
    })
}

/// `T[gI, gJ] = T[I, J]` for one group element.
pub fn is_equivariant_under(t: &TransferMatrix, g: &DihedralElement) -> bool {
    let states = t.states();
    let n = states.n();
    let masks = states.states();
    let image: Option<Vec<usize>> = masks.iter().map(|&m| states.index_of(g.apply_mask(m, n))).collect();
    let Some(image) = image else { return false };
    (0..masks.len()).all(|i| (0..masks.len()).all(|j| t.get(i, j) == t.get(image[i], image[j])))
}

/// Equivariance under both generators of `D_n`.
pub fn is_equivariant(t: &TransferMatrix) -> bool {
    [
        DihedralElement { rotation: 1, reflected: false },
        DihedralElement { rotation: 0, reflected: true },
    ]
    .iter()
    .all(|g| is_equivariant_under(t, g))
}

/// `Σ_k tr(B_k^d)` over the explicit blocks `k = 0..n-1`, as a check of the
/// block decomposition against `tr(T^d)`. Each block is evaluated at one
/// fixed root of unity mod `p`; the sum is an integer, so every embedding
/// gives the same residue.
pub fn block_trace_at_one(dec: &OrbitDecomposition, kernel: &ClosedKernel, d: u32) -> Result<BigInt> {
    let n = dec.n;
    let blocks: Vec<FourierBlock> = (0..n).map(|k| fourier_block(dec, kernel, k)).collect::<Result<_>>()?;
    let mut total = BigInt::zero();
    for group in [&blocks[..1], &blocks[1..]] {
        let m = group[0].dimension();
        let rows: Vec<f64> = group
            .iter()
            .flat_map(|b| {
                (0..m).map(move |i| {
                    b.matrix.row(i).iter().map(|e| e.coords().iter().map(|c| magnitude(&c.to_integer())).sum::<f64>()).sum()
                })
            })
            .collect();
        let bits = trace_bound_bits(group.len(), &rows, d as usize);
        let sum = weighted_trace_crt(modp::primes_one_mod(n as u64), &vec![0; m], d as usize, bits, |f| {
            let g = f.root_of_unity(n as u64)?;
            group
                .iter()
                .map(|b| b.matrix.data().iter().map(|e| e.eval_mod(f, g)).collect::<Result<Vec<u64>>>())
                .collect()
        })?;
        total += sum.coeff(0);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::charpoly::charpoly_direct;
    use crate::circulant::{enumerate_states, mask_of, CirculantSpec};
    use crate::transfer::{build_transfer, torus_count};

    fn setup(n: usize) -> (StateSet, ClosedKernel) {
        let spec = CirculantSpec::cycle(n).unwrap();
        (enumerate_states(&spec), spec.kernel())
    }

    #[test]
    fn group_law() {
        let n = 7;
        let all = DihedralElement::all(n);
        for g in &all {
            for h in &all {
                let gh = g.compose(h, n);
                for j in 0..n {
                    assert_eq!(gh.apply(j, n), g.apply(h.apply(j, n), n));
                }
            }
            assert_eq!(g.compose(&g.inverse(n), n), DihedralElement::identity());
        }
    }

    #[test]
    fn c7_orbits() {
        let (states, _) = setup(7);
        let dih = dihedral_orbits(&states).unwrap();
        assert_eq!(dih.len(), 5);
        assert_eq!(
            dih.representatives(),
            vec![0, mask_of(&[0], 7), mask_of(&[0, 2], 7), mask_of(&[0, 3], 7), mask_of(&[0, 2, 4], 7)]
        );
        assert_eq!(dih.sizes(), vec![1, 7, 7, 7, 7]);
        assert_eq!(rotation_orbits(&states).unwrap().len(), 5);
    }

    #[test]
    fn c7_orbit_matrix() {
        let (states, kernel) = setup(7);
        let orb = orbit_transfer(&dihedral_orbits(&states).unwrap(), &kernel).unwrap();
        let expected: Vec<Vec<i64>> = vec![
            vec![1, 7, 7, 7, 7],
            vec![1, 4, 2, 1, 0],
            vec![1, 2, 0, 0, 0],
            vec![1, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
        ];
        let counts = orb.counts();
        for (i, row) in expected.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(counts[(i, j)], BigInt::from(v), "entry ({i},{j})");
            }
        }
        assert!(!counts.is_symmetric());
        assert!(orb.is_size_symmetric());
        let chi = charpoly_direct(counts).unwrap();
        assert_eq!(chi, IntPoly::from_i64s(&[0, 42, 47, -29, -5, 1]));
    }

    #[test]
    fn chiral_orbits_appear_at_eleven() {
        let (states, _) = setup(11);
        let m = multiplicity_accounting(&states).unwrap();
        assert_eq!(m.states, 199);
        assert_eq!(m.chiral_rotation_orbits, 6);
        assert_eq!(m.m_chi1, 3);
        assert!(m.consistent);
        let (states, _) = setup(13);
        let m = multiplicity_accounting(&states).unwrap();
        assert_eq!(m.chiral_rotation_orbits, 20);
        assert!(m.consistent);
    }

    #[test]
    fn block_traces_reproduce_full_traces() {
        for n in [5, 7] {
            let (states, kernel) = setup(n);
            let t = build_transfer(&states, &kernel).unwrap();
            assert!(is_equivariant(&t));
            let rot = rotation_orbits(&states).unwrap();
            for d in 1..=4 {
                let full = torus_count(&t, d as usize).unwrap();
                assert_eq!(block_trace_at_one(&rot, &kernel, d).unwrap(), full);
                // Exact route over Q(ω).
                let mut acc = Cyclotomic::zero();
                for k in 0..n {
                    acc = acc + fourier_block(&rot, &kernel, k).unwrap().matrix.trace_of_power(d).unwrap();
                }
                assert_eq!(acc, Cyclotomic::rational(full.into()));
            }
        }
    }

    #[test]
    fn blocks_are_galois_conjugates() {
        let (states, kernel) = setup(11);
        let rot = rotation_orbits(&states).unwrap();
        let b1 = fourier_block(&rot, &kernel, 1).unwrap();
        for k in 2..11 {
            let bk = fourier_block(&rot, &kernel, k).unwrap();
            assert_eq!(bk.matrix, b1.matrix.map(|e| e.galois(k as i64)));
        }
    }

    #[test]
    fn sector_split_matches_exact_blocks() {
        let (states, kernel) = setup(5);
        let t = build_transfer(&states, &kernel).unwrap();
        let wt = crate::transfer::WeightedTransfer::new(&t);
        let rot = rotation_orbits(&states).unwrap();
        for d in 2..=5 {
            let s = sector_traces(&rot, &kernel, d).unwrap();
            let mut acc = CycPoly::zero();
            for k in 1..5 {
                acc = &acc + &fourier_block(&rot, &kernel, k).unwrap().weighted().trace_of_power(d as u32).unwrap();
            }
            let exact: Vec<BigInt> = acc.coeffs().iter().map(|c| c.to_rational().unwrap().to_integer()).collect();
            assert_eq!(s.cyclotomic, IntPoly::new(exact));
            assert_eq!(s.total(), crate::transfer::torus_polynomial(&t, &wt, d).unwrap().coefficients);
        }
    }

    #[test]
    fn c7_sector_split() {
        let (states, kernel) = setup(7);
        let rot = rotation_orbits(&states).unwrap();
        let s = sector_traces(&rot, &kernel, 7).unwrap();
        assert_eq!(s.cyclotomic, IntPoly::from_i64s(&[0, 0, 0, 0, 0, 0, 0, -578, -3402, -5740, -2520]));
        assert_eq!(s.anomalous.coeff(10), BigInt::from(3500));
        assert_eq!(s.total().eval(&BigInt::one()), BigInt::from(1_796_859));
    }

    #[test]
    fn fourier_block_requires_prime_rotation() {
        let (states, kernel) = setup(7);
        let dih = dihedral_orbits(&states).unwrap();
        assert!(fourier_block(&dih, &kernel, 1).is_err());
        let spec = CirculantSpec::cycle(9).unwrap();
        let rot = rotation_orbits(&enumerate_states(&spec)).unwrap();
        assert!(fourier_block(&rot, &spec.kernel(), 1).is_err());
    }
}
