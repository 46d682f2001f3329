//! Brute-force independence polynomials on explicit graphs, independent of
//! the transfer machinery.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::circulant::{build_strong_stack, compatible, enumerate_states, Boundary, CirculantSpec, ExplicitGraph};
use crate::error::{Error, Result};
use crate::IntPoly;

pub const DEFAULT_VERTEX_CAP: usize = 50;

#[derive(Clone, Debug, Serialize)]
pub struct OraclePolynomial {
    pub coefficients: IntPoly,
    pub vertex_count: usize,
    pub elapsed: Duration,
}

/// Vertices in degeneracy order: repeatedly remove a vertex of minimum
/// remaining degree.
pub fn degeneracy_order(g: &ExplicitGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut alive: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut order = Vec::with_capacity(n);
    while alive != 0 {
        let v = (0..n)
            .filter(|&v| alive >> v & 1 == 1)
            .min_by_key(|&v| (adj[v] & alive).count_ones())
            .expect("alive set is nonempty");
        order.push(v);
        alive &= !(1u128 << v);
    }
    order
}

struct Search {
    adj: Vec<u128>,
    counts: Vec<u128>,
}

impl Search {
    /// Counts independent subsets of `cand` by size, `chosen` already picked.
    fn run(&mut self, cand: u128, chosen: usize) {
        if cand == 0 {
            self.counts[chosen] += 1;
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1u128 << v);
        if self.adj[v] & rest == 0 {
            // `v` is free: every set below either contains it or not.
            let before = self.counts.clone();
            self.run(rest, chosen);
            let len = self.counts.len();
            for k in (0..len).rev() {
                let gained = self.counts[k] - before[k];
                if gained > 0 && k + 1 < len {
                    self.counts[k + 1] += gained;
                }
            }
            return;
        }
        self.run(rest, chosen);
        self.run(rest & !self.adj[v], chosen + 1);
    }
}

/// Exhaustive branch-and-count. Vertices are relabeled into degeneracy
/// order so that branching always takes the lowest remaining label.
pub fn brute_independence_polynomial(g: &ExplicitGraph, cap: usize) -> Result<OraclePolynomial> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded(format!("{n} vertices exceed the oracle cap of {cap}")));
    }
    let start = Instant::now();
    let order = degeneracy_order(g);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let relabeled = g.permuted(&pos)?;
    let mut search = Search { adj: relabeled.adjacency().to_vec(), counts: vec![0; n + 2] };
    let all: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    search.run(all, 0);
    let coefficients = IntPoly::new(search.counts.iter().map(|&c| BigInt::from(c)).collect());
    Ok(OraclePolynomial { coefficients, vertex_count: n, elapsed: start.elapsed() })
}

#[derive(Clone, Debug, Serialize)]
pub struct LayeredCheck {
    pub equal: bool,
    pub configurations: BigInt,
    pub layered: IntPoly,
    pub oracle: IntPoly,
}

/// Counts layer sequences `(S_1, …, S_d)` of independent sets with
/// consecutive compatibility (cyclically for the torus) and compares the
/// weight distribution with the oracle on the explicit stacked graph.
pub fn layered_equivalence_check(spec: &CirculantSpec, d: usize, boundary: Boundary, cap: usize) -> Result<LayeredCheck> {
    if d == 0 {
        return Err(Error::InvalidArgument("need at least one layer".into()));
    }
    let graph = build_strong_stack(spec, d, boundary)?;
    let oracle = brute_independence_polynomial(&graph, cap)?;

    let states = enumerate_states(spec);
    let kernel = spec.kernel();
    let masks = states.states();
    let ok: Vec<Vec<bool>> = masks.iter().map(|&a| masks.iter().map(|&b| compatible(a, b, &kernel)).collect()).collect();
    let wrap = boundary == Boundary::Torus && d >= 3;
    let max_weight = states.weights().iter().copied().max().unwrap_or(0) as usize * d;
    let weights = states.weights();

    struct Walk<'a> {
        d: usize,
        ok: &'a [Vec<bool>],
        weights: &'a [u32],
        wrap: bool,
        counts: Vec<u128>,
    }
    impl Walk<'_> {
        fn step(&mut self, layer: usize, first: usize, prev: usize, weight: usize) {
            if layer == self.d {
                if !self.wrap || self.ok[prev][first] {
                    self.counts[weight] += 1;
                }
                return;
            }
            for next in 0..self.ok.len() {
                if self.ok[prev][next] {
                    self.step(layer + 1, first, next, weight + self.weights[next] as usize);
                }
            }
        }
    }
    let mut w = Walk { d, ok: &ok, weights, wrap, counts: vec![0u128; max_weight + 1] };
    for (first, &wt) in weights.iter().enumerate() {
        w.step(1, first, first, wt as usize);
    }
    let counts = w.counts;
    let layered = IntPoly::new(counts.iter().map(|&c| BigInt::from(c)).collect());
    let configurations = counts.iter().map(|&c| BigInt::from(c)).sum();
    Ok(LayeredCheck { equal: layered == oracle.coefficients, configurations, layered, oracle: oracle.coefficients })
}
