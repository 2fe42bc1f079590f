//! Seeded random directed graphs.
//!
//! Both models draw from ChaCha8 keyed with the seed's eight little-endian bytes
//! followed by 24 zero bytes. Integers in `[0, k)` use Lemire's multiply-shift
//! with rejection on 64-bit draws, and unit floats use the top 53 bits of a draw.
//! Only IEEE-exact float operations (`+`, `*`, `/`, `sqrt`) appear on sampling
//! paths, so a given `(n, l, seed)` yields the same edge list on every platform.
//!
//! Generated graphs label node `i` as `"i"`, list edges in ascending `(u, v)`
//! order and may contain isolated nodes.

use std::collections::HashSet;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Model {
    /// Uniform sample of `l` distinct edges.
    #[value(name = "er")]
    ErdosRenyi,
    /// Static scale-free model with power-law in- and out-degrees.
    #[value(name = "sf")]
    ScaleFree,
}

impl Model {
    pub fn generate(self, n: usize, l: usize, seed: u64, allow_self_loops: bool) -> Result<DirectedGraph> {
        match self {
            Model::ErdosRenyi => erdos_renyi_directed(n, l, seed, allow_self_loops),
            Model::ScaleFree => scale_free_directed(n, l, seed, allow_self_loops),
        }
    }
}

pub(crate) struct Stream(ChaCha8Rng);

impl Stream {
    pub(crate) fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        Stream(ChaCha8Rng::from_seed(key))
    }

    pub(crate) fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let wide = u128::from(self.0.next_u64()) * u128::from(bound);
            if (wide as u64) >= threshold {
                return (wide >> 64) as u64;
            }
        }
    }

    pub(crate) fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn pair_capacity(n: usize, l: usize, allow_self_loops: bool) -> Result<u64> {
    let n64 = n as u64;
    let total = if allow_self_loops { n64.checked_mul(n64) } else { n64.checked_mul(n64.saturating_sub(1)) }
        .ok_or_else(|| Error::Parameter(format!("n = {n} is too large")))?;
    if l == 0 || l as u64 > total {
        return Err(Error::Parameter(format!(
            "edge count must be in 1..={total} for n = {n} ({}), got {l}",
            if allow_self_loops { "self-loops allowed" } else { "no self-loops" }
        )));
    }
    Ok(total)
}

fn assemble(n: usize, mut edges: Vec<(usize, usize)>) -> Result<DirectedGraph> {
    edges.sort_unstable();
    DirectedGraph::from_edges(n, edges)
}

/// `l` distinct edges drawn uniformly without replacement from all ordered
/// pairs (excluding `u -> u` unless `allow_self_loops`), via Floyd's sampler.
pub fn erdos_renyi_directed(n: usize, l: usize, seed: u64, allow_self_loops: bool) -> Result<DirectedGraph> {
    let total = pair_capacity(n, l, allow_self_loops)?;
    let mut rng = Stream::new(seed);
    let mut chosen = HashSet::with_capacity(l);
    let mut edges = Vec::with_capacity(l);
    let n64 = n as u64;
    for j in (total - l as u64)..total {
        let t = rng.below(j + 1);
        let id = if chosen.insert(t) { t } else { chosen.insert(j); j };
        let (u, v) = if allow_self_loops {
            (id / n64, id % n64)
        } else {
            let (u, r) = (id / (n64 - 1), id % (n64 - 1));
            (u, if r < u { r } else { r + 1 })
        };
        edges.push((u as usize, v as usize));
    }
    assemble(n, edges)
}

/// Static scale-free model: the `k`-th ranked node carries weight `1/sqrt(k)`,
/// which gives degree exponent 3. Out-weights rank nodes by index; in-weights
/// rank them by an independent seeded shuffle. Each edge picks its source by
/// out-weight and its target by in-weight, redrawing self-loops (unless
/// allowed) and duplicates.
///
/// Rejection slows down sharply as `l` approaches the number of available pairs.
/// Requests are refused once the redraw budget of `64 * l + 10^6` is spent.
pub fn scale_free_directed(n: usize, l: usize, seed: u64, allow_self_loops: bool) -> Result<DirectedGraph> {
    let total = pair_capacity(n, l, allow_self_loops)?;
    if l as u64 == total {
        let edges = (0..n).flat_map(|u| (0..n).filter(move |&v| allow_self_loops || u != v).map(move |v| (u, v)));
        return assemble(n, edges.collect());
    }

    let mut rng = Stream::new(seed);
    let rank_weight = |k: usize| 1.0 / ((k + 1) as f64).sqrt();
    let out_cumulative = cumulative((0..n).map(rank_weight));

    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        order.swap(i, j);
    }
    let mut in_weight = vec![0.0; n];
    for (rank, &node) in order.iter().enumerate() {
        in_weight[node] = rank_weight(rank);
    }
    let in_cumulative = cumulative(in_weight.into_iter());

    let mut chosen = HashSet::with_capacity(l);
    let mut edges = Vec::with_capacity(l);
    let mut budget = 64 * l as u64 + 1_000_000;
    while edges.len() < l {
        if budget == 0 {
            return Err(Error::Parameter(format!("l = {l} is too dense for the scale-free sampler at n = {n}")));
        }
        budget -= 1;
        let u = pick(&out_cumulative, &mut rng);
        let v = pick(&in_cumulative, &mut rng);
        if (u != v || allow_self_loops) && chosen.insert((u, v)) {
            edges.push((u, v));
        }
    }
    assemble(n, edges)
}

fn cumulative(weights: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut running = 0.0;
    weights
        .map(|w| {
            running += w;
            running
        })
        .collect()
}

fn pick(cumulative: &[f64], rng: &mut Stream) -> usize {
    let total = cumulative[cumulative.len() - 1];
    let x = rng.unit() * total;
    cumulative.partition_point(|&c| c <= x).min(cumulative.len() - 1)
}
