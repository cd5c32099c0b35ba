//! Seeded, splittable randomness and random graph models.
//!
//! All randomness flows through [`SeededRng`], a thin wrapper over
//! `ChaCha12`: the algorithm identity is fixed so experiments replicate
//! bit-for-bit across implementations and platforms. Range reduction uses
//! the widening-multiply method; splitting draws a fresh 64-bit seed for the
//! child stream.

use crate::graph::{Digraph, UndirectedGraph};
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

/// Deterministic PRNG; every generator in this crate owns its state per call.
#[derive(Clone, Debug)]
pub struct SeededRng {
    rng: ChaCha12Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            rng: ChaCha12Rng::seed_from_u64(seed),
        }
    }

    /// Split off an independent child generator.
    pub fn derive(&mut self) -> SeededRng {
        SeededRng::new(self.next_u64())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform draw from `0..n` (widening multiply of one 64-bit draw).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// Bernoulli draw: the top 53 bits of one draw against `p`.
    pub fn chance(&mut self, p: f64) -> bool {
        debug_assert!((0.0..=1.0).contains(&p));
        let u = (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        u < p
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, slice: &mut [T]) {
        for i in (1..slice.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            slice.swap(i, j);
        }
    }
}

/// Erdős–Rényi `G(n, p)`: each pair is an edge independently with
/// probability `p`. Pairs are visited in colex order `(0,1),(0,2),(1,2),...`
pub fn random_gnp(n: usize, p: f64, mut rng: SeededRng) -> UndirectedGraph {
    assert!((0.0..=1.0).contains(&p), "p must lie in [0,1]");
    let mut g = UndirectedGraph::new(n);
    for v in 1..n {
        for u in 0..v {
            if rng.chance(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniformly random orientation: each edge oriented independently with a
/// fair coin, edges visited in colex order.
pub fn random_orientation(g: &UndirectedGraph, mut rng: SeededRng) -> Digraph {
    let mut d = Digraph::new(g.n());
    for v in 1..g.n() {
        for u in 0..v {
            if g.has_edge(u, v) {
                if rng.chance(0.5) {
                    d.add_arc(u, v);
                } else {
                    d.add_arc(v, u);
                }
            }
        }
    }
    d
}

/// Random oriented graph: a uniform orientation of `G(n, p)`.
pub fn random_oriented(n: usize, p: f64, mut rng: SeededRng) -> Digraph {
    let g = random_gnp(n, p, rng.derive());
    random_orientation(&g, rng)
}

/// Random digraph where each *ordered* pair is an arc independently with
/// probability `p`; digons can occur.
pub fn random_digraph(n: usize, p: f64, mut rng: SeededRng) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.chance(p) {
                d.add_arc(u, v);
            }
        }
    }
    d
}

/// Uniformly random tournament.
pub fn random_tournament(n: usize, mut rng: SeededRng) -> Digraph {
    let mut d = Digraph::new(n);
    for v in 1..n {
        for u in 0..v {
            if rng.chance(0.5) {
                d.add_arc(u, v);
            } else {
                d.add_arc(v, u);
            }
        }
    }
    d
}

/// Random triangle-free graph: pairs are visited in a seeded random order;
/// each becomes an edge with probability `p` unless it would close a
/// triangle.
pub fn random_triangle_free(n: usize, p: f64, mut rng: SeededRng) -> UndirectedGraph {
    let mut pairs = crate::brute::pair_list(n);
    rng.shuffle(&mut pairs);
    let mut g = UndirectedGraph::new(n);
    for (u, v) in pairs {
        if rng.chance(p) && !g.neighbours(u).intersects(g.neighbours(v)) {
            g.add_edge(u, v);
        }
    }
    g
}
