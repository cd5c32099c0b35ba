//! Brute-force reference implementations.
//!
//! Everything here trades time for obviousness: exhaustive scans over
//! subsets, assignments or permutations, with no pruning beyond feasibility.
//! These are the oracles the test suites compare the real solvers against;
//! they deliberately share no code with the optimized paths.

use crate::bitset::VertexSet;
use crate::graph::{Digraph, UndirectedGraph};
use alloc::vec;
use alloc::vec::Vec;

/// Generate all permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut a, &mut out);
    out
}

/// Acyclicity by definition: some ordering of `s` has all arcs forward.
///
/// Factorial in `|s|`; usable for `|s| <= 8`.
pub fn is_acyclic_by_orderings(d: &Digraph, s: &VertexSet) -> bool {
    let verts = s.to_vec();
    if verts.len() <= 1 {
        return true;
    }
    'perm: for perm in permutations(verts.len()) {
        // perm[i] = position of verts[i]
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if d.has_arc(u, v) && perm[i] > perm[j] {
                    continue 'perm;
                }
            }
        }
        return true;
    }
    false
}

/// Maximum acyclic induced set by scanning all `2^n` subsets.
pub fn acyclic_number(d: &Digraph) -> (usize, VertexSet) {
    let n = d.n();
    assert!(n <= 24, "brute acyclic_number limited to n <= 24");
    let mut best = 0usize;
    let mut best_set = VertexSet::EMPTY;
    for mask in 0u32..(1u32 << n) {
        if (mask.count_ones() as usize) <= best {
            continue;
        }
        let s = VertexSet::from_iter((0..n).filter(|&v| mask >> v & 1 == 1));
        if d.is_acyclic_induced(&s) {
            best = s.len();
            best_set = s;
        }
    }
    (best, best_set)
}

/// Maximum independent set by scanning all `2^n` subsets.
pub fn independence_number(g: &UndirectedGraph) -> (usize, VertexSet) {
    let n = g.n();
    assert!(n <= 24, "brute independence_number limited to n <= 24");
    let mut best = 0usize;
    let mut best_set = VertexSet::EMPTY;
    'mask: for mask in 0u32..(1u32 << n) {
        if (mask.count_ones() as usize) <= best {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if g.has_edge(u, v) {
                    continue 'mask;
                }
            }
        }
        best = verts.len();
        best_set = VertexSet::from_iter(verts);
    }
    (best, best_set)
}

fn assignments(n: usize, k: usize) -> AssignmentIter {
    AssignmentIter {
        n,
        k,
        current: vec![0; n],
        done: n == 0,
        first: true,
    }
}

struct AssignmentIter {
    n: usize,
    k: usize,
    current: Vec<usize>,
    done: bool,
    first: bool,
}

impl Iterator for AssignmentIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            if self.first && self.n == 0 {
                self.first = false;
                return Some(Vec::new());
            }
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.current.clone());
        }
        let mut i = 0;
        loop {
            if i == self.n {
                self.done = true;
                return None;
            }
            self.current[i] += 1;
            if self.current[i] < self.k {
                break;
            }
            self.current[i] = 0;
            i += 1;
        }
        Some(self.current.clone())
    }
}

/// Is there a proper colouring with exactly `k` colours? All `k^n`
/// assignments are scanned.
pub fn is_k_colourable(g: &UndirectedGraph, k: usize) -> bool {
    let n = g.n();
    'outer: for a in assignments(n, k) {
        for u in 0..n {
            for v in g.neighbours(u).iter() {
                if v > u && a[u] == a[v] {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    n == 0
}

pub fn chromatic_number(g: &UndirectedGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..).find(|&k| is_k_colourable(g, k)).unwrap()
}

/// Is there a dicolouring with `k` colours? All `k^n` assignments scanned,
/// acyclicity of each class checked by ordering existence.
pub fn is_k_dicolourable(d: &Digraph, k: usize) -> bool {
    let n = d.n();
    'outer: for a in assignments(n, k) {
        for colour in 0..k {
            let class = VertexSet::from_iter((0..n).filter(|&v| a[v] == colour));
            if class.len() > 8 {
                // ordering check is factorial; fall back to peeling
                if !d.is_acyclic_induced(&class) {
                    continue 'outer;
                }
            } else if !is_acyclic_by_orderings(d, &class) {
                continue 'outer;
            }
        }
        return true;
    }
    n == 0
}

pub fn dichromatic_number(d: &Digraph) -> usize {
    if d.n() == 0 {
        return 0;
    }
    (1..).find(|&k| is_k_dicolourable(d, k)).unwrap()
}

/// Maximum arc count of a directed linear forest, scanning all `2^m` arc
/// subsets. Usable for `m <= 22`.
pub fn max_linear_forest(d: &Digraph) -> usize {
    let arcs = d.arcs();
    let m = arcs.len();
    assert!(m <= 22, "brute max_linear_forest limited to m <= 22");
    let n = d.n();
    let mut best = 0usize;
    'mask: for mask in 0u32..(1u32 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut sub = Digraph::new(n);
        for (i, &(u, v)) in arcs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                indeg[v] += 1;
                outdeg[u] += 1;
                if indeg[v] > 1 || outdeg[u] > 1 {
                    continue 'mask;
                }
                sub.add_arc(u, v);
            }
        }
        if sub.is_acyclic() {
            best = size;
        }
    }
    best
}

/// Largest value of `ceil(e_H / (v_H - 1))` over all induced subgraphs with
/// at least two vertices: the Nash-Williams arboricity formula evaluated by
/// exhaustive subset scan.
pub fn nash_williams_arboricity(g: &UndirectedGraph) -> usize {
    let n = g.n();
    assert!(n <= 16, "brute arboricity scan limited to n <= 16");
    let mut best = 0usize;
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let s = VertexSet::from_iter((0..n).filter(|&v| mask >> v & 1 == 1));
        let e = g.edges_within(&s);
        let v = s.len();
        best = best.max(e.div_ceil(v - 1));
    }
    best
}

/// Exact binomial lower-tail probability `P[X <= k]` for `X ~ B(n, p)`.
pub fn binomial_cdf(n: u64, p: f64, k: u64) -> f64 {
    let mut total = 0.0;
    for i in 0..=k.min(n) {
        // C(n, i) incrementally in f64; fine for n <= 60.
        let mut c = 1.0;
        for j in 0..i {
            c *= (n - j) as f64 / (j + 1) as f64;
        }
        total += c * libm::pow(p, i as f64) * libm::pow(1.0 - p, (n - i) as f64);
    }
    total
}

/// Graph isomorphism by scanning all `n!` bijections.
pub fn graphs_isomorphic(a: &UndirectedGraph, b: &UndirectedGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    assert!(n <= 9, "brute isomorphism limited to n <= 9");
    'perm: for perm in permutations(n) {
        for u in 0..n {
            for v in (u + 1)..n {
                if a.has_edge(u, v) != b.has_edge(perm[u], perm[v]) {
                    continue 'perm;
                }
            }
        }
        return true;
    }
    false
}

/// Digraph isomorphism by scanning all `n!` bijections.
pub fn digraphs_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    if a.n() != b.n() || a.arc_count() != b.arc_count() {
        return false;
    }
    let n = a.n();
    assert!(n <= 9, "brute isomorphism limited to n <= 9");
    'perm: for perm in permutations(n) {
        for u in 0..n {
            for v in 0..n {
                if u != v && a.has_arc(u, v) != b.has_arc(perm[u], perm[v]) {
                    continue 'perm;
                }
            }
        }
        return true;
    }
    false
}

/// All labelled graphs on `n` vertices, as edge masks over the pairs
/// `(0,1),(0,2),(1,2),(0,3),...` (colex order).
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> UndirectedGraph {
    let mut g = UndirectedGraph::new(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    g
}
