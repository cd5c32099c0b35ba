//! Canonical labelling by individualisation-refinement, isomorphism tests,
//! and automorphism groups for small graphs.
//!
//! The canonical form is the minimum adjacency encoding over all leaf
//! labelings of the refinement tree; discovered automorphisms prune
//! branches that can only repeat already-seen encodings. Isolated vertices
//! are peeled off first and pinned to the last positions, which keeps very
//! symmetric inputs (edgeless graphs) cheap.

use crate::graph::{Digraph, UndirectedGraph};
use alloc::vec::Vec;

/// Canonical form of a graph on up to 25 vertices: the vertex count plus
/// the upper-triangle bits of the canonically relabelled adjacency matrix
/// (column-major, packed little-endian).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    pub n: u8,
    pub words: [u64; 5],
}

const MAX_CANON: usize = 25;

fn encode_rows(rows: &[u64], lab: &[u8], n: usize) -> [u64; 5] {
    let mut words = [0u64; 5];
    let mut bit = 0usize;
    for j in 1..n {
        let vj = lab[j] as usize;
        for &vi in lab.iter().take(j) {
            if rows[vi as usize] >> vj & 1 == 1 {
                words[bit >> 6] |= 1u64 << (bit & 63);
            }
            bit += 1;
        }
    }
    words
}

struct Canonicalizer<'a> {
    rows: &'a [u64],
    n: usize,
    best: Option<([u64; 5], [u8; 32])>,
    /// individualisation path of the best leaf
    best_path: Vec<u8>,
    /// automorphisms of the input discovered from equal-encoding leaves
    gens: Vec<[u8; 32]>,
}

/// Backtracking control: `Unwind(t)` abandons everything below branching
/// level `t` after an automorphism proved the current subtree redundant.
enum Flow {
    Continue,
    Unwind(usize),
}

#[derive(Clone, Copy)]
struct Partition {
    /// `lab[pos]` = vertex at position `pos`
    lab: [u8; 32],
    /// `last[pos]` = true when `pos` ends a cell
    last: [bool; 32],
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut lab = [0u8; 32];
        for (i, slot) in lab.iter_mut().enumerate().take(n) {
            *slot = i as u8;
        }
        let mut last = [false; 32];
        if n > 0 {
            last[n - 1] = true;
        }
        Partition { lab, last }
    }

    fn cells(&self, n: usize) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        let mut start = 0;
        for pos in 0..n {
            if self.last[pos] {
                cells.push((start, pos + 1));
                start = pos + 1;
            }
        }
        cells
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.last[..n].iter().all(|&b| b)
    }
}

impl Canonicalizer<'_> {
    /// Refine to the coarsest equitable partition: split every cell by
    /// neighbour counts towards every cell, sub-cells ordered by ascending
    /// count, until stable.
    fn refine(&self, p: &mut Partition) {
        loop {
            let mut changed = false;
            let cells = p.cells(self.n);
            for &(ss, se) in &cells {
                let mut mask = 0u64;
                for pos in ss..se {
                    mask |= 1u64 << p.lab[pos];
                }
                // split every current cell by counts towards the splitter
                let mut start = 0usize;
                while start < self.n {
                    let mut end = start;
                    while !p.last[end] {
                        end += 1;
                    }
                    end += 1;
                    if end - start >= 2 {
                        let mut counts = [0u8; 32];
                        let mut uniform = true;
                        for pos in start..end {
                            counts[pos] =
                                (self.rows[p.lab[pos] as usize] & mask).count_ones() as u8;
                            if counts[pos] != counts[start] {
                                uniform = false;
                            }
                        }
                        if !uniform {
                            // stable insertion sort of the segment by count
                            for i in start + 1..end {
                                let (cv, lv) = (counts[i], p.lab[i]);
                                let mut j = i;
                                while j > start && counts[j - 1] > cv {
                                    counts[j] = counts[j - 1];
                                    p.lab[j] = p.lab[j - 1];
                                    j -= 1;
                                }
                                counts[j] = cv;
                                p.lab[j] = lv;
                            }
                            for pos in start..end - 1 {
                                if counts[pos] != counts[pos + 1] {
                                    p.last[pos] = true;
                                }
                            }
                            changed = true;
                        }
                    }
                    start = end;
                }
            }
            if !changed {
                return;
            }
        }
    }

    /// Vertices provably equivalent to one of `tried` under the discovered
    /// automorphisms that fix the current individualised prefix pointwise.
    fn orbit_pruned(&self, v: u8, tried: u64, prefix: &[u8]) -> bool {
        if tried == 0 || self.gens.is_empty() {
            return false;
        }
        let fixing: Vec<&[u8; 32]> = self
            .gens
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p as usize] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut orbit = 1u64 << v;
        loop {
            let mut next = orbit;
            for g in &fixing {
                let mut bits = orbit;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= 1u64 << g[u];
                }
            }
            if next & tried != 0 {
                return true;
            }
            if next == orbit {
                return false;
            }
            orbit = next;
        }
    }

    fn search(&mut self, mut p: Partition, prefix: &mut Vec<u8>) -> Flow {
        self.refine(&mut p);
        if p.is_discrete(self.n) {
            let words = encode_rows(self.rows, &p.lab, self.n);
            match &self.best {
                Some((best_words, best_lab)) => {
                    if words < *best_words {
                        self.best = Some((words, p.lab));
                        self.best_path = prefix.clone();
                    } else if words == *best_words {
                        // equal leaves witness an automorphism:
                        // phi(best_lab[i]) = lab[i]
                        let mut phi = [0u8; 32];
                        for i in 0..self.n {
                            phi[best_lab[i] as usize] = p.lab[i];
                        }
                        let identity = (0..self.n).all(|v| phi[v] as usize == v);
                        if !identity {
                            if self.gens.len() < 64 && !self.gens.contains(&phi) {
                                self.gens.push(phi);
                            }
                            // phi fixes the path prefix shared with the best
                            // leaf and maps the first divergent choice onto
                            // the best leaf's (already fully explored)
                            // choice, so everything below that level is
                            // redundant
                            let diverge = prefix
                                .iter()
                                .zip(self.best_path.iter())
                                .position(|(a, b)| a != b);
                            if let Some(t) = diverge {
                                return Flow::Unwind(t);
                            }
                        }
                    }
                }
                None => {
                    self.best = Some((words, p.lab));
                    self.best_path = prefix.clone();
                }
            }
            return Flow::Continue;
        }
        // first smallest non-singleton cell
        let cells = p.cells(self.n);
        let &(start, end) = cells
            .iter()
            .filter(|&&(s, e)| e - s >= 2)
            .min_by_key(|&&(s, e)| (e - s, s))
            .unwrap();
        let mut candidates: Vec<u8> = p.lab[start..end].to_vec();
        candidates.sort_unstable();
        let depth = prefix.len();
        let mut tried = 0u64;
        for v in candidates {
            if self.orbit_pruned(v, tried, prefix) {
                tried |= 1u64 << v;
                continue;
            }
            // individualise v at the front of its cell
            let mut child = p;
            let vpos = (start..end).find(|&i| child.lab[i] == v).unwrap();
            child.lab[start..=vpos].rotate_right(1);
            child.last[start] = true;
            prefix.push(v);
            let flow = self.search(child, prefix);
            prefix.pop();
            tried |= 1u64 << v;
            if let Flow::Unwind(t) = flow {
                if t < depth {
                    return Flow::Unwind(t);
                }
            }
        }
        Flow::Continue
    }
}

/// Canonical labelling of adjacency rows (`rows[v]` has bit `u` iff edge
/// `{u,v}`); returns the canonical key and the map `perm[v] = position`.
pub fn canon_rows(rows: &[u64], n: usize) -> (CanonKey, Vec<usize>) {
    assert!(n <= MAX_CANON, "canonical form limited to {MAX_CANON} vertices");
    if n == 0 {
        return (
            CanonKey {
                n: 0,
                words: [0; 5],
            },
            Vec::new(),
        );
    }
    // peel isolated vertices; they take the final positions
    let isolated: Vec<usize> = (0..n).filter(|&v| rows[v] == 0).collect();
    if !isolated.is_empty() && isolated.len() < n {
        let kept: Vec<usize> = (0..n).filter(|&v| rows[v] != 0).collect();
        let mut sub_rows = alloc::vec![0u64; kept.len()];
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                if rows[u] >> v & 1 == 1 {
                    sub_rows[i] |= 1u64 << j;
                }
            }
        }
        let (sub_key, sub_perm) = canon_rows(&sub_rows, kept.len());
        let mut perm = alloc::vec![usize::MAX; n];
        for (i, &u) in kept.iter().enumerate() {
            perm[u] = sub_perm[i];
        }
        for (off, &v) in isolated.iter().enumerate() {
            perm[v] = kept.len() + off;
        }
        // isolated vertices add no bits: the encoding is just padded
        return (
            CanonKey {
                n: n as u8,
                words: sub_key.words,
            },
            perm,
        );
    }
    let mut canon = Canonicalizer {
        rows,
        n,
        best: None,
        best_path: Vec::new(),
        gens: Vec::new(),
    };
    let mut prefix = Vec::new();
    canon.search(Partition::unit(n), &mut prefix);
    let (words, lab) = canon.best.unwrap();
    let mut perm = alloc::vec![0usize; n];
    for pos in 0..n {
        perm[lab[pos] as usize] = pos;
    }
    (CanonKey { n: n as u8, words }, perm)
}

fn graph_rows(g: &UndirectedGraph) -> Vec<u64> {
    assert!(g.n() <= MAX_CANON);
    (0..g.n())
        .map(|v| {
            g.neighbours(v)
                .iter()
                .fold(0u64, |acc, u| acc | 1u64 << u)
        })
        .collect()
}

/// Canonical key plus the relabelling map achieving it.
pub fn canonical_form(g: &UndirectedGraph) -> (CanonKey, Vec<usize>) {
    canon_rows(&graph_rows(g), g.n())
}

pub fn canonical_key(g: &UndirectedGraph) -> CanonKey {
    canonical_form(g).0
}

pub fn graphs_isomorphic(a: &UndirectedGraph, b: &UndirectedGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b)
}

/// The full automorphism group by scanning all `n!` bijections; limited to
/// 9 vertices, which covers every orientation-deduplication site.
pub fn automorphism_group(g: &UndirectedGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 9, "automorphism scan limited to n <= 9");
    let rows = graph_rows(g);
    let mut auts = Vec::new();
    'perm: for perm in crate::brute::permutations(n) {
        for u in 0..n {
            for v in (u + 1)..n {
                if (rows[u] >> v & 1) != (rows[perm[u]] >> perm[v] & 1) {
                    continue 'perm;
                }
            }
        }
        auts.push(perm);
    }
    auts
}

/// Canonical key for an oriented digraph on up to 11 vertices: canonical
/// underlying key plus the minimum arc encoding over the automorphisms of
/// the canonically labelled underlying graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DigraphKey {
    pub underlying: CanonKey,
    pub arcs: [u64; 2],
}

fn encode_arcs(d: &Digraph) -> [u64; 2] {
    let n = d.n();
    let mut words = [0u64; 2];
    for (u, v) in d.arcs() {
        let bit = u * n + v;
        words[bit >> 6] |= 1u64 << (bit & 63);
    }
    words
}

pub fn digraph_canonical_key(d: &Digraph) -> DigraphKey {
    let n = d.n();
    assert!(n <= 11, "digraph canonical key limited to n <= 11");
    let g = d.underlying_graph();
    let (under, perm) = canonical_form(&g);
    let d0 = d.relabel(&perm);
    let g0 = g.relabel(&perm);
    let mut best: Option<[u64; 2]> = None;
    for aut in automorphism_group(&g0) {
        let enc = encode_arcs(&d0.relabel(&aut));
        if best.is_none_or(|b| enc < b) {
            best = Some(enc);
        }
    }
    DigraphKey {
        underlying: under,
        arcs: best.unwrap_or([0; 2]),
    }
}

pub fn digraphs_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.n() == b.n()
        && a.arc_count() == b.arc_count()
        && digraph_canonical_key(a) == digraph_canonical_key(b)
}
