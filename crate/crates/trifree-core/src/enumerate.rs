//! Triangle-free graph enumeration (one representative per isomorphism
//! class) and orientation enumeration with isomorph rejection.
//!
//! Internal generation works by vertex augmentation: every triangle-free
//! graph on `n` vertices arises from one on `n - 1` by attaching a new
//! vertex to an independent set. Children are deduplicated globally by
//! canonical key per level. Supported up to 12 vertices; larger instances
//! are ingested from external graph6 streams by the front end.

use crate::canon::{self, CanonKey};
use crate::graph::{Digraph, UndirectedGraph};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// Internal generation bound; enough for the whole scaled sweep.
pub const MAX_INTERNAL_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateError {
    UnsupportedSize(usize),
}

impl core::fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumerateError::UnsupportedSize(n) => write!(
                f,
                "internal enumeration supports n <= {MAX_INTERNAL_N}, got {n}"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EnumerateError {}

/// Compact canonical key for graphs on at most 16 vertices.
fn key_u128(key: &CanonKey) -> u128 {
    debug_assert!(key.n as usize <= 16);
    key.words[0] as u128 | (key.words[1] as u128) << 64
}

/// Rebuild a graph from its 16-vertex compact key (upper-triangle bits,
/// column-major).
pub fn graph_from_key(n: usize, key: u128) -> UndirectedGraph {
    let mut g = UndirectedGraph::new(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if key >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    g
}

/// All independent sets of the graph given by bit rows, as vertex masks
/// (the empty set included).
fn independent_sets(rows: &[u64], n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(rows: &[u64], candidates: u64, current: u64, out: &mut Vec<u64>) {
        out.push(current);
        let mut bits = candidates;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            // only extend with higher-index vertices to visit each set once
            let higher = !((1u64 << v) | ((1u64 << v) - 1));
            rec(rows, candidates & higher & !rows[v], current | 1 << v, out);
        }
    }
    rec(rows, if n == 64 { !0 } else { (1u64 << n) - 1 }, 0, &mut out);
    out
}

/// Canonical keys of every triangle-free graph on exactly `n` vertices
/// (including disconnected ones and isolated vertices), sorted.
pub fn triangle_free_keys(n: usize) -> Result<Vec<u128>, EnumerateError> {
    Ok(triangle_free_levels(n)?.pop().expect("one level per order"))
}

/// Keys for every order `1..=n_max` in one pass (`levels[k-1]` holds the
/// graphs on `k` vertices); the sweep consumes all orders anyway.
pub fn triangle_free_levels(n_max: usize) -> Result<Vec<Vec<u128>>, EnumerateError> {
    if n_max > MAX_INTERNAL_N {
        return Err(EnumerateError::UnsupportedSize(n_max));
    }
    if n_max == 0 {
        return Ok(alloc::vec![alloc::vec![0u128]]);
    }
    let mut levels: Vec<Vec<u128>> = alloc::vec![alloc::vec![0u128]];
    for size in 2..=n_max {
        let level = next_level(levels.last().unwrap(), size);
        levels.push(level);
    }
    Ok(levels)
}

/// One augmentation step: the sorted, deduplicated canonical keys of every
/// triangle-free graph on `size` vertices obtainable from the given
/// parents on `size - 1`. Exposed so front ends can partition the parent
/// list across workers; results from disjoint chunks merge by sort+dedup.
pub fn next_level(parents: &[u128], size: usize) -> Vec<u128> {
    let mut children: BTreeSet<u128> = BTreeSet::new();
    let mut rows = alloc::vec![0u64; size];
    for &parent in parents {
        // decode the parent's rows
        for r in rows.iter_mut() {
            *r = 0;
        }
        let mut bit = 0usize;
        for j in 1..size - 1 {
            for i in 0..j {
                if parent >> bit & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        // attach the new vertex to each independent set: exactly the
        // extensions that keep the graph triangle-free
        let new = size - 1;
        for nbrs in independent_sets(&rows[..new], new) {
            rows[new] = nbrs;
            let mut bits = nbrs;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows[v] |= 1 << new;
            }
            let (key, _) = canon::canon_rows(&rows, size);
            children.insert(key_u128(&key));
            let mut bits = nbrs;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows[v] &= !(1 << new);
            }
        }
    }
    children.into_iter().collect()
}

/// One representative per isomorphism class of triangle-free graphs on `n`
/// vertices with minimum degree at least `min_deg`.
pub fn enumerate_triangle_free(
    n: usize,
    min_deg: usize,
) -> Result<Vec<UndirectedGraph>, EnumerateError> {
    let keys = triangle_free_keys(n)?;
    Ok(keys
        .into_iter()
        .map(|k| graph_from_key(n, k))
        .filter(|g| g.min_degree() >= min_deg || n == 0)
        .collect())
}

/// Canonical keys of *all* graphs on `n` vertices (no triangle
/// restriction); the new vertex attaches to arbitrary subsets instead of
/// independent sets. Kept small (`n <= 8`): this exists for oracle-style
/// exhaustive checks, not production enumeration.
pub fn all_graph_keys(n: usize) -> Result<Vec<u128>, EnumerateError> {
    if n > 8 {
        return Err(EnumerateError::UnsupportedSize(n));
    }
    if n == 0 {
        return Ok(alloc::vec![0u128]);
    }
    let mut level: Vec<u128> = alloc::vec![0u128];
    for size in 2..=n {
        let mut children: BTreeSet<u128> = BTreeSet::new();
        let mut rows = alloc::vec![0u64; size];
        for &parent in &level {
            for r in rows.iter_mut() {
                *r = 0;
            }
            let mut bit = 0usize;
            for j in 1..size - 1 {
                for i in 0..j {
                    if parent >> bit & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                    bit += 1;
                }
            }
            let new = size - 1;
            for nbrs in 0u64..(1u64 << new) {
                rows[new] = nbrs;
                let mut bits = nbrs;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    rows[v] |= 1 << new;
                }
                let (key, _) = canon::canon_rows(&rows, size);
                children.insert(key_u128(&key));
                let mut bits = nbrs;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    rows[v] &= !(1 << new);
                }
            }
        }
        level = children.into_iter().collect();
    }
    Ok(level)
}

/// Iterator over all `2^m` orientations of a graph.
pub struct Orientations<'a> {
    g: &'a UndirectedGraph,
    edges: Vec<(usize, usize)>,
    next_mask: u64,
    done: bool,
}

pub fn orientations(g: &UndirectedGraph) -> Orientations<'_> {
    let edges = g.edges();
    assert!(edges.len() <= 62, "orientation enumeration needs m <= 62");
    Orientations {
        g,
        edges,
        next_mask: 0,
        done: false,
    }
}

/// Orientation of `g` given by an edge mask: bit `i` set orients edge `i`
/// (in colex order) from the lower to the higher endpoint.
pub fn orient_by_mask(edges: &[(usize, usize)], n: usize, mask: u64) -> Digraph {
    let mut d = Digraph::new(n);
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            d.add_arc(u, v);
        } else {
            d.add_arc(v, u);
        }
    }
    d
}

impl Iterator for Orientations<'_> {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.done {
            return None;
        }
        let d = orient_by_mask(&self.edges, self.g.n(), self.next_mask);
        if self.next_mask == (1u64 << self.edges.len()) - 1 {
            self.done = true;
        } else {
            self.next_mask += 1;
        }
        Some(d)
    }
}

/// The automorphisms of `g` acting on orientation masks: automorphism `p`
/// maps the orientation mask `m` to the mask of the relabelled digraph.
/// Masks in one orbit describe isomorphic digraphs.
pub struct MaskAction {
    /// `edge_map[a][i]` = edge index that edge `i` lands on under aut `a`
    edge_map: Vec<Vec<usize>>,
    /// whether the edge lands with flipped endpoints
    flip: Vec<Vec<bool>>,
    pub edge_count: usize,
}

impl MaskAction {
    pub fn new(g: &UndirectedGraph) -> Self {
        let edges = g.edges();
        let mut index = alloc::collections::BTreeMap::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            index.insert((u, v), i);
        }
        let auts = canon::automorphism_group(g);
        let mut edge_map = Vec::with_capacity(auts.len());
        let mut flip = Vec::with_capacity(auts.len());
        for aut in &auts {
            let mut em = Vec::with_capacity(edges.len());
            let mut fl = Vec::with_capacity(edges.len());
            for &(u, v) in &edges {
                let (a, b) = (aut[u], aut[v]);
                let flipped = a > b;
                let key = (a.min(b), a.max(b));
                em.push(index[&key]);
                fl.push(flipped);
            }
            edge_map.push(em);
            flip.push(fl);
        }
        MaskAction {
            edge_map,
            flip,
            edge_count: edges.len(),
        }
    }

    pub fn group_size(&self) -> usize {
        self.edge_map.len()
    }

    fn apply(&self, aut: usize, mask: u64) -> u64 {
        let mut out = 0u64;
        for i in 0..self.edge_count {
            let bit = mask >> i & 1 == 1;
            let target_bit = bit != self.flip[aut][i];
            if target_bit {
                out |= 1 << self.edge_map[aut][i];
            }
        }
        out
    }

    /// Smallest mask in the orbit of `mask`; masks sharing it are exactly
    /// the isomorphic orientations.
    pub fn orbit_min(&self, mask: u64) -> u64 {
        (0..self.group_size())
            .map(|a| self.apply(a, mask))
            .min()
            .unwrap_or(mask)
    }
}

/// One representative per digraph-isomorphism class of orientations of `g`.
pub fn orientation_reps(g: &UndirectedGraph) -> Vec<Digraph> {
    let edges = g.edges();
    assert!(edges.len() <= 24, "orientation class enumeration needs m <= 24");
    let action = MaskAction::new(g);
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        if seen.insert(action.orbit_min(mask)) && action.orbit_min(mask) == mask {
            reps.push(orient_by_mask(&edges, g.n(), mask));
        }
    }
    reps
}
