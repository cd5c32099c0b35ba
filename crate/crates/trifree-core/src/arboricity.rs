//! Exact arboricity decision by edge-partition backtracking.

use crate::graph::UndirectedGraph;
use alloc::vec;
use alloc::vec::Vec;

/// A partition of the edge set into forests, witnessing `arboricity <= k`.
#[derive(Debug, Clone)]
pub struct ForestPartition {
    /// `forests[c]` lists the edges assigned to forest `c`.
    pub forests: Vec<Vec<(usize, usize)>>,
}

/// Union-find over vertices, one instance per forest colour.
#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    edges: &[(usize, usize)],
    idx: usize,
    k: usize,
    opened: usize,
    n: usize,
    forests: &mut [Dsu],
    sizes: &mut [usize],
    assignment: &mut Vec<usize>,
) -> bool {
    if idx == edges.len() {
        return true;
    }
    // a forest on n vertices holds at most n-1 edges
    let capacity: usize = sizes.iter().take(k).map(|&s| (n - 1) - s).sum();
    if capacity < edges.len() - idx {
        return false;
    }
    let (u, v) = edges[idx];
    // opening colours in index order removes permutation symmetry
    let limit = (opened + 1).min(k);
    for c in 0..limit {
        let snapshot = forests[c].clone();
        if forests[c].union(u, v) {
            sizes[c] += 1;
            assignment.push(c);
            if search(edges, idx + 1, k, opened.max(c + 1), n, forests, sizes, assignment) {
                return true;
            }
            assignment.pop();
            sizes[c] -= 1;
        }
        forests[c] = snapshot;
    }
    false
}

/// Exact decision: can the edges be partitioned into at most `k` forests?
/// Returns the partition when the answer is yes.
///
/// The density bound `m <= k (n - 1)` prunes, but the verdict always comes
/// from the exhaustive partition search. Adequate for n up to about 20.
pub fn arboricity_at_most(g: &UndirectedGraph, k: usize) -> Option<ForestPartition> {
    let edges = g.edges();
    if edges.is_empty() {
        return Some(ForestPartition {
            forests: vec![Vec::new(); k],
        });
    }
    if k == 0 {
        return None;
    }
    let n = g.n();
    if edges.len() > k * (n - 1) {
        return None;
    }
    let mut forests = vec![Dsu::new(n); k];
    let mut sizes = vec![0usize; k];
    let mut assignment = Vec::with_capacity(edges.len());
    if search(&edges, 0, k, 0, n, &mut forests, &mut sizes, &mut assignment) {
        let mut out = vec![Vec::new(); k];
        for (e, &c) in assignment.iter().enumerate() {
            out[c].push(edges[e]);
        }
        Some(ForestPartition { forests: out })
    } else {
        None
    }
}

/// Smallest `k` with `arboricity_at_most(g, k)`.
pub fn arboricity(g: &UndirectedGraph) -> usize {
    (0..).find(|&k| arboricity_at_most(g, k).is_some()).unwrap()
}

/// Check that a claimed partition covers every edge exactly once and that
/// each class is a forest.
pub fn verify_forest_partition(g: &UndirectedGraph, p: &ForestPartition) -> bool {
    let mut seen = alloc::collections::BTreeSet::new();
    for forest in &p.forests {
        let mut dsu = Dsu::new(g.n());
        for &(u, v) in forest {
            if !g.has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
            if !dsu.union(u, v) {
                return false; // cycle within one class
            }
        }
    }
    seen.len() == g.edge_count()
}
