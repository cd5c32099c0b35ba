//! Graph and digraph representations with per-vertex adjacency bit rows.

use crate::bitset::VertexSet;
use crate::MAX_VERTICES;
use alloc::vec;
use alloc::vec::Vec;

/// Simple undirected graph on vertices `0..n`: no self-loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds MAX_VERTICES");
        UndirectedGraph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Number of edges inside the induced subgraph `G[s]`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|v| self.adj[v].intersect(s).len())
            .sum::<usize>()
            / 2
    }

    /// Induced subgraph on `keep`, relabelled to `0..keep.len()` in ascending
    /// vertex order.
    pub fn induced(&self, keep: &VertexSet) -> UndirectedGraph {
        let verts = keep.to_vec();
        let mut g = UndirectedGraph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> UndirectedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = UndirectedGraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// True if the graph has no clique of size 3.
    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v <= u {
                    continue;
                }
                if self.adj[u].intersects(&self.adj[v]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(&self.adj[v]);
            }
            frontier = next.minus(&seen);
            seen = seen.union(&frontier);
        }
        seen.len() == self.n
    }

    /// Standard 2-connectivity: connected and without articulation vertices.
    ///
    /// Graphs on one or two vertices count as biconnected when connected.
    pub fn is_biconnected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        if self.n <= 2 {
            return true;
        }
        // Articulation points by iterative Tarjan DFS from vertex 0.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut timer = 0usize;
        let mut root_children = 0usize;

        // stack of (vertex, neighbour iterator position)
        let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        disc[0] = timer;
        low[0] = timer;
        timer += 1;
        stack.push((0, self.adj[0].to_vec(), 0));

        while let Some((v, nbrs, idx)) = stack.last_mut() {
            if *idx < nbrs.len() {
                let u = nbrs[*idx];
                *idx += 1;
                if disc[u] == usize::MAX {
                    parent[u] = *v;
                    if *v == 0 {
                        root_children += 1;
                    }
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, self.adj[u].to_vec(), 0));
                } else if u != parent[*v] {
                    low[*v] = low[*v].min(disc[u]);
                }
            } else {
                let v = *v;
                stack.pop();
                if let Some((p, _, _)) = stack.last() {
                    let p = *p;
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        return false; // p is an articulation point
                    }
                }
            }
        }
        root_children <= 1
    }

    /// Iteratively remove vertices of degree < `k`; returns the surviving set.
    pub fn core(&self, k: usize) -> VertexSet {
        let mut alive = VertexSet::full(self.n);
        loop {
            let mut changed = false;
            for v in alive.to_vec() {
                if self.adj[v].intersect(&alive).len() < k {
                    alive.remove(v);
                    changed = true;
                }
            }
            if !changed {
                return alive;
            }
        }
    }
}

impl core::fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "UndirectedGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Per-vertex degrees of a digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexDegrees {
    pub in_deg: usize,
    pub out_deg: usize,
}

impl VertexDegrees {
    pub fn total(&self) -> usize {
        self.in_deg + self.out_deg
    }
}

/// Directed graph on vertices `0..n`: no self-loops; digons (both `(u,v)` and
/// `(v,u)`) are permitted unless the digraph is *oriented*.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
    oriented: bool,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds MAX_VERTICES");
        Digraph {
            n,
            out: vec![VertexSet::EMPTY; n],
            inn: vec![VertexSet::EMPTY; n],
            oriented: true,
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut d = Self::new(n);
        for &(u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True while no digon has been added.
    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "arc ({u},{v}) out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        if self.inn[u].contains(v) {
            self.oriented = false;
        }
        self.out[u].insert(v);
        self.inn[v].insert(u);
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    #[inline]
    pub fn out_neighbours(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    #[inline]
    pub fn in_neighbours(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|row| row.len()).sum()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in self.out[u].iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degrees(&self, v: usize) -> VertexDegrees {
        VertexDegrees {
            in_deg: self.inn[v].len(),
            out_deg: self.out[v].len(),
        }
    }

    pub fn degree_profile(&self) -> Vec<VertexDegrees> {
        (0..self.n).map(|v| self.degrees(v)).collect()
    }

    /// The undirected graph with edge `{u,v}` iff `(u,v)` or `(v,u)` is an arc.
    pub fn underlying_graph(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(self.n);
        for u in 0..self.n {
            let nbrs = self.out[u].union(&self.inn[u]);
            for v in nbrs.iter() {
                if v > u {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Copy without the arc `(u,v)`.
    pub fn remove_arc(&self, u: usize, v: usize) -> Digraph {
        let mut d = Digraph::new(self.n);
        for (a, b) in self.arcs() {
            if (a, b) != (u, v) {
                d.add_arc(a, b);
            }
        }
        d
    }

    /// Induced subdigraph on `keep`, relabelled to `0..keep.len()` in
    /// ascending vertex order.
    pub fn induced(&self, keep: &VertexSet) -> Digraph {
        let verts = keep.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut d = Digraph::new(verts.len());
        for &u in &verts {
            for v in self.out[u].intersect(keep).iter() {
                d.add_arc(pos[u], pos[v]);
            }
        }
        d
    }

    /// Copy without vertex `v` (remaining vertices relabelled downwards).
    pub fn remove_vertex(&self, v: usize) -> Digraph {
        let mut keep = VertexSet::full(self.n);
        keep.remove(v);
        self.induced(&keep)
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let mut d = Digraph::new(self.n);
        for (u, v) in self.arcs() {
            d.add_arc(perm[u], perm[v]);
        }
        d
    }

    /// True iff `d` restricted to `s` has no directed cycle, decided by
    /// repeatedly peeling vertices with no in-neighbour inside the set.
    pub fn is_acyclic_induced(&self, s: &VertexSet) -> bool {
        debug_assert!(s.within(self.n), "set out of range");
        let mut remaining = *s;
        loop {
            let mut peeled = false;
            for v in remaining.to_vec() {
                if !self.inn[v].intersects(&remaining) {
                    remaining.remove(v);
                    peeled = true;
                }
            }
            if remaining.is_empty() {
                return true;
            }
            if !peeled {
                return false;
            }
        }
    }

    /// Whole-digraph acyclicity.
    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_induced(&VertexSet::full(self.n))
    }

    /// A topological order of the subdigraph induced by `s`, if acyclic.
    pub fn topological_order(&self, s: &VertexSet) -> Option<Vec<usize>> {
        let mut remaining = *s;
        let mut order = Vec::with_capacity(s.len());
        while !remaining.is_empty() {
            let mut peeled = false;
            for v in remaining.to_vec() {
                if !self.inn[v].intersects(&remaining) {
                    remaining.remove(v);
                    order.push(v);
                    peeled = true;
                }
            }
            if !peeled {
                return None;
            }
        }
        Some(order)
    }
}

impl core::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn underlying_of_directed_triangle_is_k3() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]);
        let g = d.underlying_graph();
        assert_eq!(g.edge_count(), 3);
        assert!(!g.is_triangle_free());
    }

    #[test]
    fn underlying_of_arcless_digraph_is_edgeless() {
        let d = Digraph::new(4);
        assert_eq!(d.underlying_graph().edge_count(), 0);
    }

    #[test]
    fn triangle_free_cases() {
        let c5 = construct::cycle_graph(5);
        assert!(c5.is_triangle_free());
        let k3 = UndirectedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(!k3.is_triangle_free());
    }

    #[test]
    fn acyclicity_basics() {
        let c3 = construct::directed_cycle(3);
        assert!(!c3.is_acyclic_induced(&VertexSet::full(3)));
        assert!(c3.is_acyclic_induced(&VertexSet::EMPTY));
        assert!(c3.is_acyclic_induced(&VertexSet::from_iter([0, 1])));
        let path = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(path.is_acyclic());
        assert_eq!(path.topological_order(&VertexSet::full(4)), Some(alloc::vec![0, 1, 2, 3]));
    }

    #[test]
    fn biconnectivity() {
        let c5 = construct::cycle_graph(5);
        assert!(c5.is_biconnected());
        let p4 = UndirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!p4.is_biconnected());
        let two_c4 = UndirectedGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
        );
        assert!(!two_c4.is_biconnected());
        // bowtie without the shared triangle: two C4s glued on a vertex
        let glued = UndirectedGraph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
        );
        assert!(!glued.is_biconnected());
    }

    #[test]
    fn digon_clears_oriented_flag() {
        let mut d = Digraph::new(2);
        d.add_arc(0, 1);
        assert!(d.is_oriented());
        d.add_arc(1, 0);
        assert!(!d.is_oriented());
    }

    #[test]
    fn degree_profiles() {
        let c3 = construct::directed_cycle(3);
        for deg in c3.degree_profile() {
            assert_eq!((deg.in_deg, deg.out_deg), (1, 1));
        }
        let k44 = construct::complete_bipartite(4, 4);
        assert!(k44.degree_profile().iter().all(|&d| d == 4));
    }

    #[test]
    fn two_core_peels_pendants() {
        // triangle-free: C4 with a pendant path
        let g = UndirectedGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]);
        let core = g.core(2);
        assert_eq!(core.to_vec(), [0, 1, 2, 3]);
    }
}
