//! Total orders on vertices: backedge graphs, the order formulation of the
//! dichromatic number, and degree-halving orders.

use crate::dicolour;
use crate::graph::{Digraph, UndirectedGraph};
use crate::Budget;
use alloc::vec;
use alloc::vec::Vec;

/// A total order on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    /// `seq[i]` is the vertex at position `i`.
    seq: Vec<usize>,
    /// `pos[v]` is the position of vertex `v`.
    pos: Vec<usize>,
}

impl VertexOrder {
    pub fn from_seq(seq: Vec<usize>) -> Self {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            assert!(v < n && pos[v] == usize::MAX, "sequence is not a permutation");
            pos[v] = i;
        }
        VertexOrder { seq, pos }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_seq((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// Move `v` to the front of the order.
    fn move_to_front(&mut self, v: usize) {
        let p = self.pos[v];
        self.seq.remove(p);
        self.seq.insert(0, v);
        self.reindex();
    }

    /// Move `v` to the back of the order.
    fn move_to_back(&mut self, v: usize) {
        let p = self.pos[v];
        self.seq.remove(p);
        self.seq.push(v);
        self.reindex();
    }

    fn reindex(&mut self) {
        for (i, &v) in self.seq.iter().enumerate() {
            self.pos[v] = i;
        }
    }
}

/// The backedge graph `D[ord]`: edge `{u, v}` iff there is an arc from the
/// later vertex to the earlier one.
pub fn backedge_graph(d: &Digraph, ord: &VertexOrder) -> UndirectedGraph {
    assert_eq!(ord.len(), d.n(), "order must cover the vertex set");
    let mut g = UndirectedGraph::new(d.n());
    for (a, b) in d.arcs() {
        if ord.position(b) < ord.position(a) {
            g.add_edge(a, b);
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderError {
    /// Factorial enumeration is capped at 9 vertices.
    TooLarge(usize),
    Budget(crate::BudgetExceeded),
}

impl core::fmt::Display for OrderError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OrderError::TooLarge(n) => {
                write!(f, "order enumeration needs n <= 9, got {n}")
            }
            OrderError::Budget(b) => write!(f, "{b}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OrderError {}

/// Chromatic number if below `cutoff`, otherwise `None`.
fn chromatic_below(
    g: &UndirectedGraph,
    cutoff: usize,
    budget: Budget,
) -> Result<Option<usize>, crate::BudgetExceeded> {
    if g.n() == 0 {
        return Ok(Some(0).filter(|&c| c < cutoff));
    }
    for k in 1..cutoff {
        if dicolour::is_k_colourable(g, k, budget)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The dichromatic number computed through total orders:
/// `min over all n! orders of chi(backedge_graph(d, ord))`.
///
/// Exponential by design; capped at `n <= 9`.
pub fn dichromatic_via_orders(d: &Digraph) -> Result<usize, OrderError> {
    let n = d.n();
    if n > 9 {
        return Err(OrderError::TooLarge(n));
    }
    if n == 0 {
        return Ok(0);
    }
    let budget = Budget::default();
    let mut best = n; // colouring every vertex separately always works
    let mut seq: Vec<usize> = (0..n).collect();
    // Heap's algorithm, iterative
    let mut c = vec![0usize; n];
    loop {
        let ord = VertexOrder::from_seq(seq.clone());
        let g = backedge_graph(d, &ord);
        if let Some(chi) = chromatic_below(&g, best, budget).map_err(OrderError::Budget)? {
            best = chi.max(1);
            if best == 1 {
                return Ok(1);
            }
        }
        // advance permutation
        let mut i = 1;
        loop {
            if i >= n {
                return Ok(best);
            }
            if c[i] < i {
                if i % 2 == 0 {
                    seq.swap(0, i);
                } else {
                    seq.swap(c[i], i);
                }
                c[i] += 1;
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Number of oriented (non-digon) backedges of the current order; the
/// strictly decreasing potential of the local search below.
fn oriented_backedge_count(d: &Digraph, ord: &VertexOrder) -> usize {
    d.arcs()
        .iter()
        .filter(|&&(a, b)| !d.has_arc(b, a) && ord.position(b) < ord.position(a))
        .count()
}

/// An order in which every vertex keeps at most half of its degree in the
/// backedge graph: `deg_{D[ord]}(v) <= floor(deg_D(v) / 2)`.
///
/// Local search from the identity order: while some vertex violates the
/// bound, it has a strict majority of backedges towards one side and is
/// moved to that extreme end, which strictly decreases the number of
/// oriented backedges. Violating vertices are scanned lowest index first.
pub fn halve_degree_order(d: &Digraph) -> VertexOrder {
    let n = d.n();
    let mut ord = VertexOrder::identity(n);
    let mut guard = oriented_backedge_count(d, &ord) + 1;
    'outer: loop {
        for v in 0..n {
            let total = d.degrees(v).total();
            let vpos = ord.position(v);
            // digon neighbours contribute one backedge no matter the order
            let mut digons = 0usize;
            let mut pred_or = 0usize;
            let mut succ_or = 0usize;
            let mut pred_back = 0usize; // u before v with arc v -> u
            let mut succ_back = 0usize; // u after v with arc u -> v
            let nbrs = d.out_neighbours(v).union(d.in_neighbours(v));
            for u in nbrs.iter() {
                let digon = d.has_arc(u, v) && d.has_arc(v, u);
                if digon {
                    digons += 1;
                    continue;
                }
                if ord.position(u) < vpos {
                    pred_or += 1;
                    if d.has_arc(v, u) {
                        pred_back += 1;
                    }
                } else {
                    succ_or += 1;
                    if d.has_arc(u, v) {
                        succ_back += 1;
                    }
                }
            }
            let backedge_deg = digons + pred_back + succ_back;
            if backedge_deg <= total / 2 {
                continue;
            }
            // strict majority on at least one side
            let pred_surplus = (2 * pred_back) as isize - pred_or as isize;
            let succ_surplus = (2 * succ_back) as isize - succ_or as isize;
            if succ_surplus > 0 && succ_surplus >= pred_surplus {
                ord.move_to_back(v);
            } else {
                debug_assert!(pred_surplus > 0);
                ord.move_to_front(v);
            }
            let count = oriented_backedge_count(d, &ord);
            debug_assert!(count < guard, "local search move must make progress");
            guard = count;
            continue 'outer;
        }
        return ord;
    }
}

/// Check the halving postcondition for every vertex.
pub fn halving_holds(d: &Digraph, ord: &VertexOrder) -> bool {
    let g = backedge_graph(d, ord);
    (0..d.n()).all(|v| g.degree(v) <= d.degrees(v).total() / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::random::SeededRng;

    #[test]
    fn backedge_of_directed_triangle_over_all_orders() {
        // a directed cycle always keeps at least one backedge; the three
        // rotation orders achieve exactly one, the reflections two
        let c3 = construct::directed_cycle(3);
        let counts: Vec<usize> = crate::brute::permutations(3)
            .into_iter()
            .map(|perm| backedge_graph(&c3, &VertexOrder::from_seq(perm)).edge_count())
            .collect();
        assert!(counts.iter().all(|&c| c >= 1));
        assert_eq!(counts.iter().min(), Some(&1));
        assert_eq!(counts.iter().filter(|&&c| c == 1).count(), 3);
    }

    #[test]
    fn backedge_of_transitive_tournament() {
        let tt = construct::transitive_tournament(5);
        let topo = VertexOrder::identity(5);
        assert_eq!(backedge_graph(&tt, &topo).edge_count(), 0);
        let reversed = VertexOrder::from_seq(vec![4, 3, 2, 1, 0]);
        assert_eq!(
            backedge_graph(&tt, &reversed).edges(),
            tt.underlying_graph().edges()
        );
    }

    #[test]
    fn via_orders_landmarks() {
        assert_eq!(dichromatic_via_orders(&construct::directed_cycle(3)).unwrap(), 2);
        let acyclic = Digraph::from_arcs(5, &[(0, 1), (1, 2), (0, 3), (3, 4)]);
        assert_eq!(dichromatic_via_orders(&acyclic).unwrap(), 1);
        let p7 = construct::paley_tournament(7).unwrap();
        assert_eq!(dichromatic_via_orders(&p7).unwrap(), 3);
    }

    #[test]
    fn via_orders_rejects_large_inputs() {
        let big = Digraph::new(10);
        assert_eq!(dichromatic_via_orders(&big), Err(OrderError::TooLarge(10)));
    }

    #[test]
    fn chi_of_backedge_bounds_dichromatic() {
        let mut rng = SeededRng::new(55);
        for _ in 0..40 {
            let n = 2 + rng.below(6) as usize;
            let d = crate::random::random_digraph(n, 0.4, rng.derive());
            let chi = dicolour::dichromatic_number(&d, Budget::default()).unwrap().0;
            let mut seq: Vec<usize> = (0..n).collect();
            rng.shuffle(&mut seq);
            let ord = VertexOrder::from_seq(seq);
            let g = backedge_graph(&d, &ord);
            let chi_backedge = dicolour::chromatic_number(&g, Budget::default()).unwrap().0;
            assert!(chi <= chi_backedge.max(1));
        }
    }

    #[test]
    fn via_orders_equals_solver_on_random_digraphs() {
        let mut rng = SeededRng::new(3141);
        for _ in 0..40 {
            let n = 2 + rng.below(5) as usize;
            let d = crate::random::random_oriented(n, 0.5, rng.derive());
            assert_eq!(
                dichromatic_via_orders(&d).unwrap(),
                dicolour::dichromatic_number(&d, Budget::default()).unwrap().0,
                "digraph {d:?}"
            );
        }
        for _ in 0..10 {
            let d = crate::random::random_oriented(7, 0.5, rng.derive());
            assert_eq!(
                dichromatic_via_orders(&d).unwrap(),
                dicolour::dichromatic_number(&d, Budget::default()).unwrap().0
            );
        }
    }

    #[test]
    fn halving_on_directed_triangle() {
        let c3 = construct::directed_cycle(3);
        let ord = halve_degree_order(&c3);
        assert!(halving_holds(&c3, &ord));
    }

    #[test]
    fn halving_on_paley_7() {
        let p7 = construct::paley_tournament(7).unwrap();
        let ord = halve_degree_order(&p7);
        // total degree 6 everywhere, so every backedge degree is at most 3
        let g = backedge_graph(&p7, &ord);
        assert!((0..7).all(|v| g.degree(v) <= 3));
    }

    #[test]
    fn halving_on_inward_star() {
        let mut d = Digraph::new(6);
        for leaf in 1..6 {
            d.add_arc(leaf, 0);
        }
        let ord = halve_degree_order(&d);
        assert!(halving_holds(&d, &ord));
        let g = backedge_graph(&d, &ord);
        for leaf in 1..6 {
            assert_eq!(g.degree(leaf), 0);
        }
    }

    #[test]
    fn halving_exhaustive_small_and_random_medium() {
        let mut rng = SeededRng::new(808);
        for _ in 0..60 {
            let n = 2 + rng.below(6) as usize;
            let d = crate::random::random_digraph(n, 0.5, rng.derive());
            assert!(halving_holds(&d, &halve_degree_order(&d)), "digraph {d:?}");
        }
        for _ in 0..20 {
            let n = 16 + rng.below(17) as usize;
            let d = crate::random::random_digraph(n, 0.2, rng.derive());
            assert!(halving_holds(&d, &halve_degree_order(&d)));
        }
    }
}
