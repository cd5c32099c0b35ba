//! Named graphs, tournaments and the backward-blowup construction.

use crate::bitset::VertexSet;
use crate::canon;
use crate::dicolour;
use crate::graph::{Digraph, UndirectedGraph};
use crate::linforest;
use crate::{Budget, BudgetExceeded};
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    /// Cycles need at least three vertices.
    CycleTooShort(usize),
    /// Paley tournaments need a prime `q` with `q % 4 == 3`.
    InvalidPaleyModulus(u64),
    /// Backward-blowups need multiplicity `m >= 1`.
    InvalidMultiplicity(usize),
    /// Backward-blowups are defined on oriented digraphs.
    NotOriented,
    /// `corollary43_witness` requires `chi(g) > k` and `k >= 1`.
    ChromaticNotAbove { chi: usize, k: usize },
    /// Underlying solver ran out of budget.
    Budget(BudgetExceeded),
}

impl core::fmt::Display for ConstructError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConstructError::CycleTooShort(l) => write!(f, "cycle length {l} < 3"),
            ConstructError::InvalidPaleyModulus(q) => {
                write!(f, "{q} is not a prime congruent to 3 mod 4")
            }
            ConstructError::InvalidMultiplicity(m) => write!(f, "blowup multiplicity {m} < 1"),
            ConstructError::NotOriented => write!(f, "digraph has a digon"),
            ConstructError::ChromaticNotAbove { chi, k } => {
                write!(f, "chromatic number {chi} is not above k = {k}")
            }
            ConstructError::Budget(b) => write!(f, "{b}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ConstructError {}

/// The undirected cycle `C_l`.
pub fn cycle_graph(l: usize) -> UndirectedGraph {
    assert!(l >= 3);
    let mut g = UndirectedGraph::new(l);
    for v in 0..l {
        g.add_edge(v, (v + 1) % l);
    }
    g
}

/// The directed cycle on `l >= 3` vertices, arcs `v -> v+1 (mod l)`.
pub fn directed_cycle(l: usize) -> Digraph {
    try_directed_cycle(l).expect("cycle length must be at least 3")
}

pub fn try_directed_cycle(l: usize) -> Result<Digraph, ConstructError> {
    if l < 3 {
        return Err(ConstructError::CycleTooShort(l));
    }
    let mut d = Digraph::new(l);
    for v in 0..l {
        d.add_arc(v, (v + 1) % l);
    }
    Ok(d)
}

/// The transitive tournament: arc `u -> v` iff `u < v`.
pub fn transitive_tournament(n: usize) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            d.add_arc(u, v);
        }
    }
    d
}

pub fn complete_graph(n: usize) -> UndirectedGraph {
    let mut g = UndirectedGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> UndirectedGraph {
    let mut g = UndirectedGraph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v);
        }
    }
    g
}

pub fn path_graph(n: usize) -> UndirectedGraph {
    let mut g = UndirectedGraph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The Paley tournament `P_q`: vertices `0..q`, arc `i -> j` iff `i - j` is a
/// nonzero quadratic residue mod `q`. Requires `q` prime with `q % 4 == 3`
/// (so that exactly one of `x`, `-x` is a residue).
pub fn paley_tournament(q: u64) -> Result<Digraph, ConstructError> {
    if !is_prime(q) || q % 4 != 3 {
        return Err(ConstructError::InvalidPaleyModulus(q));
    }
    let mut residues = VertexSet::EMPTY;
    for x in 1..q {
        residues.insert(((x * x) % q) as usize);
    }
    let mut d = Digraph::new(q as usize);
    for i in 0..q {
        for j in 0..q {
            if i != j && residues.contains(((q + i - j) % q) as usize) {
                d.add_arc(i as usize, j as usize);
            }
        }
    }
    Ok(d)
}

/// The Mycielskian of `g`: vertices `0..n` copy `g`, vertices `n..2n` are
/// shadows (`n + i` adjacent to `N_g(i)`), vertex `2n` is adjacent to all
/// shadows.
pub fn mycielskian(g: &UndirectedGraph) -> UndirectedGraph {
    let n = g.n();
    let mut m = UndirectedGraph::new(2 * n + 1);
    for (u, v) in g.edges() {
        m.add_edge(u, v);
        m.add_edge(n + u, v);
        m.add_edge(u, n + v);
    }
    for i in 0..n {
        m.add_edge(2 * n, n + i);
    }
    m
}

/// The Grötzsch graph: the Mycielskian of `C5`; 11 vertices, 20 edges,
/// triangle-free with chromatic number 4.
pub fn grotzsch() -> UndirectedGraph {
    mycielskian(&cycle_graph(5))
}

/// Index arithmetic for backward-blowups: base vertex `v`, copy `i in 1..=m`
/// flatten to `v * m + (i - 1)`. This numbering is part of the public
/// contract so that certificates stay portable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowupIndex {
    pub base: usize,
    pub copy: usize,
}

impl BlowupIndex {
    pub fn flatten(&self, m: usize) -> usize {
        debug_assert!(self.copy >= 1 && self.copy <= m);
        self.base * m + (self.copy - 1)
    }

    pub fn unflatten(flat: usize, m: usize) -> Self {
        BlowupIndex {
            base: flat / m,
            copy: flat % m + 1,
        }
    }
}

/// The pack of base vertex `v`: all of its copies.
pub fn pack(base: usize, m: usize) -> VertexSet {
    VertexSet::from_iter((1..=m).map(|i| BlowupIndex { base, copy: i }.flatten(m)))
}

/// The `m`-backward-blowup of an oriented digraph: each vertex becomes a
/// pack of `m` twins; every base arc `u -> v` yields the same-copy forward
/// arcs `(u,i) -> (v,i)` and the cross-copy backward arcs `(v,i) -> (u,j)`
/// for `i != j`.
pub fn backward_blowup(d: &Digraph, m: usize) -> Result<Digraph, ConstructError> {
    if m < 1 {
        return Err(ConstructError::InvalidMultiplicity(m));
    }
    if !d.is_oriented() {
        return Err(ConstructError::NotOriented);
    }
    let mut b = Digraph::new(d.n() * m);
    for (u, v) in d.arcs() {
        for i in 1..=m {
            let ui = BlowupIndex { base: u, copy: i }.flatten(m);
            let vi = BlowupIndex { base: v, copy: i }.flatten(m);
            b.add_arc(ui, vi);
            for j in 1..=m {
                if j != i {
                    let uj = BlowupIndex { base: u, copy: j }.flatten(m);
                    b.add_arc(vi, uj);
                }
            }
        }
    }
    Ok(b)
}

/// `D_25`, the 5-backward-blowup of the directed 5-cycle: the 25-vertex
/// 3-dicritical oriented triangle-free graph.
pub fn d25() -> Digraph {
    backward_blowup(&directed_cycle(5), 5).expect("C5 is oriented")
}

/// Length (in arcs) of a longest directed path.
pub fn longest_directed_path(d: &Digraph) -> usize {
    fn extend(d: &Digraph, v: usize, used: VertexSet, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        for w in d.out_neighbours(v).minus(&used).iter() {
            let mut used2 = used;
            used2.insert(w);
            extend(d, w, used2, len + 1, best);
        }
    }
    let mut best = 0;
    for v in 0..d.n() {
        extend(d, v, VertexSet::singleton(v), 0, &mut best);
    }
    best
}

/// The two acyclic orientations of `C5` (up to digraph isomorphism) whose
/// longest directed path has at most 3 arcs, found by enumerating all 32
/// orientations of the 5-cycle and deduplicating.
pub fn acyclic_c5_no_p4() -> (Digraph, Digraph) {
    let mut reps: Vec<Digraph> = Vec::new();
    for mask in 0u32..32 {
        let mut d = Digraph::new(5);
        for e in 0..5 {
            let (u, v) = (e, (e + 1) % 5);
            if mask >> e & 1 == 1 {
                d.add_arc(u, v);
            } else {
                d.add_arc(v, u);
            }
        }
        if !d.is_acyclic() || longest_directed_path(&d) > 3 {
            continue;
        }
        if !reps.iter().any(|r| canon::digraphs_isomorphic(r, &d)) {
            reps.push(d);
        }
    }
    assert_eq!(
        reps.len(),
        2,
        "exactly two acyclic C5 orientations avoid directed P4s"
    );
    // Deterministic output order: longer longest-path first.
    reps.sort_by_key(|d| core::cmp::Reverse(longest_directed_path(d)));
    let second = reps.pop().unwrap();
    let first = reps.pop().unwrap();
    (first, second)
}

/// Witness for the blowup lower-bound corollary: given `chi(g) > k`, returns
/// the `(k (n - alpha(g)) + 1)`-backward-blowup of the orientation in which a
/// maximum independent set has in-degree 0 (the linear-forest-minimising
/// orientation). The result is not `k`-dicolourable.
pub struct BlowupWitness {
    pub blowup: Digraph,
    pub orientation: Digraph,
    pub multiplicity: usize,
    pub independence: usize,
    pub chromatic: usize,
}

pub fn corollary43_witness(
    g: &UndirectedGraph,
    k: usize,
    budget: Budget,
) -> Result<BlowupWitness, ConstructError> {
    if k < 1 {
        return Err(ConstructError::ChromaticNotAbove { chi: 0, k });
    }
    let chi = dicolour::chromatic_number(g, budget)
        .map_err(ConstructError::Budget)?
        .0;
    if chi <= k {
        return Err(ConstructError::ChromaticNotAbove { chi, k });
    }
    let or = linforest::min_orientation_linear_forest(g, budget).map_err(ConstructError::Budget)?;
    let m = k * or.value + 1;
    let blowup = backward_blowup(&or.orientation, m)?;
    Ok(BlowupWitness {
        blowup,
        orientation: or.orientation,
        multiplicity: m,
        independence: or.independence,
        chromatic: chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;

    #[test]
    fn blowup_multiplicity_one_is_identity() {
        let c5 = directed_cycle(5);
        let b = backward_blowup(&c5, 1).unwrap();
        assert_eq!(b.n(), 5);
        assert_eq!(b.arcs(), c5.arcs());
    }

    #[test]
    fn blowup_of_single_arc_is_directed_4_cycle() {
        // By the definition unrolled by hand: u1 -> v1 -> u2 -> v2 -> u1.
        let arc = Digraph::from_arcs(2, &[(0, 1)]);
        let b = backward_blowup(&arc, 2).unwrap();
        assert_eq!(b.n(), 4);
        assert_eq!(b.arc_count(), 4);
        let c4 = directed_cycle(4);
        assert!(brute::digraphs_isomorphic(&b, &c4));
    }

    #[test]
    fn blowup_rejects_bad_inputs() {
        let c5 = directed_cycle(5);
        assert!(matches!(
            backward_blowup(&c5, 0),
            Err(ConstructError::InvalidMultiplicity(0))
        ));
        let mut digon = Digraph::new(2);
        digon.add_arc(0, 1);
        digon.add_arc(1, 0);
        assert!(matches!(
            backward_blowup(&digon, 2),
            Err(ConstructError::NotOriented)
        ));
    }

    #[test]
    fn d25_shape() {
        let d = d25();
        assert_eq!(d.n(), 25);
        assert_eq!(d.arc_count(), 125);
        assert!(d.is_oriented());
        let g = d.underlying_graph();
        assert_eq!(g.edge_count(), 125);
        assert!(g.is_triangle_free());
        // 2 forward + 8 backward arcs at every vertex
        for deg in d.degree_profile() {
            assert_eq!(deg.total(), 10);
            assert_eq!((deg.in_deg, deg.out_deg), (5, 5));
        }
        // packs are acyclic (they are independent sets)
        for base in 0..5 {
            let p = pack(base, 5);
            assert_eq!(p.len(), 5);
            assert!(d.is_acyclic_induced(&p));
            for v in p.iter() {
                assert!(!d.out_neighbours(v).intersects(&p));
            }
        }
    }

    #[test]
    fn blowup_forward_copies_are_isomorphic_to_base() {
        let base = directed_cycle(5);
        let m = 3;
        let b = backward_blowup(&base, m).unwrap();
        for copy in 1..=m {
            let verts =
                VertexSet::from_iter((0..5).map(|v| BlowupIndex { base: v, copy }.flatten(m)));
            let sub = b.induced(&verts);
            // restricted to one copy only the forward arcs remain
            assert!(brute::digraphs_isomorphic(&sub, &base));
        }
    }

    #[test]
    fn paley_7_arcs_match_residues() {
        let p7 = paley_tournament(7).unwrap();
        // squares mod 7: {1, 2, 4}
        assert!(p7.has_arc(1, 0));
        assert!(!p7.has_arc(0, 1));
        assert!(p7.has_arc(2, 0));
        assert!(p7.has_arc(4, 0));
        assert!(p7.has_arc(0, 3));
        // arc-regular: out-degree (q-1)/2 everywhere
        for deg in p7.degree_profile() {
            assert_eq!((deg.in_deg, deg.out_deg), (3, 3));
        }
        assert!(p7.is_oriented());
    }

    #[test]
    fn paley_rejects_bad_moduli() {
        for q in [1, 4, 5, 9, 13, 15] {
            assert!(paley_tournament(q).is_err(), "q = {q} should be rejected");
        }
        assert!(paley_tournament(11).is_ok());
        assert!(paley_tournament(19).is_ok());
    }

    #[test]
    fn mycielskian_of_k2_is_c5() {
        let k2 = UndirectedGraph::from_edges(2, &[(0, 1)]);
        let m = mycielskian(&k2);
        assert!(brute::graphs_isomorphic(&m, &cycle_graph(5)));
    }

    #[test]
    fn grotzsch_shape() {
        let g = grotzsch();
        assert_eq!(g.n(), 11);
        assert_eq!(g.edge_count(), 20);
        assert!(g.is_triangle_free());
    }

    #[test]
    fn mycielskian_preserves_triangle_freeness() {
        let mut rng = crate::random::SeededRng::new(321);
        for _ in 0..25 {
            let n = 2 + rng.below(7) as usize;
            let g = crate::random::random_triangle_free(n, 0.5, rng.derive());
            let m = mycielskian(&g);
            assert_eq!(m.n(), 2 * n + 1);
            assert!(m.is_triangle_free(), "input {g:?}");
        }
    }

    #[test]
    fn c5_no_p4_orientations() {
        let (a, b) = acyclic_c5_no_p4();
        for d in [&a, &b] {
            assert!(d.is_acyclic());
            assert!(longest_directed_path(d) <= 3);
            assert_eq!(d.underlying_graph().edge_count(), 5);
        }
        assert!(!canon::digraphs_isomorphic(&a, &b));
        // run structure of the cycle forces path lengths 3 and 2
        assert_eq!(longest_directed_path(&a), 3);
        assert_eq!(longest_directed_path(&b), 2);
    }

    #[test]
    fn blowup_preserves_triangle_freeness_and_pack_independence() {
        // every oriented triangle-free base on up to 5 vertices, every
        // multiplicity up to 3
        for n in 1..=5usize {
            for g in crate::enumerate::enumerate_triangle_free(n, 0).unwrap() {
                for base in crate::enumerate::orientation_reps(&g) {
                    for m in 1..=3usize {
                        let blow = backward_blowup(&base, m).unwrap();
                        assert!(blow.is_oriented());
                        assert_eq!(blow.arc_count(), m * m * base.arc_count());
                        assert!(blow.underlying_graph().is_triangle_free());
                        for v in 0..n {
                            let p = pack(v, m);
                            assert!(blow.is_acyclic_induced(&p));
                            for w in p.iter() {
                                assert!(!blow.out_neighbours(w).intersects(&p));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn paley_out_degree_regularity() {
        for q in [7u64, 11, 19, 23] {
            let p = paley_tournament(q).unwrap();
            let half = (q as usize - 1) / 2;
            for deg in p.degree_profile() {
                assert_eq!((deg.in_deg, deg.out_deg), (half, half));
            }
        }
    }

    #[test]
    fn directed_cycle_is_vertex_transitive() {
        let c5 = directed_cycle(5);
        for shift in 0..5 {
            let perm: Vec<usize> = (0..5).map(|v| (v + shift) % 5).collect();
            assert_eq!(c5.relabel(&perm).arcs(), c5.arcs());
        }
    }

    #[test]
    fn blowup_index_roundtrip() {
        for m in 1..6 {
            for base in 0..4 {
                for copy in 1..=m {
                    let idx = BlowupIndex { base, copy };
                    assert_eq!(BlowupIndex::unflatten(idx.flatten(m), m), idx);
                }
            }
        }
    }
}
