//! Directed linear forests: the exact maximum and the orientation that
//! minimises it.

use crate::acyclic;
use crate::bitset::VertexSet;
use crate::graph::{Digraph, UndirectedGraph};
use crate::{Budget, BudgetExceeded};
use alloc::vec::Vec;

/// A set of arcs forming vertex-disjoint directed paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForest {
    pub arcs: Vec<(usize, usize)>,
}

impl LinearForest {
    /// All arcs belong to `d`, in/out-degrees stay at most one, and the
    /// chosen arcs close no directed cycle.
    pub fn validate(&self, d: &Digraph) -> bool {
        let mut sub = Digraph::new(d.n());
        let mut in_used = VertexSet::EMPTY;
        let mut out_used = VertexSet::EMPTY;
        for &(u, v) in &self.arcs {
            if !d.has_arc(u, v) || out_used.contains(u) || in_used.contains(v) {
                return false;
            }
            out_used.insert(u);
            in_used.insert(v);
            sub.add_arc(u, v);
        }
        sub.is_acyclic()
    }
}

struct ForestSearch<'a> {
    arcs: &'a [(usize, usize)],
    budget: Budget,
    nodes: u64,
    best: usize,
    best_arcs: Vec<(usize, usize)>,
    target: Option<usize>,
}

#[derive(Clone)]
struct ForestState {
    in_used: VertexSet,
    out_used: VertexSet,
    /// path-endpoint union-find over vertices
    parent: Vec<u16>,
    chosen: Vec<(usize, usize)>,
}

impl ForestState {
    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            let p = self.parent[v] as usize;
            self.parent[v] = self.parent[p];
            v = self.parent[v] as usize;
        }
        v
    }
}

impl ForestSearch<'_> {
    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best >= t)
    }

    fn run(&mut self, idx: usize, state: &mut ForestState) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(BudgetExceeded { nodes: self.nodes });
        }
        if state.chosen.len() > self.best {
            self.best = state.chosen.len();
            self.best_arcs = state.chosen.clone();
        }
        if self.done() || idx == self.arcs.len() {
            return Ok(());
        }
        // no branch below can beat the incumbent
        if state.chosen.len() + (self.arcs.len() - idx) <= self.best {
            return Ok(());
        }
        let (u, v) = self.arcs[idx];
        let feasible = !state.out_used.contains(u)
            && !state.in_used.contains(v)
            && state.find(u) != state.find(v);
        if feasible {
            let mut next = state.clone();
            next.out_used.insert(u);
            next.in_used.insert(v);
            let (ru, rv) = (next.find(u), next.find(v));
            next.parent[ru] = rv as u16;
            next.chosen.push((u, v));
            self.run(idx + 1, &mut next)?;
            if self.done() {
                return Ok(());
            }
        }
        self.run(idx + 1, state)
    }
}

fn forest_search(
    d: &Digraph,
    target: Option<usize>,
    budget: Budget,
) -> Result<(usize, LinearForest), BudgetExceeded> {
    let arcs = d.arcs();
    let mut state = ForestState {
        in_used: VertexSet::EMPTY,
        out_used: VertexSet::EMPTY,
        parent: (0..d.n() as u16).collect(),
        chosen: Vec::new(),
    };
    // greedy pass for a strong incumbent
    let mut greedy = state.clone();
    for &(u, v) in &arcs {
        if !greedy.out_used.contains(u)
            && !greedy.in_used.contains(v)
            && greedy.find(u) != greedy.find(v)
        {
            greedy.out_used.insert(u);
            greedy.in_used.insert(v);
            let (ru, rv) = (greedy.find(u), greedy.find(v));
            greedy.parent[ru] = rv as u16;
            greedy.chosen.push((u, v));
        }
    }
    let mut search = ForestSearch {
        arcs: &arcs,
        budget,
        nodes: 0,
        best: greedy.chosen.len(),
        best_arcs: greedy.chosen,
        target,
    };
    if !search.done() {
        search.run(0, &mut state)?;
    }
    Ok((
        search.best,
        LinearForest {
            arcs: search.best_arcs,
        },
    ))
}

/// Maximum number of arcs of a directed linear forest, with a witness.
/// Exact branch-and-bound over arc subsets; fine up to ~20 vertices.
pub fn max_directed_linear_forest(
    d: &Digraph,
    budget: Budget,
) -> Result<(usize, LinearForest), BudgetExceeded> {
    let (best, witness) = forest_search(d, None, budget)?;
    debug_assert!(witness.validate(d));
    Ok((best, witness))
}

/// Early-exit decision `max_directed_linear_forest(d) >= target`.
pub fn linear_forest_at_least(
    d: &Digraph,
    target: usize,
    budget: Budget,
) -> Result<bool, BudgetExceeded> {
    let (best, _) = forest_search(d, Some(target), budget)?;
    Ok(best >= target)
}

/// The linear-forest-minimising orientation of a graph together with its
/// value `n - alpha(g)`.
#[derive(Debug, Clone)]
pub struct MinOrientation {
    /// `n - alpha(g)`, the minimum over all orientations of the maximum
    /// directed linear forest.
    pub value: usize,
    /// Orientation attaining the minimum: a maximum independent set gets
    /// in-degree 0, remaining edges point from lower to higher index.
    pub orientation: Digraph,
    pub independence: usize,
    pub independent_set: VertexSet,
}

pub fn min_orientation_linear_forest(
    g: &UndirectedGraph,
    budget: Budget,
) -> Result<MinOrientation, BudgetExceeded> {
    let (alpha, set) = acyclic::independence_number(g, budget)?;
    let mut d = Digraph::new(g.n());
    for (u, v) in g.edges() {
        if set.contains(u) {
            d.add_arc(u, v);
        } else if set.contains(v) {
            d.add_arc(v, u);
        } else {
            d.add_arc(u.min(v), u.max(v));
        }
    }
    Ok(MinOrientation {
        value: g.n() - alpha,
        orientation: d,
        independence: alpha,
        independent_set: set,
    })
}
