//! Exact acyclic number and independence number by branch-and-bound.

use crate::bitset::VertexSet;
use crate::graph::{Digraph, UndirectedGraph};
use crate::{Budget, BudgetExceeded};
use alloc::vec::Vec;

/// Shortest directed cycle inside `allowed`, as a vertex list in cycle
/// order, or `None` if the induced subdigraph is acyclic.
fn shortest_cycle(d: &Digraph, allowed: &VertexSet) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for start in allowed.iter() {
        // BFS from start along arcs within `allowed`; the first arc back
        // into `start` closes a shortest cycle through it.
        let mut parent = [usize::MAX; crate::MAX_VERTICES];
        let mut seen = VertexSet::singleton(start);
        let mut frontier = alloc::vec![start];
        let mut found: Option<usize> = None;
        let mut depth = 0usize;
        'bfs: while !frontier.is_empty() {
            depth += 1;
            if let Some(b) = &best {
                if depth >= b.len() {
                    break;
                }
            }
            let mut next = Vec::new();
            for &u in &frontier {
                let outs = d.out_neighbours(u).intersect(allowed);
                if outs.contains(start) {
                    found = Some(u);
                    break 'bfs;
                }
                for w in outs.minus(&seen).iter() {
                    seen.insert(w);
                    parent[w] = u;
                    next.push(w);
                }
            }
            frontier = next;
        }
        if let Some(last) = found {
            let mut cyc = alloc::vec![last];
            let mut v = last;
            while v != start {
                v = parent[v];
                cyc.push(v);
            }
            cyc.reverse(); // starts at `start`, follows arcs
            if best.as_ref().is_none_or(|b| cyc.len() < b.len()) {
                best = Some(cyc);
            }
        }
    }
    best
}

struct AcyclicSearch<'a> {
    d: &'a Digraph,
    budget: Budget,
    nodes: u64,
    best: usize,
    best_set: VertexSet,
}

impl AcyclicSearch<'_> {
    fn run(&mut self, kept: VertexSet, undecided: VertexSet) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(BudgetExceeded { nodes: self.nodes });
        }
        let allowed = kept.union(&undecided);
        if allowed.len() <= self.best {
            return Ok(());
        }
        let Some(cycle) = shortest_cycle(self.d, &allowed) else {
            // everything still allowed is acyclic
            self.best = allowed.len();
            self.best_set = allowed;
            return Ok(());
        };
        // at least one vertex of the cycle must go; only undecided ones can
        let mut kept2 = kept;
        for (i, &v) in cycle.iter().enumerate() {
            if !undecided.contains(v) {
                continue;
            }
            let mut und2 = undecided;
            for &w in &cycle[..=i] {
                und2.remove(w);
            }
            self.run(kept2, und2)?;
            // keep v in all later branches; if that closes a cycle within
            // kept vertices, no later branch can succeed
            kept2.insert(v);
            if !self.d.is_acyclic_induced(&kept2) {
                break;
            }
        }
        Ok(())
    }
}

/// Greedy acyclic set: scan vertices in index order, keep those that leave
/// the set acyclic. Used as the initial lower bound.
fn greedy_acyclic(d: &Digraph) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    for v in 0..d.n() {
        s.insert(v);
        if !d.is_acyclic_induced(&s) {
            s.remove(v);
        }
    }
    s
}

/// Exact acyclic number with a maximum acyclic set as witness.
///
/// Branch-and-bound on shortest directed cycles: every cycle must lose a
/// vertex, so branching deletes each undecided cycle vertex in turn.
/// Practical up to roughly 45 vertices on sparse digraphs.
pub fn acyclic_number(d: &Digraph, budget: Budget) -> Result<(usize, VertexSet), BudgetExceeded> {
    let seed = greedy_acyclic(d);
    let mut search = AcyclicSearch {
        d,
        budget,
        nodes: 0,
        best: seed.len(),
        best_set: seed,
    };
    search.run(VertexSet::EMPTY, VertexSet::full(d.n()))?;
    Ok((search.best, search.best_set))
}

/// Decide `acyclic_number(d) >= target` with early exit; shares the
/// branch-and-bound but stops at the first witness of the requested size.
pub fn has_acyclic_set_of_size(
    d: &Digraph,
    target: usize,
    budget: Budget,
) -> Result<bool, BudgetExceeded> {
    if target == 0 {
        return Ok(true);
    }
    let mut search = AcyclicSearch {
        d,
        budget,
        nodes: 0,
        best: target - 1,
        best_set: VertexSet::EMPTY,
    };
    let seed = greedy_acyclic(d);
    if seed.len() >= target {
        return Ok(true);
    }
    search.run(VertexSet::EMPTY, VertexSet::full(d.n()))?;
    Ok(search.best >= target)
}

struct MisSearch<'a> {
    g: &'a UndirectedGraph,
    budget: Budget,
    nodes: u64,
    best: usize,
    best_set: VertexSet,
}

impl MisSearch<'_> {
    fn bound(&self, remaining: &VertexSet) -> usize {
        // each greedily matched edge costs at least one vertex
        let mut unmatched = *remaining;
        let mut matching = 0usize;
        while let Some(v) = unmatched.first() {
            unmatched.remove(v);
            if let Some(u) = self.g.neighbours(v).intersect(&unmatched).first() {
                unmatched.remove(u);
                matching += 1;
            }
        }
        remaining.len() - matching
    }

    fn run(&mut self, chosen: VertexSet, mut remaining: VertexSet) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(BudgetExceeded { nodes: self.nodes });
        }
        let mut chosen = chosen;
        // reductions: vertices of degree 0 or 1 in the remaining graph can
        // always be taken greedily
        loop {
            let mut changed = false;
            for v in remaining.to_vec() {
                if !remaining.contains(v) {
                    continue;
                }
                let nbrs = self.g.neighbours(v).intersect(&remaining);
                match nbrs.len() {
                    0 => {
                        chosen.insert(v);
                        remaining.remove(v);
                        changed = true;
                    }
                    1 => {
                        chosen.insert(v);
                        remaining.remove(v);
                        remaining.remove(nbrs.first().unwrap());
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        if remaining.is_empty() {
            if chosen.len() > self.best {
                self.best = chosen.len();
                self.best_set = chosen;
            }
            return Ok(());
        }
        if chosen.len() + self.bound(&remaining) <= self.best {
            return Ok(());
        }
        // branch on a maximum-degree vertex
        let v = remaining
            .iter()
            .max_by_key(|&v| (self.g.neighbours(v).intersect(&remaining).len(), usize::MAX - v))
            .unwrap();
        // include v
        let mut chosen2 = chosen;
        chosen2.insert(v);
        let rem2 = remaining.minus(self.g.neighbours(v));
        let mut rem2 = rem2;
        rem2.remove(v);
        self.run(chosen2, rem2)?;
        // exclude v
        let mut rem3 = remaining;
        rem3.remove(v);
        self.run(chosen, rem3)
    }
}

/// Exact independence number with witness, by branch-and-bound with
/// degree-0/1 reductions and a matching-based upper bound.
pub fn independence_number(
    g: &UndirectedGraph,
    budget: Budget,
) -> Result<(usize, VertexSet), BudgetExceeded> {
    let mut search = MisSearch {
        g,
        budget,
        nodes: 0,
        best: 0,
        best_set: VertexSet::EMPTY,
    };
    search.run(VertexSet::EMPTY, VertexSet::full(g.n()))?;
    Ok((search.best, search.best_set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::construct;
    use crate::random::SeededRng;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn landmarks() {
        let c3 = construct::directed_cycle(3);
        assert_eq!(acyclic_number(&c3, b()).unwrap().0, 2);
        let p7 = construct::paley_tournament(7).unwrap();
        assert_eq!(acyclic_number(&p7, b()).unwrap().0, 3);
        for n in [1, 4, 9] {
            let tt = construct::transitive_tournament(n);
            assert_eq!(acyclic_number(&tt, b()).unwrap().0, n);
        }
    }

    #[test]
    fn witness_is_acyclic_and_maximum() {
        let p7 = construct::paley_tournament(7).unwrap();
        let (a, witness) = acyclic_number(&p7, b()).unwrap();
        assert_eq!(witness.len(), a);
        assert!(p7.is_acyclic_induced(&witness));
    }

    #[test]
    fn matches_brute_force_on_random_digraphs() {
        let mut rng = SeededRng::new(12);
        for _ in 0..120 {
            let n = 1 + rng.below(8) as usize;
            let d = crate::random::random_digraph(n, 0.4, rng.derive());
            let (a, w) = acyclic_number(&d, b()).unwrap();
            assert_eq!(a, brute::acyclic_number(&d).0, "digraph {d:?}");
            assert!(d.is_acyclic_induced(&w));
            assert!(has_acyclic_set_of_size(&d, a, b()).unwrap());
            assert!(!has_acyclic_set_of_size(&d, a + 1, b()).unwrap());
        }
        // subset-scan oracle equivalence at larger orders
        for n in [12usize, 14] {
            for _ in 0..6 {
                let d = crate::random::random_digraph(n, 0.22, rng.derive());
                assert_eq!(
                    acyclic_number(&d, b()).unwrap().0,
                    brute::acyclic_number(&d).0
                );
            }
        }
    }

    #[test]
    fn peeling_acyclicity_agrees_with_ordering_definition() {
        // induced acyclicity via source peeling vs. existence of a
        // topological ordering, on random digraphs and random subsets
        let mut rng = SeededRng::new(88);
        for _ in 0..150 {
            let n = 1 + rng.below(8) as usize;
            let d = crate::random::random_digraph(n, 0.45, rng.derive());
            let s = crate::bitset::VertexSet::from_iter(
                (0..n).filter(|_| rng.chance(0.6)),
            );
            assert_eq!(
                d.is_acyclic_induced(&s),
                brute::is_acyclic_by_orderings(&d, &s),
                "digraph {d:?} set {s:?}"
            );
        }
    }

    #[test]
    fn independence_landmarks() {
        let c5 = construct::cycle_graph(5);
        assert_eq!(independence_number(&c5, b()).unwrap().0, 2);
        let g = construct::grotzsch();
        let (alpha, w) = independence_number(&g, b()).unwrap();
        assert_eq!(alpha, brute::independence_number(&g).0);
        assert_eq!(alpha, 5);
        for (i, u) in w.to_vec().iter().enumerate() {
            for v in w.to_vec().iter().skip(i + 1) {
                assert!(!g.has_edge(*u, *v));
            }
        }
        let edgeless = UndirectedGraph::new(9);
        assert_eq!(independence_number(&edgeless, b()).unwrap().0, 9);
    }

    #[test]
    fn independence_matches_brute_on_random_graphs() {
        let mut rng = SeededRng::new(77);
        for _ in 0..120 {
            let n = 1 + rng.below(9) as usize;
            let g = crate::random::random_gnp(n, 0.35, rng.derive());
            assert_eq!(
                independence_number(&g, b()).unwrap().0,
                brute::independence_number(&g).0
            );
        }
    }

    #[test]
    fn acyclic_at_least_independence_of_underlying() {
        let mut rng = SeededRng::new(5);
        for _ in 0..60 {
            let n = 2 + rng.below(8) as usize;
            let d = crate::random::random_digraph(n, 0.5, rng.derive());
            let a = acyclic_number(&d, b()).unwrap().0;
            let alpha = independence_number(&d.underlying_graph(), b()).unwrap().0;
            assert!(a >= alpha);
        }
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let p7 = construct::paley_tournament(7).unwrap();
        let tiny = Budget::new(2);
        assert!(acyclic_number(&p7, tiny).is_err());
    }
}
