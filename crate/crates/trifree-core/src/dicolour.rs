//! Exact k-dicolourability, dichromatic number, dicriticality and the
//! chromatic number of undirected graphs, all with certificates.

use crate::bitset::VertexSet;
use crate::graph::{Digraph, UndirectedGraph};
use crate::Budget;
use alloc::vec;
use alloc::vec::Vec;

/// A (candidate) dicolouring: colours are stored 0-based internally; the
/// 1-based convention appears only at I/O boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dicolouring {
    pub k: usize,
    pub colours: Vec<u8>,
}

impl Dicolouring {
    pub fn new(k: usize, colours: Vec<u8>) -> Self {
        Dicolouring { k, colours }
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v] as usize
    }

    pub fn class(&self, c: usize) -> VertexSet {
        VertexSet::from_iter(
            (0..self.colours.len()).filter(|&v| self.colours[v] as usize == c),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColouringError {
    /// The assignment does not cover exactly the vertex set.
    PartialAssignment { expected: usize, got: usize },
    /// A colour lies outside `[0, k)`.
    ColourOutOfRange { vertex: usize, colour: usize },
}

impl core::fmt::Display for ColouringError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ColouringError::PartialAssignment { expected, got } => {
                write!(f, "assignment covers {got} vertices, digraph has {expected}")
            }
            ColouringError::ColourOutOfRange { vertex, colour } => {
                write!(f, "vertex {vertex} has colour {colour} outside the palette")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ColouringError {}

/// True iff every colour class induces an acyclic subdigraph.
pub fn verify_dicolouring(d: &Digraph, c: &Dicolouring) -> Result<bool, ColouringError> {
    if c.colours.len() != d.n() {
        return Err(ColouringError::PartialAssignment {
            expected: d.n(),
            got: c.colours.len(),
        });
    }
    for (v, &col) in c.colours.iter().enumerate() {
        if col as usize >= c.k {
            return Err(ColouringError::ColourOutOfRange {
                vertex: v,
                colour: col as usize,
            });
        }
    }
    Ok((0..c.k).all(|col| d.is_acyclic_induced(&c.class(col))))
}

/// True iff no edge is monochromatic.
pub fn verify_proper_colouring(
    g: &UndirectedGraph,
    c: &Dicolouring,
) -> Result<bool, ColouringError> {
    if c.colours.len() != g.n() {
        return Err(ColouringError::PartialAssignment {
            expected: g.n(),
            got: c.colours.len(),
        });
    }
    for (v, &col) in c.colours.iter().enumerate() {
        if col as usize >= c.k {
            return Err(ColouringError::ColourOutOfRange {
                vertex: v,
                colour: col as usize,
            });
        }
    }
    Ok((0..g.n())
        .all(|u| !g.neighbours(u).iter().any(|v| v > u && c.colours[u] == c.colours[v])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Dicolourable,
    NotDicolourable,
    BudgetExceeded,
}

/// Search statistics; negative verdicts carry these as an auditable trace.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    /// Wall time; 0 when built without `std`.
    pub elapsed_micros: u64,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    pub certificate: Option<Dicolouring>,
    pub stats: SearchStats,
}

/// Branch order: degeneracy order of the underlying graph, highest coreness
/// first, ties by lowest index.
fn branch_order(g: &UndirectedGraph) -> Vec<usize> {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| (g.neighbours(v).intersect(&alive).len(), v))
            .unwrap();
        alive.remove(v);
        removal.push(v);
    }
    removal.reverse();
    removal
}

enum SearchResult {
    Found,
    Exhausted,
    OutOfBudget,
}

/// One colour class under construction: members plus a maintained
/// topological order. Insertion first tries to splice the vertex between
/// its latest in-neighbour and earliest out-neighbour; only when those
/// overlap does it fall back to a full re-sort of the class.
struct ClassState {
    members: VertexSet,
    topo: Vec<u16>,
}

enum Undo {
    Inserted { class: usize, pos: usize },
    Rebuilt { class: usize, old_topo: Vec<u16> },
}

struct DicolourSearch<'a> {
    d: &'a Digraph,
    k: usize,
    order: Vec<usize>,
    classes: Vec<ClassState>,
    budget: Budget,
    nodes: u64,
    max_depth: usize,
    certificate: Option<Vec<u8>>,
}

impl DicolourSearch<'_> {
    fn try_insert(&mut self, class: usize, v: usize) -> Option<Undo> {
        let ins = self.d.in_neighbours(v);
        let outs = self.d.out_neighbours(v);
        let state = &mut self.classes[class];
        let mut last_in: Option<usize> = None;
        let mut first_out: Option<usize> = None;
        for (idx, &w) in state.topo.iter().enumerate() {
            let w = w as usize;
            if ins.contains(w) {
                last_in = Some(idx);
            }
            if outs.contains(w) && first_out.is_none() {
                first_out = Some(idx);
            }
        }
        let pos = match (last_in, first_out) {
            (None, None) => Some(state.topo.len()),
            (None, Some(f)) => Some(f),
            (Some(l), None) => Some(l + 1),
            (Some(l), Some(f)) if l < f => Some(l + 1),
            _ => None,
        };
        if let Some(pos) = pos {
            state.topo.insert(pos, v as u16);
            state.members.insert(v);
            return Some(Undo::Inserted { class, pos });
        }
        // conflicting positions: re-sort the whole class or report a cycle
        let mut with_v = state.members;
        with_v.insert(v);
        match self.d.topological_order(&with_v) {
            Some(order) => {
                let old_topo = core::mem::replace(
                    &mut state.topo,
                    order.into_iter().map(|x| x as u16).collect(),
                );
                state.members.insert(v);
                Some(Undo::Rebuilt { class, old_topo })
            }
            None => None,
        }
    }

    fn undo(&mut self, undo: Undo, v: usize) {
        match undo {
            Undo::Inserted { class, pos } => {
                self.classes[class].topo.remove(pos);
                self.classes[class].members.remove(v);
            }
            Undo::Rebuilt { class, old_topo } => {
                self.classes[class].topo = old_topo;
                self.classes[class].members.remove(v);
            }
        }
    }

    fn run(&mut self, idx: usize, opened: usize, colours: &mut Vec<u8>) -> SearchResult {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(idx);
        if self.nodes > self.budget.max_nodes {
            return SearchResult::OutOfBudget;
        }
        if idx == self.order.len() {
            self.certificate = Some(colours.clone());
            return SearchResult::Found;
        }
        let v = self.order[idx];
        // a brand-new colour may only be opened as the next unused index,
        // which removes the k! colour symmetry
        let limit = (opened + 1).min(self.k);
        for c in 0..limit {
            if let Some(undo) = self.try_insert(c, v) {
                colours[v] = c as u8;
                let result = self.run(idx + 1, opened.max(c + 1), colours);
                self.undo(undo, v);
                if !matches!(result, SearchResult::Exhausted) {
                    return result;
                }
            }
        }
        SearchResult::Exhausted
    }
}

#[cfg(feature = "std")]
fn now_micros() -> Option<std::time::Instant> {
    Some(std::time::Instant::now())
}

#[cfg(not(feature = "std"))]
fn now_micros() -> Option<()> {
    None
}

/// Complete decision of `k`-dicolourability within the node budget.
/// Positive outcomes carry a validated certificate; negative verdicts are
/// exhaustive.
pub fn is_k_dicolourable(d: &Digraph, k: usize, budget: Budget) -> SolveOutcome {
    assert!(k >= 1, "k must be at least 1");
    let start = now_micros();
    let mut search = DicolourSearch {
        d,
        k,
        order: branch_order(&d.underlying_graph()),
        classes: (0..k)
            .map(|_| ClassState {
                members: VertexSet::EMPTY,
                topo: Vec::new(),
            })
            .collect(),
        budget,
        nodes: 0,
        max_depth: 0,
        certificate: None,
    };
    let mut colours = vec![0u8; d.n()];
    let result = search.run(0, 0, &mut colours);
    let stats = SearchStats {
        nodes: search.nodes,
        max_depth: search.max_depth,
        elapsed_micros: elapsed(start),
    };
    match result {
        SearchResult::Found => {
            let cert = Dicolouring::new(k, search.certificate.unwrap());
            debug_assert_eq!(verify_dicolouring(d, &cert), Ok(true));
            SolveOutcome {
                verdict: Verdict::Dicolourable,
                certificate: Some(cert),
                stats,
            }
        }
        SearchResult::Exhausted => SolveOutcome {
            verdict: Verdict::NotDicolourable,
            certificate: None,
            stats,
        },
        SearchResult::OutOfBudget => SolveOutcome {
            verdict: Verdict::BudgetExceeded,
            certificate: None,
            stats,
        },
    }
}

#[cfg(feature = "std")]
fn elapsed(start: Option<std::time::Instant>) -> u64 {
    start.map(|s| s.elapsed().as_micros() as u64).unwrap_or(0)
}

#[cfg(not(feature = "std"))]
fn elapsed(_start: Option<()>) -> u64 {
    0
}

/// Exact dichromatic number with a certificate for `k` colours; the refusal
/// for `k - 1` colours is exhaustive.
pub fn dichromatic_number(
    d: &Digraph,
    budget: Budget,
) -> Result<(usize, Dicolouring), crate::BudgetExceeded> {
    if d.n() == 0 {
        return Ok((0, Dicolouring::new(0, Vec::new())));
    }
    for k in 1..=d.n() {
        let outcome = is_k_dicolourable(d, k, budget);
        match outcome.verdict {
            Verdict::Dicolourable => return Ok((k, outcome.certificate.unwrap())),
            Verdict::NotDicolourable => continue,
            Verdict::BudgetExceeded => {
                return Err(crate::BudgetExceeded {
                    nodes: outcome.stats.nodes,
                })
            }
        }
    }
    unreachable!("every digraph on n vertices is n-dicolourable")
}

/// Exact chromatic number of an undirected graph with a proper colouring
/// certificate. Same branch-and-bound as the dicolouring solver, with
/// independent sets instead of acyclic classes.
pub fn chromatic_number(
    g: &UndirectedGraph,
    budget: Budget,
) -> Result<(usize, Dicolouring), crate::BudgetExceeded> {
    if g.n() == 0 {
        return Ok((0, Dicolouring::new(0, Vec::new())));
    }
    for k in 1..=g.n() {
        match is_k_colourable(g, k, budget)? {
            Some(cert) => return Ok((k, cert)),
            None => continue,
        }
    }
    unreachable!("every graph on n vertices is n-colourable")
}

struct ColourSearch<'a> {
    g: &'a UndirectedGraph,
    k: usize,
    order: Vec<usize>,
    classes: Vec<VertexSet>,
    budget: Budget,
    nodes: u64,
    certificate: Option<Vec<u8>>,
}

impl ColourSearch<'_> {
    fn run(&mut self, idx: usize, opened: usize, colours: &mut Vec<u8>) -> SearchResult {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return SearchResult::OutOfBudget;
        }
        if idx == self.order.len() {
            self.certificate = Some(colours.clone());
            return SearchResult::Found;
        }
        let v = self.order[idx];
        let limit = (opened + 1).min(self.k);
        for c in 0..limit {
            if !self.classes[c].intersects(self.g.neighbours(v)) {
                self.classes[c].insert(v);
                colours[v] = c as u8;
                let result = self.run(idx + 1, opened.max(c + 1), colours);
                self.classes[c].remove(v);
                if !matches!(result, SearchResult::Exhausted) {
                    return result;
                }
            }
        }
        SearchResult::Exhausted
    }
}

/// Decide `k`-colourability; returns the colouring when one exists.
pub fn is_k_colourable(
    g: &UndirectedGraph,
    k: usize,
    budget: Budget,
) -> Result<Option<Dicolouring>, crate::BudgetExceeded> {
    assert!(k >= 1);
    let mut search = ColourSearch {
        g,
        k,
        order: branch_order(g),
        classes: vec![VertexSet::EMPTY; k],
        budget,
        nodes: 0,
        certificate: None,
    };
    let mut colours = vec![0u8; g.n()];
    match search.run(0, 0, &mut colours) {
        SearchResult::Found => {
            let cert = Dicolouring::new(k, search.certificate.unwrap());
            debug_assert_eq!(verify_proper_colouring(g, &cert), Ok(true));
            Ok(Some(cert))
        }
        SearchResult::Exhausted => Ok(None),
        SearchResult::OutOfBudget => Err(crate::BudgetExceeded {
            nodes: search.nodes,
        }),
    }
}

/// One deletion check in a dicriticality report.
#[derive(Debug, Clone)]
pub enum Deletion {
    Vertex(usize),
    Arc(usize, usize),
}

/// Result of checking `chromatic = k` together with every vertex and arc
/// deletion dropping below `k`. Vertex and arc deletions are reported
/// separately in case a stricter convention is intended.
#[derive(Debug, Clone)]
pub struct DicriticalReport {
    pub k: usize,
    pub dichromatic: usize,
    pub base_certificate: Dicolouring,
    /// Deletions whose dichromatic number stays at `k` (should be empty).
    pub failing_vertices: Vec<usize>,
    pub failing_arcs: Vec<(usize, usize)>,
    /// `(k-1)`-dicolourings of each vertex deletion, indexed by vertex.
    pub vertex_certificates: Vec<(usize, Dicolouring)>,
    /// `(k-1)`-dicolourings of each arc deletion.
    pub arc_certificates: Vec<((usize, usize), Dicolouring)>,
    pub total_nodes: u64,
}

impl DicriticalReport {
    pub fn is_dicritical(&self) -> bool {
        self.dichromatic == self.k
            && self.failing_vertices.is_empty()
            && self.failing_arcs.is_empty()
    }
}

/// Full k-dicriticality check: `chi(d) = k`, and every single vertex or arc
/// deletion is `(k-1)`-dicolourable.
pub fn is_k_dicritical(
    d: &Digraph,
    k: usize,
    budget: Budget,
) -> Result<DicriticalReport, crate::BudgetExceeded> {
    assert!(k >= 1);
    let mut total_nodes = 0u64;
    let (chi, base_certificate) = dichromatic_number(d, budget)?;

    let mut report = DicriticalReport {
        k,
        dichromatic: chi,
        base_certificate,
        failing_vertices: Vec::new(),
        failing_arcs: Vec::new(),
        vertex_certificates: Vec::new(),
        arc_certificates: Vec::new(),
        total_nodes: 0,
    };
    if chi != k {
        return Ok(report);
    }

    let check = |sub: &Digraph, total_nodes: &mut u64| -> Result<Option<Dicolouring>, crate::BudgetExceeded> {
        if k == 1 {
            // 0 colours: only the empty digraph qualifies
            return Ok(if sub.n() == 0 {
                Some(Dicolouring::new(0, Vec::new()))
            } else {
                None
            });
        }
        let outcome = is_k_dicolourable(sub, k - 1, budget);
        *total_nodes += outcome.stats.nodes;
        match outcome.verdict {
            Verdict::Dicolourable => Ok(Some(outcome.certificate.unwrap())),
            Verdict::NotDicolourable => Ok(None),
            Verdict::BudgetExceeded => Err(crate::BudgetExceeded {
                nodes: outcome.stats.nodes,
            }),
        }
    };

    for v in 0..d.n() {
        let sub = d.remove_vertex(v);
        match check(&sub, &mut total_nodes)? {
            Some(cert) => report.vertex_certificates.push((v, cert)),
            None => report.failing_vertices.push(v),
        }
    }
    for (u, v) in d.arcs() {
        let sub = d.remove_arc(u, v);
        match check(&sub, &mut total_nodes)? {
            Some(cert) => report.arc_certificates.push(((u, v), cert)),
            None => report.failing_arcs.push((u, v)),
        }
    }
    report.total_nodes = total_nodes;
    Ok(report)
}
