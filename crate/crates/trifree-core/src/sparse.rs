//! d-sparsity of vertex sets, orientations whose acyclic sets are all
//! d-sparse, and the numeric side of the probabilistic arguments: binomial
//! tail bounds, Chernoff's bound and the local-lemma constants.

use crate::acyclic;
use crate::bitset::VertexSet;
use crate::graph::{Digraph, UndirectedGraph};
use crate::random::{self, SeededRng};
use crate::Budget;
use alloc::vec::Vec;
use libm::{exp, log, log2, pow, sqrt};

/// The parameter bundle of the sparse-orientation argument:
/// `d = 2 log2 n + 1`, `p = c0 / sqrt(n)`, `k = c1 d / p + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SparsityParams {
    pub n: usize,
    pub d: f64,
    pub p: f64,
    pub k: f64,
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub eps: f64,
}

impl SparsityParams {
    pub fn new(n: usize, c0: f64, c1: f64, c2: f64, eps: f64) -> Self {
        assert!(n >= 2, "parameters need n >= 2");
        assert!(c0 > 0.0 && c1 > 0.0 && c2 > 0.0 && eps > 0.0);
        let d = 2.0 * log2(n as f64) + 1.0;
        let p = c0 / sqrt(n as f64);
        assert!(p > 0.0 && p < 1.0, "edge probability must land in (0,1)");
        SparsityParams {
            n,
            d,
            p,
            k: c1 * d / p + 1.0,
            c0,
            c1,
            c2,
            eps,
        }
    }

    /// The standard sparsity bound `d = 2 log2 n + 1` on its own.
    pub fn sparsity_bound(n: usize) -> f64 {
        2.0 * log2(n as f64) + 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptySetError;

impl core::fmt::Display for EmptySetError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "d-sparsity is undefined for the empty set")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EmptySetError {}

/// True iff the average degree of `G[x]` is at most `d`, i.e.
/// `2 e(G[x]) <= d |x|`.
pub fn is_d_sparse(g: &UndirectedGraph, x: &VertexSet, d: f64) -> Result<bool, EmptySetError> {
    if x.is_empty() {
        return Err(EmptySetError);
    }
    let e = g.edges_within(x);
    Ok(2.0 * e as f64 <= d * x.len() as f64)
}

/// How a sparse-orientation claim was verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    /// Every one of the `2^n` vertex subsets was scanned.
    Exhaustive,
    /// Only `samples` random subsets were scanned.
    Sampled { samples: u64 },
}

/// A violating set for an orientation: acyclic but denser than `d`.
#[derive(Debug, Clone)]
pub struct Violation {
    pub set: VertexSet,
    pub average_degree: f64,
}

/// Scan for an acyclic set of average degree above `d` in the orientation.
/// Exhaustive over all subsets (requires `n <= 18`); returns the densest
/// violating acyclic set, if any.
pub fn densest_acyclic_violation(or: &Digraph, d: f64) -> Option<Violation> {
    let n = or.n();
    assert!(n <= 18, "exhaustive subset scan limited to n <= 18");
    let g = or.underlying_graph();
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let in_rows: Vec<u32> = (0..n)
        .map(|v| or.in_neighbours(v).iter().fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let mut worst: Option<Violation> = None;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        let mut twice_e = 0usize;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            twice_e += (rows[v] & mask).count_ones() as usize;
        }
        if twice_e as f64 <= d * size as f64 {
            continue;
        }
        // dense: is it acyclic? peel sources within the mask
        let mut remaining = mask;
        loop {
            let mut peeled = false;
            let mut bits = remaining;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if in_rows[v] & remaining == 0 {
                    remaining &= !(1 << v);
                    peeled = true;
                }
            }
            if remaining == 0 || !peeled {
                break;
            }
        }
        if remaining == 0 {
            let avg = twice_e as f64 / size as f64;
            if worst.as_ref().is_none_or(|w| avg > w.average_degree) {
                worst = Some(Violation {
                    set: VertexSet::from_iter((0..n).filter(|&v| mask >> v & 1 == 1)),
                    average_degree: avg,
                });
            }
        }
    }
    worst
}

fn sampled_violation(or: &Digraph, d: f64, samples: u64, mut rng: SeededRng) -> Option<Violation> {
    let n = or.n();
    let g = or.underlying_graph();
    for _ in 0..samples {
        let set = VertexSet::from_iter((0..n).filter(|_| rng.chance(0.5)));
        if set.is_empty() {
            continue;
        }
        let e = g.edges_within(&set);
        let avg = 2.0 * e as f64 / set.len() as f64;
        if avg > d && or.is_acyclic_induced(&set) {
            return Some(Violation {
                set,
                average_degree: avg,
            });
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct DsparseOrientation {
    pub orientation: Digraph,
    pub d: f64,
    pub trials_used: u64,
    pub verification: Verification,
}

/// All trials produced a violating acyclic set; the densest one found is
/// reported.
#[derive(Debug, Clone)]
pub struct DsparseFailure {
    pub trials: u64,
    pub densest: Option<Violation>,
}

/// Search for an orientation in which every acyclic set is d-sparse, with
/// `d = 2 log2 n + 1`: fresh uniform orientations are drawn until one
/// verifies (the union bound in the probabilistic argument makes a handful
/// of trials enough). Verification is exhaustive for `n <= 18`, sampled
/// beyond.
pub fn find_dsparse_orientation(
    g: &UndirectedGraph,
    trials: u64,
    seed: u64,
) -> Result<DsparseOrientation, DsparseFailure> {
    let n = g.n();
    let d = SparsityParams::sparsity_bound(n.max(2));
    let mut rng = SeededRng::new(seed);
    let mut densest: Option<Violation> = None;
    const SAMPLES: u64 = 20_000;
    for trial in 0..trials {
        let or = random::random_orientation(g, rng.derive());
        let violation = if n <= 18 {
            densest_acyclic_violation(&or, d)
        } else {
            sampled_violation(&or, d, SAMPLES, rng.derive())
        };
        match violation {
            None => {
                return Ok(DsparseOrientation {
                    orientation: or,
                    d,
                    trials_used: trial + 1,
                    verification: if n <= 18 {
                        Verification::Exhaustive
                    } else {
                        Verification::Sampled { samples: SAMPLES }
                    },
                })
            }
            Some(v) => {
                if densest
                    .as_ref()
                    .is_none_or(|w| v.average_degree > w.average_degree)
                {
                    densest = Some(v);
                }
            }
        }
    }
    Err(DsparseFailure { trials, densest })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainError(pub &'static str);

impl core::fmt::Display for DomainError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "domain violation: {}", self.0)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DomainError {}

/// The rate function `L(x) = x ln(x/p) + (1-x) ln((1-x)/(1-p))`.
pub fn rate_function(x: f64, p: f64) -> f64 {
    x * log(x / p) + (1.0 - x) * log((1.0 - x) / (1.0 - p))
}

/// Analytic lower-tail bound `P[X <= k] <= exp(-n L(k/n))` for
/// `X ~ B(n, p)`. Requires `0 < k < n` and `p` in `(0,1)`.
pub fn binomial_tail_bound(n: u64, p: f64, k: u64) -> Result<f64, DomainError> {
    if !(0.0 < p && p < 1.0) {
        return Err(DomainError("p must lie in (0,1)"));
    }
    if k >= n {
        return Err(DomainError("k must be below n"));
    }
    if k == 0 {
        return Err(DomainError("k/n must lie in (0,1)"));
    }
    let x = k as f64 / n as f64;
    Ok(exp(-(n as f64) * rate_function(x, p)))
}

/// Multiplicative Chernoff bound
/// `P[X < (1-delta) E X] < (e^{-delta} / (1-delta)^{1-delta})^{E X}`.
pub fn chernoff_bound(mean: f64, delta: f64) -> Result<f64, DomainError> {
    if !(0.0 < delta && delta < 1.0) {
        return Err(DomainError("delta must lie in (0,1)"));
    }
    if mean < 0.0 {
        return Err(DomainError("mean must be nonnegative"));
    }
    let base = exp(-delta) / pow(1.0 - delta, 1.0 - delta);
    Ok(pow(base, mean))
}

/// Numeric check of the two local-lemma conditions with explicit margins:
/// `c1 (c1 - 1 - ln c1) > 1 + c2` and `c2 > (1 + eps) (c0 c1)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LllReport {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub eps: f64,
    pub lhs1: f64,
    pub rhs1: f64,
    pub margin1: f64,
    pub holds1: bool,
    pub lhs2: f64,
    pub rhs2: f64,
    pub margin2: f64,
    pub holds2: bool,
}

impl LllReport {
    pub fn all_hold(&self) -> bool {
        self.holds1 && self.holds2
    }
}

pub fn verify_lll_constants(c0: f64, c1: f64, c2: f64, eps: f64) -> LllReport {
    let lhs1 = c1 * (c1 - 1.0 - log(c1));
    let rhs1 = 1.0 + c2;
    let lhs2 = c2;
    let rhs2 = (1.0 + eps) * (c0 * c1) * (c0 * c1);
    LllReport {
        c0,
        c1,
        c2,
        eps,
        lhs1,
        rhs1,
        margin1: lhs1 - rhs1,
        holds1: lhs1 > rhs1,
        lhs2,
        rhs2,
        margin2: lhs2 - rhs2,
        holds2: lhs2 > rhs2,
    }
}

/// Outcome of checking `chi(G) <= 2 max-dichromatic(G) (1 + floor(log2 n))`,
/// where the maximum ranges over orientations of `G` (one arc per edge).
#[derive(Debug, Clone)]
pub struct ChiBoundReport {
    pub chi: usize,
    pub max_dichromatic: usize,
    pub maximising_orientation: Digraph,
    pub orientations_checked: u64,
    pub exhaustive: bool,
    pub bound: usize,
    pub holds: bool,
}

/// Verify the chromatic-vs-dichromatic inequality on one graph. Exhaustive
/// over all `2^m` orientations when `n <= 6`, sampled otherwise.
pub fn chi_bound_check(
    g: &UndirectedGraph,
    seed: u64,
    budget: Budget,
) -> Result<ChiBoundReport, crate::BudgetExceeded> {
    let n = g.n();
    let chi = crate::dicolour::chromatic_number(g, budget)?.0;
    let edges = g.edges();
    let m = edges.len();
    let exhaustive = n <= 6;
    let orient = |mask: u64| -> Digraph {
        let mut d = Digraph::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d.add_arc(u, v);
            } else {
                d.add_arc(v, u);
            }
        }
        d
    };
    let mut best = 0usize;
    let mut best_or = orient(0);
    let mut checked = 0u64;
    if exhaustive {
        for mask in 0u64..(1u64 << m) {
            let d = orient(mask);
            let val = crate::dicolour::dichromatic_number(&d, budget)?.0;
            checked += 1;
            if val > best {
                best = val;
                best_or = d;
            }
        }
    } else {
        let mut rng = SeededRng::new(seed);
        for _ in 0..512 {
            let mask = rng.next_u64() & ((1u64 << m.min(63)) - 1);
            let d = orient(mask);
            let val = crate::dicolour::dichromatic_number(&d, budget)?.0;
            checked += 1;
            if val > best {
                best = val;
                best_or = d;
            }
        }
    }
    let floor_log2 = if n == 0 { 0 } else { usize::BITS as usize - 1 - (n.leading_zeros() as usize) };
    let bound = 2 * best.max(1) * (1 + floor_log2);
    Ok(ChiBoundReport {
        chi,
        max_dichromatic: best,
        maximising_orientation: best_or,
        orientations_checked: checked,
        exhaustive,
        bound,
        holds: chi <= bound,
    })
}

/// One row of the desk-scale demonstration report: the empirical acyclic
/// number of a triangle-free-conditioned `G(n, c0/sqrt(n))` orientation
/// against the `(107/8) sqrt(n) log n` threshold. The asymptotic theorem is
/// not reproducible at these sizes; the report is explicitly non-probative.
#[derive(Debug, Clone, Copy)]
pub struct AlphaDemoRow {
    pub n: usize,
    pub alpha: usize,
    /// `(107/8) sqrt(n) ln n` (natural log reading)
    pub threshold_ln: f64,
    /// `(107/8) sqrt(n) log2 n` (base-2 reading of the same threshold)
    pub threshold_log2: f64,
    pub rejections: u64,
}

pub fn alpha_demo_row(
    n: usize,
    c0: f64,
    seed: u64,
    budget: Budget,
) -> Result<AlphaDemoRow, crate::BudgetExceeded> {
    let p = c0 / sqrt(n as f64);
    let mut rng = SeededRng::new(seed);
    let mut rejections = 0u64;
    let g = loop {
        let g = random::random_gnp(n, p, rng.derive());
        if g.is_triangle_free() {
            break g;
        }
        rejections += 1;
        assert!(rejections < 1_000_000, "triangle-free rejection runaway");
    };
    let or = random::random_orientation(&g, rng.derive());
    let alpha = acyclic::acyclic_number(&or, budget)?.0;
    let nf = n as f64;
    Ok(AlphaDemoRow {
        n,
        alpha,
        threshold_ln: 107.0 / 8.0 * sqrt(nf) * log(nf),
        threshold_log2: 107.0 / 8.0 * sqrt(nf) * log2(nf),
        rejections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::construct;

    #[test]
    fn d_sparse_basics() {
        let k4 = construct::complete_graph(4);
        let all = VertexSet::full(4);
        // average degree 3
        assert_eq!(is_d_sparse(&k4, &all, 2.9), Ok(false));
        assert_eq!(is_d_sparse(&k4, &all, 3.0), Ok(true));
        let indep = VertexSet::from_iter([0, 2]);
        let edgeless = UndirectedGraph::new(4);
        assert_eq!(is_d_sparse(&edgeless, &indep, 0.0), Ok(true));
        assert!(is_d_sparse(&k4, &VertexSet::EMPTY, 1.0).is_err());
    }

    #[test]
    fn d_sparse_boundary_arithmetic() {
        // |X| = 4 with e edges: sparse iff 2e <= 4d
        let mut g = UndirectedGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        let x = VertexSet::full(4);
        assert_eq!(is_d_sparse(&g, &x, 1.5), Ok(true)); // 6 <= 6
        assert_eq!(is_d_sparse(&g, &x, 1.4), Ok(false));
    }

    #[test]
    fn violation_scan_flags_transitive_tournament_on_9() {
        // d = 2 log2 9 + 1 ~ 7.34 but the full vertex set of an acyclically
        // oriented K9 has average degree 8
        let tt = construct::transitive_tournament(9);
        let d = SparsityParams::sparsity_bound(9);
        let v = densest_acyclic_violation(&tt, d).expect("violation expected");
        assert_eq!(v.set.len(), 9);
        assert!(v.average_degree > d);
    }

    #[test]
    fn edgeless_graph_orients_vacuously() {
        let g = UndirectedGraph::new(8);
        let out = find_dsparse_orientation(&g, 3, 99).unwrap();
        assert_eq!(out.trials_used, 1);
        assert_eq!(out.verification, Verification::Exhaustive);
    }

    #[test]
    fn sparsity_bound_value_at_16() {
        assert!((SparsityParams::sparsity_bound(16) - 9.0).abs() < 1e-12);
    }

    #[test]
    fn zero_trials_report_failure() {
        let g = construct::complete_graph(9);
        let err = find_dsparse_orientation(&g, 0, 3).unwrap_err();
        assert_eq!(err.trials, 0);
        assert!(err.densest.is_none());
    }

    #[test]
    fn random_triangle_free_14_succeeds_quickly() {
        let g = random::random_triangle_free(14, 0.4, SeededRng::new(5));
        let out = find_dsparse_orientation(&g, 5, 17).unwrap();
        assert!(out.trials_used <= 3);
        // independent re-check of the returned orientation
        assert!(densest_acyclic_violation(&out.orientation, out.d).is_none());
        assert_eq!(out.orientation.underlying_graph().edges(), g.edges());
    }

    #[test]
    fn tail_bound_dominates_exact_cdf() {
        for n in [10u64, 20, 30] {
            for pi in 1..=9 {
                let p = pi as f64 / 10.0;
                for k in 1..n {
                    if (k as f64) < n as f64 * p {
                        let bound = binomial_tail_bound(n, p, k).unwrap();
                        let exact = brute::binomial_cdf(n, p, k);
                        assert!(
                            bound >= exact - 1e-12,
                            "n={n} p={p} k={k}: {bound} < {exact}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tail_bound_is_one_at_the_mean() {
        // L(p) = 0 so the bound degenerates to 1
        let b = binomial_tail_bound(100, 0.25, 25).unwrap();
        assert!((b - 1.0).abs() < 1e-12);
        assert!(rate_function(0.25, 0.25).abs() < 1e-15);
    }

    #[test]
    fn tail_bound_domain_errors() {
        assert!(binomial_tail_bound(10, 0.5, 10).is_err());
        assert!(binomial_tail_bound(10, 0.5, 0).is_err());
        assert!(binomial_tail_bound(10, 1.0, 5).is_err());
    }

    #[test]
    fn chernoff_limit_and_monotonicity() {
        let near_zero = chernoff_bound(10.0, 1e-9).unwrap();
        assert!((near_zero - 1.0).abs() < 1e-6);
        let mid = chernoff_bound(10.0, 0.5).unwrap();
        let hard = chernoff_bound(10.0, 0.9).unwrap();
        assert!(hard < mid && mid < near_zero);
        assert!(chernoff_bound(10.0, 0.0).is_err());
        assert!(chernoff_bound(10.0, 1.0).is_err());
    }

    #[test]
    fn lll_paper_constants_hold_with_positive_margins() {
        let r = verify_lll_constants(0.513, 3.43, 3.1, 1e-4);
        assert!(r.all_hold());
        assert!(r.margin1 > 0.0 && r.margin2 > 0.0);
        // direct evaluation: c1(c1-1-ln c1) - (1+c2) and c2 - (1+eps)(c0c1)^2
        assert!((r.margin1 - 0.00722).abs() < 2e-4, "margin1 = {}", r.margin1);
        assert!((r.margin2 - 0.00353).abs() < 2e-4, "margin2 = {}", r.margin2);
    }

    #[test]
    fn lll_failing_configurations() {
        let r = verify_lll_constants(1.0, 1.0, 1.0, 1e-9);
        assert!(!r.holds1); // c1(c1-1-ln c1) = 0 < 2
        let c0 = 0.5;
        let c1 = 3.0;
        let c2 = (c0 * c1) * (c0 * c1); // equality: strictness fails for eps > 0
        let r = verify_lll_constants(c0, c1, c2, 1e-6);
        assert!(!r.holds2);
    }

    #[test]
    fn lll_monotone_in_c2() {
        let base = verify_lll_constants(0.513, 3.43, 3.1, 1e-4);
        let bumped = verify_lll_constants(0.513, 3.43, 3.4, 1e-4);
        assert!(bumped.margin1 < base.margin1);
        assert!(bumped.margin2 > base.margin2);
    }

    #[test]
    fn chi_bound_on_small_graphs() {
        let b = Budget::default();
        let k3 = construct::complete_graph(3);
        let r = chi_bound_check(&k3, 1, b).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.chi, 3);
        // the cyclic triangle needs two colours; the maximum is attained there
        assert_eq!(r.max_dichromatic, 2);
        assert!(r.holds);

        let c5 = construct::cycle_graph(5);
        let r = chi_bound_check(&c5, 1, b).unwrap();
        assert_eq!(r.chi, 3);
        assert_eq!(r.max_dichromatic, 2); // the directed C5
        assert!(r.holds);

        let edgeless = UndirectedGraph::new(4);
        let r = chi_bound_check(&edgeless, 1, b).unwrap();
        assert_eq!((r.chi, r.max_dichromatic), (1, 1));
        assert!(r.holds);
    }

    #[test]
    fn alpha_demo_row_is_reproducible() {
        let a = alpha_demo_row(20, 0.513, 7, Budget::default()).unwrap();
        let b = alpha_demo_row(20, 0.513, 7, Budget::default()).unwrap();
        assert_eq!(a.alpha, b.alpha);
        assert!(a.threshold_log2 > a.threshold_ln);
    }
}
