//! Exact extremal values over all oriented triangle-free graphs of tiny
//! order: the minimum acyclic number and the maximum dichromatic number.

use crate::acyclic;
use crate::dicolour;
use crate::enumerate;
use crate::graph::Digraph;
use crate::{Budget, BudgetExceeded};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalError {
    /// Exhaustive scan is limited to 7 vertices.
    TooLarge(usize),
    Budget(BudgetExceeded),
}

impl core::fmt::Display for ExtremalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ExtremalError::TooLarge(n) => write!(f, "extremal scan needs n <= 7, got {n}"),
            ExtremalError::Budget(b) => write!(f, "{b}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ExtremalError {}

/// Extremal values at order `n` with witnesses.
#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub n: usize,
    /// minimum acyclic number over all oriented triangle-free graphs
    pub a_min: usize,
    pub a_witness: Digraph,
    /// maximum dichromatic number over all oriented triangle-free graphs
    pub t_max: usize,
    pub t_witness: Digraph,
    /// digraph isomorphism classes scanned
    pub classes: u64,
}

/// Scan every oriented triangle-free graph of order `n` (underlying
/// triangle-free classes times orientation classes) and report the
/// extremal acyclic and dichromatic numbers.
pub fn extremal_scan(n: usize, budget: Budget) -> Result<ExtremalReport, ExtremalError> {
    if n > 7 {
        return Err(ExtremalError::TooLarge(n));
    }
    assert!(n >= 1);
    let graphs = enumerate::enumerate_triangle_free(n, 0).expect("n <= 7 is internal");
    let mut report: Option<ExtremalReport> = None;
    let mut classes = 0u64;
    for g in &graphs {
        for d in enumerate::orientation_reps(g) {
            classes += 1;
            let a = acyclic::acyclic_number(&d, budget)
                .map_err(ExtremalError::Budget)?
                .0;
            let t = dicolour::dichromatic_number(&d, budget)
                .map_err(ExtremalError::Budget)?
                .0;
            match &mut report {
                None => {
                    report = Some(ExtremalReport {
                        n,
                        a_min: a,
                        a_witness: d.clone(),
                        t_max: t,
                        t_witness: d,
                        classes: 0,
                    })
                }
                Some(r) => {
                    if a < r.a_min {
                        r.a_min = a;
                        r.a_witness = d.clone();
                    }
                    if t > r.t_max {
                        r.t_max = t;
                        r.t_witness = d;
                    }
                }
            }
        }
    }
    let mut report = report.expect("at least the edgeless graph exists");
    report.classes = classes;
    Ok(report)
}
