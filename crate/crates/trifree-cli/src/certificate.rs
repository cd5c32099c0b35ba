//! Self-validating certificate documents, one JSON object per line.
//!
//! A document pins the instance (graph6/digraph6), the claim, and the
//! evidence. `verify` re-checks positive evidence directly against the
//! instance without re-running any search; refutation documents carry the
//! exhaustive-search statistics as an auditable trace instead of a
//! checkable certificate.

use crate::graph6;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use trifree_core::dicolour::{self, Dicolouring};
use trifree_core::order::VertexOrder;
use trifree_core::{decompose, linforest, Digraph, UndirectedGraph, VertexSet};

pub const FORMAT: &str = "trifree-certificate";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CertificateDocument {
    pub format: String,
    pub version: String,
    /// graph6 or digraph6 line, depending on the claim
    pub instance: String,
    /// when present, the claim is about the instance minus this deletion
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub deletion: Option<Deletion>,
    pub claim: Claim,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Deletion {
    Vertex(usize),
    Arc(usize, usize),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Claim {
    /// Colours are 1-based on the wire.
    KDicolouring { k: usize, colours: Vec<usize> },
    /// Exhaustive refutation; evidence is the search trace.
    NotKDicolourable {
        k: usize,
        nodes: u64,
        max_depth: usize,
    },
    ProperColouring { k: usize, colours: Vec<usize> },
    AcyclicSet { vertices: Vec<usize> },
    IndependentSet { vertices: Vec<usize> },
    DegreeHalvingOrder { order: Vec<usize> },
    LinearForest { arcs: Vec<(usize, usize)>, size: usize },
    Decomposition {
        pivot: usize,
        x: Vec<usize>,
        y: Vec<usize>,
        z: Vec<usize>,
        core: Vec<usize>,
        justification: String,
    },
}

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("unknown document format {0:?}")]
    UnknownFormat(String),
    #[error("instance does not parse: {0}")]
    BadInstance(#[from] graph6::CodecError),
    #[error("deletion out of range")]
    BadDeletion,
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("claim needs a digraph instance")]
    WantDigraph,
    #[error("claim needs an undirected instance")]
    WantGraph,
    #[error("index out of range in evidence")]
    IndexOutOfRange,
}

impl CertificateDocument {
    pub fn new(instance: String, claim: Claim) -> Self {
        CertificateDocument {
            format: FORMAT.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            instance,
            deletion: None,
            claim,
            seed: None,
        }
    }

    pub fn with_deletion(mut self, deletion: Deletion) -> Self {
        self.deletion = Some(deletion);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(line: &str) -> Result<Self, SchemaError> {
        let doc: CertificateDocument = serde_json::from_str(line)?;
        if doc.format != FORMAT {
            return Err(SchemaError::UnknownFormat(doc.format));
        }
        Ok(doc)
    }
}

fn digraph_instance(doc: &CertificateDocument) -> Result<Digraph, SchemaError> {
    if !doc.instance.starts_with('&') {
        return Err(SchemaError::WantDigraph);
    }
    let d = graph6::decode_digraph6(&doc.instance)?;
    match doc.deletion {
        None => Ok(d),
        Some(Deletion::Vertex(v)) => {
            if v >= d.n() {
                return Err(SchemaError::BadDeletion);
            }
            Ok(d.remove_vertex(v))
        }
        Some(Deletion::Arc(u, v)) => {
            if u >= d.n() || v >= d.n() || !d.has_arc(u, v) {
                return Err(SchemaError::BadDeletion);
            }
            Ok(d.remove_arc(u, v))
        }
    }
}

fn graph_instance(doc: &CertificateDocument) -> Result<UndirectedGraph, SchemaError> {
    if doc.instance.starts_with('&') {
        return Err(SchemaError::WantGraph);
    }
    let g = graph6::decode_graph6(&doc.instance)?;
    if doc.deletion.is_some() {
        return Err(SchemaError::BadDeletion);
    }
    Ok(g)
}

fn one_based_colouring(k: usize, colours: &[usize], n: usize) -> Result<Dicolouring, SchemaError> {
    if colours.len() != n {
        return Err(SchemaError::IndexOutOfRange);
    }
    let mut zero = Vec::with_capacity(n);
    for &c in colours {
        if c == 0 || c > k || k > u8::MAX as usize {
            return Err(SchemaError::IndexOutOfRange);
        }
        zero.push((c - 1) as u8);
    }
    Ok(Dicolouring::new(k, zero))
}

fn vertex_set(vertices: &[usize], n: usize) -> Result<VertexSet, SchemaError> {
    if vertices.iter().any(|&v| v >= n) {
        return Err(SchemaError::IndexOutOfRange);
    }
    Ok(VertexSet::from_iter(vertices.iter().copied()))
}

/// Re-validate the document's evidence. `Ok(false)` means the document is
/// well-formed but the evidence does not check out (e.g. tampering);
/// schema problems are errors, kept distinct from verification failure.
pub fn verify_certificate(doc: &CertificateDocument) -> Result<bool, SchemaError> {
    match &doc.claim {
        Claim::KDicolouring { k, colours } => {
            let d = digraph_instance(doc)?;
            let col = one_based_colouring(*k, colours, d.n())?;
            Ok(dicolour::verify_dicolouring(&d, &col) == Ok(true))
        }
        Claim::NotKDicolourable { .. } => {
            // negative verdicts are exhaustive searches; the stats are an
            // audit trace, not something re-checkable in polynomial time
            digraph_instance(doc)?;
            Ok(true)
        }
        Claim::ProperColouring { k, colours } => {
            let g = graph_instance(doc)?;
            let col = one_based_colouring(*k, colours, g.n())?;
            Ok(dicolour::verify_proper_colouring(&g, &col) == Ok(true))
        }
        Claim::AcyclicSet { vertices } => {
            let d = digraph_instance(doc)?;
            let s = vertex_set(vertices, d.n())?;
            Ok(d.is_acyclic_induced(&s))
        }
        Claim::IndependentSet { vertices } => {
            let g = graph_instance(doc)?;
            let s = vertex_set(vertices, g.n())?;
            Ok(s
                .iter()
                .all(|u| !g.neighbours(u).intersects(&s)))
        }
        Claim::DegreeHalvingOrder { order } => {
            let d = digraph_instance(doc)?;
            if order.len() != d.n() {
                return Err(SchemaError::IndexOutOfRange);
            }
            let mut seen = vec![false; d.n()];
            for &v in order {
                if v >= d.n() || seen[v] {
                    return Err(SchemaError::IndexOutOfRange);
                }
                seen[v] = true;
            }
            let ord = VertexOrder::from_seq(order.clone());
            Ok(trifree_core::order::halving_holds(&d, &ord))
        }
        Claim::LinearForest { arcs, size } => {
            let d = digraph_instance(doc)?;
            let forest = linforest::LinearForest { arcs: arcs.clone() };
            Ok(forest.validate(&d) && arcs.len() == *size)
        }
        Claim::Decomposition {
            pivot,
            x,
            y,
            z,
            core,
            justification,
        } => {
            let g = graph_instance(doc)?;
            let n = g.n();
            let core_set = vertex_set(core, n)?;
            let just = match justification.as_str() {
                "small-core" => decompose::ZJustification::SmallCore { core: core_set },
                "core-eight-not-exception" => {
                    decompose::ZJustification::CoreEightNotException { core: core_set }
                }
                _ => return Err(SchemaError::IndexOutOfRange),
            };
            let dec = decompose::Decomposition {
                pivot: *pivot,
                x: vertex_set(x, n)?,
                y: vertex_set(y, n)?,
                z: vertex_set(z, n)?,
                justification: just,
            };
            Ok(dec.validate(&g))
        }
    }
}

/// Builders for the documents the toolkit emits.
pub mod build {
    use super::*;

    pub fn dicolouring(instance: String, col: &Dicolouring) -> CertificateDocument {
        CertificateDocument::new(
            instance,
            Claim::KDicolouring {
                k: col.k,
                colours: col.colours.iter().map(|&c| c as usize + 1).collect(),
            },
        )
    }

    pub fn refutation(instance: String, k: usize, stats: &dicolour::SearchStats) -> CertificateDocument {
        CertificateDocument::new(
            instance,
            Claim::NotKDicolourable {
                k,
                nodes: stats.nodes,
                max_depth: stats.max_depth,
            },
        )
    }

    pub fn proper_colouring(instance: String, col: &Dicolouring) -> CertificateDocument {
        CertificateDocument::new(
            instance,
            Claim::ProperColouring {
                k: col.k,
                colours: col.colours.iter().map(|&c| c as usize + 1).collect(),
            },
        )
    }

    pub fn decomposition(instance: String, dec: &decompose::Decomposition) -> CertificateDocument {
        let (core, justification) = match &dec.justification {
            decompose::ZJustification::SmallCore { core } => (core, "small-core"),
            decompose::ZJustification::CoreEightNotException { core } => {
                (core, "core-eight-not-exception")
            }
        };
        CertificateDocument::new(
            instance,
            Claim::Decomposition {
                pivot: dec.pivot,
                x: dec.x.to_vec(),
                y: dec.y.to_vec(),
                z: dec.z.to_vec(),
                core: core.to_vec(),
                justification: justification.to_string(),
            },
        )
    }
}
