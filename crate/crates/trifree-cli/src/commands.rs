//! Implementations of the command-line verbs, kept separate from argument
//! parsing so the test suites can drive them directly.
//!
//! Exit codes: 0 decided/verified, 1 property refuted or instances
//! unresolved, 2 usage error, 3 budget exceeded. Machine-readable output
//! (`--format json`) never contains wall-clock data, so identical flags,
//! inputs and seeds produce byte-identical output.

use crate::certificate::{self, build, CertificateDocument, Deletion};
use crate::graph6;
use crate::sweep::{self, SweepConfig, SweepSource};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use thiserror::Error;
use trifree_core::dicolour::{self, Verdict};
use trifree_core::sparse;
use trifree_core::{
    acyclic, construct, enumerate, extremal, linforest, order, Budget, Digraph, UndirectedGraph,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Codec(#[from] graph6::CodecError),
    #[error("{0}")]
    Sweep(#[from] sweep::SweepError),
    #[error("{0}")]
    Schema(#[from] certificate::SchemaError),
    #[error("{0}")]
    Usage(String),
}

pub type CmdResult = Result<i32, CommandError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Human,
    Json,
}

pub struct Ctx<'a> {
    pub out: &'a mut dyn Write,
    pub format: OutputFormat,
    pub budget: Budget,
}

impl Ctx<'_> {
    fn human(&mut self, line: &str) -> Result<(), CommandError> {
        if self.format == OutputFormat::Human {
            writeln!(self.out, "{line}")?;
        }
        Ok(())
    }

    fn machine(&mut self, value: &serde_json::Value) -> Result<(), CommandError> {
        if self.format == OutputFormat::Json {
            writeln!(self.out, "{value}")?;
        }
        Ok(())
    }

    fn raw(&mut self, line: &str) -> Result<(), CommandError> {
        writeln!(self.out, "{line}")?;
        Ok(())
    }
}

/// Read digraph6 lines from a file, or stdin when the path is `-`/absent.
pub fn read_digraphs(input: &Option<PathBuf>) -> Result<Vec<Digraph>, CommandError> {
    let content = read_input(input)?;
    let mut out = Vec::new();
    for line in graph6::data_lines(&content) {
        out.push(graph6::decode_digraph6(line)?);
    }
    Ok(out)
}

pub fn read_graphs(input: &Option<PathBuf>) -> Result<Vec<UndirectedGraph>, CommandError> {
    let content = read_input(input)?;
    let mut out = Vec::new();
    for line in graph6::data_lines(&content) {
        out.push(graph6::decode_graph6(line)?);
    }
    Ok(out)
}

fn read_input(input: &Option<PathBuf>) -> Result<String, CommandError> {
    match input {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut buf = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)?;
            Ok(buf)
        }
    }
}

pub fn dichromatic(ctx: &mut Ctx, digraphs: &[Digraph], k: Option<usize>) -> CmdResult {
    let mut any_refuted = false;
    for d in digraphs {
        let enc = graph6::encode_digraph6(d);
        match k {
            Some(k) => {
                let outcome = dicolour::is_k_dicolourable(d, k, ctx.budget);
                match outcome.verdict {
                    Verdict::Dicolourable => {
                        let cert = outcome.certificate.unwrap();
                        ctx.human(&format!(
                            "{enc}: {k}-dicolourable ({} nodes)",
                            outcome.stats.nodes
                        ))?;
                        ctx.machine(&serde_json::to_value(build::dicolouring(enc, &cert)).unwrap())?;
                    }
                    Verdict::NotDicolourable => {
                        any_refuted = true;
                        ctx.human(&format!(
                            "{enc}: not {k}-dicolourable ({} nodes, depth {})",
                            outcome.stats.nodes, outcome.stats.max_depth
                        ))?;
                        ctx.machine(
                            &serde_json::to_value(build::refutation(enc, k, &outcome.stats))
                                .unwrap(),
                        )?;
                    }
                    Verdict::BudgetExceeded => return Ok(EXIT_BUDGET),
                }
            }
            None => {
                let Ok((chi, cert)) = dicolour::dichromatic_number(d, ctx.budget) else {
                    return Ok(EXIT_BUDGET);
                };
                ctx.human(&format!("{enc}: dichromatic number {chi}"))?;
                ctx.machine(&json!({
                    "instance": enc,
                    "dichromatic": chi,
                    "colours": cert.colours.iter().map(|&c| c as usize + 1).collect::<Vec<_>>(),
                }))?;
            }
        }
    }
    Ok(if any_refuted { EXIT_REFUTED } else { EXIT_OK })
}

pub fn acyclic_cmd(ctx: &mut Ctx, digraphs: &[Digraph]) -> CmdResult {
    for d in digraphs {
        let enc = graph6::encode_digraph6(d);
        let Ok((alpha, witness)) = acyclic::acyclic_number(d, ctx.budget) else {
            return Ok(EXIT_BUDGET);
        };
        ctx.human(&format!(
            "{enc}: acyclic number {alpha}, witness {:?}",
            witness.to_vec()
        ))?;
        ctx.machine(&json!({
            "instance": enc,
            "acyclic_number": alpha,
            "witness": witness.to_vec(),
        }))?;
    }
    Ok(EXIT_OK)
}

pub fn dicritical(ctx: &mut Ctx, digraphs: &[Digraph], k: usize) -> CmdResult {
    let mut all_ok = true;
    for d in digraphs {
        let enc = graph6::encode_digraph6(d);
        let Ok(report) = dicolour::is_k_dicritical(d, k, ctx.budget) else {
            return Ok(EXIT_BUDGET);
        };
        all_ok &= report.is_dicritical();
        ctx.human(&format!(
            "{enc}: chromatic {} vs k={k}; {}-dicritical: {}; failing vertices {:?}, failing arcs {:?}",
            report.dichromatic,
            k,
            report.is_dicritical(),
            report.failing_vertices,
            report.failing_arcs,
        ))?;
        ctx.machine(&json!({
            "instance": enc,
            "k": k,
            "dichromatic": report.dichromatic,
            "dicritical": report.is_dicritical(),
            "failing_vertices": report.failing_vertices,
            "failing_arcs": report.failing_arcs,
        }))?;
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_REFUTED })
}

pub fn blowup(ctx: &mut Ctx, digraphs: &[Digraph], m: usize) -> CmdResult {
    for d in digraphs {
        match construct::backward_blowup(d, m) {
            Ok(b) => ctx.raw(&graph6::encode_digraph6(&b))?,
            Err(e) => return Err(CommandError::Usage(e.to_string())),
        }
    }
    Ok(EXIT_OK)
}

/// The full 25-vertex verification: not 2-dicolourable, 3-dicolourable, and
/// every vertex or arc deletion 2-dicolourable. Emits certificates when a
/// sink is provided.
pub fn verify_d25(
    ctx: &mut Ctx,
    certificates: Option<&mut dyn Write>,
) -> CmdResult {
    let d25 = construct::d25();
    let enc = graph6::encode_digraph6(&d25);
    let mut docs: Vec<CertificateDocument> = Vec::new();

    let unsat = dicolour::is_k_dicolourable(&d25, 2, ctx.budget);
    match unsat.verdict {
        Verdict::NotDicolourable => {}
        Verdict::Dicolourable => {
            ctx.human("unexpected: a 2-dicolouring of the 25-vertex blowup exists")?;
            return Ok(EXIT_REFUTED);
        }
        Verdict::BudgetExceeded => return Ok(EXIT_BUDGET),
    }
    docs.push(build::refutation(enc.clone(), 2, &unsat.stats));

    let Ok(report) = dicolour::is_k_dicritical(&d25, 3, ctx.budget) else {
        return Ok(EXIT_BUDGET);
    };
    docs.push(build::dicolouring(enc.clone(), &report.base_certificate));
    for (v, cert) in &report.vertex_certificates {
        docs.push(
            build::dicolouring(enc.clone(), cert).with_deletion(Deletion::Vertex(*v)),
        );
    }
    for ((u, v), cert) in &report.arc_certificates {
        docs.push(build::dicolouring(enc.clone(), cert).with_deletion(Deletion::Arc(*u, *v)));
    }

    let ok = report.is_dicritical() && report.dichromatic == 3;
    ctx.human(&format!(
        "χ⃗ = {}, 3-dicritical: {} (unsat k=2: {} nodes; {} vertex deletions, {} arc deletions re-coloured)",
        report.dichromatic,
        if ok { "yes" } else { "no" },
        unsat.stats.nodes,
        report.vertex_certificates.len(),
        report.arc_certificates.len(),
    ))?;
    ctx.machine(&json!({
        "instance": enc,
        "dichromatic": report.dichromatic,
        "dicritical": ok,
        "unsat_nodes": unsat.stats.nodes,
        "vertex_deletions": report.vertex_certificates.len(),
        "arc_deletions": report.arc_certificates.len(),
    }))?;
    if let Some(sink) = certificates {
        for doc in &docs {
            writeln!(sink, "{}", doc.to_json())?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_REFUTED })
}

pub fn order_cmd(ctx: &mut Ctx, digraphs: &[Digraph]) -> CmdResult {
    for d in digraphs {
        let enc = graph6::encode_digraph6(d);
        let ord = order::halve_degree_order(d);
        let holds = order::halving_holds(d, &ord);
        let g = order::backedge_graph(d, &ord);
        ctx.human(&format!(
            "{enc}: degree-halving order {:?}, backedge degrees {:?}, bound holds: {holds}",
            ord.seq(),
            g.degree_profile(),
        ))?;
        let doc = CertificateDocument::new(
            enc,
            certificate::Claim::DegreeHalvingOrder {
                order: ord.seq().to_vec(),
            },
        );
        ctx.machine(&serde_json::to_value(&doc).unwrap())?;
        if !holds {
            return Ok(EXIT_REFUTED);
        }
    }
    Ok(EXIT_OK)
}

/// For digraph input: the exact maximum directed linear forest.
/// For graph input: the minimising orientation and its value `n - alpha`.
pub fn linforest_cmd(ctx: &mut Ctx, input: &Option<PathBuf>) -> CmdResult {
    let content = read_input(input)?;
    for line in graph6::data_lines(&content) {
        if line.starts_with('&') {
            let d = graph6::decode_digraph6(line)?;
            let Ok((value, witness)) = linforest::max_directed_linear_forest(&d, ctx.budget)
            else {
                return Ok(EXIT_BUDGET);
            };
            ctx.human(&format!("{line}: max directed linear forest {value}"))?;
            ctx.machine(&serde_json::to_value(CertificateDocument::new(
                line.to_string(),
                certificate::Claim::LinearForest {
                    arcs: witness.arcs.clone(),
                    size: value,
                },
            ))
            .unwrap())?;
        } else {
            let g = graph6::decode_graph6(line)?;
            let Ok(or) = linforest::min_orientation_linear_forest(&g, ctx.budget) else {
                return Ok(EXIT_BUDGET);
            };
            ctx.human(&format!(
                "{line}: min orientation linear forest {} (alpha = {}), orientation {}",
                or.value,
                or.independence,
                graph6::encode_digraph6(&or.orientation)
            ))?;
            ctx.machine(&json!({
                "instance": line,
                "value": or.value,
                "independence": or.independence,
                "orientation": graph6::encode_digraph6(&or.orientation),
            }))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn enumerate_cmd(ctx: &mut Ctx, n: usize, min_deg: usize) -> CmdResult {
    let graphs = enumerate::enumerate_triangle_free(n, min_deg)
        .map_err(|e| CommandError::Usage(e.to_string()))?;
    for g in &graphs {
        ctx.raw(&graph6::encode_graph6(g))?;
    }
    if ctx.format == OutputFormat::Human {
        writeln!(
            std::io::stderr(),
            "{} triangle-free graphs on {n} vertices with min degree >= {min_deg}",
            graphs.len()
        )?;
    }
    Ok(EXIT_OK)
}

pub fn sweep_cmd(
    ctx: &mut Ctx,
    source: &SweepSource,
    config: &SweepConfig,
) -> CmdResult {
    let outcome = sweep::sweep(source, config)?;
    match ctx.format {
        OutputFormat::Human => {
            for (n, c) in &outcome.summary.per_order {
                ctx.human(&format!(
                    "n={n}: {} instances | filtered: biconnectivity {}, min-degree {}, max-degree {}, arboricity {} | high-degree decompositions {} | survivors {} (Z<=7: {}, Z=8: {}, larger: {}) | unresolved {}",
                    c.total,
                    c.filtered_not_biconnected,
                    c.filtered_min_degree,
                    c.filtered_max_degree,
                    c.filtered_arboricity,
                    c.decomposed_high_degree,
                    c.survivors,
                    c.survivors_z_at_most_7,
                    c.survivors_z_eight,
                    c.survivors_z_larger,
                    c.unresolved,
                ))?;
            }
            if outcome.resumed > 0 {
                ctx.human(&format!("resumed {} records from checkpoint", outcome.resumed))?;
            }
            for id in &outcome.summary.unresolved_ids {
                ctx.human(&format!("UNRESOLVED {id}"))?;
            }
        }
        OutputFormat::Json => {
            for record in &outcome.records {
                let mut clean = record.clone();
                clean.elapsed_micros = None; // keep machine output reproducible
                ctx.machine(&serde_json::to_value(&clean).unwrap())?;
            }
            ctx.machine(&json!({
                "summary": &outcome.summary.per_order,
                "unresolved": &outcome.summary.unresolved_ids,
            }))?;
        }
    }
    Ok(if outcome.summary.total_unresolved() > 0 {
        EXIT_REFUTED
    } else {
        EXIT_OK
    })
}

pub struct ExperimentArgs {
    pub n: usize,
    pub seed: u64,
    pub trials: u64,
    pub edge_prob: f64,
    pub c0: f64,
}

/// Desk-scale experiment: a d-sparse orientation of a random triangle-free
/// graph, plus the (non-probative) acyclic-number demonstration against the
/// asymptotic threshold with both logarithm bases.
pub fn experiment(ctx: &mut Ctx, args: &ExperimentArgs) -> CmdResult {
    let params = sparse::SparsityParams::new(args.n, args.c0, 3.43, 3.1, 1e-4);
    let g = trifree_core::random::random_triangle_free(
        args.n,
        args.edge_prob,
        trifree_core::random::SeededRng::new(args.seed),
    );
    let dsparse = sparse::find_dsparse_orientation(&g, args.trials, args.seed ^ 0x5eed);
    let demo = match sparse::alpha_demo_row(args.n, args.c0, args.seed, ctx.budget) {
        Ok(row) => row,
        Err(_) => return Ok(EXIT_BUDGET),
    };
    match &dsparse {
        Ok(r) => {
            ctx.human(&format!(
                "d-sparse orientation found after {} trial(s); d = {:.4}; verification: {:?}",
                r.trials_used, r.d, r.verification
            ))?;
        }
        Err(f) => {
            ctx.human(&format!(
                "no d-sparse orientation in {} trials; densest violating acyclic set: {:?}",
                f.trials,
                f.densest.as_ref().map(|v| (v.set.to_vec(), v.average_degree)),
            ))?;
        }
    }
    ctx.human(&format!(
        "alpha demonstration (non-probative): n = {}, empirical acyclic number {} vs (107/8) sqrt(n) log n = {:.2} (ln) / {:.2} (log2)",
        demo.n, demo.alpha, demo.threshold_ln, demo.threshold_log2
    ))?;
    ctx.machine(&json!({
        "n": args.n,
        "seed": args.seed,
        "params": {"d": params.d, "p": params.p, "k": params.k},
        "dsparse": match &dsparse {
            Ok(r) => json!({
                "found": true,
                "trials_used": r.trials_used,
                "exhaustive": matches!(r.verification, sparse::Verification::Exhaustive),
            }),
            Err(f) => json!({"found": false, "trials": f.trials}),
        },
        "alpha_demo": {
            "alpha": demo.alpha,
            "threshold_ln": demo.threshold_ln,
            "threshold_log2": demo.threshold_log2,
        },
    }))?;
    Ok(if dsparse.is_ok() { EXIT_OK } else { EXIT_REFUTED })
}

pub fn constants(ctx: &mut Ctx, c0: f64, c1: f64, c2: f64, eps: f64) -> CmdResult {
    let r = sparse::verify_lll_constants(c0, c1, c2, eps);
    ctx.human(&format!(
        "condition 1: c1(c1-1-ln c1) = {:.6} > 1 + c2 = {:.6}: {} (margin {:+.6})",
        r.lhs1, r.rhs1, r.holds1, r.margin1
    ))?;
    ctx.human(&format!(
        "condition 2: c2 = {:.6} > (1+eps)(c0 c1)^2 = {:.6}: {} (margin {:+.6})",
        r.lhs2, r.rhs2, r.holds2, r.margin2
    ))?;
    ctx.machine(&json!({
        "c0": c0, "c1": c1, "c2": c2, "eps": eps,
        "lhs1": r.lhs1, "rhs1": r.rhs1, "margin1": r.margin1, "holds1": r.holds1,
        "lhs2": r.lhs2, "rhs2": r.rhs2, "margin2": r.margin2, "holds2": r.holds2,
    }))?;
    Ok(if r.all_hold() { EXIT_OK } else { EXIT_REFUTED })
}

pub fn extremal_cmd(ctx: &mut Ctx, n: usize) -> CmdResult {
    let report = match extremal::extremal_scan(n, ctx.budget) {
        Ok(r) => r,
        Err(extremal::ExtremalError::TooLarge(n)) => {
            return Err(CommandError::Usage(format!(
                "extremal scan supports n <= 7, got {n}"
            )))
        }
        Err(extremal::ExtremalError::Budget(_)) => return Ok(EXIT_BUDGET),
    };
    ctx.human(&format!(
        "n = {n}: min acyclic number {} (witness {}), max dichromatic number {} (witness {}); {} digraph classes scanned",
        report.a_min,
        graph6::encode_digraph6(&report.a_witness),
        report.t_max,
        graph6::encode_digraph6(&report.t_witness),
        report.classes,
    ))?;
    ctx.machine(&json!({
        "n": n,
        "a_min": report.a_min,
        "a_witness": graph6::encode_digraph6(&report.a_witness),
        "t_max": report.t_max,
        "t_witness": graph6::encode_digraph6(&report.t_witness),
        "classes": report.classes,
    }))?;
    Ok(EXIT_OK)
}

pub fn verify_cert_cmd(ctx: &mut Ctx, input: &Option<PathBuf>) -> CmdResult {
    let content = read_input(input)?;
    let mut all_ok = true;
    for (i, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let doc = CertificateDocument::from_json(line)?;
        let ok = certificate::verify_certificate(&doc)?;
        all_ok &= ok;
        ctx.human(&format!("line {}: {}", i + 1, if ok { "valid" } else { "INVALID" }))?;
        ctx.machine(&json!({"line": i + 1, "valid": ok}))?;
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_REFUTED })
}

