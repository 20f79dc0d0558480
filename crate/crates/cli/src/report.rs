//! Report types shared by the subcommands and their text rendering.

use std::fmt::Write as _;

use serde::Serialize;
use szeged_core::blocks::BlockKind;
use szeged_core::theorems::{EqualityOutlier, GraphVerification};
use szeged_core::{BlockDecomposition, IndexReport, QuarterRational, TheoremVerdict, VerdictStatus};

#[derive(Debug, Clone, Serialize)]
pub struct BlockSummary {
    #[serde(flatten)]
    pub kind: BlockKind,
    /// Original input labels.
    pub vertices: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub is_cactus: bool,
    pub all_blocks_cycles: bool,
    pub is_bipartite: bool,
    pub cut_vertices: Vec<u64>,
    pub blocks: Vec<BlockSummary>,
}

impl GraphStats {
    pub fn new(n: usize, m: usize, bipartite: bool, decomposition: &BlockDecomposition, labels: &[u64]) -> Self {
        GraphStats {
            vertices: n,
            edges: m,
            is_cactus: decomposition.is_cactus(),
            all_blocks_cycles: decomposition.all_blocks_cycles(),
            is_bipartite: bipartite,
            cut_vertices: decomposition.cut_vertices().iter().map(|&v| labels[v]).collect(),
            blocks: decomposition
                .blocks()
                .iter()
                .map(|b| BlockSummary { kind: b.kind(), vertices: b.vertices().iter().map(|&v| labels[v]).collect() })
                .collect(),
        }
    }
}

/// Output of `compute`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub input: String,
    pub graph: GraphStats,
    pub indices: IndexReport,
    pub twice_wiener_equals_szeged: bool,
    pub twice_wiener_equals_revised_szeged: bool,
    pub verdicts: Vec<TheoremVerdict>,
    pub elapsed_us: u128,
}

/// Integers render bare, other values as `p/q`.
pub fn short(q: QuarterRational) -> String {
    match q.to_integer() {
        Some(i) => i.to_string(),
        None => q.to_string(),
    }
}

fn block_line(blocks: &[BlockSummary]) -> String {
    let mut bridges = 0;
    let mut parts = Vec::new();
    for b in blocks {
        match b.kind {
            BlockKind::BridgeEdge => bridges += 1,
            BlockKind::Cycle(k) => parts.push(format!("cycle({k})")),
            BlockKind::Other => parts.push(format!("other({} vertices)", b.vertices.len())),
        }
    }
    if bridges > 0 {
        parts.insert(0, format!("bridge x{bridges}"));
    }
    format!("{} [{}]", blocks.len(), parts.join(", "))
}

fn verdict_line(v: &TheoremVerdict) -> String {
    let mut line = format!(
        "  {:<22} {:<20} lhs={} rhs={} predicted_equality={}",
        format!("{:?}", v.claim),
        format!("{:?}", v.status),
        short(v.lhs),
        short(v.rhs),
        v.predicted_equality
    );
    if let Some(w) = &v.witness {
        let _ = write!(line, " ({w})");
    }
    line
}

impl RunReport {
    pub fn render_text(&self) -> String {
        let g = &self.graph;
        let r = &self.indices;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "graph: {} (n={}, m={}, cactus={}, bipartite={})",
            self.input, g.vertices, g.edges, g.is_cactus, g.is_bipartite
        );
        let _ = writeln!(out, "blocks: {}; cut vertices: {}", block_line(&g.blocks), g.cut_vertices.len());
        let _ = writeln!(
            out,
            "W={} Sz={} Sz*={} 2W==Sz: {} 2W==Sz*: {}",
            r.wiener,
            r.szeged,
            short(r.revised_szeged),
            self.twice_wiener_equals_szeged,
            self.twice_wiener_equals_revised_szeged
        );
        let _ = writeln!(
            out,
            "Sz*={} (decimal {}), Sz*-Sz={}",
            r.revised_szeged,
            r.revised_szeged.to_decimal_string(),
            short(r.difference())
        );
        if r.has_vertex_sums() {
            let problems = r.inconsistencies();
            if problems.is_empty() {
                let _ = writeln!(out, "cross-check: vertex sums agree with edge sums");
            } else {
                for p in problems {
                    let _ = writeln!(out, "cross-check FAILED: {p}");
                }
            }
        } else {
            let _ = writeln!(out, "cross-check: skipped (use --full-cross-check)");
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(out, "verdicts:");
            for v in &self.verdicts {
                let _ = writeln!(out, "{}", verdict_line(v));
            }
        }
        let _ = writeln!(out, "elapsed: {:.3} ms", self.elapsed_us as f64 / 1000.0);
        out
    }
}

/// A published index value recomputed on a reference graph.
#[derive(Debug, Clone, Serialize)]
pub struct ReproductionCheck {
    pub graph: String,
    pub quantity: String,
    pub expected: QuarterRational,
    pub observed: QuarterRational,
    pub matches: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub verdicts: usize,
    pub holds_strict: usize,
    pub holds_with_equality: usize,
    pub not_applicable: usize,
    pub violated: usize,
    pub prediction_mismatches: usize,
    pub inconsistent_indices: usize,
    pub failed_reproductions: usize,
    pub passed: bool,
}

/// Output of `verify`. Contains no timings so that it is byte-stable.
#[derive(Debug, Clone, Serialize)]
pub struct BatchReport {
    pub source: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reproduction: Vec<ReproductionCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lemma: Vec<TheoremVerdict>,
    pub graphs: Vec<GraphVerification>,
    pub outliers: Vec<EqualityOutlier>,
    pub summary: Summary,
}

impl BatchReport {
    pub fn new(
        source: String,
        reproduction: Vec<ReproductionCheck>,
        lemma: Vec<TheoremVerdict>,
        graphs: Vec<GraphVerification>,
    ) -> Self {
        let outliers = graphs
            .iter()
            .filter(|g| !g.equality_facts.is_empty())
            .map(|g| EqualityOutlier { graph_id: g.id.clone(), facts: g.equality_facts.clone() })
            .collect();
        let mut summary = Summary { graphs: graphs.len(), ..Summary::default() };
        for v in lemma.iter().chain(graphs.iter().flat_map(|g| g.verdicts.iter())) {
            summary.verdicts += 1;
            match v.status {
                VerdictStatus::HoldsStrict => summary.holds_strict += 1,
                VerdictStatus::HoldsWithEquality => summary.holds_with_equality += 1,
                VerdictStatus::NotApplicable => summary.not_applicable += 1,
                VerdictStatus::Violated => summary.violated += 1,
            }
            if !v.prediction_matches() {
                summary.prediction_mismatches += 1;
            }
        }
        summary.inconsistent_indices = graphs.iter().filter(|g| !g.indices.is_consistent()).count();
        summary.failed_reproductions = reproduction.iter().filter(|r| !r.matches).count();
        summary.passed = summary.violated == 0
            && summary.prediction_mismatches == 0
            && summary.inconsistent_indices == 0
            && summary.failed_reproductions == 0;
        BatchReport { source, reproduction, lemma, graphs, outliers, summary }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source: {}", self.source);
        for r in &self.reproduction {
            let _ = writeln!(
                out,
                "{} {}: expected {} observed {} [{}]",
                r.graph,
                r.quantity,
                short(r.expected),
                short(r.observed),
                if r.matches { "ok" } else { "MISMATCH" }
            );
        }
        if !self.lemma.is_empty() {
            let failed: Vec<_> = self.lemma.iter().filter(|v| v.is_violated()).collect();
            let _ = writeln!(
                out,
                "cycle lemma: {} cycles checked, {} failed",
                self.lemma.len(),
                failed.len()
            );
            for v in failed {
                let _ = writeln!(out, "{}", verdict_line(v));
            }
        }
        for g in &self.graphs {
            let statuses: Vec<String> = g
                .verdicts
                .iter()
                .map(|v| format!("{:?}={}", v.claim, status_tag(v.status)))
                .collect();
            let _ = writeln!(out, "{} n={} m={} {}", g.id, g.vertices, g.edges, statuses.join(" "));
            for v in g.violations() {
                let _ = writeln!(out, "{}", verdict_line(v));
            }
            for p in g.indices.inconsistencies() {
                let _ = writeln!(out, "  index cross-check failed: {p}");
            }
        }
        for o in &self.outliers {
            let _ = writeln!(out, "equality outside characterization: {} {:?}", o.graph_id, o.facts);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} graphs, {} verdicts ({} strict, {} equality, {} n/a, {} violated), {} prediction mismatches -> {}",
            s.graphs,
            s.verdicts,
            s.holds_strict,
            s.holds_with_equality,
            s.not_applicable,
            s.violated,
            s.prediction_mismatches,
            if s.passed { "PASS" } else { "FAIL" }
        );
        out
    }
}

fn status_tag(s: VerdictStatus) -> &'static str {
    match s {
        VerdictStatus::HoldsStrict => "strict",
        VerdictStatus::HoldsWithEquality => "equal",
        VerdictStatus::Violated => "VIOLATED",
        VerdictStatus::NotApplicable => "n/a",
    }
}
