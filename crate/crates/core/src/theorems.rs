//! Exact checks of the index identities and inequalities, with the predicted
//! equality cases compared against the observed ones.
//!
//! Every check returns a [`TheoremVerdict`] carrying both sides of the
//! relation as exact quarter-rationals. A check whose hypothesis does not
//! apply to the graph reports [`VerdictStatus::NotApplicable`] instead of
//! failing, so corpora can mix graph classes freely. A mismatch between the
//! observed and predicted equality case is reported as a violation.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::blocks::{block_decomposition, is_complete_block, BlockDecomposition, BlockError, ProjectionTable};
use crate::generators::cycle;
use crate::graph::{DistanceMatrix, Graph, GraphError};
use crate::indices::{
    cycle_dis_closed_form, dis_count, revised_szeged_vertex_sum, szeged_difference_vertex_form,
    szeged_vertex_sum, IndexError, IndexReport,
};
use crate::rational::QuarterRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    CycleDisLemma,
    DistancePartition,
    VertexSumIdentity,
    DifferenceIdentity,
    SzLeq2W,
    RevisedSzGeq2W,
    ClassicalChain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    HoldsStrict,
    HoldsWithEquality,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub claim: ClaimId,
    pub status: VerdictStatus,
    pub lhs: QuarterRational,
    pub rhs: QuarterRational,
    pub predicted_equality: bool,
    pub witness: Option<String>,
}

impl TheoremVerdict {
    /// Verdict for `lhs ≤ rhs` with the given predicted equality case.
    fn inequality(claim: ClaimId, lhs: QuarterRational, rhs: QuarterRational, predicted_equality: bool) -> Self {
        let (status, witness) = match lhs.cmp(&rhs) {
            Ordering::Greater => (VerdictStatus::Violated, Some(format!("lhs {lhs} exceeds rhs {rhs}"))),
            Ordering::Equal if !predicted_equality => (
                VerdictStatus::Violated,
                Some(format!("equality {lhs} = {rhs} where strict inequality was predicted")),
            ),
            Ordering::Less if predicted_equality => (
                VerdictStatus::Violated,
                Some(format!("strict {lhs} < {rhs} where equality was predicted")),
            ),
            Ordering::Equal => (VerdictStatus::HoldsWithEquality, None),
            Ordering::Less => (VerdictStatus::HoldsStrict, None),
        };
        TheoremVerdict { claim, status, lhs, rhs, predicted_equality, witness }
    }

    /// Verdict for an identity; `witness` is the first failing instance.
    fn identity(claim: ClaimId, lhs: QuarterRational, rhs: QuarterRational, witness: Option<String>) -> Self {
        let status = if witness.is_none() && lhs == rhs {
            VerdictStatus::HoldsWithEquality
        } else {
            VerdictStatus::Violated
        };
        let witness = match (status, witness) {
            (VerdictStatus::Violated, None) => Some(format!("totals differ: {lhs} != {rhs}")),
            (_, w) => w,
        };
        TheoremVerdict { claim, status, lhs, rhs, predicted_equality: true, witness }
    }

    fn not_applicable(claim: ClaimId, lhs: QuarterRational, rhs: QuarterRational, reason: &str) -> Self {
        TheoremVerdict {
            claim,
            status: VerdictStatus::NotApplicable,
            lhs,
            rhs,
            predicted_equality: false,
            witness: Some(reason.to_string()),
        }
    }

    pub fn is_violated(&self) -> bool {
        self.status == VerdictStatus::Violated
    }

    /// Observed equality agrees with the prediction (vacuous when not applicable).
    pub fn prediction_matches(&self) -> bool {
        match self.status {
            VerdictStatus::NotApplicable => true,
            VerdictStatus::Violated => false,
            VerdictStatus::HoldsWithEquality => self.predicted_equality,
            VerdictStatus::HoldsStrict => !self.predicted_equality,
        }
    }
}

/// Distances, blocks and indices of one connected graph, computed once and
/// shared by all checks.
#[derive(Debug, Clone)]
pub struct Analysis<'g> {
    graph: &'g Graph,
    distances: DistanceMatrix,
    blocks: BlockDecomposition,
    indices: IndexReport,
}

impl<'g> Analysis<'g> {
    /// Fails on empty or disconnected graphs. `with_vertex_sums` also fills
    /// the `O(n²·m)` vertex-sum fields of the index report.
    pub fn new(graph: &'g Graph, with_vertex_sums: bool) -> Result<Self, GraphError> {
        let distances = DistanceMatrix::compute(graph)?;
        let blocks = block_decomposition(graph);
        let indices = IndexReport::compute(graph, &distances, with_vertex_sums);
        Ok(Analysis { graph, distances, blocks, indices })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    pub fn blocks(&self) -> &BlockDecomposition {
        &self.blocks
    }

    pub fn indices(&self) -> &IndexReport {
        &self.indices
    }

    fn wiener(&self) -> QuarterRational {
        QuarterRational::from(self.indices.wiener)
    }

    fn twice_wiener(&self) -> QuarterRational {
        QuarterRational::from(2 * self.indices.wiener)
    }

    fn szeged(&self) -> QuarterRational {
        QuarterRational::from(self.indices.szeged)
    }
}

/// Compares `dis` on every pair of `C_n` against `2d` (even `n`) or `2d − 1`
/// (odd `n`). Sides are the totals over unordered pairs.
pub fn check_cycle_dis_lemma(n: usize) -> Result<TheoremVerdict, IndexError> {
    if n < 3 {
        return Err(IndexError::CycleTooShort(n));
    }
    let g = cycle(n).expect("n >= 3");
    let dm = DistanceMatrix::compute(&g).expect("cycles are connected");
    let (mut observed, mut predicted) = (0i128, 0i128);
    let mut witness = None;
    for u in 0..n {
        for v in u + 1..n {
            let dis = dis_count(&g, &dm, u, v);
            let expected = cycle_dis_closed_form(n, dm.get(u, v) as usize)?;
            observed += dis as i128;
            predicted += expected as i128;
            if dis != expected && witness.is_none() {
                witness = Some(format!("C{n}: dis({u},{v}) = {dis}, closed form {expected}"));
            }
        }
    }
    Ok(TheoremVerdict::identity(
        ClaimId::CycleDisLemma,
        QuarterRational::from_integer(observed),
        QuarterRational::from_integer(predicted),
        witness,
    ))
}

/// `d(u, v) = Σ_B d(u_B, v_B)` over all ordered pairs, where `u_B` is the
/// vertex of block `B` closest to `u`. Sides are the totals.
pub fn check_distance_partition(a: &Analysis) -> TheoremVerdict {
    let dm = a.distances();
    let n = dm.vertex_count();
    let table = match ProjectionTable::compute(dm, a.blocks()) {
        Ok(t) => t,
        Err(BlockError::AmbiguousProjection { vertex, first_edge, candidates }) => {
            let total = QuarterRational::from(dm.ordered_sum());
            return TheoremVerdict::identity(
                ClaimId::DistancePartition,
                total,
                total,
                Some(format!(
                    "vertex {vertex} has no unique closest vertex in block {first_edge:?}: {candidates:?}"
                )),
            );
        }
    };
    let block_count = a.blocks().blocks().len();
    let (mut direct, mut split) = (0i128, 0i128);
    let mut witness = None;
    for u in 0..n {
        for v in 0..n {
            let parts: u64 = (0..block_count)
                .map(|b| u64::from(dm.get(table.get(b, u), table.get(b, v))))
                .sum();
            let d = u64::from(dm.get(u, v));
            direct += i128::from(d);
            split += i128::from(parts);
            if parts != d && witness.is_none() {
                witness = Some(format!("d({u},{v}) = {d} but block sum is {parts}"));
            }
        }
    }
    TheoremVerdict::identity(
        ClaimId::DistancePartition,
        QuarterRational::from_integer(direct),
        QuarterRational::from_integer(split),
        witness,
    )
}

/// Edge-sum and vertex-sum forms of both Szeged indices agree. Sides are the
/// two revised Szeged values; a Szeged mismatch is reported in the witness.
pub fn check_vertex_sum_identity(a: &Analysis) -> TheoremVerdict {
    let (g, dm) = (a.graph(), a.distances());
    let sz_vertex = a.indices().szeged_vertex_sum.unwrap_or_else(|| szeged_vertex_sum(g, dm));
    let rsz_vertex = a
        .indices()
        .revised_szeged_vertex_sum
        .unwrap_or_else(|| revised_szeged_vertex_sum(g, dm));
    let witness = (sz_vertex != a.indices().szeged)
        .then(|| format!("Sz vertex sum {sz_vertex} != edge sum {}", a.indices().szeged));
    TheoremVerdict::identity(ClaimId::VertexSumIdentity, a.indices().revised_szeged, rsz_vertex, witness)
}

/// Both closed forms of `Sz* − Sz` agree with the direct difference. The lhs
/// is the direct difference, the rhs the edge form; a vertex-form mismatch is
/// reported in the witness.
pub fn check_difference_identity(a: &Analysis) -> TheoremVerdict {
    let report = a.indices();
    let direct = report.difference();
    let vertex_form = report
        .difference_vertex_form
        .unwrap_or_else(|| szeged_difference_vertex_form(a.graph(), a.distances()));
    let witness = (vertex_form != direct).then(|| format!("vertex form {vertex_form} != Sz* - Sz = {direct}"));
    TheoremVerdict::identity(ClaimId::DifferenceIdentity, direct, report.difference_edge_form, witness)
}

/// `Sz ≤ 2W` on cacti, with equality iff every block is an even cycle.
pub fn check_sz_vs_2w(a: &Analysis) -> TheoremVerdict {
    let (lhs, rhs) = (a.szeged(), a.twice_wiener());
    if !a.blocks().is_cactus() {
        return TheoremVerdict::not_applicable(ClaimId::SzLeq2W, lhs, rhs, "graph is not a cactus");
    }
    TheoremVerdict::inequality(ClaimId::SzLeq2W, lhs, rhs, a.blocks().all_blocks_even_cycles())
}

/// `2W ≤ Sz*` when every block is a cycle, with equality iff every cycle is even.
pub fn check_revised_sz_vs_2w(a: &Analysis) -> TheoremVerdict {
    let (lhs, rhs) = (a.twice_wiener(), a.indices().revised_szeged);
    if !a.blocks().all_blocks_cycles() {
        return TheoremVerdict::not_applicable(ClaimId::RevisedSzGeq2W, lhs, rhs, "some block is not a cycle");
    }
    TheoremVerdict::inequality(ClaimId::RevisedSzGeq2W, lhs, rhs, a.blocks().all_blocks_even_cycles())
}

/// `W ≤ Sz ≤ Sz*` with `W = Sz` iff every block is complete and `Sz = Sz*`
/// iff the graph is bipartite. Sides are `W` and `Sz*`; equality of the
/// outer pair is predicted iff both conditions hold.
pub fn check_classical_chain(a: &Analysis) -> TheoremVerdict {
    let g = a.graph();
    let (w, sz, rsz) = (a.wiener(), a.szeged(), a.indices().revised_szeged);
    let complete_blocks = a.blocks().blocks().iter().all(|b| is_complete_block(g, b));
    let bipartite = g.is_bipartite();

    let mut problems = Vec::new();
    if w > sz {
        problems.push(format!("W = {w} exceeds Sz = {sz}"));
    }
    if sz > rsz {
        problems.push(format!("Sz = {sz} exceeds Sz* = {rsz}"));
    }
    if (w == sz) != complete_blocks {
        problems.push(format!("W = Sz is {} but all-blocks-complete is {complete_blocks}", w == sz));
    }
    if (sz == rsz) != bipartite {
        problems.push(format!("Sz = Sz* is {} but bipartite is {bipartite}", sz == rsz));
    }
    let predicted_equality = complete_blocks && bipartite;
    if !problems.is_empty() {
        return TheoremVerdict {
            claim: ClaimId::ClassicalChain,
            status: VerdictStatus::Violated,
            lhs: w,
            rhs: rsz,
            predicted_equality,
            witness: Some(problems.join("; ")),
        };
    }
    TheoremVerdict::inequality(ClaimId::ClassicalChain, w, rsz, predicted_equality)
}

/// An equality between a Szeged-type index and `2W` that the cactus theorems
/// do not account for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum EqualityFact {
    /// `Sz = 2W` although the graph is not a cactus made of even cycles.
    SzEqualsTwiceWiener { is_cactus: bool },
    /// `Sz* = 2W` although not every block is an even cycle.
    RevisedSzEqualsTwiceWiener { all_blocks_cycles: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityOutlier {
    pub graph_id: String,
    pub facts: Vec<EqualityFact>,
}

pub fn equality_facts(a: &Analysis) -> Vec<EqualityFact> {
    let mut facts = Vec::new();
    let blocks = a.blocks();
    let explained = blocks.all_blocks_even_cycles();
    if a.szeged() == a.twice_wiener() && !explained {
        facts.push(EqualityFact::SzEqualsTwiceWiener { is_cactus: blocks.is_cactus() });
    }
    if a.indices().revised_szeged == a.twice_wiener() && !explained {
        facts.push(EqualityFact::RevisedSzEqualsTwiceWiener { all_blocks_cycles: blocks.all_blocks_cycles() });
    }
    facts
}

/// Graphs of the corpus whose `Sz = 2W` or `Sz* = 2W` lies outside the
/// equality characterizations. Graphs without such facts are omitted.
pub fn find_equality_outliers<'a, I>(corpus: I) -> Result<Vec<EqualityOutlier>, GraphError>
where
    I: IntoIterator<Item = (&'a str, &'a Graph)>,
{
    let mut out = Vec::new();
    for (id, g) in corpus {
        let a = Analysis::new(g, false)?;
        let facts = equality_facts(&a);
        if !facts.is_empty() {
            out.push(EqualityOutlier { graph_id: id.to_string(), facts });
        }
    }
    Ok(out)
}

/// Block-by-block recomputation of `Sz*` and of its excess over `2W`.
///
/// For a pair `(u, v)` and block `B` the term is
/// `dis_B(u_B, v_B) + deq_B(u_B, u_B) − ½ deq_B(u_B, v_B)`, counting edges of
/// `B` only; half the sum of all terms is `Sz*` for every connected graph.
/// When all blocks are cycles each term is at least `2 d(u_B, v_B)`, with
/// slack `½` exactly when `B` is odd and `u_B = v_B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockAccounting {
    /// `½ Σ_{u,v} Σ_B term(u, v, B)`.
    pub revised_szeged_block_sum: QuarterRational,
    /// `½ Σ_{u,v} Σ_B dis_B(u_B, v_B)`.
    pub szeged_block_sum: u64,
    /// `½ Σ_{u,v} Σ_B (term − 2 d(u_B, v_B))`.
    pub slack: QuarterRational,
    /// Triples `(u, v, B)` with `B` an even cycle.
    pub even_cycle_terms: u64,
    /// Triples with `B` an odd cycle and `u_B ≠ v_B`.
    pub odd_cycle_distinct_terms: u64,
    /// Triples with `B` an odd cycle and `u_B = v_B`.
    pub odd_cycle_collapsed_terms: u64,
    /// Triples where the term falls below `2 d(u_B, v_B)`.
    pub deficient_terms: u64,
}

pub fn block_accounting(a: &Analysis) -> Result<BlockAccounting, BlockError> {
    let dm = a.distances();
    let n = dm.vertex_count();
    let table = ProjectionTable::compute(dm, a.blocks())?;
    let mut acc = BlockAccounting {
        revised_szeged_block_sum: QuarterRational::ZERO,
        szeged_block_sum: 0,
        slack: QuarterRational::ZERO,
        even_cycle_terms: 0,
        odd_cycle_distinct_terms: 0,
        odd_cycle_collapsed_terms: 0,
        deficient_terms: 0,
    };
    let (mut term_quarters, mut slack_quarters, mut dis_total) = (0i128, 0i128, 0u64);
    for (bi, block) in a.blocks().blocks().iter().enumerate() {
        let edges = block.edges();
        let equal_from = |x: usize| -> Vec<bool> {
            edges.iter().map(|e| dm.get(x, e.s()) == dm.get(x, e.t())).collect()
        };
        let kind = block.kind();
        for u in 0..n {
            let ub = table.get(bi, u);
            let ru = dm.row(ub);
            let eq_u = equal_from(ub);
            let deq_uu = eq_u.iter().filter(|&&x| x).count() as i128;
            for v in 0..n {
                let vb = table.get(bi, v);
                let rv = dm.row(vb);
                let mut dis = 0i128;
                let mut deq = 0i128;
                for e in edges {
                    let (s, t) = e.endpoints();
                    let from_u = ru[s].cmp(&ru[t]);
                    let from_v = rv[s].cmp(&rv[t]);
                    if from_u != Ordering::Equal && from_v == from_u.reverse() {
                        dis += 1;
                    }
                    if from_u == Ordering::Equal && from_v == Ordering::Equal {
                        deq += 1;
                    }
                }
                // 4 · (dis + deq_uu − ½ deq)
                let term = 4 * dis + 4 * deq_uu - 2 * deq;
                let floor = 8 * i128::from(dm.get(ub, vb));
                term_quarters += term;
                slack_quarters += term - floor;
                dis_total += dis as u64;
                if term < floor {
                    acc.deficient_terms += 1;
                }
                match kind {
                    k if k.is_even_cycle() => acc.even_cycle_terms += 1,
                    k if k.is_odd_cycle() && ub == vb => acc.odd_cycle_collapsed_terms += 1,
                    k if k.is_odd_cycle() => acc.odd_cycle_distinct_terms += 1,
                    _ => {}
                }
            }
        }
    }
    // halve the ordered sums
    acc.revised_szeged_block_sum = QuarterRational::from_quarters(term_quarters / 2);
    acc.slack = QuarterRational::from_quarters(slack_quarters / 2);
    acc.szeged_block_sum = dis_total / 2;
    Ok(acc)
}

/// What to run in [`verify_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Run the `O(n²·m)` vertex-sum identities.
    pub vertex_sums: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVerification {
    pub id: String,
    pub vertices: usize,
    pub edges: usize,
    pub is_cactus: bool,
    pub all_blocks_cycles: bool,
    pub is_bipartite: bool,
    pub indices: IndexReport,
    pub verdicts: Vec<TheoremVerdict>,
    pub equality_facts: Vec<EqualityFact>,
}

impl GraphVerification {
    pub fn violations(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.verdicts.iter().filter(|v| v.is_violated())
    }

    /// No violated verdict, every prediction matched, index cross-checks agree.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| !v.is_violated() && v.prediction_matches()) && self.indices.is_consistent()
    }
}

/// Runs every applicable check on one connected graph.
pub fn verify_graph(id: &str, g: &Graph, options: VerifyOptions) -> Result<GraphVerification, GraphError> {
    let a = Analysis::new(g, options.vertex_sums)?;
    let mut verdicts = vec![check_distance_partition(&a)];
    if options.vertex_sums {
        verdicts.push(check_vertex_sum_identity(&a));
        verdicts.push(check_difference_identity(&a));
    }
    verdicts.push(check_classical_chain(&a));
    verdicts.push(check_sz_vs_2w(&a));
    verdicts.push(check_revised_sz_vs_2w(&a));
    Ok(GraphVerification {
        id: id.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        is_cactus: a.blocks().is_cactus(),
        all_blocks_cycles: a.blocks().all_blocks_cycles(),
        is_bipartite: g.is_bipartite(),
        indices: a.indices().clone(),
        verdicts,
        equality_facts: equality_facts(&a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycles_at_vertex, paper_fig2, paper_fig3, path};

    fn q(v: i128) -> QuarterRational {
        QuarterRational::from_integer(v)
    }

    #[test]
    fn cycle_lemma_small_cases() {
        for n in [4, 5, 13] {
            let v = check_cycle_dis_lemma(n).unwrap();
            assert_eq!(v.status, VerdictStatus::HoldsWithEquality, "{v:?}");
        }
        assert!(check_cycle_dis_lemma(2).is_err());
    }

    #[test]
    fn sz_vs_2w_cases() {
        let c6 = cycle(6).unwrap();
        let v = check_sz_vs_2w(&Analysis::new(&c6, false).unwrap());
        assert_eq!(v.status, VerdictStatus::HoldsWithEquality);
        assert!(v.predicted_equality);

        let c5 = cycle(5).unwrap();
        let v = check_sz_vs_2w(&Analysis::new(&c5, false).unwrap());
        assert_eq!((v.status, v.lhs, v.rhs), (VerdictStatus::HoldsStrict, q(20), q(30)));
        assert!(!v.predicted_equality);

        let fig3 = paper_fig3();
        let v = check_sz_vs_2w(&Analysis::new(&fig3, false).unwrap());
        assert_eq!((v.status, v.rhs), (VerdictStatus::HoldsStrict, q(3636)));

        let fig2 = paper_fig2();
        let v = check_sz_vs_2w(&Analysis::new(&fig2, false).unwrap());
        assert_eq!(v.status, VerdictStatus::NotApplicable);
    }

    #[test]
    fn revised_sz_vs_2w_cases() {
        let c4 = cycle(4).unwrap();
        let v = check_revised_sz_vs_2w(&Analysis::new(&c4, false).unwrap());
        assert_eq!((v.status, v.lhs, v.rhs), (VerdictStatus::HoldsWithEquality, q(16), q(16)));

        let c3 = cycle(3).unwrap();
        let v = check_revised_sz_vs_2w(&Analysis::new(&c3, false).unwrap());
        assert_eq!(
            (v.status, v.lhs, v.rhs),
            (VerdictStatus::HoldsStrict, q(6), QuarterRational::from_quarters(27))
        );

        let two_c5 = cycles_at_vertex(&[5, 5]).unwrap();
        let v = check_revised_sz_vs_2w(&Analysis::new(&two_c5, false).unwrap());
        assert_eq!(v.status, VerdictStatus::HoldsStrict);

        let v = check_revised_sz_vs_2w(&Analysis::new(&paper_fig3(), false).unwrap());
        assert_eq!(v.status, VerdictStatus::NotApplicable);
    }

    #[test]
    fn classical_chain_cases() {
        let k5 = complete(5).unwrap();
        let a = Analysis::new(&k5, false).unwrap();
        let v = check_classical_chain(&a);
        assert_eq!(v.status, VerdictStatus::HoldsStrict, "{v:?}");
        assert_eq!(a.indices().wiener, a.indices().szeged);

        let tree = path(6).unwrap();
        let v = check_classical_chain(&Analysis::new(&tree, false).unwrap());
        assert_eq!(v.status, VerdictStatus::HoldsWithEquality);

        let c5 = cycle(5).unwrap();
        let a = Analysis::new(&c5, false).unwrap();
        let v = check_classical_chain(&a);
        assert_eq!((v.status, v.lhs, v.rhs), (VerdictStatus::HoldsStrict, q(15), QuarterRational::from_quarters(125)));
        assert_eq!(a.indices().szeged, 20);
    }

    #[test]
    fn mismatched_prediction_is_a_violation() {
        let v = TheoremVerdict::inequality(ClaimId::SzLeq2W, q(4), q(4), false);
        assert!(v.is_violated());
        assert!(v.witness.is_some());
        let v = TheoremVerdict::inequality(ClaimId::SzLeq2W, q(3), q(4), true);
        assert!(v.is_violated());
        let v = TheoremVerdict::inequality(ClaimId::SzLeq2W, q(5), q(4), false);
        assert!(v.is_violated());
    }

    #[test]
    fn outliers() {
        let fig2 = paper_fig2();
        let fig3 = paper_fig3();
        let c6 = cycle(6).unwrap();
        let found = find_equality_outliers([("fig2", &fig2), ("fig3", &fig3), ("c6", &c6)]).unwrap();
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].graph_id, "fig2");
        assert!(found[0].facts.contains(&EqualityFact::SzEqualsTwiceWiener { is_cactus: false }));
        assert_eq!(found[1].graph_id, "fig3");
        assert_eq!(
            found[1].facts,
            vec![EqualityFact::RevisedSzEqualsTwiceWiener { all_blocks_cycles: false }]
        );
    }

    #[test]
    fn block_accounting_on_odd_cycles() {
        let g = cycles_at_vertex(&[5, 3]).unwrap();
        let a = Analysis::new(&g, false).unwrap();
        let acc = block_accounting(&a).unwrap();
        assert_eq!(acc.revised_szeged_block_sum, a.indices().revised_szeged);
        assert_eq!(acc.szeged_block_sum, a.indices().szeged);
        assert_eq!(acc.deficient_terms, 0);
        assert_eq!(acc.slack, a.indices().revised_szeged - QuarterRational::from(2 * a.indices().wiener));
        assert_eq!(acc.slack, QuarterRational::from_quarters(acc.odd_cycle_collapsed_terms as i128));
    }

    #[test]
    fn verify_graph_runs_everything() {
        let g = cycles_at_vertex(&[4, 6]).unwrap();
        let report = verify_graph("c4c6", &g, VerifyOptions { vertex_sums: true }).unwrap();
        assert_eq!(report.verdicts.len(), 6);
        assert!(report.passed(), "{report:?}");
        assert!(report.equality_facts.is_empty());
    }
}
