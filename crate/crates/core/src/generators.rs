//! Named graphs, parametric families and seeded random corpora.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{family} needs at least {min} vertices, got {n}")]
    TooSmall { family: &'static str, n: usize, min: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::TooSmall { family: "path", n, min: 1 });
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
}

/// `C_n` with edges `i, i+1 mod n`.
pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::TooSmall { family: "cycle", n, min: 3 });
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::TooSmall { family: "complete", n, min: 1 });
    }
    Ok(Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))?)
}

/// Cycles of the given lengths all sharing vertex 0.
pub fn cycles_at_vertex(lengths: &[usize]) -> Result<Graph, GenError> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &k in lengths {
        if k < 3 {
            return Err(GenError::TooSmall { family: "cycle", n: k, min: 3 });
        }
        attach_cycle(&mut edges, 0, k, &mut next);
    }
    Ok(Graph::from_edges(next, edges)?)
}

fn attach_cycle(edges: &mut Vec<(Vertex, Vertex)>, anchor: Vertex, length: usize, next: &mut usize) {
    let mut prev = anchor;
    for _ in 0..length - 1 {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
    edges.push((prev, anchor));
}

/// Three paths of length two joined at their ends, three pendant edges on one
/// end and two on the other.
///
/// Labels: hubs `0` and `1`; midpoints `2, 3, 4`; pendants `5, 6, 7` on hub
/// `0`; pendants `8, 9` on hub `1`.
pub fn paper_fig2() -> Graph {
    let edges = [
        (0, 2),
        (0, 3),
        (0, 4),
        (2, 1),
        (3, 1),
        (4, 1),
        (0, 5),
        (0, 6),
        (0, 7),
        (1, 8),
        (1, 9),
    ];
    Graph::from_edges(10, edges).expect("fixed construction")
}

/// A 13-cycle, an 11-cycle and six pendant edges all joined at one hub.
///
/// Labels: hub `0`; `0-1-…-12-0` is the 13-cycle; `0-13-…-22-0` the
/// 11-cycle; `23..=28` are the pendant vertices.
pub fn paper_fig3() -> Graph {
    let mut edges = Vec::with_capacity(30);
    let mut next = 1;
    attach_cycle(&mut edges, 0, 13, &mut next);
    attach_cycle(&mut edges, 0, 11, &mut next);
    for _ in 0..6 {
        edges.push((0, next));
        next += 1;
    }
    Graph::from_edges(next, edges).expect("fixed construction")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedGraph {
    Fig2,
    Fig3,
}

impl NamedGraph {
    pub fn build(self) -> Graph {
        match self {
            NamedGraph::Fig2 => paper_fig2(),
            NamedGraph::Fig3 => paper_fig3(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::Fig2 => "fig2",
            NamedGraph::Fig3 => "fig3",
        }
    }
}

impl FromStr for NamedGraph {
    type Err = GenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fig2" => Ok(NamedGraph::Fig2),
            "fig3" => Ok(NamedGraph::Fig3),
            other => Err(GenError::InvalidParams(format!("unknown named graph {other:?}"))),
        }
    }
}

/// Rational probability `numerator / denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Probability {
    pub numerator: u32,
    pub denominator: u32,
}

impl Probability {
    pub const NEVER: Probability = Probability { numerator: 0, denominator: 1 };
    pub const ALWAYS: Probability = Probability { numerator: 1, denominator: 1 };

    pub fn new(numerator: u32, denominator: u32) -> Result<Self, GenError> {
        if denominator == 0 || numerator > denominator {
            return Err(GenError::InvalidParams(format!(
                "probability {numerator}/{denominator} is not in [0, 1]"
            )));
        }
        Ok(Probability { numerator, denominator })
    }

    pub fn is_certain(self) -> bool {
        self.numerator == self.denominator
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Probability {
    type Err = GenError;

    /// `p/q`, `0`, `1`, or a short decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GenError::InvalidParams(format!("cannot parse probability {s:?}"));
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            return Probability::new(p.parse().map_err(|_| err())?, q.parse().map_err(|_| err())?);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || frac.len() > 6 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let scale = 10u32.pow(frac.len() as u32);
            let int: u32 = int.parse().map_err(|_| err())?;
            let frac: u32 = frac.parse().map_err(|_| err())?;
            return Probability::new(int * scale + frac, scale);
        }
        Probability::new(s.parse().map_err(|_| err())?, 1)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    #[default]
    Any,
    EvenOnly,
    OddOnly,
}

impl Parity {
    fn admits(self, length: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::EvenOnly => length.is_multiple_of(2),
            Parity::OddOnly => length % 2 == 1,
        }
    }
}

impl FromStr for Parity {
    type Err = GenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "any" => Ok(Parity::Any),
            "even" | "even_only" => Ok(Parity::EvenOnly),
            "odd" | "odd_only" => Ok(Parity::OddOnly),
            other => Err(GenError::InvalidParams(format!("unknown parity {other:?}"))),
        }
    }
}

/// Parameters of the random attachment process behind [`random_cactus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CactusParams {
    pub block_count: usize,
    pub min_cycle_length: usize,
    pub max_cycle_length: usize,
    pub edge_block_probability: Probability,
    pub parity: Parity,
    pub seed: u64,
}

impl Default for CactusParams {
    fn default() -> Self {
        CactusParams {
            block_count: 6,
            min_cycle_length: 3,
            max_cycle_length: 8,
            edge_block_probability: Probability { numerator: 1, denominator: 3 },
            parity: Parity::Any,
            seed: 0,
        }
    }
}

impl CactusParams {
    /// Cycle lengths the sampler may pick, in increasing order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        (self.min_cycle_length..=self.max_cycle_length)
            .filter(|&k| self.parity.admits(k))
            .collect()
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.min_cycle_length < 3 {
            return Err(GenError::InvalidParams(format!(
                "minimum cycle length {} is below 3",
                self.min_cycle_length
            )));
        }
        Probability::new(self.edge_block_probability.numerator, self.edge_block_probability.denominator)?;
        if !self.edge_block_probability.is_certain() && self.cycle_lengths().is_empty() {
            return Err(GenError::InvalidParams(format!(
                "no {:?} cycle length in {}..={}",
                self.parity, self.min_cycle_length, self.max_cycle_length
            )));
        }
        Ok(())
    }
}

/// Starts from a single vertex and, `block_count` times, picks an existing
/// vertex uniformly and attaches either a pendant edge (with probability
/// `edge_block_probability`) or a new cycle of a uniformly drawn admissible
/// length through it. Per step the draws are: anchor, edge-or-cycle, length.
pub fn random_cactus(p: &CactusParams) -> Result<Graph, GenError> {
    p.validate()?;
    let lengths = p.cycle_lengths();
    let mut rng = SplitMix64::new(p.seed);
    let mut edges = Vec::new();
    let mut next: usize = 1;
    for _ in 0..p.block_count {
        let anchor = rng.below_usize(next);
        let prob = p.edge_block_probability;
        if rng.chance(prob.numerator, prob.denominator) {
            edges.push((anchor, next));
            next += 1;
        } else {
            let k = lengths[rng.below_usize(lengths.len())];
            attach_cycle(&mut edges, anchor, k, &mut next);
        }
    }
    Ok(Graph::from_edges(next, edges)?)
}

/// [`random_cactus`] with pendant edges disabled: every block is a cycle.
pub fn random_cycle_cactus(p: &CactusParams) -> Result<Graph, GenError> {
    random_cactus(&CactusParams { edge_block_probability: Probability::NEVER, ..*p })
}

/// Random recursive tree: vertex `i ≥ 1` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::TooSmall { family: "tree", n, min: 1 });
    }
    let mut rng = SplitMix64::new(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.below_usize(i), i)).collect();
    Ok(Graph::from_edges(n, edges)?)
}

/// Random recursive tree plus every remaining pair independently with the
/// given probability (pairs visited in lexicographic order).
pub fn random_connected(n: usize, extra_edge_probability: Probability, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::TooSmall { family: "connected", n, min: 1 });
    }
    let mut rng = SplitMix64::new(seed);
    let mut parent = vec![usize::MAX; n];
    let mut edges = Vec::new();
    for (i, slot) in parent.iter_mut().enumerate().skip(1) {
        *slot = rng.below_usize(i);
        edges.push((*slot, i));
    }
    for a in 0..n {
        for b in a + 1..n {
            if parent[b] == a {
                continue;
            }
            if rng.chance(extra_edge_probability.numerator, extra_edge_probability.denominator) {
                edges.push((a, b));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// A reproducible description of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphRecipe {
    Named { name: NamedGraph },
    Cycle { length: usize },
    Cactus { params: CactusParams },
    CycleCactus { params: CactusParams },
    Tree { vertices: usize, seed: u64 },
    Connected { vertices: usize, extra_edge_probability: Probability, seed: u64 },
}

impl GraphRecipe {
    pub fn build(&self) -> Result<Graph, GenError> {
        match self {
            GraphRecipe::Named { name } => Ok(name.build()),
            GraphRecipe::Cycle { length } => cycle(*length),
            GraphRecipe::Cactus { params } => random_cactus(params),
            GraphRecipe::CycleCactus { params } => random_cycle_cactus(params),
            GraphRecipe::Tree { vertices, seed } => random_tree(*vertices, *seed),
            GraphRecipe::Connected { vertices, extra_edge_probability, seed } => {
                random_connected(*vertices, *extra_edge_probability, *seed)
            }
        }
    }

    /// Short stable identifier, also used as a file stem.
    pub fn id(&self) -> String {
        match self {
            GraphRecipe::Named { name } => name.name().to_string(),
            GraphRecipe::Cycle { length } => format!("cycle-{length}"),
            GraphRecipe::Cactus { params } => format!("cactus-b{}-s{}", params.block_count, params.seed),
            GraphRecipe::CycleCactus { params } => {
                format!("cycle-cactus-b{}-s{}", params.block_count, params.seed)
            }
            GraphRecipe::Tree { vertices, seed } => format!("tree-n{vertices}-s{seed}"),
            GraphRecipe::Connected { vertices, seed, .. } => format!("connected-n{vertices}-s{seed}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusKind {
    Cactus,
    CycleCactus,
    Tree,
    Connected,
    /// Round-robin over tree, cactus and connected.
    Mixed,
}

impl FromStr for CorpusKind {
    type Err = GenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cactus" => Ok(CorpusKind::Cactus),
            "cycle-cactus" | "cycle_cactus" => Ok(CorpusKind::CycleCactus),
            "tree" => Ok(CorpusKind::Tree),
            "connected" => Ok(CorpusKind::Connected),
            "mixed" => Ok(CorpusKind::Mixed),
            other => Err(GenError::InvalidParams(format!("unknown corpus kind {other:?}"))),
        }
    }
}

/// Recipe for a whole corpus. Per-graph seeds and sizes are drawn from a
/// [`SplitMix64`] stream seeded with `seed`, so the corpus is a pure
/// function of this value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub count: usize,
    pub seed: u64,
    /// Inclusive range for the cactus block count.
    pub min_blocks: usize,
    pub max_blocks: usize,
    pub min_cycle_length: usize,
    pub max_cycle_length: usize,
    pub edge_block_probability: Probability,
    pub parity: Parity,
    /// Inclusive range for tree / connected vertex counts.
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub extra_edge_probability: Probability,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            kind: CorpusKind::Cactus,
            count: 100,
            seed: 0,
            min_blocks: 0,
            max_blocks: 8,
            min_cycle_length: 3,
            max_cycle_length: 8,
            edge_block_probability: Probability { numerator: 1, denominator: 3 },
            parity: Parity::Any,
            min_vertices: 1,
            max_vertices: 40,
            extra_edge_probability: Probability { numerator: 1, denominator: 5 },
        }
    }
}

impl CorpusSpec {
    pub fn recipes(&self) -> Result<Vec<GraphRecipe>, GenError> {
        if self.min_blocks > self.max_blocks || self.min_vertices > self.max_vertices || self.min_vertices == 0 {
            return Err(GenError::InvalidParams("empty block or vertex range".into()));
        }
        let mut stream = SplitMix64::new(self.seed);
        let mut out = Vec::with_capacity(self.count);
        for i in 0..self.count {
            let kind = match self.kind {
                CorpusKind::Mixed => [CorpusKind::Tree, CorpusKind::Cactus, CorpusKind::Connected][i % 3],
                k => k,
            };
            let seed = stream.next_u64();
            let recipe = match kind {
                CorpusKind::Cactus | CorpusKind::CycleCactus => {
                    let span = self.max_blocks - self.min_blocks + 1;
                    let params = CactusParams {
                        block_count: self.min_blocks + stream.below_usize(span),
                        min_cycle_length: self.min_cycle_length,
                        max_cycle_length: self.max_cycle_length,
                        edge_block_probability: self.edge_block_probability,
                        parity: self.parity,
                        seed,
                    };
                    if kind == CorpusKind::Cactus {
                        GraphRecipe::Cactus { params }
                    } else {
                        GraphRecipe::CycleCactus { params }
                    }
                }
                CorpusKind::Tree | CorpusKind::Connected => {
                    let span = self.max_vertices - self.min_vertices + 1;
                    let vertices = self.min_vertices + stream.below_usize(span);
                    if kind == CorpusKind::Tree {
                        GraphRecipe::Tree { vertices, seed }
                    } else {
                        GraphRecipe::Connected { vertices, extra_edge_probability: self.extra_edge_probability, seed }
                    }
                }
                CorpusKind::Mixed => unreachable!("resolved above"),
            };
            out.push(recipe);
        }
        Ok(out)
    }
}

/// JSON manifest written next to generated edge-list files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusManifest {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusSpec>,
    pub graphs: Vec<ManifestEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub file: String,
    pub vertices: usize,
    pub edges: usize,
    pub recipe: GraphRecipe,
}
