//! Block–cut-vertex decomposition and the closest-vertex projection onto a block.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DistanceMatrix, Edge, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("vertex {vertex} has {candidates:?} as equally close vertices in block starting at edge {first_edge:?}")]
    AmbiguousProjection {
        vertex: Vertex,
        first_edge: (Vertex, Vertex),
        candidates: Vec<Vertex>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "length", rename_all = "snake_case")]
pub enum BlockKind {
    BridgeEdge,
    /// Cycle of the given length (at least 3).
    Cycle(usize),
    Other,
}

impl BlockKind {
    pub fn is_cycle(self) -> bool {
        matches!(self, BlockKind::Cycle(_))
    }

    pub fn is_even_cycle(self) -> bool {
        matches!(self, BlockKind::Cycle(k) if k % 2 == 0)
    }

    pub fn is_odd_cycle(self) -> bool {
        matches!(self, BlockKind::Cycle(k) if k % 2 == 1)
    }

    fn from_parts(vertices: &[Vertex], edges: &[Edge]) -> Self {
        if edges.len() == 1 {
            return BlockKind::BridgeEdge;
        }
        if vertices.len() == edges.len() && vertices.len() >= 3 {
            let degree_two = vertices.iter().all(|&v| edges.iter().filter(|e| e.contains(v)).count() == 2);
            if degree_two {
                return BlockKind::Cycle(vertices.len());
            }
        }
        BlockKind::Other
    }
}

/// Maximal 2-connected subgraph (or a bridge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    kind: BlockKind,
}

impl Block {
    /// Sorted vertex list.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Sorted edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn first_edge(&self) -> Edge {
        self.edges[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Block>,
    cut_vertices: Vec<Vertex>,
    /// `(edge, block index)` sorted by edge.
    block_of_edge: Vec<(Edge, usize)>,
}

impl BlockDecomposition {
    /// Blocks ordered by their smallest edge.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Sorted cut vertices.
    pub fn cut_vertices(&self) -> &[Vertex] {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    pub fn block_of_edge(&self, e: Edge) -> Option<usize> {
        self.block_of_edge
            .binary_search_by(|(f, _)| f.cmp(&e))
            .ok()
            .map(|i| self.block_of_edge[i].1)
    }

    /// Every block is a bridge or a cycle. Holds for a single vertex.
    pub fn is_cactus(&self) -> bool {
        self.blocks.iter().all(|b| b.kind != BlockKind::Other)
    }

    /// Every block is a cycle. Holds vacuously for a single vertex.
    pub fn all_blocks_cycles(&self) -> bool {
        self.blocks.iter().all(|b| b.kind.is_cycle())
    }

    pub fn all_blocks_even_cycles(&self) -> bool {
        self.blocks.iter().all(|b| b.kind.is_even_cycle())
    }

    pub fn kinds(&self) -> Vec<BlockKind> {
        self.blocks.iter().map(|b| b.kind).collect()
    }
}

const UNVISITED: usize = usize::MAX;

/// Hopcroft–Tarjan biconnected components with an explicit DFS stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut clock = 0usize;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut raw_blocks: Vec<Vec<Edge>> = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(Vertex, Vertex, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNVISITED {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        frames.push((root, UNVISITED, 0));

        while let Some(frame) = frames.last_mut() {
            let (v, parent, i) = *frame;
            let neighbors = g.neighbors(v);
            if i < neighbors.len() {
                frame.2 += 1;
                let w = neighbors[i];
                if disc[w] == UNVISITED {
                    edge_stack.push(Edge::new(v, w).expect("simple graph"));
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w).expect("simple graph"));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let Some(&(p, _, _)) = frames.last() else { continue };
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                let tree_edge = Edge::new(p, v).expect("simple graph");
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == tree_edge {
                        break;
                    }
                }
                raw_blocks.push(block);
            }
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<Vertex> = edges.iter().flat_map(|e| [e.s(), e.t()]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let kind = BlockKind::from_parts(&vertices, &edges);
            Block { vertices, edges, kind }
        })
        .collect();
    blocks.sort_by_key(|b| b.first_edge());

    let mut membership = vec![0usize; n];
    let mut block_of_edge = Vec::with_capacity(g.edge_count());
    for (idx, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            membership[v] += 1;
        }
        block_of_edge.extend(b.edges.iter().map(|&e| (e, idx)));
    }
    block_of_edge.sort_unstable();
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();

    BlockDecomposition { blocks, cut_vertices, block_of_edge }
}

/// Classifies `b` from the subgraph of `g` induced on the block's vertices.
pub fn classify_block(g: &Graph, b: &Block) -> BlockKind {
    let vs = b.vertices();
    let induced: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| b.contains(e.s()) && b.contains(e.t()))
        .collect();
    BlockKind::from_parts(vs, &induced)
}

pub fn is_cactus(g: &Graph) -> bool {
    block_decomposition(g).is_cactus()
}

pub fn all_blocks_cycles(g: &Graph) -> bool {
    block_decomposition(g).all_blocks_cycles()
}

/// Every pair of block vertices is adjacent in `g`.
pub fn is_complete_block(g: &Graph, b: &Block) -> bool {
    let vs = b.vertices();
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&c| g.has_edge(a, c)))
}

/// The unique vertex of `b` nearest to `u`.
pub fn closest_vertex_in_block(dm: &DistanceMatrix, b: &Block, u: Vertex) -> Result<Vertex, BlockError> {
    let row = dm.row(u);
    let best = b.vertices().iter().map(|&w| row[w]).min().expect("blocks are non-empty");
    let candidates: Vec<Vertex> = b.vertices().iter().copied().filter(|&w| row[w] == best).collect();
    if candidates.len() == 1 {
        Ok(candidates[0])
    } else {
        Err(BlockError::AmbiguousProjection {
            vertex: u,
            first_edge: b.first_edge().endpoints(),
            candidates,
        })
    }
}

/// `projection[b][u]` is the vertex of block `b` closest to `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionTable {
    projection: Vec<Vec<Vertex>>,
}

impl ProjectionTable {
    pub fn compute(dm: &DistanceMatrix, decomposition: &BlockDecomposition) -> Result<Self, BlockError> {
        let n = dm.vertex_count();
        let projection = decomposition
            .blocks()
            .iter()
            .map(|b| (0..n).map(|u| closest_vertex_in_block(dm, b, u)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Ok(ProjectionTable { projection })
    }

    #[inline]
    pub fn get(&self, block: usize, u: Vertex) -> Vertex {
        self.projection[block][u]
    }
}
