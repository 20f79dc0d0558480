//! Brute-force reference implementations. Nothing here calls into the
//! library's distance, block or index code; graphs are handed over as plain
//! edge lists.

#![allow(dead_code)]

use num_rational::Ratio;
use szeged_core::Graph;

pub type Rat = Ratio<i64>;

pub const INF: i64 = i64::MAX / 4;

pub fn edge_list(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    (g.vertex_count(), g.edges().iter().map(|e| e.endpoints()).collect())
}

/// Floyd–Warshall on the adjacency matrix.
pub fn floyd(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(a, b) in edges {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn wiener(d: &[Vec<i64>]) -> i64 {
    let n = d.len();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).map(|(u, v)| d[u][v]).sum()
}

/// (closer to a, closer to b, equidistant) by direct counting.
pub fn split(d: &[Vec<i64>], a: usize, b: usize) -> (i64, i64, i64) {
    let mut out = (0, 0, 0);
    for row in d {
        if row[a] < row[b] {
            out.0 += 1;
        } else if row[a] > row[b] {
            out.1 += 1;
        } else {
            out.2 += 1;
        }
    }
    out
}

pub fn szeged(d: &[Vec<i64>], edges: &[(usize, usize)]) -> i64 {
    edges.iter().map(|&(a, b)| {
        let (x, y, _) = split(d, a, b);
        x * y
    }).sum()
}

pub fn revised_szeged(d: &[Vec<i64>], edges: &[(usize, usize)]) -> Rat {
    let half = Rat::new(1, 2);
    edges.iter().fold(Rat::from_integer(0), |acc, &(a, b)| {
        let (x, y, o) = split(d, a, b);
        let o = Rat::from_integer(o);
        acc + (Rat::from_integer(x) + half * o) * (Rat::from_integer(y) + half * o)
    })
}

pub fn dis(d: &[Vec<i64>], edges: &[(usize, usize)], u: usize, v: usize) -> i64 {
    edges
        .iter()
        .filter(|&&(s, t)| (d[u][s] < d[u][t] && d[v][s] > d[v][t]) || (d[u][s] > d[u][t] && d[v][s] < d[v][t]))
        .count() as i64
}

pub fn deq(d: &[Vec<i64>], edges: &[(usize, usize)], u: usize, v: usize) -> i64 {
    edges
        .iter()
        .filter(|&&(s, t)| d[u][s] == d[u][t] && d[v][s] == d[v][t])
        .count() as i64
}

/// Converts an exact library value to the oracle's rational type.
pub fn rat(q: szeged_core::QuarterRational) -> Rat {
    Rat::new(q.quadrupled() as i64, 4)
}

fn connected_without(n: usize, edges: &[(usize, usize)], removed: usize, a: usize, b: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![a];
    seen[a] = true;
    seen[removed] = true;
    while let Some(x) = stack.pop() {
        for &(s, t) in edges {
            for (p, q) in [(s, t), (t, s)] {
                if p == x && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    seen[b]
}

/// Vertices whose removal disconnects the graph.
pub fn cut_vertices(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    (0..n)
        .filter(|&x| {
            let rest: Vec<usize> = (0..n).filter(|&y| y != x).collect();
            rest.len() >= 2 && rest.iter().any(|&b| !connected_without(n, edges, x, rest[0], b))
        })
        .collect()
}

/// Two edges share a block iff no single vertex separates their remaining
/// endpoints.
pub fn same_block(n: usize, edges: &[(usize, usize)], e: (usize, usize), f: (usize, usize)) -> bool {
    if e == f {
        return true;
    }
    (0..n).all(|x| {
        let a = if e.0 != x { e.0 } else { e.1 };
        let b = if f.0 != x { f.0 } else { f.1 };
        connected_without(n, edges, x, a, b)
    })
}
