//! Wiener, Szeged and revised Szeged indices.
//!
//! Each Szeged-type index is available twice: as the classical sum over edges
//! and as a sum over ordered vertex pairs built from per-pair edge counts
//! (`dis` and `deq`). The pair sums cost `O(n²·m)` and serve as an
//! independent cross-check of the `O(n·m)` edge sums.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DistanceMatrix, Edge, Graph, Vertex};
use crate::rational::QuarterRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("distance {distance} is outside 1..={max} on a cycle of length {length}")]
    DistanceOutOfRange { length: usize, distance: usize, max: usize },
}

/// How the vertices split with respect to an edge `{s, t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSplit {
    pub closer_to_s: usize,
    pub closer_to_t: usize,
    pub equidistant: usize,
}

impl EdgeSplit {
    pub fn total(&self) -> usize {
        self.closer_to_s + self.closer_to_t + self.equidistant
    }
}

pub fn edge_split(dm: &DistanceMatrix, e: Edge) -> EdgeSplit {
    let (s, t) = e.endpoints();
    let mut split = EdgeSplit { closer_to_s: 0, closer_to_t: 0, equidistant: 0 };
    for w in 0..dm.vertex_count() {
        let row = dm.row(w);
        match row[s].cmp(&row[t]) {
            Ordering::Less => split.closer_to_s += 1,
            Ordering::Greater => split.closer_to_t += 1,
            Ordering::Equal => split.equidistant += 1,
        }
    }
    split
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener(dm: &DistanceMatrix) -> u64 {
    let n = dm.vertex_count();
    (0..n)
        .into_par_iter()
        .map(|u| dm.row(u)[u + 1..].iter().map(|&d| u64::from(d)).sum::<u64>())
        .sum()
}

pub fn szeged(g: &Graph, dm: &DistanceMatrix) -> u64 {
    g.edges()
        .par_iter()
        .map(|&e| {
            let split = edge_split(dm, e);
            (split.closer_to_s * split.closer_to_t) as u64
        })
        .sum()
}

pub fn revised_szeged(g: &Graph, dm: &DistanceMatrix) -> QuarterRational {
    g.edges()
        .par_iter()
        .map(|&e| {
            let split = edge_split(dm, e);
            let o = split.equidistant as i128;
            QuarterRational::product_of_halves(
                2 * split.closer_to_s as i128 + o,
                2 * split.closer_to_t as i128 + o,
            )
        })
        .sum()
}

/// `e` is `(u, v)`-distance-disparate: its endpoints are ordered strictly and
/// oppositely by their distances from `u` and from `v`.
#[inline]
pub fn mu(dm: &DistanceMatrix, u: Vertex, v: Vertex, e: Edge) -> bool {
    let (s, t) = e.endpoints();
    let from_u = dm.get(u, s).cmp(&dm.get(u, t));
    let from_v = dm.get(v, s).cmp(&dm.get(v, t));
    from_u != Ordering::Equal && from_v == from_u.reverse()
}

/// Both endpoints of `e` are at equal distance from `v`.
#[inline]
pub fn nu(dm: &DistanceMatrix, v: Vertex, e: Edge) -> bool {
    dm.get(v, e.s()) == dm.get(v, e.t())
}

/// Number of `(u, v)`-distance-disparate edges.
pub fn dis_count(g: &Graph, dm: &DistanceMatrix, u: Vertex, v: Vertex) -> usize {
    let (ru, rv) = (dm.row(u), dm.row(v));
    g.edges()
        .iter()
        .filter(|e| {
            let (s, t) = e.endpoints();
            let a = ru[s].cmp(&ru[t]);
            a != Ordering::Equal && rv[s].cmp(&rv[t]) == a.reverse()
        })
        .count()
}

/// Number of `(u, v)`-distance-equal edges; `deq(u, u)` counts edges whose
/// endpoints are equidistant from `u`.
pub fn deq_count(g: &Graph, dm: &DistanceMatrix, u: Vertex, v: Vertex) -> usize {
    let (ru, rv) = (dm.row(u), dm.row(v));
    g.edges()
        .iter()
        .filter(|e| {
            let (s, t) = e.endpoints();
            ru[s] == ru[t] && rv[s] == rv[t]
        })
        .count()
}

/// Half the sum of `dis(u, v)` over ordered pairs.
pub fn szeged_vertex_sum(g: &Graph, dm: &DistanceMatrix) -> u64 {
    let n = g.vertex_count();
    let ordered: u64 = (0..n)
        .into_par_iter()
        .map(|u| (0..n).map(|v| dis_count(g, dm, u, v) as u64).sum::<u64>())
        .sum();
    debug_assert_eq!(ordered % 2, 0, "dis is symmetric");
    ordered / 2
}

/// `½ Σ_{u,v} [dis(u,v) + deq(u,u) − ½ deq(u,v)]` over ordered pairs,
/// diagonal included.
pub fn revised_szeged_vertex_sum(g: &Graph, dm: &DistanceMatrix) -> QuarterRational {
    let n = g.vertex_count();
    // 4 · ½ · (dis + deq(u,u) − ½ deq(u,v)) = 2·dis + 2·deq(u,u) − deq(u,v)
    let quarters: i128 = (0..n)
        .into_par_iter()
        .map(|u| {
            let self_equal = deq_count(g, dm, u, u) as i128;
            (0..n)
                .map(|v| 2 * dis_count(g, dm, u, v) as i128 + 2 * self_equal - deq_count(g, dm, u, v) as i128)
                .sum::<i128>()
        })
        .sum();
    QuarterRational::from_quarters(quarters)
}

/// Both closed forms of `Sz* − Sz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceForms {
    /// `½ Σ_e (n·o_e − ½ o_e²)`
    pub edge_form: QuarterRational,
    /// `½ n Σ_u deq(u,u) − ¼ Σ_{u,v} deq(u,v)`
    pub vertex_form: QuarterRational,
}

pub fn szeged_difference_edge_form(g: &Graph, dm: &DistanceMatrix) -> QuarterRational {
    let n = g.vertex_count() as i128;
    let quarters: i128 = g
        .edges()
        .par_iter()
        .map(|&e| {
            let o = edge_split(dm, e).equidistant as i128;
            2 * n * o - o * o
        })
        .sum();
    QuarterRational::from_quarters(quarters)
}

pub fn szeged_difference_vertex_form(g: &Graph, dm: &DistanceMatrix) -> QuarterRational {
    let n = g.vertex_count();
    let (diagonal, all_pairs): (i128, i128) = (0..n)
        .into_par_iter()
        .map(|u| {
            let diag = deq_count(g, dm, u, u) as i128;
            let row: i128 = (0..n).map(|v| deq_count(g, dm, u, v) as i128).sum();
            (diag, row)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    QuarterRational::from_quarters(2 * n as i128 * diagonal - all_pairs)
}

pub fn szeged_difference(g: &Graph, dm: &DistanceMatrix) -> DifferenceForms {
    DifferenceForms {
        edge_form: szeged_difference_edge_form(g, dm),
        vertex_form: szeged_difference_vertex_form(g, dm),
    }
}

/// Number of distance-disparate edges for two vertices at distance `d` on a
/// cycle of length `length`: `2d` on even cycles, `2d − 1` on odd ones.
pub fn cycle_dis_closed_form(length: usize, d: usize) -> Result<usize, IndexError> {
    if length < 3 {
        return Err(IndexError::CycleTooShort(length));
    }
    let max = length / 2;
    if d == 0 || d > max {
        return Err(IndexError::DistanceOutOfRange { length, distance: d, max });
    }
    Ok(if length.is_multiple_of(2) { 2 * d } else { 2 * d - 1 })
}

/// All indices of one graph plus the vertex-sum cross-checks when requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub wiener: u64,
    pub szeged: u64,
    pub revised_szeged: QuarterRational,
    pub difference_edge_form: QuarterRational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub szeged_vertex_sum: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub revised_szeged_vertex_sum: Option<QuarterRational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub difference_vertex_form: Option<QuarterRational>,
}

impl IndexReport {
    pub fn compute(g: &Graph, dm: &DistanceMatrix, with_vertex_sums: bool) -> Self {
        let mut report = IndexReport {
            wiener: wiener(dm),
            szeged: szeged(g, dm),
            revised_szeged: revised_szeged(g, dm),
            difference_edge_form: szeged_difference_edge_form(g, dm),
            szeged_vertex_sum: None,
            revised_szeged_vertex_sum: None,
            difference_vertex_form: None,
        };
        if with_vertex_sums {
            report.szeged_vertex_sum = Some(szeged_vertex_sum(g, dm));
            report.revised_szeged_vertex_sum = Some(revised_szeged_vertex_sum(g, dm));
            report.difference_vertex_form = Some(szeged_difference_vertex_form(g, dm));
        }
        report
    }

    pub fn difference(&self) -> QuarterRational {
        self.revised_szeged - QuarterRational::from(self.szeged)
    }

    pub fn has_vertex_sums(&self) -> bool {
        self.szeged_vertex_sum.is_some()
    }

    /// Descriptions of every cross-check that disagrees; empty when consistent.
    pub fn inconsistencies(&self) -> Vec<String> {
        let mut out = Vec::new();
        let diff = self.difference();
        if self.difference_edge_form != diff {
            out.push(format!("edge-form difference {} != Sz* - Sz = {}", self.difference_edge_form, diff));
        }
        if let Some(sz) = self.szeged_vertex_sum {
            if sz != self.szeged {
                out.push(format!("Sz vertex sum {} != edge sum {}", sz, self.szeged));
            }
        }
        if let Some(rsz) = self.revised_szeged_vertex_sum {
            if rsz != self.revised_szeged {
                out.push(format!("Sz* vertex sum {} != edge sum {}", rsz, self.revised_szeged));
            }
        }
        if let Some(vf) = self.difference_vertex_form {
            if vf != diff {
                out.push(format!("vertex-form difference {} != Sz* - Sz = {}", vf, diff));
            }
        }
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistencies().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn dm(g: &Graph) -> DistanceMatrix {
        DistanceMatrix::compute(g).unwrap()
    }

    #[test]
    fn edge_splits() {
        let c4 = cycle(4);
        let c5 = cycle(5);
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let (d4, d5, dp) = (dm(&c4), dm(&c5), dm(&p3));
        for &edge in c4.edges() {
            assert_eq!(edge_split(&d4, edge), EdgeSplit { closer_to_s: 2, closer_to_t: 2, equidistant: 0 });
        }
        for &edge in c5.edges() {
            assert_eq!(edge_split(&d5, edge), EdgeSplit { closer_to_s: 2, closer_to_t: 2, equidistant: 1 });
        }
        assert_eq!(edge_split(&dp, e(0, 1)), EdgeSplit { closer_to_s: 1, closer_to_t: 2, equidistant: 0 });
    }

    #[test]
    fn small_index_values() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let d = dm(&p3);
        assert_eq!(wiener(&d), 4);
        assert_eq!(szeged(&p3, &d), 4);
        assert_eq!(szeged_vertex_sum(&p3, &d), 4);

        let c5 = cycle(5);
        let d = dm(&c5);
        assert_eq!(wiener(&d), 15);
        assert_eq!(szeged(&c5, &d), 20);
        assert_eq!(szeged_vertex_sum(&c5, &d), 20);
        assert_eq!(revised_szeged(&c5, &d), QuarterRational::from_quarters(125));
        assert_eq!(revised_szeged_vertex_sum(&c5, &d), QuarterRational::from_quarters(125));
        let diff = szeged_difference(&c5, &d);
        assert_eq!(diff.edge_form, QuarterRational::from_quarters(45));
        assert_eq!(diff.vertex_form, QuarterRational::from_quarters(45));

        let c3 = cycle(3);
        let d = dm(&c3);
        assert_eq!(revised_szeged(&c3, &d), QuarterRational::from_quarters(27));
        let diff = szeged_difference(&c3, &d);
        assert_eq!(diff.edge_form, QuarterRational::from_quarters(15));
        assert_eq!(diff.vertex_form, QuarterRational::from_quarters(15));
        assert_eq!(QuarterRational::from_quarters(27) - QuarterRational::from(szeged(&c3, &d)), diff.edge_form);
    }

    #[test]
    fn indicators() {
        let c4 = cycle(4);
        let d4 = dm(&c4);
        for u in 0..4 {
            for &edge in c4.edges() {
                assert!(!mu(&d4, u, u, edge));
                assert!(!nu(&d4, u, edge));
            }
        }
        assert!(mu(&d4, 0, 1, e(0, 1)));

        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert!(mu(&dm(&p3), 0, 2, e(0, 1)));

        assert!(nu(&dm(&cycle(5)), 0, e(2, 3)));
        assert!(nu(&dm(&cycle(3)), 0, e(1, 2)));
    }

    #[test]
    fn pair_counts() {
        let c4 = cycle(4);
        assert_eq!(dis_count(&c4, &dm(&c4), 0, 1), 2);
        let c5 = cycle(5);
        let d5 = dm(&c5);
        assert_eq!(dis_count(&c5, &d5, 0, 2), 3);
        assert_eq!(dis_count(&c5, &d5, 3, 3), 0);
        for u in 0..5 {
            assert_eq!(deq_count(&c5, &d5, u, u), 1);
            for v in 0..5 {
                if u != v {
                    assert_eq!(deq_count(&c5, &d5, u, v), 0);
                }
            }
        }
        let c6 = cycle(6);
        let d6 = dm(&c6);
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(deq_count(&c6, &d6, u, v), 0);
            }
        }
    }

    #[test]
    fn bipartite_difference_vanishes() {
        let c6 = cycle(6);
        let d = dm(&c6);
        let diff = szeged_difference(&c6, &d);
        assert_eq!(diff.edge_form, QuarterRational::ZERO);
        assert_eq!(diff.vertex_form, QuarterRational::ZERO);
        assert_eq!(revised_szeged(&c6, &d), QuarterRational::from(szeged(&c6, &d)));
    }

    #[test]
    fn closed_form_values_and_errors() {
        assert_eq!(cycle_dis_closed_form(4, 1), Ok(2));
        assert_eq!(cycle_dis_closed_form(5, 2), Ok(3));
        assert_eq!(cycle_dis_closed_form(13, 6), Ok(11));
        assert_eq!(cycle_dis_closed_form(2, 1), Err(IndexError::CycleTooShort(2)));
        assert_eq!(
            cycle_dis_closed_form(5, 3),
            Err(IndexError::DistanceOutOfRange { length: 5, distance: 3, max: 2 })
        );
        assert!(cycle_dis_closed_form(5, 0).is_err());
    }

    #[test]
    fn report_is_consistent_on_c5() {
        let c5 = cycle(5);
        let r = IndexReport::compute(&c5, &dm(&c5), true);
        assert!(r.is_consistent(), "{:?}", r.inconsistencies());
        assert_eq!(r.difference(), QuarterRational::from_quarters(45));

        let mut broken = r.clone();
        broken.szeged_vertex_sum = Some(21);
        assert_eq!(broken.inconsistencies().len(), 1);
    }
}
