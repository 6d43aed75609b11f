//! Lines (large maximal cliques) and the checks on how they sit in the graph.
//!
//! A line is a maximal clique `C` with `4|C| >= 3s(t+2)`. In the clique
//! extension of the `(t+1)`-grid the lines are exactly the `2t+2` row and
//! column cliques, each of order `s(t+1)`, and every vertex is on two of
//! them.

use serde::{Deserialize, Serialize};

use crate::cliques::{maximal_cliques, CliqueConfig};
use crate::error::{Error, Result};
use crate::graph::{ExtensionParams, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Line {
    pub vertices: VertexSet,
}

impl Line {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// `4|C| >= 3s(t+2)`
pub fn meets_line_threshold(order: usize, p: ExtensionParams) -> bool {
    4 * order as u64 >= 3 * p.s as u64 * (p.t as u64 + 2)
}

/// Inclusive range `[s(t-1)+1, s(t+1)]` of admissible line orders.
pub fn admissible_orders(p: ExtensionParams) -> (usize, usize) {
    let (s, t) = (p.s as usize, p.t as usize);
    (s * (t - 1) + 1, s * (t + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineStructure {
    pub params: ExtensionParams,
    pub n: usize,
    pub lines: Vec<Line>,
    /// Line indices through each vertex.
    #[serde(skip)]
    pub incidence: Vec<Vec<usize>>,
    /// `q[i-1]` counts lines of order `s(t-1)+i`, `i = 1..=2s`. Lines outside
    /// the admissible range are not counted here; see `out_of_range`.
    pub q: Vec<u64>,
    /// Indices of lines whose order lies outside `[s(t-1)+1, s(t+1)]`.
    pub out_of_range: Vec<usize>,
    pub delta: usize,
    /// `delta - 2t - 2`
    pub alpha: i64,
}

impl LineStructure {
    /// Assembles the bookkeeping for a given family of lines. The sets are
    /// taken as given; no clique or maximality check is made.
    pub fn from_lines(lines: Vec<VertexSet>, n: usize, p: ExtensionParams) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        for (i, l) in lines.iter().enumerate() {
            for v in l.iter() {
                if v >= n {
                    return Err(Error::invalid(format!("line {i} contains vertex {v} >= n = {n}")));
                }
                incidence[v].push(i);
            }
        }
        let (lo, hi) = admissible_orders(p);
        let mut q = vec![0u64; 2 * p.s as usize];
        let mut out_of_range = Vec::new();
        for (i, l) in lines.iter().enumerate() {
            if (lo..=hi).contains(&l.len()) {
                q[l.len() - lo] += 1;
            } else {
                out_of_range.push(i);
            }
        }
        let delta = lines.len();
        Ok(LineStructure {
            params: p,
            n,
            lines: lines.into_iter().map(|vertices| Line { vertices }).collect(),
            incidence,
            q,
            out_of_range,
            delta,
            alpha: delta as i64 - 2 * p.t as i64 - 2,
        })
    }

    pub fn line(&self, i: usize) -> &Line {
        &self.lines[i]
    }

    pub fn lines_through(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Graph on the lines, two lines adjacent when they share a vertex.
    pub fn intersection_graph(&self) -> Graph {
        let d = self.lines.len();
        let mut edges = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if self.lines[i].vertices.intersection_len(&self.lines[j].vertices) > 0 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(d, edges).expect("pairs are distinct and in range")
    }
}

pub fn find_lines(g: &Graph, p: ExtensionParams, cfg: CliqueConfig) -> Result<LineStructure> {
    let lines = maximal_cliques(g, cfg)?
        .into_iter()
        .filter(|c| meets_line_threshold(c.len(), p))
        .collect();
    LineStructure::from_lines(lines, g.order(), p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoLinesCheck {
    pub holds: bool,
    /// Vertices not on exactly two lines.
    pub offending: Vec<usize>,
}

pub fn check_two_lines_per_vertex(ls: &LineStructure, n: usize) -> TwoLinesCheck {
    let offending: Vec<usize> = (0..n)
        .filter(|&v| ls.incidence.get(v).map_or(0, Vec::len) != 2)
        .collect();
    TwoLinesCheck {
        holds: offending.is_empty(),
        offending,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLineProfile {
    /// Neighbors of `v` on neither line.
    pub ell: usize,
    /// `|C1 ∩ C2|`
    pub m: usize,
    pub ell_plus_m_ok: bool,
    pub order_bounds_ok: bool,
}

pub fn check_vertex_line_profile(
    g: &Graph,
    ls: &LineStructure,
    v: usize,
    p: ExtensionParams,
) -> Result<VertexLineProfile> {
    g.check_vertex(v)?;
    let [i, j] = ls.incidence.get(v).map(Vec::as_slice).unwrap_or(&[])[..] else {
        return Err(Error::precondition(format!(
            "vertex {v} lies on {} lines, not exactly two",
            ls.incidence.get(v).map_or(0, Vec::len)
        )));
    };
    let (c1, c2) = (&ls.lines[i].vertices, &ls.lines[j].vertices);
    let m = c1.intersection_len(c2);
    let ell = g
        .neighbors(v)
        .iter()
        .filter(|&&u| !c1.contains(u) && !c2.contains(u))
        .count();
    let (lo, hi) = admissible_orders(p);
    Ok(VertexLineProfile {
        ell,
        m,
        ell_plus_m_ok: ell + m == p.s as usize,
        order_bounds_ok: [c1.len(), c2.len()].iter().all(|c| (lo..=hi).contains(c)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOrderViolation {
    pub first: usize,
    pub second: usize,
    pub orders: (usize, usize),
    pub shared: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOrdersCheck {
    pub holds: bool,
    pub first_violation: Option<PairOrderViolation>,
}

/// For every pair of lines sharing `m >= 1` vertices: `c1 + c2 = 2st + 2m`.
pub fn check_intersecting_pair_orders(ls: &LineStructure, p: ExtensionParams) -> PairOrdersCheck {
    let st = (p.s * p.t) as usize;
    for i in 0..ls.lines.len() {
        for j in i + 1..ls.lines.len() {
            let (a, b) = (&ls.lines[i].vertices, &ls.lines[j].vertices);
            let m = a.intersection_len(b);
            if m >= 1 && a.len() + b.len() != 2 * st + 2 * m {
                return PairOrdersCheck {
                    holds: false,
                    first_violation: Some(PairOrderViolation {
                        first: i,
                        second: j,
                        orders: (a.len(), b.len()),
                        shared: m,
                    }),
                };
            }
        }
    }
    PairOrdersCheck {
        holds: true,
        first_violation: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramCheck {
    /// `Σ (s(t-1)+i) q_i = 2s(t+1)^2`
    pub eq_main: bool,
    /// `2t+2 <= δ <= 2t+6`
    pub delta_bounds: bool,
    /// `Σ (2s-i) q_i = α s(t+1)`
    pub eq_alpha: bool,
    /// When `δ = 2t+2`, whether every line has order `s(t+1)`; `None` otherwise.
    pub equality_case_full_order: Option<bool>,
    /// Why the checks were not evaluated, if they were not.
    pub reason: Option<String>,
}

impl HistogramCheck {
    pub fn all_ok(&self) -> bool {
        self.eq_main && self.delta_bounds && self.eq_alpha && self.equality_case_full_order != Some(false)
    }
}

pub fn check_order_histogram(ls: &LineStructure, p: ExtensionParams) -> HistogramCheck {
    if !ls.out_of_range.is_empty() {
        let (lo, hi) = admissible_orders(p);
        return HistogramCheck {
            eq_main: false,
            delta_bounds: false,
            eq_alpha: false,
            equality_case_full_order: None,
            reason: Some(format!(
                "{} line(s) with order outside [{lo}, {hi}]",
                ls.out_of_range.len()
            )),
        };
    }
    let (s, t) = (p.s as i128, p.t as i128);
    let weighted: i128 = (1..=2 * s)
        .zip(&ls.q)
        .map(|(i, &qi)| (s * (t - 1) + i) * qi as i128)
        .sum();
    let deficit: i128 = (1..=2 * s).zip(&ls.q).map(|(i, &qi)| (2 * s - i) * qi as i128).sum();
    let delta = ls.delta as i128;
    let two_t_two = 2 * t + 2;
    HistogramCheck {
        eq_main: weighted == 2 * s * (t + 1) * (t + 1),
        delta_bounds: (two_t_two..=2 * t + 6).contains(&delta),
        eq_alpha: deficit == ls.alpha as i128 * s * (t + 1),
        equality_case_full_order: (delta == two_t_two).then(|| ls.q.last().copied() == Some(ls.delta as u64)),
        reason: None,
    }
}

/// `δ = 2t+2` and every line has order `s(t+1)`.
pub fn check_line_count(ls: &LineStructure, p: ExtensionParams) -> bool {
    let full = p.max_clique_order();
    ls.delta == 2 * p.t as usize + 2 && ls.lines.iter().all(|l| l.order() == full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_grid, build_shrikhande, clique_extension};

    fn params(s: u32, t: u32) -> ExtensionParams {
        ExtensionParams::new(s, t).unwrap()
    }

    fn ext_lines(m: usize, s: usize) -> (Graph, LineStructure) {
        let g = clique_extension(&build_grid(m).unwrap(), s).unwrap();
        let p = params(s as u32, m as u32 - 1);
        let ls = find_lines(&g, p, CliqueConfig::default()).unwrap();
        (g, ls)
    }

    #[test]
    fn threshold_is_non_strict() {
        // 3 * 3 * 4 / 4 = 9 exactly
        assert!(meets_line_threshold(9, params(3, 2)));
        assert!(!meets_line_threshold(8, params(3, 2)));
        assert!(!meets_line_threshold(7, params(2, 3)));
        assert!(meets_line_threshold(8, params(2, 3)));
    }

    #[test]
    fn grid_extension_structure() {
        let (g, ls) = ext_lines(3, 2);
        let p = params(2, 2);
        assert_eq!((ls.delta, ls.alpha), (6, 0));
        assert!(ls.lines.iter().all(|l| l.order() == 6));
        assert_eq!(ls.q, vec![0, 0, 0, 6]);
        assert!(check_two_lines_per_vertex(&ls, 18).holds);
        for v in 0..18 {
            let prof = check_vertex_line_profile(&g, &ls, v, p).unwrap();
            assert_eq!((prof.m, prof.ell), (2, 0));
            assert!(prof.ell_plus_m_ok && prof.order_bounds_ok);
        }
        assert!(check_intersecting_pair_orders(&ls, p).holds);
        let h = check_order_histogram(&ls, p);
        assert!(h.all_ok() && h.equality_case_full_order == Some(true));
        assert!(check_line_count(&ls, p));
        let ig = ls.intersection_graph();
        // rows meet columns, never each other: K_{3,3}
        assert_eq!((ig.order(), ig.size(), ig.regular_degree()), (6, 9, Some(3)));
    }

    #[test]
    fn larger_extensions() {
        let (_, ls) = ext_lines(4, 2);
        assert_eq!(ls.delta, 8);
        assert!(ls.lines.iter().all(|l| l.order() == 8));
        assert!(check_intersecting_pair_orders(&ls, params(2, 3)).holds);

        let (g, ls) = ext_lines(4, 3);
        let p = params(3, 3);
        assert_eq!(ls.q[5], 8);
        assert!(check_order_histogram(&ls, p).all_ok());
        for v in 0..g.order() {
            let prof = check_vertex_line_profile(&g, &ls, v, p).unwrap();
            assert_eq!((prof.m, prof.ell), (3, 0));
        }

        let (_, ls) = ext_lines(5, 2);
        assert!(check_line_count(&ls, params(2, 4)));
        assert_eq!(ls.delta, 10);
    }

    #[test]
    fn shrikhande_extension_has_no_lines() {
        let g = clique_extension(&build_shrikhande(), 2).unwrap();
        let p = params(2, 3);
        let ls = find_lines(&g, p, CliqueConfig::default()).unwrap();
        assert_eq!(ls.delta, 0);
        let two = check_two_lines_per_vertex(&ls, g.order());
        assert!(!two.holds);
        assert_eq!(two.offending, (0..32).collect::<Vec<_>>());
        assert!(!check_line_count(&ls, p));
        assert!(check_vertex_line_profile(&g, &ls, 0, p).is_err());
    }

    #[test]
    fn single_clique_is_one_line() {
        let k6 = build_complete(6).unwrap();
        let ls = find_lines(&k6, params(2, 2), CliqueConfig::default()).unwrap();
        assert_eq!(ls.delta, 1);
        let two = check_two_lines_per_vertex(&ls, 6);
        assert!(!two.holds && two.offending.len() == 6);
    }

    #[test]
    fn lines_sharing_too_little() {
        // two K4s glued at vertex 0
        let mut edges = Vec::new();
        for block in [[0, 1, 2, 3], [0, 4, 5, 6]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((block[i], block[j]));
                }
            }
        }
        let g = Graph::from_edges(7, edges).unwrap();
        let p = params(2, 1);
        let lines = vec![VertexSet::new([0, 1, 2, 3], 7).unwrap(), VertexSet::new([0, 4, 5, 6], 7).unwrap()];
        let ls = LineStructure::from_lines(lines, 7, p).unwrap();
        let prof = check_vertex_line_profile(&g, &ls, 0, p).unwrap();
        assert_eq!((prof.m, prof.ell), (1, 0));
        assert!(!prof.ell_plus_m_ok);
        // 4 + 4 != 2*2 + 2*1
        let pc = check_intersecting_pair_orders(&ls, p);
        assert_eq!(pc.first_violation.map(|v| v.shared), Some(1));
    }

    #[test]
    fn histogram_negative_controls() {
        let p = params(2, 1);
        // δ = 2t + 7 = 9 disjoint lines of order 4 on 36 vertices
        let lines: Vec<VertexSet> = (0..9).map(|i| VertexSet::new(4 * i..4 * i + 4, 36).unwrap()).collect();
        let ls = LineStructure::from_lines(lines, 36, p).unwrap();
        let h = check_order_histogram(&ls, p);
        assert!(!h.delta_bounds);
        assert_eq!(ls.alpha, 5);

        let big = vec![VertexSet::new(0..7, 8).unwrap()];
        let ls = LineStructure::from_lines(big, 8, p).unwrap();
        assert_eq!(ls.out_of_range, vec![0]);
        let h = check_order_histogram(&ls, p);
        assert!(!h.eq_main && h.reason.is_some());
    }

    #[test]
    fn disjoint_pairs_are_vacuous() {
        let p = params(2, 1);
        let lines = vec![VertexSet::new([0, 1, 2], 6).unwrap(), VertexSet::new([3, 4, 5], 6).unwrap()];
        let ls = LineStructure::from_lines(lines, 6, p).unwrap();
        assert!(check_intersecting_pair_orders(&ls, p).holds);
    }
}
