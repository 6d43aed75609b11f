//! Co-edge-regularity, strong regularity, and local-graph valency identities.

use serde::{Deserialize, Serialize};

use crate::cliques::{maximum_clique_order, DEFAULT_EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{complement, local_graph, ExtensionParams, Graph, VertexSet};

/// `|N(x) ∩ N(y)|`: `λ_{x,y}` for adjacent pairs, `μ_{x,y}` otherwise.
pub fn common_neighbors(g: &Graph, x: usize, y: usize) -> Result<usize> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::invalid(format!("common neighbors of vertex {x} with itself")));
    }
    Ok(g.row(x).intersection_count(g.row(y)))
}

/// Which regularity parameters are constant. `mu` and `lambda` are only
/// reported for regular graphs, and only when constant over every pair of
/// the relevant kind.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityProfile {
    pub n: usize,
    pub k: Option<usize>,
    pub lambda: Option<usize>,
    pub mu: Option<usize>,
}

impl RegularityProfile {
    pub fn is_co_edge_regular(&self) -> bool {
        self.k.is_some() && self.mu.is_some()
    }

    /// Strongly regular: all three parameters constant, neither complete nor empty.
    pub fn is_strongly_regular(&self) -> bool {
        match (self.k, self.lambda, self.mu) {
            (Some(k), Some(_), Some(_)) => k > 0 && k + 1 < self.n,
            _ => false,
        }
    }

    pub fn srg_params(&self) -> Option<(usize, usize, usize, usize)> {
        self.is_strongly_regular()
            .then(|| (self.n, self.k.unwrap(), self.lambda.unwrap(), self.mu.unwrap()))
    }
}

pub fn regularity_profile(g: &Graph) -> RegularityProfile {
    let n = g.order();
    let mut prof = RegularityProfile { n, ..Default::default() };
    prof.k = g.regular_degree();
    if prof.k.is_none() {
        return prof;
    }
    // Some(None) once two different values have been seen
    let mut lambda: Option<Option<usize>> = None;
    let mut mu: Option<Option<usize>> = None;
    for x in 0..n {
        for y in x + 1..n {
            let c = g.row(x).intersection_count(g.row(y));
            let slot = if g.adjacent(x, y) { &mut lambda } else { &mut mu };
            *slot = match *slot {
                None => Some(Some(c)),
                Some(Some(v)) if v == c => Some(Some(v)),
                _ => Some(None),
            };
        }
    }
    prof.lambda = lambda.flatten();
    prof.mu = mu.flatten();
    prof
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalValencyStats {
    pub vertex: usize,
    /// Degrees inside the local graph, in the order of `N(v)`.
    pub degrees: Vec<usize>,
    pub sum: i128,
    pub sum_of_squares: i128,
    /// `Σ (d_i - (st + s - 2))^2`
    pub centered_square_sum: i128,
    pub sum_ok: bool,
    pub sum_of_squares_ok: bool,
    pub centered_ok: bool,
}

impl LocalValencyStats {
    pub fn all_ok(&self) -> bool {
        self.sum_ok && self.sum_of_squares_ok && self.centered_ok
    }
}

/// Closed forms for the local graph of a vertex: `(Σd, Σd², Σ(d - (st+s-2))²)`.
pub fn local_valency_targets(p: ExtensionParams) -> (i128, i128, i128) {
    let (s, t) = (p.s as i128, p.t as i128);
    let sum = 2 * s * t * (s * t + 2 * s - 3) + s * s - 3 * s + 2;
    let sumsq = 2 * s * t * (s * s * t * t + 4 * s * s * t - 6 * s * t + 3 * s * s - 10 * s + 8) + s * s * s
        - 5 * s * s
        + 8 * s
        - 4;
    let centered = s * s * t * t * (s - 1);
    (sum, sumsq, centered)
}

pub fn local_valency_stats(g: &Graph, v: usize, p: ExtensionParams) -> Result<LocalValencyStats> {
    g.check_vertex(v)?;
    let k = p.valency() as usize;
    if g.degree(v) != k {
        return Err(Error::precondition(format!(
            "vertex {v} has degree {}, expected valency s(2t+1)-1 = {k}",
            g.degree(v)
        )));
    }
    let local = local_graph(g, v)?;
    let degrees = local.graph.degrees();
    let center = (p.s * p.t + p.s) as i128 - 2;
    let sum: i128 = degrees.iter().map(|&d| d as i128).sum();
    let sum_of_squares: i128 = degrees.iter().map(|&d| (d as i128).pow(2)).sum();
    let centered_square_sum: i128 = degrees.iter().map(|&d| (d as i128 - center).pow(2)).sum();
    let (es, esq, ec) = local_valency_targets(p);
    Ok(LocalValencyStats {
        vertex: v,
        degrees,
        sum,
        sum_of_squares,
        centered_square_sum,
        sum_ok: sum == es,
        sum_of_squares_ok: sum_of_squares == esq,
        centered_ok: centered_square_sum == ec,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoffmanCliqueCheck {
    /// `|C| <= st + s`
    pub order_ok: bool,
    /// `|C| == st + s`
    pub equality_case: bool,
    /// In the equality case, every vertex outside `C` has exactly `s`
    /// neighbors in `C`. Vacuously true otherwise.
    pub outside_neighbor_counts_ok: bool,
}

pub fn hoffman_clique_check(g: &Graph, c: &VertexSet, p: ExtensionParams) -> Result<HoffmanCliqueCheck> {
    if let Some(&last) = c.as_slice().last() {
        g.check_vertex(last)?;
    }
    if let Some((u, v)) = g.clique_violation(c) {
        return Err(Error::precondition(format!("vertices {u} and {v} of the set are not adjacent")));
    }
    let bound = p.max_clique_order();
    let equality_case = c.len() == bound;
    let outside_neighbor_counts_ok = !equality_case || {
        let cb = c.to_bitset(g.order());
        (0..g.order())
            .filter(|&x| !cb.contains(x))
            .all(|x| g.row(x).intersection_count(&cb) == p.s as usize)
    };
    Ok(HoffmanCliqueCheck {
        order_ok: c.len() <= bound,
        equality_case,
        outside_neighbor_counts_ok,
    })
}

/// Exact independence number, as the clique number of the complement.
pub fn max_coclique_order(g: &Graph) -> Result<usize> {
    max_coclique_order_with_limit(g, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn max_coclique_order_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    if g.order() > limit {
        return Err(Error::ResourceLimit(format!(
            "exhaustive coclique search limited to {limit} vertices, graph has {}",
            g.order()
        )));
    }
    maximum_clique_order(&complement(g), limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_grid, build_shrikhande, clique_extension};

    fn params(s: u32, t: u32) -> ExtensionParams {
        ExtensionParams::new(s, t).unwrap()
    }

    fn ext(m: usize, s: usize) -> Graph {
        clique_extension(&build_grid(m).unwrap(), s).unwrap()
    }

    #[test]
    fn common_neighbor_counts() {
        let k4 = build_complete(4).unwrap();
        assert_eq!(common_neighbors(&k4, 0, 3).unwrap(), 2);
        let g = ext(3, 2);
        // (0,0) = 0 and (4,0) = 8 lie over non-adjacent grid vertices
        assert!(!g.adjacent(0, 8));
        assert_eq!(common_neighbors(&g, 0, 8).unwrap(), 4);
        let c4 = build_grid(2).unwrap();
        assert_eq!(common_neighbors(&c4, 0, 3).unwrap(), 2);
        assert!(common_neighbors(&c4, 1, 1).is_err());
        assert!(common_neighbors(&c4, 1, 4).is_err());
    }

    #[test]
    fn profiles() {
        let g4 = regularity_profile(&build_grid(4).unwrap());
        assert_eq!(g4.srg_params(), Some((16, 6, 2, 2)));
        let e = regularity_profile(&ext(3, 2));
        assert_eq!((e.k, e.mu, e.lambda), (Some(9), Some(4), None));
        assert!(e.is_co_edge_regular() && !e.is_strongly_regular());
        let p3 = regularity_profile(&Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(p3.k, None);
        assert_eq!(regularity_profile(&build_shrikhande()).srg_params(), Some((16, 6, 2, 2)));
        assert_eq!(regularity_profile(&build_grid(3).unwrap()).srg_params(), Some((9, 4, 1, 2)));
        assert!(!regularity_profile(&build_complete(5).unwrap()).is_strongly_regular());
    }

    #[test]
    fn local_identities_hold_on_extensions() {
        let g = ext(3, 2);
        for v in 0..g.order() {
            let st = local_valency_stats(&g, v, params(2, 2)).unwrap();
            assert_eq!((st.sum, st.sum_of_squares, st.centered_square_sum), (40, 192, 16));
            assert!(st.all_ok());
        }
        let g = ext(4, 2);
        let st = local_valency_stats(&g, 5, params(2, 3)).unwrap();
        assert_eq!(st.centered_square_sum, 36);
        assert!(st.all_ok());
        assert!(matches!(local_valency_stats(&g, 5, params(2, 2)), Err(Error::Precondition(m)) if m.contains('9')));
    }

    #[test]
    fn wrong_params_fail_some_identity() {
        // valency matches (13) but the local graph is K13
        let k14 = build_complete(14).unwrap();
        let st = local_valency_stats(&k14, 0, params(2, 3)).unwrap();
        assert!(!st.all_ok());
    }

    #[test]
    fn clique_bound_checks() {
        let g = ext(3, 2);
        let line = VertexSet::new([0, 1, 2, 3, 4, 5], 18).unwrap();
        let c = hoffman_clique_check(&g, &line, params(2, 2)).unwrap();
        assert!(c.order_ok && c.equality_case && c.outside_neighbor_counts_ok);
        let twins = VertexSet::new([0, 1], 18).unwrap();
        let c = hoffman_clique_check(&g, &twins, params(2, 2)).unwrap();
        assert!(c.order_ok && !c.equality_case);
        let k6 = build_complete(6).unwrap();
        let all = VertexSet::new(0..6, 6).unwrap();
        let c = hoffman_clique_check(&k6, &all, params(2, 2)).unwrap();
        assert!(c.equality_case && c.outside_neighbor_counts_ok);
        let bad = VertexSet::new([0, 8], 18).unwrap();
        assert!(matches!(hoffman_clique_check(&g, &bad, params(2, 2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn coclique_orders() {
        let g = ext(3, 2);
        let lg = local_graph(&g, 0).unwrap();
        assert_eq!(max_coclique_order(&lg.graph).unwrap(), 2);
        assert_eq!(max_coclique_order(&build_complete(6).unwrap()).unwrap(), 1);
        assert_eq!(max_coclique_order(&Graph::empty(5)).unwrap(), 5);
        assert!(matches!(max_coclique_order(&Graph::empty(65)), Err(Error::ResourceLimit(_))));
    }
}
