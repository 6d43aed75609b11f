//! Immutable simple graphs and the named constructions used throughout the crate.

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// Largest vertex count accepted for dense bitrow storage.
pub const MAX_DENSE_VERTICES: usize = 1 << 16;

/// Undirected simple graph on `0..n`, stored as adjacency bitrows plus
/// sorted neighbor lists. Never mutated after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<Bitset>,
    neighbors: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_DENSE_VERTICES {
            return Err(Error::ResourceLimit(format!(
                "{n} vertices exceeds dense storage limit {MAX_DENSE_VERTICES}"
            )));
        }
        let mut rows = vec![Bitset::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if rows[u].contains(v) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    /// `rows` must be symmetric with an empty diagonal.
    pub(crate) fn from_rows(rows: Vec<Bitset>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(i, r)| !r.contains(i)));
        let neighbors = rows.iter().map(|r| r.iter().collect()).collect();
        Graph { rows, neighbors }
    }

    /// Builds from an adjacency predicate evaluated on every pair `u < v`.
    pub(crate) fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut rows = vec![Bitset::new(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Self::from_rows(rows)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![Bitset::new(n); n])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| self.neighbors[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Common valency, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.neighbors.first().map(Vec::len)?;
        self.neighbors.iter().all(|nb| nb.len() == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = Bitset::new(n);
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for &v in &self.neighbors[u] {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.count() == n
    }

    pub fn is_clique(&self, vs: &VertexSet) -> bool {
        self.clique_violation(vs).is_none()
    }

    /// First non-adjacent pair inside `vs`, if any.
    pub fn clique_violation(&self, vs: &VertexSet) -> Option<(usize, usize)> {
        let s = vs.as_slice();
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                if !self.adjacent(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::invalid(format!("vertex {v} out of range for n = {}", self.order())))
        } else {
            Ok(())
        }
    }
}

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Validates against a graph order `n`.
    pub fn new(vertices: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate vertex {} in set", w[0])));
        }
        if let Some(&last) = v.last() {
            if last >= n {
                return Err(Error::invalid(format!("vertex {last} out of range for n = {n}")));
            }
        }
        Ok(VertexSet(v))
    }

    /// Caller guarantees sorted and unique.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn from_bitset(b: &Bitset) -> Self {
        VertexSet(b.iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn to_bitset(&self, n: usize) -> Bitset {
        Bitset::from_indices(n, self.iter())
    }
}

/// The pair `(s, t)`: clique size and grid parameter. The target graph is the
/// `s`-clique extension of the `(t+1) x (t+1)` grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtensionParams {
    pub s: u32,
    pub t: u32,
}

impl ExtensionParams {
    pub fn new(s: u32, t: u32) -> Result<Self> {
        if s < 2 {
            return Err(Error::invalid(format!("s must be at least 2, got {s}")));
        }
        if t < 1 {
            return Err(Error::invalid(format!("t must be at least 1, got {t}")));
        }
        Ok(ExtensionParams { s, t })
    }

    /// `s(2t+1) - 1`
    pub fn valency(&self) -> i64 {
        let (s, t) = (self.s as i64, self.t as i64);
        s * (2 * t + 1) - 1
    }

    /// `s(t+1)^2`
    pub fn vertex_count(&self) -> usize {
        let (s, t) = (self.s as usize, self.t as usize);
        s * (t + 1) * (t + 1)
    }

    /// `s(t+1)`, the largest clique order.
    pub fn max_clique_order(&self) -> usize {
        (self.s * (self.t + 1)) as usize
    }

    /// Whether `t` lies below `11(s+1)^3(s+2)`, where the structural
    /// conclusions are observed rather than guaranteed.
    pub fn below_bound(&self) -> bool {
        let s = self.s as u128;
        (self.t as u128) < 11 * (s + 1).pow(3) * (s + 2)
    }
}

impl std::fmt::Display for ExtensionParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(s={}, t={})", self.s, self.t)
    }
}

/// Complete graph `K_m`.
pub fn build_complete(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    Ok(Graph::from_fn(m, |_, _| true))
}

/// Cartesian product; vertex `(u, v)` has index `u * h.order() + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    if ng == 0 || nh == 0 {
        return Err(Error::invalid("cartesian product of an empty graph"));
    }
    if ng.checked_mul(nh).is_none_or(|n| n > MAX_DENSE_VERTICES) {
        return Err(Error::ResourceLimit(format!("product of {ng} x {nh} vertices is too large")));
    }
    Ok(Graph::from_fn(ng * nh, |a, b| {
        let (u, v) = (a / nh, a % nh);
        let (u2, v2) = (b / nh, b % nh);
        (u == u2 && h.adjacent(v, v2)) || (v == v2 && g.adjacent(u, u2))
    }))
}

/// The `m x m` grid (rook's graph) `K_m □ K_m`.
pub fn build_grid(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::invalid(format!("grid side must be at least 2, got {m}")));
    }
    let k = build_complete(m)?;
    cartesian_product(&k, &k)
}

/// Replaces every vertex `x` by an `s`-clique `{(x, i)}`; vertex `(x, i)` has
/// index `x * s + i`, so the adjacency matrix is `(A + I) ⊗ J_s - I`, a
/// simultaneous row/column permutation of `J_s ⊗ (A + I) - I`.
pub fn clique_extension(g: &Graph, s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::invalid("clique extension needs s >= 1"));
    }
    let n = g.order();
    if n.checked_mul(s).is_none_or(|sn| sn > MAX_DENSE_VERTICES) {
        return Err(Error::ResourceLimit(format!("extension of {n} vertices by {s} is too large")));
    }
    Ok(Graph::from_fn(n * s, |a, b| {
        let (x, y) = (a / s, b / s);
        x == y || g.adjacent(x, y)
    }))
}

/// Cayley graph on Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1).
/// Vertex `(a, b)` has index `4a + b`.
pub fn build_shrikhande() -> Graph {
    const GENS: [(usize, usize); 6] = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    Graph::from_fn(16, |u, v| {
        let d = ((v / 4 + 4 - u / 4) % 4, (v % 4 + 4 - u % 4) % 4);
        GENS.contains(&d)
    })
}

pub fn complement(g: &Graph) -> Graph {
    let rows = g
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut c = r.complement();
            c.remove(i);
            c
        })
        .collect();
    Graph::from_rows(rows)
}

/// Subgraph induced on `vs`, with the vertices relabelled `0..vs.len()` in
/// ascending order of their original index.
pub fn induced_subgraph(g: &Graph, vs: &VertexSet) -> Result<Graph> {
    if let Some(last) = vs.as_slice().last() {
        g.check_vertex(*last)?;
    }
    let s = vs.as_slice();
    Ok(Graph::from_fn(s.len(), |i, j| g.adjacent(s[i], s[j])))
}

/// Local graph at a vertex together with the map back to the parent graph.
#[derive(Clone, Debug)]
pub struct LocalGraph {
    pub center: usize,
    pub graph: Graph,
    /// `to_parent[i]` is the parent index of local vertex `i`.
    pub to_parent: Vec<usize>,
}

pub fn local_graph(g: &Graph, v: usize) -> Result<LocalGraph> {
    g.check_vertex(v)?;
    let nb = VertexSet::from_sorted(g.neighbors(v).to_vec());
    Ok(LocalGraph {
        center: v,
        graph: induced_subgraph(g, &nb)?,
        to_parent: nb.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        let k1 = build_complete(1).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k4 = build_complete(4).unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
        assert_eq!(k4.regular_degree(), Some(3));
        assert!(build_complete(0).is_err());
    }

    #[test]
    fn small_products_and_grids() {
        let k2 = build_complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((c4.order(), c4.size(), c4.regular_degree()), (4, 4, Some(2)));
        assert_eq!(build_grid(2).unwrap(), c4);
        let g4 = build_grid(4).unwrap();
        assert_eq!((g4.order(), g4.size()), (16, 48));
        assert!(build_grid(1).is_err());
        // (1, 2) ~ (1, 0) and (3, 2), not (0, 0)
        let g3 = build_grid(3).unwrap();
        assert!(g3.adjacent(5, 3) && g3.adjacent(5, 2) && !g3.adjacent(5, 0));
    }

    #[test]
    fn extension_shapes() {
        let c4 = build_grid(2).unwrap();
        assert_eq!(clique_extension(&c4, 1).unwrap(), c4);
        let ext = clique_extension(&build_grid(3).unwrap(), 2).unwrap();
        assert_eq!((ext.order(), ext.regular_degree()), (18, Some(9)));
        let k6 = clique_extension(&build_complete(2).unwrap(), 3).unwrap();
        assert_eq!(k6, build_complete(6).unwrap());
        assert!(clique_extension(&c4, 0).is_err());
    }

    #[test]
    fn shrikhande_is_six_regular() {
        let g = build_shrikhande();
        assert_eq!((g.order(), g.size(), g.regular_degree()), (16, 48, Some(6)));
    }

    #[test]
    fn complement_and_local_graphs() {
        let k4 = build_complete(4).unwrap();
        assert_eq!(complement(&k4).size(), 0);
        let g3 = build_grid(3).unwrap();
        for v in 0..9 {
            let lg = local_graph(&g3, v).unwrap();
            assert_eq!((lg.graph.order(), lg.graph.size(), lg.graph.regular_degree()), (4, 2, Some(1)));
        }
        let ext = clique_extension(&g3, 2).unwrap();
        let lg = local_graph(&ext, 7).unwrap();
        assert_eq!((lg.graph.order(), lg.graph.size()), (9, 20));
        assert_eq!(lg.to_parent, ext.neighbors(7));
        assert!(local_graph(&ext, 18).is_err());
    }

    #[test]
    fn vertex_set_validation() {
        assert!(VertexSet::new([3, 1, 3], 5).is_err());
        assert!(VertexSet::new([0, 5], 5).is_err());
        assert_eq!(VertexSet::new([4, 0, 2], 5).unwrap().as_slice(), &[0, 2, 4]);
        let g = build_complete(3).unwrap();
        assert!(induced_subgraph(&g, &VertexSet::new([0, 2], 3).unwrap()).unwrap().size() == 1);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn below_bound_threshold() {
        let p = ExtensionParams::new(2, 2).unwrap();
        assert!(p.below_bound());
        // 11 * 27 * 4 = 1188
        assert!(ExtensionParams::new(2, 1187).unwrap().below_bound());
        assert!(!ExtensionParams::new(2, 1188).unwrap().below_bound());
        assert!(ExtensionParams::new(1, 2).is_err());
        assert!(ExtensionParams::new(2, 0).is_err());
    }
}
