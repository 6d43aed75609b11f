//! Backtracking isomorphism search for small graphs.

use crate::graph::{local_graph, Graph};

/// Per-vertex invariant: degree, sorted local degree sequence, and number of
/// components of the local graph.
fn vertex_invariant(g: &Graph, v: usize) -> (usize, Vec<usize>, usize) {
    let lg = local_graph(g, v).expect("vertex in range").graph;
    let mut degs = lg.degrees();
    degs.sort_unstable();
    (g.degree(v), degs, components(&lg))
}

fn components(g: &Graph) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Returns `map` with `g.adjacent(u, v) == h.adjacent(map[u], map[v])` for
/// all pairs, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return None;
    }
    let inv_g: Vec<_> = (0..n).map(|v| vertex_invariant(g, v)).collect();
    let inv_h: Vec<_> = (0..n).map(|v| vertex_invariant(h, v)).collect();
    {
        let (mut a, mut b) = (inv_g.clone(), inv_h.clone());
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }

    // BFS order so each new vertex has mapped neighbors to constrain it.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &inv_g, &inv_h, &order, 0, &mut map, &mut used).then_some(map)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    inv_g: &[(usize, Vec<usize>, usize)],
    inv_h: &[(usize, Vec<usize>, usize)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for cand in 0..h.order() {
        if used[cand] || inv_g[u] != inv_h[cand] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.adjacent(u, w) == h.adjacent(cand, map[w]));
        if !consistent {
            continue;
        }
        map[u] = cand;
        used[cand] = true;
        if extend(g, h, inv_g, inv_h, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[u] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_grid, build_shrikhande};

    #[test]
    fn cospectral_srgs_are_distinguished() {
        let g4 = build_grid(4).unwrap();
        let sh = build_shrikhande();
        assert!(!is_isomorphic(&g4, &sh));
        assert!(is_isomorphic(&sh, &sh));
        assert!(is_isomorphic(&g4, &g4));
    }

    #[test]
    fn relabelled_graph_maps_back() {
        let g = build_shrikhande();
        let perm: Vec<usize> = (0..16).map(|i| (i * 5 + 3) % 16).collect();
        let h = Graph::from_edges(16, g.edges().into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        let map = find_isomorphism(&g, &h).unwrap();
        for u in 0..16 {
            for v in 0..16 {
                assert_eq!(g.adjacent(u, v), h.adjacent(map[u], map[v]));
            }
        }
    }
}
