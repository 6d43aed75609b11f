//! Bron–Kerbosch enumeration with pivoting, and the branch-and-bound variant
//! for maximum clique order.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default cap on the number of maximal cliques reported.
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// Default vertex limit for exhaustive maximum-clique search.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueConfig {
    pub cap: usize,
}

impl Default for CliqueConfig {
    fn default() -> Self {
        CliqueConfig { cap: DEFAULT_CLIQUE_CAP }
    }
}

/// Pivot from `P ∪ X` maximizing `|P ∩ N(u)|`, ties to the lowest index.
fn choose_pivot(g: &Graph, p: &Bitset, x: &Bitset) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for u in p.union(x).iter() {
        let c = p.intersection_count(g.row(u));
        if best.is_none_or(|(_, bc)| c > bc) {
            best = Some((u, c));
        }
    }
    best.map(|b| b.0)
}

/// All maximal cliques, each sorted, the list sorted lexicographically.
pub fn maximal_cliques(g: &Graph, cfg: CliqueConfig) -> Result<Vec<VertexSet>> {
    let n = g.order();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut r = Vec::new();
    expand(g, &mut r, Bitset::full(n), Bitset::new(n), &mut out, cfg.cap)?;
    out.sort_unstable();
    Ok(out)
}

fn expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Bitset,
    mut x: Bitset,
    out: &mut Vec<VertexSet>,
    cap: usize,
) -> Result<()> {
    let Some(pivot) = choose_pivot(g, &p, &x) else {
        if out.len() >= cap {
            return Err(Error::ResourceLimit(format!("more than {cap} maximal cliques")));
        }
        let mut c = r.clone();
        c.sort_unstable();
        out.push(VertexSet::from_sorted(c));
        return Ok(());
    };
    for v in p.difference(g.row(pivot)).iter() {
        r.push(v);
        expand(g, r, p.intersection(g.row(v)), x.intersection(g.row(v)), out, cap)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Order of a largest clique, found by the pivoting search with the bound
/// `|R| + |P| <= best` pruning branches.
pub fn maximum_clique_order(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.order();
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "exhaustive clique search limited to {limit} vertices, graph has {n}"
        )));
    }
    let mut best = 0;
    if n > 0 {
        bound(g, 0, Bitset::full(n), Bitset::new(n), &mut best);
    }
    Ok(best)
}

fn bound(g: &Graph, depth: usize, mut p: Bitset, mut x: Bitset, best: &mut usize) {
    if depth + p.count() <= *best {
        return;
    }
    let Some(pivot) = choose_pivot(g, &p, &x) else {
        *best = depth;
        return;
    };
    for v in p.difference(g.row(pivot)).iter() {
        bound(g, depth + 1, p.intersection(g.row(v)), x.intersection(g.row(v)), best);
        p.remove(v);
        x.insert(v);
        if depth + p.count() <= *best {
            return;
        }
    }
}
