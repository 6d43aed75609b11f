#![allow(dead_code)]

use gridspectra::{build_grid, clique_extension, ExtensionParams, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameter set exercised by the acceptance criteria.
pub const PARAMS: [(u32, u32); 6] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)];

pub fn params(s: u32, t: u32) -> ExtensionParams {
    ExtensionParams::new(s, t).unwrap()
}

pub fn grid_extension(s: u32, t: u32) -> Graph {
    clique_extension(&build_grid(t as usize + 1).unwrap(), s as usize).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn is_clique_mask(g: &Graph, mask: u32) -> bool {
    let vs: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&w| g.adjacent(u, w)))
}

/// Every vertex subset checked for being a clique no vertex can extend.
pub fn brute_force_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if !is_clique_mask(g, mask) {
            continue;
        }
        let extendable = (0..n).any(|v| mask >> v & 1 == 0 && is_clique_mask(g, mask | 1 << v));
        if !extendable {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// Largest vertex subset with no internal edge.
pub fn brute_force_independence_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| g.neighbors(v).iter().all(|&w| mask >> w & 1 == 0));
        if independent {
            best = size;
        }
    }
    best
}

/// Test-only graph6 encoder (n < 63), written straight from the format
/// description: N(n) then the upper triangle column by column, 6 bits per byte.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adjacent(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = vec![(n as u8) + 63];
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push(v + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Dense 0/1 matrix of a graph.
pub fn dense(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.adjacent(u, v) as i64).collect())
        .collect()
}

/// Kronecker product `a ⊗ b`: entry `(i*p + k, j*q + l) = a[i][j] * b[k][l]`.
pub fn kronecker(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (m, p) = (a.len(), b.len());
    let mut out = vec![vec![0; m * p]; m * p];
    for i in 0..m {
        for j in 0..m {
            for k in 0..p {
                for l in 0..p {
                    out[i * p + k][j * p + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn naive_matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}
