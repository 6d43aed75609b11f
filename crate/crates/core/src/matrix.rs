//! Dense square integer matrices with overflow-checked 128-bit arithmetic,
//! plus exact rank over the rationals.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn adjacency(g: &Graph) -> Self {
        let n = g.order();
        let mut m = Self::zeros(n);
        for u in 0..n {
            for &v in g.neighbors(u) {
                m.data[u * n + v] = 1;
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> Result<i128> {
        self.diagonal()
            .into_iter()
            .try_fold(0i128, |acc, d| acc.checked_add(d))
            .ok_or_else(|| Error::Overflow("trace".into()))
    }

    /// Row-parallel product; each entry is accumulated in a fixed order so the
    /// result does not depend on the thread count.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let rows: Vec<Option<Vec<i128>>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut out = vec![0i128; n];
                for (k, &a) in self.row(i).iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (o, &b) in out.iter_mut().zip(rhs.row(k)) {
                        *o = o.checked_add(a.checked_mul(b)?)?;
                    }
                }
                Some(out)
            })
            .collect();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            data.extend(r.ok_or_else(|| Error::Overflow("matrix product".into()))?);
        }
        Ok(IntMatrix { n, data })
    }

    /// `self + c * I`
    pub fn add_scalar_identity(&self, c: i128) -> Result<IntMatrix> {
        let mut m = self.clone();
        for i in 0..self.n {
            let d = &mut m.data[i * self.n + i];
            *d = d.checked_add(c).ok_or_else(|| Error::Overflow("diagonal shift".into()))?;
        }
        Ok(m)
    }

    /// `sum_i coeffs[i] * mats[i]`
    pub fn linear_combination(mats: &[(&IntMatrix, i128)]) -> Result<IntMatrix> {
        let n = mats.first().map_or(0, |(m, _)| m.n);
        let mut out = IntMatrix::zeros(n);
        for (m, c) in mats {
            assert_eq!(m.n, n, "dimension mismatch");
            for (o, &x) in out.data.iter_mut().zip(&m.data) {
                *o = c
                    .checked_mul(x)
                    .and_then(|y| o.checked_add(y))
                    .ok_or_else(|| Error::Overflow("linear combination".into()))?;
            }
        }
        Ok(out)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, i128)> {
        self.data
            .iter()
            .position(|&x| x != 0)
            .map(|p| (p / self.n, p % self.n, self.data[p]))
    }

    /// Rank over Q by fraction-free (Bareiss) elimination in arbitrary precision.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut rank = 0;
        let mut prev = BigInt::from(1);
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..n {
                if a[r][col].is_zero() {
                    // still needs the Bareiss scaling to keep later divisions exact
                    for c in col + 1..n {
                        a[r][c] = &a[r][c] * &a[rank][col] / &prev;
                    }
                    continue;
                }
                for c in col + 1..n {
                    let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                    debug_assert!((&v % &prev).is_zero());
                    a[r][c] = v / &prev;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_grid};

    #[test]
    fn powers_of_complete_graph() {
        let a = IntMatrix::adjacency(&build_complete(4).unwrap());
        let a2 = a.mul(&a).unwrap();
        assert_eq!(a2.diagonal(), vec![3; 4]);
        assert_eq!(a2.get(0, 1), 2);
        assert_eq!(a.trace().unwrap(), 0);
    }

    #[test]
    fn overflow_is_reported() {
        let mut m = IntMatrix::identity(2);
        m.data[0] = i128::MAX / 2 + 1;
        assert!(matches!(m.mul(&m), Err(Error::Overflow(_))));
    }

    #[test]
    fn rank_of_shifted_adjacency_gives_multiplicity() {
        // 4x4 grid: eigenvalue 2 has multiplicity 6, -2 has 9.
        let a = IntMatrix::adjacency(&build_grid(4).unwrap());
        assert_eq!(16 - a.add_scalar_identity(-2).unwrap().rank(), 6);
        assert_eq!(16 - a.add_scalar_identity(2).unwrap().rank(), 9);
        assert_eq!(16 - a.add_scalar_identity(-6).unwrap().rank(), 1);
        assert_eq!(a.add_scalar_identity(-1).unwrap().rank(), 16);
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(IntMatrix::zeros(3).rank(), 0);
        assert_eq!(IntMatrix::identity(5).rank(), 5);
        let m = IntMatrix { n: 3, data: vec![1, 2, 3, 2, 4, 6, 1, 0, 1] };
        assert_eq!(m.rank(), 2);
        let m = IntMatrix { n: 3, data: vec![0, 1, 0, 0, 0, 1, 0, 0, 0] };
        assert_eq!(m.rank(), 2);
    }
}
