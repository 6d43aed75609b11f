//! Exact spectral certification.
//!
//! Nothing here touches floating point. A claimed integral spectrum is
//! certified by two checks on the adjacency matrix `A`: the product of
//! `A - θI` over the claimed eigenvalues must vanish, and the claimed
//! multiplicities must solve the power-sum system `Σ m_i θ_i^r = tr(A^r)`.
//! Since `A` is symmetric the two together pin the spectrum down exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ExtensionParams, Graph};
use crate::matrix::IntMatrix;

/// Integral spectrum: `(eigenvalue, multiplicity)` pairs, strictly
/// descending in eigenvalue, every multiplicity positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, u64)>", into = "Vec<(i64, u64)>")]
pub struct Spectrum {
    pairs: Vec<(i64, u64)>,
}

impl Spectrum {
    pub fn new(pairs: impl IntoIterator<Item = (i64, u64)>) -> Result<Self> {
        let mut pairs: Vec<(i64, u64)> = pairs.into_iter().collect();
        if let Some((theta, _)) = pairs.iter().find(|(_, m)| *m == 0) {
            return Err(Error::invalid(format!("eigenvalue {theta} has multiplicity 0")));
        }
        pairs.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::invalid(format!("eigenvalue {} listed twice", w[0].0)));
        }
        Ok(Spectrum { pairs })
    }

    /// Like [`Spectrum::new`] but merges repeated eigenvalues and drops zero
    /// multiplicities.
    fn merged(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut pairs: Vec<(i64, u64)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        pairs.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
        let mut out: Vec<(i64, u64)> = Vec::with_capacity(pairs.len());
        for (theta, m) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == theta => last.1 += m,
                _ => out.push((theta, m)),
            }
        }
        Spectrum { pairs: out }
    }

    pub fn pairs(&self) -> &[(i64, u64)] {
        &self.pairs
    }

    pub fn eigenvalues(&self) -> impl Iterator<Item = i64> + '_ {
        self.pairs.iter().map(|p| p.0)
    }

    pub fn distinct(&self) -> usize {
        self.pairs.len()
    }

    /// Total multiplicity, i.e. the order of the graph.
    pub fn total(&self) -> u64 {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn multiplicity(&self, theta: i64) -> u64 {
        self.pairs.iter().find(|p| p.0 == theta).map_or(0, |p| p.1)
    }

    /// `Σ m θ^r`
    pub fn power_sum(&self, r: u32) -> Option<i128> {
        self.pairs.iter().try_fold(0i128, |acc, &(theta, m)| {
            let term = (theta as i128).checked_pow(r)?.checked_mul(m as i128)?;
            acc.checked_add(term)
        })
    }
}

impl TryFrom<Vec<(i64, u64)>> for Spectrum {
    type Error = Error;

    fn try_from(pairs: Vec<(i64, u64)>) -> Result<Self> {
        Spectrum::new(pairs)
    }
}

impl From<Spectrum> for Vec<(i64, u64)> {
    fn from(s: Spectrum) -> Self {
        s.pairs
    }
}

/// One `theta multiplicity` line per eigenvalue, descending.
impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (theta, m) in &self.pairs {
            writeln!(f, "{theta} {m}")?;
        }
        Ok(())
    }
}

impl FromStr for Spectrum {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_ascii_whitespace().collect();
            let [theta, m] = fields[..] else {
                return Err(Error::invalid(format!("spectrum line {i}: expected `theta multiplicity`")));
            };
            let theta: i64 = match theta.parse() {
                Ok(v) => v,
                Err(_) if looks_numeric(theta) => {
                    return Err(Error::UnsupportedClaim(format!(
                        "spectrum line {i}: eigenvalue {theta} is not an integer; only integral spectra can be certified"
                    )))
                }
                Err(_) => return Err(Error::invalid(format!("spectrum line {i}: bad eigenvalue {theta:?}"))),
            };
            let m: u64 = m
                .parse()
                .map_err(|_| Error::invalid(format!("spectrum line {i}: bad multiplicity {m:?}")))?;
            pairs.push((theta, m));
        }
        Spectrum::new(pairs)
    }
}

fn looks_numeric(s: &str) -> bool {
    s.parse::<f64>().is_ok()
        || s.split_once('/')
            .is_some_and(|(a, b)| a.parse::<i64>().is_ok() && b.parse::<i64>().is_ok())
}

/// Spectrum of the `s`-clique extension of the `(t+1) x (t+1)` grid.
pub fn expected_spectrum(p: ExtensionParams) -> Result<Spectrum> {
    let p = ExtensionParams::new(p.s, p.t)?;
    let (s, t) = (p.s as i64, p.t as i64);
    Spectrum::new([
        (s * (2 * t + 1) - 1, 1),
        (s * t - 1, 2 * t as u64),
        (-1, ((s - 1) * (t + 1) * (t + 1)) as u64),
        (-s - 1, (t * t) as u64),
    ])
}

/// Spectrum of the `(t+1) x (t+1)` grid: `{(2t)^1, (t-1)^{2t}, (-2)^{t^2}}`.
pub fn grid_spectrum(t: u32) -> Result<Spectrum> {
    if t < 1 {
        return Err(Error::invalid("grid spectrum needs t >= 1"));
    }
    let t = t as i64;
    Spectrum::new([(2 * t, 1), (t - 1, 2 * t as u64), (-2, (t * t) as u64)])
}

/// Maps `θ^m` to `(s(θ+1)-1)^m` and adds `(-1)^{(s-1)n}`.
pub fn clique_extension_spectrum(base: &Spectrum, s: u32) -> Result<Spectrum> {
    if s == 0 {
        return Err(Error::invalid("clique extension needs s >= 1"));
    }
    let s = s as i64;
    let n = base.total();
    let mapped = base.pairs.iter().map(|&(theta, m)| (s * (theta + 1) - 1, m));
    Ok(Spectrum::merged(mapped.chain([(-1, (s as u64 - 1) * n)])))
}

/// Cached adjacency powers `A`, `A^2`, `A^3`.
#[derive(Clone, Debug)]
pub struct Powers {
    pub a: IntMatrix,
    pub a2: IntMatrix,
    pub a3: IntMatrix,
}

impl Powers {
    pub fn new(g: &Graph) -> Result<Self> {
        let a = IntMatrix::adjacency(g);
        let a2 = a.mul(&a)?;
        let a3 = a2.mul(&a)?;
        Ok(Powers { a, a2, a3 })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub value: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SpectrumWitness {
    /// Claimed multiplicities do not add up to the vertex count.
    OrderMismatch { claimed: u64, order: usize },
    /// `∏ (A - θ_i I)` has a nonzero entry.
    NonzeroAnnihilator { entry: MatrixEntry },
    /// `Σ m_i θ_i^r ≠ tr(A^r)` for this `r`.
    TraceMismatch { power: u32, claimed: i128, actual: i128 },
}

impl fmt::Display for SpectrumWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumWitness::OrderMismatch { claimed, order } => {
                write!(f, "multiplicities sum to {claimed}, graph has {order} vertices")
            }
            SpectrumWitness::NonzeroAnnihilator { entry } => write!(
                f,
                "annihilating product has entry {} at ({}, {})",
                entry.value, entry.row, entry.col
            ),
            SpectrumWitness::TraceMismatch { power, claimed, actual } => {
                write!(f, "trace of A^{power} is {actual}, claimed spectrum gives {claimed}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumCheck {
    pub holds: bool,
    pub witness: Option<SpectrumWitness>,
}

impl SpectrumCheck {
    fn fail(w: SpectrumWitness) -> Self {
        SpectrumCheck { holds: false, witness: Some(w) }
    }
}

/// Certifies that `g` has exactly the spectrum `claimed`.
pub fn verify_spectrum(g: &Graph, claimed: &Spectrum) -> Result<SpectrumCheck> {
    let n = g.order();
    if claimed.total() != n as u64 {
        return Ok(SpectrumCheck::fail(SpectrumWitness::OrderMismatch {
            claimed: claimed.total(),
            order: n,
        }));
    }
    let a = IntMatrix::adjacency(g);

    let mut prod = IntMatrix::identity(n);
    for theta in claimed.eigenvalues() {
        prod = prod.mul(&a.add_scalar_identity(-(theta as i128))?)?;
    }
    if let Some((row, col, value)) = prod.first_nonzero() {
        return Ok(SpectrumCheck::fail(SpectrumWitness::NonzeroAnnihilator {
            entry: MatrixEntry { row, col, value },
        }));
    }

    // The minimal polynomial divides ∏(x - θ_i), so the eigenvalues lie in the
    // claimed set; the power sums for r < d then fix the multiplicities.
    let d = claimed.distinct() as u32;
    let mut traces = Vec::with_capacity(d as usize);
    let mut power = IntMatrix::identity(n);
    for r in 0..d {
        if r > 0 {
            power = power.mul(&a)?;
        }
        traces.push(power.trace()?);
    }
    let thetas: Vec<i64> = claimed.eigenvalues().collect();
    let solved = solve_multiplicities(&thetas, &traces)?;
    let agrees = solved
        .iter()
        .zip(claimed.pairs())
        .all(|(m, &(_, cm))| *m == BigRational::from_integer(BigInt::from(cm)));
    if !agrees {
        for (r, &actual) in traces.iter().enumerate() {
            let r = r as u32;
            let claimed_sum = claimed
                .power_sum(r)
                .ok_or_else(|| Error::Overflow(format!("power sum of degree {r}")))?;
            if claimed_sum != actual {
                return Ok(SpectrumCheck::fail(SpectrumWitness::TraceMismatch {
                    power: r,
                    claimed: claimed_sum,
                    actual,
                }));
            }
        }
        unreachable!("Vandermonde system with distinct nodes has a unique solution");
    }
    Ok(SpectrumCheck { holds: true, witness: None })
}

/// Solves `Σ_i m_i θ_i^r = traces[r]`, `r = 0..d`, exactly over Q.
/// The `θ_i` must be distinct.
pub fn solve_multiplicities(thetas: &[i64], traces: &[i128]) -> Result<Vec<BigRational>> {
    let d = thetas.len();
    if traces.len() != d {
        return Err(Error::invalid(format!("{} traces for {d} eigenvalues", traces.len())));
    }
    let mut rows: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let mut row: Vec<BigRational> = thetas
                .iter()
                .map(|&th| BigRational::from_integer(BigInt::from(th).pow(r as u32)))
                .collect();
            row.push(BigRational::from_integer(BigInt::from(traces[r])));
            row
        })
        .collect();
    for col in 0..d {
        let p = (col..d)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or_else(|| Error::invalid("eigenvalues are not distinct"))?;
        rows.swap(col, p);
        let pivot = rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * y;
                }
            }
        }
    }
    Ok(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Recovers the spectrum of `g` if it is integral.
///
/// Every eigenvalue lies in `[-Δ, Δ]` (Δ the maximum degree). For each
/// integer there, the multiplicity is the nullity of `A - θI`, computed by
/// exact rank. If the nullities account for all `n` eigenvalues the result
/// is re-certified with [`verify_spectrum`]; otherwise `None`.
pub fn integral_spectrum(g: &Graph) -> Result<Option<Spectrum>> {
    let n = g.order();
    let max_deg = g.degrees().into_iter().max().unwrap_or(0) as i64;
    let a = IntMatrix::adjacency(g);
    let mut pairs = Vec::new();
    let mut found = 0usize;
    for theta in (-max_deg..=max_deg).rev() {
        let nullity = n - a.add_scalar_identity(-(theta as i128))?.rank();
        if nullity > 0 {
            pairs.push((theta, nullity as u64));
            found += nullity;
            if found == n {
                break;
            }
        }
    }
    if found < n {
        return Ok(None);
    }
    let spec = Spectrum::new(pairs)?;
    let check = verify_spectrum(g, &spec)?;
    assert!(check.holds, "rank-derived spectrum failed certification: {:?}", check.witness);
    Ok(Some(spec))
}

/// Coefficients of `A^3 + c2 A^2 + c1 A + c0 I = j J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoffmanCoefficients {
    pub c2: i128,
    pub c1: i128,
    pub c0: i128,
    pub j: i128,
}

impl HoffmanCoefficients {
    /// Closed forms for the `s`-clique extension of the `(t+1)`-grid.
    pub fn for_params(p: ExtensionParams) -> Self {
        let (s, t) = (p.s as i128, p.t as i128);
        HoffmanCoefficients {
            c2: 3 + s - s * t,
            c1: 3 + 2 * s - s * s * t - 2 * s * t,
            c0: 1 + s - s * s * t - s * t,
            j: 2 * s * s * (2 * t + 1),
        }
    }

    /// From a spectrum `{k, θ1, θ2, θ3}` of a connected `k`-regular graph on
    /// `n` vertices: elementary symmetric functions of the non-principal
    /// eigenvalues, and `∏(k - θ_i) / n` for the `J` coefficient.
    pub fn from_spectrum(spec: &Spectrum) -> Result<Self> {
        let [k, t1, t2, t3] = spec.eigenvalues().map(|x| x as i128).collect::<Vec<_>>()[..] else {
            return Err(Error::invalid("Hoffman identity needs exactly four distinct eigenvalues"));
        };
        if spec.multiplicity(k as i64) != 1 {
            return Err(Error::invalid("largest eigenvalue must be simple"));
        }
        let n = spec.total() as i128;
        let num = (k - t1) * (k - t2) * (k - t3);
        if num % n != 0 {
            return Err(Error::invalid(format!("∏(k - θ_i) = {num} is not divisible by n = {n}")));
        }
        Ok(HoffmanCoefficients {
            c2: -(t1 + t2 + t3),
            c1: t1 * t2 + t1 * t3 + t2 * t3,
            c0: -(t1 * t2 * t3),
            j: num / n,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoffmanCheck {
    pub holds: bool,
    pub coefficients: HoffmanCoefficients,
    /// Entry of `A^3 + c2 A^2 + c1 A + c0 I - j J` of largest magnitude
    /// (first in row-major order), when nonzero.
    pub max_deviation: Option<MatrixEntry>,
}

fn require_connected_regular(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::precondition("graph has no vertices"));
    }
    let k = g
        .regular_degree()
        .ok_or_else(|| Error::precondition("graph is not regular"))?;
    if !g.is_connected() {
        return Err(Error::precondition("graph is not connected"));
    }
    Ok(k)
}

pub fn verify_hoffman_identity(g: &Graph, p: ExtensionParams) -> Result<HoffmanCheck> {
    require_connected_regular(g)?;
    Ok(hoffman_with_powers(&Powers::new(g)?, HoffmanCoefficients::for_params(p)))
}

pub(crate) fn hoffman_with_powers(pw: &Powers, c: HoffmanCoefficients) -> HoffmanCheck {
    let n = pw.a.dim();
    let mut worst: Option<MatrixEntry> = None;
    for i in 0..n {
        for j in 0..n {
            let lhs = pw.a3.get(i, j) + c.c2 * pw.a2.get(i, j) + c.c1 * pw.a.get(i, j) + if i == j { c.c0 } else { 0 };
            let dev = lhs - c.j;
            if dev != 0 && worst.as_ref().is_none_or(|w| dev.abs() > w.value.abs()) {
                worst = Some(MatrixEntry { row: i, col: j, value: dev });
            }
        }
    }
    HoffmanCheck {
        holds: worst.is_none(),
        coefficients: c,
        max_deviation: worst,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkRegularity {
    pub holds: bool,
    /// `(r, common diagonal of A^r)`; `None` where the diagonal varies.
    pub diagonals: Vec<(u32, Option<i128>)>,
}

impl WalkRegularity {
    pub fn diagonal(&self, r: u32) -> Option<i128> {
        self.diagonals.iter().find(|d| d.0 == r).and_then(|d| d.1)
    }
}

/// Checks that `A^r` has constant diagonal for `2 <= r <= r_max`.
pub fn verify_walk_regularity(g: &Graph, r_max: u32) -> Result<WalkRegularity> {
    if r_max < 2 {
        return Err(Error::invalid(format!("r_max must be at least 2, got {r_max}")));
    }
    let a = IntMatrix::adjacency(g);
    let mut power = a.clone();
    let mut diagonals = Vec::new();
    for r in 2..=r_max {
        power = power.mul(&a)?;
        diagonals.push((r, constant(&power.diagonal())));
    }
    Ok(WalkRegularity {
        holds: diagonals.iter().all(|d| d.1.is_some()),
        diagonals,
    })
}

fn constant(values: &[i128]) -> Option<i128> {
    let first = *values.first()?;
    values.iter().all(|&v| v == first).then_some(first)
}

/// `value = constant + slope * count`, where `count` is `λ_{x,y}` or `μ_{x,y}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineRule {
    pub constant: i128,
    pub slope: i128,
}

impl AffineRule {
    pub fn apply(&self, count: i128) -> i128 {
        self.constant + self.slope * count
    }
}

/// Closed forms for `A^3` entries on the diagonal, on edges (in terms of
/// `λ_{x,y}`) and on non-edges (in terms of `μ_{x,y}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A3Classification {
    pub diag_value: i128,
    pub edge_rule: AffineRule,
    pub nonedge_rule: AffineRule,
}

impl A3Classification {
    pub fn for_params(p: ExtensionParams) -> Self {
        let (s, t) = (p.s as i128, p.t as i128);
        let slope = -(3 + s - s * t);
        A3Classification {
            diag_value: 2 * s * s * t * t + 4 * s * s * t - 6 * s * t + s * s - 3 * s + 2,
            edge_rule: AffineRule {
                constant: 5 * s * s * t + 2 * s * t + 2 * s * s - 2 * s - 3,
                slope,
            },
            nonedge_rule: AffineRule {
                constant: 4 * s * s * t + 2 * s * s,
                slope,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    Diagonal,
    Edge,
    NonEdge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A3Violation {
    pub row: usize,
    pub col: usize,
    pub kind: PairKind,
    pub expected: i128,
    pub actual: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A3Check {
    pub holds: bool,
    pub classification: A3Classification,
    pub first_violation: Option<A3Violation>,
}

/// Checks every entry of `A^3` against the closed forms. Refuses unless the
/// spectrum of `g` is certified equal to the expected one first.
pub fn verify_a3_classification(g: &Graph, p: ExtensionParams) -> Result<A3Check> {
    let spec = verify_spectrum(g, &expected_spectrum(p)?)?;
    if !spec.holds {
        return Err(Error::precondition(format!(
            "spectrum differs from the {p} extension spectrum: {}",
            spec.witness.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    Ok(a3_with_powers(&Powers::new(g)?, p))
}

pub(crate) fn a3_with_powers(pw: &Powers, p: ExtensionParams) -> A3Check {
    let cls = A3Classification::for_params(p);
    let n = pw.a.dim();
    for x in 0..n {
        for y in 0..n {
            let (kind, expected) = if x == y {
                (PairKind::Diagonal, cls.diag_value)
            } else if pw.a.get(x, y) == 1 {
                (PairKind::Edge, cls.edge_rule.apply(pw.a2.get(x, y)))
            } else {
                (PairKind::NonEdge, cls.nonedge_rule.apply(pw.a2.get(x, y)))
            };
            let actual = pw.a3.get(x, y);
            if actual != expected {
                return A3Check {
                    holds: false,
                    classification: cls,
                    first_violation: Some(A3Violation { row: x, col: y, kind, expected, actual }),
                };
            }
        }
    }
    A3Check {
        holds: true,
        classification: cls,
        first_violation: None,
    }
}
