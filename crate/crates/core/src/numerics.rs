//! Frobenius-Perron dimensions, type signatures, recognition of the exact
//! values that occur for rank-2 extensions, and the cosine-square solver.

use std::f64::consts::PI;
use std::fmt;

use thiserror::Error;

use crate::ring::FusionRing;

/// Tolerance used whenever two dimensions are compared or grouped.
pub const DIM_TOLERANCE: f64 = 1e-9;

const POWER_TOLERANCE: f64 = 1e-13;
const POWER_MAX_ITERATIONS: usize = 10_000;
const COS_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("power iteration for basis element {index} did not converge in {iterations} steps")]
    NoConvergence { index: usize, iterations: usize },
    #[error("unsupported number of terms {0}; expected 2 or 3")]
    UnsupportedTermCount(usize),
    #[error("search bound {0} is below the minimum of 10")]
    BoundTooSmall(u32),
}

/// Closed forms recognised in computed dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExactValue {
    Integer(u32),
    /// `√m` for a non-square `m`.
    Sqrt(u32),
    /// `(1 + √5) / 2`
    Golden,
    /// `2 cos(π / k)`
    TwoCos(u32),
}

impl ExactValue {
    pub fn value(self) -> f64 {
        match self {
            ExactValue::Integer(m) => m as f64,
            ExactValue::Sqrt(m) => (m as f64).sqrt(),
            ExactValue::Golden => (1.0 + 5f64.sqrt()) / 2.0,
            ExactValue::TwoCos(k) => 2.0 * (PI / k as f64).cos(),
        }
    }

    /// Best-effort match of `x` against integers ≤ 64, the golden ratio,
    /// `√m` for `m ≤ 64` and `2cos(π/k)` for `k ≤ 30`, in that order.
    pub fn recognize(x: f64) -> Option<ExactValue> {
        let close = |v: f64| (x - v).abs() <= DIM_TOLERANCE;
        if let Some(m) = (0..=64u32).find(|&m| close(m as f64)) {
            return Some(ExactValue::Integer(m));
        }
        if close(ExactValue::Golden.value()) {
            return Some(ExactValue::Golden);
        }
        if let Some(m) = (2..=64u32).find(|&m| close((m as f64).sqrt())) {
            return Some(ExactValue::Sqrt(m));
        }
        (3..=30u32)
            .find(|&k| close(ExactValue::TwoCos(k).value()))
            .map(ExactValue::TwoCos)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Integer(m) => write!(f, "{m}"),
            ExactValue::Sqrt(m) => write!(f, "sqrt({m})"),
            ExactValue::Golden => f.write_str("(1+sqrt(5))/2"),
            ExactValue::TwoCos(k) => write!(f, "2cos(pi/{k})"),
        }
    }
}

/// Rounds to 12 significant digits, the precision used in reports.
pub fn round_significant(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Renders a dimension as its closed form when recognised, else numerically.
pub fn format_dimension(x: f64, exact: Option<ExactValue>) -> String {
    match exact {
        Some(e) => e.to_string(),
        None => round_significant(x).to_string(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FPData {
    pub dims: Vec<f64>,
    /// Σ dims²
    pub total: f64,
    pub recognized: Vec<Option<ExactValue>>,
}

impl FPData {
    /// Largest `|d_i d_j − Σ_k n[i][j][k] d_k|`.
    pub fn consistency_residual(&self, ring: &FusionRing) -> f64 {
        let r = ring.rank();
        let mut worst: f64 = 0.0;
        for i in 0..r {
            for j in 0..r {
                let rhs: f64 = ring
                    .product_row(i, j)
                    .iter()
                    .zip(&self.dims)
                    .map(|(&m, &d)| m as f64 * d)
                    .sum();
                worst = worst.max((self.dims[i] * self.dims[j] - rhs).abs());
            }
        }
        worst
    }
}

/// Perron eigenvalue of the left-multiplication matrix `M[k][j] = n[i][j][k]`.
///
/// Iterates on `M + I`: adding the identity leaves the Perron vector alone
/// and makes the Perron root strictly dominant in modulus, which plain power
/// iteration needs when `M` is periodic (e.g. `X` in the Ising ring).
fn perron_root(ring: &FusionRing, i: usize) -> Result<f64, NumericsError> {
    let r = ring.rank();
    let apply = |v: &[f64], out: &mut [f64]| {
        out.copy_from_slice(v);
        for (j, &vj) in v.iter().enumerate() {
            if vj == 0.0 {
                continue;
            }
            for (k, &m) in ring.product_row(i, j).iter().enumerate() {
                if m > 0 {
                    out[k] += m as f64 * vj;
                }
            }
        }
    };
    let mut v = vec![1.0; r];
    let mut w = vec![0.0; r];
    let mut previous = f64::NAN;
    for _ in 0..POWER_MAX_ITERATIONS {
        apply(&v, &mut w);
        let vw: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        let vv: f64 = v.iter().map(|a| a * a).sum();
        let lambda = vw / vv - 1.0;
        let scale = w.iter().cloned().fold(0.0, f64::max);
        if scale <= 0.0 {
            break;
        }
        let residual = v
            .iter()
            .zip(&w)
            .map(|(a, b)| (b - (lambda + 1.0) * a).abs())
            .fold(0.0, f64::max)
            / v.iter().cloned().fold(0.0, f64::max);
        if (lambda - previous).abs() <= POWER_TOLERANCE * lambda.abs().max(1.0)
            && residual <= 1e-9 * (lambda + 1.0)
        {
            return Ok(lambda);
        }
        previous = lambda;
        for (a, b) in v.iter_mut().zip(&w) {
            *a = b / scale;
        }
    }
    Err(NumericsError::NoConvergence {
        index: i,
        iterations: POWER_MAX_ITERATIONS,
    })
}

pub fn fp_dimensions(ring: &FusionRing) -> Result<FPData, NumericsError> {
    let dims = (0..ring.rank())
        .map(|i| perron_root(ring, i))
        .collect::<Result<Vec<f64>, _>>()?;
    let total = dims.iter().map(|d| d * d).sum();
    let recognized = dims.iter().map(|&d| ExactValue::recognize(d)).collect();
    Ok(FPData {
        dims,
        total,
        recognized,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeEntry {
    pub dimension: f64,
    pub multiplicity: usize,
    pub exact: Option<ExactValue>,
}

/// Sorted `(dimension, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeSignature {
    pub entries: Vec<TypeEntry>,
}

impl TypeSignature {
    pub fn from_dims(dims: &[f64]) -> Self {
        let mut sorted = dims.to_vec();
        sorted.sort_by(|a, b| a.total_cmp(b));
        let mut entries: Vec<TypeEntry> = Vec::new();
        let mut anchor = f64::NEG_INFINITY;
        for d in sorted {
            match entries.last_mut() {
                Some(e) if d - anchor <= DIM_TOLERANCE => e.multiplicity += 1,
                _ => {
                    anchor = d;
                    entries.push(TypeEntry {
                        dimension: d,
                        multiplicity: 1,
                        exact: ExactValue::recognize(d),
                    });
                }
            }
        }
        TypeSignature { entries }
    }

    /// Compares with `(dimension, multiplicity)` pairs at [`DIM_TOLERANCE`].
    pub fn matches(&self, expected: &[(f64, usize)]) -> bool {
        self.entries.len() == expected.len()
            && self
                .entries
                .iter()
                .zip(expected)
                .all(|(e, &(d, m))| (e.dimension - d).abs() <= DIM_TOLERANCE && e.multiplicity == m)
    }

    pub fn rank(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }
}

impl fmt::Display for TypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{},{}", format_dimension(e.dimension, e.exact), e.multiplicity))
            .collect();
        write!(f, "({})", parts.join("; "))
    }
}

pub fn type_signature(ring: &FusionRing) -> Result<TypeSignature, NumericsError> {
    Ok(TypeSignature::from_dims(&fp_dimensions(ring)?.dims))
}

/// Right-hand side of `Σ cos²(π/x_i) = target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosTarget {
    /// `cos²(π/k)`; `k = 10` gives `(5+√5)/8`.
    CosSquaredPiOver(u32),
    Rational { num: u32, den: u32 },
}

impl CosTarget {
    /// `(5 + √5) / 8`
    pub const GOLDEN: CosTarget = CosTarget::CosSquaredPiOver(10);

    pub fn value(self) -> f64 {
        match self {
            CosTarget::CosSquaredPiOver(k) => cos_squared(k),
            CosTarget::Rational { num, den } => num as f64 / den as f64,
        }
    }
}

impl fmt::Display for CosTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosTarget::CosSquaredPiOver(10) => f.write_str("(5+sqrt(5))/8"),
            CosTarget::CosSquaredPiOver(k) => write!(f, "cos^2(pi/{k})"),
            CosTarget::Rational { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

/// `cos²(π/x)`, increasing in `x ≥ 3`.
pub fn cos_squared(x: u32) -> f64 {
    let c = (PI / x as f64).cos();
    c * c
}

/// All nondecreasing integer tuples in `[3, bound]` of length `terms`
/// whose cosine squares sum to `target` within 1e-12.
///
/// Because every term is at least `cos²(π/3) = 1/4` and `cos²(π/x)` is
/// increasing, a branch stops as soon as the smallest possible completion
/// overshoots the target; the scan never reaches large `x`.
pub fn solve_cos_equation(
    terms: usize,
    target: CosTarget,
    bound: u32,
) -> Result<Vec<Vec<u32>>, NumericsError> {
    if !(2..=3).contains(&terms) {
        return Err(NumericsError::UnsupportedTermCount(terms));
    }
    if bound < 10 {
        return Err(NumericsError::BoundTooSmall(bound));
    }
    let goal = target.value();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(terms);
    search_cos(terms, goal, bound, 3, 0.0, &mut prefix, &mut out);
    Ok(out)
}

fn search_cos(
    remaining: usize,
    goal: f64,
    bound: u32,
    start: u32,
    sum: f64,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    for x in start..=bound {
        let f = cos_squared(x);
        // Remaining terms are all ≥ f because tuples are nondecreasing.
        if sum + remaining as f64 * f > goal + COS_TOLERANCE {
            break;
        }
        prefix.push(x);
        if remaining == 1 {
            if (sum + f - goal).abs() <= COS_TOLERANCE {
                out.push(prefix.clone());
            }
        } else {
            search_cos(remaining - 1, goal, bound, x, sum + f, prefix, out);
        }
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupSpec};

    const PHI: f64 = 1.618_033_988_749_895;

    #[test]
    fn ising_dimensions() {
        let fp = fp_dimensions(&catalog::ising()).unwrap();
        assert!((fp.dims[2] - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(fp.recognized[2], Some(ExactValue::Sqrt(2)));
        assert!((fp.total - 4.0).abs() < 1e-12);
        assert_eq!(fp.dims[0], 1.0);
    }

    #[test]
    fn yang_lee_dimension_is_golden() {
        let fp = fp_dimensions(&catalog::yang_lee()).unwrap();
        assert!((fp.dims[1] - PHI).abs() < 1e-12);
        assert_eq!(fp.recognized[1], Some(ExactValue::Golden));
    }

    #[test]
    fn type_signatures() {
        let ising = type_signature(&catalog::ising()).unwrap();
        assert!(ising.matches(&[(1.0, 2), (2f64.sqrt(), 1)]));
        assert_eq!(ising.to_string(), "(1,2; sqrt(2),1)");

        let ext = type_signature(&catalog::yl_extension(&GroupSpec::Cyclic(3).group())).unwrap();
        assert!(ext.matches(&[(1.0, 3), (PHI, 3)]));
        assert_eq!(ext.to_string(), "(1,3; (1+sqrt(5))/2,3)");

        let z2 = type_signature(&catalog::pointed(&GroupSpec::Cyclic(2).group())).unwrap();
        assert_eq!(z2.to_string(), "(1,2)");
    }

    #[test]
    fn recognition_candidates() {
        assert_eq!(ExactValue::recognize(3.0), Some(ExactValue::Integer(3)));
        assert_eq!(ExactValue::recognize(3f64.sqrt()), Some(ExactValue::Sqrt(3)));
        assert_eq!(
            ExactValue::recognize(2.0 * (PI / 7.0).cos()),
            Some(ExactValue::TwoCos(7))
        );
        assert_eq!(ExactValue::recognize(1.0 + 1e-6), None);
    }

    #[test]
    fn periodic_left_multiplication_converges() {
        // M_X of Ising has eigenvalues ±√2; unshifted power iteration stalls.
        let r = catalog::ising();
        assert!((perron_root(&r, 2).unwrap() - 2f64.sqrt()).abs() < 1e-12);
    }

    /// Exhaustive scan over the full box `[3, bound]^terms` with no pruning.
    fn brute_force(terms: usize, goal: f64, bound: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut idx = vec![3u32; terms];
        loop {
            let sum: f64 = idx.iter().map(|&x| cos_squared(x)).sum();
            if (sum - goal).abs() <= 1e-12 && idx.windows(2).all(|w| w[0] <= w[1]) {
                out.push(idx.clone());
            }
            let mut p = 0;
            loop {
                if p == terms {
                    return out;
                }
                idx[p] += 1;
                if idx[p] <= bound {
                    break;
                }
                idx[p] = 3;
                p += 1;
            }
        }
    }

    #[test]
    fn brute_force_oracle_agrees() {
        for bound in [10, 23, 60] {
            for terms in [2, 3] {
                for target in [CosTarget::GOLDEN, CosTarget::Rational { num: 1, den: 2 }] {
                    let fast = solve_cos_equation(terms, target, bound).unwrap();
                    let slow = brute_force(terms, target.value(), bound);
                    assert_eq!(fast, slow, "terms={terms} bound={bound} target={target}");
                }
            }
        }
        // Frozen from the oracle.
        assert_eq!(brute_force(2, CosTarget::GOLDEN.value(), 40), vec![vec![3, 5]]);
        assert!(brute_force(3, CosTarget::GOLDEN.value(), 40).is_empty());
    }

    #[test]
    fn cos_equation_examples() {
        assert_eq!(solve_cos_equation(2, CosTarget::GOLDEN, 10).unwrap(), vec![vec![3, 5]]);
        assert!(solve_cos_equation(3, CosTarget::GOLDEN, 10).unwrap().is_empty());
        assert_eq!(
            solve_cos_equation(2, CosTarget::Rational { num: 1, den: 2 }, 10).unwrap(),
            vec![vec![3, 3]]
        );
        assert!((cos_squared(10) - (5.0 + 5f64.sqrt()) / 8.0).abs() < 1e-15);
    }

    #[test]
    fn cos_equation_errors() {
        assert_eq!(
            solve_cos_equation(4, CosTarget::GOLDEN, 10),
            Err(NumericsError::UnsupportedTermCount(4))
        );
        assert_eq!(
            solve_cos_equation(2, CosTarget::GOLDEN, 9),
            Err(NumericsError::BoundTooSmall(9))
        );
    }
}
