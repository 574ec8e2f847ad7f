//! Fusion-ring data model.
//!
//! A [`FusionRing`] is stored as a dense `rank × rank × rank` tensor of
//! structure constants together with the duality involution on the basis.
//! Basis index `0` is always the unit.

mod axioms;
mod iso;

pub use axioms::{verify_axioms, Axiom, AxiomReport, Violation};
pub use iso::find_isomorphism;

use std::fmt;

use thiserror::Error;

/// Structural problems that prevent a tensor from even being read as a ring.
///
/// These are distinct from axiom violations, which [`verify_axioms`] reports
/// for structurally well-formed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("rank must be positive")]
    EmptyRing,
    #[error("duality has length {found}, expected {expected}")]
    DualityLength { expected: usize, found: usize },
    #[error("duality is not a permutation: index {index} maps to {target}")]
    NotPermutation { index: usize, target: usize },
    #[error("unit must sit at index 0 and be self-dual, but dual(0) = {0}")]
    UnitNotSelfDual(usize),
    #[error("structure tensor has {found} entries, expected rank^3 = {expected}")]
    TensorSize { expected: usize, found: usize },
    #[error("structure tensor shape mismatch at {path}: expected length {expected}, found {found}")]
    TensorShape {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error("negative structure constant {value} at N[{i}][{j}][{k}]")]
    NegativeEntry {
        i: usize,
        j: usize,
        k: usize,
        value: i64,
    },
    #[error("structure constant {value} at N[{i}][{j}][{k}] does not fit in 32 bits")]
    EntryTooLarge {
        i: usize,
        j: usize,
        k: usize,
        value: i64,
    },
    #[error("{found} labels given for rank {expected}")]
    LabelCount { expected: usize, found: usize },
}

/// Errors from arithmetic on ring elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element has {found} coefficients, ring rank is {expected}")]
    Shape { expected: usize, found: usize },
    #[error("coefficient overflow while multiplying")]
    Overflow,
}

/// Grothendieck ring of a fusion category in a fixed simple basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    dual: Vec<usize>,
    n: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl FusionRing {
    /// Builds a ring from a flat tensor laid out as `n[(i * rank + j) * rank + k]`.
    ///
    /// Only structural checks are performed here; use [`verify_axioms`] for the
    /// ring axioms.
    pub fn new(
        dual: Vec<usize>,
        n: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, StructureError> {
        let rank = dual.len();
        if rank == 0 {
            return Err(StructureError::EmptyRing);
        }
        let mut seen = vec![false; rank];
        for (index, &target) in dual.iter().enumerate() {
            if target >= rank || seen[target] {
                return Err(StructureError::NotPermutation { index, target });
            }
            seen[target] = true;
        }
        if dual[0] != 0 {
            return Err(StructureError::UnitNotSelfDual(dual[0]));
        }
        if n.len() != rank * rank * rank {
            return Err(StructureError::TensorSize {
                expected: rank * rank * rank,
                found: n.len(),
            });
        }
        if let Some(l) = &labels {
            if l.len() != rank {
                return Err(StructureError::LabelCount {
                    expected: rank,
                    found: l.len(),
                });
            }
        }
        Ok(FusionRing {
            rank,
            dual,
            n,
            labels,
        })
    }

    /// Builds a ring by evaluating `f(i, j, k)` for every triple.
    pub fn from_fn<F>(
        dual: Vec<usize>,
        labels: Option<Vec<String>>,
        mut f: F,
    ) -> Result<Self, StructureError>
    where
        F: FnMut(usize, usize, usize) -> u32,
    {
        let rank = dual.len();
        let mut n = Vec::with_capacity(rank * rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    n.push(f(i, j, k));
                }
            }
        }
        Self::new(dual, n, labels)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duality(&self) -> &[usize] {
        &self.dual
    }

    /// Multiplicity of `k` in `i ⊗ j`.
    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[(i * self.rank + j) * self.rank + k]
    }

    /// The row `k ↦ n[i][j][k]`.
    #[inline]
    pub fn product_row(&self, i: usize, j: usize) -> &[u32] {
        let start = (i * self.rank + j) * self.rank;
        &self.n[start..start + self.rank]
    }

    /// Basis indices appearing in `i ⊗ j`.
    pub fn constituents(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.product_row(i, j)
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, _)| k)
    }

    /// If `i ⊗ j` is a single basis element with multiplicity one, returns it.
    pub fn single_product(&self, i: usize, j: usize) -> Option<usize> {
        let row = self.product_row(i, j);
        let mut found = None;
        for (k, &m) in row.iter().enumerate() {
            match m {
                0 => {}
                1 if found.is_none() => found = Some(k),
                _ => return None,
            }
        }
        found
    }

    pub fn tensor(&self) -> &[u32] {
        &self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a basis element; falls back to `b{i}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None if i == 0 => "1".to_string(),
            None => format!("b{i}"),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, StructureError> {
        if labels.len() != self.rank {
            return Err(StructureError::LabelCount {
                expected: self.rank,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn is_self_dual(&self, i: usize) -> bool {
        self.dual[i] == i
    }

    /// `i` is invertible iff `i ⊗ dual(i)` is exactly the unit.
    pub fn is_invertible(&self, i: usize) -> bool {
        self.single_product(i, self.dual[i]) == Some(0)
    }

    pub fn is_pointed(&self) -> bool {
        (0..self.rank).all(|i| self.is_invertible(i))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|i| (i + 1..self.rank).all(|j| self.product_row(i, j) == self.product_row(j, i)))
    }

    /// The formal sum `i ⊗ j`.
    pub fn product(&self, i: usize, j: usize) -> RingElement {
        RingElement {
            coefficients: self.product_row(i, j).iter().map(|&m| m as u64).collect(),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
        for e in [a, b] {
            if e.coefficients.len() != self.rank {
                return Err(RingError::Shape {
                    expected: self.rank,
                    found: e.coefficients.len(),
                });
            }
        }
        let mut out = vec![0u64; self.rank];
        for (i, &ai) in a.coefficients.iter().enumerate().filter(|(_, &c)| c > 0) {
            for (j, &bj) in b.coefficients.iter().enumerate().filter(|(_, &c)| c > 0) {
                let w = ai.checked_mul(bj).ok_or(RingError::Overflow)?;
                for (k, &m) in self.product_row(i, j).iter().enumerate() {
                    if m > 0 {
                        let term = w.checked_mul(m as u64).ok_or(RingError::Overflow)?;
                        out[k] = out[k].checked_add(term).ok_or(RingError::Overflow)?;
                    }
                }
            }
        }
        Ok(RingElement { coefficients: out })
    }

    /// Smallest subring containing `seed` (and the unit).
    pub fn closure(&self, seed: &[usize]) -> Subring {
        let mut member = vec![false; self.rank];
        member[0] = true;
        for &s in seed {
            member[s] = true;
        }
        loop {
            let current: Vec<usize> = (0..self.rank).filter(|&i| member[i]).collect();
            let mut changed = false;
            for &i in &current {
                let d = self.dual[i];
                if !member[d] {
                    member[d] = true;
                    changed = true;
                }
                for &j in &current {
                    for k in self.constituents(i, j) {
                        if !member[k] {
                            member[k] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        self.subring_from_mask(&member)
    }

    pub(crate) fn subring_from_mask(&self, member: &[bool]) -> Subring {
        let members: Vec<usize> = (0..self.rank).filter(|&i| member[i]).collect();
        let pointed = members.iter().all(|&i| self.is_invertible(i));
        Subring { members, pointed }
    }

    /// The subring on exactly `members`, if that set is closed.
    pub fn subring(&self, members: &[usize]) -> Option<Subring> {
        let s = self.closure(members);
        let mut sorted = members.to_vec();
        sorted.push(0);
        sorted.sort_unstable();
        sorted.dedup();
        (s.members == sorted).then_some(s)
    }

    /// The ring spanned by a closed subset, re-indexed in increasing order.
    pub fn restrict(&self, sub: &Subring) -> FusionRing {
        let m = &sub.members;
        let mut position = vec![usize::MAX; self.rank];
        for (p, &i) in m.iter().enumerate() {
            position[i] = p;
        }
        let dual = m.iter().map(|&i| position[self.dual[i]]).collect();
        let labels = Some(m.iter().map(|&i| self.label(i)).collect());
        FusionRing::from_fn(dual, labels, |a, b, c| self.n(m[a], m[b], m[c]))
            .expect("closed subset of a well-formed ring is well-formed")
    }

    /// Relabels the basis: element `i` of `self` becomes element `perm[i]`.
    /// `perm[0]` must be `0`.
    pub fn permuted(&self, perm: &[usize]) -> Result<FusionRing, StructureError> {
        let r = self.rank;
        let mut inverse = vec![usize::MAX; r];
        for (i, &p) in perm.iter().enumerate() {
            if p >= r || inverse[p] != usize::MAX {
                return Err(StructureError::NotPermutation { index: i, target: p });
            }
            inverse[p] = i;
        }
        let dual = (0..r).map(|p| perm[self.dual[inverse[p]]]).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| (0..r).map(|p| l[inverse[p]].clone()).collect());
        FusionRing::from_fn(dual, labels, |a, b, c| {
            self.n(inverse[a], inverse[b], inverse[c])
        })
    }

    /// Renders an element as `a + 2 b + ...`.
    pub fn format_element(&self, e: &RingElement) -> String {
        let terms: Vec<String> = e
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| {
                if c == 1 {
                    self.label(k)
                } else {
                    format!("{c} {}", self.label(k))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Formal nonnegative integer combination of basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub coefficients: Vec<u64>,
}

impl RingElement {
    pub fn zero(rank: usize) -> Self {
        RingElement {
            coefficients: vec![0; rank],
        }
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut e = Self::zero(rank);
        e.coefficients[i] = 1;
        e
    }

    pub fn unit(rank: usize) -> Self {
        Self::basis(rank, 0)
    }

    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, _)| k)
            .collect()
    }
}

/// A subset of basis indices closed under products and duality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subring {
    pub members: Vec<usize>,
    /// Every member is invertible.
    pub pointed: bool,
}

impl Subring {
    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn rank(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    pub fn is_subset_of(&self, other: &Subring) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }
}

impl fmt::Display for Subring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.members.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}
