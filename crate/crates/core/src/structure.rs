//! Structural invariants of fusion rings: invertibles, adjoint subring,
//! universal grading, subring lattice, commutators, stabilizers, orbits,
//! faithful simples and nilpotency.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::catalog;
use crate::group::FiniteGroup;
use crate::numerics::{fp_dimensions, ExactValue, NumericsError, DIM_TOLERANCE};
use crate::ring::{FusionRing, Subring};

/// Largest rank accepted by [`all_subrings`].
pub const MAX_SUBRING_RANK: usize = 64;
/// Cap on the number of distinct subrings [`all_subrings`] will collect.
pub const MAX_SUBRINGS: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructureError {
    #[error("product of invertibles {0} and {1} is not a single basis element")]
    InvertibleProduct(usize, usize),
    #[error("component products are inconsistent at basis elements ({0}, {1})")]
    InconsistentGrading(usize, usize),
    #[error("identity component differs from the adjoint subring")]
    IdentityComponent,
    #[error("the induced component law is not a group: {0}")]
    NotAGroup(String),
    #[error("subring search budget exceeded ({0})")]
    BudgetExceeded(String),
    #[error("the ring is not commutative")]
    NonCommutative,
    #[error("basis element {0} is not invertible")]
    NotInvertible(usize),
    #[error("basis element {0} has order {1}, expected 2")]
    NotOrderTwo(usize, usize),
    #[error("basis index {0} out of range")]
    OutOfRange(usize),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// The group of invertible basis elements.
#[derive(Debug, Clone)]
pub struct Invertibles {
    pub group: FiniteGroup,
    /// Group element → basis index; `embedding[0] = 0`.
    pub embedding: Vec<usize>,
}

impl Invertibles {
    pub fn element_of(&self, basis: usize) -> Option<usize> {
        self.embedding.iter().position(|&b| b == basis)
    }
}

pub fn invertibles(ring: &FusionRing) -> Result<Invertibles, StructureError> {
    let embedding: Vec<usize> = (0..ring.rank()).filter(|&i| ring.is_invertible(i)).collect();
    let m = embedding.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &embedding {
        for &b in &embedding {
            let c = ring
                .single_product(a, b)
                .ok_or(StructureError::InvertibleProduct(a, b))?;
            let pos = embedding
                .iter()
                .position(|&x| x == c)
                .ok_or(StructureError::InvertibleProduct(a, b))?;
            table.push(pos);
        }
    }
    let group = FiniteGroup::from_table(m, table)
        .map_err(|e| StructureError::NotAGroup(e.to_string()))?
        .with_element_labels(embedding.iter().map(|&i| ring.label(i)).collect());
    Ok(Invertibles {
        group: catalog::named(group),
        embedding,
    })
}

/// Subring generated by every constituent of `i ⊗ dual(i)`.
pub fn adjoint_subring(ring: &FusionRing) -> Subring {
    adjoint_of(ring, &(0..ring.rank()).collect::<Vec<_>>())
}

fn adjoint_of(ring: &FusionRing, members: &[usize]) -> Subring {
    let mut seed = Vec::new();
    for &i in members {
        seed.extend(ring.constituents(i, ring.dual(i)));
    }
    seed.sort_unstable();
    seed.dedup();
    ring.closure(&seed)
}

/// Subring on exactly the invertible basis elements.
pub fn pointed_part(ring: &FusionRing) -> Subring {
    let inv: Vec<usize> = (0..ring.rank()).filter(|&i| ring.is_invertible(i)).collect();
    ring.closure(&inv)
}

/// Faithful grading of the basis by a finite group.
#[derive(Debug, Clone)]
pub struct Grading {
    pub group: FiniteGroup,
    /// Basis index → group element.
    pub component_of: Vec<usize>,
    /// Group element → sorted basis indices.
    pub components: Vec<Vec<usize>>,
}

impl Grading {
    /// Group elements met by a set of basis indices.
    pub fn support(&self, members: &[usize]) -> Vec<usize> {
        let mut s: Vec<usize> = members.iter().map(|&i| self.component_of[i]).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Checks every grading invariant against `ring`.
    pub fn check(&self, ring: &FusionRing, adjoint: &Subring) -> Result<(), String> {
        let g = &self.group;
        if self.components.iter().any(|c| c.is_empty()) {
            return Err("grading is not faithful".into());
        }
        if self.component_of[0] != 0 {
            return Err("unit is not in the identity component".into());
        }
        for i in 0..ring.rank() {
            if self.component_of[ring.dual(i)] != g.inverse(self.component_of[i]) {
                return Err(format!("dual of {i} is not in the inverse component"));
            }
            for j in 0..ring.rank() {
                let expected = g.mul(self.component_of[i], self.component_of[j]);
                for k in ring.constituents(i, j) {
                    if self.component_of[k] != expected {
                        return Err(format!("product ({i},{j}) leaves component {expected}"));
                    }
                }
            }
        }
        if self.components[0] != adjoint.members {
            return Err("identity component differs from adjoint subring".into());
        }
        Ok(())
    }
}

/// Universal grading: classes of the relation "`j` appears in `a ⊗ i` for
/// some `a` in the adjoint subring", with the group law induced by products.
pub fn universal_grading(ring: &FusionRing) -> Result<Grading, StructureError> {
    let r = ring.rank();
    let ad = adjoint_subring(ring);

    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut y = x;
        while parent[y] != root {
            let next = parent[y];
            parent[y] = root;
            y = next;
        }
        root
    }
    for &a in &ad.members {
        for i in 0..r {
            for k in ring.constituents(a, i) {
                let (x, y) = (find(&mut parent, i), find(&mut parent, k));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
    }
    // Classes ordered by smallest member, so the unit's class comes first.
    let mut class_id = vec![usize::MAX; r];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut root_class = vec![usize::MAX; r];
    for i in 0..r {
        let root = find(&mut parent, i);
        if root_class[root] == usize::MAX {
            root_class[root] = components.len();
            components.push(Vec::new());
        }
        class_id[i] = root_class[root];
        components[class_id[i]].push(i);
    }

    let m = components.len();
    let mut table = vec![usize::MAX; m * m];
    for i in 0..r {
        for j in 0..r {
            let slot = class_id[i] * m + class_id[j];
            for k in ring.constituents(i, j) {
                if table[slot] == usize::MAX {
                    table[slot] = class_id[k];
                } else if table[slot] != class_id[k] {
                    return Err(StructureError::InconsistentGrading(i, j));
                }
            }
        }
    }
    if components[0] != ad.members {
        return Err(StructureError::IdentityComponent);
    }
    let labels = components
        .iter()
        .enumerate()
        .map(|(c, members)| {
            if c == 0 {
                "e".to_string()
            } else {
                format!("[{}]", ring.label(members[0]))
            }
        })
        .collect();
    let group = FiniteGroup::from_table(m, table)
        .map_err(|e| StructureError::NotAGroup(e.to_string()))?
        .with_element_labels(labels);
    let grading = Grading {
        group: catalog::named(group),
        component_of: class_id,
        components,
    };
    grading.check(ring, &ad).map_err(StructureError::NotAGroup)?;
    Ok(grading)
}

/// Every subring, sorted by (size, members).
///
/// Subrings are found as closures of generating sets: starting from the
/// trivial subring, each known subring is extended by one basis element
/// and closed again until no new member set appears.
pub fn all_subrings(ring: &FusionRing) -> Result<Vec<Subring>, StructureError> {
    let r = ring.rank();
    if r > MAX_SUBRING_RANK {
        return Err(StructureError::BudgetExceeded(format!(
            "rank {r} exceeds {MAX_SUBRING_RANK}"
        )));
    }
    let to_mask = |s: &Subring| s.members.iter().fold(0u64, |acc, &i| acc | 1 << i);
    let trivial = ring.closure(&[]);
    let mut seen: HashSet<u64> = HashSet::from([to_mask(&trivial)]);
    let mut found = vec![trivial.clone()];
    let mut queue = VecDeque::from([trivial]);
    while let Some(s) = queue.pop_front() {
        let mask = to_mask(&s);
        for i in 0..r {
            if mask >> i & 1 == 1 {
                continue;
            }
            let mut seed = s.members.clone();
            seed.push(i);
            let t = ring.closure(&seed);
            if seen.insert(to_mask(&t)) {
                if found.len() >= MAX_SUBRINGS {
                    return Err(StructureError::BudgetExceeded(format!(
                        "more than {MAX_SUBRINGS} subrings"
                    )));
                }
                found.push(t.clone());
                queue.push_back(t);
            }
        }
    }
    found.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then_with(|| a.members.cmp(&b.members)));
    Ok(found)
}

/// Closure of `{i : every constituent of i ⊗ dual(i) lies in a}`.
pub fn commutator(ring: &FusionRing, a: &Subring) -> Result<Subring, StructureError> {
    if !ring.is_commutative() {
        return Err(StructureError::NonCommutative);
    }
    let seed: Vec<usize> = (0..ring.rank())
        .filter(|&i| ring.constituents(i, ring.dual(i)).all(|k| a.contains(k)))
        .collect();
    Ok(ring.closure(&seed))
}

/// Invertibles `g` with `g ⊗ x = x`, as basis indices.
pub fn stabilizer(ring: &FusionRing, x: usize) -> Result<Vec<usize>, StructureError> {
    if x >= ring.rank() {
        return Err(StructureError::OutOfRange(x));
    }
    Ok((0..ring.rank())
        .filter(|&g| ring.is_invertible(g) && ring.single_product(g, x) == Some(x))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub transitive: bool,
    /// Orbits of left multiplication by invertibles on non-invertibles.
    pub orbits: Vec<Vec<usize>>,
}

pub fn is_transitive_on_noninvertibles(ring: &FusionRing) -> OrbitReport {
    let r = ring.rank();
    let inv: Vec<usize> = (0..r).filter(|&i| ring.is_invertible(i)).collect();
    let mut seen = vec![false; r];
    let mut orbits = Vec::new();
    for x in 0..r {
        if seen[x] || ring.is_invertible(x) {
            continue;
        }
        let mut orbit: Vec<usize> = inv
            .iter()
            .filter_map(|&g| ring.single_product(g, x))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
        }
        orbits.push(orbit);
    }
    OrbitReport {
        transitive: orbits.len() <= 1,
        orbits,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionClass {
    pub dimension: f64,
    pub exact: Option<ExactValue>,
    pub members: Vec<usize>,
    /// `{X, δ⊗X}` pairs; empty unless the action is free.
    pub pairs: Vec<(usize, usize)>,
}

impl DimensionClass {
    pub fn is_even(&self) -> bool {
        self.members.len() % 2 == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairingReport {
    pub delta: usize,
    /// `δ ⊗ X ≠ X` for every basis element `X`.
    pub free: bool,
    /// Elements fixed by `δ`.
    pub fixed: Vec<usize>,
    pub classes: Vec<DimensionClass>,
}

impl PairingReport {
    /// Free action with every class even and fully paired.
    pub fn all_even(&self) -> bool {
        self.free
            && self
                .classes
                .iter()
                .all(|c| c.is_even() && c.pairs.len() * 2 == c.members.len())
    }
}

/// Pairs each dimension class by `X ↦ δ ⊗ X` when `δ` acts freely.
pub fn even_rank_pairing(ring: &FusionRing, delta: usize) -> Result<PairingReport, StructureError> {
    if delta >= ring.rank() {
        return Err(StructureError::OutOfRange(delta));
    }
    if !ring.is_invertible(delta) {
        return Err(StructureError::NotInvertible(delta));
    }
    let square = ring.single_product(delta, delta);
    if delta == 0 || square != Some(0) {
        let order = if delta == 0 { 1 } else { 0 };
        return Err(StructureError::NotOrderTwo(delta, order));
    }
    let r = ring.rank();
    let image: Vec<usize> = (0..r)
        .map(|x| ring.single_product(delta, x).expect("invertible acts by permutation"))
        .collect();
    let fixed: Vec<usize> = (0..r).filter(|&x| image[x] == x).collect();
    let free = fixed.is_empty();

    let fp = fp_dimensions(ring)?;
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| fp.dims[a].total_cmp(&fp.dims[b]).then(a.cmp(&b)));
    let mut classes: Vec<DimensionClass> = Vec::new();
    for x in order {
        let d = fp.dims[x];
        match classes.last_mut() {
            Some(c) if (d - c.dimension).abs() <= DIM_TOLERANCE => c.members.push(x),
            _ => classes.push(DimensionClass {
                dimension: d,
                exact: fp.recognized[x],
                members: vec![x],
                pairs: Vec::new(),
            }),
        }
    }
    for c in &mut classes {
        c.members.sort_unstable();
        if free {
            c.pairs = c
                .members
                .iter()
                .filter(|&&x| x < image[x])
                .map(|&x| (x, image[x]))
                .collect();
        }
    }
    Ok(PairingReport {
        delta,
        free,
        fixed,
        classes,
    })
}

#[derive(Debug, Clone)]
pub struct FaithfulReport {
    /// Basis elements generating the whole ring.
    pub simples: Vec<usize>,
    pub grading_cyclic: bool,
    pub grading: Grading,
}

pub fn faithful_simples(ring: &FusionRing) -> Result<FaithfulReport, StructureError> {
    let grading = universal_grading(ring)?;
    let simples = (0..ring.rank())
        .filter(|&i| ring.closure(&[i]).rank() == ring.rank())
        .collect();
    Ok(FaithfulReport {
        simples,
        grading_cyclic: grading.group.is_cyclic(),
        grading,
    })
}

/// Length of the chain `ring ⊇ ad ⊇ ad(ad) ⊇ …` down to the trivial
/// subring, or `None` when it stabilises above it.
pub fn nilpotency(ring: &FusionRing) -> Option<usize> {
    let mut current: Vec<usize> = (0..ring.rank()).collect();
    let mut steps = 0;
    while current != [0] {
        let next = adjoint_of(ring, &current).members;
        if next == current {
            return None;
        }
        current = next;
        steps += 1;
    }
    Some(steps)
}
