//! Finite groups given by multiplication tables.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group must have at least one element")]
    Empty,
    #[error("table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("element 0 is not the identity")]
    Identity,
    #[error("table is not a Latin square at row/column {0}")]
    NotLatin(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
}

/// A finite group with identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    name: Option<String>,
    element_labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates the table: identity at 0, Latin square, associativity.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != order * order {
            return Err(GroupError::TableSize {
                expected: order * order,
                found: table.len(),
            });
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(GroupError::Identity);
            }
        }
        for a in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for b in 0..order {
                let x = table[a * order + b];
                let y = table[b * order + a];
                if x >= order || y >= order || row[x] || col[y] {
                    return Err(GroupError::NotLatin(a));
                }
                row[x] = true;
                col[y] = true;
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    if table[ab * order + c] != table[a * order + table[b * order + c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let element_labels = (0..order)
            .map(|g| if g == 0 { "e".to_string() } else { format!("g{g}") })
            .collect();
        Ok(FiniteGroup {
            order,
            table,
            name: None,
            element_labels,
        })
    }

    pub(crate) fn from_fn<F: Fn(usize, usize) -> usize>(
        order: usize,
        f: F,
    ) -> Result<Self, GroupError> {
        let table = (0..order * order).map(|p| f(p / order, p % order)).collect();
        Self::from_table(order, table)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_element_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.element_labels = labels;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn element_label(&self, g: usize) -> &str {
        &self.element_labels[g]
    }

    pub fn element_labels(&self) -> &[String] {
        &self.element_labels
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|a| self.element_order(a) == self.order)
    }

    /// Abelian with every non-identity element of order 2.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.is_abelian() && (1..self.order).all(|a| self.element_order(a) == 2)
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| self.is_central(a)).collect()
    }

    /// Sorted subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&a| member[a]).collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let s: HashSet<usize> = set.iter().copied().collect();
        s.contains(&0) && set.iter().all(|&a| set.iter().all(|&b| s.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        let s: HashSet<usize> = set.iter().copied().collect();
        (0..self.order).all(|g| {
            let gi = self.inverse(g);
            set.iter().all(|&h| s.contains(&self.mul(self.mul(g, h), gi)))
        })
    }

    /// Every subgroup, each as a sorted element list, sorted by (size, elements).
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = vec![vec![0]];
        found.insert(vec![0]);
        while let Some(h) = queue.pop() {
            for g in 0..self.order {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let k = self.generated(&gens);
                if found.insert(k.clone()) {
                    queue.push(k);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// The subgroup on `members` (sorted, containing 0), re-indexed in order.
    pub fn subgroup(&self, members: &[usize]) -> Option<FiniteGroup> {
        if !self.is_subgroup(members) {
            return None;
        }
        let pos = |x: usize| members.iter().position(|&m| m == x).unwrap();
        let g = FiniteGroup::from_fn(members.len(), |a, b| pos(self.mul(members[a], members[b])))
            .ok()?;
        Some(g.with_element_labels(members.iter().map(|&m| self.element_labels[m].clone()).collect()))
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order;
        let g = FiniteGroup::from_fn(self.order * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
        .expect("direct product of groups is a group");
        let labels = (0..self.order * m)
            .map(|x| match (x / m, x % m) {
                (0, 0) => "e".to_string(),
                (a, b) => format!("({},{})", self.element_labels[a], other.element_labels[b]),
            })
            .collect();
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}x{b}")),
            _ => None,
        };
        let g = g.with_element_labels(labels);
        match name {
            Some(n) => g.with_name(n),
            None => g,
        }
    }

    /// A group isomorphism `self → other` as an element map, if one exists.
    ///
    /// Backtracks over images of a generating set, pruning by element order,
    /// then extends multiplicatively and checks bijectivity.
    pub fn isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order != other.order || self.order_profile() != other.order_profile() {
            return None;
        }
        let gens = self.generating_set();
        let mut images = Vec::with_capacity(gens.len());
        self.assign_generators(other, &gens, &mut images)
    }

    fn order_profile(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        p.sort_unstable();
        p
    }

    /// Greedy generating set, preferring high-order elements.
    fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        let mut gens = Vec::new();
        let mut span = vec![0];
        for a in by_order {
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }

    fn assign_generators(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if images.len() == gens.len() {
            return self.extend_homomorphism(other, gens, images);
        }
        let g = gens[images.len()];
        let order = self.element_order(g);
        for t in 0..other.order {
            if other.element_order(t) != order {
                continue;
            }
            images.push(t);
            if let Some(map) = self.assign_generators(other, gens, images) {
                return Some(map);
            }
            images.pop();
        }
        None
    }

    fn extend_homomorphism(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (&g, &t) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let ty = other.mul(map[x], t);
                if map[y] == usize::MAX {
                    map[y] = ty;
                    queue.push_back(y);
                } else if map[y] != ty {
                    return None;
                }
            }
        }
        let mut hit = vec![false; other.order];
        for &t in &map {
            if t == usize::MAX || hit[t] {
                return None;
            }
            hit[t] = true;
        }
        // Defined consistently on all words in the generators, hence a homomorphism;
        // verify anyway since the check is cheap at this scale.
        for a in 0..self.order {
            for b in 0..self.order {
                if map[self.mul(a, b)] != other.mul(map[a], map[b]) {
                    return None;
                }
            }
        }
        Some(map)
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Human-readable name; `None` when the group was built anonymously.
    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("group of order {}", self.order))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_name())
    }
}

/// Minimal GF(2) linear algebra over bitmask rows (≤ 64 variables).
mod gf2 {
    /// Row-reduced basis keyed by pivot bit.
    #[derive(Default)]
    pub struct Basis {
        rows: Vec<u64>,
    }

    impl Basis {
        pub fn reduce(&self, mut v: u64) -> u64 {
            for &r in &self.rows {
                let pivot = 63 - r.leading_zeros();
                if v >> pivot & 1 == 1 {
                    v ^= r;
                }
            }
            v
        }

        /// Inserts `v`; returns false if it was already in the span.
        pub fn insert(&mut self, v: u64) -> bool {
            let v = self.reduce(v);
            if v == 0 {
                return false;
            }
            let pivot = 63 - v.leading_zeros();
            for r in &mut self.rows {
                if *r >> pivot & 1 == 1 {
                    *r ^= v;
                }
            }
            self.rows.push(v);
            self.rows.sort_unstable_by(|a, b| b.cmp(a));
            true
        }
    }

    /// Basis of `{x : e·x = 0 for every equation e}` over `vars` variables.
    pub fn nullspace(equations: &[u64], vars: usize) -> Vec<u64> {
        let mut rows: Vec<u64> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for &e in equations {
            let mut v = e;
            for (r, &p) in rows.iter().zip(&pivots) {
                if v >> p & 1 == 1 {
                    v ^= r;
                }
            }
            if v == 0 {
                continue;
            }
            let p = v.trailing_zeros() as usize;
            for r in rows.iter_mut() {
                if *r >> p & 1 == 1 {
                    *r ^= v;
                }
            }
            rows.push(v);
            pivots.push(p);
        }
        let free: Vec<usize> = (0..vars).filter(|x| !pivots.contains(x)).collect();
        free.iter()
            .map(|&f| {
                let mut x = 1u64 << f;
                for (r, &p) in rows.iter().zip(&pivots) {
                    if r >> f & 1 == 1 {
                        x |= 1 << p;
                    }
                }
                x
            })
            .collect()
    }
}

/// A central extension `1 → Z2 → E → Q → 1`.
#[derive(Debug, Clone)]
pub struct CentralExtension {
    pub group: FiniteGroup,
    /// The generator of the central `Z2`.
    pub delta: usize,
    /// Quotient map `E → Q`.
    pub projection: Vec<usize>,
}

/// One representative per class in `H²(Q, Z2)`, i.e. every central extension
/// of `quotient` by `Z2` up to equivalence of extensions.
///
/// Elements of the extension are `(q, s)` stored at index `q + |Q|·s`, with
/// product `(a,s)(b,t) = (ab, s + t + c(a,b))` for a normalized cocycle `c`.
/// Requires `(|Q| − 1)² ≤ 64`.
pub fn central_extensions_by_z2(quotient: &FiniteGroup) -> Vec<CentralExtension> {
    let q = quotient.order();
    let m = q - 1;
    assert!(m * m <= 64, "cocycle space too large for bitmask arithmetic");
    // Variable for c(a, b) with a, b ≠ e.
    let var = |a: usize, b: usize| -> Option<usize> { (a != 0 && b != 0).then(|| (a - 1) * m + (b - 1)) };
    let bit = |a: usize, b: usize| var(a, b).map_or(0u64, |v| 1u64 << v);

    // δc(a,b,c) = c(b,c) + c(ab,c) + c(a,bc) + c(a,b) = 0
    let mut equations = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let e = bit(b, c)
                    ^ bit(quotient.mul(a, b), c)
                    ^ bit(a, quotient.mul(b, c))
                    ^ bit(a, b);
                if e != 0 {
                    equations.push(e);
                }
            }
        }
    }
    let cocycles = gf2::nullspace(&equations, m * m);

    // Coboundaries of indicator functions f = 1_x.
    let mut coboundaries = gf2::Basis::default();
    for x in 1..q {
        let mut v = 0u64;
        for a in 1..q {
            for b in 1..q {
                let val = (a == x) as u8 ^ (b == x) as u8 ^ (quotient.mul(a, b) == x) as u8;
                if val == 1 {
                    v |= bit(a, b);
                }
            }
        }
        coboundaries.insert(v);
    }
    let mut complement = Vec::new();
    for z in cocycles {
        if coboundaries.insert(z) {
            complement.push(z);
        }
    }

    let mut out = Vec::new();
    for choice in 0u64..(1 << complement.len()) {
        let cocycle = complement
            .iter()
            .enumerate()
            .filter(|(i, _)| choice >> i & 1 == 1)
            .fold(0u64, |acc, (_, &z)| acc ^ z);
        let c = |a: usize, b: usize| var(a, b).map_or(0, |v| (cocycle >> v & 1) as usize);
        let group = FiniteGroup::from_fn(2 * q, |x, y| {
            let (a, s) = (x % q, x / q);
            let (b, t) = (y % q, y / q);
            quotient.mul(a, b) + q * ((s + t + c(a, b)) % 2)
        })
        .expect("cocycle condition guarantees a group");
        let labels = (0..2 * q)
            .map(|x| match (x % q, x / q) {
                (a, 0) => quotient.element_label(a).to_string(),
                (0, _) => "z".to_string(),
                (a, _) => format!("z{}", quotient.element_label(a)),
            })
            .collect();
        out.push(CentralExtension {
            group: group.with_element_labels(labels),
            delta: q,
            projection: (0..2 * q).map(|x| x % q).collect(),
        });
    }
    out
}
