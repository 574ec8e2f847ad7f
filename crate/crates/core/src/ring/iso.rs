//! Exact ring-isomorphism search by backtracking over basis permutations.

use super::FusionRing;
use crate::numerics::{fp_dimensions, DIM_TOLERANCE};

/// Invariants of a basis element that any isomorphism must preserve.
#[derive(Debug, Clone, PartialEq)]
struct Profile {
    dim: Option<f64>,
    self_dual: bool,
    invertible: bool,
    /// Multiplicative order for invertibles, 0 otherwise.
    order: usize,
    /// Σ_k n[i][dual(i)][k]²
    adjoint_weight: u64,
    /// Σ_k n[i][i][k]
    square_weight: u64,
}

impl Profile {
    fn compatible(&self, other: &Profile) -> bool {
        let dims_match = match (self.dim, other.dim) {
            (Some(a), Some(b)) => (a - b).abs() <= DIM_TOLERANCE,
            _ => true,
        };
        dims_match
            && self.self_dual == other.self_dual
            && self.invertible == other.invertible
            && self.order == other.order
            && self.adjoint_weight == other.adjoint_weight
            && self.square_weight == other.square_weight
    }
}

fn profiles(ring: &FusionRing) -> Vec<Profile> {
    let dims = fp_dimensions(ring).ok().map(|d| d.dims);
    (0..ring.rank())
        .map(|i| {
            let invertible = ring.is_invertible(i);
            let order = if invertible { invertible_order(ring, i) } else { 0 };
            Profile {
                dim: dims.as_ref().map(|d| d[i]),
                self_dual: ring.is_self_dual(i),
                invertible,
                order,
                adjoint_weight: ring
                    .product_row(i, ring.dual(i))
                    .iter()
                    .map(|&m| (m as u64) * (m as u64))
                    .sum(),
                square_weight: ring.product_row(i, i).iter().map(|&m| m as u64).sum(),
            }
        })
        .collect()
}

fn invertible_order(ring: &FusionRing, g: usize) -> usize {
    let mut x = g;
    let mut order = 1;
    while x != 0 {
        match ring.single_product(x, g) {
            Some(next) => x = next,
            None => return 0,
        }
        order += 1;
        if order > ring.rank() {
            return 0;
        }
    }
    order
}

struct Search<'a> {
    a: &'a FusionRing,
    b: &'a FusionRing,
    allowed: Vec<Vec<bool>>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    single_a: Vec<Option<usize>>,
    single_b: Vec<Option<usize>>,
}

impl Search<'_> {
    fn undo(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let i = self.assigned.pop().unwrap();
            let t = self.map[i].take().unwrap();
            self.used[t] = false;
        }
    }

    /// Assigns `i ↦ t` and everything it forces; false on contradiction.
    fn assign(&mut self, i: usize, t: usize) -> bool {
        let r = self.a.rank();
        let mut queue = vec![(i, t)];
        while let Some((i, t)) = queue.pop() {
            match self.map[i] {
                Some(existing) if existing == t => continue,
                Some(_) => return false,
                None => {}
            }
            if self.used[t] || !self.allowed[i][t] {
                return false;
            }
            self.map[i] = Some(t);
            self.used[t] = true;
            self.assigned.push(i);

            for &j in &self.assigned {
                let sj = self.map[j].unwrap();
                for &k in &self.assigned {
                    let sk = self.map[k].unwrap();
                    if self.a.n(i, j, k) != self.b.n(t, sj, sk)
                        || self.a.n(j, i, k) != self.b.n(sj, t, sk)
                        || self.a.n(j, k, i) != self.b.n(sj, sk, t)
                    {
                        return false;
                    }
                }
                for (x, y, sx, sy) in [(i, j, t, sj), (j, i, sj, t)] {
                    if let Some(k) = self.single_a[x * r + y] {
                        match self.single_b[sx * r + sy] {
                            Some(sk) => queue.push((k, sk)),
                            None => return false,
                        }
                    }
                }
            }
            queue.push((self.a.dual(i), self.b.dual(t)));
        }
        true
    }

    fn solve(&mut self) -> bool {
        let r = self.a.rank();
        // Most constrained unassigned element first.
        let next = (0..r)
            .filter(|&i| self.map[i].is_none())
            .min_by_key(|&i| (0..r).filter(|&t| !self.used[t] && self.allowed[i][t]).count());
        let Some(i) = next else {
            return true;
        };
        for t in 0..r {
            if self.used[t] || !self.allowed[i][t] {
                continue;
            }
            let mark = self.assigned.len();
            if self.assign(i, t) && self.solve() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// Finds `σ` with `σ(0) = 0`, `σ ∘ dual₁ = dual₂ ∘ σ` and
/// `n₁[i][j][k] = n₂[σi][σj][σk]`, or proves none exists.
///
/// The returned vector maps basis indices of `a` to basis indices of `b`.
pub fn find_isomorphism(a: &FusionRing, b: &FusionRing) -> Option<Vec<usize>> {
    let r = a.rank();
    if r != b.rank() {
        return None;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    let allowed: Vec<Vec<bool>> = pa
        .iter()
        .map(|p| pb.iter().map(|q| p.compatible(q)).collect())
        .collect();
    // Same multiset of profiles is necessary.
    for i in 0..r {
        if !allowed[i].iter().any(|&x| x) {
            return None;
        }
    }
    let single = |ring: &FusionRing| {
        (0..r * r)
            .map(|p| ring.single_product(p / r, p % r))
            .collect::<Vec<_>>()
    };
    let mut search = Search {
        a,
        b,
        allowed,
        map: vec![None; r],
        used: vec![false; r],
        assigned: Vec::with_capacity(r),
        single_a: single(a),
        single_b: single(b),
    };
    if !search.assign(0, 0) {
        return None;
    }
    if search.solve() {
        Some(search.map.into_iter().map(|t| t.unwrap()).collect())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupSpec};

    fn check(a: &FusionRing, b: &FusionRing, sigma: &[usize]) {
        let r = a.rank();
        assert_eq!(sigma[0], 0);
        for i in 0..r {
            assert_eq!(sigma[a.dual(i)], b.dual(sigma[i]));
            for j in 0..r {
                for k in 0..r {
                    assert_eq!(a.n(i, j, k), b.n(sigma[i], sigma[j], sigma[k]));
                }
            }
        }
    }

    #[test]
    fn ising_is_isomorphic_to_itself_by_identity() {
        let ising = catalog::ising();
        assert_eq!(find_isomorphism(&ising, &ising), Some(vec![0, 1, 2]));
    }

    #[test]
    fn yang_lee_extension_matches_deligne_product() {
        let z2 = GroupSpec::Cyclic(2).group();
        let a = catalog::yl_extension(&z2);
        let b = catalog::deligne_product(&catalog::yang_lee(), &catalog::pointed(&z2));
        let sigma = find_isomorphism(&a, &b).expect("isomorphic");
        check(&a, &b, &sigma);
        // Expected map: d_g -> (1,g), Y_g -> (Y,g).
        // a basis: d_e d_g Y_e Y_g ; b basis: (1,e) (1,g) (Y,e) (Y,g)
        assert_eq!(sigma, vec![0, 1, 2, 3]);
    }

    #[test]
    fn z4_and_klein_four_differ() {
        let a = catalog::pointed(&GroupSpec::Cyclic(4).group());
        let b = catalog::pointed(&GroupSpec::Product(vec![2, 2]).group());
        assert_eq!(find_isomorphism(&a, &b), None);
        assert_eq!(find_isomorphism(&b, &a), None);
    }

    #[test]
    fn rank_mismatch() {
        assert_eq!(find_isomorphism(&catalog::ising(), &catalog::yang_lee()), None);
    }

    #[test]
    fn relabelled_ring_is_found() {
        let r = catalog::yl_extension(&GroupSpec::Symmetric3.group());
        let perm: Vec<usize> = std::iter::once(0).chain((1..12).rev()).collect();
        let p = r.permuted(&perm).unwrap();
        let sigma = find_isomorphism(&r, &p).unwrap();
        check(&r, &p, &sigma);
    }

    #[test]
    fn order_sixteen_groups_are_distinguished() {
        let a = catalog::pointed(&GroupSpec::Product(vec![2, 8]).group());
        let b = catalog::pointed(&GroupSpec::Product(vec![4, 4]).group());
        assert_eq!(find_isomorphism(&a, &b), None);
        let c = catalog::pointed(&GroupSpec::Product(vec![8, 2]).group());
        let sigma = find_isomorphism(&a, &c).unwrap();
        check(&a, &c, &sigma);
    }
}
