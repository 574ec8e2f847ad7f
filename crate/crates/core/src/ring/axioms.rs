use std::fmt;

use super::FusionRing;

/// Per-family cap on recorded violation tuples.
const MAX_RECORDED: usize = 64;

/// The axiom families checked by [`verify_axioms`], in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `dual(dual(i)) = i`.
    Involution,
    /// `n[0][j][k] = [j = k]` and `n[i][0][k] = [i = k]`.
    Unit,
    /// `n[i][j][0] = [j = dual(i)]`.
    Duality,
    /// `n[i][j][k] = n[dual(i)][k][j] = n[k][dual(j)][i]`.
    Frobenius,
    /// `(i j) k = i (j k)` coefficientwise.
    Associativity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Involution => "involution",
            Axiom::Unit => "unit",
            Axiom::Duality => "duality",
            Axiom::Frobenius => "frobenius",
            Axiom::Associativity => "associativity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// The offending index tuple, e.g. `(i, j, k)` or `(i, j, k, l)`.
    pub indices: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{} at ({})", self.axiom, idx.join(","))
    }
}

/// Outcome of [`verify_axioms`]; empty iff the ring is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
    /// Number of violations not recorded because of the per-family cap.
    pub omitted: usize,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    fn push(&mut self, count: &mut usize, axiom: Axiom, indices: Vec<usize>) {
        if *count < MAX_RECORDED {
            self.violations.push(Violation { axiom, indices });
        } else {
            self.omitted += 1;
        }
        *count += 1;
    }
}

/// Checks the five fusion-ring axiom families.
///
/// Families are reported in the fixed order of [`Axiom`]; within a family,
/// tuples appear in lexicographic order.
pub fn verify_axioms(ring: &FusionRing) -> AxiomReport {
    let r = ring.rank();
    let mut report = AxiomReport::default();

    let mut count = 0;
    for i in 0..r {
        if ring.dual(ring.dual(i)) != i {
            report.push(&mut count, Axiom::Involution, vec![i]);
        }
    }

    let mut count = 0;
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let ok = if i == 0 {
                    ring.n(0, j, k) == (j == k) as u32
                } else if j == 0 {
                    ring.n(i, 0, k) == (i == k) as u32
                } else {
                    true
                };
                if !ok {
                    report.push(&mut count, Axiom::Unit, vec![i, j, k]);
                }
            }
        }
    }

    let mut count = 0;
    for i in 0..r {
        for j in 0..r {
            if ring.n(i, j, 0) != (j == ring.dual(i)) as u32 {
                report.push(&mut count, Axiom::Duality, vec![i, j, 0]);
            }
        }
    }

    let mut count = 0;
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let v = ring.n(i, j, k);
                if v != ring.n(ring.dual(i), k, j) || v != ring.n(k, ring.dual(j), i) {
                    report.push(&mut count, Axiom::Frobenius, vec![i, j, k]);
                }
            }
        }
    }

    let mut count = 0;
    let mut left = vec![0u64; r];
    let mut right = vec![0u64; r];
    for i in 0..r {
        for j in 0..r {
            let ij = ring.product_row(i, j);
            for k in 0..r {
                left.iter_mut().for_each(|x| *x = 0);
                right.iter_mut().for_each(|x| *x = 0);
                for (m, &a) in ij.iter().enumerate().filter(|(_, &a)| a > 0) {
                    for (l, &b) in ring.product_row(m, k).iter().enumerate() {
                        left[l] += a as u64 * b as u64;
                    }
                }
                for (m, &a) in ring
                    .product_row(j, k)
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                {
                    for (l, &b) in ring.product_row(i, m).iter().enumerate() {
                        right[l] += a as u64 * b as u64;
                    }
                }
                for l in 0..r {
                    if left[l] != right[l] {
                        report.push(&mut count, Axiom::Associativity, vec![i, j, k, l]);
                    }
                }
            }
        }
    }

    report
}
