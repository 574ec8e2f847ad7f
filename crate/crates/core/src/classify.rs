//! Family detection for extensions of rank-2 fusion rings and an executable
//! check for each ring-level classification claim.

use std::fmt;

use thiserror::Error;

use crate::catalog::{deligne_product, ising, pointed, yang_lee, yl_extension};
use crate::numerics::{fp_dimensions, type_signature, FPData, NumericsError, DIM_TOLERANCE};
use crate::ring::{find_isomorphism, FusionRing, Subring};
use crate::structure::{
    adjoint_subring, all_subrings, even_rank_pairing, faithful_simples, invertibles,
    is_transitive_on_noninvertibles, universal_grading, Grading, Invertibles, StructureError,
};

const SQRT2: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error("dimension set is not {{1, sqrt(2)}}; the ring is not an extension of a rank-2 pointed ring")]
    NotRank2PointedExtension,
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Family membership verdicts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Flags {
    pub pointed: bool,
    pub yang_lee: bool,
    pub ising: bool,
    pub generalized_ty: bool,
    pub yl_extension: bool,
    pub rank2_pointed_extension: bool,
}

impl Flags {
    /// Names of the raised flags in a fixed order.
    pub fn names(&self) -> Vec<&'static str> {
        [
            (self.pointed, "pointed"),
            (self.yang_lee, "yang_lee"),
            (self.ising, "ising"),
            (self.generalized_ty, "generalized_ty"),
            (self.yl_extension, "yl_extension"),
            (self.rank2_pointed_extension, "rank2_pointed_extension"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evidence {
    pub type_signature: String,
    pub grading_group: String,
    pub grading_order: usize,
    pub invertibles_group: String,
    /// Generator of an Ising subring, when one was looked for and found.
    pub ising_generator: Option<usize>,
    /// Permutation onto the canonical Yang-Lee extension.
    pub yl_isomorphism: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub flags: Flags,
    pub evidence: Evidence,
}

/// Every basis dimension is 1 or √2, and √2 occurs.
fn has_z2_dimension_set(fp: &FPData) -> bool {
    let close = |a: f64, b: f64| (a - b).abs() <= DIM_TOLERANCE;
    fp.dims.iter().all(|&d| close(d, 1.0) || close(d, SQRT2)) && fp.dims.iter().any(|&d| close(d, SQRT2))
}

/// Non-pointed, and every product of two non-invertibles is a sum of invertibles.
pub fn is_generalized_ty(ring: &FusionRing) -> bool {
    let r = ring.rank();
    let non_inv: Vec<usize> = (0..r).filter(|&i| !ring.is_invertible(i)).collect();
    !non_inv.is_empty()
        && non_inv.iter().all(|&x| {
            non_inv
                .iter()
                .all(|&y| ring.constituents(x, y).all(|k| ring.is_invertible(k)))
        })
}

fn is_ising(ring: &FusionRing) -> bool {
    ring.rank() == 3 && find_isomorphism(ring, &ising()).is_some()
}

fn is_yang_lee(ring: &FusionRing) -> bool {
    ring.rank() == 2 && find_isomorphism(ring, &yang_lee()).is_some()
}

/// Permutation onto `yl_extension(U)` when the type and adjoint subring fit.
fn yl_match(ring: &FusionRing, grading: &Grading, fp: &FPData) -> Option<Vec<usize>> {
    let n = grading.group.order();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let sig = crate::numerics::TypeSignature::from_dims(&fp.dims);
    if !sig.matches(&[(1.0, n), (phi, n)]) {
        return None;
    }
    let ad = adjoint_subring(ring);
    if !is_yang_lee(&ring.restrict(&ad)) {
        return None;
    }
    find_isomorphism(ring, &yl_extension(&grading.group))
}

pub fn classify(ring: &FusionRing) -> Result<Classification, ClassifyError> {
    let fp = fp_dimensions(ring)?;
    let grading = universal_grading(ring)?;
    let inv = invertibles(ring)?;
    let pointed_flag = ring.is_pointed();
    let z2 = !pointed_flag && has_z2_dimension_set(&fp);
    let yl_iso = yl_match(ring, &grading, &fp);
    let ising_generator = if z2 { find_ising_subring(ring)?.generator } else { None };
    let flags = Flags {
        pointed: pointed_flag,
        yang_lee: is_yang_lee(ring),
        ising: is_ising(ring),
        generalized_ty: is_generalized_ty(ring),
        yl_extension: yl_iso.is_some(),
        rank2_pointed_extension: z2,
    };
    Ok(Classification {
        flags,
        evidence: Evidence {
            type_signature: type_signature(ring)?.to_string(),
            grading_group: grading.group.display_name(),
            grading_order: grading.group.order(),
            invertibles_group: inv.group.display_name(),
            ising_generator,
            yl_isomorphism: yl_iso,
        },
    })
}

/// The three Ising-existence predicates for an extension of a rank-2
/// pointed ring, each evaluated on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsingSearch {
    pub subring: Option<Subring>,
    pub generator: Option<usize>,
    /// Some single-generator closure is an Ising ring.
    pub contains_ising: bool,
    /// Some grading component of rank 1 sits at an element of order 2.
    pub order_two_rank_one: bool,
    /// Some non-invertible basis element is self-dual.
    pub self_dual_noninvertible: bool,
}

impl IsingSearch {
    pub fn predicates(&self) -> [bool; 3] {
        [self.contains_ising, self.order_two_rank_one, self.self_dual_noninvertible]
    }

    pub fn agree(&self) -> bool {
        let [a, b, c] = self.predicates();
        a == b && b == c
    }
}

pub fn find_ising_subring(ring: &FusionRing) -> Result<IsingSearch, ClassifyError> {
    let fp = fp_dimensions(ring)?;
    if ring.is_pointed() || !has_z2_dimension_set(&fp) {
        return Err(ClassifyError::NotRank2PointedExtension);
    }
    let r = ring.rank();
    let self_dual: Vec<usize> = (0..r)
        .filter(|&i| !ring.is_invertible(i) && ring.is_self_dual(i))
        .collect();
    // Self-dual candidates first, then the remaining simples.
    let candidates = self_dual
        .iter()
        .copied()
        .chain((0..r).filter(|i| !self_dual.contains(i)));
    let mut found = None;
    for i in candidates {
        let sub = ring.closure(&[i]);
        if sub.rank() == 3 && is_ising(&ring.restrict(&sub)) {
            found = Some((i, sub));
            break;
        }
    }
    let grading = universal_grading(ring)?;
    let order_two_rank_one = grading
        .components
        .iter()
        .enumerate()
        .any(|(g, c)| grading.group.element_order(g) == 2 && c.len() == 1);
    let (generator, subring) = found.unzip();
    Ok(IsingSearch {
        contains_ising: subring.is_some(),
        subring,
        generator,
        order_two_rank_one,
        self_dual_noninvertible: !self_dual.is_empty(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Verified,
    Refuted,
    Inapplicable,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Refuted => "refuted",
            ClaimStatus::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: ClaimStatus,
    pub witness: String,
    /// Basis indices exhibiting a refutation.
    pub counterexample: Option<Vec<usize>>,
    /// Only the Grothendieck-ring shadow of a braided statement is checked.
    pub ring_level: bool,
}

struct Claims(Vec<ClaimReport>);

impl Claims {
    fn push(
        &mut self,
        id: &'static str,
        statement: &'static str,
        status: ClaimStatus,
        witness: impl Into<String>,
        counterexample: Option<Vec<usize>>,
    ) {
        self.0.push(ClaimReport {
            id,
            statement,
            status,
            witness: witness.into(),
            counterexample,
            ring_level: false,
        });
    }

    fn check(&mut self, id: &'static str, statement: &'static str, ok: bool, witness: String, counter: Vec<usize>) {
        if ok {
            self.push(id, statement, ClaimStatus::Verified, witness, None);
        } else {
            self.push(id, statement, ClaimStatus::Refuted, witness, Some(counter));
        }
    }

    fn skip(&mut self, id: &'static str, statement: &'static str, why: &str) {
        self.push(id, statement, ClaimStatus::Inapplicable, why, None);
    }

    fn mark_ring_level(&mut self) {
        if let Some(last) = self.0.last_mut() {
            last.ring_level = true;
        }
    }
}

mod statements {
    pub const ASSOCIATOR_POINTED: &str =
        "an extension of the rank-2 pointed ring with nontrivial associator is pointed";
    pub const GTY_STRUCTURE: &str =
        "a non-pointed extension of the rank-2 pointed ring is generalized Tambara-Yamagami";
    pub const GTY_TYPE: &str = "the ring has type (1,2n; sqrt(2),n) with |G| = 2n";
    pub const GTY_GRADING: &str =
        "the adjoint subring is the rank-2 pointed base and the universal grading group has order 2n";
    pub const DIMENSION_CRITERION: &str =
        "a non-pointed ring extends a rank-2 pointed ring iff its dimensions are {1, sqrt(2)}";
    pub const GTY_TRANSITIVE: &str = "invertibles act transitively on the non-invertible basis";
    pub const DELTA_NORMAL: &str = "the base {1, delta} is a normal subgroup of the invertibles";
    pub const ISING_PREDICATES: &str =
        "Ising subring exists iff a rank-1 component sits at an order-2 grade iff a non-invertible is self-dual";
    pub const ISING_ODD: &str = "n odd implies an Ising subring";
    pub const ISING_ELEMENTARY: &str = "an elementary abelian 2-group grading implies an Ising subring";
    pub const FAITHFUL_CYCLIC: &str =
        "a generalized Tambara-Yamagami ring has a faithful simple iff its universal grading group is cyclic";
    pub const DELTA_PAIRING: &str =
        "a freely acting invertible of order 2 pairs every dimension class, so each class is even";
    pub const YL_TYPE: &str = "an extension of Yang-Lee has type (1,n; golden ratio,n)";
    pub const YL_COMPONENTS: &str =
        "every universal grading component has rank 2 with dimensions {1, golden ratio}";
    pub const YL_ADJOINT: &str =
        "the adjoint subring is the Yang-Lee base and |G| equals the universal grading order";
    pub const YL_RULES: &str = "the fusion rules are those of the canonical Yang-Lee extension";
    pub const YL_GROUPS: &str = "the universal grading group is isomorphic to the invertibles group";
    pub const YL_SUBRINGS: &str =
        "non-pointed subrings correspond bijectively to subgroups of the grading group via support";
    pub const YL_TRANSITIVE: &str = "invertibles act transitively on the non-invertible basis";
    pub const YL_COMMUTATIVE: &str = "the ring is commutative iff the invertibles group is abelian";
    pub const YL_SPLITTING: &str =
        "a braided Yang-Lee extension splits as adjoint times pointed part";
    pub const Z2_BRAIDED_CASES: &str =
        "a braided extension of the rank-2 pointed ring is pointed, generated by a sqrt(2) simple, or Ising times pointed";
    pub const ISING_EXTENSION: &str = "a braided extension of an Ising ring is Ising times pointed";
}

use statements as st;

fn ids(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Searches for a subgroup `H` of the invertibles with `ring ≅ Ising ⊠ pointed(H)`.
fn ising_times_pointed(ring: &FusionRing, inv: &Invertibles) -> Option<(String, Vec<usize>)> {
    if ring.rank() % 3 != 0 {
        return None;
    }
    let n = ring.rank() / 3;
    for h in inv.group.subgroups() {
        if h.len() != n {
            continue;
        }
        let group = inv.group.subgroup(&h)?;
        let candidate = deligne_product(&ising(), &pointed(&group));
        if let Some(sigma) = find_isomorphism(ring, &candidate) {
            return Some((crate::catalog::named(group).display_name(), sigma));
        }
    }
    None
}

/// Runs every claim whose hypothesis can be decided on `ring`.
pub fn verify_claims(ring: &FusionRing) -> Result<Vec<ClaimReport>, ClassifyError> {
    let fp = fp_dimensions(ring)?;
    let grading = universal_grading(ring)?;
    let inv = invertibles(ring)?;
    let ad = adjoint_subring(ring);
    let ad_ring = ring.restrict(&ad);
    let is_pointed = ring.is_pointed();
    let h_z2 = !is_pointed && ad.rank() == 2 && ad.pointed;
    let h_yl = is_yang_lee(&ad_ring);
    let mut c = Claims(Vec::new());

    const NOT_Z2: &str = "hypothesis not met: not a non-pointed extension of the rank-2 pointed ring";
    const NOT_YL: &str = "hypothesis not met: adjoint subring is not Yang-Lee";

    c.skip(
        "gty-associator-pointed",
        st::ASSOCIATOR_POINTED,
        "associator data is not part of a fusion ring",
    );

    let non_inv: Vec<usize> = (0..ring.rank()).filter(|&i| !ring.is_invertible(i)).collect();
    let n = non_inv.len();
    if h_z2 {
        let gty = is_generalized_ty(ring);
        let bad = non_inv
            .iter()
            .flat_map(|&x| non_inv.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| ring.constituents(x, y).any(|k| !ring.is_invertible(k)));
        c.check(
            "gty-structure",
            st::GTY_STRUCTURE,
            gty,
            if gty {
                "products of non-invertibles are sums of invertibles".into()
            } else {
                "a product of non-invertibles has a non-invertible constituent".into()
            },
            bad.map(|(x, y)| vec![x, y]).unwrap_or_default(),
        );

        let sqrt2_ok = non_inv.iter().all(|&x| (fp.dims[x] - SQRT2).abs() <= DIM_TOLERANCE);
        let type_ok = sqrt2_ok && inv.group.order() == 2 * n;
        let offender = non_inv
            .iter()
            .copied()
            .find(|&x| (fp.dims[x] - SQRT2).abs() > DIM_TOLERANCE);
        c.check(
            "gty-type",
            st::GTY_TYPE,
            type_ok,
            format!("n = {n}, |G| = {}, type {}", inv.group.order(), type_signature(ring)?),
            offender.map(|x| vec![x]).unwrap_or_default(),
        );

        let grading_ok = grading.group.order() == 2 * n;
        c.check(
            "gty-grading",
            st::GTY_GRADING,
            grading_ok,
            format!(
                "adjoint {} of rank 2, |U| = {} = 2n",
                ad,
                grading.group.order()
            ),
            ad.members.clone(),
        );

        let orbits = is_transitive_on_noninvertibles(ring);
        c.check(
            "gty-transitive",
            st::GTY_TRANSITIVE,
            orbits.transitive,
            format!("{} orbit(s) on {n} non-invertibles", orbits.orbits.len()),
            orbits.orbits.get(1).cloned().unwrap_or_default(),
        );

        let sub: Vec<usize> = ad.members.iter().filter_map(|&b| inv.element_of(b)).collect();
        let normal = inv.group.is_normal(&sub);
        c.check(
            "delta-normal",
            st::DELTA_NORMAL,
            normal,
            format!("{{1, {}}} in {}", ring.label(ad.members[1]), inv.group.display_name()),
            ad.members.clone(),
        );
    } else {
        for (id, s) in [
            ("gty-structure", st::GTY_STRUCTURE),
            ("gty-type", st::GTY_TYPE),
            ("gty-grading", st::GTY_GRADING),
            ("gty-transitive", st::GTY_TRANSITIVE),
            ("delta-normal", st::DELTA_NORMAL),
        ] {
            c.skip(id, s, NOT_Z2);
        }
    }

    if is_pointed {
        c.skip("dimension-criterion", st::DIMENSION_CRITERION, "hypothesis not met: ring is pointed");
    } else {
        let dims_ok = has_z2_dimension_set(&fp);
        c.check(
            "dimension-criterion",
            st::DIMENSION_CRITERION,
            dims_ok == h_z2,
            format!("extension: {h_z2}, dimensions {{1, sqrt(2)}}: {dims_ok}"),
            ad.members.clone(),
        );
    }

    if h_z2 && has_z2_dimension_set(&fp) {
        let search = find_ising_subring(ring)?;
        let [a, b, d] = search.predicates();
        let found = match (&search.subring, search.generator) {
            (Some(s), Some(g)) => format!("Ising subring {s} generated by {}", ring.label(g)),
            _ => "no Ising subring".into(),
        };
        c.check(
            "ising-predicates",
            st::ISING_PREDICATES,
            search.agree(),
            format!("predicates ({a}, {b}, {d}); {found}"),
            search.generator.map(|g| vec![g]).unwrap_or_default(),
        );
        if n % 2 == 1 {
            c.check("ising-odd-n", st::ISING_ODD, a, format!("n = {n}; {found}"), non_inv.clone());
        } else {
            c.skip("ising-odd-n", st::ISING_ODD, "hypothesis not met: n is even");
        }
        if grading.group.is_elementary_abelian_2() {
            c.check(
                "ising-elementary-abelian",
                st::ISING_ELEMENTARY,
                a,
                format!("U = {}; {found}", grading.group.display_name()),
                non_inv.clone(),
            );
        } else {
            c.skip(
                "ising-elementary-abelian",
                st::ISING_ELEMENTARY,
                "hypothesis not met: grading group is not elementary abelian 2",
            );
        }
    } else {
        for (id, s) in [
            ("ising-predicates", st::ISING_PREDICATES),
            ("ising-odd-n", st::ISING_ODD),
            ("ising-elementary-abelian", st::ISING_ELEMENTARY),
        ] {
            c.skip(id, s, NOT_Z2);
        }
    }

    if is_generalized_ty(ring) {
        let faithful = faithful_simples(ring)?;
        let has = !faithful.simples.is_empty();
        c.check(
            "faithful-iff-cyclic",
            st::FAITHFUL_CYCLIC,
            has == faithful.grading_cyclic,
            format!(
                "faithful simples {}, U = {} cyclic: {}",
                ids(&faithful.simples),
                faithful.grading.group.display_name(),
                faithful.grading_cyclic
            ),
            faithful.simples.clone(),
        );
    } else {
        c.skip(
            "faithful-iff-cyclic",
            st::FAITHFUL_CYCLIC,
            "hypothesis not met: not generalized Tambara-Yamagami",
        );
    }

    let free_delta = inv.embedding.iter().copied().find(|&d| {
        d != 0
            && ring.single_product(d, d) == Some(0)
            && (0..ring.rank()).all(|x| ring.single_product(d, x) != Some(x))
    });
    match free_delta {
        Some(d) if !is_pointed => {
            let report = even_rank_pairing(ring, d)?;
            let odd = report.classes.iter().find(|cl| !cl.is_even());
            let sizes: Vec<String> = report.classes.iter().map(|cl| cl.members.len().to_string()).collect();
            c.check(
                "delta-pairing",
                st::DELTA_PAIRING,
                report.all_even(),
                format!("delta = {}, class sizes [{}]", ring.label(d), sizes.join(",")),
                odd.map(|cl| cl.members.clone()).unwrap_or_default(),
            );
        }
        _ => c.skip(
            "delta-pairing",
            st::DELTA_PAIRING,
            "hypothesis not met: no freely acting invertible of order 2 on a non-pointed ring",
        ),
    }

    if h_yl {
        let un = grading.group.order();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let sig = type_signature(ring)?;
        c.check(
            "yl-type",
            st::YL_TYPE,
            sig.matches(&[(1.0, un), (phi, un)]),
            format!("type {sig}, n = {un}"),
            non_inv.clone(),
        );

        let bad_component = grading.components.iter().position(|comp| {
            let mut ds: Vec<f64> = comp.iter().map(|&x| fp.dims[x]).collect();
            ds.sort_by(f64::total_cmp);
            !(comp.len() == 2 && (ds[0] - 1.0).abs() <= DIM_TOLERANCE && (ds[1] - phi).abs() <= DIM_TOLERANCE)
        });
        c.check(
            "yl-components",
            st::YL_COMPONENTS,
            bad_component.is_none(),
            format!("{} components checked", grading.components.len()),
            bad_component.map(|g| grading.components[g].clone()).unwrap_or_default(),
        );

        c.check(
            "yl-adjoint",
            st::YL_ADJOINT,
            inv.group.order() == un,
            format!("adjoint {ad}, |G| = {}, |U| = {un}", inv.group.order()),
            ad.members.clone(),
        );

        let canonical = find_isomorphism(ring, &yl_extension(&grading.group));
        c.check(
            "yl-rules",
            st::YL_RULES,
            canonical.is_some(),
            match &canonical {
                Some(s) => format!("isomorphic to the canonical ring via {}", ids(s)),
                None => "no isomorphism to the canonical ring".into(),
            },
            Vec::new(),
        );

        let groups_iso = inv.group.is_isomorphic(&grading.group);
        c.check(
            "yl-groups",
            st::YL_GROUPS,
            groups_iso,
            format!("U = {}, G = {}", grading.group.display_name(), inv.group.display_name()),
            inv.embedding.clone(),
        );

        let subs = all_subrings(ring)?;
        let non_pointed: Vec<&Subring> = subs.iter().filter(|s| !s.pointed).collect();
        let mut supports: Vec<Vec<usize>> = non_pointed.iter().map(|s| grading.support(&s.members)).collect();
        let bad_support = non_pointed
            .iter()
            .zip(&supports)
            .find(|(_, sup)| !grading.group.is_subgroup(sup))
            .map(|(s, _)| s.members.clone());
        supports.sort();
        let injective = supports.windows(2).all(|w| w[0] != w[1]);
        let subgroup_count = grading.group.subgroups().len();
        c.check(
            "yl-subrings",
            st::YL_SUBRINGS,
            bad_support.is_none() && injective && supports.len() == subgroup_count,
            format!(
                "{} non-pointed subrings, {subgroup_count} subgroups of {}",
                non_pointed.len(),
                grading.group.display_name()
            ),
            bad_support.unwrap_or_default(),
        );

        let orbits = is_transitive_on_noninvertibles(ring);
        c.check(
            "yl-transitive",
            st::YL_TRANSITIVE,
            orbits.transitive,
            format!("{} orbit(s)", orbits.orbits.len()),
            orbits.orbits.get(1).cloned().unwrap_or_default(),
        );

        let comm = ring.is_commutative();
        let abelian = inv.group.is_abelian();
        let witness_pair = (0..ring.rank())
            .flat_map(|i| (0..ring.rank()).map(move |j| (i, j)))
            .find(|&(i, j)| ring.product_row(i, j) != ring.product_row(j, i));
        c.check(
            "yl-commutative",
            st::YL_COMMUTATIVE,
            comm == abelian,
            format!("commutative: {comm}, G abelian: {abelian}"),
            witness_pair.map(|(i, j)| vec![i, j]).unwrap_or_default(),
        );

        let pt = crate::structure::pointed_part(ring);
        let split = find_isomorphism(ring, &deligne_product(&ad_ring, &ring.restrict(&pt)));
        match split {
            Some(s) => c.push("yl-splitting", st::YL_SPLITTING, ClaimStatus::Verified, format!("isomorphism {}", ids(&s)), None),
            None => c.skip("yl-splitting", st::YL_SPLITTING, "ring does not split; braiding cannot be tested on a fusion ring"),
        }
        c.mark_ring_level();
    } else {
        for (id, s) in [
            ("yl-type", st::YL_TYPE),
            ("yl-components", st::YL_COMPONENTS),
            ("yl-adjoint", st::YL_ADJOINT),
            ("yl-rules", st::YL_RULES),
            ("yl-groups", st::YL_GROUPS),
            ("yl-subrings", st::YL_SUBRINGS),
            ("yl-transitive", st::YL_TRANSITIVE),
            ("yl-commutative", st::YL_COMMUTATIVE),
        ] {
            c.skip(id, s, NOT_YL);
        }
        c.skip("yl-splitting", st::YL_SPLITTING, NOT_YL);
        c.mark_ring_level();
    }

    if h_z2 {
        let faithful = faithful_simples(ring)?;
        let generated = faithful
            .simples
            .iter()
            .copied()
            .find(|&x| (fp.dims[x] - SQRT2).abs() <= DIM_TOLERANCE);
        let product = ising_times_pointed(ring, &inv);
        let mut cases = Vec::new();
        if let Some(x) = generated {
            cases.push(format!("generated by {}", ring.label(x)));
        }
        if let Some((name, _)) = &product {
            cases.push(format!("Ising x pointed({name})"));
        }
        if cases.is_empty() {
            c.skip(
                "z2-braided-cases",
                st::Z2_BRAIDED_CASES,
                "no case matches, so the ring admits no braiding; braidings are not visible on a fusion ring",
            );
        } else {
            c.push("z2-braided-cases", st::Z2_BRAIDED_CASES, ClaimStatus::Verified, cases.join("; "), None);
        }
    } else if is_pointed {
        c.push("z2-braided-cases", st::Z2_BRAIDED_CASES, ClaimStatus::Inapplicable, "hypothesis not met: ring is pointed", None);
    } else {
        c.skip("z2-braided-cases", st::Z2_BRAIDED_CASES, NOT_Z2);
    }
    c.mark_ring_level();

    match ising_extension_base(ring, &grading) {
        Some(sub) => {
            let product = ising_times_pointed(ring, &inv);
            match product {
                Some((name, s)) => c.push(
                    "ising-extension",
                    st::ISING_EXTENSION,
                    ClaimStatus::Verified,
                    format!("graded over Ising subring {sub}; Ising x pointed({name}) via {}", ids(&s)),
                    None,
                ),
                None => c.skip(
                    "ising-extension",
                    st::ISING_EXTENSION,
                    "ring does not split; braiding cannot be tested on a fusion ring",
                ),
            }
        }
        None => c.skip(
            "ising-extension",
            st::ISING_EXTENSION,
            "hypothesis not met: no Ising subring is the identity component of a grading",
        ),
    }
    c.mark_ring_level();

    Ok(c.0)
}

/// An Ising subring that is the union of the universal grading components
/// over a normal subgroup, i.e. the trivial component of a quotient grading.
fn ising_extension_base(ring: &FusionRing, grading: &Grading) -> Option<Subring> {
    let r = ring.rank();
    for x in 0..r {
        if ring.is_invertible(x) || !ring.is_self_dual(x) {
            continue;
        }
        let sub = ring.closure(&[x]);
        if sub.rank() != 3 || !is_ising(&ring.restrict(&sub)) {
            continue;
        }
        let support = grading.support(&sub.members);
        let union: Vec<usize> = {
            let mut u: Vec<usize> = support
                .iter()
                .flat_map(|&g| grading.components[g].iter().copied())
                .collect();
            u.sort_unstable();
            u
        };
        if union == sub.members && grading.group.is_normal(&support) {
            return Some(sub);
        }
    }
    None
}
