mod common;

use common::{brute_force_cos, brute_force_subrings, group, is_ring_isomorphism};
use fusionring::catalog;
use fusionring::cli::{parse_ring, serialize_ring};
use fusionring::numerics::{fp_dimensions, solve_cos_equation, CosTarget};
use fusionring::ring::find_isomorphism;
use fusionring::structure::{all_subrings, universal_grading};
use fusionring::{FusionRing, RingElement};
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

fn pool() -> Vec<FusionRing> {
    vec![
        catalog::ising(),
        catalog::yang_lee(),
        catalog::pointed(&group("Z4")),
        catalog::pointed(&group("S3")),
        catalog::yl_extension(&group("Z3")),
        catalog::yl_extension(&group("S3")),
        catalog::deligne_product(&catalog::ising(), &catalog::pointed(&group("Z2"))),
        catalog::deligne_product(&catalog::ising(), &catalog::yang_lee()),
        catalog::deligne_product(&catalog::ising(), &catalog::ising()),
    ]
}

fn ring_strategy() -> impl Strategy<Value = FusionRing> {
    select(pool())
}

/// A ring with a random permutation of its non-unit basis.
fn permuted_strategy() -> impl Strategy<Value = (FusionRing, Vec<usize>)> {
    ring_strategy().prop_flat_map(|r| {
        let rest: Vec<usize> = (1..r.rank()).collect();
        (Just(r), Just(rest).prop_shuffle()).prop_map(|(r, rest)| {
            let mut perm = vec![0];
            perm.extend(rest);
            (r, perm)
        })
    })
}

fn element(rank: usize) -> impl Strategy<Value = RingElement> {
    proptest::collection::vec(0u64..3, rank).prop_map(|coefficients| RingElement { coefficients })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isomorphism_found_under_relabeling((r, perm) in permuted_strategy()) {
        let p = r.permuted(&perm).unwrap();
        let sigma = find_isomorphism(&r, &p).expect("relabelled ring is isomorphic");
        prop_assert!(is_ring_isomorphism(&r, &p, &sigma));
    }

    #[test]
    fn closure_is_idempotent_and_monotone(
        (r, a, b) in ring_strategy().prop_flat_map(|r| {
            let idx: Vec<usize> = (0..r.rank()).collect();
            let n = idx.len();
            (Just(r), subsequence(idx.clone(), 0..=n), subsequence(idx, 0..=n))
        })
    ) {
        let ca = r.closure(&a);
        prop_assert_eq!(r.closure(&ca.members), ca.clone());
        let mut ab = a.clone();
        ab.extend(&b);
        let cab = r.closure(&ab);
        prop_assert!(ca.is_subset_of(&cab));
        prop_assert!(a.iter().all(|&i| ca.contains(i)));
    }

    #[test]
    fn multiplication_is_associative(
        (r, x, y, z) in ring_strategy().prop_flat_map(|r| {
            let n = r.rank();
            (Just(r), element(n), element(n), element(n))
        })
    ) {
        let left = r.multiply(&r.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = r.multiply(&x, &r.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(r.multiply(&RingElement::unit(r.rank()), &x).unwrap(), x);
    }

    #[test]
    fn ring_files_round_trip((r, perm) in permuted_strategy(), drop_labels in any::<bool>()) {
        let p = r.permuted(&perm).unwrap();
        let p = if drop_labels {
            FusionRing::new(p.duality().to_vec(), p.tensor().to_vec(), None).unwrap()
        } else {
            p
        };
        let text = serialize_ring(&p);
        let back = parse_ring(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(serialize_ring(&back), text);
    }

    #[test]
    fn invariants_survive_relabeling((r, perm) in permuted_strategy()) {
        let p = r.permuted(&perm).unwrap();
        let d = fp_dimensions(&r).unwrap();
        let e = fp_dimensions(&p).unwrap();
        for i in 0..r.rank() {
            prop_assert!((d.dims[i] - e.dims[perm[i]]).abs() < 1e-9);
        }
        prop_assert_eq!(
            universal_grading(&r).unwrap().group.order(),
            universal_grading(&p).unwrap().group.order()
        );
        prop_assert_eq!(all_subrings(&r).unwrap().len(), all_subrings(&p).unwrap().len());
    }

    #[test]
    fn subring_search_matches_subset_scan(r in ring_strategy()) {
        let found: Vec<Vec<usize>> = all_subrings(&r).unwrap().into_iter().map(|s| s.members).collect();
        let mut expected = brute_force_subrings(&r);
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn cos_solver_matches_box_scan(terms in 2usize..=3, bound in 10u32..=40, num in 1u32..8, den in 1u32..8) {
        let target = CosTarget::Rational { num, den };
        let got = solve_cos_equation(terms, target, bound).unwrap();
        prop_assert_eq!(got, brute_force_cos(terms, target.value(), bound));
    }
}
