//! Checks the ring axioms on a catalog ring and on a damaged copy.

use fusionring::catalog;
use fusionring::ring::verify_axioms;
use fusionring::FusionRing;

fn main() {
    let ising = catalog::ising();
    println!("Ising valid: {}", verify_axioms(&ising).is_valid());

    // Drop the unit from X ⊗ X, leaving X ⊗ X = delta.
    let r = ising.rank();
    let mut n = ising.tensor().to_vec();
    n[(2 * r + 2) * r] = 0;
    let broken = FusionRing::new(ising.duality().to_vec(), n, ising.labels().map(<[_]>::to_vec))
        .expect("still structurally well formed");
    let report = verify_axioms(&broken);
    println!("damaged copy valid: {}", report.is_valid());
    for v in &report.violations {
        println!("  {v}");
    }

    // Structural problems are rejected before any axiom is checked.
    let err = FusionRing::new(vec![1, 0], vec![0; 8], None).unwrap_err();
    println!("structural error: {err}");
}
