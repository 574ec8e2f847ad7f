//! Family flags and claim checks for a handful of rings.

use fusionring::catalog::{self, GroupSpec};
use fusionring::classify::{classify, verify_claims, ClaimStatus};

fn main() {
    let z2 = GroupSpec::Cyclic(2).group();
    let rings = [
        ("Ising", catalog::ising()),
        ("Yang-Lee extension by Z4", catalog::yl_extension(&GroupSpec::Cyclic(4).group())),
        ("Ising x pointed(Z2)", catalog::deligne_product(&catalog::ising(), &catalog::pointed(&z2))),
        ("pointed(Z2)", catalog::pointed(&z2)),
    ];
    for (name, ring) in &rings {
        let c = classify(ring).unwrap();
        println!("{name}: {}", c.flags.names().join(", "));
        for claim in verify_claims(ring).unwrap() {
            if claim.status != ClaimStatus::Inapplicable {
                println!("  {:<26} {:<9} {}", claim.id, claim.status, claim.witness);
            }
        }
    }
}
