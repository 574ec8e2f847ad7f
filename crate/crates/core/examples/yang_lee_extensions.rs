//! Extensions of the Yang-Lee ring by every group of order at most 8.

use fusionring::catalog::{self, ExtensionBase};
use fusionring::numerics::type_signature;
use fusionring::structure::{invertibles, universal_grading};

fn main() {
    for spec in catalog::groups_up_to_order_8() {
        let g = spec.group();
        let rings = catalog::enumerate_extensions(ExtensionBase::YangLee, &g).unwrap();
        let ring = &rings[0];
        let grading = universal_grading(ring).unwrap();
        let inv = invertibles(ring).unwrap();
        println!(
            "{:>6}: {} ring(s), type {}, U = {}, G = {}, commutative {}",
            spec.name(),
            rings.len(),
            type_signature(ring).unwrap(),
            grading.group.display_name(),
            inv.group.display_name(),
            ring.is_commutative()
        );
    }
}
