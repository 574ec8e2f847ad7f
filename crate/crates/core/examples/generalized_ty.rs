//! Generalized Tambara-Yamagami rings and the full pointed-Z2 enumeration.

use fusionring::catalog::{self, ExtensionBase, GroupSpec};
use fusionring::classify::find_ising_subring;
use fusionring::numerics::type_signature;

fn main() {
    let v4 = GroupSpec::Product(vec![2, 2]).group();
    for (i, spec) in catalog::gty_specs(&v4).iter().enumerate() {
        let base: Vec<&str> = spec.base_subgroup.iter().map(|&u| v4.element_label(u)).collect();
        let outcome = match catalog::generalized_ty(spec).unwrap() {
            Some(r) => format!("rank {} type {}", r.rank(), type_signature(&r).unwrap()),
            None => "not associative".to_string(),
        };
        println!(
            "spec {i}: U0 = {{{}}}, G = {}: {outcome}",
            base.join(", "),
            spec.invertible_group.display_name()
        );
    }

    for spec in catalog::groups_up_to_order_8() {
        let rings = catalog::enumerate_extensions(ExtensionBase::PointedZ2, &spec.group()).unwrap();
        let non_pointed: Vec<_> = rings.iter().filter(|r| !r.is_pointed()).collect();
        let with_ising = non_pointed
            .iter()
            .filter(|r| find_ising_subring(r).map(|s| s.contains_ising).unwrap_or(false))
            .count();
        println!(
            "U = {:>6}: {} rings, {} non-pointed, {} with an Ising subring",
            spec.name(),
            rings.len(),
            non_pointed.len(),
            with_ising
        );
    }
}
