//! Invertibles, adjoint subring, universal grading, nilpotency and faithful
//! simples for a few rings.

use fusionring::catalog::{self, GroupSpec};
use fusionring::structure::{
    adjoint_subring, faithful_simples, invertibles, nilpotency, universal_grading,
};

fn main() {
    let z4 = GroupSpec::Cyclic(4).group();
    let z2 = GroupSpec::Cyclic(2).group();
    let rings = [
        ("Ising", catalog::ising()),
        ("Yang-Lee extension by Z4", catalog::yl_extension(&z4)),
        ("Ising x pointed(Z2)", catalog::deligne_product(&catalog::ising(), &catalog::pointed(&z2))),
    ];
    for (name, ring) in &rings {
        let inv = invertibles(ring).unwrap();
        let grading = universal_grading(ring).unwrap();
        let faithful = faithful_simples(ring).unwrap();
        println!("{name}");
        println!("  G(C) = {} of order {}", inv.group.display_name(), inv.group.order());
        println!("  adjoint subring {}", adjoint_subring(ring));
        println!("  U(C) = {}", grading.group.display_name());
        for (g, comp) in grading.components.iter().enumerate() {
            let labels: Vec<String> = comp.iter().map(|&i| ring.label(i)).collect();
            println!("    {:>6}: {}", grading.group.element_label(g), labels.join(", "));
        }
        match nilpotency(ring) {
            Some(k) => println!("  nilpotency class {k}"),
            None => println!("  not nilpotent"),
        }
        println!("  faithful simples {:?}, U cyclic: {}", faithful.simples, faithful.grading_cyclic);
    }
}
