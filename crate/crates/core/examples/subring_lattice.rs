//! The subring lattice of a Yang-Lee extension and the grading support of
//! each non-pointed subring.

use fusionring::catalog::{self, GroupSpec};
use fusionring::structure::{all_subrings, universal_grading};

fn main() {
    let g = GroupSpec::Product(vec![2, 2]).group();
    let ring = catalog::yl_extension(&g);
    let grading = universal_grading(&ring).unwrap();
    let subs = all_subrings(&ring).unwrap();
    println!("{} subrings of the Yang-Lee extension by {}", subs.len(), g.display_name());
    for s in &subs {
        let labels: Vec<String> = s.members.iter().map(|&i| ring.label(i)).collect();
        if s.pointed {
            println!("  pointed      {{{}}}", labels.join(", "));
        } else {
            let support: Vec<&str> = grading
                .support(&s.members)
                .into_iter()
                .map(|x| grading.group.element_label(x))
                .collect();
            println!("  non-pointed  {{{}}} over {{{}}}", labels.join(", "), support.join(", "));
        }
    }
    println!("subgroups of U(C): {}", grading.group.subgroups().len());
}
