//! Ring isomorphism search between constructions that agree up to relabeling.

use fusionring::catalog::{self, GroupSpec};
use fusionring::ring::find_isomorphism;

fn main() {
    let z2 = GroupSpec::Cyclic(2).group();
    let a = catalog::yl_extension(&z2);
    let b = catalog::deligne_product(&catalog::yang_lee(), &catalog::pointed(&z2));
    match find_isomorphism(&a, &b) {
        Some(sigma) => {
            for (i, &j) in sigma.iter().enumerate() {
                println!("{} -> {}", a.label(i), b.label(j));
            }
        }
        None => println!("not isomorphic"),
    }

    let q8 = GroupSpec::Quaternion8.group();
    let ring = catalog::yl_extension(&q8);
    let perm: Vec<usize> = std::iter::once(0).chain((1..ring.rank()).rev()).collect();
    let shuffled = ring.permuted(&perm).unwrap();
    println!("relabelled Q8 extension found: {}", find_isomorphism(&ring, &shuffled).is_some());

    let z4 = catalog::pointed(&GroupSpec::Cyclic(4).group());
    let v4 = catalog::pointed(&GroupSpec::Product(vec![2, 2]).group());
    println!("pointed Z4 vs pointed Z2xZ2: {:?}", find_isomorphism(&z4, &v4));
}
