//! Frobenius-Perron dimensions and type signatures of catalog rings.

use fusionring::catalog::{self, GroupSpec};
use fusionring::numerics::{format_dimension, fp_dimensions, type_signature};

fn main() {
    let s3 = GroupSpec::Symmetric3.group();
    let rings = [
        ("Ising", catalog::ising()),
        ("Yang-Lee", catalog::yang_lee()),
        ("Yang-Lee extension by S3", catalog::yl_extension(&s3)),
        ("Ising x Yang-Lee", catalog::deligne_product(&catalog::ising(), &catalog::yang_lee())),
    ];
    for (name, ring) in &rings {
        let fp = fp_dimensions(ring).expect("power iteration converges");
        println!("{name}: type {}", type_signature(ring).unwrap());
        for i in 0..ring.rank() {
            println!("  {:>8}  {}", ring.label(i), format_dimension(fp.dims[i], fp.recognized[i]));
        }
        println!("  global dimension {:.6}, residual {:.1e}", fp.total, fp.consistency_residual(ring));
    }
}
