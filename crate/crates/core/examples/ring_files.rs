//! Ring files and the command-line front end, driven in-process.

use fusionring::catalog::{self, GroupSpec};
use fusionring::cli::{parse_ring, run, serialize_ring};

fn main() {
    let ring = catalog::yl_extension(&GroupSpec::Cyclic(3).group());
    let text = serialize_ring(&ring);
    print!("{text}");
    assert_eq!(parse_ring(&text).unwrap(), ring);

    let path = std::env::temp_dir().join("fusionring-example-yl3.json");
    std::fs::write(&path, &text).unwrap();
    let out = run(["fusionring", "analyze", path.to_str().unwrap()]);
    print!("{}", out.stdout);
    println!("exit code {}", out.code);
}
