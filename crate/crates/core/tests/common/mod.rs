//! Helpers shared by the integration tests: brute-force oracles written
//! independently of the library, the catalog ring list, schema validation
//! and golden files.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use fusionring::catalog::{self, GroupSpec};
use fusionring::{FiniteGroup, FusionRing};
use serde_json::Value;

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    manifest_dir().join("tests").join("golden")
}

pub fn group(name: &str) -> FiniteGroup {
    name.parse::<GroupSpec>().expect("named group").group()
}

/// Rings named by the axiom-suite criterion, with a description each.
pub fn catalog_rings() -> Vec<(String, FusionRing)> {
    let mut out = vec![
        ("ising".to_string(), catalog::ising()),
        ("yang-lee".to_string(), catalog::yang_lee()),
    ];
    for spec in catalog::named_groups() {
        out.push((format!("pointed({spec})"), catalog::pointed(&spec.group())));
    }
    for spec in catalog::groups_up_to_order_8() {
        out.push((format!("yl_extension({spec})"), catalog::yl_extension(&spec.group())));
    }
    for spec in catalog::groups_up_to_order_8() {
        for (i, gty) in catalog::gty_specs(&spec.group()).iter().enumerate() {
            if let Some(r) = catalog::generalized_ty(gty).expect("valid spec") {
                out.push((format!("generalized_ty({spec}, spec {i})"), r));
            }
        }
    }
    out
}

/// Dense check of every fusion-ring axiom straight from the definitions.
pub fn axioms_hold(r: &FusionRing) -> bool {
    let n = r.rank();
    let d = |i: usize| r.dual(i);
    let c = |i: usize, j: usize, k: usize| r.n(i, j, k) as u64;
    for i in 0..n {
        if d(d(i)) != i {
            return false;
        }
    }
    if d(0) != 0 {
        return false;
    }
    for i in 0..n {
        for k in 0..n {
            let delta = (i == k) as u64;
            if c(0, i, k) != delta || c(i, 0, k) != delta {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if c(i, j, 0) != (j == d(i)) as u64 {
                return false;
            }
            for k in 0..n {
                if c(i, j, k) != c(d(j), d(i), d(k)) || c(i, j, k) != c(d(i), k, j) {
                    return false;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let left: u64 = (0..n).map(|m| c(i, j, m) * c(m, k, l)).sum();
                    let right: u64 = (0..n).map(|m| c(j, k, m) * c(i, m, l)).sum();
                    if left != right {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `σ` is a basis bijection fixing the unit and carrying duals and every
/// structure constant of `a` onto `b`.
pub fn is_ring_isomorphism(a: &FusionRing, b: &FusionRing, sigma: &[usize]) -> bool {
    let n = a.rank();
    if b.rank() != n || sigma.len() != n || sigma[0] != 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return false;
        }
    }
    (0..n).all(|i| sigma[a.dual(i)] == b.dual(sigma[i]))
        && (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| a.n(i, j, k) == b.n(sigma[i], sigma[j], sigma[k])))
        })
}

/// `φ` is a bijective homomorphism `g → h`.
pub fn is_group_isomorphism(g: &FiniteGroup, h: &FiniteGroup, phi: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in phi {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| phi[g.mul(a, b)] == h.mul(phi[a], phi[b])))
}

/// Subgroups of `g` by scanning every subset of elements.
pub fn brute_force_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if set
            .iter()
            .all(|&a| set.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1))
        {
            out.push(set);
        }
    }
    out
}

/// Closed subsets of the basis, by scanning every subset containing the unit.
pub fn brute_force_subrings(r: &FusionRing) -> Vec<Vec<usize>> {
    let n = r.rank();
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = set.iter().all(|&i| mask >> r.dual(i) & 1 == 1)
            && set.iter().all(|&i| {
                set.iter()
                    .all(|&j| (0..n).all(|k| r.n(i, j, k) == 0 || mask >> k & 1 == 1))
            });
        if closed {
            out.push(set);
        }
    }
    out
}

/// Nondecreasing tuples in `[3, bound]` whose `cos²(π/x)` sum hits `target`,
/// by scanning the full box.
pub fn brute_force_cos(terms: usize, target: f64, bound: u32) -> Vec<Vec<u32>> {
    let f = |x: u32| {
        let c = (std::f64::consts::PI / x as f64).cos();
        c * c
    };
    let table: Vec<f64> = (0..=bound).map(|x| if x >= 3 { f(x) } else { 0.0 }).collect();
    let mut out = Vec::new();
    match terms {
        2 => {
            for a in 3..=bound {
                for b in a..=bound {
                    if (table[a as usize] + table[b as usize] - target).abs() <= 1e-12 {
                        out.push(vec![a, b]);
                    }
                }
            }
        }
        3 => {
            for a in 3..=bound {
                for b in a..=bound {
                    for c in b..=bound {
                        let s = table[a as usize] + table[b as usize] + table[c as usize];
                        if (s - target).abs() <= 1e-12 {
                            out.push(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    out
}

pub fn schema() -> Value {
    let text = std::fs::read_to_string(manifest_dir().join("schema").join("report.schema.json"))
        .expect("schema file");
    serde_json::from_str(&text).expect("schema is JSON")
}

/// Validation errors of `report` against the committed schema.
pub fn schema_errors(report: &Value) -> Vec<String> {
    let validator = jsonschema::validator_for(&schema()).expect("schema compiles");
    validator.iter_errors(report).map(|e| format!("{} at {}", e, e.instance_path())).collect()
}

pub fn run_cli(args: &[&str]) -> fusionring::cli::Outcome {
    let mut full = vec!["fusionring"];
    full.extend_from_slice(args);
    fusionring::cli::run(full)
}

/// Inputs for the golden reports.
pub fn golden_rings() -> Vec<(&'static str, FusionRing)> {
    vec![
        ("ising", catalog::ising()),
        ("yang-lee", catalog::yang_lee()),
        ("yl-ext-z3", catalog::yl_extension(&group("Z3"))),
    ]
}

/// `(golden file name, CLI arguments)` for every golden report.
pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let mut cases = Vec::new();
    for (name, _) in golden_rings() {
        let input = golden_dir().join("rings").join(format!("{name}.json"));
        let input = input.to_string_lossy().into_owned();
        for cmd in ["analyze", "classify"] {
            cases.push((format!("{cmd}-{name}.txt"), vec![cmd.to_string(), input.clone()]));
            cases.push((
                format!("{cmd}-{name}.json"),
                vec!["--json".to_string(), cmd.to_string(), input.clone()],
            ));
        }
    }
    for terms in ["2", "3"] {
        let args = vec!["solve-cos".to_string(), "--terms".to_string(), terms.to_string()];
        cases.push((format!("solve-cos-{terms}.txt"), args.clone()));
        let mut json = args;
        json.insert(0, "--json".to_string());
        cases.push((format!("solve-cos-{terms}.json"), json));
    }
    cases
}

/// Compares against the golden file, rewriting it when `UPDATE_GOLDEN` is set.
pub fn check_golden(path: &Path, actual: &str) -> Result<(), String> {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{} differs:\n--- expected\n{expected}\n--- actual\n{actual}", path.display()))
    }
}
