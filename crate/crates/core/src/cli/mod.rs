//! Command-line front end.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! with the rendered output, so the binary stays a thin wrapper and tests can
//! drive the CLI in-process.

pub mod report;
pub mod ringfile;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{self, ExtensionBase, GroupSpec};
use crate::classify::{classify, verify_claims};
use crate::numerics::{fp_dimensions, solve_cos_equation, CosTarget};
use crate::ring::{find_isomorphism, verify_axioms, FusionRing};
use crate::structure::{
    adjoint_subring, all_subrings, faithful_simples, invertibles, nilpotency, universal_grading,
};

pub use report::Report;
pub use ringfile::{parse_ring, serialize_ring, RingFileError};

/// Reserved for randomized algorithms; every current command is deterministic.
pub const SEED_VAR: &str = "FUSIONRING_SEED";

#[derive(Parser, Debug)]
#[command(name = "fusionring", version, about = "Fusion ring toolkit")]
struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the fusion ring axioms.
    Verify { file: PathBuf },
    /// Dimensions, invertibles, adjoint subring, universal grading, nilpotency.
    Analyze { file: PathBuf },
    /// Family flags and the claim checks.
    Classify { file: PathBuf },
    /// Every subring, tagged pointed or non-pointed.
    Subrings { file: PathBuf },
    /// Search for a basis permutation between two rings.
    Iso { first: PathBuf, second: PathBuf },
    /// Emit a named ring.
    Catalog {
        name: CatalogName,
        #[arg(long)]
        group: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit every extension of a rank-2 base by a grading group.
    Enumerate {
        #[arg(long)]
        base: String,
        #[arg(long)]
        group: String,
        /// Directory receiving one ring file per result.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Integral solutions of a sum of cos²(π/x) equal to a target.
    SolveCos {
        #[arg(long)]
        terms: usize,
        #[arg(long, default_value_t = 100)]
        bound: u32,
        /// `golden` for (5+sqrt(5))/8, or a fraction `p/q`.
        #[arg(long, default_value = "golden")]
        target: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CatalogName {
    Ising,
    YangLee,
    Pointed,
    YlExt,
    YlPointed,
    IsingPointed,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn read_ring(path: &Path) -> Result<FusionRing, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    parse_ring(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn read_valid_ring(path: &Path) -> Result<FusionRing, Failure> {
    let ring = read_ring(path)?;
    let report = verify_axioms(&ring);
    match report.violations.first() {
        None => Ok(ring),
        Some(v) => Err(Failure::Domain(format!(
            "{}: not a fusion ring ({v}); run verify for the full list",
            path.display()
        ))),
    }
}

fn parse_group(name: &str) -> Result<crate::FiniteGroup, Failure> {
    Ok(name.parse::<GroupSpec>()?.group())
}

fn parse_target(s: &str) -> Result<CosTarget, Failure> {
    if s == "golden" {
        return Ok(CosTarget::GOLDEN);
    }
    let parsed = s
        .split_once('/')
        .and_then(|(p, q)| Some((p.trim().parse::<u32>().ok()?, q.trim().parse::<u32>().ok()?)));
    match parsed {
        Some((num, den)) if den > 0 => Ok(CosTarget::Rational { num, den }),
        _ => Err(Failure::Usage(format!("invalid target {s:?}; expected golden or p/q"))),
    }
}

fn catalog_ring(name: CatalogName, group: Option<&str>) -> Result<FusionRing, Failure> {
    let needs_group = || {
        group
            .ok_or_else(|| Failure::Usage("this catalog entry requires --group".into()))
            .and_then(parse_group)
    };
    Ok(match name {
        CatalogName::Ising => catalog::ising(),
        CatalogName::YangLee => catalog::yang_lee(),
        CatalogName::Pointed => catalog::pointed(&needs_group()?),
        CatalogName::YlExt => catalog::yl_extension(&needs_group()?),
        CatalogName::YlPointed => {
            catalog::deligne_product(&catalog::yang_lee(), &catalog::pointed(&needs_group()?))
        }
        CatalogName::IsingPointed => {
            catalog::deligne_product(&catalog::ising(), &catalog::pointed(&needs_group()?))
        }
    })
}

fn catalog_label(name: CatalogName) -> &'static str {
    match name {
        CatalogName::Ising => "ising",
        CatalogName::YangLee => "yang-lee",
        CatalogName::Pointed => "pointed",
        CatalogName::YlExt => "yl-ext",
        CatalogName::YlPointed => "yl-pointed",
        CatalogName::IsingPointed => "ising-pointed",
    }
}

fn execute(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Verify { file } => Ok(report::verify(&verify_axioms(&read_ring(&file)?))),
        Command::Analyze { file } => {
            let ring = read_valid_ring(&file)?;
            let fp = fp_dimensions(&ring)?;
            let inv = invertibles(&ring)?;
            let adjoint = adjoint_subring(&ring);
            let grading = universal_grading(&ring)?;
            let faithful = faithful_simples(&ring)?;
            Ok(report::analyze(&report::Analysis {
                ring: &ring,
                fp: &fp,
                invertibles: &inv,
                adjoint: &adjoint,
                grading: &grading,
                nilpotency: nilpotency(&ring),
                faithful: &faithful,
            }))
        }
        Command::Classify { file } => {
            let ring = read_valid_ring(&file)?;
            let c = classify(&ring)?;
            let claims = verify_claims(&ring)?;
            Ok(report::classify(&ring, &c, &claims))
        }
        Command::Subrings { file } => {
            let ring = read_valid_ring(&file)?;
            Ok(report::subrings(&ring, &all_subrings(&ring)?))
        }
        Command::Iso { first, second } => {
            let a = read_valid_ring(&first)?;
            let b = read_valid_ring(&second)?;
            let sigma = find_isomorphism(&a, &b);
            Ok(report::iso(&a, &b, sigma.as_deref()))
        }
        Command::Catalog { name, group, output } => {
            let ring = catalog_ring(name, group.as_deref())?;
            let path = match &output {
                Some(p) => {
                    fs::write(p, serialize_ring(&ring))
                        .map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?;
                    Some(p.display().to_string())
                }
                None => None,
            };
            Ok(report::catalog(catalog_label(name), &ring, path.as_deref()))
        }
        Command::Enumerate { base, group, output } => {
            let base: ExtensionBase = base.parse().map_err(Failure::Usage)?;
            let g = parse_group(&group)?;
            let rings = catalog::enumerate_extensions(base, &g)?;
            let mut paths = Vec::new();
            if let Some(dir) = &output {
                fs::create_dir_all(dir).map_err(|e| Failure::Domain(format!("{}: {e}", dir.display())))?;
                for (i, r) in rings.iter().enumerate() {
                    let p = dir.join(format!("{base}-{group}-{i}.json"));
                    fs::write(&p, serialize_ring(r))
                        .map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?;
                    paths.push(p.display().to_string());
                }
            }
            Ok(report::enumerate(base, &group, &rings, &paths))
        }
        Command::SolveCos { terms, bound, target } => {
            let target = parse_target(&target)?;
            let solutions = solve_cos_equation(terms, target, bound)?;
            Ok(report::solve_cos(terms, bound, target, &solutions))
        }
    }
}

/// Runs one command line (including the program name) to completion.
///
/// Exit codes: 0 on success, 1 for domain errors and negative verdicts
/// (axioms fail, not isomorphic, a refuted claim), 2 for usage errors.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _seed = std::env::var(SEED_VAR).ok();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match execute(cli.command) {
        Ok(report) => Outcome {
            code: report.code,
            stdout: report.render(cli.json),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}
