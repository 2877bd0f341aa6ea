//! Verification reports.
//!
//! Reports are deterministic in (algebra, seed, count, max-dim, laws, version); wall time is
//! printed separately so the JSON stays byte-stable.

use serde::Serialize;
use stabhom_core::algebra::Algebra;

use crate::format::AlgebraFile;
use crate::laws::{find_law, law_names, Catalog, GenerationStats, Tally, Witness};

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraDescriptor {
    pub dim: usize,
    pub vertices: usize,
    pub arrows: usize,
    pub definition: AlgebraFile,
}

impl AlgebraDescriptor {
    pub fn new(algebra: &Algebra) -> AlgebraDescriptor {
        AlgebraDescriptor {
            dim: algebra.dim(),
            vertices: algebra.num_vertices(),
            arrows: algebra.num_arrows(),
            definition: AlgebraFile::from_algebra(algebra),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub name: String,
    pub passed: bool,
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counts {
    pub modules_tested: usize,
    pub checks_run: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub algebra: AlgebraDescriptor,
    pub seed: u64,
    pub count: usize,
    pub max_dim: usize,
    pub counts: Counts,
    pub generation: GenerationStats,
    pub laws: Vec<LawReport>,
    pub passed: bool,
}

#[derive(Debug, thiserror::Error)]
#[error("unknown law {0:?}; known laws: {known}", known = law_names().collect::<Vec<_>>().join(", "))]
pub struct UnknownLaw(pub String);

/// Resolves a law filter; `None` selects every law. The result is sorted and deduplicated.
pub fn select_laws(filter: Option<&[String]>) -> Result<Vec<&'static str>, UnknownLaw> {
    let Some(names) = filter else {
        return Ok(law_names().collect());
    };
    let mut out = Vec::new();
    for n in names {
        let found = law_names().find(|l| l == n).ok_or_else(|| UnknownLaw(n.clone()))?;
        out.push(found);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn run_law(catalog: &Catalog, name: &str) -> LawReport {
    let law = find_law(name).expect("selected laws exist");
    let mut tally = Tally::default();
    let outcome = law(catalog, &mut tally);
    LawReport { name: name.to_string(), passed: outcome.is_ok(), checks: tally.checks, witness: outcome.err() }
}

/// Generates the catalog and runs `laws` on it, in parallel; the report lists laws by name.
pub fn verify(algebra: &Algebra, seed: u64, count: usize, max_dim: usize, laws: &[&str]) -> VerificationReport {
    let catalog = Catalog::generate(algebra, seed, count, max_dim);
    let mut reports: Vec<LawReport> = std::thread::scope(|s| {
        let handles: Vec<_> = laws.iter().map(|name| s.spawn(|| run_law(&catalog, name))).collect();
        handles.into_iter().map(|h| h.join().expect("law panicked")).collect()
    });
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    let modules_tested = catalog.left.len() + catalog.right.len() + catalog.left_probes.len() + catalog.right_probes.len();
    let checks_run = reports.iter().map(|r| r.checks).sum();
    VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        algebra: AlgebraDescriptor::new(algebra),
        seed,
        count,
        max_dim,
        counts: Counts { modules_tested, checks_run },
        generation: catalog.stats.clone(),
        passed: reports.iter().all(|r| r.passed),
        laws: reports,
    }
}
