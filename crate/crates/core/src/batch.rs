//! Randomized property suite: generate m-primary ideals, resolve, certify
//! and check every structural property on each instance.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::analysis::{self, Verdict};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::io::format_ideal;
use crate::par::{self, Execution};
use crate::resolution::FreeResolution;
use crate::scarf::{buchberger_graph, scarf_complex};
use crate::taylor::{resolve_with, ResolveOptions, HARD_CAP};
use crate::verify::certify;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub max_exp: u32,
    pub cap: usize,
    pub exec: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            count: 500,
            n_min: 4,
            n_max: 8,
            max_exp: 7,
            cap: crate::taylor::DEFAULT_CAP,
            exec: Execution::default(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 4 || self.n_min > self.n_max {
            return Err(Error::InvalidParameter(format!(
                "need 4 <= n-min <= n-max (got {}..{})",
                self.n_min, self.n_max
            )));
        }
        if self.max_exp < 2 {
            return Err(Error::InvalidParameter(format!(
                "max-exp must be at least 2 (got {})",
                self.max_exp
            )));
        }
        let cap = self.cap.min(HARD_CAP);
        if self.n_max > cap {
            return Err(Error::TooManyGenerators { n: self.n_max, cap });
        }
        Ok(())
    }
}

/// SplitMix64 finalizer, used to derive independent per-instance seeds.
pub fn instance_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The ideal used for instance `index` of a suite.
pub fn instance_ideal(cfg: &SuiteConfig, index: usize) -> Result<MonomialIdeal> {
    let s = instance_seed(cfg.seed, index);
    let span = (cfg.n_max - cfg.n_min + 1) as u64;
    let n = cfg.n_min + (s % span) as usize;
    MonomialIdeal::random_artinian(s, n, cfg.max_exp)
}

/// Names of every property that fails on one resolved instance.
pub fn instance_failures(res: &FreeResolution, seed: u64) -> Result<Vec<String>> {
    let mut failed = Vec::new();
    let mut flag = |ok: bool, name: &str| {
        if !ok {
            failed.push(name.to_string());
        }
    };
    let ideal = &res.ideal;
    let generic = ideal.is_generic();
    let n = res.n();

    let cert = certify(res, seed);
    flag(cert.complex_ok, "complex");
    flag(cert.exactness_ok, "exactness");
    flag(cert.minimality_ok, "minimality");
    flag(cert.multigrade_ok, "multigrade");

    let supports = analysis::f3_column_support(res);
    flag(
        generic == supports.iter().all(|&s| s == 3),
        "generic iff supports are 3",
    );
    flag(
        analysis::check_column_support(res) != Verdict::Fail,
        "three-entry columns are pure",
    );
    flag(analysis::check_f2_bound(res) != Verdict::Fail, "f2 bound");

    if generic {
        let suite = analysis::check_f3_generic_suite(res)?;
        flag(suite.pure_power != Verdict::Fail, "f3 pure powers");
        flag(suite.one_pure != Verdict::Fail, "f3 single monomial from I");
        flag(suite.bound_n_minus_2 != Verdict::Fail, "f3 bound");
        flag(
            analysis::rows_contained_in_ideal(res) <= n - 2,
            "rows in I bound",
        );
        flag(
            analysis::check_sharp_equality(res) != Verdict::Fail,
            "sharp equality",
        );
    }

    let buch = buchberger_graph(ideal).edges;
    let pairs: BTreeSet<(usize, usize)> = res.provenance2.iter().copied().collect();
    flag(pairs.is_subset(&buch), "Buchberger edges contain the pairs");
    flag(
        (pairs == buch) == generic,
        "Buchberger edges equal the pairs iff generic",
    );

    if generic {
        let scarf = scarf_complex(ideal, HARD_CAP, Execution::Sequential)?;
        let triples: BTreeSet<Vec<usize>> = res.provenance3.iter().cloned().collect();
        flag(
            scarf.triangles() == triples,
            "Scarf triangles are the triples",
        );
    }
    Ok(failed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceFailure {
    pub index: usize,
    pub seed: u64,
    pub ideal: String,
    pub failed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub instances: usize,
    pub generic: usize,
    pub skipped: usize,
    pub failures: Vec<InstanceFailure>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Outcome {
    Skipped,
    Checked {
        generic: bool,
        failure: Option<InstanceFailure>,
    },
}

fn run_instance(cfg: &SuiteConfig, index: usize) -> Result<Outcome> {
    let ideal = match instance_ideal(cfg, index) {
        Ok(ideal) => ideal,
        Err(Error::GenerationExhausted { .. }) => return Ok(Outcome::Skipped),
        Err(e) => return Err(e),
    };
    let seed = instance_seed(cfg.seed, index);
    let opts = ResolveOptions {
        cap: cfg.cap,
        ..Default::default()
    };
    let failed = match resolve_with(&ideal, &opts) {
        Ok(res) => instance_failures(&res, seed)?,
        Err(Error::TooManyGenerators { n, cap }) => {
            return Err(Error::TooManyGenerators { n, cap })
        }
        Err(e) => vec![format!("resolve: {e}")],
    };
    Ok(Outcome::Checked {
        generic: ideal.is_generic(),
        failure: (!failed.is_empty()).then(|| InstanceFailure {
            index,
            seed,
            ideal: ideal.to_string(),
            failed,
        }),
    })
}

/// Runs the suite. Instances are independent, so the result does not
/// depend on the execution mode.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteSummary> {
    cfg.validate()?;
    let outcomes = par::map_indices(cfg.count, cfg.exec, |i| run_instance(cfg, i));
    let mut summary = SuiteSummary {
        instances: 0,
        generic: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for outcome in outcomes {
        match outcome? {
            Outcome::Skipped => summary.skipped += 1,
            Outcome::Checked { generic, failure } => {
                summary.instances += 1;
                summary.generic += generic as usize;
                summary.failures.extend(failure);
            }
        }
    }
    Ok(summary)
}

/// Writes each failing ideal to `dir/failure_<index>.ideal` for replay.
pub fn dump_failures(
    cfg: &SuiteConfig,
    summary: &SuiteSummary,
    dir: &Path,
) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for f in &summary.failures {
        let ideal = instance_ideal(cfg, f.index).map_err(std::io::Error::other)?;
        let path = dir.join(format!("failure_{}.ideal", f.index));
        let body = format!(
            "# suite seed {} instance {}\n# failed: {}\n{}",
            cfg.seed,
            f.index,
            f.failed.join(", "),
            format_ideal(&ideal)
        );
        std::fs::write(&path, body)?;
        written.push(path);
    }
    Ok(written)
}
