//! A catalog of named identity checks with structured reports.
//!
//! Every check is a list of exact braid equalities (and a few required
//! inequalities) decided by the [`Oracle`]. A check runs at one strand
//! count `n`; outside its supported range it reports `skip`.

mod checks;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::brunnian::SamplerParams;
use crate::error::{Error, Result};
use crate::oracle::Oracle;

/// Version of the JSON report layout.
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub seed: u64,
    pub status: Status,
    /// On pass, the first verified relation and a count; on fail, the
    /// offending word pair; on skip, the reason.
    pub witness: String,
    pub elapsed_ms: u64,
}

/// A batch of reports with totals.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub version: u32,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub reports: Vec<CheckReport>,
}

impl RunReport {
    pub fn new(reports: Vec<CheckReport>) -> Self {
        let count = |s| reports.iter().filter(|r| r.status == s).count();
        RunReport {
            version: REPORT_VERSION,
            total: reports.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skip),
            reports,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Catalog entry.
#[derive(Clone, Copy, Debug)]
pub struct CheckInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub min_n: usize,
    pub max_n: usize,
    /// Excluded from [`run_all`]; used for negative controls.
    pub control: bool,
    run: fn(&mut Ctx) -> Result<()>,
}

impl CheckInfo {
    pub fn supports(&self, n: usize) -> bool {
        (self.min_n..=self.max_n).contains(&n)
    }
}

pub fn catalog() -> &'static [CheckInfo] {
    checks::CATALOG
}

pub fn find(id: &str) -> Option<&'static CheckInfo> {
    catalog().iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Runs one check at `n`.
pub fn run_check(id: &str, n: usize, params: &SamplerParams, oracle: &Oracle) -> Result<CheckReport> {
    let pos = catalog()
        .iter()
        .position(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    params.validate()?;
    Ok(run_entry(pos, n, params, oracle))
}

/// Runs every non-control check at every `n` in `ns`, ordered by catalog
/// position and then by `n`.
pub fn run_all<I>(ns: I, params: &SamplerParams, oracle: &Oracle) -> Result<Vec<CheckReport>>
where
    I: IntoIterator<Item = usize>,
{
    params.validate()?;
    let ns: Vec<usize> = ns.into_iter().collect();
    let jobs: Vec<(usize, usize)> = catalog()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.control)
        .flat_map(|(pos, _)| ns.iter().map(move |&n| (pos, n)))
        .collect();
    Ok(jobs.into_par_iter().map(|(pos, n)| run_entry(pos, n, params, oracle)).collect())
}

fn run_entry(pos: usize, n: usize, params: &SamplerParams, oracle: &Oracle) -> CheckReport {
    let info = &catalog()[pos];
    let start = Instant::now();
    let report = |status, witness| CheckReport {
        check: info.id.to_string(),
        n,
        seed: params.seed,
        status,
        witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    if !info.supports(n) {
        let reason = format!("n = {n} outside supported range {}..={}", info.min_n, info.max_n);
        return report(Status::Skip, reason);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(((pos as u64) << 16) | n as u64);
    let mut ctx = Ctx { n, oracle: *oracle, params: *params, rng, verified: 0, first: None, failures: Vec::new() };
    match (info.run)(&mut ctx) {
        Err(e) if e.is_resource_limit() => report(Status::Skip, format!("resource limit: {e}")),
        Err(e) => report(Status::Fail, format!("error: {e}")),
        Ok(()) if !ctx.failures.is_empty() => {
            let more = ctx.failures.len() - 1;
            let mut w = ctx.failures.swap_remove(0);
            if more > 0 {
                w.push_str(&format!(" (and {more} more)"));
            }
            report(Status::Fail, w)
        }
        Ok(()) => {
            let first = ctx.first.take().unwrap_or_default();
            report(Status::Pass, format!("{first} ({} relations verified)", ctx.verified))
        }
    }
}

/// Execution state handed to each check.
pub(crate) struct Ctx {
    pub n: usize,
    pub oracle: Oracle,
    pub params: SamplerParams,
    pub rng: ChaCha8Rng,
    verified: usize,
    first: Option<String>,
    failures: Vec<String>,
}

impl Ctx {
    fn pass(&mut self, what: String) {
        self.verified += 1;
        if self.first.is_none() {
            self.first = Some(what);
        }
    }

    /// Decides `lhs ≡ rhs` by the Artin action, or by handle reduction when
    /// the Artin images outgrow their cap.
    fn same(&self, lhs: &BraidWord, rhs: &BraidWord) -> Result<bool> {
        match self.oracle.equal(lhs, rhs) {
            Err(Error::FreeLengthLimit { .. }) => {
                self.oracle.is_trivial_dehornoy(&lhs.concat(&rhs.inverse())?.free_cancel())
            }
            verdict => verdict,
        }
    }

    /// Requires `lhs ≡ rhs`.
    pub fn equal(&mut self, what: impl Into<String>, lhs: &BraidWord, rhs: &BraidWord) -> Result<()> {
        let what = what.into();
        if self.same(lhs, rhs)? {
            self.pass(what);
        } else {
            self.failures.push(format!("{what} fails: {} != {}", lhs.free_cancel(), rhs.free_cancel()));
        }
        Ok(())
    }

    /// Requires `lhs ≢ rhs`.
    pub fn differ(&mut self, what: impl Into<String>, lhs: &BraidWord, rhs: &BraidWord) -> Result<()> {
        let what = what.into();
        if self.same(lhs, rhs)? {
            self.failures.push(format!("{what} fails: {} == {}", lhs.free_cancel(), rhs.free_cancel()));
        } else {
            self.pass(what);
        }
        Ok(())
    }

    /// Requires `u ≡ 1`.
    pub fn trivial(&mut self, what: impl Into<String>, u: &BraidWord) -> Result<()> {
        self.equal(what, u, &BraidWord::identity(u.strands()))
    }

    /// Requires a predicate; `witness` names the offending word.
    pub fn holds(&mut self, what: impl Into<String>, ok: bool, witness: impl std::fmt::Display) {
        let what = what.into();
        if ok {
            self.pass(what);
        } else {
            self.failures.push(format!("{what} fails for {witness}"));
        }
    }
}
