//! Identity registry, exhaustive grid sweeps and reports.

mod registry;
mod report;

use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use registry::{lookup, registry, Args, Evaluation, IdentitySpec, Param};
pub use report::{CheckResult, Point, Report, Status, Summary};

/// Inclusive upper bounds of a sweep. `n`, `l`, `t` and `j` start at 0,
/// `m` at 1. `t_max` defaults to `n_max`; `j` always runs to `n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridBounds {
    pub n_max: u64,
    pub l_max: u64,
    pub t_max: Option<u64>,
    pub m_max: u64,
}

impl GridBounds {
    pub fn new(n_max: u64, l_max: u64, t_max: Option<u64>, m_max: u64) -> Self {
        GridBounds {
            n_max,
            l_max,
            t_max,
            m_max,
        }
    }

    /// `n <= 10, l <= 6, t <= n, m <= 5`.
    pub fn default_grid() -> Self {
        GridBounds::new(10, 6, None, 5)
    }

    pub fn t_max(&self) -> u64 {
        self.t_max.unwrap_or(self.n_max)
    }

    pub fn describe(&self) -> String {
        format!(
            "n<={} l<={} t<={} m<={} j<={}",
            self.n_max,
            self.l_max,
            self.t_max(),
            self.m_max,
            self.n_max
        )
    }
}

impl Default for GridBounds {
    fn default() -> Self {
        GridBounds::default_grid()
    }
}

fn range_for(spec: &IdentitySpec, p: Param, lo: u64, hi: u64) -> Vec<Option<u64>> {
    if spec.uses(p) {
        (lo..=hi).map(Some).collect()
    } else {
        vec![None]
    }
}

/// Every point of `grid` inside the identity's domain, in sorted order.
pub fn points_for(spec: &IdentitySpec, grid: &GridBounds) -> Vec<Point> {
    let ns = range_for(spec, Param::N, 0, grid.n_max);
    let ls = range_for(spec, Param::L, 0, grid.l_max);
    let ts = range_for(spec, Param::T, 0, grid.t_max());
    let ms = range_for(spec, Param::M, 1, grid.m_max);
    let js = range_for(spec, Param::J, 0, grid.n_max);
    let mut out = Vec::new();
    for &n in &ns {
        for &l in &ls {
            for &t in &ts {
                for &m in &ms {
                    for &j in &js {
                        let point = Point { n, l, t, m, j };
                        if spec.admits(&point).is_ok() {
                            out.push(point);
                        }
                    }
                }
            }
        }
    }
    out
}

fn evaluate(spec: &IdentitySpec, point: Point) -> CheckResult {
    let args = Args::from(&point);
    match (spec.check)(&args) {
        Ok(Evaluation::Equal { lhs, rhs }) => {
            let (status, reason) = if lhs == rhs {
                (Status::Pass, String::new())
            } else {
                (Status::Fail, "lhs != rhs".to_string())
            };
            CheckResult::new(spec.id, point, lhs, rhs, status, reason)
        }
        Ok(Evaluation::Divides { dividend, divisor }) => {
            let r = Evaluation::remainder(&dividend, &divisor);
            let (status, reason) = if r == crate::Integer::from(0) {
                (Status::Pass, String::new())
            } else {
                (Status::Fail, format!("{divisor} does not divide {dividend}"))
            };
            CheckResult::new(spec.id, point, r.to_string(), "0".into(), status, reason)
        }
        Ok(Evaluation::NotDivides { dividend, divisor }) => {
            let r = Evaluation::remainder(&dividend, &divisor);
            let (status, reason) = if r != crate::Integer::from(0) {
                (Status::Pass, String::new())
            } else {
                (Status::Fail, format!("{divisor} divides {dividend}"))
            };
            CheckResult::new(spec.id, point, r.to_string(), "0".into(), status, reason)
        }
        Err(e) => CheckResult::new(spec.id, point, String::new(), String::new(), Status::Fail, e.to_string()),
    }
}

/// Runs one identity at one point. Points outside the domain come back
/// `skipped` with the reason.
pub fn run_check(id: &str, point: &Point) -> Result<CheckResult> {
    let spec = lookup(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    let point = spec.project(point);
    if let Err(reason) = spec.admits(&point) {
        return Ok(CheckResult::new(
            spec.id,
            point,
            String::new(),
            String::new(),
            Status::Skipped,
            reason,
        ));
    }
    Ok(evaluate(spec, point))
}

/// Evaluates each identity over its domain within `grid` on `jobs` worker
/// threads. The report order does not depend on `jobs`.
pub fn sweep<S: AsRef<str>>(ids: &[S], grid: &GridBounds, jobs: usize) -> Result<Report> {
    if jobs == 0 {
        return Err(Error::Domain("worker count must be at least 1".into()));
    }
    let specs = ids
        .iter()
        .map(|id| lookup(id.as_ref()).ok_or_else(|| Error::UnknownIdentity(id.as_ref().to_string())))
        .collect::<Result<Vec<_>>>()?;

    let generated_at = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let start = Instant::now();

    let mut seen = std::collections::HashSet::new();
    let work: Vec<(&IdentitySpec, Point)> = specs
        .into_iter()
        .filter(|s| seen.insert(s.id))
        .flat_map(|s| points_for(s, grid).into_iter().map(move |p| (s, p)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    let results: Vec<CheckResult> = pool.install(|| {
        work.into_par_iter()
            .map(|(spec, point)| evaluate(spec, point))
            .collect()
    });

    Ok(Report::new(results, grid.describe(), start.elapsed(), generated_at))
}

/// Ids of every registered identity.
pub fn all_ids() -> Vec<&'static str> {
    registry().iter().map(|s| s.id).collect()
}
