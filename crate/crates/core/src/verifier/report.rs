use std::io::{self, Write};
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// A parameter point. Only the parameters an identity uses are set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Point {
    pub n: Option<u64>,
    pub l: Option<u64>,
    pub t: Option<u64>,
    pub m: Option<u64>,
    pub j: Option<u64>,
}

impl Point {
    pub fn new() -> Self {
        Point::default()
    }

    pub fn n(mut self, v: u64) -> Self {
        self.n = Some(v);
        self
    }

    pub fn l(mut self, v: u64) -> Self {
        self.l = Some(v);
        self
    }

    pub fn t(mut self, v: u64) -> Self {
        self.t = Some(v);
        self
    }

    pub fn m(mut self, v: u64) -> Self {
        self.m = Some(v);
        self
    }

    pub fn j(mut self, v: u64) -> Self {
        self.j = Some(v);
        self
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fields = [("n", self.n), ("l", self.l), ("t", self.t), ("m", self.m), ("j", self.j)];
        let mut first = true;
        for (name, value) in fields {
            if let Some(v) = value {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Outcome of one identity at one point. Values are exact decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub identity: String,
    pub n: Option<u64>,
    pub l: Option<u64>,
    pub t: Option<u64>,
    pub m: Option<u64>,
    pub j: Option<u64>,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub reason: String,
}

impl CheckResult {
    pub fn point(&self) -> Point {
        Point {
            n: self.n,
            l: self.l,
            t: self.t,
            m: self.m,
            j: self.j,
        }
    }

    pub(crate) fn new(identity: &str, point: Point, lhs: String, rhs: String, status: Status, reason: String) -> Self {
        CheckResult {
            identity: identity.to_string(),
            n: point.n,
            l: point.l,
            t: point.t,
            m: point.m,
            j: point.j,
            lhs,
            rhs,
            status,
            reason,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn tally(results: &[CheckResult]) -> Self {
        let mut s = Summary {
            total: results.len(),
            ..Summary::default()
        };
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    pub grid: String,
    pub elapsed: Duration,
    /// Seconds since the Unix epoch at which the sweep started.
    pub generated_at: u64,
}

impl Report {
    pub fn new(mut results: Vec<CheckResult>, grid: String, elapsed: Duration, generated_at: u64) -> Self {
        results.sort_by(|a, b| (&a.identity, a.point()).cmp(&(&b.identity, b.point())));
        let summary = Summary::tally(&results);
        Report {
            results,
            summary,
            grid,
            elapsed,
            generated_at,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn is_success(&self) -> bool {
        self.summary.fail == 0
    }

    /// One JSON object per result, then a summary line. Timing fields are
    /// written only when `with_timing` is set.
    pub fn write_jsonl<W: Write>(&self, mut out: W, with_timing: bool) -> io::Result<()> {
        for r in &self.results {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        let mut summary = serde_json::json!({
            "total": self.summary.total,
            "pass": self.summary.pass,
            "fail": self.summary.fail,
            "skipped": self.summary.skipped,
            "grid": self.grid,
        });
        if with_timing {
            summary["elapsed_ms"] = (self.elapsed.as_millis() as u64).into();
            summary["generated_at_unix"] = self.generated_at.into();
        }
        serde_json::to_writer(&mut out, &serde_json::json!({ "summary": summary }))?;
        out.write_all(b"\n")?;
        out.flush()
    }

    /// Header plus one row per result; no summary row.
    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["identity", "n", "l", "t", "m", "j", "lhs", "rhs", "status", "reason"])?;
        for r in &self.results {
            let cell = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
            w.write_record([
                r.identity.clone(),
                cell(r.n),
                cell(r.l),
                cell(r.t),
                cell(r.m),
                cell(r.j),
                r.lhs.clone(),
                r.rhs.clone(),
                r.status.as_str().to_string(),
                r.reason.clone(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Per-identity tallies, every non-passing row, then the summary.
    pub fn write_human<W: Write>(&self, mut out: W, with_timing: bool) -> io::Result<()> {
        let mut idx = 0;
        while idx < self.results.len() {
            let id = &self.results[idx].identity;
            let end = self.results[idx..]
                .iter()
                .position(|r| &r.identity != id)
                .map_or(self.results.len(), |p| idx + p);
            let group = Summary::tally(&self.results[idx..end]);
            let mark = if group.fail == 0 { "ok  " } else { "FAIL" };
            writeln!(
                out,
                "{mark} {id:<16} {:>6} points  {:>6} pass  {:>4} fail  {:>4} skipped",
                group.total, group.pass, group.fail, group.skipped
            )?;
            for r in &self.results[idx..end] {
                if r.status != Status::Pass {
                    writeln!(
                        out,
                        "       {} [{}] lhs={} rhs={} {}",
                        r.status.as_str(),
                        r.point(),
                        r.lhs,
                        r.rhs,
                        r.reason
                    )?;
                }
            }
            idx = end;
        }
        writeln!(out, "grid: {}", self.grid)?;
        write!(
            out,
            "total {}  pass {}  fail {}  skipped {}",
            self.summary.total, self.summary.pass, self.summary.fail, self.summary.skipped
        )?;
        if with_timing {
            write!(out, "  elapsed {:.3}s  started {}", self.elapsed.as_secs_f64(), self.generated_at)?;
        }
        writeln!(out)?;
        out.flush()
    }
}
