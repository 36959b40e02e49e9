//! Three-way comparison of the evaluation routes over a grid.

use std::cmp::Ordering;
use std::fmt;

use crate::closed::{closed_sum, lemma_sum, Dispatch};
use crate::error::{Error, Result};
use crate::grid::GridConfig;
use crate::laguerre::oracle_sum;
use crate::params::SumSpec;
use crate::pfq::SeriesConfig;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyStatus {
    Pass,
    /// Tolerance exceeded, or an evaluation error (carried as the reason).
    Fail(Option<String>),
    SkippedInvalid(String),
}

impl VerifyStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, VerifyStatus::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, VerifyStatus::Fail(_))
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, VerifyStatus::SkippedInvalid(_))
    }
}

impl fmt::Display for VerifyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyStatus::Pass => f.write_str("pass"),
            VerifyStatus::Fail(None) => f.write_str("fail"),
            VerifyStatus::Fail(Some(why)) => write!(f, "fail: {why}"),
            VerifyStatus::SkippedInvalid(why) => write!(f, "skipped-invalid: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyRecord {
    pub spec: SumSpec,
    pub dispatch: Option<Dispatch>,
    pub closed: Option<f64>,
    pub lemma: Option<f64>,
    pub oracle: Option<f64>,
    pub abs_err_closed: Option<f64>,
    pub rel_err_closed: Option<f64>,
    pub abs_err_lemma: Option<f64>,
    pub rel_err_lemma: Option<f64>,
    pub terms_oracle: Option<usize>,
    pub status: VerifyStatus,
}

impl VerifyRecord {
    fn empty(spec: SumSpec, status: VerifyStatus) -> Self {
        Self {
            spec,
            dispatch: None,
            closed: None,
            lemma: None,
            oracle: None,
            abs_err_closed: None,
            rel_err_closed: None,
            abs_err_lemma: None,
            rel_err_lemma: None,
            terms_oracle: None,
            status,
        }
    }
}

/// `|a - b| / max(1, |b|)`, the error measure used throughout.
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// Ordering of records in every output: variant, m, p, ν, f, x.
pub fn spec_order(a: &SumSpec, b: &SumSpec) -> Ordering {
    a.variant()
        .cmp(&b.variant())
        .then(a.m.cmp(&b.m))
        .then(a.p.cmp(&b.p))
        .then(a.nu.total_cmp(&b.nu))
        .then(a.f.total_cmp(&b.f))
        .then(a.x.total_cmp(&b.x))
}

/// Compares the closed, intermediate and direct routes at one point.
pub fn verify_point(spec: &SumSpec, tol: f64, series: &SeriesConfig) -> VerifyRecord {
    if let Err(e) = spec.validate_closed() {
        return VerifyRecord::empty(*spec, VerifyStatus::SkippedInvalid(reason(&e)));
    }
    let mut rec = VerifyRecord::empty(*spec, VerifyStatus::Fail(None));
    rec.dispatch = Some(Dispatch::for_spec(spec));
    let oracle = match oracle_sum(spec, series) {
        Ok(o) => o,
        Err(e) => {
            rec.status = VerifyStatus::Fail(Some(format!("oracle: {e}")));
            return rec;
        }
    };
    rec.oracle = Some(oracle.value);
    rec.terms_oracle = Some(oracle.terms_used);

    let closed = closed_sum(spec, series).map(|c| c.result.value);
    let lemma = lemma_sum(spec, series).map(|l| l.value);
    let mut problems = Vec::new();
    match closed {
        Ok(v) => {
            rec.closed = Some(v);
            rec.abs_err_closed = Some((v - oracle.value).abs());
            rec.rel_err_closed = Some(rel_err(v, oracle.value));
        }
        Err(e) => problems.push(format!("closed: {e}")),
    }
    match lemma {
        Ok(v) => {
            rec.lemma = Some(v);
            rec.abs_err_lemma = Some((v - oracle.value).abs());
            rec.rel_err_lemma = Some(rel_err(v, oracle.value));
        }
        Err(e) => problems.push(format!("lemma: {e}")),
    }
    let within = |e: Option<f64>| e.is_some_and(|e| e <= tol);
    rec.status = if !problems.is_empty() {
        VerifyStatus::Fail(Some(problems.join("; ")))
    } else if within(rec.rel_err_closed) && within(rec.rel_err_lemma) {
        VerifyStatus::Pass
    } else {
        VerifyStatus::Fail(None)
    };
    rec
}

/// Evaluation-only record: closed and intermediate values, no oracle.
pub fn table_point(spec: &SumSpec, series: &SeriesConfig) -> VerifyRecord {
    if let Err(e) = spec.validate_closed() {
        return VerifyRecord::empty(*spec, VerifyStatus::SkippedInvalid(reason(&e)));
    }
    let mut rec = VerifyRecord::empty(*spec, VerifyStatus::Pass);
    rec.dispatch = Some(Dispatch::for_spec(spec));
    let mut problems = Vec::new();
    match closed_sum(spec, series) {
        Ok(c) => rec.closed = Some(c.result.value),
        Err(e) => problems.push(format!("closed: {e}")),
    }
    match lemma_sum(spec, series) {
        Ok(l) => rec.lemma = Some(l.value),
        Err(e) => problems.push(format!("lemma: {e}")),
    }
    if !problems.is_empty() {
        rec.status = VerifyStatus::Fail(Some(problems.join("; ")));
    }
    rec
}

fn reason(e: &Error) -> String {
    match e {
        Error::InvalidSpec(msg) => msg.clone(),
        other => other.to_string(),
    }
}

#[cfg(feature = "parallel")]
fn map_points<F>(specs: &[SumSpec], f: F) -> Vec<VerifyRecord>
where
    F: Fn(&SumSpec) -> VerifyRecord + Sync + Send,
{
    use rayon::prelude::*;
    specs.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_points<F>(specs: &[SumSpec], f: F) -> Vec<VerifyRecord>
where
    F: Fn(&SumSpec) -> VerifyRecord,
{
    specs.iter().map(f).collect()
}

/// Sequential evaluation, available regardless of features.
pub fn run_sequential<F>(specs: &[SumSpec], f: F) -> Vec<VerifyRecord>
where
    F: Fn(&SumSpec) -> VerifyRecord,
{
    let mut out: Vec<VerifyRecord> = specs.iter().map(f).collect();
    out.sort_by(|a, b| spec_order(&a.spec, &b.spec));
    out
}

fn run<F>(specs: &[SumSpec], f: F) -> Vec<VerifyRecord>
where
    F: Fn(&SumSpec) -> VerifyRecord + Sync + Send,
{
    let mut out = map_points(specs, f);
    out.sort_by(|a, b| spec_order(&a.spec, &b.spec));
    out
}

fn series_config(grid: &GridConfig) -> SeriesConfig {
    SeriesConfig {
        tol: grid.series_tol,
        max_terms: grid.max_terms,
    }
}

/// One record per grid point, sorted, evaluated in parallel when the
/// `parallel` feature is on.
pub fn verify_grid(grid: &GridConfig) -> Result<Vec<VerifyRecord>> {
    grid.validate()?;
    let series = series_config(grid);
    Ok(run(&grid.specs(), |s| verify_point(s, grid.tol, &series)))
}

pub fn verify_grid_sequential(grid: &GridConfig) -> Result<Vec<VerifyRecord>> {
    grid.validate()?;
    let series = series_config(grid);
    Ok(run_sequential(&grid.specs(), |s| {
        verify_point(s, grid.tol, &series)
    }))
}

pub fn table_grid(grid: &GridConfig) -> Result<Vec<VerifyRecord>> {
    grid.validate()?;
    let series = series_config(grid);
    Ok(run(&grid.specs(), |s| table_point(s, &series)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[VerifyRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                VerifyStatus::Pass => s.passed += 1,
                VerifyStatus::Fail(_) => s.failed += 1,
                VerifyStatus::SkippedInvalid(_) => s.skipped += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.passed, self.failed, self.skipped)
    }
}
