//! Truncated power-series evaluation of generalized hypergeometric functions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::DoubleDouble;
use crate::sum::CompensatedSum;

/// Parameters closer than this to a non-positive integer are treated as one.
pub const INTEGER_SNAP: f64 = 1e-12;

/// A generalized hypergeometric series `pFq[a; b; z]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqSpec {
    pub numerators: Vec<f64>,
    pub denominators: Vec<f64>,
    pub argument: f64,
}

impl PfqSpec {
    pub fn new(numerators: Vec<f64>, denominators: Vec<f64>, argument: f64) -> Self {
        Self {
            numerators,
            denominators,
            argument,
        }
    }

    /// `(P, Q)` of `PFQ`.
    pub fn order(&self) -> (usize, usize) {
        (self.numerators.len(), self.denominators.len())
    }

    /// First index past which every parameter shifted by `n` is positive.
    pub(crate) fn positivity_index(&self) -> usize {
        self.numerators
            .iter()
            .chain(&self.denominators)
            .map(|&p| if p < 0.0 { (-p).ceil() as usize + 1 } else { 0 })
            .max()
            .unwrap_or(0)
    }
}

/// How a series evaluation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Terminated,
    Converged,
    MaxTermsHit,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Terminated => "terminated",
            Status::Converged => "converged",
            Status::MaxTermsHit => "max_terms_hit",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Value of a truncated series together with its truncation bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub terms_used: usize,
    /// Magnitude of the first neglected term (zero for terminated series).
    pub trunc_estimate: f64,
    pub status: Status,
}

impl EvalResult {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            terms_used: 0,
            trunc_estimate: 0.0,
            status: Status::Terminated,
        }
    }
}

/// Truncation controls shared by every series loop in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            tol: 1e-14,
            max_terms: 400,
        }
    }
}

/// One step of a series: a term, or the end of a terminating series.
pub(crate) enum Step {
    Term(f64),
    /// A term carried as an unevaluated double-double sum.
    Wide(DoubleDouble),
    End,
}

/// `Π(aᵢ+k) / Π(bⱼ+k) · z/(k+1)`, the ratio of consecutive terms, with the
/// shifted parameters formed exactly.
pub(crate) fn term_ratio(
    numerators: &[f64],
    denominators: &[f64],
    z: f64,
    k: usize,
) -> Result<DoubleDouble> {
    let kk = k as f64;
    let mut ratio = DoubleDouble::new(z).div_dd(DoubleDouble::new(kk + 1.0));
    for &a in numerators {
        ratio = ratio.mul_dd(DoubleDouble::sum(a, kk));
    }
    for &b in denominators {
        let d = DoubleDouble::sum(b, kk);
        if d.value().abs() <= INTEGER_SNAP {
            return Err(Error::DenominatorPole {
                param: b,
                term: k + 1,
            });
        }
        ratio = ratio.div_dd(d);
    }
    Ok(ratio)
}

/// Sums `term(0), term(1), …` with the three-consecutive-small-terms rule.
///
/// A term only counts as small once `n ≥ guard` and it does not exceed the
/// larger of the last two nonzero terms in magnitude, so growing humps never
/// stop the loop while pairwise oscillating tails still do. An exact zero
/// extends a run already in progress but never starts one; three exact zeros
/// in a row (a vanishing argument) end the loop on their own.
pub(crate) fn sum_series<F>(cfg: &SeriesConfig, guard: usize, mut term: F) -> Result<EvalResult>
where
    F: FnMut(usize) -> Result<Step>,
{
    let mut acc = CompensatedSum::new();
    let mut small_run = 0;
    let mut zero_run = 0;
    let mut prev = [f64::INFINITY; 2];
    let mut n = 0;
    loop {
        let t = match term(n)? {
            Step::End => {
                return Ok(EvalResult {
                    value: acc.value(),
                    terms_used: n,
                    trunc_estimate: 0.0,
                    status: Status::Terminated,
                })
            }
            Step::Term(t) => {
                acc.add(t);
                t
            }
            Step::Wide(t) => {
                acc.add(t.hi);
                acc.add(t.lo);
                t.value()
            }
        };
        let partial = acc.value();
        let small = t.abs() <= cfg.tol * partial.abs().max(1.0);
        if t == 0.0 {
            zero_run += 1;
            if small_run > 0 {
                small_run += 1;
            }
        } else {
            zero_run = 0;
            if n >= guard && small && t.abs() <= prev[0].max(prev[1]) {
                small_run += 1;
            } else {
                small_run = 0;
            }
            prev = [prev[1], t.abs()];
        }
        n += 1;
        if small_run >= 3 || (n > guard && zero_run == 3) {
            let next = match term(n)? {
                Step::Term(t) => t.abs(),
                Step::Wide(t) => t.value().abs(),
                Step::End => 0.0,
            };
            return Ok(EvalResult {
                value: partial,
                terms_used: n,
                trunc_estimate: next,
                status: Status::Converged,
            });
        }
        if n >= cfg.max_terms {
            return Ok(EvalResult {
                value: partial,
                terms_used: n,
                trunc_estimate: t.abs(),
                status: Status::MaxTermsHit,
            });
        }
    }
}

/// Smallest `n` such that some numerator parameter equals `-n`.
pub fn is_terminating(spec: &PfqSpec) -> Option<usize> {
    spec.numerators
        .iter()
        .filter_map(|&a| {
            let k = a.round();
            (k <= 0.0 && (a - k).abs() <= INTEGER_SNAP).then_some((-k) as usize)
        })
        .min()
}

/// Evaluates `pFq[a; b; z]` by its defining power series.
///
/// Terms follow the ratio recurrence
/// `t(n+1) = t(n) · Π(aᵢ+n) / Π(bⱼ+n) · z/(n+1)`. A terminating series is
/// summed exactly; a denominator that vanishes before termination is an
/// error.
pub fn pfq_eval(spec: &PfqSpec, cfg: &SeriesConfig) -> Result<EvalResult> {
    let last = is_terminating(spec);
    let mut t = DoubleDouble::ONE;
    sum_series(cfg, spec.positivity_index(), |n| {
        if last.is_some_and(|last| n > last) {
            return Ok(Step::End);
        }
        if n > 0 {
            t = t.mul_dd(term_ratio(
                &spec.numerators,
                &spec.denominators,
                spec.argument,
                n - 1,
            )?);
        }
        Ok(Step::Wide(t))
    })
}
