//! Closed hypergeometric forms of `S_m(±ν, ±p)` and the routes built on them.

mod bessel;
pub mod blocks;
pub mod coeff;
mod lemma;
mod literal;
mod split;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use bessel::bessel_special;
pub use blocks::{BlockFamily, Fold, HyperBlock, FOLD_MARGIN};
pub use coeff::{CoeffKind, CoefficientSet};
pub use lemma::lemma_sum;
pub use literal::{s0_closed, sm_closed};
pub use split::sm_split;

use crate::error::{Error, Result};
use crate::params::{Sign, SumSpec};
use crate::pfq::{EvalResult, SeriesConfig, Status};
use crate::sum::CompensatedSum;

/// Which closed evaluator handles a spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dispatch {
    S0,
    Sm,
    Split,
}

impl Dispatch {
    /// `m = 0` first, then `-p` with `m > p`, else the shifted forms.
    pub fn for_spec(spec: &SumSpec) -> Self {
        if spec.m == 0 {
            Dispatch::S0
        } else if spec.sign_p == Sign::Minus && spec.m > spec.p {
            Dispatch::Split
        } else {
            Dispatch::Sm
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Dispatch::S0 => "s0",
            Dispatch::Sm => "sm",
            Dispatch::Split => "split",
        }
    }
}

impl fmt::Display for Dispatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evaluation route selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    Lemma,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Lemma => "lemma",
            Method::Oracle => "oracle",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "lemma" => Ok(Method::Lemma),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::Config(format!("unknown method '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedEval {
    pub dispatch: Dispatch,
    pub result: EvalResult,
}

/// Evaluates `spec` with the closed evaluator chosen by [`Dispatch::for_spec`].
pub fn closed_sum(spec: &SumSpec, cfg: &SeriesConfig) -> Result<ClosedEval> {
    let dispatch = Dispatch::for_spec(spec);
    let result = match dispatch {
        Dispatch::S0 => s0_closed(spec, cfg)?,
        Dispatch::Sm => sm_closed(spec, cfg)?,
        Dispatch::Split => sm_split(spec, cfg)?,
    };
    Ok(ClosedEval { dispatch, result })
}

/// Weighted sum of series results with merged truncation bookkeeping.
#[derive(Debug, Clone)]
pub(crate) struct Accum {
    acc: CompensatedSum,
    terms: usize,
    trunc: f64,
    status: Status,
}

impl Accum {
    pub(crate) fn new() -> Self {
        Self {
            acc: CompensatedSum::new(),
            terms: 0,
            trunc: 0.0,
            status: Status::Terminated,
        }
    }

    pub(crate) fn add(&mut self, weight: f64, r: &EvalResult) {
        self.acc.add(weight * r.value);
        self.terms += r.terms_used;
        self.trunc += weight.abs() * r.trunc_estimate;
        self.status = self.status.max(r.status);
    }

    pub(crate) fn absorb(&mut self, weight: f64, other: Accum) {
        let r = other.finish(1.0);
        self.add(weight, &r);
    }

    pub(crate) fn finish(self, scale: f64) -> EvalResult {
        EvalResult {
            value: scale * self.acc.value(),
            terms_used: self.terms,
            trunc_estimate: scale.abs() * self.trunc,
            status: self.status,
        }
    }
}
