//! Generalized Laguerre polynomials and the direct-series oracle.

use crate::error::Result;
use crate::params::SumSpec;
use crate::pfq::{sum_series, EvalResult, SeriesConfig, Step};

/// `L_0^{(ν)}(x), …, L_N^{(ν)}(x)` at a fixed point.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreSeq {
    pub nu: f64,
    pub x: f64,
    pub values: Vec<f64>,
}

/// Incremental three-term recurrence, one polynomial per call.
#[derive(Debug, Clone)]
struct Recurrence {
    nu: f64,
    x: f64,
    n: usize,
    prev: f64,
    cur: f64,
}

impl Recurrence {
    fn new(nu: f64, x: f64) -> Self {
        Self {
            nu,
            x,
            n: 0,
            prev: 0.0,
            cur: 1.0,
        }
    }

    /// Returns `L_n` and advances to `n + 1`.
    fn next_value(&mut self) -> f64 {
        let out = self.cur;
        let n = (self.n + 1) as f64;
        let next = if self.n == 0 {
            1.0 - self.x + self.nu
        } else {
            ((2.0 * n - 1.0 + self.nu - self.x) * self.cur - (n - 1.0 + self.nu) * self.prev) / n
        };
        self.prev = self.cur;
        self.cur = next;
        self.n += 1;
        out
    }
}

/// Evaluates `L_n^{(ν)}(x)` for `n = 0..=n_max` by
/// `n L_n = (2n-1+ν-x) L_{n-1} - (n-1+ν) L_{n-2}`.
pub fn laguerre_seq(nu: f64, x: f64, n_max: usize) -> LaguerreSeq {
    let mut rec = Recurrence::new(nu, x);
    let values = (0..=n_max).map(|_| rec.next_value()).collect();
    LaguerreSeq { nu, x, values }
}

/// Direct summation of `e^{-x} Σ xⁿ Lₙ^{(ν)}(x) (f+m)ₙ / ((c)ₙ (f)ₙ)`.
pub fn oracle_sum(spec: &SumSpec, cfg: &SeriesConfig) -> Result<EvalResult> {
    spec.validate()?;
    let SumSpec { m, nu, f, x, .. } = *spec;
    let c = spec.denominator();
    let top = f + m as f64;
    let guard = [c, f]
        .iter()
        .map(|&p| if p < 0.0 { (-p).ceil() as usize + 1 } else { 0 })
        .max()
        .unwrap_or(0);

    let mut lag = Recurrence::new(nu, x);
    let mut weight = 1.0;
    let mut res = sum_series(cfg, guard, |n| {
        if n > 0 {
            let k = (n - 1) as f64;
            weight *= x * (top + k) / ((c + k) * (f + k));
        }
        Ok(Step::Term(weight * lag.next_value()))
    })?;
    let scale = (-x).exp();
    res.value *= scale;
    res.trunc_estimate *= scale;
    Ok(res)
}
