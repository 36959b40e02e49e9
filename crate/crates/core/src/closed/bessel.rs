//! The `m = 1, p = 0` sum in terms of two `₀F₁` series.

use crate::error::{Error, Result};
use crate::gamma::near_nonpositive_integer;
use crate::params::POLE_MARGIN;
use crate::pfq::{pfq_eval, EvalResult, PfqSpec, SeriesConfig};

/// `S₁(ν, 0) = (1 + x/f) ₀F₁(; 1+ν; -x²) - x²/((1+ν) f) ₀F₁(; 2+ν; -x²)`.
pub fn bessel_special(nu: f64, f: f64, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    if !(nu.is_finite() && f.is_finite() && x.is_finite()) {
        return Err(Error::InvalidSpec("nu, f and x must be finite".into()));
    }
    if nu <= -1.0 {
        return Err(Error::InvalidSpec(format!("nu = {nu} must exceed -1")));
    }
    if near_nonpositive_integer(f, POLE_MARGIN) {
        return Err(Error::InvalidSpec(format!(
            "f = {f} is (near) a non-positive integer"
        )));
    }
    let z = -x * x;
    let a = pfq_eval(&PfqSpec::new(vec![], vec![1.0 + nu], z), cfg)?;
    let b = pfq_eval(&PfqSpec::new(vec![], vec![2.0 + nu], z), cfg)?;
    let (wa, wb) = (1.0 + x / f, x * x / ((1.0 + nu) * f));
    Ok(EvalResult {
        value: wa * a.value - wb * b.value,
        terms_used: a.terms_used + b.terms_used,
        trunc_estimate: wa.abs() * a.trunc_estimate + wb.abs() * b.trunc_estimate,
        status: a.status.max(b.status),
    })
}
