//! The intermediate representation: a finite sum over `r` of `n`-series
//! whose `₂F₁(-n, -n-ν; c+r; -1)` factors come from the Kummer forms.

use super::Accum;
use crate::error::Result;
use crate::gamma::{binomial, pochhammer};
use crate::kummer::{kummer_special, KummerCase, KummerVariant};
use crate::params::{Sign, SumSpec};
use crate::pfq::{sum_series, EvalResult, SeriesConfig, Step};

/// Kummer specialization and offset for the `₂F₁` denominator `c + r`.
fn kummer_for(spec: &SumSpec, r: u32) -> (KummerVariant, u32) {
    let p = spec.p;
    match (spec.sign_nu, spec.sign_p) {
        (Sign::Plus, Sign::Plus) => (KummerVariant::PlusNuPlusJ, p + r),
        (Sign::Minus, Sign::Plus) => (KummerVariant::MinusNuPlusJ, p + r),
        (Sign::Plus, Sign::Minus) if r <= p => (KummerVariant::PlusNuMinusJ, p - r),
        (Sign::Minus, Sign::Minus) if r <= p => (KummerVariant::MinusNuMinusJ, p - r),
        (Sign::Plus, Sign::Minus) => (KummerVariant::PlusNuPlusJ, r - p),
        (Sign::Minus, Sign::Minus) => (KummerVariant::MinusNuPlusJ, r - p),
    }
}

/// `S_m(±ν, ±p)` through the Kummer-summed intermediate form.
pub fn lemma_sum(spec: &SumSpec, cfg: &SeriesConfig) -> Result<EvalResult> {
    spec.validate()?;
    let SumSpec { m, nu, f, x, .. } = *spec;
    let c = spec.denominator();
    let mut total = Accum::new();
    for r in 0..=m {
        let (variant, j) = kummer_for(spec, r);
        let mut t = 1.0;
        let series = sum_series(cfg, 0, |n| {
            if n > 0 {
                t *= -x / n as f64;
            }
            let case = KummerCase::new(variant, n as u32, nu, j);
            let shift = pochhammer(n as f64 + nu + 1.0, r);
            Ok(Step::Term(t * shift * kummer_special(&case)?))
        })?;
        let w = binomial(m, r)? * x.powi(r as i32) / (pochhammer(f, r) * pochhammer(c, r));
        total.add(w, &series);
    }
    Ok(total.finish(1.0))
}
