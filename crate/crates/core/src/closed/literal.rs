//! The displayed closed forms: `m = 0` with the contracted `F₀` blocks and
//! general `m` with the `F_r` blocks.

use super::blocks::{BlockFamily, HyperBlock};
use super::coeff::{CoeffKind, CoefficientSet};
use super::Accum;
use crate::error::{Error, Result};
use crate::gamma::{binomial, gamma, pochhammer, rgamma};
use crate::params::{SumSpec, Variant};
use crate::pfq::{EvalResult, SeriesConfig};

/// `S₀(±ν, ±p)` from the `m = 0` forms.
pub fn s0_closed(spec: &SumSpec, cfg: &SeriesConfig) -> Result<EvalResult> {
    if spec.m != 0 {
        return Err(Error::Constraint(format!(
            "s0_closed needs m = 0, got m = {}",
            spec.m
        )));
    }
    spec.validate_closed()?;
    literal(spec, BlockFamily::Zero, cfg)
}

/// `S_m(±ν, ±p)` from the shifted forms; for `-p` these need `p ≥ m`.
pub fn sm_closed(spec: &SumSpec, cfg: &SeriesConfig) -> Result<EvalResult> {
    spec.validate_closed()?;
    if spec.sign_p.factor() < 0.0 && spec.m > spec.p {
        return Err(Error::Constraint(format!(
            "the {} closed form needs p >= m (m = {}, p = {}); use the split form",
            spec.variant(),
            spec.m,
            spec.p
        )));
    }
    literal(spec, BlockFamily::Shifted, cfg)
}

fn alt(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn literal(spec: &SumSpec, family: BlockFamily, cfg: &SeriesConfig) -> Result<EvalResult> {
    let SumSpec { m, p, nu, f, x, .. } = *spec;
    let pf = p as f64;
    let variant = spec.variant();
    let block = |which, r, s| HyperBlock::new(family, which, r, s, p, nu);

    let mut total = Accum::new();
    for r in 0..=m {
        let rf = r as f64;
        let (ri, pi) = (r as i32, p as i32);
        let mut inner = Accum::new();
        let weight = match variant {
            Variant::PlusNuPlusP => {
                let j = p + r;
                for s in 0..=j {
                    let c = alt(s) * binomial(j, s)?;
                    let ra = rgamma(CoefficientSet::new(CoeffKind::A, ri, s, nu, pi).bottom());
                    if ra != 0.0 {
                        inner.add(c * ra, &block(1, r, s)?.eval_dup(x, cfg)?);
                    }
                    let rb = rgamma(CoefficientSet::new(CoeffKind::B, ri, s, nu, pi).bottom());
                    if rb != 0.0 {
                        let k = 4.0 * x * (1.0 + nu + rf) / (1.0 + nu + pf + rf);
                        inner.add(-c * rb * k, &block(2, r, s)?.eval_dup(x, cfg)?);
                    }
                }
                (-2.0 * x).powi(r as i32) * gamma(1.0 + nu + rf)?
                    / (pochhammer(f, r) * pochhammer(1.0 + nu + pf, r))
            }
            Variant::PlusNuMinusP => {
                let j = p - r;
                for s in 0..=j {
                    let c = binomial(j, s)?;
                    let ra = rgamma(CoefficientSet::new(CoeffKind::A, -ri, s, nu, -pi).bottom());
                    if ra != 0.0 {
                        inner.add(c * ra, &block(3, r, s)?.eval_dup(x, cfg)?);
                    }
                    let rb = rgamma(CoefficientSet::new(CoeffKind::B, -ri, s, nu, -pi).bottom());
                    if rb != 0.0 {
                        let k = 4.0 * x * (1.0 + nu + rf) / (1.0 + nu);
                        inner.add(-c * rb * k, &block(4, r, s)?.eval_dup(x, cfg)?);
                    }
                }
                (2.0 * x).powi(r as i32) * pochhammer(1.0 + nu, r) / pochhammer(f, r)
            }
            Variant::MinusNuPlusP => {
                let j = p + r;
                for s in 0..=j {
                    let c = alt(s) * binomial(j, s)?;
                    let cc = CoefficientSet::new(CoeffKind::C, ri, s, -nu, pi).value()?;
                    if cc != 0.0 {
                        inner.add(c * cc, &block(5, r, s)?.eval(x, cfg)?);
                    }
                    let dd = CoefficientSet::new(CoeffKind::D, ri, s, -nu, pi).value()?;
                    if dd != 0.0 {
                        let k = 4.0 * x * (1.0 + nu + rf)
                            / ((1.0 + nu) * (1.0 - nu + pf + rf) * (1.0 + pf + rf));
                        inner.add(-c * dd * k, &block(6, r, s)?.eval(x, cfg)?);
                    }
                }
                (-2.0 * x).powi(r as i32) * pochhammer(1.0 + nu, r)
                    / (pochhammer(f, r) * pochhammer(1.0 - nu + pf, r) * pochhammer(1.0 + pf, r))
            }
            Variant::MinusNuMinusP => {
                let j = p - r;
                for s in 0..=j {
                    let c = binomial(j, s)?;
                    let cc = CoefficientSet::new(CoeffKind::C, -ri, s, -nu, -pi).value()?;
                    if cc != 0.0 {
                        inner.add(c * cc, &block(7, r, s)?.eval(x, cfg)?);
                    }
                    let dd = CoefficientSet::new(CoeffKind::D, -ri, s, -nu, -pi).value()?;
                    if dd != 0.0 {
                        let k = 4.0 * x * (1.0 + nu + rf) / ((1.0 + nu) * (1.0 - nu - pf + rf));
                        inner.add(-c * dd * k, &block(8, r, s)?.eval(x, cfg)?);
                    }
                }
                (2.0 * x).powi(r as i32) * pochhammer(1.0 + nu, r)
                    / (pochhammer(f, r) * pochhammer(1.0 - nu - pf, r))
            }
        };
        total.absorb(binomial(m, r)? * weight, inner);
    }

    let scale = match variant {
        Variant::PlusNuPlusP => alt(p) * (2.0 * nu + pf).exp2(),
        Variant::PlusNuMinusP => (2.0 * nu - pf).exp2() * gamma(1.0 + nu - pf)?,
        Variant::MinusNuPlusP => {
            let fact: f64 = (1..=p).map(f64::from).product();
            alt(p) * pf.exp2() / fact
        }
        Variant::MinusNuMinusP => (-pf).exp2(),
    };
    Ok(total.finish(scale))
}
