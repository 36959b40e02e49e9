//! `S_m(±ν, -p)` for `m > p`.
//!
//! Each `r`-term is `C(m,r) xʳ/((f)_r (c)_r)` times an `n`-series whose inner
//! `₂F₁(-1)` is one of the four Kummer specializations with offset `j`. The
//! terms with `r ≤ p` use the `-j` forms with `j = p - r`, the rest the `+j`
//! forms with `j = r - p`. Splitting that `n`-series into even and odd
//! powers gives two `-x²` series per summation index `s`.

use super::blocks::{dup_scaled, Fold};
use super::Accum;
use crate::error::{Error, Result};
use crate::gamma::{binomial, gamma, gamma_ratio, pochhammer, rgamma};
use crate::kummer::KummerVariant;
use crate::params::{Sign, SumSpec};
use crate::pfq::{pfq_eval, EvalResult, PfqSpec, SeriesConfig};

/// The split form of `S_m(±ν, -p)`, `m > p`.
pub fn sm_split(spec: &SumSpec, cfg: &SeriesConfig) -> Result<EvalResult> {
    if spec.sign_p != Sign::Minus || spec.m <= spec.p {
        return Err(Error::Constraint(format!(
            "the split form needs sign_p = - and m > p (variant {}, m = {}, p = {})",
            spec.variant(),
            spec.m,
            spec.p
        )));
    }
    spec.validate_closed()?;
    let SumSpec { m, p, nu, f, x, .. } = *spec;
    let c = spec.denominator();
    let mut total = Accum::new();
    for r in 0..=m {
        let (variant, j) = match (spec.sign_nu, r <= p) {
            (Sign::Plus, true) => (KummerVariant::PlusNuMinusJ, p - r),
            (Sign::Minus, true) => (KummerVariant::MinusNuMinusJ, p - r),
            (Sign::Plus, false) => (KummerVariant::PlusNuPlusJ, r - p),
            (Sign::Minus, false) => (KummerVariant::MinusNuPlusJ, r - p),
        };
        let term = offset_series(variant, j, r, nu, x, cfg)?;
        let w = binomial(m, r)? * x.powi(r as i32) / (pochhammer(f, r) * pochhammer(c, r));
        total.add(w, &term);
    }
    Ok(total.finish(1.0))
}

/// `Σₙ (-x)ⁿ/n! (n+ν+1)_r ₂F₁(-n, -n-ν; 1±ν±j; -1)` in closed form.
pub(crate) fn offset_series(
    variant: KummerVariant,
    j: u32,
    r: u32,
    nu: f64,
    x: f64,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    let (jf, rf) = (j as f64, r as f64);
    let alpha = 1.0 + nu + rf;
    let sign_j = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let (scale, alternating, nums, dens, gamma_fold): (f64, bool, Vec<f64>, Vec<f64>, Option<f64>) =
        match variant {
            KummerVariant::PlusNuPlusJ => (
                sign_j * (2.0 * nu + jf).exp2() * gamma(1.0 + nu + rf)?,
                true,
                vec![alpha],
                vec![1.0 + nu + jf],
                Some(1.0 + 2.0 * nu + jf),
            ),
            KummerVariant::PlusNuMinusJ => (
                (2.0 * nu - jf).exp2() * gamma(1.0 + nu - jf)? * pochhammer(1.0 + nu, r),
                false,
                vec![alpha],
                vec![1.0 + nu],
                Some(1.0 + 2.0 * nu - jf),
            ),
            KummerVariant::MinusNuPlusJ => (
                sign_j * jf.exp2() * pochhammer(1.0 + nu, r) * rgamma(1.0 + jf),
                true,
                vec![alpha, 1.0],
                vec![1.0 + nu, 1.0 + jf, 1.0 - nu + jf],
                None,
            ),
            KummerVariant::MinusNuMinusJ => (
                (-jf).exp2() * pochhammer(1.0 + nu, r),
                false,
                vec![alpha],
                vec![1.0 + nu, 1.0 - nu - jf],
                None,
            ),
        };
    let (a_shift, b_shift) = match variant {
        KummerVariant::PlusNuPlusJ => (nu + 0.5 * jf + 0.5, -0.5 * jf + 0.5),
        KummerVariant::PlusNuMinusJ => (nu - 0.5 * jf + 0.5, -0.5 * jf + 0.5),
        KummerVariant::MinusNuPlusJ => (-0.5 * nu + 0.5 * jf + 0.5, -0.5 * nu - 0.5 * jf + 0.5),
        KummerVariant::MinusNuMinusJ => (-0.5 * nu - 0.5 * jf + 0.5, -0.5 * nu - 0.5 * jf + 0.5),
    };
    let odd_ratio: f64 = nums.iter().product::<f64>() / dens.iter().product::<f64>();
    let z = -x * x;

    let mut acc = Accum::new();
    for s in 0..=j {
        let sf = s as f64;
        let c = binomial(j, s)? * if alternating && s % 2 == 1 { -1.0 } else { 1.0 };
        let a0 = a_shift + 0.5 * sf;
        let b0 = b_shift + 0.5 * sf;

        let mut even_nums: Vec<f64> = nums
            .iter()
            .flat_map(|&a| [0.5 * a, 0.5 * a + 0.5])
            .collect();
        let mut even_dens: Vec<f64> = std::iter::once(0.5)
            .chain(dens.iter().flat_map(|&b| [0.5 * b, 0.5 * b + 0.5]))
            .collect();
        let mut odd_nums: Vec<f64> = nums
            .iter()
            .flat_map(|&a| [0.5 * a + 0.5, 0.5 * a + 1.0])
            .collect();
        let mut odd_dens: Vec<f64> = std::iter::once(1.5)
            .chain(dens.iter().flat_map(|&b| [0.5 * b + 0.5, 0.5 * b + 1.0]))
            .collect();
        even_nums.extend([a0, 1.0 - b0]);
        odd_nums.extend([a0 + 0.5, 1.5 - b0]);

        match gamma_fold {
            Some(g) => {
                let fold = Fold {
                    num: even_nums.len() - 2,
                    dens: [even_dens.len(), even_dens.len() + 1],
                };
                even_dens.extend([0.5 * g, 0.5 * g + 0.5]);
                odd_dens.extend([0.5 * g + 0.5, 0.5 * g + 1.0]);
                let re = rgamma(b0);
                if re != 0.0 {
                    let e = dup_scaled(&PfqSpec::new(even_nums, even_dens, z), fold, s, cfg)?;
                    acc.add(c * re, &e);
                }
                let ro = rgamma(b0 - 0.5);
                if ro != 0.0 {
                    let o = dup_scaled(&PfqSpec::new(odd_nums, odd_dens, z), fold, s, cfg)?;
                    acc.add(-c * ro * 4.0 * x * odd_ratio, &o);
                }
            }
            None => {
                let ge = gamma_ratio(a0, b0)?;
                if ge != 0.0 {
                    acc.add(
                        c * ge,
                        &pfq_eval(&PfqSpec::new(even_nums, even_dens, z), cfg)?,
                    );
                }
                let go = gamma_ratio(a0 + 0.5, b0 - 0.5)?;
                if go != 0.0 {
                    let o = pfq_eval(&PfqSpec::new(odd_nums, odd_dens, z), cfg)?;
                    acc.add(-c * go * 4.0 * x * odd_ratio, &o);
                }
            }
        }
    }
    Ok(acc.finish(scale))
}
