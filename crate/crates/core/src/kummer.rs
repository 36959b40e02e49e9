//! Generalized Kummer summations of `₂F₁(a, b; 1+a-b±j; -1)`.
//!
//! Every gamma quotient goes through `rgamma`, `dup_ratio` or `gamma_ratio`
//! so that pole-killed terms come out as exact zeros.

use std::fmt;

use crate::error::{Error, Result};
use crate::gamma::{
    binomial, dup_ratio, gamma, gamma_ratio, near_nonpositive_integer, pochhammer, rgamma,
    shifted_ratio, DoubleDouble,
};
use crate::params::POLE_MARGIN;

/// Which specialization of the Kummer sums applies, named by the
/// denominator parameter `1 ± ν ± j` of `₂F₁(-n, -n-ν; ·; -1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KummerVariant {
    PlusNuPlusJ,
    MinusNuPlusJ,
    PlusNuMinusJ,
    MinusNuMinusJ,
}

impl KummerVariant {
    pub const ALL: [KummerVariant; 4] = [
        KummerVariant::PlusNuPlusJ,
        KummerVariant::MinusNuPlusJ,
        KummerVariant::PlusNuMinusJ,
        KummerVariant::MinusNuMinusJ,
    ];

    pub fn label(self) -> &'static str {
        match self {
            KummerVariant::PlusNuPlusJ => "plus_nu_plus_j",
            KummerVariant::MinusNuPlusJ => "minus_nu_plus_j",
            KummerVariant::PlusNuMinusJ => "plus_nu_minus_j",
            KummerVariant::MinusNuMinusJ => "minus_nu_minus_j",
        }
    }
}

impl fmt::Display for KummerVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerCase {
    pub variant: KummerVariant,
    pub n: u32,
    pub nu: f64,
    pub j: u32,
}

impl KummerCase {
    pub fn new(variant: KummerVariant, n: u32, nu: f64, j: u32) -> Self {
        Self { variant, n, nu, j }
    }

    /// The `₂F₁` denominator parameter `1 ± ν ± j`.
    pub fn denominator(&self) -> f64 {
        let (j, nu) = (self.j as f64, self.nu);
        match self.variant {
            KummerVariant::PlusNuPlusJ => 1.0 + nu + j,
            KummerVariant::MinusNuPlusJ => 1.0 - nu + j,
            KummerVariant::PlusNuMinusJ => 1.0 + nu - j,
            KummerVariant::MinusNuMinusJ => 1.0 - nu - j,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.nu.is_finite() {
            return Err(Error::InvalidCase("nu must be finite".into()));
        }
        let c = self.denominator();
        if near_nonpositive_integer(c, POLE_MARGIN) {
            return Err(Error::InvalidCase(format!(
                "{}: denominator parameter {c} is (near) a non-positive integer",
                self.variant
            )));
        }
        Ok(())
    }
}

/// `₂F₁(a, b; 1+a-b+j; -1)`.
pub fn kummer_plus(a: f64, b: f64, j: u32) -> Result<f64> {
    if a == 0.0 || b == 0.0 {
        return Ok(1.0);
    }
    let jf = j as f64;
    let lower = pochhammer(b - jf, j);
    if lower == 0.0 {
        return Err(Error::Pole(b - jf));
    }
    let pre = (-2.0 * b + jf).exp2() * gamma(1.0 + a - b + jf)? / lower;
    let mut acc = 0.0;
    for s in 0..=j {
        let sf = s as f64;
        let w = rgamma(0.5 * a - 0.5 * jf + 0.5 * sf + 0.5);
        if w == 0.0 {
            continue;
        }
        let z = 0.5 * a - b + 0.5 * jf + 0.5 * sf + 0.5;
        let sign = if s.is_multiple_of(2) { 1.0 } else { -1.0 };
        acc += sign * binomial(j, s)? * dup_ratio(z, s) * w;
    }
    Ok(pre * acc)
}

/// `₂F₁(a, b; 1+a-b-j; -1)`.
pub fn kummer_minus(a: f64, b: f64, j: u32) -> Result<f64> {
    if a == 0.0 || b == 0.0 {
        return Ok(1.0);
    }
    let jf = j as f64;
    let pre = (-2.0 * b - jf).exp2() * gamma(1.0 + a - b - jf)?;
    let mut acc = 0.0;
    for s in 0..=j {
        let sf = s as f64;
        let w = rgamma(0.5 * a - 0.5 * jf + 0.5 * sf + 0.5);
        if w == 0.0 {
            continue;
        }
        let z = 0.5 * a - b - 0.5 * jf + 0.5 * sf + 0.5;
        acc += binomial(j, s)? * dup_ratio(z, s) * w;
    }
    Ok(pre * acc)
}

/// `₂F₁(-n, -n-ν; 1±ν±j; -1)` from the specialized closed forms.
pub fn kummer_special(case: &KummerCase) -> Result<f64> {
    case.validate()?;
    let KummerCase { variant, n, nu, j } = *case;
    if n == 0 {
        return Ok(1.0);
    }
    let (nf, jf) = (n as f64, j as f64);
    let alt = |s: u32| if s.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut acc = 0.0;
    let value = match variant {
        KummerVariant::PlusNuPlusJ => {
            for s in 0..=j {
                let sf = s as f64;
                let w = rgamma(-0.5 * nf - 0.5 * jf + 0.5 * sf + 0.5);
                if w == 0.0 {
                    continue;
                }
                let z = 0.5 * nf + nu + 0.5 * jf + 0.5 * sf + 0.5;
                acc += alt(s) * binomial(j, s)? * dup_ratio(z, s) * w;
            }
            let pre = alt(j) * gamma(1.0 + nu + jf)? / pochhammer(1.0 + nf + nu, j);
            (2.0 * nf + 2.0 * nu + jf).exp2() * pre * acc
        }
        KummerVariant::MinusNuPlusJ => {
            // The terms can cancel exactly (ν = ½, j = 1, odd n), so the
            // integer-shift ratios are summed in double-double.
            let mut sum = DoubleDouble::ZERO;
            for s in 0..=j {
                let sf = s as f64;
                let top = 0.5 * nf - 0.5 * nu + 0.5 * jf + 0.5 * sf + 0.5;
                let bottom = -0.5 * nf - 0.5 * nu - 0.5 * jf + 0.5 * sf + 0.5;
                let ratio = match shifted_ratio(top, bottom) {
                    Some(r) => r?,
                    None => DoubleDouble::new(gamma_ratio(top, bottom)?),
                };
                sum = sum.add(ratio.mul(alt(s) * binomial(j, s)?));
            }
            acc = sum.value();
            // 4ⁿ n! / (j! (1+j)ₙ (1-ν+j)ₙ) as a running product
            let mut pre = 1.0;
            for i in 0..n {
                let i = i as f64;
                pre *= 4.0 * (i + 1.0) / ((1.0 + jf + i) * (1.0 - nu + jf + i));
            }
            pre /= (1..=j).map(f64::from).product::<f64>();
            alt(j) * jf.exp2() * pre * acc
        }
        KummerVariant::PlusNuMinusJ => {
            for s in 0..=j {
                let sf = s as f64;
                let w = rgamma(-0.5 * nf - 0.5 * jf + 0.5 * sf + 0.5);
                if w == 0.0 {
                    continue;
                }
                let z = 0.5 * nf + nu - 0.5 * jf + 0.5 * sf + 0.5;
                acc += binomial(j, s)? * dup_ratio(z, s) * w;
            }
            (2.0 * nf + 2.0 * nu - jf).exp2() * gamma(1.0 + nu - jf)? * acc
        }
        KummerVariant::MinusNuMinusJ => {
            for s in 0..=j {
                let sf = s as f64;
                let top = 0.5 * nf - 0.5 * nu - 0.5 * jf + 0.5 * sf + 0.5;
                let bottom = -0.5 * nf - 0.5 * nu - 0.5 * jf + 0.5 * sf + 0.5;
                acc += binomial(j, s)? * gamma_ratio(top, bottom)?;
            }
            (2.0 * nf - jf).exp2() / pochhammer(1.0 - nu - jf, n) * acc
        }
    };
    Ok(value)
}

/// Term-by-term sum of the terminating `₂F₁(-n, b; c; -1)`.
pub fn direct_terminating(n: u32, b: f64, c: f64) -> f64 {
    let mut t = 1.0;
    let mut acc = 1.0;
    for k in 0..n {
        let k = k as f64;
        t *= -(-(n as f64) + k) * (b + k) / ((c + k) * (k + 1.0));
        acc += t;
    }
    acc
}
