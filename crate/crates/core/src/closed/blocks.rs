//! Hypergeometric building blocks of the closed forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::gamma::{dup_ratio, near_nonpositive_integer, DoubleDouble};
use crate::pfq::{pfq_eval, sum_series, term_ratio, EvalResult, PfqSpec, SeriesConfig, Step};

/// Distance from a pole of `Γ(2a₀ - s)` below which a folded block is
/// summed term by term instead of through `pfq_eval`.
pub const FOLD_MARGIN: f64 = 1e-3;

/// `F₀` blocks of the `m = 0` forms or `F_r` blocks of the shifted forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockFamily {
    Zero,
    Shifted,
}

/// One of the eight `F₀^{(k)}` / `F_r^{(k)}` series, argument `-x²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperBlock {
    pub family: BlockFamily,
    pub which: u8,
    pub r: u32,
    pub s: u32,
    pub p: u32,
    pub nu: f64,
}

impl fmt::Display for HyperBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = match self.family {
            BlockFamily::Zero => "0".to_string(),
            BlockFamily::Shifted => format!("r={}", self.r),
        };
        write!(
            f,
            "F_{sub}^({})[s={}, p={}, nu={}]",
            self.which, self.s, self.p, self.nu
        )
    }
}

/// Positions of the `Γ(a₀) / Γ(2a₀ - s)` pairing inside a block: the
/// numerator `a₀` and the denominator pair `(2a₀-s)/2, (2a₀-s+1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fold {
    pub num: usize,
    pub dens: [usize; 2],
}

impl HyperBlock {
    pub fn new(family: BlockFamily, which: u8, r: u32, s: u32, p: u32, nu: f64) -> Result<Self> {
        if !(1..=8).contains(&which) {
            return Err(Error::Constraint(format!(
                "block index {which} is outside 1..=8"
            )));
        }
        let r = if family == BlockFamily::Zero { 0 } else { r };
        Ok(Self {
            family,
            which,
            r,
            s,
            p,
            nu,
        })
    }

    /// Numerator and denominator parameter lists.
    pub fn parameters(&self) -> (Vec<f64>, Vec<f64>) {
        let h = 0.5;
        let nu = self.nu;
        let (p, r, s) = (self.p as f64, self.r as f64, self.s as f64);
        let (hn, hp, hr, hs) = (h * nu, h * p, h * r, h * s);
        match (self.family, self.which) {
            (BlockFamily::Zero, 3) => (
                vec![h + nu - hp + hs, h + hp - hs],
                vec![h, h + nu - hp, 1.0 + nu - hp],
            ),
            (BlockFamily::Zero, 4) => (
                vec![1.0 + nu - hp + hs, 1.0 + hp - hs],
                vec![1.5, 1.0 + nu - hp, 1.5 + nu - hp],
            ),
            (BlockFamily::Zero, 5) => (
                vec![1.0, h + hn + hp - hs, h - hn + hp + hs],
                vec![h + hp, 1.0 + hp, h - hn + hp, 1.0 - hn + hp],
            ),
            (BlockFamily::Zero, 6) => (
                vec![1.0, 1.0 + hn + hp - hs, 1.0 - hn + hp + hs],
                vec![1.0 + hp, 1.5 + hp, 1.0 - hn + hp, 1.5 - hn + hp],
            ),
            (BlockFamily::Zero, 7) => (
                vec![h - hn - hp + hs, h + hn + hp - hs],
                vec![h, h - hn - hp, 1.0 - hn - hp],
            ),
            (BlockFamily::Zero, 8) => (
                vec![1.0 - hn - hp + hs, 1.0 + hn + hp - hs],
                vec![1.5, 1.0 - hn - hp, 1.5 - hn - hp],
            ),
            (_, 1) => (
                vec![
                    h + hn + hr,
                    1.0 + hn + hr,
                    h + nu + hp + hr + hs,
                    h + hp + hr - hs,
                ],
                vec![
                    h,
                    h + hn + hp + hr,
                    1.0 + hn + hp + hr,
                    h + nu + hp + hr,
                    1.0 + nu + hp + hr,
                ],
            ),
            (_, 2) => (
                vec![
                    1.0 + hn + hr,
                    1.5 + hn + hr,
                    1.0 + nu + hp + hr + hs,
                    1.0 + hp + hr - hs,
                ],
                vec![
                    1.5,
                    1.0 + hn + hp + hr,
                    1.5 + hn + hp + hr,
                    1.0 + nu + hp + hr,
                    1.5 + nu + hp + hr,
                ],
            ),
            (_, 3) => (
                vec![
                    h + hn + hr,
                    1.0 + hn + hr,
                    h + nu - hp + hr + hs,
                    h + hp - hr - hs,
                ],
                vec![h, h + hn, 1.0 + hn, h + nu - hp + hr, 1.0 + nu - hp + hr],
            ),
            (_, 4) => (
                vec![
                    1.0 + hn + hr,
                    1.5 + hn + hr,
                    1.0 + nu - hp + hr + hs,
                    1.0 + hp - hr - hs,
                ],
                vec![
                    1.5,
                    1.0 + hn,
                    1.5 + hn,
                    1.0 + nu - hp + hr,
                    1.5 + nu - hp + hr,
                ],
            ),
            (_, 5) => (
                vec![
                    1.0,
                    h + hn + hr,
                    1.0 + hn + hr,
                    h - hn + hp + hr + hs,
                    h + hn + hp + hr - hs,
                ],
                vec![
                    h + hn,
                    1.0 + hn,
                    h + hp + hr,
                    1.0 + hp + hr,
                    h - hn + hp + hr,
                    1.0 - hn + hp + hr,
                ],
            ),
            (_, 6) => (
                vec![
                    1.0,
                    1.0 + hn + hr,
                    1.5 + hn + hr,
                    1.0 - hn + hp + hr + hs,
                    1.0 + hn + hp + hr - hs,
                ],
                vec![
                    1.0 + hn,
                    1.5 + hn,
                    1.0 + hp + hr,
                    1.5 + hp + hr,
                    1.0 - hn + hp + hr,
                    1.5 - hn + hp + hr,
                ],
            ),
            (_, 7) => (
                vec![
                    h + hn + hr,
                    1.0 + hn + hr,
                    h - hn - hp + hr + hs,
                    h + hn + hp - hr - hs,
                ],
                vec![h, h + hn, 1.0 + hn, h - hn - hp + hr, 1.0 - hn - hp + hr],
            ),
            (_, 8) => (
                vec![
                    1.0 + hn + hr,
                    1.5 + hn + hr,
                    1.0 - hn - hp + hr + hs,
                    1.0 + hn + hp - hr - hs,
                ],
                vec![
                    1.5,
                    1.0 + hn,
                    1.5 + hn,
                    1.0 - hn - hp + hr,
                    1.5 - hn - hp + hr,
                ],
            ),
            _ => unreachable!("block index checked in HyperBlock::new"),
        }
    }

    pub fn spec(&self, x: f64) -> PfqSpec {
        let (nums, dens) = self.parameters();
        PfqSpec::new(nums, dens, -x * x)
    }

    /// The duplication pairing carried by blocks 1 to 4.
    pub fn fold(&self) -> Option<Fold> {
        match (self.family, self.which) {
            (BlockFamily::Zero, 3 | 4) => Some(Fold {
                num: 0,
                dens: [1, 2],
            }),
            (_, 1..=4) => Some(Fold {
                num: 2,
                dens: [3, 4],
            }),
            _ => None,
        }
    }

    pub fn eval(&self, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
        pfq_eval(&self.spec(x), cfg)
    }

    /// `Γ(a₀) / Γ(2a₀ - s) · F` for the folded blocks 1 to 4.
    pub fn eval_dup(&self, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
        let fold = self
            .fold()
            .ok_or_else(|| Error::Constraint(format!("{self} carries no duplication pairing")))?;
        dup_scaled(&self.spec(x), fold, self.s, cfg)
    }
}

/// Evaluates `Γ(a₀) / Γ(2a₀ - s) · pFq` where `a₀ = spec.numerators[fold.num]`
/// and the two denominators at `fold.dens` are `(2a₀-s)/2` and `(2a₀-s+1)/2`.
///
/// Away from the poles of `Γ(2a₀ - s)` this is `dup_ratio · pfq_eval`. Near
/// them the paired parameters are absorbed term by term,
/// `Σ 4ᵏ dup_ratio(a₀+k, s) Π(rest)ₖ zᵏ/k!`, which stays finite where the
/// plain series has a vanishing denominator.
pub(crate) fn dup_scaled(
    spec: &PfqSpec,
    fold: Fold,
    s: u32,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    let a0 = spec.numerators[fold.num];
    let g = 2.0 * a0 - s as f64;
    if !near_nonpositive_integer(g, FOLD_MARGIN) {
        let d = dup_ratio(a0, s);
        if d == 0.0 {
            return Ok(EvalResult::exact(0.0));
        }
        let mut r = pfq_eval(spec, cfg)?;
        r.value *= d;
        r.trunc_estimate *= d.abs();
        return Ok(r);
    }

    let nums: Vec<f64> = spec
        .numerators
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != fold.num)
        .map(|(_, &v)| v)
        .collect();
    let dens: Vec<f64> = spec
        .denominators
        .iter()
        .enumerate()
        .filter(|&(i, _)| !fold.dens.contains(&i))
        .map(|(_, &v)| v)
        .collect();
    let rest = PfqSpec::new(nums, dens, spec.argument);
    let last = crate::pfq::is_terminating(&rest);
    let zero_run = (0.5 * s as f64 - a0).ceil().max(0.0) as usize + 1;
    let guard = rest.positivity_index().max(zero_run);
    let z4 = 4.0 * spec.argument;
    let mut poch = DoubleDouble::ONE;
    sum_series(cfg, guard, |k| {
        if last.is_some_and(|last| k > last) {
            return Ok(Step::End);
        }
        if k > 0 {
            poch = poch.mul_dd(term_ratio(&rest.numerators, &rest.denominators, z4, k - 1)?);
        }
        Ok(Step::Wide(poch.mul(dup_ratio(a0 + k as f64, s))))
    })
}
