//! Parameterisation of one Laguerre series
//! `S_m(±ν, ±p) = e^{-x} Σ xⁿ Lₙ^{(ν)}(x) (f+m)ₙ / ((1±ν±p)ₙ (f)ₙ)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::near_nonpositive_integer;

/// Distance from a non-positive integer below which a denominator
/// parameter is considered singular.
pub const POLE_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(Error::Config(format!(
                "sign must be '+' or '-', got '{other}'"
            ))),
        }
    }
}

/// The four sign combinations of `(1 ± ν ± p)`, in output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    PlusNuPlusP,
    PlusNuMinusP,
    MinusNuPlusP,
    MinusNuMinusP,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::PlusNuPlusP,
        Variant::PlusNuMinusP,
        Variant::MinusNuPlusP,
        Variant::MinusNuMinusP,
    ];

    pub fn new(sign_nu: Sign, sign_p: Sign) -> Self {
        match (sign_nu, sign_p) {
            (Sign::Plus, Sign::Plus) => Variant::PlusNuPlusP,
            (Sign::Plus, Sign::Minus) => Variant::PlusNuMinusP,
            (Sign::Minus, Sign::Plus) => Variant::MinusNuPlusP,
            (Sign::Minus, Sign::Minus) => Variant::MinusNuMinusP,
        }
    }

    pub fn signs(self) -> (Sign, Sign) {
        match self {
            Variant::PlusNuPlusP => (Sign::Plus, Sign::Plus),
            Variant::PlusNuMinusP => (Sign::Plus, Sign::Minus),
            Variant::MinusNuPlusP => (Sign::Minus, Sign::Plus),
            Variant::MinusNuMinusP => (Sign::Minus, Sign::Minus),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Variant::PlusNuPlusP => "+nu+p",
            Variant::PlusNuMinusP => "+nu-p",
            Variant::MinusNuPlusP => "-nu+p",
            Variant::MinusNuMinusP => "-nu-p",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let found = Variant::ALL.into_iter().find(|v| {
            let (a, b) = v.signs();
            compact == v.label() || compact == format!("{a}{b}")
        });
        found.ok_or_else(|| {
            Error::Config(format!(
                "unknown sign variant '{s}' (expected one of +nu+p, +nu-p, -nu+p, -nu-p)"
            ))
        })
    }
}

/// Full parameterisation of one `S_m(±ν, ±p)` instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumSpec {
    pub m: u32,
    pub p: u32,
    pub sign_nu: Sign,
    pub sign_p: Sign,
    pub nu: f64,
    pub f: f64,
    pub x: f64,
}

impl SumSpec {
    pub fn new(variant: Variant, m: u32, p: u32, nu: f64, f: f64, x: f64) -> Self {
        let (sign_nu, sign_p) = variant.signs();
        Self {
            m,
            p,
            sign_nu,
            sign_p,
            nu,
            f,
            x,
        }
    }

    pub fn variant(&self) -> Variant {
        Variant::new(self.sign_nu, self.sign_p)
    }

    /// The Laguerre denominator parameter `1 ± ν ± p`.
    pub fn denominator(&self) -> f64 {
        1.0 + self.sign_nu.factor() * self.nu + self.sign_p.factor() * self.p as f64
    }

    /// Checks the invariants every evaluation route relies on; the error
    /// names the violated one.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("nu", self.nu), ("f", self.f), ("x", self.x)] {
            if !v.is_finite() {
                return Err(Error::InvalidSpec(format!("{name} must be finite")));
            }
        }
        if near_nonpositive_integer(self.f, POLE_MARGIN) {
            return Err(Error::InvalidSpec(format!(
                "f = {} is (near) a non-positive integer",
                self.f
            )));
        }
        let c = self.denominator();
        if near_nonpositive_integer(c, POLE_MARGIN) {
            let (sn, sp) = (self.sign_nu, self.sign_p);
            return Err(Error::InvalidSpec(format!(
                "1{sn}nu{sp}p = {c} is (near) a non-positive integer"
            )));
        }
        Ok(())
    }

    /// Additional requirement of the hypergeometric routes: `1 + ν` must
    /// avoid the poles because `(1+ν)ₙ` appears as a denominator.
    pub fn validate_closed(&self) -> Result<()> {
        self.validate()?;
        if near_nonpositive_integer(1.0 + self.nu, POLE_MARGIN) {
            return Err(Error::InvalidSpec(format!(
                "1+nu = {} is (near) a non-positive integer",
                1.0 + self.nu
            )));
        }
        Ok(())
    }
}
