//! The gamma-quotient coefficients `A_r, B_r, C_r, D_r`.

use std::fmt;

use crate::error::Result;
use crate::gamma::gamma_ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CoeffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CoeffKind::A => "A",
            CoeffKind::B => "B",
            CoeffKind::C => "C",
            CoeffKind::D => "D",
        };
        f.write_str(c)
    }
}

/// One coefficient `K_r(ν, p)` at summation index `s`.
///
/// `nu`, `p` and `r` carry their signs, so `C_{-r}(-ν,-p)` is
/// `CoefficientSet::new(C, -r, s, -ν, -p)`. The numerator uses `|r|` and
/// the denominator `|p|` and the signed `r`, as in the definitions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSet {
    pub kind: CoeffKind,
    pub r: i32,
    pub s: u32,
    pub nu: f64,
    pub p: i32,
}

impl CoefficientSet {
    pub fn new(kind: CoeffKind, r: i32, s: u32, nu: f64, p: i32) -> Self {
        Self { kind, r, s, nu, p }
    }

    /// Argument of the numerator gamma function.
    ///
    /// The integer parts are combined first so that only the `ν` term
    /// rounds.
    pub fn top(&self) -> f64 {
        let base = self.p as i64 + self.r.unsigned_abs() as i64 + self.s as i64;
        match self.kind {
            CoeffKind::A => self.nu + 0.5 * (base + 1) as f64,
            CoeffKind::B => self.nu + 0.5 * (base + 2) as f64,
            CoeffKind::C => 0.5 * self.nu + 0.5 * (base + 1) as f64,
            CoeffKind::D => 0.5 * self.nu + 0.5 * (base + 2) as f64,
        }
    }

    /// Argument of the denominator gamma function.
    pub fn bottom(&self) -> f64 {
        let base = self.s as i64 - self.p.unsigned_abs() as i64 - self.r as i64;
        match self.kind {
            CoeffKind::A => 0.5 * (base + 1) as f64,
            CoeffKind::B => 0.5 * base as f64,
            CoeffKind::C => 0.5 * self.nu + 0.5 * (base + 1) as f64,
            CoeffKind::D => 0.5 * self.nu + 0.5 * base as f64,
        }
    }

    /// `Γ(top) / Γ(bottom)`; zero when the denominator sits on a pole.
    pub fn value(&self) -> Result<f64> {
        gamma_ratio(self.top(), self.bottom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_index_identities() {
        for nu in [0.3, 0.5, 1.7] {
            for p in 0..5 {
                for r in 0..=p {
                    for s in 0..=(p - r) as u32 {
                        let c = CoefficientSet::new(CoeffKind::C, -r, s, -nu, -p);
                        assert_eq!(c.value().unwrap(), 1.0);
                        let d = CoefficientSet::new(CoeffKind::D, -r, s, -nu, -p)
                            .value()
                            .unwrap();
                        let want = 0.5 * (s as f64 - p as f64 + r as f64 - nu);
                        assert!(
                            (d - want).abs() <= 2.0 * f64::EPSILON * want.abs(),
                            "{d} {want}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn a_vanishes_on_denominator_poles() {
        // bottom = s/2 - p/2 + 1/2 = -1 at s = 0, p = 3
        let a = CoefficientSet::new(CoeffKind::A, 0, 0, 0.3, 3);
        assert_eq!(a.bottom(), -1.0);
        assert_eq!(a.value().unwrap(), 0.0);
    }
}
