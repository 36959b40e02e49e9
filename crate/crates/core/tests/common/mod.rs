#![allow(dead_code)]

use lsum::kummer::KummerVariant;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// `₂F₁(-n, -n-ν; c; -1)` in exact rational arithmetic, taking `ν` at the
/// exact value of its binary representation.
pub fn exact_kummer(variant: KummerVariant, n: u32, nu: f64, j: u32) -> f64 {
    let nu = BigRational::from_float(nu).expect("finite nu");
    let (j, n) = (int(j as i64), n as i64);
    let c = match variant {
        KummerVariant::PlusNuPlusJ => int(1) + &nu + &j,
        KummerVariant::MinusNuPlusJ => int(1) - &nu + &j,
        KummerVariant::PlusNuMinusJ => int(1) + &nu - &j,
        KummerVariant::MinusNuMinusJ => int(1) - &nu - &j,
    };
    let b = -int(n) - &nu;
    let mut t = BigRational::one();
    let mut acc = BigRational::one();
    for k in 0..n {
        let kk = int(k);
        t = t * (int(k - n) * (&b + &kk)) / ((&c + &kk) * int(k + 1)) * int(-1);
        acc += &t;
    }
    if acc.is_zero() {
        0.0
    } else {
        acc.to_f64().expect("representable")
    }
}

/// `Γ(1+ν) x^{-ν} J_ν(2x)` from the Bessel power series
/// `Σ (-1)ᵏ x^{2k+ν} / (k! Γ(k+ν+1))`, with the gamma factors cancelled
/// term by term.
pub fn bessel_scaled(nu: f64, x: f64) -> f64 {
    let q = -x * x;
    let mut t = 1.0;
    let mut acc = 1.0;
    for k in 1..200 {
        let k = k as f64;
        t *= q / (k * (k + nu));
        acc += t;
        if t.abs() < 1e-18 * acc.abs() {
            break;
        }
    }
    acc
}
