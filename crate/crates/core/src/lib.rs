//! Evaluation of the Laguerre series
//! `S_m(±ν, ±p) = e^{-x} Σ xⁿ Lₙ^{(ν)}(x) (f+m)ₙ / ((1±ν±p)ₙ (f)ₙ)`
//! by closed hypergeometric forms, by a Kummer-summed intermediate form and
//! by direct summation, plus the grid harness that compares them.

pub mod closed;
pub mod error;
pub mod gamma;
pub mod grid;
pub mod kummer;
pub mod laguerre;
pub mod output;
pub mod params;
pub mod pfq;
pub mod sum;
pub mod verify;

pub use closed::{
    bessel_special, closed_sum, lemma_sum, s0_closed, sm_closed, sm_split, Dispatch, Method,
};
pub use error::{Error, Result};
pub use grid::GridConfig;
pub use laguerre::{laguerre_seq, oracle_sum, LaguerreSeq};
pub use params::{Sign, SumSpec, Variant};
pub use pfq::{pfq_eval, EvalResult, PfqSpec, SeriesConfig, Status};
pub use verify::{verify_grid, verify_point, VerifyRecord, VerifyStatus};
