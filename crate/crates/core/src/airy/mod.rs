//! The Airy function Ai, its derivative, and the zeros of Ai on the negative axis.
//!
//! Two evaluation branches:
//!
//! * `|x| < 9`: Maclaurin series `Ai = c₁f(x) − c₂g(x)` summed in
//!   double-double arithmetic, up to 90 terms.
//! * `|x| ≥ 9`: the standard large-argument expansions in `ζ = ⅔|x|^{3/2}`,
//!   truncated at the smallest term. At the crossover `ζ ≈ 18`, so the
//!   truncation error is below `e^{−2ζ} ≈ 2e-16` relative to the envelope.

mod asymptotic;
mod dd;
mod series;
mod zeros;

pub use zeros::{airy_zero, AiryZeroTable, MAX_ZERO_INDEX, ZERO_TOLERANCE};

use crate::error::{Error, Result};

/// Arguments with `|x|` at or beyond this use the asymptotic expansions.
pub const ASYMPTOTIC_CROSSOVER: f64 = 9.0;

/// Ai(x).
pub fn airy_ai(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    Ok(ai_and_prime(x).0)
}

/// Ai′(x).
pub fn airy_ai_prime(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    Ok(ai_and_prime(x).1)
}

/// `(Ai(x), Ai′(x))` without the finiteness check; NaN propagates.
pub(crate) fn ai_and_prime(x: f64) -> (f64, f64) {
    if x.abs() < ASYMPTOTIC_CROSSOVER {
        series::ai_and_prime(x)
    } else if x > 0.0 {
        asymptotic::decaying(x)
    } else {
        asymptotic::oscillating(-x)
    }
}

#[inline]
pub(crate) fn ai(x: f64) -> f64 {
    ai_and_prime(x).0
}

#[inline]
pub(crate) fn ai_prime(x: f64) -> f64 {
    ai_and_prime(x).1
}
