use std::f64::consts::PI;
use std::sync::{OnceLock, RwLock};

use super::{ai, ai_and_prime};
use crate::error::{Error, Result};

/// Largest zero index served by [`airy_zero`].
pub const MAX_ZERO_INDEX: usize = 1000;

/// Every returned zero satisfies `|Ai(−α_n)| < ZERO_TOLERANCE`.
pub const ZERO_TOLERANCE: f64 = 1e-12;

const MAX_ITERATIONS: usize = 200;

/// Zeros `α_0 < α_1 < …` of `Ai(−α)`, with the largest residual observed.
#[derive(Debug, Clone, PartialEq)]
pub struct AiryZeroTable {
    zeros: Vec<f64>,
    achieved_tolerance: f64,
}

impl AiryZeroTable {
    /// Computes the first `count` zeros from scratch.
    pub fn compute(count: usize) -> Result<Self> {
        if count > MAX_ZERO_INDEX + 1 {
            return Err(Error::ZeroIndexOutOfRange {
                index: count - 1,
                max: MAX_ZERO_INDEX,
            });
        }
        let mut zeros = Vec::with_capacity(count);
        for n in 0..count {
            zeros.push(locate_zero(n, zeros.last().copied())?);
        }
        Ok(Self::from_zeros(zeros))
    }

    fn from_zeros(zeros: Vec<f64>) -> Self {
        let worst = zeros.iter().map(|&a| ai(-a).abs()).fold(0.0, f64::max);
        // Strict bound: every stored residual is below it.
        let achieved_tolerance = worst * (1.0 + 1e-9) + f64::MIN_POSITIVE;
        AiryZeroTable {
            zeros,
            achieved_tolerance,
        }
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        self.zeros.get(n).copied()
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn achieved_tolerance(&self) -> f64 {
        self.achieved_tolerance
    }
}

fn shared_table() -> &'static RwLock<Vec<f64>> {
    static TABLE: OnceLock<RwLock<Vec<f64>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Vec::new()))
}

/// The `n`th zero `α_n` of `Ai(−α)`, counting from `α_0 ≈ 2.338`.
///
/// Results are memoized in a process-wide append-only table.
pub fn airy_zero(n: usize) -> Result<f64> {
    if n > MAX_ZERO_INDEX {
        return Err(Error::ZeroIndexOutOfRange {
            index: n,
            max: MAX_ZERO_INDEX,
        });
    }
    let table = shared_table();
    if let Some(&z) = table.read().unwrap_or_else(|e| e.into_inner()).get(n) {
        return Ok(z);
    }
    let mut zeros = table.write().unwrap_or_else(|e| e.into_inner());
    while zeros.len() <= n {
        let next = locate_zero(zeros.len(), zeros.last().copied())?;
        zeros.push(next);
    }
    Ok(zeros[n])
}

/// Asymptotic estimate of α_n, already accurate to ~1e-2 for n = 0.
pub(crate) fn zero_estimate(n: usize) -> f64 {
    let t = 3.0 * PI / 8.0 * (4.0 * n as f64 + 3.0);
    let t2 = (t * t).recip();
    t.powf(2.0 / 3.0)
        * (1.0 + t2 * (5.0 / 48.0 + t2 * (-5.0 / 36.0 + t2 * (77125.0 / 82944.0 - t2 * 108056875.0 / 6967296.0))))
}

/// Bracket the zero around its asymptotic estimate, then run Newton on
/// `F(α) = Ai(−α)` with bisection whenever an iterate leaves the bracket.
fn locate_zero(n: usize, previous: Option<f64>) -> Result<f64> {
    let seed = zero_estimate(n);
    let f = |a: f64| ai(-a);

    let mut half_width = 0.25 * PI / seed.sqrt();
    let (mut lo, mut hi) = loop {
        let lo = match previous {
            Some(p) => (seed - half_width).max(p + 1e-9),
            None => (seed - half_width).max(0.0),
        };
        let hi = seed + half_width;
        if f(lo) * f(hi) <= 0.0 {
            break (lo, hi);
        }
        half_width *= 1.5;
        if half_width > PI / seed.sqrt() {
            return Err(Error::RootNotConverged { index: n });
        }
    };

    let mut f_lo = f(lo);
    let mut a = seed.clamp(lo, hi);
    for _ in 0..MAX_ITERATIONS {
        let (value, slope) = ai_and_prime(-a);
        if value == 0.0 {
            return Ok(a);
        }
        if value.signum() == f_lo.signum() {
            lo = a;
            f_lo = value;
        } else {
            hi = a;
        }
        // dF/dα = −Ai′(−α)
        let mut next = a + value / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - a).abs();
        a = next;
        if step <= 4.0 * f64::EPSILON * a || hi - lo <= 4.0 * f64::EPSILON * a {
            if ai(-a).abs() < ZERO_TOLERANCE {
                return Ok(a);
            }
            break;
        }
    }
    if ai(-a).abs() < ZERO_TOLERANCE {
        Ok(a)
    } else {
        Err(Error::RootNotConverged { index: n })
    }
}
