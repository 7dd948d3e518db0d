//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate meets `max(abs_tol, rel_tol·|I|)`. Ties are broken by position so
//! subdivision order, and therefore every result, is reproducible.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

/// Absolute 1e-12, relative 1e-10, at most 2000 subintervals.
pub const DEFAULT_TOLERANCE: Tolerance = Tolerance {
    abs: 1e-12,
    rel: 1e-10,
    max_intervals: 2000,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

#[derive(Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut gauss = fc * WG[3];
    let mut kronrod = fc * WGK[7];
    let mut abs_sum = fc.abs() * WGK[7];
    let mut fv = [0.0; 14];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv[2 * j] - mean).abs() + (fv[2 * j + 1] - mean).abs());
    }
    let value = kronrod * half;
    let abs_sum = abs_sum * half.abs();
    let asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    if abs_sum > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * abs_sum);
    }
    Segment { a, b, value, error }
}

/// Integrates `f` over `[a, b]` to the given tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<Estimate> {
    if a == b {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
            intervals: 0,
        });
    }
    let mut segments = vec![kronrod_15(&f, a, b)];
    loop {
        let value: f64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        if error <= tol.abs.max(tol.rel * value.abs()) {
            // Sum left to right for a schedule-independent result.
            segments.sort_by(|x, y| x.a.total_cmp(&y.a));
            return Ok(Estimate {
                value: segments.iter().map(|s| s.value).sum(),
                error,
                intervals: segments.len(),
            });
        }
        if segments.len() >= tol.max_intervals || !error.is_finite() {
            return Err(Error::QuadratureNotConverged {
                lower: a,
                upper: b,
                error,
                intervals: segments.len(),
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|(i, x), (j, y)| x.error.total_cmp(&y.error).then(j.cmp(i)))
            .map(|(i, _)| i)
            .expect("at least one segment");
        let s = segments.swap_remove(worst);
        let mid = 0.5 * (s.a + s.b);
        segments.push(kronrod_15(&f, s.a, mid));
        segments.push(kronrod_15(&f, mid, s.b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let r = integrate(|x| x.powi(5) - 3.0 * x * x, 0.0, 2.0, DEFAULT_TOLERANCE).unwrap();
        assert!((r.value - (64.0 / 6.0 - 8.0)).abs() < 1e-13);
        assert_eq!(r.intervals, 1);
    }

    #[test]
    fn gaussian_and_oscillatory() {
        let r = integrate(|x| (-x * x).exp(), -10.0, 10.0, DEFAULT_TOLERANCE).unwrap();
        assert!((r.value - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        let r = integrate(|x| (20.0 * x).sin(), 0.0, std::f64::consts::PI, DEFAULT_TOLERANCE).unwrap();
        assert!(r.value.abs() < 1e-12);
    }

    #[test]
    fn reversed_bounds_flip_sign() {
        let r = integrate(|x| x.exp(), 1.0, 0.0, DEFAULT_TOLERANCE).unwrap();
        assert!((r.value + (1f64.exp() - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let tight = Tolerance {
            abs: 0.0,
            rel: 0.0,
            max_intervals: 10,
        };
        let r = integrate(|x| x.sqrt(), 0.0, 1.0, tight);
        assert!(matches!(r, Err(Error::QuadratureNotConverged { .. })));
    }

    #[test]
    fn repeated_runs_are_bit_identical() {
        let f = |x: f64| (x * 7.0).cos() * (-x).exp();
        let a = integrate(f, 0.0, 30.0, DEFAULT_TOLERANCE).unwrap();
        let b = integrate(f, 0.0, 30.0, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }
}
