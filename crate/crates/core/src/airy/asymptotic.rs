use std::f64::consts::{FRAC_1_SQRT_2, PI};

const MAX_TERMS: usize = 80;

/// Coefficients u_k and v_k of the large-argument expansions.
fn coefficients() -> &'static ([f64; MAX_TERMS], [f64; MAX_TERMS]) {
    use std::sync::OnceLock;
    static TABLE: OnceLock<([f64; MAX_TERMS], [f64; MAX_TERMS])> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut u = [0.0; MAX_TERMS];
        let mut v = [0.0; MAX_TERMS];
        u[0] = 1.0;
        v[0] = 1.0;
        for k in 1..MAX_TERMS {
            let kf = k as f64;
            u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
                / ((2.0 * kf - 1.0) * 216.0 * kf);
            v[k] = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u[k];
        }
        (u, v)
    })
}

/// Partial sums Σ c_k w_k ζ^{-k}, truncated at the smallest term.
/// `weight(k)` supplies the sign pattern; terms are accumulated into the
/// bucket chosen by `bucket(k)`.
fn truncated_sums(zeta: f64, c: &[f64; MAX_TERMS], weight: impl Fn(usize) -> f64) -> [f64; 2] {
    let mut sums = [0.0; 2];
    let mut power = 1.0;
    let mut previous = f64::INFINITY;
    for (k, &ck) in c.iter().enumerate() {
        let term = ck.abs() * power;
        if term > previous {
            break;
        }
        sums[k % 2] += weight(k) * ck * power;
        if term <= f64::EPSILON * 1e-3 * (sums[0].abs() + sums[1].abs()) {
            break;
        }
        previous = term;
        power /= zeta;
    }
    sums
}

/// `(Ai(x), Ai′(x))` for large positive `x`.
pub(super) fn decaying(x: f64) -> (f64, f64) {
    let (u, v) = coefficients();
    let root = x.sqrt();
    let zeta = 2.0 / 3.0 * x * root;
    let quarter = root.sqrt();
    let sign = |k: usize| if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let su = truncated_sums(zeta, u, sign);
    let sv = truncated_sums(zeta, v, sign);
    let envelope = (-zeta).exp() / (2.0 * PI.sqrt());
    (
        envelope / quarter * (su[0] + su[1]),
        -envelope * quarter * (sv[0] + sv[1]),
    )
}

/// `(Ai(−z), Ai′(−z))` for large positive `z`.
pub(super) fn oscillating(z: f64) -> (f64, f64) {
    let (u, v) = coefficients();
    let root = z.sqrt();
    let zeta = 2.0 / 3.0 * z * root;
    let quarter = root.sqrt();
    // Even terms go to P, odd to Q, each with sign (−1)^{⌊k/2⌋}.
    let sign = |k: usize| if (k / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    let [pu, qu] = truncated_sums(zeta, u, sign);
    let [pv, qv] = truncated_sums(zeta, v, sign);
    let (sin, cos) = zeta.sin_cos();
    // cos(ζ − π/4) and sin(ζ − π/4) without rounding π/4 into ζ.
    let c = (cos + sin) * FRAC_1_SQRT_2;
    let s = (sin - cos) * FRAC_1_SQRT_2;
    let norm = 1.0 / PI.sqrt();
    (
        norm / quarter * (c * pu + s * qu),
        norm * quarter * (s * pv - c * qv),
    )
}
