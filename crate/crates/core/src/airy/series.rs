use super::dd::DoubleDouble as Dd;

/// Ai(0) = 3^{-2/3}/Γ(2/3), split into a double-double.
const C1: Dd = Dd::new(0.355_028_053_887_817_2, 2.052_336_324_362_12e-17);
/// −Ai′(0) = 3^{-1/3}/Γ(1/3).
const C2: Dd = Dd::new(0.258_819_403_792_806_8, -2.522_243_111_610_832e-17);

const MAX_TERMS: usize = 90;
const CONVERGED: f64 = 1e-34;

/// Sums f, g and their derivatives term by term:
///
/// f  = Σ t_k, t_{k+1} = t_k x³ / ((3k+2)(3k+3)),  t_0 = 1
/// g  = Σ s_k, s_{k+1} = s_k x³ / ((3k+3)(3k+4)),  s_0 = x
/// f′ = Σ p_k, p_{k+1} = p_k x³ / (3k(3k+2)),       p_1 = x²/2
/// g′ = Σ q_k, q_{k+1} = q_k x³ / ((3k+1)(3k+3)),  q_0 = 1
pub(super) fn ai_and_prime(x: f64) -> (f64, f64) {
    let x3 = Dd::from_f64(x).mul_f64(x).mul_f64(x);
    let mut t = Dd::from_f64(1.0);
    let mut s = Dd::from_f64(x);
    let mut p = Dd::from_f64(x).mul_f64(x).div_f64(2.0);
    let mut q = Dd::from_f64(1.0);
    let (mut f, mut g, mut fp, mut gp) = (Dd::ZERO, Dd::ZERO, Dd::ZERO, Dd::ZERO);

    for k in 0..MAX_TERMS {
        f = f + t;
        g = g + s;
        fp = fp + p;
        gp = gp + q;

        let scale = f.abs_hi().max(g.abs_hi()).max(fp.abs_hi()).max(gp.abs_hi());
        let largest = t.abs_hi().max(s.abs_hi()).max(p.abs_hi()).max(q.abs_hi());
        if largest <= CONVERGED * scale && k > 0 {
            break;
        }

        let k3 = 3.0 * k as f64;
        t = (t * x3).div_f64((k3 + 2.0) * (k3 + 3.0));
        s = (s * x3).div_f64((k3 + 3.0) * (k3 + 4.0));
        p = (p * x3).div_f64((k3 + 3.0) * (k3 + 5.0));
        q = (q * x3).div_f64((k3 + 1.0) * (k3 + 3.0));
    }

    let ai = C1 * f - C2 * g;
    let aip = C1 * fp - C2 * gp;
    (ai.to_f64(), aip.to_f64())
}
