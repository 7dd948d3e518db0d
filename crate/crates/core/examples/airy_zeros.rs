//! Ai and Ai′ along the real axis, and the first zeros of Ai(−α).
//!
//! ```bash
//! cargo run --example airy_zeros
//! ```

use gqs::airy::{airy_ai, airy_ai_prime, airy_zero, AiryZeroTable};

fn main() -> gqs::Result<()> {
    println!("{:>6}  {:>22}  {:>22}", "x", "Ai(x)", "Ai'(x)");
    for x in [-20.0, -10.0, -5.0, -1.0, 0.0, 1.0, 5.0, 10.0, 20.0] {
        println!("{x:>6.1}  {:>22.15e}  {:>22.15e}", airy_ai(x)?, airy_ai_prime(x)?);
    }

    let table = AiryZeroTable::compute(10)?;
    println!("\nfirst {} zeros, |Ai(-a_n)| < {:.1e}", table.len(), table.achieved_tolerance());
    for (n, a) in table.zeros().iter().enumerate() {
        println!("  a_{n:<2} = {a:.15}   Ai'(-a_n) = {:+.12}", airy_ai_prime(-a)?);
    }

    for n in [100, 1000] {
        println!("a_{n} = {:.10}", airy_zero(n)?);
    }
    Ok(())
}
