//! Modified Bessel functions of the first kind, orders 0 and 1.
//!
//! Power series below [`SERIES_LIMIT`], the Hankel-type asymptotic expansion
//! above it. The exponentially scaled variants never overflow and are what the
//! closed forms use internally.

use super::NumericsError;

/// Largest argument evaluated by the power series.
pub const SERIES_LIMIT: f64 = 15.0;

/// Beyond this `e^x` overflows an f64.
const OVERFLOW_LIMIT: f64 = 709.78;

fn series(x: f64, nu: u32) -> f64 {
    // sum_k (x/2)^(2k+nu) / (k! (k+nu)!)
    let q = 0.25 * x * x;
    let mut term = if nu == 0 { 1.0 } else { 0.5 * x };
    let mut sum = term;
    let mut k = 0u32;
    loop {
        k += 1;
        term *= q / (f64::from(k) * f64::from(k + nu));
        sum += term;
        if term <= sum * 1e-17 || k > 200 {
            return sum;
        }
    }
}

/// e^{-x} I_nu(x) for large x, optimally truncated.
fn asymptotic_scaled(x: f64, nu: u32) -> f64 {
    let mu = 4.0 * f64::from(nu * nu);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1u32;
    loop {
        let odd = f64::from(2 * k - 1);
        let next = -term * (mu - odd * odd) / (8.0 * f64::from(k) * x);
        if next.abs() >= term.abs() || k > 120 {
            break;
        }
        term = next;
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
        k += 1;
    }
    sum / libm::sqrt(2.0 * core::f64::consts::PI * x)
}

fn check_arg(x: f64) -> Result<(), NumericsError> {
    if !x.is_finite() || x < 0.0 {
        return Err(NumericsError::Domain("Bessel argument must be finite and non-negative"));
    }
    Ok(())
}

/// e^{-x} I0(x).
pub fn bessel_i0_scaled(x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        series(x, 0) * libm::exp(-x)
    } else {
        asymptotic_scaled(x, 0)
    }
}

/// e^{-x} I1(x).
pub fn bessel_i1_scaled(x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        series(x, 1) * libm::exp(-x)
    } else {
        asymptotic_scaled(x, 1)
    }
}

/// e^{-x} I1(x) / x, finite at the origin where it equals 1/2.
pub fn bessel_i1_over_x_scaled(x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        // (1/2) sum_k (x/2)^(2k) / (k! (k+1)!)
        let q = 0.25 * x * x;
        let mut term = 0.5;
        let mut sum = term;
        let mut k = 0u32;
        loop {
            k += 1;
            term *= q / (f64::from(k) * f64::from(k + 1));
            sum += term;
            if term <= sum * 1e-17 || k > 200 {
                break;
            }
        }
        sum * libm::exp(-x)
    } else {
        asymptotic_scaled(x, 1) / x
    }
}

/// I0(x) for x ≥ 0.
pub fn bessel_i0(x: f64) -> Result<f64, NumericsError> {
    check_arg(x)?;
    if x <= SERIES_LIMIT {
        Ok(series(x, 0))
    } else if x < OVERFLOW_LIMIT {
        Ok(asymptotic_scaled(x, 0) * libm::exp(x))
    } else {
        Err(NumericsError::Range("I0 overflows for this argument"))
    }
}

/// I1(x) for x ≥ 0.
pub fn bessel_i1(x: f64) -> Result<f64, NumericsError> {
    check_arg(x)?;
    if x <= SERIES_LIMIT {
        Ok(series(x, 1))
    } else if x < OVERFLOW_LIMIT {
        Ok(asymptotic_scaled(x, 1) * libm::exp(x))
    } else {
        Err(NumericsError::Range("I1 overflows for this argument"))
    }
}
