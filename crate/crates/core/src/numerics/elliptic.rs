//! Complete elliptic integrals of the first and second kind by the
//! arithmetic-geometric mean.
//!
//! The argument is the modulus p, entering the integrands as p² sin²θ.

use super::NumericsError;
use core::f64::consts::FRAC_PI_2;

/// Elliptic modulus p together with its complement √(1 − p²).
///
/// Keeping the complement separately lets ring-kernel callers pass
/// |r − r′|/(r + r′) directly instead of losing it to cancellation as p → 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    p: f64,
    complement: f64,
}

impl EllipticModulus {
    pub fn new(p: f64) -> Result<Self, NumericsError> {
        if !(0.0..1.0).contains(&p) {
            return Err(NumericsError::Domain("elliptic modulus must lie in [0, 1)"));
        }
        Ok(Self { p, complement: libm::sqrt((1.0 - p) * (1.0 + p)) })
    }

    /// Build from the complementary modulus p′ = √(1 − p²) in (0, 1].
    pub fn from_complement(complement: f64) -> Result<Self, NumericsError> {
        if !(complement > 0.0 && complement <= 1.0) {
            return Err(NumericsError::Domain("complementary modulus must lie in (0, 1]"));
        }
        Ok(Self { p: libm::sqrt((1.0 - complement) * (1.0 + complement)), complement })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn complement(&self) -> f64 {
        self.complement
    }
}

/// Returns (K, E).
pub fn elliptic_ke(m: EllipticModulus) -> (f64, f64) {
    let mut a = 1.0;
    let mut b = m.complement;
    let mut c = m.p;
    let mut weight = 0.5;
    let mut sum = weight * c * c;
    for _ in 0..64 {
        // a and b can settle one ulp apart, so stop on the size of c
        c = 0.5 * (a - b);
        if c.abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = libm::sqrt(a * b);
        a = an;
        b = bn;
        weight *= 2.0;
        sum += weight * c * c;
    }
    let k = FRAC_PI_2 / a;
    (k, k * (1.0 - sum))
}

pub fn elliptic_k(m: EllipticModulus) -> f64 {
    elliptic_ke(m).0
}

pub fn elliptic_e(m: EllipticModulus) -> f64 {
    elliptic_ke(m).1
}
