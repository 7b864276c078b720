//! Exact radial closed forms built from Gaussian–Bessel moments.
//!
//! Every local quantity of the state is a finite combination of
//!
//! ```text
//! M0_n(r) = ∫_0^∞ xⁿ e^{-Ωx²} I0(2Ωrx) dx,   M1_n(r) = ∫_0^∞ xⁿ e^{-Ωx²} I1(2Ωrx) dx
//! ```
//!
//! and each moment has the shape `e^{Ωr²} P(r) + e^{Ωr²/2} [Q(r) I0(t) + R(r) I1(t)]`
//! with t = Ωr²/2 and P, Q, R Laurent polynomials in r. Sums, products with
//! powers of r and radial derivatives stay inside this family, so densities,
//! currents, the kinetic tensor and their derivatives are all carried as
//! exact coefficient lists generated once from (c₂, c₃, c₄, Ω).

use crate::numerics::{bessel_i0_scaled, bessel_i1_over_x_scaled, bessel_i1_scaled};
use alloc::vec;
use alloc::vec::Vec;

/// Finite sum of c_k r^k with k ≥ `low` (k may be negative).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<f64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: f64, k: i32) -> Self {
        Self { low: k, coeffs: vec![c] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Lowest power carrying a non-zero coefficient.
    pub fn min_power(&self) -> Option<i32> {
        self.coeffs.iter().position(|&c| c != 0.0).map(|i| self.low + i as i32)
    }

    pub fn coeff(&self, k: i32) -> f64 {
        let i = k - self.low;
        if i < 0 {
            return 0.0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0.0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, f64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0.0).map(move |(i, &c)| (self.low + i as i32, c))
    }

    fn add_term(&mut self, k: i32, c: f64) {
        if c == 0.0 {
            return;
        }
        if self.coeffs.is_empty() {
            self.low = k;
            self.coeffs.push(c);
            return;
        }
        if k < self.low {
            let shift = (self.low - k) as usize;
            let mut v = vec![0.0; shift];
            v.extend_from_slice(&self.coeffs);
            self.coeffs = v;
            self.low = k;
        }
        let i = (k - self.low) as usize;
        if i >= self.coeffs.len() {
            self.coeffs.resize(i + 1, 0.0);
        }
        self.coeffs[i] += c;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c);
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { low: self.low, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Multiply by r^k.
    pub fn shift(&self, k: i32) -> Self {
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            if k != 0 {
                out.add_term(k - 1, c * f64::from(k));
            }
        }
        out
    }

    pub fn eval(&self, r: f64) -> f64 {
        let acc = self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c);
        acc * powi(r, self.low)
    }
}

fn powi(r: f64, k: i32) -> f64 {
    if k == 0 {
        1.0
    } else {
        libm::pow(r, f64::from(k))
    }
}

/// `e^{Ωr²} P + e^{Ωr²/2} (Q I0(Ωr²/2) + R I1(Ωr²/2))`.
///
/// A form is "unscaled" when it stands for exactly that expression.
/// [`GaussBessel::eval_damped`] evaluates `e^{-2Ωr²}` times the expression,
/// which is how every physical quantity carries it.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussBessel {
    pub omega: f64,
    pub p: Laurent,
    pub q: Laurent,
    pub r: Laurent,
}

impl GaussBessel {
    pub fn zero(omega: f64) -> Self {
        Self { omega, p: Laurent::zero(), q: Laurent::zero(), r: Laurent::zero() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { omega: self.omega, p: self.p.add(&other.p), q: self.q.add(&other.q), r: self.r.add(&other.r) }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { omega: self.omega, p: self.p.scale(s), q: self.q.scale(s), r: self.r.scale(s) }
    }

    /// Multiply by r^k.
    pub fn shift(&self, k: i32) -> Self {
        Self { omega: self.omega, p: self.p.shift(k), q: self.q.shift(k), r: self.r.shift(k) }
    }

    /// d/dr of the unscaled expression.
    pub fn derivative(&self) -> Self {
        let w = self.omega;
        // d/dr e^{t} I0(t) = Ωr e^{t}(I0 + I1); d/dr e^{t} I1(t) = e^{t}(Ωr I0 + Ωr I1 − 2 I1/r)
        let p = self.p.derivative().add(&self.p.shift(1).scale(2.0 * w));
        let q = self.q.derivative().add(&self.q.shift(1).scale(w)).add(&self.r.shift(1).scale(w));
        let r = self
            .r
            .derivative()
            .add(&self.q.shift(1).scale(w))
            .add(&self.r.shift(1).scale(w))
            .add(&self.r.shift(-1).scale(-2.0));
        Self { omega: w, p, q, r }
    }

    /// Form G̃ with e^{-2Ωr²} G̃ = d/dr (e^{-2Ωr²} G).
    pub fn damped_derivative(&self) -> Self {
        self.derivative().add(&self.shift(1).scale(-4.0 * self.omega))
    }

    /// Value of the unscaled expression. Overflows for large r; use
    /// [`Self::eval_damped`] for physical quantities.
    pub fn eval(&self, r: f64) -> f64 {
        let s = self.omega * r * r;
        libm::exp(2.0 * s) * self.eval_damped(r)
    }

    /// e^{-2Ωr²} times the expression, without overflow:
    /// `e^{-Ωr²} [P + Q i0e(t) + R i1e(t)]`.
    ///
    /// Negative powers in R are paired with I1(t) ~ t/2, so r^{-1} and r^{-2}
    /// stay finite at the origin.
    pub fn eval_damped(&self, r: f64) -> f64 {
        let s = self.omega * r * r;
        let t = 0.5 * s;
        let mut acc = self.p.eval(r);
        if !self.q.is_zero() {
            acc += self.q.eval(r) * bessel_i0_scaled(t);
        }
        if !self.r.is_zero() {
            let i1 = bessel_i1_scaled(t);
            let i1_over_t = bessel_i1_over_x_scaled(t);
            for (k, c) in self.r.terms() {
                let v = if k >= 0 {
                    powi(r, k) * i1
                } else if k >= -2 {
                    // r^k I1(t) = r^{k+2} (Ω/2) I1(t)/t
                    powi(r, k + 2) * 0.5 * self.omega * i1_over_t
                } else {
                    powi(r, k) * i1
                };
                acc += c * v;
            }
        }
        libm::exp(-s) * acc
    }
}

/// The moment families M0_n and M1_n for n = 0..=n_max.
#[derive(Debug, Clone)]
pub struct MomentTable {
    pub m0: Vec<GaussBessel>,
    pub m1: Vec<GaussBessel>,
}

impl MomentTable {
    /// Builds the moments from the three elementary integrals and the
    /// integration-by-parts recurrences
    /// `2Ω M0_{n+2} = (n+1) M0_n + 2Ωr M1_{n+1}` and
    /// `2Ω M1_{n+2} = n M1_n + 2Ωr M0_{n+1}`.
    pub fn new(omega: f64, n_max: usize) -> Self {
        let w = omega;
        let root = libm::sqrt(core::f64::consts::PI / w);
        let mut m0 = vec![GaussBessel::zero(w); n_max + 1];
        let mut m1 = vec![GaussBessel::zero(w); n_max + 1];
        m0[0].q = Laurent::monomial(0.5 * root, 0);
        if n_max >= 1 {
            m0[1].p = Laurent::monomial(0.5 / w, 0);
            m1[1].q = Laurent::monomial(0.25 * root, 1);
            m1[1].r = Laurent::monomial(0.25 * root, 1);
        }
        for n in 2..=n_max {
            let k = (n - 2) as f64;
            // M1_0 never enters: its coefficient (n − 2) vanishes at n = 2
            let mut a1 = m0[n - 1].shift(1).scale(2.0 * w);
            if n > 2 {
                a1 = a1.add(&m1[n - 2].scale(k));
            }
            m1[n] = a1.scale(0.5 / w);
            let a0 = m0[n - 2].scale(k + 1.0).add(&m1[n - 1].shift(1).scale(2.0 * w));
            m0[n] = a0.scale(0.5 / w);
        }
        Self { m0, m1 }
    }

    /// Σ_n poly[n] · M_order_{n + offset}.
    pub fn combine(&self, order: u8, poly: &[f64], offset: i32) -> GaussBessel {
        let table = if order == 0 { &self.m0 } else { &self.m1 };
        let mut out = GaussBessel::zero(table[0].omega);
        for (n, &c) in poly.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let idx = n as i32 + offset;
            assert!(idx >= 0 && (idx as usize) < table.len(), "moment index {idx} out of range");
            out = out.add(&table[idx as usize].scale(c));
        }
        out
    }
}

/// Coefficients of the product of two polynomials given lowest power first.
pub fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
