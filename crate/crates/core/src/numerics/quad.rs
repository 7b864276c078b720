//! Globally adaptive Gauss–Kronrod (10/21) quadrature and the semi-infinite
//! and planar-polar drivers built on it.

#![allow(clippy::excessive_precision)]

use super::NumericsError;
use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cell::Cell;
use core::cmp::Ordering;
use core::f64::consts::PI;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_357_372_727,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Accuracy controls shared by every integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Distance past the decay scale at which Gaussian tails are dropped.
    pub truncation_radius: f64,
}

impl QuadSpec {
    /// Default tolerances with the tail cut where e^{-Ωx²} < e^{-40}.
    pub fn for_omega(omega: f64) -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-12, max_subdivisions: 2000, truncation_radius: libm::sqrt(40.0 / omega) }
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub fn validate(&self) -> Result<(), NumericsError> {
        let ok = self.rel_tol > 0.0 && self.abs_tol > 0.0 && self.truncation_radius > 0.0 && self.max_subdivisions >= 1;
        if ok {
            Ok(())
        } else {
            Err(NumericsError::Domain("invalid quadrature spec"))
        }
    }

    fn tolerance(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

impl Default for QuadSpec {
    fn default() -> Self {
        Self::for_omega(crate::wavefunction::DEFAULT_OMEGA)
    }
}

/// Integral estimate with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs_value: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut e = err.abs();
    if res_asc != 0.0 && e != 0.0 {
        let scale = libm::pow(200.0 * e / res_asc, 1.5);
        e = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * res_abs);
    }
    e
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment, NumericsError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = fc.abs() * WGK[10];
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    if !value.is_finite() {
        return Err(NumericsError::NonFinite { a, b });
    }
    let abs_value = res_abs * half.abs();
    let error = rescale_error((res_k - res_g) * half, abs_value, res_asc * half.abs());
    Ok(Segment { a, b, value, error, abs_value })
}

/// ∫_a^b f(x) dx.
pub fn integrate_1d<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
    integrate_1d_points(f, a, b, &[], spec)
}

/// ∫_a^b f(x) dx with known trouble spots (kinks, integrable singularities)
/// used as initial subdivision points. Points outside (a, b) are ignored.
pub fn integrate_1d_points<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    points: &[f64],
    spec: &QuadSpec,
) -> Result<QuadResult, NumericsError> {
    spec.validate()?;
    if a == b {
        return Ok(QuadResult { value: 0.0, error: 0.0 });
    }
    if b < a {
        let r = integrate_1d_points(f, b, a, points, spec)?;
        return Ok(QuadResult { value: -r.value, error: r.error });
    }
    let mut cuts: Vec<f64> = Vec::with_capacity(points.len() + 2);
    cuts.push(a);
    let mut inner: Vec<f64> = points.iter().copied().filter(|&p| p > a && p < b).collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    cuts.extend(inner);
    cuts.push(b);

    let mut heap = BinaryHeap::new();
    let mut frozen_value = 0.0;
    let mut frozen_error = 0.0;
    for w in cuts.windows(2) {
        heap.push(kronrod(&f, w[0], w[1])?);
    }
    let mut subdivisions = heap.len();
    loop {
        let (mut value, mut error, mut abs_value) = (frozen_value, frozen_error, 0.0);
        for s in heap.iter() {
            value += s.value;
            error += s.error;
            abs_value += s.abs_value;
        }
        if error <= spec.tolerance(value) || error <= 100.0 * f64::EPSILON * abs_value {
            return Ok(QuadResult { value, error });
        }
        let worst = match heap.pop() {
            Some(s) => s,
            None => return Err(NumericsError::NoConvergence { estimate: value, error, subdivisions }),
        };
        let mid = 0.5 * (worst.a + worst.b);
        let width = worst.b - worst.a;
        if width <= 1e-14 * worst.a.abs().max(worst.b.abs()).max(1e-300) || mid <= worst.a || mid >= worst.b {
            frozen_value += worst.value;
            frozen_error += worst.error;
            continue;
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(NumericsError::NoConvergence { estimate: value, error, subdivisions });
        }
        heap.push(kronrod(&f, worst.a, mid)?);
        heap.push(kronrod(&f, mid, worst.b)?);
        subdivisions += 1;
    }
}

/// ∫_0^∞ f(x) dx for integrands with a Gaussian envelope centred within
/// `decay_scale` of the origin. The range is cut at
/// `decay_scale + spec.truncation_radius`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    decay_scale: f64,
    spec: &QuadSpec,
) -> Result<QuadResult, NumericsError> {
    integrate_semi_infinite_points(f, decay_scale, &[], spec)
}

pub fn integrate_semi_infinite_points<F: Fn(f64) -> f64>(
    f: F,
    decay_scale: f64,
    points: &[f64],
    spec: &QuadSpec,
) -> Result<QuadResult, NumericsError> {
    let x_max = decay_scale.max(0.0) + spec.truncation_radius;
    integrate_1d_points(f, 0.0, x_max, points, spec)
}

/// A point handed to a polar integrand: polar coordinates about the centre
/// and the corresponding Cartesian position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarSample {
    pub s: f64,
    pub phi: f64,
    pub x: f64,
    pub y: f64,
}

/// Disk of radius `s_max` about `center` with optional break radii and angles.
#[derive(Debug, Clone, Copy)]
pub struct PolarDomain<'a> {
    pub center: (f64, f64),
    pub s_max: f64,
    pub radial_breaks: &'a [f64],
    pub angular_breaks: &'a [f64],
}

impl<'a> PolarDomain<'a> {
    pub fn disk(center: (f64, f64), s_max: f64) -> Self {
        Self { center, s_max, radial_breaks: &[], angular_breaks: &[] }
    }
}

/// ∫∫ f d²r over a disk in polar coordinates about `domain.center`. The
/// angular integral is done first for each radius so that odd 1/s kernels
/// cancel before the radial integration sees them.
pub fn integrate_2d_polar<F: Fn(PolarSample) -> f64>(
    f: F,
    domain: &PolarDomain<'_>,
    spec: &QuadSpec,
) -> Result<QuadResult, NumericsError> {
    spec.validate()?;
    let (cx, cy) = domain.center;
    let inner_spec = QuadSpec { abs_tol: spec.abs_tol * 0.1 / domain.s_max.max(1.0), ..*spec };
    let failure: Cell<Option<NumericsError>> = Cell::new(None);

    let mut phis: Vec<f64> = domain.angular_breaks.iter().map(|&p| libm::remainder(p, 2.0 * PI)).collect();
    phis.sort_by(f64::total_cmp);
    let phi0 = phis.first().copied().unwrap_or(0.0);

    let radial = |s: f64| -> f64 {
        if s == 0.0 {
            return 0.0;
        }
        let g = |phi: f64| {
            let (sn, cs) = libm::sincos(phi);
            f(PolarSample { s, phi, x: cx + s * cs, y: cy + s * sn })
        };
        match integrate_1d_points(g, phi0, phi0 + 2.0 * PI, &phis, &inner_spec) {
            Ok(r) => s * r.value,
            Err(e) => {
                if let NumericsError::NoConvergence { estimate, .. } = e {
                    if failure.get().is_none() {
                        failure.set(Some(e));
                    }
                    s * estimate
                } else {
                    failure.set(Some(e));
                    f64::NAN
                }
            }
        }
    };
    let result = integrate_1d_points(radial, 0.0, domain.s_max, domain.radial_breaks, spec);
    if let Some(e) = failure.get() {
        return Err(e);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_interval_is_zero() {
        let r = integrate_1d(|x| x * x, 2.0, 2.0, &QuadSpec::default()).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn reversed_limits() {
        let r = integrate_1d(|x| x, 1.0, 0.0, &QuadSpec::default()).unwrap();
        assert!((r.value + 0.5).abs() < 1e-15);
    }

    #[test]
    fn log_endpoint_singularity() {
        let r = integrate_1d(libm::log, 0.0, 1.0, &QuadSpec::default()).unwrap();
        assert!((r.value + 1.0).abs() < 1e-11);
    }

    #[test]
    fn non_convergence_reports_estimate() {
        let spec = QuadSpec { max_subdivisions: 2, ..QuadSpec::default() };
        match integrate_1d(|x| 1.0 / libm::sqrt(x), 0.0, 1.0, &spec) {
            Err(NumericsError::NoConvergence { estimate, .. }) => assert!((estimate - 2.0).abs() < 0.1),
            other => panic!("unexpected {other:?}"),
        }
    }
}
