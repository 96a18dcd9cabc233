//! Gauss hypergeometric evaluation and adaptive quadrature — the two
//! numeric kernels behind the growth envelopes and Bohr-radius equations.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Iteration budget for the ₂F₁ summation. Arguments near the unit
/// circle with slowly decaying terms legitimately need a lot of them.
const F21_MAX_TERMS: usize = 2_000_000;

/// Tolerances for [`adaptive_quadrature`].
#[derive(Clone, Copy, Debug)]
pub struct QuadratureSpec<T> {
    /// Absolute tolerance on the integral.
    pub abs_tol: T,
    /// Maximum interval-halving depth.
    pub max_depth: u32,
}

impl<T: Real> Default for QuadratureSpec<T> {
    fn default() -> Self {
        Self {
            abs_tol: T::of(1e-12),
            max_depth: 40,
        }
    }
}

impl<T: Real> QuadratureSpec<T> {
    pub fn new(abs_tol: T, max_depth: u32) -> Result<Self> {
        if abs_tol <= T::zero() {
            return Err(Error::Parameter("abs_tol must be positive".into()));
        }
        if max_depth == 0 {
            return Err(Error::Parameter("max_depth must be at least 1".into()));
        }
        Ok(Self { abs_tol, max_depth })
    }
}

/// Gauss hypergeometric ₂F₁(a, b; c; x) by direct summation of
/// Σ (a)ₖ(b)ₖ/((c)ₖ k!) xᵏ for |x| < 1.
///
/// The running term is updated through the ratio
/// (a+k)(b+k)/((c+k)(k+1))·x, which is symmetric in a and b as computed,
/// so `gauss_2f1(a, b, c, x) == gauss_2f1(b, a, c, x)` exactly. Summation
/// stops once |term| < 1e-16·|partial sum| for three consecutive terms
/// (guards against accidental zero terms).
///
/// Endpoint values (|x| = 1) are never computed here; the growth module
/// obtains them from integral representations instead.
pub fn gauss_2f1<T: Real>(a: T, b: T, c: T, x: T) -> Result<T> {
    if c <= T::zero() && c.fract().is_zero() {
        return Err(Error::Pole {
            c: c.to_f64().unwrap_or(f64::NAN),
        });
    }
    if x.abs() >= T::one() {
        return Err(Error::HypergeometricDomain {
            x: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    if x.is_zero() {
        return Ok(T::one());
    }

    let rel_cutoff = T::of(1e-16).max(T::epsilon() * T::of(0.01));
    let mut sum = T::one();
    let mut term = T::one();
    let mut small_streak = 0u32;
    for k in 0..F21_MAX_TERMS {
        let kf = T::of_usize(k);
        // (a+k)(b+k) is formed first so the update commutes exactly in a, b.
        let ratio = ((a + kf) * (b + kf)) / ((c + kf) * (kf + T::one()));
        term = term * ratio * x;
        sum += term;
        if !sum.is_finite() {
            return Err(Error::NonFinite(format!("2F1 partial sum at term {k}")));
        }
        if term.abs() < rel_cutoff * sum.abs() {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::SeriesConvergence {
        max_terms: F21_MAX_TERMS,
    })
}

/// Adaptive quadrature of `f` over [a, b] by interval halving with an
/// embedded Simpson pair; the error estimate on each interval is the
/// difference between the one-panel and two-panel rules.
///
/// Intervals that exhaust `spec.max_depth` contribute their remaining
/// error estimate to an unachieved-error total; when that total exceeds
/// `spec.abs_tol` the call fails with the best estimate and its bound.
pub fn adaptive_quadrature<T: Real>(
    f: &dyn Fn(T) -> T,
    a: T,
    b: T,
    spec: &QuadratureSpec<T>,
) -> Result<T> {
    if a > b {
        return Err(Error::Parameter(format!(
            "empty interval: a = {a} > b = {b}"
        )));
    }
    if a == b {
        return Ok(T::zero());
    }
    let fa = f(a);
    let fb = f(b);
    let m = (a + b) / T::of(2.0);
    let fm = f(m);
    for (label, v) in [("f(a)", fa), ("f(b)", fb), ("f(mid)", fm)] {
        if !v.is_finite() {
            return Err(Error::NonFinite(format!("integrand {label} not finite")));
        }
    }
    let whole = simpson(a, b, fa, fm, fb);
    let mut failed = T::zero();
    let value = refine(
        f,
        a,
        b,
        fa,
        fm,
        fb,
        whole,
        spec.abs_tol,
        spec.max_depth,
        &mut failed,
    )?;
    if failed > spec.abs_tol {
        return Err(Error::QuadratureConvergence {
            best: value.to_f64().unwrap_or(f64::NAN),
            bound: failed.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(value)
}

fn simpson<T: Real>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / T::of(6.0) * (fa + T::of(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<T: Real>(
    f: &dyn Fn(T) -> T,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
    failed: &mut T,
) -> Result<T> {
    let m = (a + b) / T::of(2.0);
    let lm = (a + m) / T::of(2.0);
    let rm = (m + b) / T::of(2.0);
    let flm = f(lm);
    let frm = f(rm);
    if !flm.is_finite() || !frm.is_finite() {
        return Err(Error::NonFinite(format!(
            "integrand not finite inside [{a}, {b}]"
        )));
    }
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let err = (left + right - whole).abs();
    // |S2 - S1|/15 estimates the two-panel error; keep the raw difference
    // as a conservative acceptance margin.
    if err <= T::of(15.0) * tol || err < T::epsilon() * whole.abs() {
        return Ok(left + right + (left + right - whole) / T::of(15.0));
    }
    if depth == 0 {
        *failed += err;
        return Ok(left + right);
    }
    let half_tol = tol / T::of(2.0);
    let l = refine(f, a, m, fa, flm, fm, left, half_tol, depth - 1, failed)?;
    let r = refine(f, m, b, fm, frm, fb, right, half_tol, depth - 1, failed)?;
    Ok(l + r)
}

/// Natural log of the gamma function for x > 0, Lanczos approximation
/// (g = 7, 9 coefficients), with the reflection formula below 1/2.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if x <= T::zero() || x.is_nan() {
        return Err(Error::Parameter(format!("ln_gamma needs x > 0, got {x}")));
    }
    const LANCZOS: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    let half = T::of(0.5);
    if x < half {
        // Γ(x)Γ(1-x) = π / sin(πx)
        let pi = T::of(std::f64::consts::PI);
        let sin = (pi * x).sin();
        return Ok((pi / sin).ln() - ln_gamma(T::one() - x)?);
    }
    let xm1 = x - T::one();
    let mut acc = T::of(LANCZOS[0]);
    for (i, &coef) in LANCZOS.iter().enumerate().skip(1) {
        acc += T::of(coef) / (xm1 + T::of_usize(i));
    }
    let t = xm1 + T::of(7.5);
    let ln_sqrt_2pi = T::of(0.918_938_533_204_672_8);
    Ok(ln_sqrt_2pi + (xm1 + half) * t.ln() - t + acc.ln())
}

/// Euler beta function B(a, b) for positive arguments.
pub fn beta<T: Real>(a: T, b: T) -> Result<T> {
    Ok((ln_gamma(a)? + ln_gamma(b)? - ln_gamma(a + b)?).exp())
}
