//! Growth envelopes, majorant series, area integrals, and the Bohr-radius
//! root-finders.
//!
//! The lower/upper envelopes for the harmonic family are
//!
//! Φ(r) = ∫₀ʳ (1 - ζtⁿ)(1+t)^{2α-2} dt,   Ψ(r) = ∫₀ʳ (1 + ζtⁿ)(1-t)^{2α-2} dt,
//!
//! evaluated through their closed forms (powers plus a ₂F₁ factor) away
//! from r = 1 and through quadrature of the bounded integrand at r = 1.
//! The Bohr radius of the family is the unique root of
//! F_n(r) = Ψ(r) - Φ(1); kernel-class radii replace Ψ by the majorant
//! transform of the kernel and cap the reported radius at 1/3.

use std::cell::RefCell;

use num_complex::Complex;

use crate::classes::{
    bound_a_unchecked, is_log_branch, zeta_cap, HarmonicMapping, KernelForm, MaMindaKernel,
    Provenance,
};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::{adaptive_quadrature, beta, gauss_2f1, QuadratureSpec};

/// Lower bracket endpoint for every radius search.
const BRACKET_LO: f64 = 1e-6;
/// Upper bracket endpoint (closed-form kernels).
const BRACKET_HI: f64 = 1.0 - 1e-9;
/// Upper bracket endpoint when only a truncated series is available.
const BRACKET_HI_SERIES: f64 = 0.95;
/// Residual tolerance at the accepted root.
const RESIDUAL_TOL: f64 = 1e-9;

/// A point of the growth sandwich.
#[derive(Clone, Copy, Debug)]
pub struct EnvelopePoint<T> {
    pub r: T,
    pub lower: T,
    pub upper: T,
}

/// A computed Bohr radius.
#[derive(Clone, Copy, Debug)]
pub struct RadiusResult<T> {
    /// The root r_f of the radius equation.
    pub root: T,
    /// Final bracketing interval.
    pub bracket: (T, T),
    /// |F| at the root.
    pub residual: T,
    /// Bisection steps taken.
    pub iterations: u32,
    /// Whether the reported radius min{1/3, r_f} is capped at 1/3.
    pub capped: bool,
    /// F at the initial bracket endpoints (the upper one may be a
    /// certified lower bound when the full value is expensive).
    pub f_lo: T,
    pub f_hi: T,
}

impl<T: Real> RadiusResult<T> {
    /// The radius the inequality is claimed for: r_f, capped at 1/3 for
    /// the kernel-class results.
    pub fn reported_radius(&self) -> T {
        if self.capped {
            T::of(1.0 / 3.0)
        } else {
            self.root
        }
    }
}

/// One row of figure data: F_n sampled at r.
#[derive(Clone, Copy, Debug)]
pub struct FigureRow<T> {
    pub n: u32,
    pub r: T,
    pub f: T,
}

fn check_growth_params<T: Real>(alpha: T, zeta_abs: T, n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::Parameter("n must be a positive integer".into()));
    }
    // alpha = 1 is the documented limit case (kernel K(z) = z).
    if alpha < T::zero() || alpha > T::one() {
        return Err(Error::Parameter(format!(
            "growth envelopes need alpha in [0, 1], got {alpha}"
        )));
    }
    let cap = zeta_cap::<T>(n);
    if zeta_abs < T::zero() || zeta_abs > cap * (T::one() + T::of(1e-12)) {
        return Err(Error::Parameter(format!(
            "zeta_abs must lie in [0, 1/(2n-1)] = [0, {cap}], got {zeta_abs}"
        )));
    }
    Ok(())
}

fn check_radius<T: Real>(r: T) -> Result<()> {
    if r < T::zero() || r > T::one() {
        return Err(Error::Parameter(format!(
            "radius must lie in [0, 1], got {r}"
        )));
    }
    Ok(())
}

/// K(r) of the convex-order kernel, the analytic part of Ψ.
fn k_closed<T: Real>(alpha: T, r: T) -> T {
    if is_log_branch(alpha) {
        -(T::one() - r).ln()
    } else {
        let gamma = T::of(2.0) * alpha - T::one();
        (T::one() - (T::one() - r).powf(gamma)) / gamma
    }
}

/// -K(-r): the analytic part of Φ.
fn k_closed_neg<T: Real>(alpha: T, r: T) -> T {
    if is_log_branch(alpha) {
        (T::one() + r).ln()
    } else {
        let gamma = T::of(2.0) * alpha - T::one();
        ((T::one() + r).powf(gamma) - T::one()) / gamma
    }
}

/// ∫₀ʳ tⁿ (1-t)^{2α-2} dt = r^{n+1} ₂F₁(n+1, 2-2α; n+2; r)/(n+1).
fn co_term<T: Real>(alpha: T, r: T, n: u32, sign_flip: bool) -> Result<T> {
    let nf = T::of_usize(n as usize);
    let x = if sign_flip { -r } else { r };
    let f21 = if is_log_branch(alpha) {
        gauss_2f1(T::one(), nf + T::one(), nf + T::of(2.0), x)?
    } else {
        gauss_2f1(
            nf + T::one(),
            T::of(2.0) - T::of(2.0) * alpha,
            nf + T::of(2.0),
            x,
        )?
    };
    Ok(r.powi(n as i32 + 1) * f21 / (nf + T::one()))
}

/// Lower envelope Φ(r; α, ζ, n). At r = 1 the bounded integrand
/// (1 - ζtⁿ)(1+t)^{2α-2} is integrated by quadrature.
pub fn growth_phi<T: Real>(r: T, alpha: T, zeta_abs: T, n: u32) -> Result<T> {
    check_growth_params(alpha, zeta_abs, n)?;
    check_radius(r)?;
    if r == T::one() {
        let spec = QuadratureSpec::default();
        let expo = T::of(2.0) * alpha - T::of(2.0);
        let f = move |t: T| (T::one() - zeta_abs * t.powi(n as i32)) * (T::one() + t).powf(expo);
        return adaptive_quadrature(&f, T::zero(), T::one(), &spec);
    }
    Ok(k_closed_neg(alpha, r) - zeta_abs * co_term(alpha, r, n, true)?)
}

/// Upper envelope Ψ(r; α, ζ, n). Divergent at r = 1 for α ≤ 1/2; for
/// α > 1/2 the boundary value is 1/(2α-1) + ζ B(n+1, 2α-1).
pub fn growth_psi<T: Real>(r: T, alpha: T, zeta_abs: T, n: u32) -> Result<T> {
    check_growth_params(alpha, zeta_abs, n)?;
    check_radius(r)?;
    if r == T::one() {
        if alpha <= T::of(0.5) || is_log_branch(alpha) {
            return Err(Error::Divergent(
                "Psi(1) is infinite for alpha <= 1/2".into(),
            ));
        }
        let gamma = T::of(2.0) * alpha - T::one();
        let nf = T::of_usize(n as usize);
        return Ok(T::one() / gamma + zeta_abs * beta(nf + T::one(), gamma)?);
    }
    Ok(k_closed(alpha, r) + zeta_abs * co_term(alpha, r, n, false)?)
}

/// Quadrature over an integrand that may fail (kernel tail certification).
fn quad_checked<T: Real>(
    f: impl Fn(T) -> Result<T>,
    a: T,
    b: T,
    spec: &QuadratureSpec<T>,
) -> Result<T> {
    let pending: RefCell<Option<Error>> = RefCell::new(None);
    let g = |t: T| match f(t) {
        Ok(v) => v,
        Err(e) => {
            pending.borrow_mut().get_or_insert(e);
            T::zero()
        }
    };
    let out = adaptive_quadrature(&g, a, b, spec);
    if let Some(e) = pending.into_inner() {
        return Err(e);
    }
    out
}

/// Growth sandwich for the kernel class:
/// L(r) = -K(-r) - ζ ∫₀ʳ tⁿ K'(-t) dt, R(r) = K(r) + ζ ∫₀ʳ tⁿ K'(t) dt.
pub fn growth_lr<T: Real>(
    r: T,
    zeta_abs: T,
    n: u32,
    kernel: &MaMindaKernel<T>,
) -> Result<EnvelopePoint<T>> {
    check_radius(r)?;
    if zeta_abs < T::zero() || zeta_abs > zeta_cap::<T>(n) * (T::one() + T::of(1e-12)) {
        return Err(Error::Parameter(format!(
            "zeta_abs out of range: {zeta_abs}"
        )));
    }
    let spec = QuadratureSpec::default();
    let lower_int = quad_checked(
        |t| Ok(t.powi(n as i32) * kernel.k_prime_at(-t)?),
        T::zero(),
        r,
        &spec,
    )?;
    let lower = -kernel.k_at(-r)? - zeta_abs * lower_int;
    let upper = if r == T::one() {
        // K(1) is infinite for the geometric-type kernels; surface the
        // divergence rather than a huge partial value.
        match kernel.closed_form {
            Some(KernelForm::ConvexOrder { alpha }) if alpha <= T::of(0.5) => {
                return Err(Error::Divergent("R(1) is infinite for this kernel".into()));
            }
            _ => {
                let upper_int = quad_checked(
                    |t| Ok(t.powi(n as i32) * kernel.k_prime_at(t)?),
                    T::zero(),
                    r * (T::one() - T::of(1e-9)),
                    &spec,
                )?;
                kernel.k_at(r * (T::one() - T::of(1e-9)))? + zeta_abs * upper_int
            }
        }
    } else {
        let upper_int = quad_checked(
            |t| Ok(t.powi(n as i32) * kernel.k_prime_at(t)?),
            T::zero(),
            r,
            &spec,
        )?;
        kernel.k_at(r)? + zeta_abs * upper_int
    };
    if lower > upper {
        return Err(Error::NonFinite(format!("envelope inverted at r = {r}")));
    }
    Ok(EnvelopePoint { r, lower, upper })
}

/// Majorant series value M_f(r) = M_h(r) + M_g(r) with its certified
/// truncation tail. Extremal members use the closed form beyond the
/// series radius (their coefficient moduli are exactly the class bounds).
pub fn majorant_at<T: Real>(f: &HarmonicMapping<T>, r: T) -> Result<(T, T)> {
    if r < T::zero() || r >= T::one() {
        return Err(Error::Parameter(format!(
            "majorant radius must lie in [0, 1), got {r}"
        )));
    }
    let series_max = T::of(crate::series::DEFAULT_EVAL_RADIUS);
    if r > series_max {
        if let Provenance::Extremal { .. } = f.provenance() {
            let p = f.params();
            return Ok((growth_psi(r, p.alpha, p.zeta.norm(), p.n)?, T::zero()));
        }
        return Err(Error::EvaluationRadius {
            radius: r.to_f64().unwrap_or(f64::NAN),
            max: series_max.to_f64().unwrap_or(f64::NAN),
        });
    }
    let p = f.params();
    let alpha = p.alpha;
    let n = p.n as usize;
    let zeta_abs = p.zeta.norm();
    let z = Complex::new(r, T::zero());
    let mh = f
        .h()
        .majorant()
        .eval_enclosed(z, |k| bound_a_unchecked(k, alpha), series_max)?;
    let mg = f.g().majorant().eval_enclosed(
        z,
        |m| {
            crate::classes::coefficient_bound_b(m.max(n + 1), p.n, alpha, zeta_abs)
                .unwrap_or(T::zero())
        },
        series_max,
    )?;
    Ok((mh.value.re + mg.value.re, mh.tail + mg.tail))
}

// ─────────────────────────────────────────────────────────────────────
// Root finding
// ─────────────────────────────────────────────────────────────────────

struct Bisection<T> {
    root: T,
    bracket: (T, T),
    iterations: u32,
}

/// Bisection for an increasing F with F(lo) < 0 < F(hi); the endpoint
/// values are supplied by the caller (the upper one may be a certified
/// sign witness rather than the exact value).
fn bisect<T: Real>(
    f: &dyn Fn(T) -> Result<T>,
    mut lo: T,
    mut hi: T,
    interval_tol: T,
) -> Result<Bisection<T>> {
    let mut iterations = 0u32;
    while hi - lo > interval_tol && iterations < 200 {
        let mid = (lo + hi) / T::of(2.0);
        if mid <= lo || mid >= hi {
            break; // interval at floating resolution
        }
        let fm = f(mid)?;
        if fm < T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(Bisection {
        root: (lo + hi) / T::of(2.0),
        bracket: (lo, hi),
        iterations,
    })
}

fn validated_tol<T: Real>(tol: T) -> Result<T> {
    if tol < T::of(1e-12) {
        return Err(Error::Parameter("interval tolerance below 1e-12".into()));
    }
    Ok(tol)
}

fn finish_radius<T: Real>(
    f: &dyn Fn(T) -> Result<T>,
    b: Bisection<T>,
    f_lo: T,
    f_hi: T,
    cap_at_third: bool,
) -> Result<RadiusResult<T>> {
    let residual = f(b.root)?.abs();
    if residual > T::of(RESIDUAL_TOL) {
        return Err(Error::Residual {
            root: b.root.to_f64().unwrap_or(f64::NAN),
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let capped = cap_at_third && b.root > T::of(1.0 / 3.0);
    Ok(RadiusResult {
        root: b.root,
        bracket: b.bracket,
        residual,
        iterations: b.iterations,
        capped,
        f_lo,
        f_hi,
    })
}

/// Bohr radius of the harmonic family: the unique root of
/// F_n(r) = Ψ(r; α, ζ, n) - Φ(1; α, ζ, n) in (0, 1). F_n is strictly
/// increasing (Ψ' ≥ 1), so bisection on [1e-6, 1-1e-9] suffices; the
/// radius is r_f itself, uncapped.
pub fn bohr_radius_mzn<T: Real>(alpha: T, zeta_abs: T, n: u32, tol: T) -> Result<RadiusResult<T>> {
    let tol = validated_tol(tol)?;
    check_growth_params(alpha, zeta_abs, n)?;
    let l_boundary = growth_phi(T::one(), alpha, zeta_abs, n)?;
    let f = move |r: T| Ok(growth_psi(r, alpha, zeta_abs, n)? - l_boundary);

    let lo = T::of(BRACKET_LO);
    let hi = T::of(BRACKET_HI);
    let f_lo = f(lo)?;
    // Cheap certified lower bound first: Ψ(hi) ≥ K(hi), so a positive
    // K(hi) - Φ(1) settles the sign without the hypergeometric factor.
    let quick = k_closed(alpha, hi) - l_boundary;
    let f_hi = if quick > T::zero() { quick } else { f(hi)? };
    if f_lo >= T::zero() || f_hi <= T::zero() {
        return Err(Error::Bracket {
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
            f_lo: f_lo.to_f64().unwrap_or(f64::NAN),
            f_hi: f_hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    let b = bisect(&f, lo, hi, tol)?;
    finish_radius(&f, b, f_lo, f_hi, false)
}

/// The boundary distance bound L(ζ, n, 1) = -K(-1) - ζ ∫₀¹ tⁿ K'(-t) dt.
pub fn kernel_boundary_distance<T: Real>(
    kernel: &MaMindaKernel<T>,
    zeta_abs: T,
    n: u32,
) -> Result<T> {
    let spec = QuadratureSpec::default();
    let int = quad_checked(
        |t| Ok(t.powi(n as i32) * kernel.k_prime_at(-t)?),
        T::zero(),
        T::one(),
        &spec,
    )?;
    Ok(-kernel.k_at_minus_one()? - zeta_abs * int)
}

fn radius_from_h<T: Real>(
    h: impl Fn(T) -> Result<T>,
    hi_witness: impl Fn(T) -> Result<T>,
    series_only: bool,
    tol: T,
) -> Result<RadiusResult<T>> {
    let lo = T::of(BRACKET_LO);
    let hi = if series_only {
        T::of(BRACKET_HI_SERIES)
    } else {
        T::of(BRACKET_HI)
    };
    let f_lo = h(lo)?;
    // The integral terms of H are nonnegative, so M_K(hi) - L certifies a
    // positive sign without integrating the near-boundary spike.
    let quick = hi_witness(hi)?;
    let f_hi = if quick > T::zero() { quick } else { h(hi)? };
    if f_lo >= T::zero() || f_hi <= T::zero() {
        return Err(Error::Bracket {
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
            f_lo: f_lo.to_f64().unwrap_or(f64::NAN),
            f_hi: f_hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    let href = &h;
    let b = bisect(&|r| href(r), lo, hi, tol)?;
    finish_radius(&|r| href(r), b, f_lo, f_hi, true)
}

/// Bohr radius for the kernel class: smallest root of
/// H₁(r) = M_K(r) + ζ ∫₀ʳ tⁿ M_{K'}(t) dt - L(ζ, n, 1). The reported
/// radius is min{1/3, r_f} with the capped flag set when the cap binds.
pub fn bohr_radius_hcphi<T: Real>(
    kernel: &MaMindaKernel<T>,
    zeta_abs: T,
    n: u32,
    tol: T,
) -> Result<RadiusResult<T>> {
    let tol = validated_tol(tol)?;
    let l_boundary = kernel_boundary_distance(kernel, zeta_abs, n)?;
    let spec = QuadratureSpec::default();
    let h1 = move |r: T| -> Result<T> {
        let int = quad_checked(
            |t| Ok(t.powi(n as i32) * kernel.k_prime_majorant_at(t)?),
            T::zero(),
            r,
            &spec,
        )?;
        Ok(kernel.k_majorant_at(r)? + zeta_abs * int - l_boundary)
    };
    let witness = |r: T| Ok(kernel.k_majorant_at(r)? - l_boundary);
    radius_from_h(h1, witness, kernel.closed_form.is_none(), tol)
}

/// Improved Bohr radius: smallest root of
/// H₂(r) = H₁(r) + ∫₀ʳ t (1 - ζ² t^{2n}) (K'(t))² dt. The added area
/// term is nonnegative, so the root never exceeds the plain one.
pub fn improved_bohr_radius<T: Real>(
    kernel: &MaMindaKernel<T>,
    zeta_abs: T,
    n: u32,
    tol: T,
) -> Result<RadiusResult<T>> {
    let tol = validated_tol(tol)?;
    let l_boundary = kernel_boundary_distance(kernel, zeta_abs, n)?;
    let spec = QuadratureSpec::default();
    let z2 = zeta_abs * zeta_abs;
    let h2 = move |r: T| -> Result<T> {
        let maj_int = quad_checked(
            |t| Ok(t.powi(n as i32) * kernel.k_prime_majorant_at(t)?),
            T::zero(),
            r,
            &spec,
        )?;
        let area_int = quad_checked(
            |t| {
                let kp = kernel.k_prime_at(t)?;
                Ok(t * (T::one() - z2 * t.powi(2 * n as i32)) * kp * kp)
            },
            T::zero(),
            r,
            &spec,
        )?;
        Ok(kernel.k_majorant_at(r)? + zeta_abs * maj_int + area_int - l_boundary)
    };
    let witness = |r: T| Ok(kernel.k_majorant_at(r)? - l_boundary);
    radius_from_h(h2, witness, kernel.closed_form.is_none(), tol)
}

// ─────────────────────────────────────────────────────────────────────
// Area
// ─────────────────────────────────────────────────────────────────────

/// Quadrature sandwich for the image area:
/// 2π ∫₀ʳ t (1 - ζ²t^{2n}) (K'(∓t))² dt.
pub fn area_bounds<T: Real>(
    r: T,
    zeta_abs: T,
    n: u32,
    kernel: &MaMindaKernel<T>,
) -> Result<(T, T)> {
    if r < T::zero() || r >= T::one() {
        return Err(Error::Parameter(format!(
            "area radius must lie in [0, 1), got {r}"
        )));
    }
    let spec = QuadratureSpec::default();
    let z2 = zeta_abs * zeta_abs;
    let two_pi = T::of(std::f64::consts::TAU);
    let weight = move |t: T| t * (T::one() - z2 * t.powi(2 * n as i32));
    let lower = quad_checked(
        |t| {
            let kp = kernel.k_prime_at(-t)?;
            Ok(weight(t) * kp * kp)
        },
        T::zero(),
        r,
        &spec,
    )? * two_pi;
    let upper = quad_checked(
        |t| {
            let kp = kernel.k_prime_at(t)?;
            Ok(weight(t) * kp * kp)
        },
        T::zero(),
        r,
        &spec,
    )? * two_pi;
    Ok((lower, upper))
}

/// Exact area of f(D_r) from the coefficient identity
/// S_r = π Σ k (|a_k|² - |b_k|²) r^{2k}, with the truncation tail
/// certified against the class coefficient bounds (must clear 1e-8).
pub fn area_exact<T: Real>(f: &HarmonicMapping<T>, r: T) -> Result<T> {
    if r < T::zero() || r >= T::one() {
        return Err(Error::Parameter(format!(
            "area radius must lie in [0, 1), got {r}"
        )));
    }
    let pi = T::of(std::f64::consts::PI);
    let order = f.h().order().min(f.g().order());
    let r2 = r * r;
    let mut sum = T::zero();
    let mut r2k = T::one();
    for k in 1..=order {
        r2k *= r2;
        let ak = f.h().coeff(k).norm();
        let bk = f.g().coeff(k).norm();
        sum += T::of_usize(k) * (ak * ak - bk * bk) * r2k;
    }
    // Tail: k (A(k)² + B(k)²) r^{2k}  ≤  2 k A(k)² r^{2k} since the
    // co-analytic bound never exceeds the analytic one here.
    let p = f.params();
    let mut tail = T::zero();
    let mut rp = r2.powi(order as i32);
    let mut k = order + 1;
    loop {
        rp *= r2;
        let a = bound_a_unchecked(k, p.alpha);
        let term = T::of(2.0) * T::of_usize(k) * a * a * rp;
        tail += term;
        if term < T::of(1e-16) * (T::one() + sum.abs()) {
            tail += term * r2 / (T::one() - r2);
            break;
        }
        k += 1;
        if k > order + 1_000_000 {
            return Err(Error::TailCertification(
                "area tail did not contract".into(),
            ));
        }
    }
    if tail > T::of(1e-8) * (T::one() + sum.abs()) {
        return Err(Error::TailCertification(format!(
            "area tail {tail} above 1e-8 at r = {r}; raise the series order"
        )));
    }
    Ok(pi * sum)
}

// ─────────────────────────────────────────────────────────────────────
// Figure data
// ─────────────────────────────────────────────────────────────────────

/// Samples F_n(r) = Ψ(r) - Φ(1) over the grid for each n, with ζ tied to
/// n by ζ = 1/(2n).
pub fn figure_data<T: Real>(alpha: T, n_list: &[u32], r_grid: &[T]) -> Result<Vec<FigureRow<T>>> {
    for &r in r_grid {
        if r < T::zero() || r > T::of(0.999) {
            return Err(Error::Parameter(
                "figure grid must lie within [0, 0.999]".into(),
            ));
        }
    }
    let mut rows = Vec::with_capacity(n_list.len() * r_grid.len());
    for &n in n_list {
        let zeta_abs = T::one() / T::of_usize(2 * n as usize);
        let l_boundary = growth_phi(T::one(), alpha, zeta_abs, n)?;
        for &r in r_grid {
            let f = growth_psi(r, alpha, zeta_abs, n)? - l_boundary;
            rows.push(FigureRow { n, r, f });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::HarmonicMapParams;
    use crate::series::TruncatedSeries;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn phi_at_boundary_log_case() {
        // Φ(1; 1/2, 1/2, 1) = 1.5 ln 2 - 0.5.
        let v = growth_phi(1.0, 0.5, 0.5, 1).unwrap();
        assert!((v - (1.5 * LN2 - 0.5)).abs() < 1e-11);
    }

    #[test]
    fn psi_log_case_closed_form() {
        // Ψ(r; 1/2, 1/2, 1) = 1.5(-ln(1-r)) - 0.5 r.
        for r in [0.0f64, 0.1, 0.386555, 0.7, 0.95] {
            let v = growth_psi(r, 0.5, 0.5, 1).unwrap();
            let oracle = -1.5 * (1.0 - r).ln() - 0.5 * r;
            assert!((v - oracle).abs() < 1e-10, "r = {r}: {v} vs {oracle}");
        }
    }

    #[test]
    fn envelopes_vanish_at_zero() {
        assert_eq!(growth_phi(0.0, 0.3, 0.2, 1).unwrap(), 0.0);
        assert_eq!(growth_psi(0.0, 0.3, 0.2, 1).unwrap(), 0.0);
    }

    #[test]
    fn radius_beyond_one_is_rejected() {
        assert!(growth_phi(1.5, 0.5, 0.5, 1).is_err());
        assert!(growth_psi(-0.1, 0.5, 0.5, 1).is_err());
    }

    #[test]
    fn psi_at_boundary_converges_only_above_half() {
        assert!(matches!(
            growth_psi(1.0, 0.5, 0.5, 1),
            Err(Error::Divergent(_))
        ));
        assert!(matches!(
            growth_psi(1.0, 0.3, 0.2, 1),
            Err(Error::Divergent(_))
        ));
        // α = 0.9: Ψ(1) = 1/0.8 + ζ B(2, 0.8).
        let v: f64 = growth_psi(1.0, 0.9, 0.5, 1).unwrap();
        let b = beta(2.0, 0.8).unwrap();
        assert!((v - (1.25 + 0.5 * b)).abs() < 1e-10);
    }

    #[test]
    fn closed_forms_match_integral_forms() {
        // Spot check of the cross-path identity (the acceptance suite
        // runs the full grid).
        let spec = QuadratureSpec::default();
        for (alpha, zeta, n) in [
            (0.5, 0.5, 1u32),
            (0.9, 0.25, 2),
            (0.2, 0.1, 1),
            (0.75, 0.2, 3),
        ] {
            for r in [0.15, 0.5, 0.85] {
                let phi = growth_phi(r, alpha, zeta, n).unwrap();
                let psi = growth_psi(r, alpha, zeta, n).unwrap();
                let phi_int = adaptive_quadrature(
                    &|t: f64| (1.0 - zeta * t.powi(n as i32)) * (1.0 + t).powf(2.0 * alpha - 2.0),
                    0.0,
                    r,
                    &spec,
                )
                .unwrap();
                let psi_int = adaptive_quadrature(
                    &|t: f64| (1.0 + zeta * t.powi(n as i32)) * (1.0 - t).powf(2.0 * alpha - 2.0),
                    0.0,
                    r,
                    &spec,
                )
                .unwrap();
                assert!((phi - phi_int).abs() < 1e-10, "phi {alpha} {zeta} {n} {r}");
                assert!((psi - psi_int).abs() < 1e-10, "psi {alpha} {zeta} {n} {r}");
            }
        }
    }

    #[test]
    fn growth_lr_boundary_value_for_halfplane_kernel() {
        // K = z/(1-z), ζ = 1/2, n = 1: L(1) = 0.75 - 0.5 ln 2.
        let kernel = MaMindaKernel::convex_order(0.0, 64).unwrap();
        let p = growth_lr(1.0, 0.5, 1, &kernel);
        // R(1) diverges for this kernel.
        assert!(p.is_err());
        let l = kernel_boundary_distance(&kernel, 0.5, 1).unwrap();
        assert!((l - (0.75 - 0.5 * LN2)).abs() < 1e-11);
    }

    #[test]
    fn growth_lr_with_zero_zeta_reduces_to_kernel_growth() {
        let kernel = MaMindaKernel::convex_order(0.5, 64).unwrap();
        for r in [0.2, 0.5, 0.8] {
            let p = growth_lr(r, 0.0, 1, &kernel).unwrap();
            assert_relative_eq!(p.lower, (1.0f64 + r).ln(), epsilon = 1e-11);
            assert_relative_eq!(p.upper, -(1.0f64 - r).ln(), epsilon = 1e-11);
        }
    }

    #[test]
    fn growth_lr_matches_phi_psi_for_the_alpha_kernel() {
        for (alpha, zeta, n) in [(0.5, 0.5, 1u32), (0.9, 0.25, 2), (0.25, 0.3, 1)] {
            let kernel = MaMindaKernel::convex_order(alpha, 64).unwrap();
            for r in [0.1f64, 0.4, 0.8] {
                let p = growth_lr(r, zeta, n, &kernel).unwrap();
                let phi = growth_phi(r, alpha, zeta, n).unwrap();
                let psi = growth_psi(r, alpha, zeta, n).unwrap();
                assert!((p.lower - phi).abs() < 1e-9, "L vs Phi at {r}");
                assert!((p.upper - psi).abs() < 1e-9, "R vs Psi at {r}");
            }
        }
    }

    #[test]
    fn majorant_of_identity_map() {
        let params = HarmonicMapParams::new(0.5, c(0.0, 0.0), 1).unwrap();
        let h = TruncatedSeries::identity(64);
        let g = TruncatedSeries::zero(64);
        let f = HarmonicMapping::new(h, g, params, Provenance::KernelBased).unwrap();
        let (v, tail) = majorant_at(&f, 0.37).unwrap();
        assert_relative_eq!(v, 0.37, epsilon = 1e-12);
        assert!(tail < 1e-12);
        let (v0, _) = majorant_at(&f, 0.0).unwrap();
        assert_eq!(v0, 0.0);
    }

    #[test]
    fn majorant_of_extremal_equals_psi() {
        let params = HarmonicMapParams::new(0.5, c(0.5, 0.0), 1).unwrap();
        let f = HarmonicMapping::extremal(params, c(1.0, 0.0), 256).unwrap();
        for r in [0.2, 0.5, 0.9] {
            let (v, tail) = majorant_at(&f, r).unwrap();
            let psi = growth_psi(r, 0.5, 0.5, 1).unwrap();
            assert!((v - psi).abs() <= tail + 1e-8, "r = {r}: {v} vs {psi}");
        }
        // Past the series radius the closed form takes over.
        let (v, tail) = majorant_at(&f, 0.97).unwrap();
        assert_eq!(tail, 0.0);
        assert!((v - growth_psi(0.97, 0.5, 0.5, 1).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn bohr_radius_first_table_entry() {
        let res: RadiusResult<f64> = bohr_radius_mzn(0.5, 0.5, 1, 1e-10).unwrap();
        assert!((res.root - 0.386555).abs() < 5e-6, "root {}", res.root);
        assert!(!res.capped);
        assert!(res.residual <= 1e-9);
        assert!(res.bracket.1 - res.bracket.0 <= 1e-10);
    }

    #[test]
    fn bohr_radius_second_table_entry() {
        let res: RadiusResult<f64> = bohr_radius_mzn(0.9, 0.25, 2, 1e-10).unwrap();
        assert!((res.root - 0.731273).abs() < 5e-6, "root {}", res.root);
    }

    #[test]
    fn bohr_radius_alpha_one_limit_is_sqrt7_minus_2() {
        let res = bohr_radius_mzn(1.0, 0.5, 1, 1e-10).unwrap();
        assert!(
            (res.root - (7.0f64.sqrt() - 2.0)).abs() < 1e-9,
            "root {}",
            res.root
        );
    }

    #[test]
    fn hcphi_radius_for_halfplane_kernel() {
        // Oracle: bisection of the elementary closed form
        // r/(1-r) + 0.5 (1/(1-r) + ln(1-r) - 1) = 0.75 - 0.5 ln 2.
        let target = 0.75 - 0.5 * LN2;
        let h = |r: f64| r / (1.0 - r) + 0.5 * (1.0 / (1.0 - r) + (1.0 - r).ln() - 1.0) - target;
        let (mut lo, mut hi) = (1e-6, 0.9);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if h(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        assert!((oracle - 0.2728).abs() < 5e-5, "oracle {oracle}");

        let kernel = MaMindaKernel::convex_order(0.0, 64).unwrap();
        let res = bohr_radius_hcphi(&kernel, 0.5, 1, 1e-10).unwrap();
        assert!((res.root - oracle).abs() < 1e-8, "{} vs {oracle}", res.root);
        assert!(!res.capped);
        assert_relative_eq!(res.reported_radius(), res.root);
    }

    #[test]
    fn hcphi_radius_caps_at_one_third() {
        // ζ = 0, K = -log(1-z): root of -ln(1-r) = ln 2 is 1/2, capped.
        let kernel = MaMindaKernel::<f64>::convex_order(0.5, 64).unwrap();
        let res = bohr_radius_hcphi(&kernel, 0.0, 1, 1e-10).unwrap();
        assert!((res.root - 0.5).abs() < 1e-9, "root {}", res.root);
        assert!(res.capped);
        assert_relative_eq!(res.reported_radius(), 1.0 / 3.0);
    }

    #[test]
    fn improved_radius_log_kernel_oracle() {
        // ζ = 0, K = -log(1-z): root of
        // -ln(1-r) + 1/(1-r) + ln(1-r) - 1 = ln 2, i.e. 1/(1-r) = 1 + ln 2.
        let kernel = MaMindaKernel::convex_order(0.5, 64).unwrap();
        let res = improved_bohr_radius(&kernel, 0.0, 1, 1e-10).unwrap();
        let oracle = 1.0 - 1.0 / (1.0 + LN2);
        assert!((res.root - oracle).abs() < 1e-9, "{} vs {oracle}", res.root);
    }

    #[test]
    fn improved_radius_never_exceeds_plain_radius() {
        for (alpha, zeta, n) in [(0.5, 0.4, 1u32), (0.0, 0.3, 1), (0.75, 0.2, 2)] {
            let kernel = MaMindaKernel::convex_order(alpha, 64).unwrap();
            let plain = bohr_radius_hcphi(&kernel, zeta, n, 1e-10).unwrap();
            let improved = improved_bohr_radius(&kernel, zeta, n, 1e-10).unwrap();
            assert!(
                improved.root < plain.root,
                "alpha {alpha}: {} !< {}",
                improved.root,
                plain.root
            );
        }
        let lin = MaMindaKernel::linear_phi(1.2, 64).unwrap();
        let plain = bohr_radius_hcphi(&lin, 0.4, 1, 1e-10).unwrap();
        let improved = improved_bohr_radius(&lin, 0.4, 1, 1e-10).unwrap();
        assert!(improved.root < plain.root);
    }

    #[test]
    fn area_of_identity_is_pi_r_squared() {
        let params = HarmonicMapParams::new(0.5, c(0.0, 0.0), 1).unwrap();
        let h = TruncatedSeries::identity(64);
        let g = TruncatedSeries::zero(64);
        let f = HarmonicMapping::new(h, g, params, Provenance::KernelBased).unwrap();
        for r in [0.25, 0.5, 0.75] {
            let s = area_exact(&f, r).unwrap();
            assert!((s - std::f64::consts::PI * r * r).abs() < 1e-12);
        }
    }

    #[test]
    fn area_of_halfplane_kernel_matches_closed_sum() {
        // h = z/(1-z), g = 0: S_r = π r²/(1-r²)².
        let kernel = MaMindaKernel::convex_order(0.0, 128).unwrap();
        let f = HarmonicMapping::from_kernel(&kernel, c(0.0, 0.0), 1).unwrap();
        let r = 0.5f64;
        let s = area_exact(&f, r).unwrap();
        let closed = std::f64::consts::PI * r * r / (1.0 - r * r).powi(2);
        assert!((s - closed).abs() < 1e-10);
        let (lower, upper) = area_bounds(r, 0.0, 1, &kernel).unwrap();
        assert!(lower <= s + 1e-10 && s <= upper + 1e-10);
        // Cross-check the upper bound against 2π ∫ t (1-t)^{-4} dt.
        let spec = QuadratureSpec::default();
        let direct = adaptive_quadrature(&|t: f64| t * (1.0 - t).powi(-4), 0.0, r, &spec).unwrap()
            * std::f64::consts::TAU;
        assert!((upper - direct).abs() < 1e-9);
    }

    #[test]
    fn area_integrand_nonnegative_at_boundary_zeta() {
        let zeta = 1.0 / 3.0; // boundary for n = 2
        for t in [0.0f64, 0.3, 0.7, 0.99] {
            let w: f64 = t * (1.0 - zeta * zeta * t.powi(4));
            assert!(w >= 0.0);
        }
    }

    #[test]
    fn figure_rows_change_sign_at_the_table_roots() {
        let grid: Vec<f64> = (0..1000).map(|i| i as f64 * 0.001).collect();
        let rows = figure_data(0.5, &[1], &grid).unwrap();
        assert!(rows[0].f < 0.0);
        let mut crossings = Vec::new();
        for w in rows.windows(2) {
            if w[0].f < 0.0 && w[1].f >= 0.0 {
                crossings.push((w[0].r, w[1].r));
            }
        }
        assert_eq!(crossings.len(), 1);
        assert!(crossings[0].0 <= 0.386555 && 0.386555 <= crossings[0].1);

        let rows = figure_data(0.9, &[5], &grid).unwrap();
        let mut crossings = Vec::new();
        for w in rows.windows(2) {
            if w[0].f < 0.0 && w[1].f >= 0.0 {
                crossings.push((w[0].r, w[1].r));
            }
        }
        assert_eq!(crossings.len(), 1);
        assert!(crossings[0].0 <= 0.800709 && 0.800709 <= crossings[0].1);
    }

    #[test]
    fn f_is_strictly_increasing_on_the_grid() {
        let grid: Vec<f64> = (0..100).map(|i| i as f64 * 0.01).collect();
        for (alpha, n) in [(0.5, 1u32), (0.9, 3)] {
            let rows = figure_data(alpha, &[n], &grid).unwrap();
            for w in rows.windows(2) {
                assert!(w[1].f > w[0].f);
            }
        }
    }
}
