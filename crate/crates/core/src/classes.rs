//! Class constructions: Carathéodory mixtures, members of the harmonic
//! family (sampled and extremal), Ma-Minda convex kernels, and the sharp
//! coefficient-bound formulas.

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::TruncatedSeries;

/// Predicate for the logarithmic branch: the closed forms split at
/// α = 1/2 and the limit is the logarithmic case.
pub fn is_log_branch<T: Real>(alpha: T) -> bool {
    (T::of(2.0) * alpha - T::one()).abs() < T::of(1e-9)
}

/// Sharp bound on |a_k| for the analytic part: (1/k!) ∏_{j=2}^{k} (j - 2α).
///
/// Defined for k ≥ 2 (a₁ = 1 by normalization).
pub fn coefficient_bound_a<T: Real>(k: usize, alpha: T) -> Result<T> {
    if k < 2 {
        return Err(Error::Parameter(format!(
            "coefficient bound needs k >= 2, got {k}"
        )));
    }
    check_alpha_range(alpha)?;
    Ok(bound_a_unchecked(k, alpha))
}

/// Like [`coefficient_bound_a`] but defined for every k ≥ 1 (returns 1 at
/// k = 1), for tail majorants.
pub fn bound_a_unchecked<T: Real>(k: usize, alpha: T) -> T {
    let mut a = T::one();
    for j in 2..=k {
        a *= (T::of_usize(j) - T::of(2.0) * alpha) / T::of_usize(j);
    }
    a
}

/// Sharp bound on |b_m| for the co-analytic part, m ≥ n+1:
/// |ζ| ∏_{j=2}^{m-n} (j - 2α) / (m (m-n-1)!).
pub fn coefficient_bound_b<T: Real>(m: usize, n: u32, alpha: T, zeta_abs: T) -> Result<T> {
    check_alpha_range(alpha)?;
    let n = n as usize;
    if m < n + 1 {
        return Err(Error::Parameter(format!(
            "co-analytic coefficients start at index n+1 = {}, got {m}",
            n + 1
        )));
    }
    Ok(bound_b_unchecked(m, n, alpha, zeta_abs))
}

fn bound_b_unchecked<T: Real>(m: usize, n: usize, alpha: T, zeta_abs: T) -> T {
    let k = m - n;
    // ∏_{j=2}^{k}(j-2α)/(k-1)! accumulated as a ratio to stay scaled.
    let mut t = T::one();
    for j in 2..=k {
        t *= (T::of_usize(j) - T::of(2.0) * alpha) / T::of_usize(j - 1);
    }
    zeta_abs * t / T::of_usize(m)
}

fn check_alpha_range<T: Real>(alpha: T) -> Result<()> {
    if alpha < T::of(-0.5) || alpha >= T::one() {
        return Err(Error::Parameter(format!(
            "alpha must lie in [-1/2, 1), got {alpha}"
        )));
    }
    Ok(())
}

// ─────────────────────────────────────────────────────────────────────
// Carathéodory class
// ─────────────────────────────────────────────────────────────────────

/// Finite Herglotz mixture representing p(z) = Σⱼ λⱼ (1+e^{iθⱼ}z)/(1-e^{iθⱼ}z):
/// positive real part, p(0) = 1, and automatically |p_m| ≤ 2.
#[derive(Clone, Debug)]
pub struct CaratheodoryFunction<T> {
    /// (weight, angle) pairs; weights positive and summing to one.
    atoms: Vec<(T, T)>,
}

impl<T: Real> CaratheodoryFunction<T> {
    pub fn new(atoms: Vec<(T, T)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Parameter(
                "at least one Herglotz atom required".into(),
            ));
        }
        let tau = T::of(std::f64::consts::TAU);
        let mut total = T::zero();
        for &(w, theta) in &atoms {
            if w <= T::zero() || w.is_nan() {
                return Err(Error::Parameter(format!(
                    "atom weight must be positive, got {w}"
                )));
            }
            if theta < T::zero() || theta >= tau {
                return Err(Error::Parameter(format!(
                    "atom angle must lie in [0, 2π), got {theta}"
                )));
            }
            total += w;
        }
        if (total - T::one()).abs() > T::of(1e-12) {
            return Err(Error::Parameter(format!(
                "atom weights must sum to 1, got {total}"
            )));
        }
        Ok(Self { atoms })
    }

    /// The single-kernel member (1+e^{iθ}z)/(1-e^{iθ}z).
    pub fn single_atom(theta: T) -> Result<Self> {
        Self::new(vec![(T::one(), theta)])
    }

    /// Draws a mixture: atom count uniform in 1..=max_atoms, angles
    /// independent uniform on [0, 2π), weights exponential variates
    /// normalized to sum one. Deterministic for a fixed seed.
    pub fn sample(seed: u64, max_atoms: usize) -> Result<Self> {
        if max_atoms < 1 {
            return Err(Error::Parameter("max_atoms must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let count = rng.gen_range(1..=max_atoms);
        let mut raw = Vec::with_capacity(count);
        let mut total = 0.0f64;
        for _ in 0..count {
            let w = -(1.0 - rng.gen::<f64>()).ln() + 1e-12;
            let theta = rng.gen::<f64>() * std::f64::consts::TAU;
            total += w;
            raw.push((w, theta));
        }
        let atoms = raw
            .into_iter()
            .map(|(w, theta)| (T::of(w / total), T::of(theta)))
            .collect();
        Self::new(atoms)
    }

    pub fn atoms(&self) -> &[(T, T)] {
        &self.atoms
    }

    /// Taylor coefficient p_m: 1 for m = 0, else 2 Σⱼ λⱼ e^{imθⱼ}.
    pub fn coefficient(&self, m: usize) -> Complex<T> {
        if m == 0 {
            return Complex::new(T::one(), T::zero());
        }
        let mut s = Complex::zero();
        let mf = T::of_usize(m);
        for &(w, theta) in &self.atoms {
            s += Complex::from_polar(w, mf * theta);
        }
        s * T::of(2.0)
    }

    /// The truncated series 1 + Σ p_m z^m.
    pub fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        TruncatedSeries::from_fn(order, |m| self.coefficient(m))
    }
}

// ─────────────────────────────────────────────────────────────────────
// Harmonic mapping family
// ─────────────────────────────────────────────────────────────────────

/// Class parameters: -1/2 ≤ α < 1, |ζ| ≤ 1/(2n-1), n ≥ 1.
#[derive(Clone, Copy, Debug)]
pub struct HarmonicMapParams<T> {
    pub alpha: T,
    pub zeta: Complex<T>,
    pub n: u32,
}

impl<T: Real> HarmonicMapParams<T> {
    pub fn new(alpha: T, zeta: Complex<T>, n: u32) -> Result<Self> {
        check_alpha_range(alpha)?;
        if n < 1 {
            return Err(Error::Parameter("n must be a positive integer".into()));
        }
        let cap = zeta_cap::<T>(n);
        // A whisker of slack so a boundary |ζ| computed in floating point
        // is not rejected.
        if zeta.norm() > cap * (T::one() + T::of(1e-12)) {
            return Err(Error::Parameter(format!(
                "|zeta| = {} exceeds 1/(2n-1) = {cap}",
                zeta.norm()
            )));
        }
        Ok(Self { alpha, zeta, n })
    }

    /// True when |ζ| sits on the boundary 1/(2n-1) (the growth and Bohr
    /// lemmas assume the open interval; the boundary is accepted but
    /// callers may want to flag it).
    pub fn is_boundary_zeta(&self) -> bool {
        (self.zeta.norm() - zeta_cap::<T>(self.n)).abs() <= T::of(1e-12)
    }
}

/// The dilatation cap 1/(2n-1).
pub fn zeta_cap<T: Real>(n: u32) -> T {
    T::one() / T::of_usize(2 * n as usize - 1)
}

/// How a mapping was constructed.
#[derive(Clone, Copy, Debug)]
pub enum Provenance<T> {
    /// Built from a seeded Carathéodory mixture.
    Sampled { seed: u64 },
    /// The rotation extremal with |δ| = 1.
    Extremal { delta: Complex<T> },
    /// Analytic part taken from a Ma-Minda kernel.
    KernelBased,
}

/// A mapping f = h + conj(g) with g' = ζ zⁿ h', normalized h(0) = 0,
/// h'(0) = 1, g(0) = 0.
#[derive(Clone, Debug)]
pub struct HarmonicMapping<T> {
    h: TruncatedSeries<T>,
    g: TruncatedSeries<T>,
    params: HarmonicMapParams<T>,
    provenance: Provenance<T>,
}

/// Analytic part from the coefficient recurrence
/// m(m-1) a_m = (1-α) Σ_{k=1}^{m-1} k a_k p_{m-k}.
pub fn build_h_from_p<T: Real>(
    p: &CaratheodoryFunction<T>,
    alpha: T,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    check_alpha_range(alpha)?;
    if order < 2 {
        return Err(Error::Parameter("h needs order >= 2".into()));
    }
    let pc: Vec<Complex<T>> = (0..order).map(|m| p.coefficient(m)).collect();
    let mut a = vec![Complex::<T>::zero(); order + 1];
    a[1] = Complex::new(T::one(), T::zero());
    let one_minus_alpha = T::one() - alpha;
    for m in 2..=order {
        let mut s = Complex::zero();
        for k in 1..m {
            s += a[k] * T::of_usize(k) * pc[m - k];
        }
        a[m] = s * one_minus_alpha / (T::of_usize(m) * T::of_usize(m - 1));
    }
    TruncatedSeries::new(a)
}

/// Cross-check construction of the same h through
/// h' = exp((1-α) ∫₀ᶻ (p(t)-1)/t dt), kept independent of the recurrence.
pub fn build_h_from_p_exp<T: Real>(
    p: &CaratheodoryFunction<T>,
    alpha: T,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    check_alpha_range(alpha)?;
    if order < 2 {
        return Err(Error::Parameter("h needs order >= 2".into()));
    }
    let p_series = p.to_series(order);
    let p_minus_one = p_series.sub(&TruncatedSeries::constant(
        Complex::new(T::one(), T::zero()),
        order,
    ));
    let shifted = p_minus_one.divide_by_z()?;
    let log_hp = shifted.integrate().scale_real(T::one() - alpha);
    let h_prime = log_hp.exp()?;
    Ok(h_prime.integrate().truncated(order))
}

/// Co-analytic part from b_{k+n} = ζ k a_k / (k+n), all other
/// coefficients zero.
pub fn build_g_from_h<T: Real>(
    h: &TruncatedSeries<T>,
    zeta: Complex<T>,
    n: u32,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    let n = n as usize;
    if n < 1 {
        return Err(Error::Parameter("n must be a positive integer".into()));
    }
    let mut b = vec![Complex::<T>::zero(); order + 1];
    for k in 1..=order.saturating_sub(n).min(h.order()) {
        b[k + n] = zeta * h.coeff(k) * T::of_usize(k) / T::of_usize(k + n);
    }
    TruncatedSeries::new(b)
}

impl<T: Real> HarmonicMapping<T> {
    /// Validates the normalization, the co-analytic recurrence
    /// (k+n) b_{k+n} = ζ k a_k, and b_m = 0 for m ≤ n.
    pub fn new(
        h: TruncatedSeries<T>,
        g: TruncatedSeries<T>,
        params: HarmonicMapParams<T>,
        provenance: Provenance<T>,
    ) -> Result<Self> {
        let tol = T::of(1e-10);
        if h.coeff(0).norm() > T::zero() {
            return Err(Error::Parameter("h must satisfy h(0) = 0".into()));
        }
        if (h.coeff(1) - Complex::new(T::one(), T::zero())).norm() > tol {
            return Err(Error::Parameter("h must satisfy h'(0) = 1".into()));
        }
        if g.coeff(0).norm() > T::zero() {
            return Err(Error::Parameter("g must satisfy g(0) = 0".into()));
        }
        let n = params.n as usize;
        let order = h.order().min(g.order());
        for m in 1..=n.min(order) {
            if g.coeff(m).norm() > tol {
                return Err(Error::Parameter(format!(
                    "g coefficient {m} must vanish for m <= n"
                )));
            }
        }
        for k in 1..=order.saturating_sub(n) {
            let lhs = g.coeff(k + n) * T::of_usize(k + n);
            let rhs = params.zeta * h.coeff(k) * T::of_usize(k);
            if (lhs - rhs).norm() > tol * (T::one() + rhs.norm()) {
                return Err(Error::Parameter(format!(
                    "dilatation recurrence violated at index {}",
                    k + n
                )));
            }
        }
        Ok(Self {
            h,
            g,
            params,
            provenance,
        })
    }

    /// Draws a member: p from a seeded Herglotz mixture (5 atoms max),
    /// h from the coefficient recurrence, g from the dilatation.
    pub fn sample(params: HarmonicMapParams<T>, seed: u64, order: usize) -> Result<Self> {
        let p = CaratheodoryFunction::sample(seed, 5)?;
        let h = build_h_from_p(&p, params.alpha, order)?;
        let g = build_g_from_h(&h, params.zeta, params.n, order)?;
        Self::new(h, g, params, Provenance::Sampled { seed })
    }

    /// The rotation extremal: h'(z) = (1-δz)^{2α-2} expanded binomially,
    /// g from the dilatation. With δ = 1 every |a_k| attains the sharp
    /// coefficient bound.
    pub fn extremal(params: HarmonicMapParams<T>, delta: Complex<T>, order: usize) -> Result<Self> {
        if (delta.norm() - T::one()).abs() > T::of(1e-12) {
            return Err(Error::Parameter(format!(
                "|delta| must be 1, got {}",
                delta.norm()
            )));
        }
        let beta = T::of(2.0) - T::of(2.0) * params.alpha;
        // h'_k = (β)_k δ^k / k!
        let mut hp = Vec::with_capacity(order);
        let mut cur = Complex::new(T::one(), T::zero());
        hp.push(cur);
        for k in 1..order {
            cur = cur * delta * ((beta + T::of_usize(k - 1)) / T::of_usize(k));
            hp.push(cur);
        }
        let h = TruncatedSeries::new(hp)?.integrate().truncated(order);
        let g = build_g_from_h(&h, params.zeta, params.n, order)?;
        Self::new(h, g, params, Provenance::Extremal { delta })
    }

    /// Member of the kernel class: h = K, g from the dilatation.
    pub fn from_kernel(kernel: &MaMindaKernel<T>, zeta: Complex<T>, n: u32) -> Result<Self> {
        let alpha = match kernel.closed_form {
            Some(KernelForm::ConvexOrder { alpha }) => alpha,
            _ => T::zero(),
        };
        let params = HarmonicMapParams::new(alpha, zeta, n)?;
        let order = kernel.k.order();
        let h = kernel.k.truncated(order);
        let g = build_g_from_h(&h, zeta, n, order)?;
        Self::new(h, g, params, Provenance::KernelBased)
    }

    pub fn h(&self) -> &TruncatedSeries<T> {
        &self.h
    }

    pub fn g(&self) -> &TruncatedSeries<T> {
        &self.g
    }

    pub fn params(&self) -> &HarmonicMapParams<T> {
        &self.params
    }

    pub fn provenance(&self) -> &Provenance<T> {
        &self.provenance
    }

    /// f(z) = h(z) + conj(g(z)) by plain partial sums.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.h.eval(z) + self.g.eval(z).conj()
    }

    /// f(z) with a certified truncation tail: class coefficient bounds
    /// majorize both parts past the stored order.
    pub fn eval_enclosed(&self, z: Complex<T>, r_max: T) -> Result<(Complex<T>, T)> {
        let alpha = self.params.alpha;
        let n = self.params.n as usize;
        let zeta_abs = self.params.zeta.norm();
        let eh = self
            .h
            .eval_enclosed(z, |k| bound_a_unchecked(k, alpha), r_max)?;
        let eg = self.g.eval_enclosed(
            z,
            |m| bound_b_unchecked(m.max(n + 1), n, alpha, zeta_abs),
            r_max,
        )?;
        Ok((eh.value + eg.value.conj(), eh.tail + eg.tail))
    }
}

// ─────────────────────────────────────────────────────────────────────
// Ma-Minda kernels
// ─────────────────────────────────────────────────────────────────────

/// Closed-form families attached to a kernel when one is known; boundary
/// quantities (values at |t| = 1) are only certified through these.
#[derive(Clone, Copy, Debug)]
pub enum KernelForm<T> {
    /// φ = (1 + (1-2α)z)/(1-z): K' = (1-z)^{2α-2}.
    ConvexOrder { alpha: T },
    /// φ = 1 + B₁ z: K' = exp(B₁ z).
    LinearPhi { b1: T },
}

/// The pair (φ, K) with K' = exp(∫₀ᶻ (φ(t)-1)/t dt) and K = ∫₀ᶻ K'.
#[derive(Clone, Debug)]
pub struct MaMindaKernel<T> {
    pub phi: TruncatedSeries<T>,
    pub k: TruncatedSeries<T>,
    pub k_prime: TruncatedSeries<T>,
    pub closed_form: Option<KernelForm<T>>,
}

/// Builds the kernel from a Ma-Minda function φ (constant term exactly 1,
/// B₁ real and positive).
pub fn kernel_from_phi<T: Real>(
    phi: &TruncatedSeries<T>,
    order: usize,
) -> Result<MaMindaKernel<T>> {
    let one = Complex::new(T::one(), T::zero());
    if phi.coeff(0) != one {
        return Err(Error::Parameter("phi must have constant term 1".into()));
    }
    if phi.order() < 1 {
        return Err(Error::InsufficientOrder {
            need: 1,
            have: phi.order(),
        });
    }
    let b1 = phi.coeff(1);
    if !(b1.im.is_zero() && b1.re > T::zero()) {
        return Err(Error::Parameter(
            "phi must have B1 real and positive".into(),
        ));
    }
    let phi = phi.truncated(order);
    let shifted = phi
        .sub(&TruncatedSeries::constant(one, phi.order()))
        .divide_by_z()?;
    let k_prime = shifted.integrate().exp()?;
    let k = k_prime.integrate();
    Ok(MaMindaKernel {
        phi,
        k,
        k_prime,
        closed_form: None,
    })
}

impl<T: Real> MaMindaKernel<T> {
    /// Kernel of the convex-order-α family, closed form attached.
    pub fn convex_order(alpha: T, order: usize) -> Result<Self> {
        check_alpha_range(alpha)?;
        let b = T::of(2.0) - T::of(2.0) * alpha;
        let phi = TruncatedSeries::from_real_fn(order, |m| if m == 0 { T::one() } else { b });
        let mut kernel = kernel_from_phi(&phi, order)?;
        kernel.closed_form = Some(KernelForm::ConvexOrder { alpha });
        Ok(kernel)
    }

    /// Kernel of φ = 1 + B₁z (B₁ > 0), closed form attached.
    pub fn linear_phi(b1: T, order: usize) -> Result<Self> {
        if b1 <= T::zero() || b1.is_nan() {
            return Err(Error::Parameter(format!("B1 must be positive, got {b1}")));
        }
        let phi = TruncatedSeries::from_real_fn(order, |m| match m {
            0 => T::one(),
            1 => b1,
            _ => T::zero(),
        });
        let mut kernel = kernel_from_phi(&phi, order)?;
        kernel.closed_form = Some(KernelForm::LinearPhi { b1 });
        Ok(kernel)
    }

    /// Max coefficient residual of z K'' = (φ - 1) K', the multiplicative
    /// form of 1 + zK''/K' = φ.
    pub fn ode_residual(&self) -> T {
        let n = self.k_prime.order();
        let mut worst = T::zero();
        for m in 1..=n {
            // (z K'')_m = m K'_m
            let lhs = self.k_prime.coeff(m) * T::of_usize(m);
            let mut rhs = Complex::<T>::zero();
            for i in 1..=m {
                rhs += self.phi.coeff(i) * self.k_prime.coeff(m - i);
            }
            worst = worst.max((lhs - rhs).norm());
        }
        worst
    }

    /// K(t) for real t; closed form when available, otherwise the series
    /// with a decay-estimated tail.
    pub fn k_at(&self, t: T) -> Result<T> {
        match self.closed_form {
            Some(KernelForm::ConvexOrder { alpha }) => convex_k(alpha, t),
            Some(KernelForm::LinearPhi { b1 }) => {
                if b1 * t > T::of(700.0) {
                    return Err(Error::NonFinite("exp overflow in kernel".into()));
                }
                Ok(((b1 * t).exp() - T::one()) / b1)
            }
            None => eval_real_estimated(&self.k, t),
        }
    }

    /// K'(t) for real t.
    pub fn k_prime_at(&self, t: T) -> Result<T> {
        match self.closed_form {
            Some(KernelForm::ConvexOrder { alpha }) => convex_k_prime(alpha, t),
            Some(KernelForm::LinearPhi { b1 }) => Ok((b1 * t).exp()),
            None => eval_real_estimated(&self.k_prime, t),
        }
    }

    /// Majorant M_K(r) for r ≥ 0. Closed-form families have nonnegative
    /// coefficients, so their majorant is the function itself.
    pub fn k_majorant_at(&self, r: T) -> Result<T> {
        match self.closed_form {
            Some(_) => self.k_at(r),
            None => eval_real_estimated(&self.k.majorant(), r),
        }
    }

    /// Majorant M_{K'}(r) for r ≥ 0.
    pub fn k_prime_majorant_at(&self, r: T) -> Result<T> {
        match self.closed_form {
            Some(_) => self.k_prime_at(r),
            None => eval_real_estimated(&self.k_prime.majorant(), r),
        }
    }

    /// K(-1), the boundary value entering L(ζ, n, 1). Certified only
    /// through a closed form; series kernels must have contracting
    /// coefficients for the estimate to be accepted.
    pub fn k_at_minus_one(&self) -> Result<T> {
        match self.closed_form {
            Some(KernelForm::ConvexOrder { alpha }) => convex_k(alpha, -T::one()),
            Some(KernelForm::LinearPhi { b1 }) => Ok(((-b1).exp() - T::one()) / b1),
            None => eval_real_estimated(&self.k, -T::one()),
        }
    }
}

/// Closed-form K(t) of the convex-order family:
/// [1 - (1-t)^{2α-1}]/(2α-1), or -log(1-t) on the α = 1/2 branch.
pub fn convex_k<T: Real>(alpha: T, t: T) -> Result<T> {
    if t >= T::one() {
        return Err(Error::Divergent(format!(
            "K({t}) at or beyond the boundary"
        )));
    }
    let one_minus_t = T::one() - t;
    if is_log_branch(alpha) {
        return Ok(-one_minus_t.ln());
    }
    let gamma = T::of(2.0) * alpha - T::one();
    Ok((T::one() - one_minus_t.powf(gamma)) / gamma)
}

/// Closed-form K'(t) = (1-t)^{2α-2}.
pub fn convex_k_prime<T: Real>(alpha: T, t: T) -> Result<T> {
    if t >= T::one() {
        return Err(Error::Divergent(format!(
            "K'({t}) at or beyond the boundary"
        )));
    }
    Ok((T::one() - t).powf(T::of(2.0) * alpha - T::of(2.0)))
}

/// Series evaluation on the real axis with a geometric tail estimated from
/// the trailing coefficient ratios. Honest but not certified: rejects
/// series whose tail does not contract at |t|.
fn eval_real_estimated<T: Real>(series: &TruncatedSeries<T>, t: T) -> Result<T> {
    let r = t.abs();
    let n = series.order();
    if r.is_zero() {
        return Ok(series.eval(Complex::new(t, T::zero())).re);
    }
    // Decay rate from the last stored coefficients.
    let mut q = T::zero();
    let lookback = 16.min(n);
    for m in (n - lookback + 1)..=n {
        let prev = series.coeff(m - 1).norm();
        let cur = series.coeff(m).norm();
        if prev > T::zero() {
            q = q.max(cur / prev);
        }
    }
    let rho = q * r;
    if rho >= T::of(0.999) || rho.is_nan() {
        return Err(Error::TailCertification(format!(
            "series tail does not contract at |t| = {r} (coefficient ratio {q})"
        )));
    }
    let value = series.eval(Complex::new(t, T::zero())).re;
    let tail = series.coeff(n).norm() * r.powi(n as i32) * rho / (T::one() - rho);
    if tail > T::of(1e-9) * (T::one() + value.abs()) {
        return Err(Error::TailCertification(format!(
            "estimated tail {tail} too large at |t| = {r}"
        )));
    }
    Ok(value)
}
