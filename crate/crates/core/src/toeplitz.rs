//! Symmetric Toeplitz determinants of Taylor coefficients and the
//! closed-form bounds for the harmonic family, with sharpness scans over
//! the rotation parameter.

use num_complex::Complex;
use num_traits::Zero;

use crate::classes::{bound_a_unchecked, HarmonicMapParams, HarmonicMapping};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::TruncatedSeries;

/// Which part of the mapping a determinant acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesTarget {
    Analytic,
    CoAnalytic,
}

/// T_q(n): the q×q symmetric Toeplitz matrix built from coefficients
/// c_n..c_{n+q-1}.
#[derive(Clone, Copy, Debug)]
pub struct ToeplitzSpec {
    pub start: usize,
    pub size: usize,
    pub target: SeriesTarget,
}

impl ToeplitzSpec {
    pub fn new(start: usize, size: usize, target: SeriesTarget) -> Result<Self> {
        if start < 1 || size < 1 {
            return Err(Error::Parameter(
                "Toeplitz spec needs n >= 1 and q >= 1".into(),
            ));
        }
        Ok(Self {
            start,
            size,
            target,
        })
    }
}

/// Determinant of the q×q symmetric Toeplitz matrix whose first row is
/// (c_n, ..., c_{n+q-1}). Hard-coded cofactor expansions up to q = 4 keep
/// the small cases free of pivoting noise; larger q goes through LU with
/// partial pivoting.
pub fn toeplitz_det<T: Real>(
    coeffs: &TruncatedSeries<T>,
    spec: &ToeplitzSpec,
) -> Result<Complex<T>> {
    let need = spec.start + spec.size - 1;
    if coeffs.order() < need {
        return Err(Error::InsufficientOrder {
            need,
            have: coeffs.order(),
        });
    }
    let c: Vec<Complex<T>> = (0..spec.size)
        .map(|j| coeffs.coeff(spec.start + j))
        .collect();
    Ok(match spec.size {
        1 => c[0],
        2 => c[0] * c[0] - c[1] * c[1],
        3 => {
            // | c0 c1 c2 |
            // | c1 c0 c1 |
            // | c2 c1 c0 |
            let (a, b, d) = (c[0], c[1], c[2]);
            a * (a * a - b * b) - b * (b * a - b * d) + d * (b * b - a * d)
        }
        4 => det4_symmetric_toeplitz(&c),
        _ => {
            let q = spec.size;
            let mut m = vec![Complex::<T>::zero(); q * q];
            for i in 0..q {
                for j in 0..q {
                    m[i * q + j] = c[i.abs_diff(j)];
                }
            }
            lu_det(&mut m, q)
        }
    })
}

/// Determinant of the requested part of a mapping.
pub fn toeplitz_det_of<T: Real>(f: &HarmonicMapping<T>, spec: &ToeplitzSpec) -> Result<Complex<T>> {
    let series = match spec.target {
        SeriesTarget::Analytic => f.h(),
        SeriesTarget::CoAnalytic => f.g(),
    };
    toeplitz_det(series, spec)
}

fn det4_symmetric_toeplitz<T: Real>(c: &[Complex<T>]) -> Complex<T> {
    // det [[a,b,c,d],[b,a,b,c],[c,b,a,b],[d,c,b,a]] = s² - t² with
    // s = a² - b² + bd - c², t = 2bc - a(b+d).
    let (a, b, cc, d) = (c[0], c[1], c[2], c[3]);
    let s = a * a - b * b + b * d - cc * cc;
    let t = b * cc * T::of(2.0) - a * (b + d);
    s * s - t * t
}

/// LU with partial pivoting; destroys the buffer.
fn lu_det<T: Real>(m: &mut [Complex<T>], q: usize) -> Complex<T> {
    let mut det = Complex::new(T::one(), T::zero());
    for col in 0..q {
        let mut pivot = col;
        let mut best = m[col * q + col].norm();
        for row in (col + 1)..q {
            let mag = m[row * q + col].norm();
            if mag > best {
                best = mag;
                pivot = row;
            }
        }
        if best.is_zero() {
            return Complex::zero();
        }
        if pivot != col {
            for j in 0..q {
                m.swap(col * q + j, pivot * q + j);
            }
            det = -det;
        }
        let diag = m[col * q + col];
        det *= diag;
        for row in (col + 1)..q {
            let factor = m[row * q + col] / diag;
            for j in col..q {
                let sub = factor * m[col * q + j];
                m[row * q + j] -= sub;
            }
        }
    }
    det
}

// ─────────────────────────────────────────────────────────────────────
// Closed-form bounds
// ─────────────────────────────────────────────────────────────────────

fn check_alpha<T: Real>(alpha: T) -> Result<()> {
    if alpha < T::of(-0.5) || alpha >= T::one() {
        return Err(Error::Parameter(format!(
            "alpha must lie in [-1/2, 1), got {alpha}"
        )));
    }
    Ok(())
}

/// |T₂(n)[h]| bound: A(n)² + A(n+1)² with A(k) = ∏_{j=2}^{k}(j-2α)/k!.
/// Stated for n ≥ 2 only.
pub fn bound_t2n<T: Real>(alpha: T, n: u32) -> Result<T> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::Parameter(
            "the T2(n)[h] bound requires n >= 2".into(),
        ));
    }
    let an = bound_a_unchecked(n as usize, alpha);
    let an1 = bound_a_unchecked(n as usize + 1, alpha);
    Ok(an * an + an1 * an1)
}

/// |T₂(n)[g]| bound: |ζ|²/(n+1)².
pub fn bound_t2n_g<T: Real>(zeta_abs: T, n: u32) -> Result<T> {
    if n < 1 {
        return Err(Error::Parameter("n must be positive".into()));
    }
    let denom = T::of_usize(n as usize + 1);
    Ok(zeta_abs * zeta_abs / (denom * denom))
}

/// |T₂(2)[h]| bound in product form: (2/9)(1-α)²(2α²-6α+9).
pub fn bound_t22_corollary<T: Real>(alpha: T) -> Result<T> {
    check_alpha(alpha)?;
    let u = T::one() - alpha;
    let poly = T::of(2.0) * alpha * alpha - T::of(6.0) * alpha + T::of(9.0);
    Ok(T::of(2.0) * u * u * poly / T::of(9.0))
}

/// |T₃(1)[h]| bound, piecewise with the branch point at α = 1/2.
pub fn bound_t31<T: Real>(alpha: T) -> Result<T> {
    check_alpha(alpha)?;
    let a = alpha;
    let poly = if a <= T::of(0.5) {
        ((T::of(8.0) * a - T::of(34.0)) * a + T::of(71.0)) * a * a - T::of(72.0) * a + T::of(36.0)
    } else {
        (T::of(-2.0) * a + T::of(25.0)) * a * a - T::of(44.0) * a + T::of(30.0)
    };
    Ok(poly / T::of(9.0))
}

/// |T₃(1)[g]| bound for n = 1: |ζ|³(1-α)/3.
///
/// The determinant is 2 b₂² b₃ with |b₂| = |ζ|/2 and
/// b₃ = (ζ/3)(1-α)p₁, so the supremum over |p₁| ≤ 2 is |ζ|³(1-α)/3,
/// attained by the rotation extremal. For n ≥ 2 the determinant vanishes
/// identically.
pub fn bound_t31_g<T: Real>(alpha: T, zeta_abs: T) -> Result<T> {
    check_alpha(alpha)?;
    Ok(zeta_abs * zeta_abs * zeta_abs * (T::one() - alpha) / T::of(3.0))
}

/// |T₃(2)[h]| bound, piecewise with the branch point at α = 1/7.
pub fn bound_t32<T: Real>(alpha: T) -> Result<T> {
    check_alpha(alpha)?;
    let a = alpha;
    let u = T::one() - a;
    let common = (T::of(2.0) * a - T::of(7.0)) * a + T::of(12.0);
    let seventh = T::one() / T::of(7.0);
    Ok(if a <= seventh {
        let second = (T::of(10.0) * a - T::of(27.0)) * a + T::of(36.0);
        u * u * u * common * second / T::of(108.0)
    } else {
        let second = (T::of(2.0) * a - T::of(4.0)) * a + T::of(7.0);
        T::of(5.0) * u * u * u * common * second / T::of(108.0)
    })
}

/// |T₃(2)[g]| bound for n ≥ 2: |2b₃²b₄| ≤ |ζ|³(1-α)/9.
///
/// Valid where the determinant reduces to 2b₃²b₄ (that is, b₂ = 0,
/// so n ≥ 2; it vanishes identically for n ≥ 3). For n = 1 the
/// determinant is a different polynomial and no closed bound is claimed.
pub fn bound_t32_g<T: Real>(alpha: T, zeta_abs: T) -> Result<T> {
    check_alpha(alpha)?;
    Ok(zeta_abs * zeta_abs * zeta_abs * (T::one() - alpha) / T::of(9.0))
}

/// Identifier for the six closed-form determinant bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    T2nAnalytic,
    T2nCoAnalytic,
    T31Analytic,
    T31CoAnalytic,
    T32Analytic,
    T32CoAnalytic,
}

impl BoundKind {
    /// The (start, size, target) of the determinant this bound covers.
    pub fn spec(&self, n: u32) -> ToeplitzSpec {
        match self {
            BoundKind::T2nAnalytic => ToeplitzSpec {
                start: n as usize,
                size: 2,
                target: SeriesTarget::Analytic,
            },
            BoundKind::T2nCoAnalytic => ToeplitzSpec {
                start: n as usize,
                size: 2,
                target: SeriesTarget::CoAnalytic,
            },
            BoundKind::T31Analytic => ToeplitzSpec {
                start: 1,
                size: 3,
                target: SeriesTarget::Analytic,
            },
            BoundKind::T31CoAnalytic => ToeplitzSpec {
                start: 1,
                size: 3,
                target: SeriesTarget::CoAnalytic,
            },
            BoundKind::T32Analytic => ToeplitzSpec {
                start: 2,
                size: 3,
                target: SeriesTarget::Analytic,
            },
            BoundKind::T32CoAnalytic => ToeplitzSpec {
                start: 2,
                size: 3,
                target: SeriesTarget::CoAnalytic,
            },
        }
    }

    /// Closed-form bound value for the given class parameters.
    pub fn bound<T: Real>(&self, alpha: T, zeta_abs: T, n: u32) -> Result<T> {
        match self {
            BoundKind::T2nAnalytic => bound_t2n(alpha, n),
            BoundKind::T2nCoAnalytic => bound_t2n_g(zeta_abs, n),
            BoundKind::T31Analytic => bound_t31(alpha),
            BoundKind::T31CoAnalytic => bound_t31_g(alpha, zeta_abs),
            BoundKind::T32Analytic => bound_t32(alpha),
            BoundKind::T32CoAnalytic => bound_t32_g(alpha, zeta_abs),
        }
    }

    /// Whether the bound applies to members with this n.
    pub fn applies_at<T: Real>(&self, n: u32) -> bool {
        match self {
            BoundKind::T2nAnalytic => n >= 2,
            BoundKind::T32CoAnalytic => n >= 2,
            _ => true,
        }
    }
}

/// Result of a sharpness scan over the rotation parameter δ = e^{iθ}.
#[derive(Clone, Copy, Debug)]
pub struct SharpnessScan<T> {
    pub supremum: T,
    pub argmax_theta: T,
    /// bound - supremum, relative to the bound (0 means attained).
    pub relative_gap: T,
}

/// Evaluates |T_q(n)| on the rotation extremal over a uniform angle grid,
/// then refines around the best angle by golden-section until the window
/// is below 1e-6. Reports the observed supremum and its gap to the
/// closed-form bound; equality is never asserted.
pub fn sharpness_scan<T: Real>(
    alpha: T,
    zeta: Complex<T>,
    n: u32,
    which: BoundKind,
    grid: usize,
) -> Result<SharpnessScan<T>> {
    if grid < 8 {
        return Err(Error::Parameter(
            "scan grid must have at least 8 angles".into(),
        ));
    }
    let params = HarmonicMapParams::new(alpha, zeta, n)?;
    let spec = which.spec(n);
    let order = spec.start + spec.size; // a few coefficients past the matrix
    let eval = |theta: T| -> Result<T> {
        let delta = Complex::from_polar(T::one(), theta);
        let f = HarmonicMapping::extremal(params, delta, order)?;
        Ok(toeplitz_det_of(&f, &spec)?.norm())
    };

    let tau = T::of(std::f64::consts::TAU);
    let step = tau / T::of_usize(grid);
    let mut best_idx = 0usize;
    let mut best = T::neg_infinity();
    for i in 0..grid {
        let v = eval(T::of_usize(i) * step)?;
        if v > best {
            best = v;
            best_idx = i;
        }
    }
    // Golden-section maximization on the bracketing neighbors.
    let mut lo = T::of_usize(best_idx) * step - step;
    let mut hi = T::of_usize(best_idx) * step + step;
    let gr = T::of(0.618_033_988_749_894_8);
    let mut x1 = hi - gr * (hi - lo);
    let mut x2 = lo + gr * (hi - lo);
    let mut f1 = eval(x1)?;
    let mut f2 = eval(x2)?;
    while hi - lo > T::of(1e-6) {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = eval(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = eval(x1)?;
        }
    }
    let mut theta = (lo + hi) / T::of(2.0);
    let refined = eval(theta)?;
    let supremum = if refined > best { refined } else { best };
    if refined < best {
        theta = T::of_usize(best_idx) * step;
    }
    if theta < T::zero() {
        theta += tau;
    }
    let bound = which.bound(alpha, zeta.norm(), n)?;
    let relative_gap = if bound > T::zero() {
        (bound - supremum) / bound
    } else {
        T::zero()
    };
    Ok(SharpnessScan {
        supremum,
        argmax_theta: theta,
        relative_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{build_g_from_h, build_h_from_p, zeta_cap, CaratheodoryFunction};
    use approx::assert_relative_eq;

    type S = TruncatedSeries<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn all_ones_matrix_is_singular() {
        let ones = S::from_real_fn(8, |_| 1.0);
        let spec = ToeplitzSpec::new(1, 3, SeriesTarget::Analytic).unwrap();
        let det = toeplitz_det(&ones, &spec).unwrap();
        assert!(det.norm() < 1e-14);
    }

    #[test]
    fn log_series_t2_at_2() {
        // a_k = 1/k: T₂(2) = (1/2)² - (1/3)² = 5/36.
        let log = S::from_real_fn(8, |m| if m == 0 { 0.0 } else { 1.0 / m as f64 });
        let spec = ToeplitzSpec::new(2, 2, SeriesTarget::Analytic).unwrap();
        let det = toeplitz_det(&log, &spec).unwrap();
        assert_relative_eq!(det.re, 5.0 / 36.0, epsilon = 1e-14);
        assert_eq!(det.im, 0.0);
    }

    #[test]
    fn t32_factorization_identity_on_random_series() {
        // T₃(2) = (a₂-a₄)(a₂²-2a₃²+a₂a₄) for any coefficients.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        for _ in 0..50 {
            let coeffs: Vec<Complex<f64>> = (0..=4).map(|_| c(next(), next())).collect();
            let s = S::new(coeffs).unwrap();
            let spec = ToeplitzSpec::new(2, 3, SeriesTarget::Analytic).unwrap();
            let det = toeplitz_det(&s, &spec).unwrap();
            let (a2, a3, a4) = (s.coeff(2), s.coeff(3), s.coeff(4));
            let factored = (a2 - a4) * (a2 * a2 - a3 * a3 * 2.0 + a2 * a4);
            assert!(
                (det - factored).norm() <= 1e-12 * (1.0 + factored.norm()),
                "det {det} vs factored {factored}"
            );
        }
    }

    #[test]
    fn lu_path_matches_cofactor_path() {
        // Compare q = 3 hard-coded expansion against the LU fallback by
        // embedding the same coefficients in a padded series.
        let s = S::new(vec![
            c(0.0, 0.0),
            c(0.4, -0.3),
            c(-0.2, 0.9),
            c(0.7, 0.1),
            c(0.05, -0.6),
            c(0.3, 0.2),
        ])
        .unwrap();
        let direct = toeplitz_det(
            &s,
            &ToeplitzSpec::new(1, 3, SeriesTarget::Analytic).unwrap(),
        )
        .unwrap();
        let mut m = vec![Complex::<f64>::zero(); 9];
        let cs: Vec<_> = (1..=3).map(|i| s.coeff(i)).collect();
        for i in 0..3 {
            for j in 0..3 {
                m[i * 3 + j] = cs[i.abs_diff(j)];
            }
        }
        let lu = lu_det(&mut m, 3);
        assert!((direct - lu).norm() < 1e-13 * (1.0 + direct.norm()));

        // q = 5 determinant against cofactor expansion is unwieldy; check
        // singular structure instead: constant coefficients.
        let ones = S::from_real_fn(8, |_| 1.0);
        let det5 = toeplitz_det(
            &ones,
            &ToeplitzSpec::new(1, 5, SeriesTarget::Analytic).unwrap(),
        )
        .unwrap();
        assert!(det5.norm() < 1e-12);
    }

    #[test]
    fn det4_matches_lu() {
        let s = S::new(vec![
            c(0.0, 0.0),
            c(0.9, 0.2),
            c(-0.5, 0.4),
            c(0.3, -0.8),
            c(-0.1, 0.6),
        ])
        .unwrap();
        let direct = toeplitz_det(
            &s,
            &ToeplitzSpec::new(1, 4, SeriesTarget::Analytic).unwrap(),
        )
        .unwrap();
        let cs: Vec<_> = (1..=4).map(|i| s.coeff(i)).collect();
        let mut m = vec![Complex::<f64>::zero(); 16];
        for i in 0..4 {
            for j in 0..4 {
                m[i * 4 + j] = cs[i.abs_diff(j)];
            }
        }
        let lu = lu_det(&mut m, 4);
        assert!(
            (direct - lu).norm() < 1e-12 * (1.0 + lu.norm()),
            "direct {direct} vs lu {lu}"
        );
    }

    #[test]
    fn insufficient_order_is_rejected() {
        let s = S::from_real_fn(2, |_| 1.0);
        let spec = ToeplitzSpec::new(2, 3, SeriesTarget::Analytic).unwrap();
        assert!(matches!(
            toeplitz_det(&s, &spec),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn bound_values() {
        assert_relative_eq!(bound_t2n(0.0, 2).unwrap(), 2.0, epsilon = 1e-15);
        assert_relative_eq!(bound_t2n(0.5, 2).unwrap(), 13.0 / 36.0, epsilon = 1e-15);
        assert_relative_eq!(
            bound_t2n_g(1.0 / 3.0, 2).unwrap(),
            1.0 / 81.0,
            epsilon = 1e-15
        );
        assert!(bound_t2n(0.0, 1).is_err());

        assert_relative_eq!(bound_t22_corollary(0.0).unwrap(), 2.0, epsilon = 1e-15);
        assert_relative_eq!(
            bound_t22_corollary(0.5).unwrap(),
            13.0 / 36.0,
            epsilon = 1e-15
        );
        assert!(bound_t22_corollary(0.999999).unwrap() < 1e-10);

        assert_relative_eq!(bound_t31(0.0).unwrap(), 4.0, epsilon = 1e-15);
        assert_relative_eq!(bound_t31(0.5).unwrap(), 14.0 / 9.0, epsilon = 1e-15);
        assert_relative_eq!(bound_t31_g(0.0, 1.0).unwrap(), 1.0 / 3.0, epsilon = 1e-15);

        assert_relative_eq!(bound_t32(0.0).unwrap(), 4.0, epsilon = 1e-15);
        assert_relative_eq!(
            bound_t32_g(0.5, 0.5).unwrap(),
            0.125 * 0.5 / 9.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn corollary_matches_t2_bound_at_two() {
        for alpha in [-0.5, -0.2, 0.0, 0.3, 0.5, 0.7, 0.9] {
            assert_relative_eq!(
                bound_t22_corollary(alpha).unwrap(),
                bound_t2n(alpha, 2).unwrap(),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn piecewise_branches_agree_at_the_seams() {
        let t31_low = bound_t31(0.5f64).unwrap();
        let a = 0.5f64;
        let quartic = (8.0 * a.powi(4) - 34.0 * a.powi(3) + 71.0 * a * a - 72.0 * a + 36.0) / 9.0;
        let cubic = (-2.0 * a.powi(3) + 25.0 * a * a - 44.0 * a + 30.0) / 9.0;
        assert!((quartic - cubic).abs() < 1e-12);
        assert!((t31_low - quartic).abs() < 1e-12);

        let a = 1.0f64 / 7.0;
        let u = 1.0 - a;
        let common = 2.0 * a * a - 7.0 * a + 12.0;
        let low = u.powi(3) * common * (10.0 * a * a - 27.0 * a + 36.0) / 108.0;
        let high = 5.0 * u.powi(3) * common * (2.0 * a * a - 4.0 * a + 7.0) / 108.0;
        assert!((low - high).abs() < 1e-12);
        assert!((bound_t32(a).unwrap() - low).abs() < 1e-12);
        // spot value near 2.0824 noted for the seam
        assert!((low - 2.0824).abs() < 1e-3);
    }

    #[test]
    fn t31_g_bound_is_attained_by_the_extremal() {
        // alpha = 0, zeta = 1, n = 1, delta = 1: b2 = 1/2, b3 = 2/3,
        // det = 2 b2^2 b3 = 1/3 — the corrected bound, strictly above the
        // /6 value.
        let p = CaratheodoryFunction::<f64>::single_atom(0.0).unwrap();
        let h = build_h_from_p(&p, 0.0, 4).unwrap();
        let g = build_g_from_h(&h, c(1.0, 0.0), 1, 4).unwrap();
        let spec = ToeplitzSpec::new(1, 3, SeriesTarget::Analytic).unwrap();
        let spec = ToeplitzSpec {
            target: SeriesTarget::CoAnalytic,
            ..spec
        };
        let det = toeplitz_det(&g, &spec).unwrap();
        assert_relative_eq!(det.norm(), 1.0 / 3.0, epsilon = 1e-12);
        assert_relative_eq!(bound_t31_g(0.0, 1.0).unwrap(), det.norm(), epsilon = 1e-12);
    }

    #[test]
    fn scan_t2n_g_is_rotation_invariant() {
        let zeta = c(0.2, 0.1);
        let scan = sharpness_scan(0.3, zeta, 2, BoundKind::T2nCoAnalytic, 16).unwrap();
        let bound = bound_t2n_g(zeta.norm(), 2).unwrap();
        assert!((scan.supremum - bound).abs() < 1e-6 * bound);
        assert!(scan.relative_gap.abs() < 1e-6);
    }

    #[test]
    fn scan_with_zero_zeta_gives_zero_coanalytic_sup() {
        let scan = sharpness_scan(0.2, c(0.0, 0.0), 1, BoundKind::T31CoAnalytic, 16).unwrap();
        assert_eq!(scan.supremum, 0.0);
    }

    #[test]
    fn scan_t2n_h_finds_the_sum_of_squares() {
        // The rotation family reaches A(n)² + A(n+1)² where e^{2iθ} = -1.
        let zeta = c(0.5 * zeta_cap::<f64>(2), 0.0);
        let scan = sharpness_scan(0.0, zeta, 2, BoundKind::T2nAnalytic, 90).unwrap();
        let bound = bound_t2n(0.0, 2).unwrap();
        assert!(
            (scan.supremum - bound).abs() < 1e-8,
            "sup {} vs bound {bound}",
            scan.supremum
        );
        assert!(scan.relative_gap < 1e-8);
    }

    #[test]
    fn scan_t31_h_attains_four_at_alpha_zero() {
        let scan = sharpness_scan(0.0, c(0.3, 0.0), 1, BoundKind::T31Analytic, 90).unwrap();
        assert!((scan.supremum - 4.0).abs() < 1e-8);
    }

    #[test]
    fn fuzzed_members_respect_all_applicable_bounds() {
        for seed in 0..150u64 {
            for (alpha, n) in [(-0.5, 1u32), (0.0, 1), (0.25, 2), (0.5, 2), (0.9, 3)] {
                let cap = zeta_cap::<f64>(n);
                let zeta = Complex::from_polar(0.8 * cap, 1.0 + seed as f64 % 5.0);
                let params = HarmonicMapParams::new(alpha, zeta, n).unwrap();
                let f = HarmonicMapping::sample(params, seed, 8).unwrap();
                for kind in [
                    BoundKind::T2nAnalytic,
                    BoundKind::T2nCoAnalytic,
                    BoundKind::T31Analytic,
                    BoundKind::T31CoAnalytic,
                    BoundKind::T32Analytic,
                    BoundKind::T32CoAnalytic,
                ] {
                    if !kind.applies_at::<f64>(n) {
                        continue;
                    }
                    let det = toeplitz_det_of(&f, &kind.spec(n)).unwrap().norm();
                    let bound = kind.bound(alpha, zeta.norm(), n).unwrap();
                    assert!(
                        det <= bound + 1e-9,
                        "{kind:?} violated: seed {seed} alpha {alpha} n {n}: {det} > {bound}"
                    );
                }
            }
        }
    }
}
