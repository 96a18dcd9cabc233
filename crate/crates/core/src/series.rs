//! Truncated complex power-series algebra.
//!
//! A [`TruncatedSeries`] stores the coefficients c_0..c_N of
//! Σ c_m z^m with an explicit truncation order N. Operations between two
//! series truncate to the smaller order: coefficients the math did not
//! provide are never fabricated as zeros. All values are immutable after
//! construction and every operation is a pure function.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Radius beyond which pointwise evaluation refuses to certify a tail.
pub const DEFAULT_EVAL_RADIUS: f64 = 0.95;

/// Iteration budget for tail-bound summation.
const TAIL_MAX_TERMS: usize = 2_000_000;

/// Finitely many complex Taylor coefficients with explicit truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<Complex<T>>,
}

/// A certified pointwise evaluation: partial sum plus a bound on the
/// truncated tail Σ_{m>N} bound(m) r^m.
#[derive(Clone, Copy, Debug)]
pub struct Enclosure<T> {
    pub value: Complex<T>,
    pub tail: T,
}

impl<T: Real> TruncatedSeries<T> {
    /// Builds a series from c_0..c_N. Rejects empty input and non-finite
    /// coefficients.
    pub fn new(coeffs: Vec<Complex<T>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parameter(
                "series needs at least one coefficient".into(),
            ));
        }
        for (m, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite(format!("coefficient {m}")));
            }
        }
        Ok(Self { coeffs })
    }

    /// Series with real coefficients produced by `f(m)` for m = 0..=order.
    pub fn from_real_fn(order: usize, f: impl Fn(usize) -> T) -> Self {
        Self {
            coeffs: (0..=order).map(|m| Complex::new(f(m), T::zero())).collect(),
        }
    }

    /// Series with complex coefficients produced by `f(m)` for m = 0..=order.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Complex<T>) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex::zero(); order + 1],
        }
    }

    /// The constant series c of the given order.
    pub fn constant(c: Complex<T>, order: usize) -> Self {
        let mut coeffs = vec![Complex::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The monomial z, at the given order.
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1, "identity needs order >= 1");
        let mut coeffs = vec![Complex::zero(); order + 1];
        coeffs[1] = Complex::new(T::one(), T::zero());
        Self { coeffs }
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient c_m. Panics past the truncation order: the tail is
    /// unknown, not zero.
    pub fn coeff(&self, m: usize) -> Complex<T> {
        assert!(
            m <= self.order(),
            "coefficient {m} beyond truncation order {}",
            self.order()
        );
        self.coeffs[m]
    }

    /// All stored coefficients c_0..c_N.
    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Drops coefficients past `order` (no-op if already shorter).
    pub fn truncated(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|m| f(self.coeffs[m], other.coeffs[m]))
                .collect(),
        }
    }

    /// Coefficient-wise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    /// Coefficient-wise difference, truncated to the smaller order.
    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    /// Multiplies every coefficient by a complex scalar.
    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies every coefficient by a real scalar.
    pub fn scale_real(&self, t: T) -> Self {
        self.scale(Complex::new(t, T::zero()))
    }

    /// Cauchy product: coefficient m of the result is Σ_{i+j=m} a_i b_j,
    /// for m up to the smaller of the two orders.
    ///
    /// Terms are accumulated over symmetric index pairs (i, m-i) so that
    /// `a.cauchy_product(&b)` and `b.cauchy_product(&a)` round identically.
    pub fn cauchy_product(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let a = &self.coeffs;
        let b = &other.coeffs;
        let mut out = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut s = Complex::zero();
            let (mut lo, mut hi) = (0usize, m);
            while lo < hi {
                s += a[lo] * b[hi] + a[hi] * b[lo];
                lo += 1;
                hi -= 1;
            }
            if lo == hi {
                s += a[lo] * b[lo];
            }
            out.push(s);
        }
        Self { coeffs: out }
    }

    /// Term-wise antiderivative with zero constant: coefficient m+1 of the
    /// result is c_m/(m+1). The order grows by one.
    pub fn integrate(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Complex::zero());
        for (m, c) in self.coeffs.iter().enumerate() {
            out.push(c / T::of_usize(m + 1));
        }
        Self { coeffs: out }
    }

    /// Term-wise derivative: coefficient m of the result is (m+1) c_{m+1}.
    /// The order shrinks by one (a constant differentiates to the zero
    /// series of order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let out = (1..self.coeffs.len())
            .map(|m| self.coeffs[m] * T::of_usize(m))
            .collect();
        Self { coeffs: out }
    }

    /// Formal exponential. Requires constant term exactly 0 so the result
    /// is the unique expansion with constant term 1; satisfies e' = a'·e.
    pub fn exp(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if !c0.is_zero() {
            return Err(Error::NonzeroConstantTerm {
                re: c0.re.to_f64().unwrap_or(f64::NAN),
                im: c0.im.to_f64().unwrap_or(f64::NAN),
            });
        }
        let n = self.order();
        let mut e = vec![Complex::zero(); n + 1];
        e[0] = Complex::new(T::one(), T::zero());
        // m e_m = Σ_{j=1..m} j a_j e_{m-j}, from e' = a' e.
        for m in 1..=n {
            let mut s = Complex::zero();
            for j in 1..=m {
                s += self.coeffs[j] * T::of_usize(j) * e[m - j];
            }
            e[m] = s / T::of_usize(m);
        }
        Ok(Self { coeffs: e })
    }

    /// Series of coefficient moduli: coefficient m of the result is |c_m|.
    pub fn majorant(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Complex::new(c.norm(), T::zero()))
                .collect(),
        }
    }

    /// Divides by z. Requires constant term exactly 0; the order shrinks
    /// by one.
    pub fn divide_by_z(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Parameter("divide_by_z needs constant term 0".into()));
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Horner partial sum of the stored terms. No tail information; use
    /// [`TruncatedSeries::eval_enclosed`] when the truncation error matters.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Horner partial sum plus a certified tail bound Σ_{m>N} bound(m)·r^m,
    /// where `bound` majorizes the true coefficient moduli past the
    /// truncation order.
    ///
    /// The tail is summed until increments fall below 1e-15 of the running
    /// scale and then closed by a geometric majorization; `r > r_max` is a
    /// domain error (the tail would be unreliable).
    pub fn eval_enclosed(
        &self,
        z: Complex<T>,
        bound: impl Fn(usize) -> T,
        r_max: T,
    ) -> Result<Enclosure<T>> {
        let r = z.norm();
        if r > r_max {
            return Err(Error::EvaluationRadius {
                radius: r.to_f64().unwrap_or(f64::NAN),
                max: r_max.to_f64().unwrap_or(f64::NAN),
            });
        }
        let value = self.eval(z);
        if r.is_zero() {
            return Ok(Enclosure {
                value,
                tail: T::zero(),
            });
        }

        let n = self.order();
        let cutoff = T::of(1e-15) * (T::one() + value.norm());
        let mut tail = T::zero();
        let mut rp = r.powi((n + 1) as i32);
        let mut prev = T::infinity();
        let mut m = n + 1;
        loop {
            let term = bound(m) * rp;
            if !term.is_finite() {
                return Err(Error::TailCertification(format!(
                    "majorant not finite at index {m}"
                )));
            }
            tail += term;
            if term < cutoff {
                // Close the remainder geometrically. The observed ratio is
                // taken once it is contracting; bound(m) families used here
                // grow at most polynomially, so the ratio tends to r < 1.
                let q = if prev > T::zero() && term / prev < T::one() {
                    (term / prev).max(r)
                } else {
                    r
                };
                if q < T::one() {
                    tail += term * q / (T::one() - q);
                    break;
                }
            }
            prev = term;
            rp *= r;
            m += 1;
            if m > n + TAIL_MAX_TERMS {
                return Err(Error::TailCertification(format!(
                    "tail sum did not contract within {TAIL_MAX_TERMS} terms at r = {r}"
                )));
            }
        }
        Ok(Enclosure { value, tail })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    type S = TruncatedSeries<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn geometric(order: usize) -> S {
        S::from_real_fn(order, |_| 1.0)
    }

    #[test]
    fn cauchy_product_difference_of_squares() {
        let a = S::from_real_fn(2, |m| if m <= 1 { 1.0 } else { 0.0 }); // 1 + z
        let b = S::new(vec![c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]).unwrap(); // 1 - z
        let p = a.cauchy_product(&b);
        assert_eq!(p.coeff(0), c(1.0, 0.0));
        assert_eq!(p.coeff(1), c(0.0, 0.0));
        assert_eq!(p.coeff(2), c(-1.0, 0.0));
    }

    #[test]
    fn cauchy_product_geometric_telescopes() {
        let one_minus_z = S::from_real_fn(8, |m| match m {
            0 => 1.0,
            1 => -1.0,
            _ => 0.0,
        });
        let p = geometric(8).cauchy_product(&one_minus_z);
        assert_eq!(p.coeff(0), c(1.0, 0.0));
        for m in 1..=8 {
            assert_eq!(p.coeff(m), c(0.0, 0.0));
        }
    }

    #[test]
    fn cauchy_product_against_double_loop_oracle() {
        // (1 + 2z + 3z^2)^2, oracle by plain double loop.
        let a = S::from_real_fn(2, |m| (m + 1) as f64);
        let p = a.cauchy_product(&a);
        let ac = a.coeffs();
        let mut oracle = [c(0.0, 0.0); 3];
        for i in 0..=2usize {
            for j in 0..=2usize {
                if i + j <= 2 {
                    oracle[i + j] += ac[i] * ac[j];
                }
            }
        }
        assert_eq!(oracle[0], c(1.0, 0.0));
        assert_eq!(oracle[1], c(4.0, 0.0));
        assert_eq!(oracle[2], c(10.0, 0.0));
        for (m, expected) in oracle.iter().enumerate() {
            assert_relative_eq!(p.coeff(m).re, expected.re, max_relative = 1e-15);
            assert_eq!(p.coeff(m).im, 0.0);
        }
    }

    #[test]
    fn integrate_constant_gives_z() {
        let one = S::constant(c(1.0, 0.0), 0);
        let i = one.integrate();
        assert_eq!(i.order(), 1);
        assert_eq!(i.coeff(0), c(0.0, 0.0));
        assert_eq!(i.coeff(1), c(1.0, 0.0));
    }

    #[test]
    fn integrate_geometric_gives_log() {
        // ∫ Σ z^n = Σ z^{n+1}/(n+1) = -log(1-z)
        let i = geometric(16).integrate();
        assert_eq!(i.coeff(0), c(0.0, 0.0));
        for m in 1..=17 {
            assert_relative_eq!(i.coeff(m).re, 1.0 / m as f64, max_relative = 1e-15);
        }
    }

    #[test]
    fn integrate_binomial_gives_geometric_shift() {
        // ∫ (1-z)^{-2} = z/(1-z): coefficients (m+1) integrate to 1.
        let b = S::from_real_fn(32, |m| (m + 1) as f64);
        let i = b.integrate();
        assert_eq!(i.coeff(0), c(0.0, 0.0));
        for m in 1..=33 {
            assert_relative_eq!(i.coeff(m).re, 1.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn exp_of_zero_is_one() {
        let e = S::zero(8).exp().unwrap();
        assert_eq!(e.coeff(0), c(1.0, 0.0));
        for m in 1..=8 {
            assert_eq!(e.coeff(m), c(0.0, 0.0));
        }
    }

    #[test]
    fn exp_of_z_is_factorial_series() {
        let e = S::identity(12).exp().unwrap();
        let mut fact = 1.0;
        for m in 0..=12usize {
            if m > 0 {
                fact *= m as f64;
            }
            assert_relative_eq!(e.coeff(m).re, 1.0 / fact, max_relative = 1e-13);
        }
    }

    #[test]
    fn exp_of_scaled_log_matches_binomial_oracle() {
        // exp(-2 log(1-z)) = (1-z)^{-2} = Σ (n+1) z^n.
        let log_term = geometric(32).integrate().scale_real(2.0); // -2 log(1-z)
        let e = log_term.truncated(32).exp().unwrap();
        for m in 0..=32usize {
            assert_relative_eq!(e.coeff(m).re, (m + 1) as f64, max_relative = 1e-12);
            assert!(e.coeff(m).im.abs() < 1e-14);
        }
    }

    #[test]
    fn exp_rejects_nonzero_constant_term() {
        let s = S::constant(c(0.5, 0.0), 4);
        assert!(matches!(s.exp(), Err(Error::NonzeroConstantTerm { .. })));
    }

    #[test]
    fn eval_identity_at_zero() {
        let z = S::identity(4);
        assert_eq!(z.eval(c(0.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn eval_geometric_at_half() {
        let g = geometric(128);
        let e = g.eval_enclosed(c(0.5, 0.0), |_| 1.0, 0.95).unwrap();
        assert_relative_eq!(e.value.re, 2.0, epsilon = 1e-9);
        assert!(e.tail < 1e-9);
    }

    #[test]
    fn eval_log_series_matches_scalar_oracle() {
        let log = geometric(255).integrate(); // -log(1-z), order 256
        let r = 0.386555_f64;
        let oracle = -(1.0 - r).ln();
        let e = log
            .eval_enclosed(c(r, 0.0), |m| 1.0 / m as f64, 0.95)
            .unwrap();
        assert!((e.value.re - oracle).abs() < 1e-6);
        assert!((e.value.re - oracle).abs() <= e.tail + 1e-12);
    }

    #[test]
    fn eval_rejects_radius_beyond_max() {
        let g = geometric(8);
        assert!(matches!(
            g.eval_enclosed(c(0.97, 0.0), |_| 1.0, 0.95),
            Err(Error::EvaluationRadius { .. })
        ));
    }

    #[test]
    fn majorant_flips_alternating_signs() {
        // z/(1+z) = Σ (-1)^{m-1} z^m  ->  majorant is z/(1-z).
        let s = S::from_real_fn(16, |m| {
            if m == 0 {
                0.0
            } else if m % 2 == 1 {
                1.0
            } else {
                -1.0
            }
        });
        let maj = s.majorant();
        assert_eq!(maj.coeff(0), c(0.0, 0.0));
        for m in 1..=16 {
            assert_eq!(maj.coeff(m), c(1.0, 0.0));
        }
    }

    #[test]
    fn majorant_of_one_minus_z() {
        let s = S::from_real_fn(1, |m| if m == 0 { 1.0 } else { -1.0 });
        let maj = s.majorant();
        assert_eq!(maj.coeff(0), c(1.0, 0.0));
        assert_eq!(maj.coeff(1), c(1.0, 0.0));
    }

    #[test]
    fn majorant_of_zero() {
        let maj = S::zero(5).majorant();
        for m in 0..=5 {
            assert_eq!(maj.coeff(m), c(0.0, 0.0));
        }
    }

    #[test]
    fn new_rejects_non_finite() {
        assert!(S::new(vec![c(f64::NAN, 0.0)]).is_err());
        assert!(S::new(vec![c(0.0, f64::INFINITY)]).is_err());
        assert!(S::new(vec![]).is_err());
    }

    #[test]
    fn mixed_order_truncates_to_smaller() {
        let a = geometric(10);
        let b = geometric(4);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.cauchy_product(&b).order(), 4);
    }

    fn arb_series(max_order: usize) -> impl Strategy<Value = S> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_order + 1)
            .prop_map(|v| S::new(v.into_iter().map(|(re, im)| c(re, im)).collect()).unwrap())
    }

    fn arb_zero_constant_series(max_order: usize) -> impl Strategy<Value = S> {
        arb_series(max_order).prop_map(|s| {
            let mut coeffs = s.coeffs().to_vec();
            coeffs[0] = Complex::new(0.0, 0.0);
            S::new(coeffs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn prop_cauchy_product_commutes_exactly(a in arb_series(12), b in arb_series(12)) {
            let ab = a.cauchy_product(&b);
            let ba = b.cauchy_product(&a);
            prop_assert_eq!(ab.coeffs(), ba.coeffs());
        }

        #[test]
        fn prop_cauchy_product_associative(a in arb_series(10), b in arb_series(10), x in arb_series(10)) {
            let left = a.cauchy_product(&b).cauchy_product(&x);
            let right = a.cauchy_product(&b.cauchy_product(&x));
            for m in 0..=left.order().min(right.order()) {
                let d = (left.coeff(m) - right.coeff(m)).norm();
                let scale = left.coeff(m).norm().max(1.0);
                prop_assert!(d <= 1e-13 * scale, "m={} d={}", m, d);
            }
        }

        #[test]
        fn prop_exp_is_multiplicative(a in arb_zero_constant_series(10), b in arb_zero_constant_series(10)) {
            let sum_exp = a.add(&b).exp().unwrap();
            let prod_exp = a.exp().unwrap().cauchy_product(&b.exp().unwrap());
            for m in 0..=sum_exp.order().min(prod_exp.order()) {
                let d = (sum_exp.coeff(m) - prod_exp.coeff(m)).norm();
                let scale = sum_exp.coeff(m).norm().max(1.0);
                prop_assert!(d <= 1e-12 * scale, "m={} d={}", m, d);
            }
        }

        #[test]
        fn prop_derivative_inverts_integrate(a in arb_series(16)) {
            let round_trip = a.integrate().derivative();
            prop_assert_eq!(round_trip.order(), a.order());
            for m in 0..=a.order() {
                let d = (round_trip.coeff(m) - a.coeff(m)).norm();
                prop_assert!(d <= 1e-14 * a.coeff(m).norm().max(1.0));
            }
        }

        #[test]
        fn prop_majorant_dominates_on_circle(a in arb_series(16), theta in 0.0f64..std::f64::consts::TAU, r in 0.0f64..0.9) {
            let z = Complex::from_polar(r, theta);
            let lhs = a.eval(z).norm();
            let rhs = a.majorant().eval(c(r, 0.0)).re;
            prop_assert!(lhs <= rhs + 1e-12 * rhs.max(1.0));
        }
    }
}
