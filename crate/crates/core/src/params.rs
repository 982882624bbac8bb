//! Scalar parameters of one body instance and their admissibility conditions.
//!
//! A body instance is fixed by four continuous inputs: the scale `c`, the
//! ellipse eccentricity parameter `kappa = a/c = c/alpha`, and the
//! inclinations `k1 < k2` of the two generating rays through the left focus.
//! Everything else is derived:
//!
//! ```text
//! a^2 = kappa^2 c^2        b^2  = (kappa^2 - 1) c^2
//! alpha^2 = c^2 / kappa^2  beta^2 = (1 - kappa^-2) c^2
//! ```
//!
//! which makes the ellipse and hyperbola confocal (`c^2 = a^2 - b^2 =
//! alpha^2 + beta^2`) and perpendicular at their upper intersection
//! (`alpha a = c^2`).

use crate::error::{Error, Result};
use crate::geom2d::{Ellipse, HyperbolaRight, Point2, Ray2, Vec2};
use crate::scalar::Real;

/// Rejection band: inclinations closer than this to `k_min`, `k_max`, or each
/// other leave no usable mirror and are refused outright.
pub const DEGENERACY_BAND: f64 = 1e-9;

/// All derived scalars for one body instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstructionParams<F> {
    /// Half the focal separation; the single length scale.
    pub c: F,
    /// Shape parameter `a/c = c/alpha`, in (1, 2).
    pub kappa: F,
    /// Ellipse semi-axes.
    pub a: F,
    pub b: F,
    /// Hyperbola semi-axes.
    pub alpha: F,
    pub beta: F,
    /// Generating-ray inclinations, `k_min < k1 < k2 < k_max`.
    pub k1: F,
    pub k2: F,
    /// Admissible inclination bounds for this `kappa`.
    pub k_min: F,
    pub k_max: F,
    /// Half of `arctan(k1)`: rotation of the body frame.
    pub gamma: F,
    /// `tan(gamma)`; satisfies `2t / (1 - t^2) = k1`.
    pub t: F,
}

/// Admissible inclination interval `(k_min, k_max)` for a given `kappa`.
///
/// `k_max = sqrt(kappa^2 - 1)` is the asymptote bound beyond which the ray
/// misses the hyperbola's right branch; `k_min` marks where the focal
/// distance to the ellipse crossing drops below the focal separation `2c`.
pub fn k_bounds<F: Real>(kappa: F) -> Result<(F, F)> {
    check_kappa(kappa)?;
    let (k_min, _) = k_min_forms(kappa);
    let k_max = (kappa * kappa - F::one()).sqrt();
    Ok((k_min, k_max))
}

/// Both closed forms of `k_min`; algebraically identical, kept separate so
/// the implementation can be cross-checked against itself.
///
/// ```text
/// sqrt(kappa^2-1) sqrt(1-(2-kappa)^2) / (1 + 2 kappa - kappa^2)
/// (kappa-1) sqrt(4-(kappa-1)^2) / (2 - (kappa-1)^2)
/// ```
pub fn k_min_forms<F: Real>(kappa: F) -> (F, F) {
    let one = F::one();
    let two = one + one;
    let four = two + two;
    let s = kappa - one;
    let rational = s * (four - s * s).sqrt() / (two - s * s);
    let radical = (kappa * kappa - one).sqrt() * (one - (two - kappa) * (two - kappa)).sqrt()
        / (one + two * kappa - kappa * kappa);
    (rational, radical)
}

fn check_kappa<F: Real>(kappa: F) -> Result<()> {
    let one = F::one();
    let two = one + one;
    if !(kappa > one && kappa < two) {
        return Err(Error::InvalidEccentricity {
            kappa: kappa.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Derives and validates the full parameter set from `(c, kappa, k1, k2)`.
pub fn derive_params<F: Real>(c: F, kappa: F, k1: F, k2: F) -> Result<ConstructionParams<F>> {
    if !(c > F::zero()) {
        return Err(Error::InvalidScale {
            c: c.to_f64().unwrap_or(f64::NAN),
        });
    }
    check_kappa(kappa)?;
    let (k_min, k_max) = k_bounds(kappa)?;
    if !(k_min < k1 && k1 < k2 && k2 < k_max) {
        return Err(Error::InvalidInclinations {
            k1: k1.to_f64().unwrap_or(f64::NAN),
            k2: k2.to_f64().unwrap_or(f64::NAN),
            k_min: k_min.to_f64().unwrap_or(f64::NAN),
            k_max: k_max.to_f64().unwrap_or(f64::NAN),
        });
    }
    let band = F::from(DEGENERACY_BAND).unwrap();
    if k1 - k_min < band || k_max - k2 < band || k2 - k1 < band {
        return Err(Error::DegenerateInclinations {
            k1: k1.to_f64().unwrap_or(f64::NAN),
            k2: k2.to_f64().unwrap_or(f64::NAN),
            k_min: k_min.to_f64().unwrap_or(f64::NAN),
            k_max: k_max.to_f64().unwrap_or(f64::NAN),
            band: DEGENERACY_BAND,
        });
    }
    let one = F::one();
    let a = kappa * c;
    let b = c * (kappa * kappa - one).sqrt();
    let alpha = c / kappa;
    let beta = c * (one - one / (kappa * kappa)).sqrt();
    // tan of half the k1 angle, rationalized to avoid cancellation:
    // (sqrt(k1^2+1) - 1) / k1 = k1 / (sqrt(k1^2+1) + 1).
    let t = k1 / ((k1 * k1 + one).sqrt() + one);
    let gamma = t.atan();
    Ok(ConstructionParams {
        c,
        kappa,
        a,
        b,
        alpha,
        beta,
        k1,
        k2,
        k_min,
        k_max,
        gamma,
        t,
    })
}

impl<F: Real> ConstructionParams<F> {
    /// Left focus, the distinguished point of the construction.
    #[inline]
    pub fn focus1(&self) -> Point2<F> {
        Point2::new(-self.c, F::zero())
    }

    /// Right focus.
    #[inline]
    pub fn focus2(&self) -> Point2<F> {
        Point2::new(self.c, F::zero())
    }

    #[inline]
    pub fn ellipse(&self) -> Ellipse<F> {
        Ellipse::new(self.a, self.b)
    }

    #[inline]
    pub fn hyperbola(&self) -> HyperbolaRight<F> {
        HyperbolaRight::new(self.alpha, self.beta)
    }

    /// Ray from the left focus at inclination `k`.
    pub fn focal_ray(&self, k: F) -> Ray2<F> {
        Ray2::new(self.focus1(), Vec2::new(F::one(), k)).expect("nonzero direction")
    }

    /// Distance from the left focus to the ellipse point with abscissa `x`,
    /// via the focal relation `(c/a) x + a`.
    pub fn focal_distance_ellipse(&self, x: F) -> Result<F> {
        if x.abs() > self.a {
            return Err(Error::invalid_argument(format!(
                "abscissa {x} outside ellipse range [-{a}, {a}]",
                a = self.a
            )));
        }
        Ok(self.c / self.a * x + self.a)
    }

    /// Distance from the left focus to the right-branch point with abscissa
    /// `x`, via the focal relation `(c/alpha) x + alpha`.
    pub fn focal_distance_hyperbola(&self, x: F) -> Result<F> {
        if x < self.alpha {
            return Err(Error::invalid_argument(format!(
                "abscissa {x} left of the branch vertex {alpha}",
                alpha = self.alpha
            )));
        }
        Ok(self.c / self.alpha * x + self.alpha)
    }

    /// Upper intersection of the ellipse and the hyperbola branch.
    ///
    /// The perpendicularity condition `alpha a = c^2` pins its abscissa to
    /// exactly `c`, so the point is `(c, b^2/a)`.
    pub fn intersection_point_c(&self) -> Point2<F> {
        Point2::new(self.c, self.b * self.b / self.a)
    }

    /// Upper ellipse crossing of the focal ray at inclination `k`.
    pub fn ellipse_point(&self, k: F) -> Result<Point2<F>> {
        if !(k > F::zero()) {
            return Err(Error::invalid_argument("inclination must be positive"));
        }
        self.ellipse()
            .intersect_ray(&self.focal_ray(k), F::zero())
            .map(|h| h.point)
            .ok_or_else(|| Error::invalid_argument("focal ray misses the ellipse"))
    }

    /// Right-branch crossing of the focal ray at inclination `k`.
    pub fn hyperbola_point(&self, k: F) -> Result<Point2<F>> {
        if !(k > F::zero() && k < self.k_max) {
            return Err(Error::invalid_argument(format!(
                "inclination {k} outside (0, k_max = {kmax})",
                kmax = self.k_max
            )));
        }
        self.hyperbola()
            .intersect_ray(&self.focal_ray(k), F::zero())
            .map(|h| h.point)
            .ok_or_else(|| Error::invalid_argument("focal ray misses the hyperbola branch"))
    }

    /// Inclination of the ray from the left focus through `p`.
    #[inline]
    pub fn inclination(&self, p: Point2<F>) -> F {
        p.y / (p.x + self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn default_params() -> ConstructionParams<f64> {
        derive_params(1.0, 1.5, 0.7, 0.9).unwrap()
    }

    #[test]
    fn default_tuple_scalars_match_oracle() {
        // Frozen from the 50-digit closed-form oracle.
        let p = default_params();
        assert_relative_eq!(p.a, 1.5, epsilon = 1e-15);
        assert_relative_eq!(p.b, 1.1180339887498949, epsilon = 1e-15);
        assert_relative_eq!(p.alpha, 0.66666666666666667, epsilon = 1e-15);
        assert_relative_eq!(p.beta, 0.7453559924999299, epsilon = 1e-15);
        assert_relative_eq!(p.k_min, 0.55328333517248813, epsilon = 1e-14);
        assert_relative_eq!(p.k_max, 1.1180339887498949, epsilon = 1e-15);
        assert_relative_eq!(p.t, 0.31522223081910042, epsilon = 1e-15);
        assert_relative_eq!(p.gamma, 0.30536298219460431, epsilon = 1e-15);
        // gamma is half the k1 angle.
        assert_relative_eq!(p.gamma, 0.5 * 0.7_f64.atan(), epsilon = 1e-15);
    }

    #[test]
    fn tangent_satisfies_double_angle_equation() {
        let p = default_params();
        assert_relative_eq!(2.0 * p.t / (1.0 - p.t * p.t), p.k1, epsilon = 1e-12);
        // Same value as the unrationalized form.
        let direct = ((p.k1 * p.k1 + 1.0).sqrt() - 1.0) / p.k1;
        assert_relative_eq!(p.t, direct, epsilon = 1e-15);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(matches!(
            derive_params(1.0, 2.5, 0.7, 0.9),
            Err(Error::InvalidEccentricity { .. })
        ));
        assert!(matches!(
            derive_params(1.0, 1.0, 0.7, 0.9),
            Err(Error::InvalidEccentricity { .. })
        ));
        assert!(matches!(
            derive_params(-1.0, 1.5, 0.7, 0.9),
            Err(Error::InvalidScale { .. })
        ));
        // k1 = 0.5 < k_min ~ 0.5533.
        let err = derive_params(1.0, 1.5, 0.5, 0.9).unwrap_err();
        match err {
            Error::InvalidInclinations { k_min, .. } => {
                assert_relative_eq!(k_min, 0.55328333517248813, epsilon = 1e-12);
            }
            other => panic!("unexpected error {other:?}"),
        }
        // Near-degenerate spacing is refused distinctly.
        assert!(matches!(
            derive_params(1.0, 1.5, 0.7, 0.7 + 1e-12),
            Err(Error::DegenerateInclinations { .. })
        ));
    }

    #[test]
    fn k_bounds_match_oracle_and_vanish_at_one() {
        let (lo, hi) = k_bounds(1.5_f64).unwrap();
        assert_relative_eq!(lo, 0.55328333517248813, epsilon = 1e-14);
        assert_relative_eq!(hi, 1.1180339887498949, epsilon = 1e-15);
        let (lo, hi) = k_bounds(1.0 + 1e-9).unwrap();
        assert!(lo < 1e-4 && hi < 1e-4);
        assert!(k_bounds(2.0_f64).is_err());
    }

    #[test]
    fn k_min_two_printed_forms_agree() {
        let (f1, f2) = k_min_forms(1.9_f64);
        assert_relative_eq!(f1, 1.3507994949195442, epsilon = 1e-13);
        assert_relative_eq!(f1, f2, max_relative = 1e-12);
        for i in 1..100 {
            let kappa = 1.0 + 0.01 * i as f64 - 0.0001;
            let (f1, f2) = k_min_forms(kappa);
            assert_relative_eq!(f1, f2, max_relative = 1e-12);
        }
    }

    #[test]
    fn k_min_matches_rederivation_from_a0() {
        // Independent route per the derivation: the boundary point A0 has
        // x0 = a (2 - a/c), y0 from the ellipse equation, k_min = y0/(x0+c).
        let p = default_params();
        let x0 = p.a * (2.0 - p.a / p.c);
        assert_relative_eq!(x0, 0.75, epsilon = 1e-15);
        let y0 = ((1.0 - (x0 / p.a).powi(2)) * p.b * p.b).sqrt();
        assert_relative_eq!(y0, 0.96824583655185422, epsilon = 1e-14);
        assert_relative_eq!(y0 / (x0 + p.c), p.k_min, epsilon = 1e-13);
        // And A0 sits at focal distance exactly 2c.
        assert_relative_eq!(p.focal_distance_ellipse(x0).unwrap(), 2.0, epsilon = 1e-13);
    }

    #[test]
    fn focal_distances_match_euclidean_oracle() {
        let p = default_params();
        let f1 = p.focus1();
        // Spec-named abscissas (frozen from the quadratic oracle).
        let a_pt = p.ellipse_point(0.7).unwrap();
        assert_relative_eq!(a_pt.x, 0.50424194599365326, epsilon = 1e-13);
        let d = p.focal_distance_ellipse(a_pt.x).unwrap();
        assert_relative_eq!(d, 1.8361612973291022, epsilon = 1e-13);
        assert_relative_eq!(d, f1.distance(a_pt), epsilon = 1e-10);
        assert!(d < 2.0 * p.c);

        let b_pt = p.hyperbola_point(0.7).unwrap();
        let d = p.focal_distance_hyperbola(b_pt.x).unwrap();
        assert_relative_eq!(d, 3.6414291034649731, epsilon = 1e-12);
        assert_relative_eq!(d, f1.distance(b_pt), epsilon = 1e-10);
        assert!(d > 2.0 * p.c);

        assert!(p.focal_distance_ellipse(1.6).is_err());
        assert!(p.focal_distance_hyperbola(0.5).is_err());
    }

    #[test]
    fn intersection_point_c_properties() {
        let p = default_params();
        let c_pt = p.intersection_point_c();
        assert_eq!(c_pt.x, p.c);
        assert_relative_eq!(c_pt.y, 0.83333333333333333, epsilon = 1e-15);
        assert!(p.ellipse().implicit(c_pt).abs() < 1e-12);
        assert!(p.hyperbola().implicit(c_pt).abs() < 1e-12);
        // |F1 C| = sqrt((2c)^2 + b^4/a^2).
        let expect = (4.0 * p.c * p.c + p.b.powi(4) / (p.a * p.a)).sqrt();
        assert_relative_eq!(p.focus1().distance(c_pt), expect, epsilon = 1e-14);
        assert_relative_eq!(expect, 2.1666666666666667, epsilon = 1e-15);
    }

    #[test]
    fn confocal_identities_over_random_tuples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let c: f64 = rng.gen_range(0.5..2.0);
            let kappa: f64 = rng.gen_range(1.05..1.95);
            let (lo, hi) = k_bounds(kappa).unwrap();
            let u1: f64 = rng.gen_range(0.05..0.90);
            let u2: f64 = rng.gen_range(u1 + 0.05..0.99);
            let p = derive_params(c, kappa, lo + u1 * (hi - lo), lo + u2 * (hi - lo)).unwrap();
            let rel = |x: f64, y: f64| (x - y).abs() / y.abs().max(1e-300);
            assert!(rel(p.a * p.a, kappa * kappa * c * c) < 1e-12);
            assert!(rel(p.b * p.b, (kappa * kappa - 1.0) * c * c) < 1e-12);
            assert!(rel(p.alpha * p.alpha, c * c / (kappa * kappa)) < 1e-12);
            assert!(rel(p.beta * p.beta, (1.0 - kappa.powi(-2)) * c * c) < 1e-12);
            assert!(rel(p.a * p.a - p.b * p.b, c * c) < 1e-12);
            assert!(rel(p.alpha * p.alpha + p.beta * p.beta, c * c) < 1e-12);
            assert!(rel(p.alpha * p.a, c * c) < 1e-12);
            assert!(p.k_min < p.k1 && p.k1 < p.k2 && p.k2 < p.k_max);
            assert!(rel(2.0 * p.t / (1.0 - p.t * p.t), p.k1) < 1e-12);
        }
    }

    #[test]
    fn focal_distance_monotonicity() {
        // |F1 A(k)| strictly decreases over (k_min, k_max) and |F1 B(k)|
        // always exceeds 2c.
        let p = default_params();
        let mut prev = f64::INFINITY;
        for i in 0..1000 {
            let k = p.k_min + (i as f64 + 0.5) / 1000.0 * (p.k_max - p.k_min);
            let a_pt = p.ellipse_point(k).unwrap();
            let da = p.focal_distance_ellipse(a_pt.x).unwrap();
            assert!(da < prev, "|F1A| not decreasing at k = {k}");
            prev = da;
            let b_pt = p.hyperbola_point(k).unwrap();
            let db = p.focal_distance_hyperbola(b_pt.x).unwrap();
            assert!(db > 2.0 * p.c, "|F1B| <= 2c at k = {k}");
        }
    }
}
