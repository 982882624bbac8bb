//! Rays and intersection records.

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::vec::{Point2, Vec2};

/// Tolerance on the unit-length invariant of ray directions and normals.
pub const UNIT_TOL: f64 = 1e-9;

/// A ray: origin plus unit direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ray2<F> {
    pub origin: Point2<F>,
    dir: Vec2<F>,
}

impl<F: Real> Ray2<F> {
    /// Builds a ray, normalizing `dir`. Errors on a zero direction.
    pub fn new(origin: Point2<F>, dir: Vec2<F>) -> Result<Self> {
        let dir = dir
            .normalized()
            .ok_or_else(|| Error::invalid_argument("ray direction must be nonzero"))?;
        Ok(Self { origin, dir })
    }

    /// Ray from `origin` at polar angle `theta`.
    pub fn from_angle(origin: Point2<F>, theta: F) -> Self {
        Self {
            origin,
            dir: Vec2::from_angle(theta),
        }
    }

    #[inline]
    pub fn dir(&self) -> Vec2<F> {
        self.dir
    }

    #[inline]
    pub fn at(&self, t: F) -> Point2<F> {
        self.origin + self.dir * t
    }

    /// Perpendicular distance from point `p` to the ray's supporting line.
    pub fn line_distance(&self, p: Point2<F>) -> F {
        (p - self.origin).cross(self.dir).abs()
    }
}

/// One ray-boundary intersection in the frame the query was posed in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hit2<F> {
    /// Ray parameter of the hit (a length, since directions are unit).
    pub t: F,
    pub point: Point2<F>,
    /// Unit normal oriented toward the side the ray came from.
    pub normal: Vec2<F>,
    /// Tangential or junction-adjacent contact; measure-zero rays the
    /// invisibility definition exempts.
    pub grazing: bool,
}

/// Specular reflection of direction `d` about unit normal `n`.
///
/// Both inputs must be unit length within [`UNIT_TOL`]; reflecting twice
/// returns the original direction.
pub fn reflect_direction<F: Real>(d: Vec2<F>, n: Vec2<F>) -> Result<Vec2<F>> {
    let tol = F::from(UNIT_TOL).unwrap();
    if !d.is_unit(tol) || !n.is_unit(tol) {
        return Err(Error::invalid_argument(
            "reflect_direction requires unit direction and normal",
        ));
    }
    Ok(d.reflected(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQ2_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn normal_incidence_reverses() {
        let d = Vec2::new(0.0, -1.0);
        let n = Vec2::new(0.0, 1.0);
        assert_eq!(reflect_direction(d, n).unwrap(), Vec2::new(0.0, 1.0));
    }

    #[test]
    fn grazing_incidence_unchanged() {
        let d = Vec2::new(1.0, 0.0);
        let n = Vec2::new(0.0, 1.0);
        assert_eq!(reflect_direction(d, n).unwrap(), Vec2::new(1.0, 0.0));
    }

    #[test]
    fn mirror_at_45_degrees() {
        let d = Vec2::new(SQ2_2, -SQ2_2);
        let n = Vec2::new(0.0, 1.0);
        let r = reflect_direction(d, n).unwrap();
        assert!((r.x - SQ2_2).abs() < 1e-15);
        assert!((r.y - SQ2_2).abs() < 1e-15);
    }

    #[test]
    fn non_unit_inputs_rejected() {
        let d = Vec2::new(2.0, 0.0);
        let n = Vec2::new(0.0, 1.0);
        assert!(reflect_direction(d, n).is_err());
        assert!(reflect_direction(n, d).is_err());
    }

    #[test]
    fn ray_evaluation() {
        let r = Ray2::new(Point2::new(1.0, 2.0), Vec2::new(3.0, 4.0)).unwrap();
        assert!(r.dir().is_unit(1e-15));
        let p = r.at(5.0);
        assert!((p.x - 4.0).abs() < 1e-12);
        assert!((p.y - 6.0).abs() < 1e-12);
        assert!(Ray2::new(Point2::<f64>::origin(), Vec2::zero()).is_err());
    }
}
