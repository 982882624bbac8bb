//! Rigid placement of canonical-frame geometry into body coordinates.

use crate::scalar::Real;

use super::ray::Ray2;
use super::vec::{Point2, Vec2};

/// Isometry from a conic's canonical `(x, y)` frame to the body's
/// `(xi, eta)` frame:
///
/// ```text
/// forward(p) = mirror_eta^m ( R(-angle) (p + (shift, 0)) )
/// ```
///
/// With `angle = gamma` and `shift = c` this is the construction's change of
/// variables (`xi = cos(gamma) (x+c) + sin(gamma) y`, `eta = -sin(gamma) (x+c)
/// + cos(gamma) y`); the mirror flag produces the copy reflected about
/// `eta = 0`. Offsetting `angle` by pi together with toggling the mirror flag
/// yields the copies reflected about `xi = 0` used by meridian sections of
/// bodies revolved about the eta-axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameMap<F> {
    pub angle: F,
    pub shift: F,
    pub mirror: bool,
}

impl<F: Real> FrameMap<F> {
    pub fn new(angle: F, shift: F, mirror: bool) -> Self {
        Self {
            angle,
            shift,
            mirror,
        }
    }

    pub fn identity() -> Self {
        Self::new(F::zero(), F::zero(), false)
    }

    /// Canonical -> body coordinates.
    pub fn forward(&self, p: Point2<F>) -> Point2<F> {
        let (s, c) = self.angle.sin_cos();
        let x = p.x + self.shift;
        let y = p.y;
        let xi = c * x + s * y;
        let eta = -s * x + c * y;
        Point2::new(xi, if self.mirror { -eta } else { eta })
    }

    /// Body -> canonical coordinates.
    pub fn inverse(&self, q: Point2<F>) -> Point2<F> {
        let (s, c) = self.angle.sin_cos();
        let eta = if self.mirror { -q.y } else { q.y };
        let x = c * q.x - s * eta;
        let y = s * q.x + c * eta;
        Point2::new(x - self.shift, y)
    }

    /// Linear part applied to a direction (canonical -> body).
    pub fn forward_dir(&self, v: Vec2<F>) -> Vec2<F> {
        let (s, c) = self.angle.sin_cos();
        let xi = c * v.x + s * v.y;
        let eta = -s * v.x + c * v.y;
        Vec2::new(xi, if self.mirror { -eta } else { eta })
    }

    /// Linear part applied to a direction (body -> canonical).
    pub fn inverse_dir(&self, v: Vec2<F>) -> Vec2<F> {
        let (s, c) = self.angle.sin_cos();
        let eta = if self.mirror { -v.y } else { v.y };
        Vec2::new(c * v.x - s * eta, s * v.x + c * eta)
    }

    /// Maps a body-frame ray into the canonical frame (parameters along the
    /// ray are preserved: the map is an isometry).
    pub fn inverse_ray(&self, ray: &Ray2<F>) -> Ray2<F> {
        Ray2::new(self.inverse(ray.origin), self.inverse_dir(ray.dir()))
            .expect("isometry preserves unit directions")
    }
}
