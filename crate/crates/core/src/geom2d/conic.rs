//! Ray-conic and ray-segment intersection in the conic's canonical frame.
//!
//! Conic intersections reduce to a textbook quadratic in the ray parameter;
//! rays are transformed into the canonical frame by the caller, so no
//! general-conic algebra is needed here.

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::ray::{Hit2, Ray2};
use super::vec::{Point2, Vec2};

/// Normalized-discriminant threshold below which a conic hit counts as
/// tangential (grazing).
pub const GRAZING_DISC_TOL: f64 = 1e-14;

/// Barycentric band at segment endpoints inside which a hit counts as
/// endpoint-grazing.
pub const SEGMENT_END_TOL: f64 = 1e-12;

/// Up to two ray parameters where a conic equation is satisfied, ascending.
#[derive(Clone, Copy, Debug, Default)]
pub struct QuadRoots<F> {
    pub t: [F; 2],
    pub n: usize,
    /// Discriminant at or below the grazing threshold relative to the
    /// quadratic's magnitude.
    pub grazing: bool,
}

/// Solves `a t^2 + b t + c = 0` with the cancellation-safe formulation.
fn solve_quadratic<F: Real>(a: F, b: F, c: F) -> QuadRoots<F> {
    let zero = F::zero();
    let four = F::from(4.0).unwrap();
    let mut out = QuadRoots {
        t: [zero; 2],
        n: 0,
        grazing: false,
    };
    if a == zero {
        if b != zero {
            out.t[0] = -c / b;
            out.n = 1;
        }
        return out;
    }
    let disc = b * b - four * a * c;
    let scale = b * b + (four * a * c).abs();
    if scale > zero && disc.abs() <= F::from(GRAZING_DISC_TOL).unwrap() * scale {
        out.grazing = true;
    }
    if disc < zero {
        if out.grazing {
            // Treat a tangential graze as a double root.
            let t = -b / (a + a);
            out.t[0] = t;
            out.n = 1;
        }
        return out;
    }
    let sq = disc.sqrt();
    let q = if b >= zero {
        -(b + sq) / (F::one() + F::one())
    } else {
        -(b - sq) / (F::one() + F::one())
    };
    let r0 = q / a;
    if q != zero {
        let r1 = c / q;
        let (lo, hi) = if r0 <= r1 { (r0, r1) } else { (r1, r0) };
        out.t = [lo, hi];
        out.n = 2;
    } else {
        out.t[0] = r0;
        out.n = 1;
    }
    out
}

/// Axis-aligned, origin-centered ellipse `x^2/a^2 + y^2/b^2 = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ellipse<F> {
    pub a: F,
    pub b: F,
}

impl<F: Real> Ellipse<F> {
    pub fn new(a: F, b: F) -> Self {
        Self { a, b }
    }

    /// Implicit value `x^2/a^2 + y^2/b^2 - 1`; negative inside.
    #[inline]
    pub fn implicit(&self, p: Point2<F>) -> F {
        (p.x / self.a) * (p.x / self.a) + (p.y / self.b) * (p.y / self.b) - F::one()
    }

    /// Gradient of the implicit function (unnormalized, outward).
    #[inline]
    pub fn gradient(&self, p: Point2<F>) -> Vec2<F> {
        let two = F::one() + F::one();
        Vec2::new(two * p.x / (self.a * self.a), two * p.y / (self.b * self.b))
    }

    /// All crossings of the ray with the ellipse at parameters above `t_min`.
    pub fn intersect_ray_all(&self, ray: &Ray2<F>, t_min: F) -> QuadRoots<F> {
        let o = ray.origin;
        let d = ray.dir();
        let (a2, b2) = (self.a * self.a, self.b * self.b);
        let qa = d.x * d.x / a2 + d.y * d.y / b2;
        let qb = (F::one() + F::one()) * (o.x * d.x / a2 + o.y * d.y / b2);
        let qc = o.x * o.x / a2 + o.y * o.y / b2 - F::one();
        filter_roots(solve_quadratic(qa, qb, qc), t_min)
    }

    /// Nearest crossing above `t_min`, with the normal oriented toward the
    /// ray origin's side.
    pub fn intersect_ray(&self, ray: &Ray2<F>, t_min: F) -> Option<Hit2<F>> {
        let roots = self.intersect_ray_all(ray, t_min);
        (roots.n > 0).then(|| self.hit_at(ray, roots.t[0], roots.grazing))
    }

    pub(crate) fn hit_at(&self, ray: &Ray2<F>, t: F, grazing: bool) -> Hit2<F> {
        let point = ray.at(t);
        make_hit(t, point, self.gradient(point), ray.dir(), grazing)
    }
}

/// Right branch of the hyperbola `x^2/alpha^2 - y^2/beta^2 = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HyperbolaRight<F> {
    pub alpha: F,
    pub beta: F,
}

impl<F: Real> HyperbolaRight<F> {
    pub fn new(alpha: F, beta: F) -> Self {
        Self { alpha, beta }
    }

    /// Implicit value `x^2/alpha^2 - y^2/beta^2 - 1`.
    #[inline]
    pub fn implicit(&self, p: Point2<F>) -> F {
        (p.x / self.alpha) * (p.x / self.alpha) - (p.y / self.beta) * (p.y / self.beta) - F::one()
    }

    #[inline]
    pub fn gradient(&self, p: Point2<F>) -> Vec2<F> {
        let two = F::one() + F::one();
        Vec2::new(
            two * p.x / (self.alpha * self.alpha),
            -(two * p.y / (self.beta * self.beta)),
        )
    }

    /// Crossings with the right branch (`x > 0`) above `t_min`.
    pub fn intersect_ray_all(&self, ray: &Ray2<F>, t_min: F) -> QuadRoots<F> {
        let o = ray.origin;
        let d = ray.dir();
        let (a2, b2) = (self.alpha * self.alpha, self.beta * self.beta);
        let qa = d.x * d.x / a2 - d.y * d.y / b2;
        let qb = (F::one() + F::one()) * (o.x * d.x / a2 - o.y * d.y / b2);
        let qc = o.x * o.x / a2 - o.y * o.y / b2 - F::one();
        let mut roots = filter_roots(solve_quadratic(qa, qb, qc), t_min);
        // Left-branch crossings are discarded.
        let mut kept = 0;
        for i in 0..roots.n {
            if ray.at(roots.t[i]).x > F::zero() {
                roots.t[kept] = roots.t[i];
                kept += 1;
            }
        }
        roots.n = kept;
        roots
    }

    pub fn intersect_ray(&self, ray: &Ray2<F>, t_min: F) -> Option<Hit2<F>> {
        let roots = self.intersect_ray_all(ray, t_min);
        (roots.n > 0).then(|| self.hit_at(ray, roots.t[0], roots.grazing))
    }

    pub(crate) fn hit_at(&self, ray: &Ray2<F>, t: F, grazing: bool) -> Hit2<F> {
        let point = ray.at(t);
        make_hit(t, point, self.gradient(point), ray.dir(), grazing)
    }
}

/// Intersection of a ray with the open segment `p0..p1`.
///
/// Hits inside the endpoint band [`SEGMENT_END_TOL`] are flagged grazing;
/// hits beyond the segment, and parallel rays, return `None`.
pub fn intersect_ray_segment<F: Real>(
    ray: &Ray2<F>,
    p0: Point2<F>,
    p1: Point2<F>,
    t_min: F,
) -> Result<Option<Hit2<F>>> {
    let e = p1 - p0;
    if e.norm_sq() == F::zero() {
        return Err(Error::invalid_argument("segment endpoints coincide"));
    }
    let d = ray.dir();
    let denom = d.cross(e);
    let scale = d.norm() * e.norm();
    if denom.abs() <= F::from(1e-15).unwrap() * scale {
        return Ok(None); // parallel
    }
    let r = p0 - ray.origin;
    let t = r.cross(e) / denom;
    let s = r.cross(d) / denom;
    let eps = F::from(SEGMENT_END_TOL).unwrap();
    if t <= t_min || s < F::zero() || s > F::one() {
        return Ok(None);
    }
    let grazing = s <= eps || s >= F::one() - eps;
    let point = ray.at(t);
    Ok(Some(make_hit(t, point, e.perp(), d, grazing)))
}

fn filter_roots<F: Real>(mut roots: QuadRoots<F>, t_min: F) -> QuadRoots<F> {
    let mut kept = 0;
    for i in 0..roots.n {
        if roots.t[i] > t_min {
            roots.t[kept] = roots.t[i];
            kept += 1;
        }
    }
    roots.n = kept;
    roots
}

fn make_hit<F: Real>(t: F, point: Point2<F>, normal: Vec2<F>, d: Vec2<F>, grazing: bool) -> Hit2<F> {
    let mut n = normal.normalized().unwrap_or(Vec2::new(F::zero(), F::one()));
    if n.dot(d) > F::zero() {
        n = -n;
    }
    Hit2 {
        t,
        point,
        normal: n,
        grazing,
    }
}
