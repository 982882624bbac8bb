//! Plane points and vectors.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Real;

/// A point in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2<F> {
    pub x: F,
    pub y: F,
}

/// A displacement / direction in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec2<F> {
    pub x: F,
    pub y: F,
}

impl<F: Real> Point2<F> {
    #[inline]
    pub fn new(x: F, y: F) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn origin() -> Self {
        Self::new(F::zero(), F::zero())
    }

    #[inline]
    pub fn to_vec(self) -> Vec2<F> {
        Vec2::new(self.x, self.y)
    }

    #[inline]
    pub fn distance(self, other: Self) -> F {
        (other - self).norm()
    }

    /// Polar angle about the origin, in (-pi, pi].
    #[inline]
    pub fn polar_angle(self) -> F {
        self.y.atan2(self.x)
    }

    /// Distance from the origin.
    #[inline]
    pub fn radius(self) -> F {
        self.x.hypot(self.y)
    }
}

impl<F: Real> Vec2<F> {
    #[inline]
    pub fn new(x: F, y: F) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero())
    }

    /// Unit vector at polar angle `theta`.
    #[inline]
    pub fn from_angle(theta: F) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s)
    }

    #[inline]
    pub fn dot(self, other: Self) -> F {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, other: Self) -> F {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> F {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> F {
        self.x.hypot(self.y)
    }

    /// Counter-clockwise perpendicular.
    #[inline]
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    /// Returns `None` for the zero vector.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        if n > F::zero() {
            Some(self / n)
        } else {
            None
        }
    }

    #[inline]
    pub fn is_unit(self, tol: F) -> bool {
        (self.norm() - F::one()).abs() <= tol
    }

    /// Unsigned angle to `other`, in [0, pi].
    pub fn angle_to(self, other: Self) -> F {
        self.cross(other).abs().atan2(self.dot(other))
    }

    /// Specular reflection about the unit normal `n`; assumes `self` and `n`
    /// are unit length.
    #[inline]
    pub fn reflected(self, n: Self) -> Self {
        let two = F::one() + F::one();
        self - n * (two * self.dot(n))
    }
}

impl<F: Real> Add<Vec2<F>> for Point2<F> {
    type Output = Point2<F>;
    #[inline]
    fn add(self, v: Vec2<F>) -> Point2<F> {
        Point2::new(self.x + v.x, self.y + v.y)
    }
}

impl<F: Real> Sub<Vec2<F>> for Point2<F> {
    type Output = Point2<F>;
    #[inline]
    fn sub(self, v: Vec2<F>) -> Point2<F> {
        Point2::new(self.x - v.x, self.y - v.y)
    }
}

impl<F: Real> Sub for Point2<F> {
    type Output = Vec2<F>;
    #[inline]
    fn sub(self, other: Point2<F>) -> Vec2<F> {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

impl<F: Real> Add for Vec2<F> {
    type Output = Vec2<F>;
    #[inline]
    fn add(self, other: Self) -> Self {
        Self::new(self.x + other.x, self.y + other.y)
    }
}

impl<F: Real> Sub for Vec2<F> {
    type Output = Vec2<F>;
    #[inline]
    fn sub(self, other: Self) -> Self {
        Self::new(self.x - other.x, self.y - other.y)
    }
}

impl<F: Real> Mul<F> for Vec2<F> {
    type Output = Vec2<F>;
    #[inline]
    fn mul(self, s: F) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl<F: Real> Div<F> for Vec2<F> {
    type Output = Vec2<F>;
    #[inline]
    fn div(self, s: F) -> Self {
        Self::new(self.x / s, self.y / s)
    }
}

impl<F: Real> Neg for Vec2<F> {
    type Output = Vec2<F>;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}
