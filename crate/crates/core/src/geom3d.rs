//! Minimal 3D vectors for trajectories on revolved bodies.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Real;

/// A 3D point or displacement in the body's `(u, v, w)` coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: Real> Vec3<F> {
    #[inline]
    pub fn new(x: F, y: F, z: F) -> Self {
        Self { x, y, z }
    }

    #[inline]
    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero(), F::zero())
    }

    #[inline]
    pub fn dot(self, o: Self) -> F {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    #[inline]
    pub fn norm_sq(self) -> F {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> F {
        self.norm_sq().sqrt()
    }

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
        self.cross(other).norm().atan2(self.dot(other))
    }

    /// Specular reflection about a unit normal.
    #[inline]
    pub fn reflected(self, n: Self) -> Self {
        let two = F::one() + F::one();
        self - n * (two * self.dot(n))
    }

    /// Perpendicular distance from `p` to the line `origin + t self`
    /// (`self` unit).
    pub fn line_distance(self, origin: Self, p: Self) -> F {
        (p - origin).cross(self).norm()
    }
}

/// A 3D ray: origin plus unit direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ray3<F> {
    pub origin: Vec3<F>,
    pub dir: Vec3<F>,
}

impl<F: Real> Add for Vec3<F> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<F: Real> Sub for Vec3<F> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<F: Real> Mul<F> for Vec3<F> {
    type Output = Self;
    #[inline]
    fn mul(self, s: F) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl<F: Real> Div<F> for Vec3<F> {
    type Output = Self;
    #[inline]
    fn div(self, s: F) -> Self {
        Self::new(self.x / s, self.y / s, self.z / s)
    }
}

impl<F: Real> Neg for Vec3<F> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}
