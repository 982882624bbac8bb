//! 2D geometric kernel: points, vectors, rays, specular reflection,
//! ray-conic and ray-segment intersection, and the rigid frame placement.
//!
//! Everything here is an immutable value with pure operations.

mod conic;
mod frame;
mod ray;
mod vec;

pub use conic::{
    intersect_ray_segment, Ellipse, HyperbolaRight, QuadRoots, GRAZING_DISC_TOL, SEGMENT_END_TOL,
};
pub use frame::FrameMap;
pub use ray::{reflect_direction, Hit2, Ray2, UNIT_TOL};
pub use vec::{Point2, Vec2};
