//! Bounded random point fields.
//!
//! A [`PointField`] is a set of points sampled uniformly and independently
//! per axis inside a rectangular [`Boundary`]. Sampling is driven by a
//! ChaCha8 stream seeded from a `u64`, so a given `(n, boundary, seed)`
//! always yields the same points in the same order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Boundary {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Default for Boundary {
    fn default() -> Self {
        Boundary {
            x_min: 0.0,
            x_max: 100.0,
            y_min: 0.0,
            y_max: 100.0,
        }
    }
}

impl Boundary {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        let b = Boundary {
            x_min,
            x_max,
            y_min,
            y_max,
        };
        b.validate()?;
        Ok(b)
    }

    /// Rejects empty, inverted and non-finite rectangles.
    pub fn validate(&self) -> Result<()> {
        let finite = [self.x_min, self.x_max, self.y_min, self.y_max]
            .iter()
            .all(|v| v.is_finite());
        if finite && self.x_min < self.x_max && self.y_min < self.y_max {
            Ok(())
        } else {
            Err(Error::InvalidBoundary {
                x_min: self.x_min,
                x_max: self.x_max,
                y_min: self.y_min,
                y_max: self.y_max,
            })
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        self.x_min <= p.x && p.x <= self.x_max && self.y_min <= p.y && p.y <= self.y_max
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// An immutable, seeded set of points inside a boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointField {
    points: Vec<Point>,
    seed: u64,
    boundary: Boundary,
}

impl PointField {
    /// Wraps externally supplied points, checking that each lies inside `boundary`.
    pub fn from_points(points: Vec<Point>, boundary: Boundary, seed: u64) -> Result<Self> {
        boundary.validate()?;
        if let Some(i) = points.iter().position(|p| !boundary.contains(*p)) {
            return Err(Error::param(format!(
                "point {i} ({}, {}) lies outside the boundary",
                points[i].x, points[i].y
            )));
        }
        Ok(PointField {
            points,
            seed,
            boundary,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }
}

/// Samples `n` points uniformly inside `boundary`.
pub fn generate_points(n: usize, boundary: Boundary, seed: u64) -> Result<PointField> {
    boundary.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| {
            Point::new(
                rng.gen_range(boundary.x_min..=boundary.x_max),
                rng.gen_range(boundary.y_min..=boundary.y_max),
            )
        })
        .collect();
    Ok(PointField {
        points,
        seed,
        boundary,
    })
}
