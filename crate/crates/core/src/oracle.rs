//! Brute-force estimators used to cross-check the exact and certified results.
//!
//! Monte Carlo sampling is counter-based: sample `i` of a run with seed `s`
//! reads the ChaCha8 keystream of `s` at word offset `i · words_per_sample`,
//! so the samples do not depend on how the index range is split across
//! threads. Hit counts are integers and sum exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{GeometryError, Result};
use crate::exhaustion::SectionFunction;
use crate::geometry::{Curve, Point2};
use crate::solids::Point3;

/// Samples drawn per sequential chunk.
const CHUNK: u64 = 1 << 16;

/// A Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

impl Estimate {
    /// Number of standard errors between the estimate and `truth`.
    pub fn z_score(&self, truth: f64) -> f64 {
        let diff = (self.mean - truth).abs();
        if self.stderr == 0.0 {
            if diff == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            diff / self.stderr
        }
    }

    pub fn agrees_with(&self, truth: f64, sigmas: f64) -> bool {
        self.z_score(truth) <= sigmas
    }
}

/// Axis-aligned box in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Box2 {
    pub min: Point2,
    pub max: Point2,
}

impl Box2 {
    pub fn new(min: Point2, max: Point2) -> Self {
        Self { min, max }
    }

    pub fn area(&self) -> f64 {
        (self.max.x - self.min.x) * (self.max.y - self.min.y)
    }
}

/// Axis-aligned box in space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Box3 {
    pub min: Point3,
    pub max: Point3,
}

impl Box3 {
    pub fn new(min: Point3, max: Point3) -> Self {
        Self { min, max }
    }

    pub fn volume(&self) -> f64 {
        (self.max.x - self.min.x) * (self.max.y - self.min.y) * (self.max.z - self.min.z)
    }
}

/// Count hits over `samples` counter-indexed draws of `dims` uniforms each.
fn count_hits<F>(samples: u64, seed: u64, dims: usize, hit: F) -> u64
where
    F: Fn(&[f64; 3]) -> bool + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(samples);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // Each f64 consumes one u64, i.e. two 32-bit words.
            rng.set_word_pos(start as u128 * dims as u128 * 2);
            let mut u = [0.0f64; 3];
            let mut hits = 0u64;
            for _ in start..end {
                for slot in u.iter_mut().take(dims) {
                    *slot = rng.random::<f64>();
                }
                if hit(&u) {
                    hits += 1;
                }
            }
            hits
        })
        .collect::<Vec<u64>>()
        .into_iter()
        .sum()
}

fn estimate(measure: f64, hits: u64, samples: u64, seed: u64) -> Estimate {
    let n = samples as f64;
    let p = hits as f64 / n;
    let stderr = if samples > 1 {
        // Sample standard deviation of the scaled indicator, over √n.
        measure * (p * (1.0 - p) * n / (n - 1.0)).max(0.0).sqrt() / n.sqrt()
    } else {
        0.0
    };
    Estimate {
        mean: measure * p,
        stderr,
        samples,
        seed,
    }
}

/// Area of `{p in bbox : member(p)}` by uniform sampling.
pub fn mc_area<F>(member: F, bbox: Box2, samples: u64, seed: u64) -> Result<Estimate>
where
    F: Fn(Point2) -> bool + Sync,
{
    let a = bbox.area();
    if !(a > 0.0 && a.is_finite()) {
        return Err(GeometryError::EmptyBox);
    }
    if samples == 0 {
        return Err(GeometryError::InvalidInput("samples must be at least 1".into()));
    }
    let (lo, hi) = (bbox.min, bbox.max);
    let hits = count_hits(samples, seed, 2, |u| {
        member(Point2::new(
            lo.x + (hi.x - lo.x) * u[0],
            lo.y + (hi.y - lo.y) * u[1],
        ))
    });
    Ok(estimate(a, hits, samples, seed))
}

/// Volume of `{p in bbox : member(p)}` by uniform sampling.
pub fn mc_volume<F>(member: F, bbox: Box3, samples: u64, seed: u64) -> Result<Estimate>
where
    F: Fn(Point3) -> bool + Sync,
{
    let v = bbox.volume();
    if !(v > 0.0 && v.is_finite()) {
        return Err(GeometryError::EmptyBox);
    }
    if samples == 0 {
        return Err(GeometryError::InvalidInput("samples must be at least 1".into()));
    }
    let (lo, hi) = (bbox.min, bbox.max);
    let hits = count_hits(samples, seed, 3, |u| {
        member(Point3::new(
            lo.x + (hi.x - lo.x) * u[0],
            lo.y + (hi.y - lo.y) * u[1],
            lo.z + (hi.z - lo.z) * u[2],
        ))
    });
    Ok(estimate(v, hits, samples, seed))
}

/// Midpoint Riemann sum of the section areas over `n` equal slabs.
pub fn riemann_volume(section: &SectionFunction, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(GeometryError::InvalidInput("slab count must be at least 1".into()));
    }
    let (a, b) = (section.start(), section.end());
    let h = (b - a) / n as f64;
    let mut sum = 0.0;
    for i in 0..n {
        sum += section.eval(a + (i as f64 + 0.5) * h);
    }
    Ok(sum * h)
}

/// Composite midpoint rule for `∫ integrand ds` with `n` subdivisions per
/// curve piece.
pub fn boundary_integral<F>(curve: &Curve, integrand: F, n: usize) -> Result<f64>
where
    F: Fn(Point2) -> f64,
{
    if n == 0 {
        return Err(GeometryError::InvalidInput("subdivisions must be at least 1".into()));
    }
    if !(curve.length() > 0.0) {
        return Err(GeometryError::DegenerateCurve);
    }
    let mut total = 0.0;
    for piece in curve.pieces() {
        let ds = piece.length() / n as f64;
        for i in 0..n {
            total += integrand(piece.point_at((i as f64 + 0.5) / n as f64)) * ds;
        }
    }
    Ok(total)
}
