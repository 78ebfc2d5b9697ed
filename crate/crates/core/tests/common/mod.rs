#![allow(dead_code)]

use std::f64::consts::TAU;

use indivisibles::{PlanarRegion, Point2, Polygon};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Star-shaped polygon around `center`: sorted angles, random radii.
pub fn star_polygon(rng: &mut ChaCha8Rng, center: Point2, max_radius: f64) -> PlanarRegion {
    loop {
        let n = rng.random_range(3..=12);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point2> = angles
            .iter()
            .map(|&a| {
                let r = rng.random_range(0.2 * max_radius..max_radius);
                center.add(Point2::new(a.cos(), a.sin()).scale(r))
            })
            .collect();
        if let Ok(p) = Polygon::new(pts) {
            if p.signed_area() > 1e-3 * max_radius * max_radius {
                return p.into();
            }
        }
    }
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
