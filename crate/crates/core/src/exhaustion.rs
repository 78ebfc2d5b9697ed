//! Certified inner/outer enclosures by slab decomposition.
//!
//! A piecewise-monotone profile is cut into `n` equal slabs, with the
//! declared breakpoints added as extra slab boundaries so that every slab
//! is monotone. On a monotone slab the smallest and largest values sit at
//! its two ends, so the inner sum (smallest value times thickness) and the
//! outer sum (largest value times thickness) bracket the true measure.

use std::fmt;

use crate::error::{GeometryError, Result};
use crate::geometry::{PiecewiseMonotone, Trend, WidthFunction};

/// Cross-section area as a function of height.
pub type SectionFunction = PiecewiseMonotone;

/// Relative widening applied to each bound to absorb summation rounding.
pub const ROUNDING_INFLATION: f64 = 1e-12;

/// First slab count tried by [`refine_until`].
pub const REFINE_START: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Areas from inner and outer rectangles.
    InnerOuterRectangles,
    /// Volumes from inner and outer disks (cylindrical slabs).
    InnerOuterDisks,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::InnerOuterRectangles => "inner-outer-rectangles",
            Method::InnerOuterDisks => "inner-outer-disks",
        })
    }
}

/// A certified enclosure `[lo, hi]` of a nonnegative measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureInterval {
    pub lo: f64,
    pub hi: f64,
    /// Number of equal slabs requested (breakpoints may add a few more).
    pub slabs: usize,
    pub method: Method,
}

impl MeasureInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lo <= value && value <= self.hi
    }

    /// `self ⊆ other`.
    pub fn is_within(&self, other: &MeasureInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

impl fmt::Display for MeasureInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] (n = {}, {})", self.lo, self.hi, self.slabs, self.method)
    }
}

/// Slab boundaries: the uniform grid of `n` slabs merged with the breakpoints.
fn slab_edges(f: &PiecewiseMonotone, n: usize) -> Vec<f64> {
    let (a, b) = (f.start(), f.end());
    let mut edges: Vec<f64> = (0..=n)
        .map(|i| {
            if i == n {
                b
            } else {
                a + (b - a) * (i as f64 / n as f64)
            }
        })
        .collect();
    edges.extend_from_slice(f.breakpoints());
    edges.sort_by(f64::total_cmp);
    edges.dedup();
    edges
}

/// One slab of an enclosure: the interval `[t0, t1]` and the least and
/// greatest values of the integrand on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slab {
    pub t0: f64,
    pub t1: f64,
    pub inner: f64,
    pub outer: f64,
}

/// The slabs used by [`area_bounds`] and [`volume_bounds`] with `n` requested
/// slabs, in order.
pub fn slabs(f: &PiecewiseMonotone, n: usize) -> Result<Vec<Slab>> {
    if n == 0 {
        return Err(GeometryError::InvalidInput("slab count must be at least 1".into()));
    }
    f.check_monotonicity()?;
    let edges = slab_edges(f, n);
    let values: Vec<f64> = edges.iter().map(|&t| f.eval(t).max(0.0)).collect();
    Ok(edges
        .windows(2)
        .zip(values.windows(2))
        .map(|(e, v)| {
            let piece = f.piece_index(0.5 * (e[0] + e[1]));
            let (lo, hi) = match f.trend_at(piece) {
                Trend::Increasing => (v[0], v[1]),
                Trend::Decreasing => (v[1], v[0]),
            };
            // Guard against the sampled check missing a tiny reversal.
            Slab {
                t0: e[0],
                t1: e[1],
                inner: lo.min(hi),
                outer: hi.max(lo),
            }
        })
        .collect())
}

fn bounds(f: &PiecewiseMonotone, n: usize, method: Method) -> Result<MeasureInterval> {
    let (mut inner, mut outer) = (0.0, 0.0);
    for s in slabs(f, n)? {
        let h = s.t1 - s.t0;
        inner += h * s.inner;
        outer += h * s.outer;
    }
    Ok(MeasureInterval {
        lo: (inner * (1.0 - ROUNDING_INFLATION)).max(0.0),
        hi: outer * (1.0 + ROUNDING_INFLATION),
        slabs: n,
        method,
    })
}

/// Inner/outer rectangle enclosure of `∫ width`.
pub fn area_bounds(width: &WidthFunction, n: usize) -> Result<MeasureInterval> {
    bounds(width, n, Method::InnerOuterRectangles)
}

/// Inner/outer cylindrical-slab enclosure of `∫ section`.
pub fn volume_bounds(section: &SectionFunction, n: usize) -> Result<MeasureInterval> {
    bounds(section, n, Method::InnerOuterDisks)
}

/// What [`refine_until`] is enclosing.
#[derive(Debug, Clone, Copy)]
pub enum Target<'a> {
    Area(&'a WidthFunction),
    Volume(&'a SectionFunction),
}

/// Double the slab count from [`REFINE_START`] until the enclosure is no
/// wider than `tol`. Each returned interval is intersected with the previous
/// one, so the sequence is nested.
pub fn refine_until(target: Target<'_>, tol: f64, n_max: usize) -> Result<MeasureInterval> {
    refine_trace(target, tol, n_max).map(|trace| *trace.last().expect("nonempty trace"))
}

/// Like [`refine_until`] but returns every interval produced on the way.
pub fn refine_trace(target: Target<'_>, tol: f64, n_max: usize) -> Result<Vec<MeasureInterval>> {
    if !(tol > 0.0) {
        return Err(GeometryError::InvalidInput(format!("tolerance {tol} must be positive")));
    }
    let step = |n| match target {
        Target::Area(w) => area_bounds(w, n),
        Target::Volume(s) => volume_bounds(s, n),
    };
    let mut trace: Vec<MeasureInterval> = Vec::new();
    let mut n = REFINE_START;
    loop {
        let mut next = step(n)?;
        if let Some(prev) = trace.last() {
            next.lo = next.lo.max(prev.lo);
            next.hi = next.hi.min(prev.hi);
        }
        trace.push(next);
        if next.width() <= tol {
            return Ok(trace);
        }
        if n.saturating_mul(2) > n_max {
            return Err(GeometryError::ToleranceNotReached { tol, best: next });
        }
        n *= 2;
    }
}

/// Stock profiles for the classical figures.
pub mod profiles {
    use std::f64::consts::PI;

    use super::SectionFunction;
    use crate::error::Result;
    use crate::geometry::{PiecewiseMonotone, Trend, WidthFunction};

    /// Chord length `2√(r² - y²)` of a disk of radius `r`, on `[-r, r]`.
    pub fn disk_width(r: f64) -> Result<WidthFunction> {
        PiecewiseMonotone::new(
            -r,
            r,
            vec![0.0],
            vec![Trend::Increasing, Trend::Decreasing],
            move |y| 2.0 * (r * r - y * y).max(0.0).sqrt(),
        )
    }

    /// Section area `π(r² - z²)` of a sphere, on `[-r, r]`.
    pub fn sphere_sections(r: f64) -> Result<SectionFunction> {
        PiecewiseMonotone::new(
            -r,
            r,
            vec![0.0],
            vec![Trend::Increasing, Trend::Decreasing],
            move |z| PI * (r * r - z * z).max(0.0),
        )
    }

    /// Section area `A(1 - z/h)²` of a cone with base area `A`, on `[0, h]`.
    pub fn cone_sections(base_area: f64, h: f64) -> Result<SectionFunction> {
        PiecewiseMonotone::monotone(0.0, h, Trend::Decreasing, move |z| {
            let s = (1.0 - z / h).max(0.0);
            base_area * s * s
        })
    }

    /// Sections of the hoof of radius `r` and height `h` perpendicular to its
    /// cutting diameter: `(h/r)·x·2√(r² - x²)` on `[0, r]`.
    pub fn hoof_sections(r: f64, h: f64) -> Result<SectionFunction> {
        let slope = h / r;
        let peak = r / 2f64.sqrt();
        PiecewiseMonotone::new(
            0.0,
            r,
            vec![peak],
            vec![Trend::Increasing, Trend::Decreasing],
            move |x| slope * x * 2.0 * (r * r - x * x).max(0.0).sqrt(),
        )
    }
}
