//! Planar primitives: points, lines, regions, curves and their measures.
//!
//! Sign convention for distances to a [`Line2`]: positive on the left of the
//! line's direction vector. `Line2::vertical(x0)` points down so that the
//! signed distance is `x - x0`; `Line2::horizontal(y0)` points right so that
//! it is `y - y0`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::sync::Arc;

use crate::error::{GeometryError, Result};

/// Default number of midpoint slabs used for centroids and moments of
/// [`SlabRegion`]s and for polar quadrature over sectors.
pub const DEFAULT_QUADRATURE_SLABS: usize = 4096;

/// Number of sample points per piece for the monotonicity sanity check.
pub const MONOTONICITY_SAMPLES: usize = 17;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }

    pub fn scale(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, o: Point2) -> f64 {
        self.sub(o).norm()
    }

    /// Rotate by `angle` radians about the origin.
    pub fn rotate(self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An oriented line: a point on it and a unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2 {
    point: Point2,
    direction: Point2,
}

impl Line2 {
    /// The direction is normalized; a zero or non-finite direction is rejected.
    pub fn new(point: Point2, direction: Point2) -> Result<Self> {
        let len = direction.norm();
        if !point.is_finite() || !len.is_finite() || len == 0.0 {
            return Err(GeometryError::InvalidInput(format!(
                "line through {point} with direction {direction}"
            )));
        }
        Ok(Self {
            point,
            direction: direction.scale(1.0 / len),
        })
    }

    pub fn through(a: Point2, b: Point2) -> Result<Self> {
        Self::new(a, b.sub(a))
    }

    /// The line `y = y0`, signed distance `y - y0`.
    pub fn horizontal(y0: f64) -> Self {
        Self {
            point: Point2::new(0.0, y0),
            direction: Point2::new(1.0, 0.0),
        }
    }

    /// The line `x = x0`, signed distance `x - x0`.
    pub fn vertical(x0: f64) -> Self {
        Self {
            point: Point2::new(x0, 0.0),
            direction: Point2::new(0.0, -1.0),
        }
    }

    pub fn point(&self) -> Point2 {
        self.point
    }

    pub fn direction(&self) -> Point2 {
        self.direction
    }

    /// Unit normal pointing to the positive (left) side.
    pub fn normal(&self) -> Point2 {
        Point2::new(-self.direction.y, self.direction.x)
    }

    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.direction.cross(p.sub(self.point))
    }

    /// Same line moved by `delta` along its normal.
    pub fn offset(&self, delta: f64) -> Self {
        Self {
            point: self.point.add(self.normal().scale(delta)),
            direction: self.direction,
        }
    }
}

/// Declared monotonic behaviour of one piece of a [`PiecewiseMonotone`] function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Increasing,
    Decreasing,
}

/// A nonnegative function on `[a, b]` that is monotone on each piece between
/// consecutive breakpoints. Serves as the slab width profile of a
/// [`SlabRegion`] and as the cross-section area profile of a solid.
#[derive(Clone)]
pub struct PiecewiseMonotone {
    a: f64,
    b: f64,
    breakpoints: Vec<f64>,
    trends: Vec<Trend>,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

pub type WidthFunction = PiecewiseMonotone;

impl fmt::Debug for PiecewiseMonotone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PiecewiseMonotone")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("breakpoints", &self.breakpoints)
            .field("trends", &self.trends)
            .finish_non_exhaustive()
    }
}

impl PiecewiseMonotone {
    /// `breakpoints` are the interior piece boundaries; `trends` has one
    /// entry per piece.
    pub fn new(
        a: f64,
        b: f64,
        breakpoints: Vec<f64>,
        trends: Vec<Trend>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(GeometryError::InvalidInput(format!(
                "interval [{a}, {b}] must be finite with a < b"
            )));
        }
        if trends.len() != breakpoints.len() + 1 {
            return Err(GeometryError::InvalidInput(format!(
                "{} breakpoints need {} trends, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                trends.len()
            )));
        }
        let mut prev = a;
        for &t in &breakpoints {
            if !(t > prev && t < b) {
                return Err(GeometryError::InvalidInput(format!(
                    "breakpoint {t} is not strictly increasing inside ({a}, {b})"
                )));
            }
            prev = t;
        }
        Ok(Self {
            a,
            b,
            breakpoints,
            trends,
            f: Arc::new(f),
        })
    }

    /// A single monotone piece.
    pub fn monotone(
        a: f64,
        b: f64,
        trend: Trend,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        Self::new(a, b, Vec::new(), vec![trend], f)
    }

    pub fn constant(a: f64, b: f64, value: f64) -> Result<Self> {
        Self::monotone(a, b, Trend::Increasing, move |_| value)
    }

    pub fn start(&self) -> f64 {
        self.a
    }

    pub fn end(&self) -> f64 {
        self.b
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    /// `(lo, hi, trend)` for each piece in order.
    pub fn pieces(&self) -> impl Iterator<Item = (f64, f64, Trend)> + '_ {
        let mut bounds = Vec::with_capacity(self.breakpoints.len() + 2);
        bounds.push(self.a);
        bounds.extend_from_slice(&self.breakpoints);
        bounds.push(self.b);
        (0..self.trends.len()).map(move |i| (bounds[i], bounds[i + 1], self.trends[i]))
    }

    /// Index of the piece containing `t` (breakpoints belong to the piece on
    /// their right).
    pub fn piece_index(&self, t: f64) -> usize {
        self.breakpoints.partition_point(|&bp| bp <= t)
    }

    pub fn trend_at(&self, piece: usize) -> Trend {
        self.trends[piece]
    }

    /// Sample each piece at [`MONOTONICITY_SAMPLES`] evenly spaced points and
    /// confirm the declared trend, up to a relative rounding allowance.
    pub fn check_monotonicity(&self) -> Result<()> {
        for (i, (lo, hi, trend)) in self.pieces().enumerate() {
            let m = MONOTONICITY_SAMPLES - 1;
            let values: Vec<f64> = (0..=m)
                .map(|k| self.eval(lo + (hi - lo) * k as f64 / m as f64))
                .collect();
            if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
                return Err(GeometryError::InvalidInput(format!(
                    "function is negative or non-finite on [{lo}, {hi}]"
                )));
            }
            let scale = values.iter().fold(0.0f64, |s, v| s.max(v.abs()));
            let slack = 1e-12 * scale;
            let ok = values.windows(2).all(|w| match trend {
                Trend::Increasing => w[1] >= w[0] - slack,
                Trend::Decreasing => w[1] <= w[0] + slack,
            });
            if !ok {
                return Err(GeometryError::InvalidMonotonicity { piece: i, lo, hi });
            }
        }
        Ok(())
    }

    /// Total variation computed from piece endpoint values.
    pub fn total_variation(&self) -> f64 {
        self.pieces()
            .map(|(lo, hi, _)| (self.eval(hi) - self.eval(lo)).abs())
            .sum()
    }
}

/// How each horizontal slice of a [`SlabRegion`] is placed along `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SlabAnchor {
    /// Slice centered on `x = c`.
    Centered(f64),
    /// Slice starts at `x = x0` and extends to the right.
    Left(f64),
}

impl SlabAnchor {
    fn left(&self, width: f64) -> f64 {
        match *self {
            SlabAnchor::Centered(c) => c - 0.5 * width,
            SlabAnchor::Left(x0) => x0,
        }
    }
}

/// Region swept by horizontal slices: for `y = t` in `[a, b]` the slice is
/// an `x`-interval of length `width(t)` placed by `anchor`.
#[derive(Debug, Clone)]
pub struct SlabRegion {
    pub width: WidthFunction,
    pub anchor: SlabAnchor,
    /// Midpoint slabs used for centroid and moment quadrature.
    pub resolution: usize,
}

impl SlabRegion {
    pub fn new(width: WidthFunction, anchor: SlabAnchor) -> Self {
        Self {
            width,
            anchor,
            resolution: DEFAULT_QUADRATURE_SLABS,
        }
    }

    pub fn with_resolution(mut self, slabs: usize) -> Self {
        self.resolution = slabs.max(1);
        self
    }

    /// Left and right `x` of the slice at height `t`.
    pub fn slice(&self, t: f64) -> (f64, f64) {
        let w = self.width.eval(t).max(0.0);
        let l = self.anchor.left(w);
        (l, l + w)
    }

    fn midpoints(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let (a, b) = (self.width.start(), self.width.end());
        let n = self.resolution;
        let h = (b - a) / n as f64;
        (0..n).map(move |i| (a + (i as f64 + 0.5) * h, h))
    }

    /// Quadrature area, `x`-moment and `y`-moment.
    fn moments(&self) -> (f64, f64, f64) {
        let (mut area, mut mx, mut my) = (0.0, 0.0, 0.0);
        for (t, h) in self.midpoints() {
            let (l, r) = self.slice(t);
            let da = (r - l) * h;
            area += da;
            mx += da * 0.5 * (l + r);
            my += da * t;
        }
        (area, mx, my)
    }
}

/// A simple polygon, stored counterclockwise. Weakly simple rings (edges
/// touching without crossing, as in a sawtooth) are accepted.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeometryError::InvalidInput(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(GeometryError::InvalidInput(format!(
                "non-finite vertex {p}"
            )));
        }
        if let Some((i, j)) = first_crossing(&vertices) {
            return Err(GeometryError::InvalidInput(format!(
                "polygon edges {i} and {j} cross"
            )));
        }
        let mut poly = Self { vertices };
        if poly.signed_area() < 0.0 {
            poly.vertices.reverse();
        }
        Ok(poly)
    }

    /// Axis-aligned rectangle with opposite corners `min` and `max`.
    pub fn rect(min: Point2, max: Point2) -> Result<Self> {
        Self::new(vec![
            min,
            Point2::new(max.x, min.y),
            max,
            Point2::new(min.x, max.y),
        ])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Shoelace area with coordinates taken relative to the first vertex.
    pub fn signed_area(&self) -> f64 {
        let o = self.vertices[0];
        0.5 * self
            .edges()
            .map(|(p, q)| p.sub(o).cross(q.sub(o)))
            .sum::<f64>()
    }

    /// Area and first moments `(A, ∫x dA, ∫y dA)`.
    fn moments(&self) -> (f64, f64, f64) {
        let o = self.vertices[0];
        let (mut a2, mut sx, mut sy) = (0.0, 0.0, 0.0);
        for (p, q) in self.edges() {
            let (p, q) = (p.sub(o), q.sub(o));
            let c = p.cross(q);
            a2 += c;
            sx += (p.x + q.x) * c;
            sy += (p.y + q.y) * c;
        }
        let area = 0.5 * a2;
        (area, sx / 6.0 + o.x * area, sy / 6.0 + o.y * area)
    }

    /// Even-odd point membership.
    pub fn contains(&self, p: Point2) -> bool {
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a.y > p.y) != (b.y > p.y) {
                let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if p.x < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Part of the polygon on the side where `line` distance has sign `side`
    /// (`1.0` or `-1.0`), by Sutherland-Hodgman clipping. The result may be a
    /// degenerate ring; only its signed integrals are used.
    fn clip_moments(&self, line: &Line2, side: f64) -> (f64, f64, f64) {
        let mut out: Vec<Point2> = Vec::with_capacity(self.vertices.len() + 2);
        for (p, q) in self.edges() {
            let dp = side * line.signed_distance(p);
            let dq = side * line.signed_distance(q);
            if dp >= 0.0 {
                out.push(p);
            }
            if (dp > 0.0 && dq < 0.0) || (dp < 0.0 && dq > 0.0) {
                let s = dp / (dp - dq);
                out.push(p.add(q.sub(p).scale(s)));
            }
        }
        if out.len() < 3 {
            return (0.0, 0.0, 0.0);
        }
        Polygon { vertices: out }.moments()
    }
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    b.sub(a).cross(c.sub(a))
}

/// First pair of non-adjacent edges that properly cross.
fn first_crossing(v: &[Point2]) -> Option<(usize, usize)> {
    let n = v.len();
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (c, d) = (v[j], v[(j + 1) % n]);
            let o1 = orient(a, b, c);
            let o2 = orient(a, b, d);
            let o3 = orient(c, d, a);
            let o4 = orient(c, d, b);
            if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Point2,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point2, radius: f64) -> Result<Self> {
        if !center.is_finite() || !(radius > 0.0 && radius.is_finite()) {
            return Err(GeometryError::InvalidInput(format!(
                "disk at {center} with radius {radius}"
            )));
        }
        Ok(Self { center, radius })
    }
}

/// Circular sector `{center + ρ(cos θ, sin θ) : ρ ≤ radius, θ ∈ [start, start + span]}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    pub center: Point2,
    pub radius: f64,
    pub start: f64,
    pub span: f64,
}

impl Sector {
    pub fn new(center: Point2, radius: f64, start: f64, span: f64) -> Result<Self> {
        if !center.is_finite()
            || !(radius > 0.0 && radius.is_finite())
            || !start.is_finite()
            || !(span > 0.0 && span <= TAU)
        {
            return Err(GeometryError::InvalidInput(format!(
                "sector at {center}, radius {radius}, start {start}, span {span}"
            )));
        }
        Ok(Self {
            center,
            radius,
            start,
            span,
        })
    }

    /// Half-disk on the `+x` side of its center: the meridian section of a sphere.
    pub fn half_disk(center: Point2, radius: f64) -> Result<Self> {
        Self::new(center, radius, -0.5 * PI, PI)
    }

    pub fn area(&self) -> f64 {
        0.5 * self.radius * self.radius * self.span
    }

    pub fn centroid(&self) -> Point2 {
        let half = 0.5 * self.span;
        let dist = 4.0 * self.radius * half.sin() / (3.0 * self.span);
        let mid = self.start + half;
        self.center
            .add(Point2::new(mid.cos(), mid.sin()).scale(dist))
    }

    fn contains(&self, p: Point2) -> bool {
        let v = p.sub(self.center);
        if v.norm() > self.radius {
            return false;
        }
        if self.span >= TAU || v.norm() == 0.0 {
            return true;
        }
        let ang = (v.y.atan2(v.x) - self.start).rem_euclid(TAU);
        ang <= self.span
    }

    /// `∫ max(side·d, 0) dA` by polar quadrature in angle with an exact
    /// radial integral.
    fn positive_moment(&self, line: &Line2, side: f64, slabs: usize) -> f64 {
        let dc = side * line.signed_distance(self.center);
        let nrm = line.normal().scale(side);
        let phi = nrm.y.atan2(nrm.x);
        let r = self.radius;
        let h = self.span / slabs as f64;
        let radial = |k: f64| -> f64 {
            // ∫_0^r max(dc + k ρ, 0) ρ dρ
            let prim = |rho: f64| dc * rho * rho / 2.0 + k * rho * rho * rho / 3.0;
            if k == 0.0 {
                return if dc > 0.0 { prim(r) } else { 0.0 };
            }
            let root = -dc / k;
            if k > 0.0 {
                let lo = root.clamp(0.0, r);
                prim(r) - prim(lo)
            } else {
                let hi = root.clamp(0.0, r);
                prim(hi)
            }
        };
        (0..slabs)
            .map(|i| {
                let th = self.start + (i as f64 + 0.5) * h;
                radial((th - phi).cos()) * h
            })
            .sum()
    }
}

/// A planar figure carrying exact or quadrature-computable measure.
#[derive(Debug, Clone)]
pub enum PlanarRegion {
    Polygon(Polygon),
    Disk(Disk),
    Sector(Sector),
    Slab(SlabRegion),
}

impl From<Polygon> for PlanarRegion {
    fn from(p: Polygon) -> Self {
        PlanarRegion::Polygon(p)
    }
}

impl From<Disk> for PlanarRegion {
    fn from(d: Disk) -> Self {
        PlanarRegion::Disk(d)
    }
}

impl From<Sector> for PlanarRegion {
    fn from(s: Sector) -> Self {
        PlanarRegion::Sector(s)
    }
}

impl From<SlabRegion> for PlanarRegion {
    fn from(s: SlabRegion) -> Self {
        PlanarRegion::Slab(s)
    }
}

impl PlanarRegion {
    pub fn polygon(vertices: Vec<Point2>) -> Result<Self> {
        Polygon::new(vertices).map(Into::into)
    }

    pub fn disk(center: Point2, radius: f64) -> Result<Self> {
        Disk::new(center, radius).map(Into::into)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PlanarRegion::Polygon(_) => "polygon",
            PlanarRegion::Disk(_) => "disk",
            PlanarRegion::Sector(_) => "sector",
            PlanarRegion::Slab(_) => "slab region",
        }
    }

    /// `(A, ∫x dA, ∫y dA)`, exact where a closed form exists.
    fn moments(&self) -> (f64, f64, f64) {
        match self {
            PlanarRegion::Polygon(p) => p.moments(),
            PlanarRegion::Disk(d) => {
                let a = PI * d.radius * d.radius;
                (a, a * d.center.x, a * d.center.y)
            }
            PlanarRegion::Sector(s) => {
                let a = s.area();
                let c = s.centroid();
                (a, a * c.x, a * c.y)
            }
            PlanarRegion::Slab(s) => s.moments(),
        }
    }

    /// Area by quadrature for slab regions, exact otherwise.
    pub fn area_approx(&self) -> f64 {
        self.moments().0
    }

    pub fn contains(&self, p: Point2) -> bool {
        match self {
            PlanarRegion::Polygon(poly) => poly.contains(p),
            PlanarRegion::Disk(d) => p.distance(d.center) <= d.radius,
            PlanarRegion::Sector(s) => s.contains(p),
            PlanarRegion::Slab(s) => {
                if p.y < s.width.start() || p.y > s.width.end() {
                    return false;
                }
                let (l, r) = s.slice(p.y);
                p.x >= l && p.x <= r
            }
        }
    }

    /// Axis-aligned bounding box `(min, max)`. For slab regions the slice
    /// extents are sampled at the quadrature midpoints, breakpoints and ends.
    pub fn bbox(&self) -> (Point2, Point2) {
        match self {
            PlanarRegion::Polygon(p) => {
                let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
                let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
                for v in p.vertices() {
                    lo = Point2::new(lo.x.min(v.x), lo.y.min(v.y));
                    hi = Point2::new(hi.x.max(v.x), hi.y.max(v.y));
                }
                (lo, hi)
            }
            PlanarRegion::Disk(d) => {
                let r = Point2::new(d.radius, d.radius);
                (d.center.sub(r), d.center.add(r))
            }
            PlanarRegion::Sector(s) => {
                let mut pts = vec![s.center];
                let mut angles = vec![s.start, s.start + s.span];
                for k in 0..8 {
                    let q = k as f64 * 0.5 * PI;
                    let rel = (q - s.start).rem_euclid(TAU);
                    if rel <= s.span {
                        angles.push(q);
                    }
                }
                pts.extend(
                    angles
                        .iter()
                        .map(|a| s.center.add(Point2::new(a.cos(), a.sin()).scale(s.radius))),
                );
                let lo = pts.iter().fold(Point2::new(f64::INFINITY, f64::INFINITY), |m, p| {
                    Point2::new(m.x.min(p.x), m.y.min(p.y))
                });
                let hi = pts
                    .iter()
                    .fold(Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY), |m, p| {
                        Point2::new(m.x.max(p.x), m.y.max(p.y))
                    });
                (lo, hi)
            }
            PlanarRegion::Slab(s) => {
                let (a, b) = (s.width.start(), s.width.end());
                let mut ts: Vec<f64> = s.midpoints().map(|(t, _)| t).collect();
                ts.extend_from_slice(s.width.breakpoints());
                ts.push(a);
                ts.push(b);
                let (mut l, mut r) = (f64::INFINITY, f64::NEG_INFINITY);
                for t in ts {
                    let (sl, sr) = s.slice(t);
                    l = l.min(sl);
                    r = r.max(sr);
                }
                (Point2::new(l, a), Point2::new(r, b))
            }
        }
    }

    /// Boundary as a closed curve. Slab regions are traced by a polyline
    /// through the slice ends at `resolution` heights per side.
    pub fn boundary(&self) -> Curve {
        match self {
            PlanarRegion::Polygon(p) => Curve {
                pieces: p.edges().map(|(a, b)| CurvePiece::Segment(a, b)).collect(),
                closed: true,
            },
            PlanarRegion::Disk(d) => Curve {
                pieces: vec![CurvePiece::Arc {
                    center: d.center,
                    radius: d.radius,
                    start: 0.0,
                    span: TAU,
                }],
                closed: true,
            },
            PlanarRegion::Sector(s) => {
                let at = |a: f64| s.center.add(Point2::new(a.cos(), a.sin()).scale(s.radius));
                let arc = CurvePiece::Arc {
                    center: s.center,
                    radius: s.radius,
                    start: s.start,
                    span: s.span,
                };
                let pieces = if s.span >= TAU {
                    vec![arc]
                } else {
                    vec![
                        CurvePiece::Segment(s.center, at(s.start)),
                        arc,
                        CurvePiece::Segment(at(s.start + s.span), s.center),
                    ]
                };
                Curve {
                    pieces,
                    closed: true,
                }
            }
            PlanarRegion::Slab(s) => {
                let (a, b) = (s.width.start(), s.width.end());
                let n = s.resolution;
                let ts: Vec<f64> = (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
                let mut pts: Vec<Point2> = ts
                    .iter()
                    .map(|&t| Point2::new(s.slice(t).1, t))
                    .collect();
                pts.extend(ts.iter().rev().map(|&t| Point2::new(s.slice(t).0, t)));
                pts.dedup();
                Curve::polyline(pts, true).unwrap_or_else(|_| Curve {
                    pieces: Vec::new(),
                    closed: true,
                })
            }
        }
    }

    /// Smallest `x` attained by the region.
    pub fn min_x(&self) -> f64 {
        self.bbox().0.x
    }

    /// Apply a rigid motion: rotation by `angle` about the origin, then a
    /// translation. Slab regions only admit translations.
    pub fn rigid_motion(&self, angle: f64, shift: Point2) -> Result<Self> {
        let m = |p: Point2| p.rotate(angle).add(shift);
        Ok(match self {
            PlanarRegion::Polygon(p) => {
                PlanarRegion::Polygon(Polygon::new(p.vertices().iter().map(|&v| m(v)).collect())?)
            }
            PlanarRegion::Disk(d) => PlanarRegion::Disk(Disk::new(m(d.center), d.radius)?),
            PlanarRegion::Sector(s) => {
                PlanarRegion::Sector(Sector::new(m(s.center), s.radius, s.start + angle, s.span)?)
            }
            PlanarRegion::Slab(s) => {
                if angle != 0.0 {
                    return Err(GeometryError::UnsupportedRegion("rotating a slab region"));
                }
                let width = s.width.clone();
                let (a, b) = (width.start(), width.end());
                let bps: Vec<f64> = width.breakpoints().iter().map(|t| t + shift.y).collect();
                let trends = (0..bps.len() + 1).map(|i| width.trend_at(i)).collect();
                let dy = shift.y;
                let moved = PiecewiseMonotone::new(a + dy, b + dy, bps, trends, move |t| {
                    width.eval(t - dy)
                })?;
                let anchor = match s.anchor {
                    SlabAnchor::Centered(c) => SlabAnchor::Centered(c + shift.x),
                    SlabAnchor::Left(x0) => SlabAnchor::Left(x0 + shift.x),
                };
                PlanarRegion::Slab(SlabRegion::new(moved, anchor).with_resolution(s.resolution))
            }
        })
    }

    /// `(∫ max(d, 0) dA, ∫ max(-d, 0) dA)` for the signed distance `d` to
    /// `line`: the moments of the parts on either side.
    pub fn split_first_moment(&self, line: &Line2) -> Result<(f64, f64)> {
        if self.area_approx() <= 0.0 {
            return Err(GeometryError::DegenerateRegion);
        }
        let n = line.normal();
        let q = line.point();
        Ok(match self {
            PlanarRegion::Polygon(p) => {
                let side = |s: f64| {
                    let (a, mx, my) = p.clip_moments(line, s);
                    s * (n.x * mx + n.y * my - n.dot(q) * a)
                };
                (side(1.0).max(0.0), side(-1.0).max(0.0))
            }
            PlanarRegion::Disk(d) => {
                let c = line.signed_distance(d.center);
                (
                    disk_positive_moment(d.radius, c),
                    disk_positive_moment(d.radius, -c),
                )
            }
            PlanarRegion::Sector(s) => (
                s.positive_moment(line, 1.0, DEFAULT_QUADRATURE_SLABS),
                s.positive_moment(line, -1.0, DEFAULT_QUADRATURE_SLABS),
            ),
            PlanarRegion::Slab(s) => {
                let (mut pos, mut neg) = (0.0, 0.0);
                for (t, h) in s.midpoints() {
                    let (l, r) = s.slice(t);
                    let d0 = line.signed_distance(Point2::new(l, t));
                    let d1 = line.signed_distance(Point2::new(r, t));
                    pos += h * positive_part_integral(d0, d1, r - l);
                    neg += h * positive_part_integral(-d0, -d1, r - l);
                }
                (pos, neg)
            }
        })
    }
}

/// `∫ max(c + u, 0) dA` over a disk of radius `r` whose center sits at
/// signed distance `c`.
fn disk_positive_moment(r: f64, c: f64) -> f64 {
    let s = (-c).clamp(-r, r);
    let root = (r * r - s * s).max(0.0).sqrt();
    let cap = 2.0 / 3.0 * root * root * root;
    let segment = r * r * (0.5 * PI - (s / r).asin()) - s * root;
    cap + c * segment
}

/// `∫_0^len max(linear, 0)` for a linear function with end values `d0`, `d1`.
fn positive_part_integral(d0: f64, d1: f64, len: f64) -> f64 {
    if d0 >= 0.0 && d1 >= 0.0 {
        0.5 * (d0 + d1) * len
    } else if d0 <= 0.0 && d1 <= 0.0 {
        0.0
    } else {
        let (hi, lo) = if d0 > d1 { (d0, d1) } else { (d1, d0) };
        len * hi * hi / (2.0 * (hi - lo))
    }
}

/// Exact area of a polygon, disk or sector.
pub fn area(region: &PlanarRegion) -> Result<f64> {
    match region {
        PlanarRegion::Slab(_) => Err(GeometryError::UnsupportedExact("slab regions")),
        other => Ok(other.moments().0.abs()),
    }
}

pub fn perimeter(curve: &Curve) -> f64 {
    curve.length()
}

pub fn centroid_region(region: &PlanarRegion) -> Result<Point2> {
    let (a, mx, my) = region.moments();
    if !(a > 0.0) {
        return Err(GeometryError::DegenerateRegion);
    }
    Ok(Point2::new(mx / a, my / a))
}

pub fn centroid_curve(curve: &Curve) -> Result<Point2> {
    let (l, mx, my) = curve.moments();
    if !(l > 0.0) {
        return Err(GeometryError::DegenerateCurve);
    }
    Ok(Point2::new(mx / l, my / l))
}

/// `∫ d(p) dA` for the signed distance `d` to `line`.
pub fn first_moment(region: &PlanarRegion, line: &Line2) -> Result<f64> {
    let (a, mx, my) = region.moments();
    if !(a > 0.0) {
        return Err(GeometryError::DegenerateRegion);
    }
    let n = line.normal();
    Ok(n.x * mx + n.y * my - n.dot(line.point()) * a)
}

/// `∫ d(p) ds` along the curve.
pub fn first_moment_curve(curve: &Curve, line: &Line2) -> Result<f64> {
    let (l, mx, my) = curve.moments();
    if !(l > 0.0) {
        return Err(GeometryError::DegenerateCurve);
    }
    let n = line.normal();
    Ok(n.x * mx + n.y * my - n.dot(line.point()) * l)
}

/// One piece of a [`Curve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvePiece {
    Segment(Point2, Point2),
    Arc {
        center: Point2,
        radius: f64,
        start: f64,
        span: f64,
    },
}

impl CurvePiece {
    pub fn length(&self) -> f64 {
        match *self {
            CurvePiece::Segment(a, b) => a.distance(b),
            CurvePiece::Arc { radius, span, .. } => radius * span,
        }
    }

    /// `(L, ∫x ds, ∫y ds)`.
    fn moments(&self) -> (f64, f64, f64) {
        match *self {
            CurvePiece::Segment(a, b) => {
                let l = a.distance(b);
                (l, 0.5 * (a.x + b.x) * l, 0.5 * (a.y + b.y) * l)
            }
            CurvePiece::Arc {
                center,
                radius,
                start,
                span,
            } => {
                let end = start + span;
                let l = radius * span;
                (
                    l,
                    radius * (center.x * span + radius * (end.sin() - start.sin())),
                    radius * (center.y * span + radius * (start.cos() - end.cos())),
                )
            }
        }
    }

    /// Point at parameter `s ∈ [0, 1]` (proportional to arclength).
    pub fn point_at(&self, s: f64) -> Point2 {
        match *self {
            CurvePiece::Segment(a, b) => a.add(b.sub(a).scale(s)),
            CurvePiece::Arc {
                center,
                radius,
                start,
                span,
            } => {
                let th = start + s * span;
                center.add(Point2::new(th.cos(), th.sin()).scale(radius))
            }
        }
    }

    /// `∫ max(d, 0) ds`.
    fn positive_moment(&self, line: &Line2) -> f64 {
        match *self {
            CurvePiece::Segment(a, b) => positive_part_integral(
                line.signed_distance(a),
                line.signed_distance(b),
                a.distance(b),
            ),
            CurvePiece::Arc {
                center,
                radius,
                start,
                span,
            } => {
                // d(θ) = dc + R cos(θ - φ)
                let dc = line.signed_distance(center);
                let n = line.normal();
                let phi = n.y.atan2(n.x);
                let prim = |th: f64| radius * (dc * th + radius * (th - phi).sin());
                let mut cuts = vec![start, start + span];
                if dc.abs() < radius {
                    let alpha = (-dc / radius).acos();
                    for root in [phi + alpha, phi - alpha] {
                        let rel = (root - start).rem_euclid(TAU);
                        if rel > 0.0 && rel < span {
                            cuts.push(start + rel);
                        }
                    }
                }
                cuts.sort_by(f64::total_cmp);
                cuts.windows(2)
                    .map(|w| {
                        let mid = 0.5 * (w[0] + w[1]);
                        if dc + radius * (mid - phi).cos() > 0.0 {
                            prim(w[1]) - prim(w[0])
                        } else {
                            0.0
                        }
                    })
                    .sum::<f64>()
                    .max(0.0)
            }
        }
    }
}

/// A path of segments and circular arcs, optionally closed.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pieces: Vec<CurvePiece>,
    closed: bool,
}

impl Curve {
    /// Polyline through `points`; when `closed` the last point joins the first.
    pub fn polyline(points: Vec<Point2>, closed: bool) -> Result<Self> {
        if points.len() < 2 {
            return Err(GeometryError::InvalidInput(
                "polyline needs at least 2 points".into(),
            ));
        }
        if let Some(p) = points.iter().find(|p| !p.is_finite()) {
            return Err(GeometryError::InvalidInput(format!("non-finite point {p}")));
        }
        let mut pieces: Vec<CurvePiece> = points
            .windows(2)
            .map(|w| CurvePiece::Segment(w[0], w[1]))
            .collect();
        if closed && points.len() > 2 {
            pieces.push(CurvePiece::Segment(points[points.len() - 1], points[0]));
        }
        Ok(Self { pieces, closed })
    }

    pub fn segment(a: Point2, b: Point2) -> Result<Self> {
        Self::polyline(vec![a, b], false)
    }

    /// Arc of the circle about `center` from angle `start` through `span`
    /// radians; `span = 2π` gives a closed circle.
    pub fn arc(center: Point2, radius: f64, start: f64, span: f64) -> Result<Self> {
        if !center.is_finite()
            || !(radius > 0.0 && radius.is_finite())
            || !start.is_finite()
            || !(span > 0.0 && span <= TAU)
        {
            return Err(GeometryError::InvalidInput(format!(
                "arc about {center}, radius {radius}, start {start}, span {span}"
            )));
        }
        Ok(Self {
            pieces: vec![CurvePiece::Arc {
                center,
                radius,
                start,
                span,
            }],
            closed: span >= TAU,
        })
    }

    pub fn circle(center: Point2, radius: f64) -> Result<Self> {
        Self::arc(center, radius, 0.0, TAU)
    }

    pub fn pieces(&self) -> &[CurvePiece] {
        &self.pieces
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn length(&self) -> f64 {
        self.pieces.iter().map(CurvePiece::length).sum()
    }

    fn moments(&self) -> (f64, f64, f64) {
        self.pieces.iter().fold((0.0, 0.0, 0.0), |acc, p| {
            let (l, x, y) = p.moments();
            (acc.0 + l, acc.1 + x, acc.2 + y)
        })
    }

    /// `(∫ max(d, 0) ds, ∫ max(-d, 0) ds)`.
    pub fn split_first_moment(&self, line: &Line2) -> Result<(f64, f64)> {
        if !(self.length() > 0.0) {
            return Err(GeometryError::DegenerateCurve);
        }
        let flipped = Line2::new(line.point(), line.direction().scale(-1.0))?;
        Ok(self.pieces.iter().fold((0.0, 0.0), |acc, p| {
            (acc.0 + p.positive_moment(line), acc.1 + p.positive_moment(&flipped))
        }))
    }

    /// Smallest `x` over the curve.
    pub fn min_x(&self) -> f64 {
        self.pieces
            .iter()
            .map(|p| match *p {
                CurvePiece::Segment(a, b) => a.x.min(b.x),
                CurvePiece::Arc {
                    center,
                    radius,
                    start,
                    span,
                } => {
                    let ends = p.point_at(0.0).x.min(p.point_at(1.0).x);
                    if (PI - start).rem_euclid(TAU) <= span {
                        center.x - radius
                    } else {
                        ends
                    }
                }
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// A region in the meridian half-plane of a solid of revolution; `x` is the
/// distance `rho` to the axis and `y` the axial coordinate.
#[derive(Debug, Clone)]
pub struct Profile {
    region: PlanarRegion,
}

/// Allowed rounding below the axis before a profile counts as crossing it.
pub const AXIS_TOLERANCE: f64 = 1e-12;

impl Profile {
    pub fn new(region: PlanarRegion) -> Result<Self> {
        let rho = region.min_x();
        if rho < -AXIS_TOLERANCE {
            return Err(GeometryError::AxisCrossing { rho });
        }
        Ok(Self { region })
    }

    pub fn region(&self) -> &PlanarRegion {
        &self.region
    }

    pub fn boundary(&self) -> Curve {
        self.region.boundary()
    }

    /// Area-centroid distance to the axis.
    pub fn centroid_rho(&self) -> Result<f64> {
        centroid_region(&self.region).map(|c| c.x)
    }
}
