//! Deterministic SVG 1.1 output. Coordinates are printed with four decimals
//! and the y axis points up (the document flips it).

use std::fmt::Write as _;

use indivisibles::exhaustion::Slab;
use indivisibles::geometry::CurvePiece;
use indivisibles::transforms::Sawtooth;
use indivisibles::{Curve, PlanarRegion, Point2};

const ARC_STEPS: usize = 64;

/// Fixed four-decimal coordinate without a negative zero.
fn c(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

/// Bounding box accumulator.
#[derive(Debug, Clone, Copy)]
struct Extent {
    min: Point2,
    max: Point2,
}

impl Extent {
    fn new() -> Self {
        Self {
            min: Point2::new(f64::INFINITY, f64::INFINITY),
            max: Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, p: Point2) {
        self.min = Point2::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = Point2::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }
}

/// An SVG document under construction.
pub struct Doc {
    body: String,
    extent: Extent,
}

impl Doc {
    pub fn new() -> Self {
        Self {
            body: String::new(),
            extent: Extent::new(),
        }
    }

    fn pts(&mut self, pts: &[Point2]) -> String {
        let mut s = String::new();
        for (i, p) in pts.iter().enumerate() {
            self.extent.add(*p);
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{},{}", c(p.x), c(-p.y));
        }
        s
    }

    pub fn polygon(&mut self, class: &str, pts: &[Point2]) {
        let p = self.pts(pts);
        let _ = writeln!(self.body, r#"  <polygon class="{class}" points="{p}"/>"#);
    }

    pub fn polyline(&mut self, class: &str, pts: &[Point2]) {
        let p = self.pts(pts);
        let _ = writeln!(self.body, r#"  <polyline class="{class}" points="{p}"/>"#);
    }

    pub fn line(&mut self, class: &str, a: Point2, b: Point2) {
        self.extent.add(a);
        self.extent.add(b);
        let _ = writeln!(
            self.body,
            r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            c(a.x),
            c(-a.y),
            c(b.x),
            c(-b.y)
        );
    }

    /// Axis-aligned rectangle with corners `min` and `max`.
    pub fn rect(&mut self, class: &str, min: Point2, max: Point2) {
        self.extent.add(min);
        self.extent.add(max);
        let _ = writeln!(
            self.body,
            r#"  <rect class="{class}" x="{}" y="{}" width="{}" height="{}"/>"#,
            c(min.x),
            c(-max.y),
            c(max.x - min.x),
            c(max.y - min.y)
        );
    }

    pub fn circle(&mut self, class: &str, center: Point2, r: f64) {
        self.extent.add(Point2::new(center.x - r, center.y - r));
        self.extent.add(Point2::new(center.x + r, center.y + r));
        let _ = writeln!(
            self.body,
            r#"  <circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            c(center.x),
            c(-center.y),
            c(r)
        );
    }

    pub fn curve(&mut self, class: &str, curve: &Curve) {
        let pts = curve_points(curve);
        if curve.is_closed() {
            self.polygon(class, &pts);
        } else {
            self.polyline(class, &pts);
        }
    }

    pub fn region(&mut self, class: &str, region: &PlanarRegion) {
        match region {
            PlanarRegion::Disk(d) => self.circle(class, d.center, d.radius),
            PlanarRegion::Polygon(p) => self.polygon(class, p.vertices()),
            other => self.curve(class, &other.boundary()),
        }
    }

    /// Finish with a 5% margin and a stroke width scaled to the drawing.
    pub fn finish(self) -> String {
        let (mut min, mut max) = (self.extent.min, self.extent.max);
        if !min.x.is_finite() {
            min = Point2::new(0.0, 0.0);
            max = Point2::new(1.0, 1.0);
        }
        let size = (max.x - min.x).max(max.y - min.y).max(1e-9);
        let pad = 0.05 * size;
        let stroke = size / 400.0;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
            c(min.x - pad),
            c(-max.y - pad),
            c(max.x - min.x + 2.0 * pad),
            c(max.y - min.y + 2.0 * pad)
        );
        let _ = writeln!(
            out,
            "  <style>* {{ fill: none; stroke: black; stroke-width: {stroke:.4}; }} \
             .inner {{ fill: #9cc3e6; }} .outer {{ stroke: #c0392b; }} \
             .tooth {{ fill: #f4d58d; }} .profile, .region {{ fill: #d5e8d4; }} \
             .centroid {{ fill: #c0392b; }} .axis {{ stroke-dasharray: {:.4}; }}</style>",
            4.0 * stroke
        );
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

/// Vertices along a curve, arcs sampled at [`ARC_STEPS`] per piece.
pub fn curve_points(curve: &Curve) -> Vec<Point2> {
    let mut pts: Vec<Point2> = Vec::new();
    for piece in curve.pieces() {
        let steps = match piece {
            CurvePiece::Segment(..) => 1,
            CurvePiece::Arc { .. } => ARC_STEPS,
        };
        for i in 0..=steps {
            let p = piece.point_at(i as f64 / steps as f64);
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
    }
    if curve.is_closed() && pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    pts
}

/// Sawtooth teeth on their baseline.
pub fn unroll(saw: &Sawtooth) -> String {
    let mut doc = Doc::new();
    for k in 0..saw.teeth {
        let x0 = k as f64 * saw.chord;
        doc.polygon(
            "tooth",
            &[
                Point2::new(x0, 0.0),
                Point2::new(x0 + saw.chord, 0.0),
                Point2::new(x0 + 0.5 * saw.chord, saw.apothem),
            ],
        );
    }
    doc.line(
        "baseline",
        Point2::new(0.0, 0.0),
        Point2::new(saw.baseline_length(), 0.0),
    );
    doc.finish()
}

/// Inner and outer rectangles of an enclosure. With `centered`, each slab is
/// drawn as a horizontal strip centred on `x = 0` (a width profile);
/// otherwise as a vertical bar over `[t0, t1]` (a section-area profile).
pub fn bounds(slabs: &[Slab], centered: bool, outline: &[Point2]) -> String {
    let mut doc = Doc::new();
    for s in slabs {
        for (class, v) in [("outer", s.outer), ("inner", s.inner)] {
            if centered {
                doc.rect(class, Point2::new(-0.5 * v, s.t0), Point2::new(0.5 * v, s.t1));
            } else {
                doc.rect(class, Point2::new(s.t0, 0.0), Point2::new(s.t1, v));
            }
        }
    }
    doc.polyline("curve", outline);
    doc.finish()
}

/// Meridian profile with the axis of revolution and both centroids.
pub fn guldin(region: &PlanarRegion, area_centroid: Point2, curve_centroid: Point2) -> String {
    let mut doc = Doc::new();
    let (lo, hi) = region.bbox();
    let marker = 0.015 * (hi.x.max(0.0) - lo.x.min(0.0)).max(hi.y - lo.y);
    let pad = 0.1 * (hi.y - lo.y);
    doc.line(
        "axis",
        Point2::new(0.0, lo.y - pad),
        Point2::new(0.0, hi.y + pad),
    );
    doc.region("profile", region);
    doc.circle("centroid", area_centroid, marker);
    doc.circle("curve-centroid", curve_centroid, marker);
    doc.finish()
}
