//! Solids with closed-form measures, the hat-box theorem, oblique cuts of
//! vertical cylinders and the two Pappus-Guldin theorems.
//!
//! Conventions: cone and cylinder bases lie in the plane `z = 0` and extend
//! upward. Profiles of solids of revolution use `x` as the distance to the
//! axis, so the axis in the profile plane is [`Line2::vertical(0.0)`].

use std::f64::consts::{PI, TAU};

use crate::error::{GeometryError, Result};
use crate::geometry::{
    self, centroid_region, Curve, CurvePiece, Disk, Line2, PlanarRegion, Point2, Profile,
    AXIS_TOLERANCE,
};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn xy(&self) -> Point2 {
        Point2::new(self.x, self.y)
    }
}

/// Which side of the cut line an [`Solid::ObliqueCut`] keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    /// Positive signed distance: the part between the base and the cutting
    /// plane above it.
    Above,
    /// Negative signed distance: the part below the base, down to the plane.
    Below,
}

#[derive(Debug, Clone)]
pub enum Solid {
    /// Cone (or pyramid) over a base in `z = 0` with the given apex.
    Cone { base: PlanarRegion, apex: Point3 },
    /// Right cylinder over a base in `z = 0`.
    Cylinder { base: PlanarRegion, height: f64 },
    Sphere { radius: f64 },
    /// Portion of a right circular cylinder cut off by a plane through a
    /// diameter of its base, rising to `height` over the far edge.
    Hoof { radius: f64, height: f64 },
    /// Two mirrored hoofs over a half-ellipse with semi-axis `semi_axis`
    /// along the cutting line and `half_width` across it; the cutting planes
    /// are `|z| = slope · y`. With `semi_axis = half_width = r` and
    /// `slope = π` this is the unfolded sphere.
    DoubleHoof {
        semi_axis: f64,
        half_width: f64,
        slope: f64,
    },
    /// Polyhedron whose faces all touch an insphere of radius `inradius`.
    TangentPolyhedron { face_areas: Vec<f64>, inradius: f64 },
    SolidOfRevolution { profile: Profile },
    /// Right cylinder over `base` whose fibre over `p` has length
    /// `rho_coef · p.x + offset`.
    HeightFieldCylinder {
        base: PlanarRegion,
        rho_coef: f64,
        offset: f64,
    },
    /// Column whose horizontal section at height `z` is `base` rotated by
    /// `twist_rate · z` about the `z` axis.
    TwistedColumn {
        base: PlanarRegion,
        height: f64,
        twist_rate: f64,
    },
    /// Part of the infinite vertical cylinder over `base` between `z = 0`
    /// and the plane `z = slope · d(p)` on one side of `line`.
    ObliqueCut {
        base: PlanarRegion,
        line: Line2,
        slope: f64,
        side: CutSide,
    },
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(GeometryError::InvalidInput(format!("{name} must be positive, got {v}")))
    }
}

impl Solid {
    pub fn sphere(radius: f64) -> Result<Self> {
        Ok(Solid::Sphere {
            radius: positive("radius", radius)?,
        })
    }

    pub fn cylinder(base: PlanarRegion, height: f64) -> Result<Self> {
        Ok(Solid::Cylinder {
            base,
            height: positive("height", height)?,
        })
    }

    /// Right circular cylinder of radius `r` and height `h` on the origin.
    pub fn circular_cylinder(r: f64, h: f64) -> Result<Self> {
        Self::cylinder(Disk::new(Point2::default(), r)?.into(), h)
    }

    /// Cylinder circumscribed about the sphere of radius `r`.
    pub fn circumscribed_cylinder(r: f64) -> Result<Self> {
        Self::circular_cylinder(r, 2.0 * r)
    }

    pub fn cone(base: PlanarRegion, apex: Point3) -> Result<Self> {
        if !apex.is_finite() || apex.z == 0.0 {
            return Err(GeometryError::InvalidInput(format!(
                "cone apex ({}, {}, {}) must lie off the base plane",
                apex.x, apex.y, apex.z
            )));
        }
        Ok(Solid::Cone { base, apex })
    }

    pub fn hoof(radius: f64, height: f64) -> Result<Self> {
        Ok(Solid::Hoof {
            radius: positive("radius", radius)?,
            height: positive("height", height)?,
        })
    }

    pub fn double_hoof(semi_axis: f64, half_width: f64, slope: f64) -> Result<Self> {
        Ok(Solid::DoubleHoof {
            semi_axis: positive("semi-axis", semi_axis)?,
            half_width: positive("half-width", half_width)?,
            slope: positive("slope", slope)?,
        })
    }

    /// Faces are given by their areas; tangency to the insphere is the
    /// caller's assertion.
    pub fn tangent_polyhedron(face_areas: Vec<f64>, inradius: f64) -> Result<Self> {
        if face_areas.is_empty() {
            return Err(GeometryError::InvalidInput("polyhedron needs faces".into()));
        }
        for &a in &face_areas {
            positive("face area", a)?;
        }
        Ok(Solid::TangentPolyhedron {
            face_areas,
            inradius: positive("inradius", inradius)?,
        })
    }

    pub fn revolution(profile: Profile) -> Self {
        Solid::SolidOfRevolution { profile }
    }

    pub fn twisted_column(base: PlanarRegion, height: f64, twist_rate: f64) -> Result<Self> {
        if !twist_rate.is_finite() {
            return Err(GeometryError::InvalidInput("twist rate must be finite".into()));
        }
        Ok(Solid::TwistedColumn {
            base,
            height: positive("height", height)?,
            twist_rate,
        })
    }

    pub fn oblique_cut(base: PlanarRegion, line: Line2, slope: f64, side: CutSide) -> Result<Self> {
        Ok(Solid::ObliqueCut {
            base,
            line,
            slope: positive("slope", slope)?,
            side,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Solid::Cone { .. } => "cone",
            Solid::Cylinder { .. } => "cylinder",
            Solid::Sphere { .. } => "sphere",
            Solid::Hoof { .. } => "hoof",
            Solid::DoubleHoof { .. } => "double hoof",
            Solid::TangentPolyhedron { .. } => "tangent polyhedron",
            Solid::SolidOfRevolution { .. } => "solid of revolution",
            Solid::HeightFieldCylinder { .. } => "height-field cylinder",
            Solid::TwistedColumn { .. } => "twisted column",
            Solid::ObliqueCut { .. } => "oblique cut",
        }
    }

    /// Point membership, used by the Monte Carlo oracles.
    pub fn contains(&self, p: Point3) -> bool {
        match self {
            Solid::Cone { base, apex } => {
                let s = p.z / apex.z;
                if !(0.0..=1.0).contains(&s) || s == 1.0 {
                    return s == 1.0 && p.x == apex.x && p.y == apex.y;
                }
                // Project back onto the base from the apex.
                let k = 1.0 / (1.0 - s);
                let q = Point2::new(apex.x + (p.x - apex.x) * k, apex.y + (p.y - apex.y) * k);
                base.contains(q)
            }
            Solid::Cylinder { base, height } => {
                p.z >= 0.0 && p.z <= *height && base.contains(p.xy())
            }
            Solid::Sphere { radius } => p.x * p.x + p.y * p.y + p.z * p.z <= radius * radius,
            Solid::Hoof { radius, height } => {
                p.y >= 0.0
                    && p.x * p.x + p.y * p.y <= radius * radius
                    && p.z >= 0.0
                    && p.z <= height / radius * p.y
            }
            Solid::DoubleHoof {
                semi_axis,
                half_width,
                slope,
            } => {
                let (u, v) = (p.x / semi_axis, p.y / half_width);
                p.y >= 0.0 && u * u + v * v <= 1.0 && p.z.abs() <= slope * p.y
            }
            Solid::TangentPolyhedron { .. } => false,
            Solid::SolidOfRevolution { profile } => {
                let rho = p.x.hypot(p.y);
                profile.region().contains(Point2::new(rho, p.z))
            }
            Solid::HeightFieldCylinder {
                base,
                rho_coef,
                offset,
            } => {
                let b = p.xy();
                p.z >= 0.0 && p.z <= rho_coef * b.x + offset && base.contains(b)
            }
            Solid::TwistedColumn {
                base,
                height,
                twist_rate,
            } => {
                p.z >= 0.0
                    && p.z <= *height
                    && base.contains(p.xy().rotate(-twist_rate * p.z))
            }
            Solid::ObliqueCut {
                base,
                line,
                slope,
                side,
            } => {
                let d = line.signed_distance(p.xy());
                let ok = match side {
                    CutSide::Above => d >= 0.0 && p.z >= 0.0 && p.z <= slope * d,
                    CutSide::Below => d <= 0.0 && p.z <= 0.0 && p.z >= slope * d,
                };
                ok && base.contains(p.xy())
            }
        }
    }
}

/// `∫ y ds` over the upper half of the ellipse with semi-axes `a` (along
/// `x`) and `b` (along `y`).
fn half_ellipse_y_moment(a: f64, b: f64) -> f64 {
    if a >= b {
        let e = (1.0 - (b / a) * (b / a)).sqrt();
        let tail = if e < 1e-8 { 1.0 + e * e / 6.0 } else { e.asin() / e };
        a * b * ((1.0 - e * e).sqrt() + tail)
    } else {
        // Swap roles: ∫ √(a² - (a² - b²) w²) dw with a² - b² < 0.
        let k = ((b / a) * (b / a) - 1.0).sqrt();
        a * b * ((1.0 + k * k).sqrt() + k.asinh() / k)
    }
}

fn nonzero(v: f64) -> Result<f64> {
    if v > 0.0 {
        Ok(v)
    } else {
        Err(GeometryError::DegenerateSolid)
    }
}

/// `∫ h dA` for the affine height `h(p) = coef · p.x + offset`. Polygons are
/// integrated triangle by triangle over a fan from the first vertex.
pub fn height_field_integral(base: &PlanarRegion, coef: f64, offset: f64) -> Result<f64> {
    let h = |p: Point2| coef * p.x + offset;
    match base {
        PlanarRegion::Polygon(poly) => {
            let v = poly.vertices();
            let total = (1..v.len() - 1)
                .map(|i| {
                    let area = 0.5 * v[i].sub(v[0]).cross(v[i + 1].sub(v[0]));
                    let c = v[0].add(v[i]).add(v[i + 1]).scale(1.0 / 3.0);
                    area * h(c)
                })
                .sum::<f64>();
            Ok(total)
        }
        other => {
            let a = other.area_approx();
            let c = centroid_region(other)?;
            Ok(a * h(c))
        }
    }
}

pub fn volume(solid: &Solid) -> Result<f64> {
    let v = match solid {
        Solid::Cone { base, apex } => base.area_approx() * apex.z.abs() / 3.0,
        Solid::Cylinder { base, height } => base.area_approx() * height,
        Solid::Sphere { radius } => 4.0 * PI * radius.powi(3) / 3.0,
        Solid::Hoof { radius, height } => 2.0 / 3.0 * radius * radius * height,
        Solid::DoubleHoof {
            semi_axis,
            half_width,
            slope,
        } => 4.0 / 3.0 * slope * semi_axis * half_width * half_width,
        Solid::TangentPolyhedron {
            face_areas,
            inradius,
        } => face_areas.iter().sum::<f64>() * inradius / 3.0,
        Solid::SolidOfRevolution { profile } => guldin_volume(profile)?,
        Solid::HeightFieldCylinder {
            base,
            rho_coef,
            offset,
        } => height_field_integral(base, *rho_coef, *offset)?,
        // Congruent sections at every height.
        Solid::TwistedColumn { base, height, .. } => base.area_approx() * height,
        Solid::ObliqueCut {
            base,
            line,
            slope,
            side,
        } => {
            let (above, below) = oblique_cut_volumes(base, line, *slope)?;
            match side {
                CutSide::Above => above,
                CutSide::Below => below,
            }
        }
    };
    nonzero(v)
}

/// Curved or ruled side surface, excluding flat bases and cut faces.
pub fn lateral_area(solid: &Solid) -> Result<f64> {
    let v = match solid {
        Solid::Cone { base, apex } => match base {
            PlanarRegion::Polygon(poly) => {
                let v = poly.vertices();
                (0..v.len())
                    .map(|i| {
                        let (a, b) = (v[i], v[(i + 1) % v.len()]);
                        triangle_area_3d(
                            Point3::new(a.x, a.y, 0.0),
                            Point3::new(b.x, b.y, 0.0),
                            *apex,
                        )
                    })
                    .sum()
            }
            PlanarRegion::Disk(d) if d.center == apex.xy() => {
                PI * d.radius * d.radius.hypot(apex.z)
            }
            _ => {
                return Err(GeometryError::UnsupportedRegion(
                    "lateral area of an oblique or non-polygonal cone",
                ))
            }
        },
        Solid::Cylinder { base, height } => base.boundary().length() * height,
        Solid::Sphere { radius } => 4.0 * PI * radius * radius,
        Solid::Hoof { radius, height } => 2.0 * radius * height,
        Solid::DoubleHoof {
            semi_axis,
            half_width,
            slope,
        } => 2.0 * slope * half_ellipse_y_moment(*semi_axis, *half_width),
        Solid::TangentPolyhedron { face_areas, .. } => face_areas.iter().sum(),
        Solid::SolidOfRevolution { profile } => {
            guldin_surface(&profile.boundary(), &Line2::vertical(0.0))?
        }
        Solid::HeightFieldCylinder {
            base,
            rho_coef,
            offset,
        } => {
            let b = base.boundary();
            let l = b.length();
            if !(l > 0.0) {
                return Err(GeometryError::DegenerateSolid);
            }
            let rho_bar = geometry::centroid_curve(&b)?.x;
            l * (rho_coef * rho_bar + offset)
        }
        Solid::TwistedColumn { base, height, .. } => match base {
            PlanarRegion::Disk(d) if d.center == Point2::default() => TAU * d.radius * height,
            _ => {
                return Err(GeometryError::UnsupportedRegion(
                    "lateral area of a twisted non-axial column",
                ))
            }
        },
        Solid::ObliqueCut {
            base,
            line,
            slope,
            side,
        } => {
            let (above, below) = oblique_cut_lateral_areas(&base.boundary(), line, *slope)?;
            match side {
                CutSide::Above => above,
                CutSide::Below => below,
            }
        }
    };
    nonzero(v)
}

/// Total boundary area: lateral part plus flat bases and cut faces.
pub fn surface_area(solid: &Solid) -> Result<f64> {
    let lateral = lateral_area(solid)?;
    let extra = match solid {
        Solid::Cone { base, .. } => base.area_approx(),
        Solid::Cylinder { base, .. } | Solid::TwistedColumn { base, .. } => {
            2.0 * base.area_approx()
        }
        Solid::Sphere { .. } | Solid::TangentPolyhedron { .. } | Solid::SolidOfRevolution { .. } => {
            0.0
        }
        Solid::Hoof { radius, height } => {
            0.5 * PI * radius * radius + 0.5 * PI * radius * radius.hypot(*height)
        }
        Solid::DoubleHoof {
            semi_axis,
            half_width,
            slope,
        } => PI * semi_axis * half_width * (1.0 + slope * slope).sqrt(),
        Solid::HeightFieldCylinder { base, rho_coef, .. } => {
            base.area_approx() * (1.0 + (1.0 + rho_coef * rho_coef).sqrt())
        }
        Solid::ObliqueCut { .. } => {
            return Err(GeometryError::UnsupportedRegion(
                "total surface of an oblique cut",
            ))
        }
    };
    Ok(lateral + extra)
}

fn triangle_area_3d(a: Point3, b: Point3, c: Point3) -> f64 {
    let u = Point3::new(b.x - a.x, b.y - a.y, b.z - a.z);
    let v = Point3::new(c.x - a.x, c.y - a.y, c.z - a.z);
    let n = Point3::new(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    );
    0.5 * (n.x * n.x + n.y * n.y + n.z * n.z).sqrt()
}

/// Areas cut from a sphere of radius `r` and from its circumscribed
/// cylinder's side by the slab `z1 ≤ z ≤ z2`, as `(zone, band)`.
///
/// On a thin slice the zone element is `2πρ · ds` with slant factor
/// `ds/dz = r/ρ`, so its density per unit height collapses to `2π·r`; the
/// band density is the cylinder circumference `2π·r`.
pub fn sphere_zone_vs_band(r: f64, z1: f64, z2: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) || !(-r <= z1 && z1 < z2 && z2 <= r) {
        return Err(GeometryError::SlabOutOfRange { r, z1, z2 });
    }
    let zone_density = TAU * r;
    let circumference = TAU * r;
    Ok((zone_density * (z2 - z1), circumference * (z2 - z1)))
}

/// Volumes of the vertical cylinder over `base` between `z = 0` and the
/// plane `z = slope · d(p)`, on the positive and negative sides of `cut_line`.
pub fn oblique_cut_volumes(base: &PlanarRegion, cut_line: &Line2, slope: f64) -> Result<(f64, f64)> {
    positive("slope", slope)?;
    let (pos, neg) = base.split_first_moment(cut_line)?;
    Ok((slope * pos, slope * neg))
}

/// Lateral areas of the same two portions, over the boundary curve.
pub fn oblique_cut_lateral_areas(
    boundary: &Curve,
    cut_line: &Line2,
    slope: f64,
) -> Result<(f64, f64)> {
    positive("slope", slope)?;
    if !boundary.is_closed() {
        return Err(GeometryError::InvalidInput("boundary curve must be closed".into()));
    }
    let (pos, neg) = boundary.split_first_moment(cut_line)?;
    Ok((slope * pos, slope * neg))
}

/// Volume swept by the profile: section area times the circumference
/// described by its centroid.
pub fn guldin_volume(profile: &Profile) -> Result<f64> {
    let region = profile.region();
    let a = region.area_approx();
    if !(a > 0.0) {
        return Err(GeometryError::DegenerateRegion);
    }
    let rho_bar = centroid_region(region)?.x;
    if rho_bar < -AXIS_TOLERANCE {
        return Err(GeometryError::AxisCrossing { rho: rho_bar });
    }
    Ok(TAU * rho_bar * a)
}

/// Range of signed distances to `line` attained on the curve.
fn distance_range(curve: &Curve, line: &Line2) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for piece in curve.pieces() {
        let mut push = |d: f64| {
            lo = lo.min(d);
            hi = hi.max(d);
        };
        push(line.signed_distance(piece.point_at(0.0)));
        push(line.signed_distance(piece.point_at(1.0)));
        if let CurvePiece::Arc {
            center,
            radius,
            start,
            span,
        } = *piece
        {
            let n = line.normal();
            let phi = n.y.atan2(n.x);
            let dc = line.signed_distance(center);
            for (angle, d) in [(phi, dc + radius), (phi + PI, dc - radius)] {
                if (angle - start).rem_euclid(TAU) <= span {
                    push(d);
                }
            }
        }
    }
    (lo, hi)
}

/// Area swept by `boundary` about `axis`: its length times the circumference
/// described by its centroid. Open curves (sphere zones) are accepted.
pub fn guldin_surface(boundary: &Curve, axis: &Line2) -> Result<f64> {
    let l = boundary.length();
    if !(l > 0.0) {
        return Err(GeometryError::DegenerateCurve);
    }
    let (lo, hi) = distance_range(boundary, axis);
    if lo < -AXIS_TOLERANCE && hi > AXIS_TOLERANCE {
        return Err(GeometryError::AxisCrossing { rho: lo });
    }
    let moment = geometry::first_moment_curve(boundary, axis)?;
    let rho_bar = (moment / l).abs();
    Ok(TAU * rho_bar * l)
}
