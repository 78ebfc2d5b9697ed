//! Measure-preserving constructions.
//!
//! Exact constructions (shear, apex motion, twisting, unfolding a solid of
//! revolution) return figures whose measure equals the input's. The two
//! discretized constructions (unrolling a disk into a sawtooth, unfolding a
//! sphere into wedges) return explicit discrete geometry whose measure
//! converges to the input's as the number of pieces grows.

use std::f64::consts::{PI, TAU};

use crate::error::{GeometryError, Result};
use crate::geometry::{area, Disk, Line2, PlanarRegion, Point2, Polygon, Profile};
use crate::solids::{self, Point3, Solid};

/// Measures a transform keeps unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Area,
    Volume,
    LateralArea,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Shear2d,
    MoveApex,
    UnrollDisk,
    TwistColumn,
    MeridianUnfold,
    UnfoldRevolution,
}

impl TransformKind {
    pub const ALL: [TransformKind; 6] = [
        TransformKind::Shear2d,
        TransformKind::MoveApex,
        TransformKind::UnrollDisk,
        TransformKind::TwistColumn,
        TransformKind::MeridianUnfold,
        TransformKind::UnfoldRevolution,
    ];

    pub fn preserves(&self) -> &'static [Quantity] {
        match self {
            TransformKind::Shear2d | TransformKind::UnrollDisk => &[Quantity::Area],
            TransformKind::MoveApex | TransformKind::TwistColumn => &[Quantity::Volume],
            TransformKind::MeridianUnfold | TransformKind::UnfoldRevolution => {
                &[Quantity::Volume, Quantity::LateralArea]
            }
        }
    }

    /// Whether the preserved measures hold exactly rather than in the limit.
    pub fn is_exact(&self) -> bool {
        !matches!(self, TransformKind::UnrollDisk | TransformKind::MeridianUnfold)
    }

    pub fn name(&self) -> &'static str {
        match self {
            TransformKind::Shear2d => "shear2d",
            TransformKind::MoveApex => "move-apex",
            TransformKind::UnrollDisk => "unroll-disk",
            TransformKind::TwistColumn => "twist-column",
            TransformKind::MeridianUnfold => "meridian-unfold",
            TransformKind::UnfoldRevolution => "unfold-revolution",
        }
    }
}

/// Input or output of a [`Transform`].
#[derive(Debug, Clone)]
pub enum Figure {
    Region(PlanarRegion),
    Profile(Profile),
    Solid(Solid),
}

/// A parameterised construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Transform {
    Shear2d { base: Line2, shift: f64 },
    MoveApex { new_apex: Point3 },
    UnrollDisk { pieces: usize },
    TwistColumn { rate: f64 },
    MeridianUnfold { wedges: usize },
    UnfoldRevolution,
}

impl Transform {
    pub fn kind(&self) -> TransformKind {
        match self {
            Transform::Shear2d { .. } => TransformKind::Shear2d,
            Transform::MoveApex { .. } => TransformKind::MoveApex,
            Transform::UnrollDisk { .. } => TransformKind::UnrollDisk,
            Transform::TwistColumn { .. } => TransformKind::TwistColumn,
            Transform::MeridianUnfold { .. } => TransformKind::MeridianUnfold,
            Transform::UnfoldRevolution => TransformKind::UnfoldRevolution,
        }
    }

    pub fn preserves(&self) -> &'static [Quantity] {
        self.kind().preserves()
    }

    pub fn apply(&self, figure: &Figure) -> Result<Figure> {
        let wrong = |want: &'static str| {
            Err(GeometryError::UnsupportedRegion(want))
        };
        match (self, figure) {
            (Transform::Shear2d { base, shift }, Figure::Region(r)) => {
                shear_region(r, base, *shift).map(Figure::Region)
            }
            (Transform::MoveApex { new_apex }, Figure::Solid(s)) => {
                move_apex(s, *new_apex).map(Figure::Solid)
            }
            (Transform::UnrollDisk { pieces }, Figure::Region(PlanarRegion::Disk(d))) => {
                unroll_disk(d, *pieces).map(Figure::Region)
            }
            (Transform::TwistColumn { rate }, Figure::Solid(s)) => {
                twist_column(s, *rate).map(Figure::Solid)
            }
            (Transform::MeridianUnfold { wedges }, Figure::Solid(s)) => {
                meridian_unfold(s, *wedges).map(|u| Figure::Solid(u.solid))
            }
            (Transform::UnfoldRevolution, Figure::Profile(p)) => {
                Ok(Figure::Solid(unfold_revolution(p)?))
            }
            (Transform::UnfoldRevolution, Figure::Solid(Solid::SolidOfRevolution { profile })) => {
                Ok(Figure::Solid(unfold_revolution(profile)?))
            }
            (Transform::Shear2d { .. }, _) => wrong("shear of a non-planar figure"),
            (Transform::UnrollDisk { .. }, _) => wrong("unrolling anything but a disk"),
            (Transform::UnfoldRevolution, _) => wrong("unfolding anything but a profile"),
            _ => wrong("moving, twisting or unfolding a planar figure"),
        }
    }
}

/// Slide every point parallel to `base` by `shift` times its signed
/// distance from `base`.
pub fn shear_region(region: &PlanarRegion, base: &Line2, shift: f64) -> Result<PlanarRegion> {
    let PlanarRegion::Polygon(poly) = region else {
        return Err(GeometryError::UnsupportedRegion("shearing a curved region"));
    };
    if !shift.is_finite() {
        return Err(GeometryError::InvalidInput("shift must be finite".into()));
    }
    let dir = base.direction();
    let moved = poly
        .vertices()
        .iter()
        .map(|&p| p.add(dir.scale(shift * base.signed_distance(p))))
        .collect();
    Polygon::new(moved).map(Into::into)
}

/// Move a cone's apex within the plane parallel to its base.
pub fn move_apex(cone: &Solid, new_apex: Point3) -> Result<Solid> {
    let Solid::Cone { base, apex } = cone else {
        return Err(GeometryError::UnsupportedRegion("moving the apex of a non-cone"));
    };
    let (old, new) = (apex.z.abs(), new_apex.z.abs());
    if (old - new).abs() > 1e-12 * old || apex.z.signum() != new_apex.z.signum() {
        return Err(GeometryError::ApexHeightChanged {
            old: apex.z,
            new: new_apex.z,
        });
    }
    Solid::cone(base.clone(), new_apex)
}

/// The unrolled pie: `n` isosceles teeth standing on a common baseline.
#[derive(Debug, Clone, PartialEq)]
pub struct Sawtooth {
    pub teeth: usize,
    /// Chord `2r·sin(π/n)` under each tooth.
    pub chord: f64,
    /// Apothem `r·cos(π/n)`, the height of each tooth.
    pub apothem: f64,
}

impl Sawtooth {
    pub fn new(disk: &Disk, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(GeometryError::InvalidInput(format!(
                "unrolling needs at least 3 slices, got {n}"
            )));
        }
        let half = PI / n as f64;
        Ok(Self {
            teeth: n,
            chord: 2.0 * disk.radius * half.sin(),
            apothem: disk.radius * half.cos(),
        })
    }

    pub fn baseline_length(&self) -> f64 {
        self.teeth as f64 * self.chord
    }

    /// Tooth `k` as a triangle with its base on `y = 0`.
    pub fn tooth(&self, k: usize) -> Result<PlanarRegion> {
        let x0 = k as f64 * self.chord;
        PlanarRegion::polygon(vec![
            Point2::new(x0, 0.0),
            Point2::new(x0 + self.chord, 0.0),
            Point2::new(x0 + 0.5 * self.chord, self.apothem),
        ])
    }

    /// Weakly simple polygon tracing the whole sawtooth: along the baseline,
    /// then back over the tooth tips.
    pub fn polygon(&self) -> Result<PlanarRegion> {
        let n = self.teeth;
        let mut pts: Vec<Point2> = (0..=n)
            .map(|k| Point2::new(k as f64 * self.chord, 0.0))
            .collect();
        for k in (0..n).rev() {
            let x0 = k as f64 * self.chord;
            pts.push(Point2::new(x0 + 0.5 * self.chord, self.apothem));
            if k > 0 {
                pts.push(Point2::new(x0, 0.0));
            }
        }
        PlanarRegion::polygon(pts)
    }

    /// Shear every tooth parallel to the baseline so that all tips meet at
    /// `apex_x`. Returns the sheared teeth and the single triangle they form.
    pub fn gather(&self, apex_x: f64) -> Result<(Vec<PlanarRegion>, PlanarRegion)> {
        let base = Line2::horizontal(0.0);
        let teeth = (0..self.teeth)
            .map(|k| {
                let tip_x = (k as f64 + 0.5) * self.chord;
                shear_region(&self.tooth(k)?, &base, (apex_x - tip_x) / self.apothem)
            })
            .collect::<Result<Vec<_>>>()?;
        let triangle = PlanarRegion::polygon(vec![
            Point2::new(0.0, 0.0),
            Point2::new(self.baseline_length(), 0.0),
            Point2::new(apex_x, self.apothem),
        ])?;
        Ok((teeth, triangle))
    }

    /// `n · ½ · chord · apothem`.
    pub fn area(&self) -> f64 {
        self.teeth as f64 * 0.5 * self.chord * self.apothem
    }
}

/// Cut the disk into `n` slices and lay their chords end to end.
pub fn unroll_disk(disk: &Disk, n: usize) -> Result<PlanarRegion> {
    Sawtooth::new(disk, n)?.polygon()
}

/// `πr²·(3/2)·(π/n)²`, the bound on the sawtooth's area deficit for `n ≥ 8`.
pub fn unroll_error_bound(r: f64, n: usize) -> f64 {
    let x = PI / n as f64;
    PI * r * r * 1.5 * x * x
}

/// Rotate each horizontal section of a column by `rate · z`.
pub fn twist_column(column: &Solid, rate: f64) -> Result<Solid> {
    match column {
        Solid::Cylinder { base, height } => Solid::twisted_column(base.clone(), *height, rate),
        Solid::TwistedColumn {
            base,
            height,
            twist_rate,
        } => Solid::twisted_column(base.clone(), *height, twist_rate + rate),
        _ => Err(GeometryError::UnsupportedRegion("twisting a non-column")),
    }
}

/// One orange wedge after unfolding: the flat-faced piece standing on the
/// chord of its equatorial arc, with its rib-parallel segments slid along
/// the table so that all ribs coincide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wedge {
    pub index: usize,
    /// Dihedral angle `2π/n`.
    pub angle: f64,
    /// Offset of the wedge's mid-plane per unit distance from the common rib.
    pub center_slope: f64,
    /// Half-thickness of the wedge per unit distance from the rib, `tan(angle/2)`.
    pub half_slope: f64,
}

impl Wedge {
    /// Volume of the chord piece: `∫ R(z)² sin(α/2)cos(α/2) dz = (4/3)r³·sin(α/2)cos(α/2)`.
    pub fn volume(&self, r: f64) -> f64 {
        let h = 0.5 * self.angle;
        4.0 / 3.0 * r * r * r * h.sin() * h.cos()
    }

    /// Area of the outer chord face, the ruled part counted as lateral.
    pub fn lateral_area(&self, r: f64) -> f64 {
        let h = 0.5 * self.angle;
        2.0 * r * r * (h.sin() * h.cos() + h)
    }
}

/// Sphere cut into wedges and unfolded; `solid` is the union of the wedges.
#[derive(Debug, Clone)]
pub struct MeridianUnfolding {
    pub radius: f64,
    pub wedges: Vec<Wedge>,
    pub solid: Solid,
}

impl MeridianUnfolding {
    /// The `n → ∞` object: two hoofs of radius `r` and height `πr`.
    pub fn limit(&self) -> Result<Solid> {
        Solid::double_hoof(self.radius, self.radius, PI)
    }
}

/// Cut the sphere by `n` meridian planes, lay the wedges on the table with
/// their equator chords aligned, and slide the rib-parallel segments to
/// bring every rib onto one line.
///
/// Each wedge is replaced by its flat-faced chord piece, so the union is a
/// double hoof over a half-ellipse of semi-axes `r` and `r·cos(π/n)` with
/// cutting slope `n·tan(π/n)`. Volume and lateral area approach `4πr³/3` and
/// `4πr²` with error `O(1/n²)`.
pub fn meridian_unfold(sphere: &Solid, n: usize) -> Result<MeridianUnfolding> {
    let Solid::Sphere { radius } = *sphere else {
        return Err(GeometryError::UnsupportedRegion("unfolding a non-sphere"));
    };
    if n < 4 || n % 2 != 0 {
        return Err(GeometryError::InvalidInput(format!(
            "meridian unfolding needs an even wedge count of at least 4, got {n}"
        )));
    }
    let angle = TAU / n as f64;
    let half_slope = (0.5 * angle).tan();
    let wedges = (0..n)
        .map(|k| Wedge {
            index: k,
            angle,
            center_slope: (2.0 * k as f64 + 1.0 - n as f64) * half_slope,
            half_slope,
        })
        .collect();
    let solid = Solid::double_hoof(radius, radius * (0.5 * angle).cos(), n as f64 * half_slope)?;
    Ok(MeridianUnfolding {
        radius,
        wedges,
        solid,
    })
}

/// Lay the meridian section flat and erect over each point a fibre as long
/// as the circle that point describes about the axis.
pub fn unfold_revolution(profile: &Profile) -> Result<Solid> {
    let rho = profile.region().min_x();
    if rho < -crate::geometry::AXIS_TOLERANCE {
        return Err(GeometryError::AxisCrossing { rho });
    }
    Ok(Solid::HeightFieldCylinder {
        base: profile.region().clone(),
        rho_coef: TAU,
        offset: 0.0,
    })
}

/// Area of a region before and after a shear; both via the shoelace formula.
pub fn shear_area_pair(region: &PlanarRegion, base: &Line2, shift: f64) -> Result<(f64, f64)> {
    let after = shear_region(region, base, shift)?;
    Ok((area(region)?, area(&after)?))
}

/// Volume of the height-field cylinder next to the Guldin volume of the same profile.
pub fn unfold_volume_pair(profile: &Profile) -> Result<(f64, f64)> {
    Ok((
        solids::volume(&unfold_revolution(profile)?)?,
        solids::guldin_volume(profile)?,
    ))
}
