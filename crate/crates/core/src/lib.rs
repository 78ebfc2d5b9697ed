//! Geometry of indivisibles.
//!
//! Exact and certified measures of planar regions and solids, the
//! slice-rearranging constructions that preserve them, the Pappus-Guldin
//! theorems, brute-force oracles to check all of it, and a small
//! construction-script language (`.igeo`) that replays the classical
//! derivations as machine-checked assertions.
//!
//! Module map:
//!
//! * [`geometry`]: planar primitives, areas, lengths, centroids, first moments.
//! * [`exhaustion`]: certified inner/outer slab enclosures.
//! * [`transforms`]: measure-preserving constructions (shear, unrolling, unfolding).
//! * [`solids`]: closed-form solids, the hat-box theorem, oblique cuts, Guldin.
//! * [`oracle`]: Monte Carlo, Riemann and boundary-quadrature estimators.
//! * [`dsl`]: parser and interpreter for construction scripts.

pub mod dsl;
pub mod error;
pub mod exhaustion;
pub mod geometry;
pub mod oracle;
pub mod solids;
pub mod transforms;

pub use error::{GeometryError, Result};
pub use exhaustion::{MeasureInterval, Method, SectionFunction};
pub use geometry::{
    Curve, Disk, Line2, PiecewiseMonotone, PlanarRegion, Point2, Polygon, Profile, Sector,
    SlabAnchor, SlabRegion, Trend, WidthFunction,
};
pub use solids::{Point3, Solid};
pub use transforms::{Quantity, Transform, TransformKind};
