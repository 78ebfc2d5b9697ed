use thiserror::Error;

use crate::exhaustion::MeasureInterval;

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;

/// Failures raised by the measure, transform and oracle operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no exact closed form for {0}; use the exhaustion bounds")]
    UnsupportedExact(&'static str),

    #[error("operation not supported for {0}")]
    UnsupportedRegion(&'static str),

    #[error("region has zero area")]
    DegenerateRegion,

    #[error("curve has zero length")]
    DegenerateCurve,

    #[error("solid has zero measure")]
    DegenerateSolid,

    #[error("piece {piece} on [{lo}, {hi}] violates its declared monotonicity")]
    InvalidMonotonicity { piece: usize, lo: f64, hi: f64 },

    #[error("tolerance {tol} not reached by n = {}; best interval width {}", best.slabs, best.width())]
    ToleranceNotReached { tol: f64, best: MeasureInterval },

    #[error("new apex height {new} differs from original height {old}")]
    ApexHeightChanged { old: f64, new: f64 },

    #[error("profile crosses the revolution axis (rho = {rho})")]
    AxisCrossing { rho: f64 },

    #[error("slab [{z1}, {z2}] is not inside [-{r}, {r}]")]
    SlabOutOfRange { r: f64, z1: f64, z2: f64 },

    #[error("sampling box has no volume")]
    EmptyBox,
}
