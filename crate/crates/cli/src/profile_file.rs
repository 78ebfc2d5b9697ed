//! Profile files: a closed meridian polygon in TOML.
//!
//! ```toml
//! name = "washer"
//! points = [[1.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0]]
//! ```
//!
//! Each point is `[rho, z]`; the polygon closes itself.

use std::path::Path;

use indivisibles::geometry::AXIS_TOLERANCE;
use indivisibles::{GeometryError, PlanarRegion, Point2, Profile};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileFile {
    pub name: Option<String>,
    pub points: Vec<[f64; 2]>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed profile file {path}: {message}")]
    Malformed { path: String, message: String },
    #[error("{0}")]
    Geometry(#[from] GeometryError),
}

impl ProfileFile {
    pub fn load(path: &Path) -> Result<Self, LoadError> {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
            path: shown.clone(),
            source,
        })?;
        let file: ProfileFile = toml::from_str(&text).map_err(|e| LoadError::Malformed {
            path: shown.clone(),
            message: e.message().to_string(),
        })?;
        let malformed = |message: &str| LoadError::Malformed {
            path: shown.clone(),
            message: message.to_string(),
        };
        if file.points.len() < 3 {
            return Err(malformed("a profile needs at least 3 points"));
        }
        if file.points.first() == file.points.last() {
            return Err(malformed("closure is implicit; do not repeat the first point"));
        }
        if file.points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(malformed("coordinates must be finite"));
        }
        Ok(file)
    }

    pub fn profile(&self) -> Result<Profile, GeometryError> {
        if let Some(&[rho, _]) = self.points.iter().find(|p| p[0] < -AXIS_TOLERANCE) {
            return Err(GeometryError::AxisCrossing { rho });
        }
        let pts = self.points.iter().map(|&[r, z]| Point2::new(r, z)).collect();
        Profile::new(PlanarRegion::polygon(pts)?)
    }
}
