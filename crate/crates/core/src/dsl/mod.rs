//! Construction scripts (`.igeo`).
//!
//! A script binds figures with `let` and checks numeric claims about them
//! with `assert_close(left, right, tol=...)`, where the tolerance is
//! absolute. Every assertion is recorded; a failed assertion does not stop
//! the run, but name, type and geometry errors do.
//!
//! ```text
//! # sphere and circumscribed cylinder
//! let s = sphere(r=1);
//! let c = cylinder(r=1, h=2);
//! assert_close(volume(s), (2/3)*volume(c), tol=1e-12);
//! ```

pub mod ast;
mod eval;
pub mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

pub use ast::{Ast, Span};
pub use eval::{evaluate, Env, Value};
pub use parser::parse;

use crate::error::GeometryError;

/// Figure constructors understood by the interpreter.
pub const CONSTRUCTORS: &[&str] = &[
    "triangle",
    "polygon",
    "rect",
    "disk",
    "half_disk",
    "sector",
    "segment",
    "arc",
    "circle",
    "meridian_arc",
    "boundary",
    "profile",
    "sphere",
    "cylinder",
    "cone",
    "hoof",
    "revolve",
    "tangent_polyhedron",
    "cut_above",
    "cut_below",
];

/// Calls whose first argument is the figure being transformed.
pub const TRANSFORMS: &[&str] = &[
    "shear",
    "move_apex",
    "unroll",
    "twist",
    "meridian_unfold",
    "unfold_revolution",
];

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{line}:{column}: expected {expected}, found {found}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("{span}: name error: {message}")]
    Name { message: String, span: Span },

    #[error("{span}: type error: {message}")]
    Type { message: String, span: Span },

    #[error("{span}: geometry error: {source}")]
    Geometry { source: GeometryError, span: Span },
}

/// Outcome of one `assert_close`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssertionRecord {
    pub span: Span,
    /// Canonical source text of the assertion.
    pub text: String,
    pub left: f64,
    pub right: f64,
    pub difference: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunReport {
    pub records: Vec<AssertionRecord>,
}

impl RunReport {
    /// Conjunction of all records; an empty report passes.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AssertionRecord> {
        self.records.iter().filter(|r| !r.passed)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(
                f,
                "{:<4} {:>6}  left={:.12} right={:.12} |diff|={:.3e} tol={:.1e}",
                if r.passed { "ok" } else { "FAIL" },
                r.span.to_string(),
                r.left,
                r.right,
                r.difference,
                r.tolerance
            )?;
        }
        Ok(())
    }
}

/// Parse and evaluate `source` in a fresh environment.
pub fn run_script(source: &str) -> Result<RunReport, DslError> {
    run_script_with_env(source).map(|(report, _)| report)
}

/// Like [`run_script`] but also returns the final bindings.
pub fn run_script_with_env(source: &str) -> Result<(RunReport, Env), DslError> {
    let ast = parse(source)?;
    let mut env = Env::default();
    let report = evaluate(&ast, &mut env)?;
    Ok((report, env))
}
