use std::collections::HashSet;
use std::f64::consts::PI;

use super::ast::{Arg, ArgValue, Ast, BinOp, Expr, MExpr, MeasureKind, Span, Stmt};
use super::{AssertionRecord, DslError, RunReport};
use crate::error::GeometryError;
use crate::geometry::{
    self, Curve, Line2, PlanarRegion, Point2, Polygon, Profile, Sector,
};
use crate::solids::{self, CutSide, Point3, Solid};
use crate::transforms::{self, Figure, Transform};

/// A bound figure.
#[derive(Debug, Clone)]
pub enum Value {
    Region(PlanarRegion),
    Curve(Curve),
    Profile(Profile),
    Solid(Solid),
    /// Surface swept by a meridian curve about the axis `x = 0`.
    Surface(Curve),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Region(r) => r.kind(),
            Value::Curve(_) => "curve",
            Value::Profile(_) => "profile",
            Value::Solid(s) => s.kind(),
            Value::Surface(_) => "surface of revolution",
        }
    }
}

/// Name bindings in definition order; later bindings shadow earlier ones.
#[derive(Debug, Clone, Default)]
pub struct Env {
    bindings: Vec<(String, Value)>,
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn insert(&mut self, name: impl Into<String>, value: Value) {
        self.bindings.push((name.into(), value));
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.bindings.iter().map(|(n, v)| (n.as_str(), v))
    }
}

/// Run the statements in order against `env`.
pub fn evaluate(ast: &Ast, env: &mut Env) -> Result<RunReport, DslError> {
    let mut report = RunReport::default();
    for stmt in &ast.statements {
        match stmt {
            Stmt::Let { name, expr, .. } => {
                let v = eval_expr(expr, env)?;
                env.insert(name.clone(), v);
            }
            Stmt::Assert {
                left,
                right,
                tol,
                span,
            } => {
                let l = eval_mexpr(left, env)?;
                let r = eval_mexpr(right, env)?;
                let difference = (l - r).abs();
                report.records.push(AssertionRecord {
                    span: *span,
                    text: stmt.to_string(),
                    left: l,
                    right: r,
                    difference,
                    tolerance: *tol,
                    passed: difference <= *tol,
                });
            }
        }
    }
    Ok(report)
}

fn geo(span: Span) -> impl Fn(GeometryError) -> DslError {
    move |source| DslError::Geometry { source, span }
}

fn type_error(span: Span, message: impl Into<String>) -> DslError {
    DslError::Type {
        message: message.into(),
        span,
    }
}

fn eval_mexpr(m: &MExpr, env: &Env) -> Result<f64, DslError> {
    Ok(match m {
        MExpr::Number(v) => *v,
        MExpr::Pi => PI,
        MExpr::Neg(inner) => -eval_mexpr(inner, env)?,
        MExpr::Binary { op, lhs, rhs } => {
            let (a, b) = (eval_mexpr(lhs, env)?, eval_mexpr(rhs, env)?);
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => a / b,
            }
        }
        MExpr::Measure { kind, target, span } => {
            let v = eval_expr(target, env)?;
            measure(*kind, &v, *span)?
        }
    })
}

fn measure(kind: MeasureKind, v: &Value, span: Span) -> Result<f64, DslError> {
    let g = geo(span);
    let axis = Line2::vertical(0.0);
    match (kind, v) {
        (MeasureKind::Area, Value::Region(r)) => geometry::area(r).map_err(g),
        (MeasureKind::Area, Value::Profile(p)) => geometry::area(p.region()).map_err(g),
        (MeasureKind::Perimeter, Value::Region(r)) => Ok(r.boundary().length()),
        (MeasureKind::Perimeter, Value::Profile(p)) => Ok(p.boundary().length()),
        (MeasureKind::Perimeter, Value::Curve(c)) => Ok(geometry::perimeter(c)),
        (MeasureKind::Volume, Value::Solid(s)) => solids::volume(s).map_err(g),
        (MeasureKind::Surface, Value::Solid(s)) => solids::surface_area(s).map_err(g),
        (MeasureKind::LateralArea, Value::Solid(s)) => solids::lateral_area(s).map_err(g),
        (MeasureKind::Surface | MeasureKind::LateralArea, Value::Surface(c)) => {
            solids::guldin_surface(c, &axis).map_err(g)
        }
        (MeasureKind::CentroidRho, Value::Region(r)) => {
            geometry::centroid_region(r).map(|c| c.x).map_err(g)
        }
        (MeasureKind::CentroidRho, Value::Profile(p)) => p.centroid_rho().map_err(g),
        (MeasureKind::CentroidRho, Value::Curve(c)) => {
            geometry::centroid_curve(c).map(|c| c.x).map_err(g)
        }
        (k, v) => Err(type_error(
            span,
            format!("{} is not defined for a {}", k.keyword(), v.kind()),
        )),
    }
}

/// An evaluated call argument.
enum ArgVal {
    Figure(Value),
    Number(f64),
    Point(Vec<f64>),
}

impl ArgVal {
    fn describe(&self) -> &'static str {
        match self {
            ArgVal::Figure(v) => v.kind(),
            ArgVal::Number(_) => "number",
            ArgVal::Point(_) => "point",
        }
    }
}

/// Evaluated arguments of one call, consumed by name or position.
struct Args {
    call: String,
    span: Span,
    positional: Vec<Option<ArgVal>>,
    named: Vec<(String, Option<ArgVal>)>,
}

impl Args {
    fn eval(call: &str, span: Span, args: &[Arg], env: &Env) -> Result<Self, DslError> {
        let mut positional = Vec::new();
        let mut named: Vec<(String, Option<ArgVal>)> = Vec::new();
        let mut seen = HashSet::new();
        for a in args {
            let v = match &a.value {
                ArgValue::Figure(e) => ArgVal::Figure(eval_expr(e, env)?),
                ArgValue::Number(m) => ArgVal::Number(eval_mexpr(m, env)?),
                ArgValue::Point(cs) => ArgVal::Point(
                    cs.iter()
                        .map(|c| eval_mexpr(c, env))
                        .collect::<Result<_, _>>()?,
                ),
            };
            match &a.name {
                Some(n) => {
                    if !seen.insert(n.clone()) {
                        return Err(type_error(span, format!("{call}: duplicate argument '{n}'")));
                    }
                    named.push((n.clone(), Some(v)));
                }
                None => positional.push(Some(v)),
            }
        }
        Ok(Self {
            call: call.to_string(),
            span,
            positional,
            named,
        })
    }

    fn err(&self, message: impl AsRef<str>) -> DslError {
        type_error(self.span, format!("{}: {}", self.call, message.as_ref()))
    }

    fn take_named(&mut self, name: &str) -> Option<ArgVal> {
        self.named
            .iter_mut()
            .find(|(n, _)| n == name)
            .and_then(|(_, v)| v.take())
    }

    fn take_positional(&mut self) -> Option<ArgVal> {
        self.positional.iter_mut().find_map(Option::take)
    }

    fn has(&self, name: &str) -> bool {
        self.named.iter().any(|(n, v)| n == name && v.is_some())
    }

    fn opt_num(&mut self, name: &str) -> Result<Option<f64>, DslError> {
        match self.take_named(name) {
            None => Ok(None),
            Some(ArgVal::Number(v)) => Ok(Some(v)),
            Some(other) => Err(self.err(format!("'{name}' must be a number, got a {}", other.describe()))),
        }
    }

    fn num(&mut self, name: &str) -> Result<f64, DslError> {
        self.opt_num(name)?
            .ok_or_else(|| self.err(format!("missing argument '{name}'")))
    }

    fn usize(&mut self, name: &str) -> Result<usize, DslError> {
        let v = self.num(name)?;
        if v.fract() != 0.0 || v < 0.0 || v > u32::MAX as f64 {
            return Err(self.err(format!("'{name}' must be a nonnegative integer, got {v}")));
        }
        Ok(v as usize)
    }

    fn point_from(&self, v: ArgVal, dims: usize, what: &str) -> Result<Vec<f64>, DslError> {
        match v {
            ArgVal::Point(c) if c.len() == dims => Ok(c),
            other => Err(self.err(format!(
                "{what} must be a {dims}-coordinate point, got a {}",
                other.describe()
            ))),
        }
    }

    fn opt_point2(&mut self, name: &str) -> Result<Option<Point2>, DslError> {
        match self.take_named(name) {
            None => Ok(None),
            Some(v) => {
                let c = self.point_from(v, 2, &format!("'{name}'"))?;
                Ok(Some(Point2::new(c[0], c[1])))
            }
        }
    }

    fn point3(&mut self, name: &str) -> Result<Point3, DslError> {
        let v = self
            .take_named(name)
            .ok_or_else(|| self.err(format!("missing argument '{name}'")))?;
        let c = self.point_from(v, 3, &format!("'{name}'"))?;
        Ok(Point3::new(c[0], c[1], c[2]))
    }

    /// All remaining positional points.
    fn positional_points(&mut self) -> Result<Vec<Point2>, DslError> {
        let mut pts = Vec::new();
        while let Some(v) = self.take_positional() {
            let c = self.point_from(v, 2, "positional argument")?;
            pts.push(Point2::new(c[0], c[1]));
        }
        Ok(pts)
    }

    fn opt_figure(&mut self, name: &str) -> Result<Option<Value>, DslError> {
        let v = match self.take_named(name) {
            Some(v) => Some(v),
            None => self.take_positional(),
        };
        match v {
            None => Ok(None),
            Some(ArgVal::Figure(f)) => Ok(Some(f)),
            Some(other) => {
                Err(self.err(format!("expected a figure, got a {}", other.describe())))
            }
        }
    }

    fn region(&mut self, name: &str) -> Result<PlanarRegion, DslError> {
        match self.opt_figure(name)? {
            Some(Value::Region(r)) => Ok(r),
            Some(Value::Profile(p)) => Ok(p.region().clone()),
            Some(other) => Err(self.err(format!("expected a planar region, got a {}", other.kind()))),
            None => Err(self.err("missing planar region argument")),
        }
    }

    /// Reject anything not consumed.
    fn finish(self) -> Result<(), DslError> {
        if let Some((n, _)) = self.named.iter().find(|(_, v)| v.is_some()) {
            return Err(self.err(format!("unexpected argument '{n}'")));
        }
        if self.positional.iter().any(Option::is_some) {
            return Err(self.err("too many positional arguments"));
        }
        Ok(())
    }
}

fn eval_expr(e: &Expr, env: &Env) -> Result<Value, DslError> {
    match e {
        Expr::Reference { name, span } => env.get(name).cloned().ok_or_else(|| DslError::Name {
            message: format!("'{name}' is not bound"),
            span: *span,
        }),
        Expr::Constructor { name, args, span } => {
            if !super::CONSTRUCTORS.contains(&name.as_str()) {
                return Err(DslError::Name {
                    message: format!("unknown constructor '{name}'"),
                    span: *span,
                });
            }
            let mut a = Args::eval(name, *span, args, env)?;
            let v = construct(name, &mut a, *span)?;
            a.finish()?;
            Ok(v)
        }
        Expr::Transform {
            name,
            target,
            args,
            span,
        } => {
            let t = eval_expr(target, env)?;
            let mut a = Args::eval(name, *span, args, env)?;
            let v = transform(name, t, &mut a, *span)?;
            a.finish()?;
            Ok(v)
        }
    }
}

fn construct(name: &str, a: &mut Args, span: Span) -> Result<Value, DslError> {
    let g = geo(span);
    let origin = Point2::default();
    Ok(match name {
        "triangle" => {
            let pts = a.positional_points()?;
            if pts.len() != 3 {
                return Err(a.err(format!("needs 3 points, got {}", pts.len())));
            }
            Value::Region(PlanarRegion::polygon(pts).map_err(g)?)
        }
        "polygon" => Value::Region(PlanarRegion::polygon(a.positional_points()?).map_err(g)?),
        "rect" => {
            let min = match a.opt_point2("min")? {
                Some(p) => p,
                None => *a.positional_points_take_one()?,
            };
            let max = match a.opt_point2("max")? {
                Some(p) => p,
                None => *a.positional_points_take_one()?,
            };
            Value::Region(Polygon::rect(min, max).map_err(g)?.into())
        }
        "disk" => {
            let center = a.opt_point2("center")?.unwrap_or(origin);
            Value::Region(PlanarRegion::disk(center, a.num("r")?).map_err(g)?)
        }
        "half_disk" => {
            let center = a.opt_point2("center")?.unwrap_or(origin);
            Value::Region(Sector::half_disk(center, a.num("r")?).map_err(g)?.into())
        }
        "sector" => {
            let center = a.opt_point2("center")?.unwrap_or(origin);
            let s = Sector::new(center, a.num("r")?, a.num("start")?, a.num("span")?).map_err(g)?;
            Value::Region(s.into())
        }
        "segment" => {
            let pts = a.positional_points()?;
            if pts.len() != 2 {
                return Err(a.err(format!("needs 2 points, got {}", pts.len())));
            }
            Value::Curve(Curve::segment(pts[0], pts[1]).map_err(g)?)
        }
        "arc" => {
            let center = a.opt_point2("center")?.unwrap_or(origin);
            let c = Curve::arc(center, a.num("r")?, a.num("start")?, a.num("span")?).map_err(g)?;
            Value::Curve(c)
        }
        "circle" => {
            let center = a.opt_point2("center")?.unwrap_or(origin);
            Value::Curve(Curve::circle(center, a.num("r")?).map_err(g)?)
        }
        "meridian_arc" => {
            let (r, z1, z2) = (a.num("r")?, a.num("z1")?, a.num("z2")?);
            if !(r > 0.0 && -r <= z1 && z1 < z2 && z2 <= r) {
                return Err(g(GeometryError::SlabOutOfRange { r, z1, z2 }));
            }
            let (t1, t2) = ((z1 / r).asin(), (z2 / r).asin());
            Value::Curve(Curve::arc(origin, r, t1, t2 - t1).map_err(g)?)
        }
        "boundary" => Value::Curve(a.region("region")?.boundary()),
        "profile" => Value::Profile(Profile::new(a.region("region")?).map_err(g)?),
        "sphere" => Value::Solid(Solid::sphere(a.num("r")?).map_err(g)?),
        "cylinder" => {
            let h = a.num("h")?;
            let base = if a.has("r") {
                PlanarRegion::disk(origin, a.num("r")?).map_err(&g)?
            } else {
                a.region("base")?
            };
            Value::Solid(Solid::cylinder(base, h).map_err(g)?)
        }
        "cone" => {
            let solid = if a.has("r") {
                let (r, h) = (a.num("r")?, a.num("h")?);
                Solid::cone(PlanarRegion::disk(origin, r).map_err(&g)?, Point3::new(0.0, 0.0, h))
            } else {
                let base = a.region("base")?;
                Solid::cone(base, a.point3("apex")?)
            };
            Value::Solid(solid.map_err(g)?)
        }
        "hoof" => Value::Solid(Solid::hoof(a.num("r")?, a.num("h")?).map_err(g)?),
        "revolve" => match a.opt_figure("profile")? {
            Some(Value::Profile(p)) => Value::Solid(Solid::revolution(p)),
            Some(Value::Region(r)) => {
                Value::Solid(Solid::revolution(Profile::new(r).map_err(g)?))
            }
            Some(Value::Curve(c)) => {
                // Validates the axis side.
                solids::guldin_surface(&c, &Line2::vertical(0.0)).map_err(g)?;
                Value::Surface(c)
            }
            Some(other) => return Err(a.err(format!("cannot revolve a {}", other.kind()))),
            None => return Err(a.err("missing profile")),
        },
        "tangent_polyhedron" => {
            let r = a.num("r")?;
            let mut faces = Vec::new();
            while let Some(v) = a.take_positional() {
                match v {
                    ArgVal::Number(x) => faces.push(x),
                    other => {
                        return Err(a.err(format!("face areas are numbers, got a {}", other.describe())))
                    }
                }
            }
            if a.has("faces") {
                let n = a.usize("faces")?;
                let each = a.num("face_area")?;
                faces.extend(std::iter::repeat_n(each, n));
            }
            Value::Solid(Solid::tangent_polyhedron(faces, r).map_err(g)?)
        }
        "cut_above" | "cut_below" => {
            let base = a.region("base")?;
            let through = a
                .opt_point2("through")?
                .ok_or_else(|| a.err("missing argument 'through'"))?;
            let dir = a
                .opt_point2("dir")?
                .ok_or_else(|| a.err("missing argument 'dir'"))?;
            let line = Line2::new(through, dir).map_err(&g)?;
            let side = if name == "cut_above" {
                CutSide::Above
            } else {
                CutSide::Below
            };
            Value::Solid(Solid::oblique_cut(base, line, a.num("slope")?, side).map_err(g)?)
        }
        _ => unreachable!("constructor list checked by caller"),
    })
}

impl Args {
    fn positional_points_take_one(&mut self) -> Result<Box<Point2>, DslError> {
        let v = self
            .take_positional()
            .ok_or_else(|| self.err("missing corner point"))?;
        let c = self.point_from(v, 2, "corner")?;
        Ok(Box::new(Point2::new(c[0], c[1])))
    }
}

fn transform(name: &str, target: Value, a: &mut Args, span: Span) -> Result<Value, DslError> {
    let g = geo(span);
    let figure = match target {
        Value::Region(r) => Figure::Region(r),
        Value::Profile(p) => Figure::Profile(p),
        Value::Solid(s) => Figure::Solid(s),
        other => return Err(a.err(format!("cannot transform a {}", other.kind()))),
    };
    let t = match name {
        "shear" => {
            let base = if let Some(y) = a.opt_num("base_y")? {
                Line2::horizontal(y)
            } else if let Some(x) = a.opt_num("base_x")? {
                Line2::vertical(x)
            } else {
                let p = a.opt_point2("through")?.unwrap_or_default();
                let d = a
                    .opt_point2("dir")?
                    .ok_or_else(|| a.err("needs base_y, base_x or dir"))?;
                Line2::new(p, d).map_err(&g)?
            };
            Transform::Shear2d {
                base,
                shift: a.num("shift")?,
            }
        }
        "move_apex" => Transform::MoveApex {
            new_apex: a.point3("apex")?,
        },
        "unroll" => Transform::UnrollDisk {
            pieces: a.usize("n")?,
        },
        "twist" => Transform::TwistColumn {
            rate: a.num("rate")?,
        },
        "meridian_unfold" => Transform::MeridianUnfold {
            wedges: a.usize("n")?,
        },
        "unfold_revolution" => Transform::UnfoldRevolution,
        _ => unreachable!("transform list checked by parser"),
    };
    let out = t.apply(&figure).map_err(|e| match e {
        GeometryError::UnsupportedRegion(what) => {
            type_error(span, format!("{name}: not applicable ({what})"))
        }
        other => g(other),
    })?;
    Ok(match out {
        Figure::Region(r) => Value::Region(r),
        Figure::Profile(p) => Value::Profile(p),
        Figure::Solid(s) => Value::Solid(s),
    })
}

#[allow(dead_code)]
fn _assert_transform_module_linked() {
    let _ = transforms::unroll_error_bound;
}
