//! `igeo`: check construction scripts, print certified bounds, run oracles,
//! apply the Guldin theorems to profile files and draw diagrams.
//!
//! Exit codes: 0 success, 1 assertion or verification failure, 2 parse or
//! usage error, 3 geometry error, 4 I/O error.

mod profile_file;
mod report;
mod svg;

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use indivisibles::dsl::{self, DslError, Value};
use indivisibles::exhaustion::{self, profiles};
use indivisibles::geometry::{self, Disk};
use indivisibles::oracle::{self, Box2, Box3, Estimate};
use indivisibles::solids::{self, Point3};
use indivisibles::transforms::Sawtooth;
use indivisibles::{GeometryError, Line2, MeasureInterval, PlanarRegion, Point2, Profile, Solid};
use serde_json::json;

use profile_file::{LoadError, ProfileFile};
use report::{num, Format};

#[derive(Parser)]
#[command(name = "igeo", version, about = "Geometry of indivisibles: exact, certified and sampled measures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a construction script and report every assertion.
    Check {
        script: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Certified inner/outer enclosure of an area or volume.
    Bounds {
        #[arg(long, value_enum)]
        shape: Shape,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, default_value_t = 1.0)]
        h: f64,
        #[arg(long, default_value_t = 1000)]
        slices: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Area, perimeter, centroids and Guldin volume/surface of a profile file.
    Guldin {
        profile: PathBuf,
        /// Cross-check against the Monte Carlo and boundary quadrature oracles.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Brute-force estimate of a measure with a known closed form.
    Oracle {
        #[arg(long, value_enum)]
        shape: OracleShape,
        #[arg(long, value_enum, default_value = "monte-carlo")]
        method: OracleMethod,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, default_value_t = 1.0)]
        h: f64,
        /// Distance from the axis to the tube centre (torus).
        #[arg(long = "major", default_value_t = 3.0)]
        major: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Slabs for the Riemann method.
        #[arg(long, default_value_t = 1_000_000)]
        slices: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Write an SVG diagram of a construction or of the regions in a script.
    Svg {
        #[arg(long, value_enum, required_unless_present = "script")]
        construction: Option<Construction>,
        /// Draw the planar bindings of a script instead.
        #[arg(long, conflicts_with = "construction")]
        script: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "disk")]
        shape: Shape,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, default_value_t = 1.0)]
        h: f64,
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        slices: usize,
        #[arg(long)]
        profile: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Disk,
    Sphere,
    Cone,
    Hoof,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleShape {
    Disk,
    Sphere,
    Cone,
    Hoof,
    Torus,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMethod {
    MonteCarlo,
    Riemann,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Unroll,
    Bounds,
    Guldin,
}

/// A failed command and its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Geometry(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Geometry(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Geometry(m) | Failure::Io(m) => m,
        }
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        Failure::Geometry(e.to_string())
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Geometry(g) => g.into(),
            other => Failure::Io(other.to_string()),
        }
    }
}

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        match e {
            DslError::Geometry { .. } => Failure::Geometry(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Outcome of a command that ran to completion.
type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, format) = match &cli.command {
        Command::Check { format, .. } => ("check", *format),
        Command::Bounds { format, .. } => ("bounds", *format),
        Command::Guldin { format, .. } => ("guldin", *format),
        Command::Oracle { format, .. } => ("oracle", *format),
        Command::Svg { .. } => ("svg", Format::Human),
    };
    let outcome = match cli.command {
        Command::Check { script, format } => check(&script, format),
        Command::Bounds {
            shape,
            r,
            h,
            slices,
            format,
        } => bounds(shape, r, h, slices, format),
        Command::Guldin {
            profile,
            verify,
            seed,
            samples,
            format,
        } => guldin(&profile, verify, seed, samples, format),
        Command::Oracle {
            shape,
            method,
            r,
            h,
            major,
            samples,
            seed,
            slices,
            format,
        } => run_oracle(shape, method, r, h, major, samples, seed, slices, format),
        Command::Svg {
            construction,
            script,
            shape,
            r,
            h,
            n,
            slices,
            profile,
            output,
        } => draw(construction, script, shape, r, h, n, slices, profile, &output),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            if format == Format::Json {
                println!(
                    "{}",
                    report::line(
                        name,
                        "error",
                        json!({ "exit_code": f.code(), "message": f.message() })
                    )
                );
            }
            eprintln!("igeo {name}: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn check(path: &Path, format: Format) -> Outcome {
    let source = read(path)?;
    let report = dsl::run_script(&source)?;
    let passed = report.passed();
    let failed = report.failures().count();
    match format {
        Format::Human => {
            print!("{report}");
            println!(
                "{}: {} assertions, {} failed",
                path.display(),
                report.records.len(),
                failed
            );
        }
        Format::Json => {
            for r in &report.records {
                println!(
                    "{}",
                    report::line(
                        "check",
                        "assertion",
                        json!({
                            "line": r.span.line,
                            "column": r.span.column,
                            "text": r.text,
                            "left": num(r.left),
                            "right": num(r.right),
                            "difference": num(r.difference),
                            "tolerance": num(r.tolerance),
                            "pass": r.passed,
                        })
                    )
                );
            }
            println!(
                "{}",
                report::line(
                    "check",
                    "summary",
                    json!({
                        "inputs": { "script": path.display().to_string() },
                        "assertions": report.records.len(),
                        "failed": failed,
                        "pass": passed,
                    })
                )
            );
        }
    }
    Ok(passed)
}

/// Profile function and closed form for a bounds shape. `true` marks a width
/// (area) profile, `false` a section-area (volume) profile.
fn shape_profile(shape: Shape, r: f64, h: f64) -> Result<(geometry::WidthFunction, f64, bool), Failure> {
    if !(r > 0.0 && r.is_finite() && h > 0.0 && h.is_finite()) {
        return Err(GeometryError::InvalidInput(format!("dimensions must be positive, got r={r}, h={h}")).into());
    }
    Ok(match shape {
        Shape::Disk => (profiles::disk_width(r)?, PI * r * r, true),
        Shape::Sphere => (profiles::sphere_sections(r)?, 4.0 * PI * r.powi(3) / 3.0, false),
        Shape::Cone => (profiles::cone_sections(PI * r * r, h)?, PI * r * r * h / 3.0, false),
        Shape::Hoof => (profiles::hoof_sections(r, h)?, 2.0 * r * r * h / 3.0, false),
    })
}

fn shape_name(shape: Shape) -> &'static str {
    match shape {
        Shape::Disk => "disk",
        Shape::Sphere => "sphere",
        Shape::Cone => "cone",
        Shape::Hoof => "hoof",
    }
}

fn bounds(shape: Shape, r: f64, h: f64, slices: usize, format: Format) -> Outcome {
    let (f, exact, is_area) = shape_profile(shape, r, h)?;
    let iv: MeasureInterval = if is_area {
        exhaustion::area_bounds(&f, slices)?
    } else {
        exhaustion::volume_bounds(&f, slices)?
    };
    let contains = iv.contains(exact);
    match format {
        Format::Human => {
            println!("shape       {} (r = {r}, h = {h})", shape_name(shape));
            println!("measure     {}", if is_area { "area" } else { "volume" });
            println!("method      {}", iv.method);
            println!("slices      {}", iv.slabs);
            println!("lo          {:.12}", iv.lo);
            println!("hi          {:.12}", iv.hi);
            println!("width       {:.6e}", iv.width());
            println!("closed form {exact:.12} ({})", if contains { "enclosed" } else { "NOT enclosed" });
        }
        Format::Json => println!(
            "{}",
            report::line(
                "bounds",
                "result",
                json!({
                    "inputs": { "shape": shape_name(shape), "r": r, "h": h, "slices": slices },
                    "results": {
                        "measure": if is_area { "area" } else { "volume" },
                        "method": iv.method.to_string(),
                        "lo": num(iv.lo),
                        "hi": num(iv.hi),
                        "width": num(iv.width()),
                        "slices": iv.slabs,
                        "closed_form": num(exact),
                    },
                    "pass": contains,
                })
            )
        ),
    }
    Ok(contains)
}

fn guldin(path: &Path, verify: bool, seed: u64, samples: u64, format: Format) -> Outcome {
    let file = ProfileFile::load(path)?;
    let profile = file.profile()?;
    let region = profile.region();
    let boundary = profile.boundary();
    let axis = Line2::vertical(0.0);
    let area = geometry::area(region)?;
    let perimeter = geometry::perimeter(&boundary);
    let c_area = geometry::centroid_region(region)?;
    let c_curve = geometry::centroid_curve(&boundary)?;
    let volume = solids::guldin_volume(&profile)?;
    let surface = solids::guldin_surface(&boundary, &axis)?;

    let mut checks = Vec::new();
    if verify {
        let est = revolution_mc(&profile, samples, seed)?;
        let quad = oracle::boundary_integral(&boundary, |p| 2.0 * PI * p.x, 4096)?;
        let surf_ok = (quad - surface).abs() <= 1e-6 * surface.abs().max(1.0);
        checks.push(("volume_monte_carlo", est.mean, est.stderr, est.agrees_with(volume, 5.0)));
        checks.push(("surface_quadrature", quad, 0.0, surf_ok));
        if format == Format::Human {
            println!("seed {seed}, {samples} samples");
        }
    }
    let passed = checks.iter().all(|c| c.3);
    let name = file.name.clone().unwrap_or_else(|| path.display().to_string());
    match format {
        Format::Human => {
            println!("profile           {name}");
            println!("area              {area:.12}");
            println!("perimeter         {perimeter:.12}");
            println!("area centroid     ({:.12}, {:.12})", c_area.x, c_area.y);
            println!("curve centroid    ({:.12}, {:.12})", c_curve.x, c_curve.y);
            println!("volume            {volume:.12}");
            println!("surface           {surface:.12}");
            for (what, value, stderr, ok) in &checks {
                println!(
                    "{what:<17} {value:.12} (stderr {stderr:.3e}) {}",
                    if *ok { "ok" } else { "FAIL" }
                );
            }
        }
        Format::Json => {
            let checks: Vec<_> = checks
                .iter()
                .map(|(what, value, stderr, ok)| {
                    json!({ "oracle": what, "value": num(*value), "stderr": num(*stderr), "pass": ok })
                })
                .collect();
            println!(
                "{}",
                report::line(
                    "guldin",
                    "result",
                    json!({
                        "inputs": {
                            "profile": path.display().to_string(),
                            "name": name,
                            "verify": verify,
                            "seed": seed,
                            "samples": samples,
                        },
                        "results": {
                            "area": num(area),
                            "perimeter": num(perimeter),
                            "area_centroid": [num(c_area.x), num(c_area.y)],
                            "curve_centroid": [num(c_curve.x), num(c_curve.y)],
                            "volume": num(volume),
                            "surface": num(surface),
                            "checks": checks,
                        },
                        "pass": passed,
                    })
                )
            );
        }
    }
    Ok(passed)
}

fn revolution_mc(profile: &Profile, samples: u64, seed: u64) -> Result<Estimate, GeometryError> {
    let (lo, hi) = profile.region().bbox();
    let rmax = hi.x.max(0.0);
    let solid = Solid::revolution(profile.clone());
    oracle::mc_volume(
        |p| solid.contains(p),
        Box3::new(Point3::new(-rmax, -rmax, lo.y), Point3::new(rmax, rmax, hi.y)),
        samples,
        seed,
    )
}

#[allow(clippy::too_many_arguments)]
fn run_oracle(
    shape: OracleShape,
    method: OracleMethod,
    r: f64,
    h: f64,
    major: f64,
    samples: u64,
    seed: u64,
    slices: usize,
    format: Format,
) -> Outcome {
    if !(r > 0.0 && h > 0.0 && r.is_finite() && h.is_finite()) {
        return Err(GeometryError::InvalidInput(format!("dimensions must be positive, got r={r}, h={h}")).into());
    }
    let (exact, shape_name) = match shape {
        OracleShape::Disk => (PI * r * r, "disk"),
        OracleShape::Sphere => (4.0 * PI * r.powi(3) / 3.0, "sphere"),
        OracleShape::Cone => (PI * r * r * h / 3.0, "cone"),
        OracleShape::Hoof => (2.0 * r * r * h / 3.0, "hoof"),
        OracleShape::Torus => (2.0 * PI * PI * major * r * r, "torus"),
    };
    let (value, stderr, used) = match method {
        OracleMethod::MonteCarlo => {
            let est = mc_shape(shape, r, h, major, samples, seed)?;
            (est.mean, est.stderr, json!({ "method": "monte-carlo", "samples": samples, "seed": seed }))
        }
        OracleMethod::Riemann => {
            let section = match shape {
                OracleShape::Sphere => profiles::sphere_sections(r)?,
                OracleShape::Cone => profiles::cone_sections(PI * r * r, h)?,
                OracleShape::Hoof => profiles::hoof_sections(r, h)?,
                OracleShape::Disk => profiles::disk_width(r)?,
                OracleShape::Torus => {
                    return Err(Failure::Usage("the Riemann oracle has no torus sections; use monte-carlo".into()))
                }
            };
            let v = oracle::riemann_volume(&section, slices)?;
            (v, 0.0, json!({ "method": "riemann", "slices": slices }))
        }
    };
    let z = if stderr > 0.0 { (value - exact).abs() / stderr } else { 0.0 };
    let passed = match method {
        OracleMethod::MonteCarlo => z <= 5.0,
        OracleMethod::Riemann => (value - exact).abs() <= 1e-6 * exact.max(1.0),
    };
    match format {
        Format::Human => {
            println!("shape       {shape_name}");
            println!("method      {}", used["method"].as_str().unwrap_or_default());
            println!("estimate    {value:.12}");
            println!("stderr      {stderr:.6e}");
            println!("closed form {exact:.12}");
            println!("agreement   {}", if passed { "ok" } else { "FAIL" });
        }
        Format::Json => println!(
            "{}",
            report::line(
                "oracle",
                "result",
                json!({
                    "inputs": { "shape": shape_name, "r": r, "h": h, "major": major, "oracle": used },
                    "results": {
                        "estimate": num(value),
                        "stderr": num(stderr),
                        "closed_form": num(exact),
                    },
                    "pass": passed,
                })
            )
        ),
    }
    Ok(passed)
}

fn mc_shape(shape: OracleShape, r: f64, h: f64, major: f64, samples: u64, seed: u64) -> Result<Estimate, GeometryError> {
    let o = Point2::default();
    match shape {
        OracleShape::Disk => {
            let d = PlanarRegion::disk(o, r)?;
            oracle::mc_area(|p| d.contains(p), Box2::new(Point2::new(-r, -r), Point2::new(r, r)), samples, seed)
        }
        OracleShape::Sphere => {
            let s = Solid::sphere(r)?;
            oracle::mc_volume(|p| s.contains(p), Box3::new(Point3::new(-r, -r, -r), Point3::new(r, r, r)), samples, seed)
        }
        OracleShape::Cone => {
            let s = Solid::cone(PlanarRegion::disk(o, r)?, Point3::new(0.0, 0.0, h))?;
            oracle::mc_volume(|p| s.contains(p), Box3::new(Point3::new(-r, -r, 0.0), Point3::new(r, r, h)), samples, seed)
        }
        OracleShape::Hoof => {
            let s = Solid::hoof(r, h)?;
            oracle::mc_volume(|p| s.contains(p), Box3::new(Point3::new(-r, 0.0, 0.0), Point3::new(r, r, h)), samples, seed)
        }
        OracleShape::Torus => {
            let profile = Profile::new(PlanarRegion::disk(Point2::new(major, 0.0), r)?)?;
            revolution_mc(&profile, samples, seed)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn draw(
    construction: Option<Construction>,
    script: Option<PathBuf>,
    shape: Shape,
    r: f64,
    h: f64,
    n: usize,
    slices: usize,
    profile: Option<PathBuf>,
    output: &Path,
) -> Outcome {
    let doc = match (construction, script) {
        (_, Some(path)) => script_svg(&read(&path)?)?,
        (Some(Construction::Unroll), None) => svg::unroll(&Sawtooth::new(&Disk::new(Point2::default(), r)?, n)?),
        (Some(Construction::Bounds), None) => {
            let (f, _, is_area) = shape_profile(shape, r, h)?;
            let slabs = exhaustion::slabs(&f, slices)?;
            let (a, b) = (f.start(), f.end());
            let outline: Vec<Point2> = (0..=256)
                .map(|i| a + (b - a) * i as f64 / 256.0)
                .map(|t| if is_area { Point2::new(0.5 * f.eval(t), t) } else { Point2::new(t, f.eval(t)) })
                .collect();
            svg::bounds(&slabs, is_area, &outline)
        }
        (Some(Construction::Guldin), None) => {
            let path = profile.ok_or_else(|| Failure::Usage("--construction guldin needs --profile".into()))?;
            let p = ProfileFile::load(&path)?.profile()?;
            let ca = geometry::centroid_region(p.region())?;
            let cc = geometry::centroid_curve(&p.boundary())?;
            svg::guldin(p.region(), ca, cc)
        }
        (None, None) => return Err(Failure::Usage("give --construction or --script".into())),
    };
    std::fs::write(output, doc).map_err(|e| Failure::Io(format!("cannot write {}: {e}", output.display())))?;
    Ok(true)
}

/// Draw every planar binding of a script in binding order.
fn script_svg(source: &str) -> Result<String, Failure> {
    let (_, env) = dsl::run_script_with_env(source)?;
    let mut doc = svg::Doc::new();
    for (_, value) in env.iter() {
        match value {
            Value::Region(r) => doc.region("region", r),
            Value::Profile(p) => doc.region("profile", p.region()),
            Value::Curve(c) | Value::Surface(c) => doc.curve("curve", c),
            Value::Solid(_) => {}
        }
    }
    Ok(doc.finish())
}
