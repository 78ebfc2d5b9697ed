//! Acceptance criteria, one check each. Prints a PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::f64::consts::{PI, TAU};
use std::path::PathBuf;
use std::process::Command;

use indivisibles::exhaustion::{self, profiles};
use indivisibles::geometry::{self, Disk, Sector};
use indivisibles::oracle::{self, Box3};
use indivisibles::solids::{self, Point3};
use indivisibles::transforms::{self, Sawtooth};
use indivisibles::{Line2, PlanarRegion, Point2, Polygon, Profile, Solid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs())
}

fn star_polygon(rng: &mut ChaCha8Rng, center: Point2, max_radius: f64) -> PlanarRegion {
    loop {
        let n = rng.random_range(3..=12);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point2> = angles
            .iter()
            .map(|&a| center.add(Point2::new(a.cos(), a.sin()).scale(rng.random_range(0.2 * max_radius..max_radius))))
            .collect();
        if let Ok(p) = Polygon::new(pts) {
            if p.signed_area() > 0.05 * max_radius * max_radius {
                return p.into();
            }
        }
    }
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn igeo(args: &[&str]) -> (i32, Vec<u8>, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_igeo"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("run igeo");
    (
        o.status.code().unwrap_or(-1),
        o.stdout,
        String::from_utf8_lossy(&o.stderr).into_owned(),
    )
}

fn ac1() -> Check {
    let w = profiles::disk_width(1.0).map_err(|e| e.to_string())?;
    let iv = exhaustion::area_bounds(&w, 1000).map_err(|e| e.to_string())?;
    let slack = 2e-12 * (iv.lo.abs() + iv.hi.abs());
    ensure(iv.contains(PI) && iv.width() <= 0.008 + slack, || format!("n=1000 gave {iv}"))?;
    let mut prev = exhaustion::area_bounds(&w, 16).map_err(|e| e.to_string())?;
    let mut n = 32;
    while n <= 16384 {
        let iv = exhaustion::area_bounds(&w, n).map_err(|e| e.to_string())?;
        ensure(iv.contains(PI) && iv.is_within(&prev), || format!("n={n}: {iv} not inside {prev}"))?;
        prev = iv;
        n *= 2;
    }
    Ok(format!("n=1000 width {:.6}; nested from 16 to 16384 slabs", exhaustion::area_bounds(&w, 1000).unwrap().width()))
}

fn ac2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for i in 0..500 {
        let center = Point2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let p = if i % 2 == 0 {
            let pts = (0..3)
                .map(|_| center.add(Point2::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))))
                .collect();
            match PlanarRegion::polygon(pts) {
                Ok(p) if geometry::area(&p).unwrap_or(0.0) > 0.5 => p,
                _ => star_polygon(&mut rng, center, 3.0),
            }
        } else {
            star_polygon(&mut rng, center, 3.0)
        };
        let base = Line2::new(
            Point2::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0)),
            Point2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
        )
        .map_err(|e| e.to_string())?;
        let (a, b) = transforms::shear_area_pair(&p, &base, rng.random_range(-5.0..5.0)).map_err(|e| e.to_string())?;
        worst = worst.max((a - b).abs() / a);
        ensure(rel_close(a, b, 1e-12), || format!("case {i}: {a} vs {b}"))?;
    }
    Ok(format!("500 shears, worst relative change {worst:.1e}"))
}

fn ac3() -> Check {
    let disk = Disk::new(Point2::default(), 1.0).map_err(|e| e.to_string())?;
    for n in 8..=4096 {
        let saw = Sawtooth::new(&disk, n).map_err(|e| e.to_string())?;
        let err = PI - saw.area();
        ensure(err >= 0.0 && err <= transforms::unroll_error_bound(1.0, n), || format!("n={n}: error {err}"))?;
        if n.is_power_of_two() {
            let shoelace = geometry::area(&transforms::unroll_disk(&disk, n).map_err(|e| e.to_string())?).unwrap();
            ensure(rel_close(shoelace, saw.area(), 1e-12), || format!("n={n}: shoelace {shoelace}"))?;
        }
    }
    let a64 = Sawtooth::new(&disk, 64).unwrap().area();
    let closed = 32.0 * (TAU / 64.0).sin();
    ensure((a64 - closed).abs() < 1e-14 && (a64 - 3.136551).abs() < 5e-6, || format!("n=64 area {a64}"))?;
    Ok(format!("envelope holds for n=8..4096; n=64 area {a64:.10}"))
}

fn ac4() -> Check {
    for r in [0.5, 1.0, 2.0, 10.0] {
        let s = Solid::sphere(r).map_err(|e| e.to_string())?;
        let c = Solid::circumscribed_cylinder(r).map_err(|e| e.to_string())?;
        let v = solids::volume(&s).unwrap();
        let a = solids::surface_area(&s).unwrap();
        let checks = [
            (v, a * r / 3.0),
            (a, solids::lateral_area(&c).unwrap()),
            (a, 2.0 / 3.0 * solids::surface_area(&c).unwrap()),
            (v, 2.0 / 3.0 * solids::volume(&c).unwrap()),
        ];
        for (x, y) in checks {
            ensure(rel_close(x, y, 1e-12), || format!("r={r}: {x} vs {y}"))?;
        }
    }
    Ok("V = S r/3, S = cylinder lateral = 2/3 cylinder total, V = 2/3 cylinder for r in {0.5,1,2,10}".into())
}

fn ac5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut n = 0;
    while n < 1000 {
        let r: f64 = rng.random_range(0.01..100.0);
        let (a, b): (f64, f64) = (rng.random_range(-r..r), rng.random_range(-r..r));
        if a == b {
            continue;
        }
        let (z1, z2) = (a.min(b), a.max(b));
        let (zone, band) = solids::sphere_zone_vs_band(r, z1, z2).map_err(|e| e.to_string())?;
        ensure(zone == band, || format!("r={r} [{z1},{z2}]: {zone} vs {band}"))?;
        n += 1;
    }
    Ok("1000 random slabs, zone == band bit for bit".into())
}

fn ac6() -> Check {
    let hoof = Solid::hoof(1.0, 1.0).map_err(|e| e.to_string())?;
    let v = solids::volume(&hoof).unwrap();
    let riemann = oracle::riemann_volume(&profiles::hoof_sections(1.0, 1.0).unwrap(), 1_000_000).unwrap();
    ensure((v - riemann).abs() <= 1e-9, || format!("Riemann {riemann} vs {v}"))?;
    let mc = oracle::mc_volume(
        |p| hoof.contains(p),
        Box3::new(Point3::new(-1.0, 0.0, 0.0), Point3::new(1.0, 1.0, 1.0)),
        1_000_000,
        42,
    )
    .map_err(|e| e.to_string())?;
    ensure(mc.agrees_with(v, 5.0), || format!("MC {} ± {}", mc.mean, mc.stderr))?;
    let l1 = solids::lateral_area(&hoof).unwrap();
    for h in [0.1, 0.5, 2.0, 3.7, 10.0, 123.0] {
        let lh = solids::lateral_area(&Solid::hoof(1.0, h).unwrap()).unwrap();
        ensure(rel_close(lh / h, l1, 1e-12), || format!("h={h}: lateral/h {}", lh / h))?;
    }
    Ok(format!(
        "V = {v:.9}; Riemann diff {:.1e}; MC {:.6} (z = {:.2}); lateral/h = {l1}",
        (v - riemann).abs(),
        mc.mean,
        mc.z_score(v)
    ))
}

fn ac7() -> Check {
    let sphere = Solid::sphere(1.0).map_err(|e| e.to_string())?;
    let errors = |n: usize| -> Result<(f64, f64), String> {
        let u = transforms::meridian_unfold(&sphere, n).map_err(|e| e.to_string())?;
        Ok((
            (solids::volume(&u.solid).unwrap() - 4.0 * PI / 3.0).abs(),
            (solids::lateral_area(&u.solid).unwrap() - 4.0 * PI).abs(),
        ))
    };
    let mut prev = errors(8)?;
    let mut orders = (f64::INFINITY, f64::INFINITY);
    let mut n = 16;
    while n <= 1024 {
        let e = errors(n)?;
        let o = ((prev.0 / e.0).log2(), (prev.1 / e.1).log2());
        ensure(o.0 >= 1.0 && o.1 >= 1.0, || format!("n={n}: orders {o:?}"))?;
        orders = (orders.0.min(o.0), orders.1.min(o.1));
        prev = e;
        n *= 2;
    }
    let (ev, es) = errors(256)?;
    ensure(ev <= 1e-3 && es <= 1e-2, || format!("n=256 errors {ev}, {es}"))?;
    Ok(format!(
        "min empirical orders {:.3} (volume), {:.3} (lateral); n=256 errors {ev:.2e}, {es:.2e}",
        orders.0, orders.1
    ))
}

fn ac8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..200 {
        let center = Point2::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let base = star_polygon(&mut rng, center, 2.0);
        let slope = rng.random_range(0.1..3.0);
        let dir = Point2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let e = |e: indivisibles::GeometryError| e.to_string();

        let c = geometry::centroid_region(&base).map_err(e)?;
        let line = Line2::new(c, dir).map_err(e)?;
        let (up, down) = solids::oblique_cut_volumes(&base, &line, slope).map_err(e)?;
        ensure(rel_close(up, down, 1e-10), || format!("case {i}: volumes {up} vs {down}"))?;

        let boundary = base.boundary();
        let cc = geometry::centroid_curve(&boundary).map_err(e)?;
        let cline = Line2::new(cc, dir).map_err(e)?;
        let (la, lb) = solids::oblique_cut_lateral_areas(&boundary, &cline, slope).map_err(e)?;
        ensure(rel_close(la, lb, 1e-10), || format!("case {i}: laterals {la} vs {lb}"))?;

        let off = line.offset(rng.random_range(-1.0..1.0));
        let (up, down) = solids::oblique_cut_volumes(&base, &off, slope).map_err(e)?;
        let m = geometry::first_moment(&base, &off).map_err(e)?;
        ensure(((up - down) - slope * m).abs() <= 1e-10 * (up + down), || format!("case {i}: offset volumes"))?;

        let coff = cline.offset(rng.random_range(-1.0..1.0));
        let (la, lb) = solids::oblique_cut_lateral_areas(&boundary, &coff, slope).map_err(e)?;
        let mc = geometry::first_moment_curve(&boundary, &coff).map_err(e)?;
        ensure(((la - lb) - slope * mc).abs() <= 1e-10 * (la + lb), || format!("case {i}: offset laterals"))?;
    }
    Ok("200 random polygons: equal halves through both centroids, offset difference = slope x moment".into())
}

fn ac9() -> Check {
    let e = |e: indivisibles::GeometryError| e.to_string();
    let torus = Profile::new(PlanarRegion::disk(Point2::new(3.0, 0.0), 1.0).map_err(e)?).map_err(e)?;
    let v = solids::guldin_volume(&torus).map_err(e)?;
    let axis = Line2::vertical(0.0);
    let s = solids::guldin_surface(&torus.boundary(), &axis).map_err(e)?;
    let solid = Solid::revolution(torus.clone());
    let mc = oracle::mc_volume(
        |p| solid.contains(p),
        Box3::new(Point3::new(-4.0, -4.0, -1.0), Point3::new(4.0, 4.0, 1.0)),
        10_000_000,
        42,
    )
    .map_err(e)?;
    ensure((mc.mean - v).abs() <= 0.01 * v, || format!("MC {} vs {v}", mc.mean))?;
    ensure((v - 6.0 * PI * PI).abs() < 1e-9, || format!("volume {v}"))?;
    let quad = oracle::boundary_integral(&torus.boundary(), |p| TAU * p.x, 4096).map_err(e)?;
    ensure((quad - s).abs() <= 1e-6, || format!("quadrature {quad} vs {s}"))?;
    ensure((s - 12.0 * PI * PI).abs() < 1e-9, || format!("surface {s}"))?;
    let half = Profile::new(Sector::half_disk(Point2::default(), 1.0).map_err(e)?.into()).map_err(e)?;
    let sv = solids::guldin_volume(&half).map_err(e)?;
    ensure((sv - 4.0 * PI / 3.0).abs() <= 1e-9, || format!("sphere from half-disk {sv}"))?;
    let semi = indivisibles::Curve::arc(Point2::default(), 1.0, -PI / 2.0, PI).map_err(e)?;
    let ss = solids::guldin_surface(&semi, &axis).map_err(e)?;
    ensure((ss - 4.0 * PI).abs() <= 1e-9, || format!("sphere surface from semicircle {ss}"))?;
    Ok(format!(
        "torus V {v:.6} (MC {:.6}, {:.3}% off), S {s:.6} (quadrature diff {:.1e}); sphere V {sv:.12}",
        mc.mean,
        100.0 * (mc.mean - v).abs() / v,
        (quad - s).abs()
    ))
}

fn ac10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let center = Point2::new(rng.random_range(2.05..8.0), rng.random_range(-3.0..3.0));
        let p = Profile::new(star_polygon(&mut rng, center, 2.0)).map_err(|e| e.to_string())?;
        let (g, u) = transforms::unfold_volume_pair(&p).map_err(|e| e.to_string())?;
        worst = worst.max((g - u).abs() / g);
        ensure(rel_close(g, u, 1e-12), || format!("case {i}: {g} vs {u}"))?;
    }
    Ok(format!("100 random profiles, worst relative gap {worst:.1e}"))
}

fn ac11() -> Check {
    let mut scripts: Vec<_> = std::fs::read_dir(root().join("scripts"))
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "igeo"))
        .collect();
    scripts.sort();
    ensure(scripts.len() == 12, || format!("{} scripts in corpus", scripts.len()))?;
    for s in &scripts {
        let (code, out, err) = igeo(&["check", s.to_str().unwrap()]);
        ensure(code == 0, || format!("{}: exit {code}\n{}{err}", s.display(), String::from_utf8_lossy(&out)))?;
    }
    let (code, out, _) = igeo(&["check", "scripts/negative/designed_failure.igeo"]);
    ensure(code == 1 && String::from_utf8_lossy(&out).contains("FAIL"), || format!("designed failure exit {code}"))?;
    let (code, _, err) = igeo(&["check", "scripts/negative/parse_error.igeo"]);
    ensure(code == 2 && err.contains("2:18") && err.contains("NUMBER"), || format!("parse error exit {code}: {err}"))?;
    Ok("12 corpus scripts exit 0; designed failure exits 1; parse error exits 2 at 2:18".into())
}

fn ac12() -> Check {
    let dir = std::env::temp_dir().join(format!("igeo-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let svg = |name: &str| dir.join(name).to_str().unwrap().to_string();
    let commands: Vec<Vec<String>> = vec![
        vec!["check", "scripts/hoof_from_orange.igeo", "--format", "json"],
        vec!["check", "scripts/negative/designed_failure.igeo"],
        vec!["bounds", "--shape", "sphere", "--slices", "1000", "--format", "json"],
        vec!["guldin", "profiles/torus64.toml", "--verify", "--format", "json"],
        vec!["oracle", "--shape", "torus", "--samples", "2000000", "--format", "json"],
        vec!["oracle", "--shape", "hoof", "--method", "riemann"],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    let mut compared = 0;
    for args in &commands {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = igeo(&a);
        let second = igeo(&a);
        ensure(first.1 == second.1 && first.0 == second.0, || format!("igeo {} differs between runs", args.join(" ")))?;
        compared += 1;
    }
    for (name, args) in [
        ("unroll", vec!["--construction", "unroll", "--n", "16"]),
        ("bounds", vec!["--construction", "bounds", "--shape", "disk", "--slices", "12"]),
        ("guldin", vec!["--construction", "guldin", "--profile", "profiles/washer.toml"]),
        ("script", vec!["--script", "scripts/guldin_surface.igeo"]),
    ] {
        let mut bytes = Vec::new();
        for run in 0..2 {
            let out = svg(&format!("{name}{run}.svg"));
            let mut a = vec!["svg"];
            a.extend(&args);
            a.extend(["-o", &out]);
            let (code, _, err) = igeo(&a);
            ensure(code == 0, || format!("svg {name}: {err}"))?;
            bytes.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        }
        ensure(bytes[0] == bytes[1], || format!("svg {name} differs between runs"))?;
        compared += 1;
    }
    let disk = PlanarRegion::disk(Point2::default(), 1.0).unwrap();
    let bbox = oracle::Box2::new(Point2::new(-1.0, -1.0), Point2::new(1.0, 1.0));
    let a = oracle::mc_area(|p| disk.contains(p), bbox, 1_000_000, 42).unwrap();
    let b = oracle::mc_area(|p| disk.contains(p), bbox, 1_000_000, 42).unwrap();
    ensure(a.mean.to_bits() == b.mean.to_bits() && a.stderr.to_bits() == b.stderr.to_bits(), || "library MC differs".into())?;
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{compared} CLI outputs and the library oracle are byte-identical across two runs"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("exhaustion soundness and rate", ac1),
        ("shear invariance", ac2),
        ("circle unrolling", ac3),
        ("sphere chain", ac4),
        ("hat-box", ac5),
        ("hoof", ac6),
        ("meridian unfolding converges", ac7),
        ("Guldin lemma", ac8),
        ("Guldin theorems", ac9),
        ("two-path consistency", ac10),
        ("DSL corpus and exit codes", ac11),
        ("determinism", ac12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("AC{:<2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC{:<2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
