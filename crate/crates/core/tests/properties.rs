mod common;

use std::f64::consts::{PI, TAU};

use common::{rel_close, rng, star_polygon};
use indivisibles::exhaustion::{self, profiles, Target};
use indivisibles::geometry::{self, Disk, Sector};
use indivisibles::solids::{self, Point3};
use indivisibles::transforms::{self, Figure, Sawtooth, Transform};
use indivisibles::{Line2, PlanarRegion, Point2, Polygon, Profile, Solid};
use rand::Rng;

#[test]
fn shear_preserves_area_for_random_polygons() {
    let mut r = rng(7);
    for _ in 0..500 {
        let center = Point2::new(r.random_range(-5.0..5.0), r.random_range(-5.0..5.0));
        let p = star_polygon(&mut r, center, 3.0);
        let base = Line2::new(
            Point2::new(r.random_range(-2.0..2.0), r.random_range(-2.0..2.0)),
            Point2::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)),
        )
        .unwrap();
        let shift = r.random_range(-4.0..4.0);
        let (before, after) = transforms::shear_area_pair(&p, &base, shift).unwrap();
        assert!(rel_close(before, after, 1e-12), "{before} vs {after}");
    }
}

#[test]
fn shear_by_zero_is_identity() {
    let p = star_polygon(&mut rng(1), Point2::default(), 1.0);
    let q = transforms::shear_region(&p, &Line2::horizontal(0.3), 0.0).unwrap();
    let (PlanarRegion::Polygon(a), PlanarRegion::Polygon(b)) = (&p, &q) else { panic!() };
    assert_eq!(a.vertices(), b.vertices());
}

#[test]
fn centroid_is_equivariant_under_rigid_motions() {
    let mut r = rng(11);
    for _ in 0..200 {
        let p = star_polygon(&mut r, Point2::new(1.0, -2.0), 2.0);
        let angle = r.random_range(-PI..PI);
        let shift = Point2::new(r.random_range(-10.0..10.0), r.random_range(-10.0..10.0));
        let moved = p.rigid_motion(angle, shift).unwrap();
        let expect = geometry::centroid_region(&p).unwrap().rotate(angle).add(shift);
        let got = geometry::centroid_region(&moved).unwrap();
        assert!(got.distance(expect) <= 1e-12 * (1.0 + expect.norm()), "{got} vs {expect}");
    }
    let d = PlanarRegion::disk(Point2::new(5.0, 7.0), 1.5).unwrap();
    let moved = d.rigid_motion(1.0, Point2::new(-1.0, 2.0)).unwrap();
    let expect = Point2::new(5.0, 7.0).rotate(1.0).add(Point2::new(-1.0, 2.0));
    assert!(geometry::centroid_region(&moved).unwrap().distance(expect) < 1e-12);
}

#[test]
fn moment_vanishes_through_centroid() {
    let mut r = rng(13);
    for _ in 0..200 {
        let p = star_polygon(&mut r, Point2::new(3.0, 1.0), 2.0);
        let c = geometry::centroid_region(&p).unwrap();
        let dir = Point2::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0));
        let line = Line2::new(c, dir).unwrap();
        let (lo, hi) = p.bbox();
        let diameter = lo.distance(hi);
        let a = geometry::area(&p).unwrap();
        assert!(geometry::first_moment(&p, &line).unwrap().abs() <= 1e-10 * a * diameter);
    }
}

#[test]
fn area_is_additive_across_a_shared_edge() {
    let a = PlanarRegion::polygon(vec![Point2::new(0.0, 0.0), Point2::new(2.0, 0.0), Point2::new(1.0, 1.5)]).unwrap();
    let b = PlanarRegion::polygon(vec![Point2::new(2.0, 0.0), Point2::new(0.0, 0.0), Point2::new(0.5, -2.0)]).unwrap();
    let union = PlanarRegion::polygon(vec![
        Point2::new(0.0, 0.0),
        Point2::new(0.5, -2.0),
        Point2::new(2.0, 0.0),
        Point2::new(1.0, 1.5),
    ])
    .unwrap();
    let sum = geometry::area(&a).unwrap() + geometry::area(&b).unwrap();
    assert!((geometry::area(&union).unwrap() - sum).abs() < 1e-14);
}

#[test]
fn exhaustion_encloses_closed_forms_at_every_resolution() {
    let cases: Vec<(_, f64, bool)> = vec![
        (profiles::disk_width(1.0).unwrap(), PI, true),
        (profiles::sphere_sections(1.0).unwrap(), 4.0 * PI / 3.0, false),
        (profiles::cone_sections(3.0, 1.0).unwrap(), 1.0, false),
        (profiles::hoof_sections(1.0, 1.0).unwrap(), 2.0 / 3.0, false),
        (profiles::hoof_sections(2.0, 0.5).unwrap(), 2.0 * 4.0 * 0.5 / 3.0, false),
    ];
    for (f, exact, is_area) in cases {
        let mut prev: Option<indivisibles::MeasureInterval> = None;
        let tv = f.total_variation();
        for k in 0..=14 {
            let n = 1usize << k;
            let iv = if is_area {
                exhaustion::area_bounds(&f, n)
            } else {
                exhaustion::volume_bounds(&f, n)
            }
            .unwrap();
            assert!(iv.contains(exact), "n={n}: {iv} misses {exact}");
            assert!(iv.width() <= tv * (f.end() - f.start()) / n as f64 * (1.0 + 1e-9) + 1e-11);
            if let Some(p) = prev {
                assert!(iv.hi <= p.hi && iv.lo >= p.lo, "n={n}: {iv} not inside {p}");
            }
            prev = Some(iv);
        }
    }
}

#[test]
fn refinement_to_tolerance() {
    let disk = profiles::disk_width(1.0).unwrap();
    let iv = exhaustion::refine_until(Target::Area(&disk), 1e-3, 1 << 20).unwrap();
    assert!(iv.contains(PI) && iv.width() <= 1e-3 && iv.slabs <= 16384);

    let sphere = profiles::sphere_sections(1.0).unwrap();
    let iv = exhaustion::refine_until(Target::Volume(&sphere), 1e-4, 1 << 20).unwrap();
    assert!(iv.contains(4.0 * PI / 3.0) && iv.width() <= 1e-4);

    let trace = exhaustion::refine_trace(Target::Volume(&sphere), 1e-4, 1 << 20).unwrap();
    for w in trace.windows(2) {
        assert!(w[1].is_within(&w[0]));
    }
    let flat = indivisibles::geometry::PiecewiseMonotone::constant(0.0, 2.0, 1.5).unwrap();
    let iv = exhaustion::refine_until(Target::Area(&flat), 1e-9, 1 << 10).unwrap();
    assert_eq!(iv.slabs, 16);
}

#[test]
fn unroll_error_envelope() {
    for r in [0.5, 1.0, 3.0] {
        let disk = Disk::new(Point2::default(), r).unwrap();
        let mut n = 8;
        while n <= 4096 {
            let saw = Sawtooth::new(&disk, n).unwrap();
            let poly = transforms::unroll_disk(&disk, n).unwrap();
            let shoelace = geometry::area(&poly).unwrap();
            assert!(rel_close(shoelace, saw.area(), 1e-12));
            let err = PI * r * r - saw.area();
            assert!(err >= 0.0 && err <= transforms::unroll_error_bound(r, n), "n={n}");
            n *= 2;
        }
    }
}

#[test]
fn gathered_sawtooth_is_one_triangle() {
    let disk = Disk::new(Point2::default(), 1.0).unwrap();
    for n in [8, 64, 500] {
        let saw = Sawtooth::new(&disk, n).unwrap();
        let (teeth, tri) = saw.gather(0.3 * saw.baseline_length()).unwrap();
        let sum: f64 = teeth.iter().map(|t| geometry::area(t).unwrap()).sum();
        let tri_area = geometry::area(&tri).unwrap();
        assert!(rel_close(tri_area, 0.5 * saw.baseline_length() * saw.apothem, 1e-12));
        assert!(rel_close(tri_area, saw.area(), 1e-12));
        assert!(rel_close(sum, saw.area(), 1e-12));
    }
}

#[test]
fn exact_transforms_preserve_their_quantities() {
    let mut r = rng(5);
    for _ in 0..50 {
        let base = star_polygon(&mut r, Point2::default(), 1.0);
        let a = geometry::area(&base).unwrap();
        let h = r.random_range(0.1..3.0);
        let col = Solid::cylinder(base.clone(), h).unwrap();
        let twisted = Transform::TwistColumn { rate: r.random_range(-3.0..3.0) }
            .apply(&Figure::Solid(col))
            .unwrap();
        let Figure::Solid(t) = twisted else { panic!() };
        assert!(rel_close(solids::volume(&t).unwrap(), a * h, 1e-12));

        let cone = Solid::cone(base, Point3::new(0.1, 0.2, h)).unwrap();
        let moved = transforms::move_apex(&cone, Point3::new(r.random_range(-5.0..5.0), 3.0, h)).unwrap();
        assert!(rel_close(solids::volume(&moved).unwrap(), a * h / 3.0, 1e-12));
    }
}

#[test]
fn meridian_unfolding_converges_at_second_order() {
    let sphere = Solid::sphere(1.0).unwrap();
    let (v_exact, s_exact) = (4.0 * PI / 3.0, 4.0 * PI);
    let mut prev: Option<(f64, f64)> = None;
    let mut n = 8;
    while n <= 1024 {
        let u = transforms::meridian_unfold(&sphere, n).unwrap();
        let ve = (solids::volume(&u.solid).unwrap() - v_exact).abs();
        let se = (solids::lateral_area(&u.solid).unwrap() - s_exact).abs();
        // Leading coefficients are about 27/n² (volume) and 41/n² (lateral).
        let bound = 45.0 / (n * n) as f64;
        assert!(ve <= bound && se <= bound, "n={n}: {ve} {se}");
        if let Some((pv, ps)) = prev {
            assert!((pv / ve).log2() >= 1.9 && (ps / se).log2() >= 1.9);
        }
        prev = Some((ve, se));
        // The wedges sum to the same solid.
        let wv: f64 = u.wedges.iter().map(|w| w.volume(1.0)).sum();
        let wl: f64 = u.wedges.iter().map(|w| w.lateral_area(1.0)).sum();
        assert!(rel_close(wv, solids::volume(&u.solid).unwrap(), 1e-10));
        assert!(rel_close(wl, solids::lateral_area(&u.solid).unwrap(), 1e-10));
        n *= 2;
    }
    let u = transforms::meridian_unfold(&sphere, 256).unwrap();
    let limit = u.limit().unwrap();
    assert!(rel_close(solids::volume(&limit).unwrap(), v_exact, 1e-14));
    assert!(rel_close(solids::lateral_area(&limit).unwrap(), s_exact, 1e-14));
}

#[test]
fn sphere_chain() {
    for r in [0.5, 1.0, 2.0, 10.0] {
        let s = Solid::sphere(r).unwrap();
        let c = Solid::circumscribed_cylinder(r).unwrap();
        let (v, a) = (solids::volume(&s).unwrap(), solids::surface_area(&s).unwrap());
        assert!(rel_close(v, a * r / 3.0, 1e-12));
        assert!(rel_close(a, solids::lateral_area(&c).unwrap(), 1e-12));
        assert!(rel_close(a, 2.0 / 3.0 * solids::surface_area(&c).unwrap(), 1e-12));
        assert!(rel_close(v, 2.0 / 3.0 * solids::volume(&c).unwrap(), 1e-12));
    }
}

#[test]
fn hat_box_random_slabs() {
    let mut g = rng(3);
    for _ in 0..1000 {
        let r = g.random_range(0.01..100.0);
        let mut z = [g.random_range(-r..r), g.random_range(-r..r)];
        z.sort_by(f64::total_cmp);
        if z[0] == z[1] {
            continue;
        }
        let (zone, band) = solids::sphere_zone_vs_band(r, z[0], z[1]).unwrap();
        assert_eq!(zone, band);
        assert!(rel_close(zone, TAU * r * (z[1] - z[0]), 1e-12));
    }
}

#[test]
fn hoof_proportional_to_height() {
    let mut g = rng(17);
    let v1 = solids::volume(&Solid::hoof(1.0, 1.0).unwrap()).unwrap();
    let l1 = solids::lateral_area(&Solid::hoof(1.0, 1.0).unwrap()).unwrap();
    for _ in 0..100 {
        let h = g.random_range(0.01..50.0);
        let s = Solid::hoof(1.0, h).unwrap();
        assert!(rel_close(solids::volume(&s).unwrap() / h, v1, 1e-12));
        assert!(rel_close(solids::lateral_area(&s).unwrap() / h, l1, 1e-12));
    }
}

#[test]
fn guldin_lemma_on_random_polygons() {
    let mut g = rng(19);
    for _ in 0..200 {
        let center = Point2::new(g.random_range(-3.0..3.0), g.random_range(-3.0..3.0));
        let base = star_polygon(&mut g, center, 2.0);
        let slope = g.random_range(0.1..3.0);
        let dir = Point2::new(g.random_range(-1.0..1.0), g.random_range(-1.0..1.0));
        let c = geometry::centroid_region(&base).unwrap();
        let (up, down) = solids::oblique_cut_volumes(&base, &Line2::new(c, dir).unwrap(), slope).unwrap();
        assert!(rel_close(up, down, 1e-10), "{up} vs {down}");

        let boundary = base.boundary();
        let cc = geometry::centroid_curve(&boundary).unwrap();
        let (la, lb) = solids::oblique_cut_lateral_areas(&boundary, &Line2::new(cc, dir).unwrap(), slope).unwrap();
        assert!(rel_close(la, lb, 1e-10), "{la} vs {lb}");

        let delta = g.random_range(-0.5..0.5);
        let off = Line2::new(c, dir).unwrap().offset(delta);
        let (up, down) = solids::oblique_cut_volumes(&base, &off, slope).unwrap();
        let a = geometry::area(&base).unwrap();
        let m = geometry::first_moment(&base, &off).unwrap();
        assert!(((up - down) - slope * m).abs() <= 1e-10 * (up + down));
        assert!(((up - down) + slope * a * delta).abs() <= 1e-10 * (up + down));

        let offc = Line2::new(cc, dir).unwrap().offset(delta);
        let (la, lb) = solids::oblique_cut_lateral_areas(&boundary, &offc, slope).unwrap();
        let mc = geometry::first_moment_curve(&boundary, &offc).unwrap();
        assert!(((la - lb) - slope * mc).abs() <= 1e-10 * (la + lb));
    }
}

#[test]
fn two_paths_through_unfolding_agree() {
    let mut g = rng(23);
    for _ in 0..100 {
        let rho = g.random_range(2.05..6.0);
        let center = Point2::new(rho, g.random_range(-2.0..2.0));
        let base = star_polygon(&mut g, center, 2.0);
        let profile = Profile::new(base).unwrap();
        let (guldin, unfolded) = transforms::unfold_volume_pair(&profile).unwrap();
        assert!(rel_close(guldin, unfolded, 1e-12), "{guldin} vs {unfolded}");
        let s = transforms::unfold_revolution(&profile).unwrap();
        assert!(rel_close(solids::volume(&s).unwrap(), solids::guldin_volume(&profile).unwrap(), 1e-12));
    }
}

#[test]
fn guldin_closed_forms() {
    let half = Profile::new(Sector::half_disk(Point2::default(), 1.0).unwrap().into()).unwrap();
    assert!((solids::guldin_volume(&half).unwrap() - 4.0 * PI / 3.0).abs() < 1e-9);
    let torus = Profile::new(PlanarRegion::disk(Point2::new(3.0, 0.0), 1.0).unwrap()).unwrap();
    assert!((solids::guldin_volume(&torus).unwrap() - 6.0 * PI * PI).abs() < 1e-9);
    let axis = Line2::vertical(0.0);
    let tube = indivisibles::Curve::circle(Point2::new(3.0, 0.0), 1.0).unwrap();
    assert!((solids::guldin_surface(&tube, &axis).unwrap() - 12.0 * PI * PI).abs() < 1e-9);
    let sq = Polygon::rect(Point2::new(1.5, -0.5), Point2::new(2.5, 0.5)).unwrap();
    let sq: PlanarRegion = sq.into();
    assert!((solids::guldin_surface(&sq.boundary(), &axis).unwrap() - 16.0 * PI).abs() < 1e-12);
    let crossing = PlanarRegion::disk(Point2::new(0.5, 0.0), 1.0).unwrap();
    assert!(Profile::new(crossing).is_err());
}
