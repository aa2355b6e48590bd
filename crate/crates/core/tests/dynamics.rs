mod common;

use common::{factored, random_quadratic, random_with_degree, rng};
use newton_atlas_core::dynamics::{
    classify_critical_orbits, iterate_orbit, julia_topology_predict, render_basins, ANALYSIS_MAX_ITER, DEFAULT_EPS,
};
use newton_atlas_core::newton_map::{build_newton_map, critical_points, fixed_points};
use newton_atlas_core::{Cx, ExtendedPoint, JuliaTopology, Viewport};
use rand::Rng;

#[test]
fn basin_consistency() {
    let mut r = rng(41);
    for k in 0..6 {
        let f = random_with_degree(&mut r, 2 + k % 2);
        let n = build_newton_map(&f).unwrap();
        let att: Vec<ExtendedPoint> =
            fixed_points(&f).unwrap().iter().filter(|p| p.class.is_attracting()).map(|p| p.location).collect();
        let vp = Viewport::new(Cx::new(0.0, 0.0), 5.0, 5.0, 24, 24).unwrap();
        let img = render_basins(&n, &att, &vp, 300, DEFAULT_EPS).unwrap();
        for j in 0..vp.px_h {
            for i in 0..vp.px_w {
                let px = img.get(i, j);
                let z = ExtendedPoint::Finite(vp.pixel_center(i, j));
                let o = iterate_orbit(&n, z, &att, 300, DEFAULT_EPS);
                assert_eq!(px.attractor_index, o.attractor_index);
                assert_eq!(px.iterations as usize, o.iterations);
            }
        }
    }
}

#[test]
fn every_attractor_captures_a_critical_point() {
    let mut r = rng(42);
    for k in 0..200 {
        let f = random_with_degree(&mut r, 2 + k % 2);
        let co = classify_critical_orbits(&f, ANALYSIS_MAX_ITER, DEFAULT_EPS).unwrap();
        assert!(co.every_attractor_has_critical_point(), "{f:?} {co:?}");
    }
}

#[test]
fn reciprocal_family_critical_points_escape_together() {
    let mut r = rng(43);
    for _ in 0..50 {
        let (e1, e2) = (r.gen_range(1..=5u32), r.gen_range(1..=5u32));
        let f = factored(&[], &[(Cx::new(0.0, 0.0), e1), (Cx::new(1.0, 0.0), e2)]);
        let crit = critical_points(&build_newton_map(&f).unwrap()).unwrap();
        assert_eq!(crit.infinity, 0);
        assert_eq!(crit.finite.len(), 2, "{crit:?}");
        let (a, b) = (crit.finite[0].0, crit.finite[1].0);
        assert!((a - b.conj()).norm() <= 1e-8, "{a} {b}");
        assert!(a.im.abs() > 1e-6);
        let co = classify_critical_orbits(&f, ANALYSIS_MAX_ITER, DEFAULT_EPS).unwrap();
        assert_eq!(co.attractors, vec![ExtendedPoint::Infinity]);
        assert!(co.orbits.iter().all(|o| o.2.attractor_index == Some(0)));
    }
}

#[test]
fn quadratic_predictions_are_never_undetermined() {
    let mut r = rng(44);
    for k in 0..100 {
        let f = random_quadratic(&mut r, k);
        let j = julia_topology_predict(&f).unwrap();
        assert_ne!(j.topology, JuliaTopology::Undetermined);
        assert!(!j.provenance.is_empty());
    }
}
