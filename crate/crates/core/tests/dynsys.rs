//! The Z^3 action: commutativity, inverses and orbit membership on random points.

use qball::dynsys::{
    apply_map, boundedness_probe, orbit_membership, orbit_value, Boundedness, SearchBox,
};
use qball::{MapTag, OrbitTag, Point3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-12;

fn random_points(n: usize, seed: u64) -> Vec<(Point3<f64>, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let p = Point3::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
            (p, rng.gen_range(0.2..0.9))
        })
        .collect()
}

#[test]
fn maps_commute() {
    for (p, q) in random_points(1000, 11) {
        for a in MapTag::ALL {
            for b in MapTag::ALL {
                let ab = apply_map(a, 1, apply_map(b, 1, p, q), q);
                let ba = apply_map(b, 1, apply_map(a, 1, p, q), q);
                assert!(ab.distance(&ba) < TOL, "{a:?} {b:?} at {p:?}");
            }
        }
    }
}

#[test]
fn inverses_compose_to_identity() {
    for (p, q) in random_points(1000, 12) {
        for tag in MapTag::ALL {
            for power in [1, 2, 3] {
                let there = apply_map(tag, power, p, q);
                assert!(apply_map(tag, -power, there, q).distance(&p) < TOL);
                let back = apply_map(tag, -power, p, q);
                assert!(apply_map(tag, power, back, q).distance(&p) < TOL);
            }
        }
    }
}

#[test]
fn closed_form_matches_iteration() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let base = OrbitTag::ALL[rng.gen_range(0..5)].base::<f64>();
        let q = rng.gen_range(0.3..0.9);
        let e = [0; 3].map(|_| rng.gen_range(-3..=6));
        let iterated = apply_map(
            MapTag::F21,
            e[0],
            apply_map(MapTag::F12, e[1], apply_map(MapTag::F22, e[2], base, q), q),
            q,
        );
        let closed = orbit_value(base, e, q);
        assert!(closed.distance(&iterated) < 1e-9 * (1.0 + closed.norm()));
    }
}

#[test]
fn membership_recovers_nonnegative_exponents() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..500 {
        let q = rng.gen_range(0.3..0.8);
        let e = [0; 3].map(|_| rng.gen_range(0..8));
        let p = orbit_value(OrbitTag::Base000.base(), e, q);
        assert_eq!(orbit_membership(p, OrbitTag::Base000.base(), q, 1e-10, SearchBox::default()), Some(e));
    }
}

#[test]
fn points_off_the_orbit_are_rejected() {
    let q = 0.5;
    let p = Point3::new(0.3, 0.3, 0.3);
    for tag in OrbitTag::ALL {
        assert_eq!(orbit_membership(p, tag.base(), q, 1e-10, SearchBox::default()), None, "{tag}");
    }
}

#[test]
fn points_beyond_one_escape() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let base = Point3::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), rng.gen_range(1.01..3.0));
        let q = rng.gen_range(0.3..0.8);
        let r = boundedness_probe(base, q, 20);
        assert_eq!(r.verdict, Boundedness::Unbounded);
        assert!(r.max_norm > 1e3 * base.norm());
    }
    for tag in OrbitTag::ALL {
        let r = boundedness_probe(tag.base::<f64>(), 0.5, 20);
        assert!(r.forward_max_norm <= 1.0 + 1e-12);
        assert_ne!(r.verdict, Boundedness::Unbounded);
    }
}
