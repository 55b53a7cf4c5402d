#![allow(dead_code)]

use std::collections::BTreeSet;

use fq_incidence::{FieldElement, FieldSpec, Point, PointSet, Space, Sphere, SphereFamily};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn space(q: u64, d: usize) -> Space {
    Space::new(FieldSpec::new(q).unwrap(), d).unwrap()
}

pub fn random_points(rng: &mut impl Rng, s: Space, n: usize) -> PointSet {
    let total = s.point_count() as usize;
    let idx = sample(rng, total, n.min(total));
    PointSet::new(s, idx.iter().map(|i| s.point_at(i as u64))).unwrap()
}

pub fn random_spheres(rng: &mut impl Rng, s: Space, n: usize) -> SphereFamily {
    let total = s.sphere_count() as usize;
    let q = s.q();
    let idx = sample(rng, total, n.min(total));
    SphereFamily::new(
        s,
        idx.iter().map(|i| {
            let i = i as u64;
            Sphere::new(s.point_at(i / q), s.field().elem(i % q)).unwrap()
        }),
    )
    .unwrap()
}

/// Sum of squared coordinate differences through the public field API.
pub fn oracle_distance(x: &Point, y: &Point) -> FieldElement {
    let f = x.space().field();
    (0..x.space().dim())
        .map(|i| {
            let diff = x.coord(i) - y.coord(i);
            diff * diff
        })
        .fold(f.zero(), |a, b| a + b)
}

pub fn oracle_incidences(p: &PointSet, s: &SphereFamily) -> u64 {
    let mut n = 0;
    for sphere in s.iter() {
        for x in p.iter() {
            if oracle_distance(x, sphere.center()) == sphere.lambda() {
                n += 1;
            }
        }
    }
    n
}

/// All circles of the plane containing every point of `pts`, by scanning
/// all `q^3` parameter pairs.
pub fn oracle_circles_containing(s: Space, pts: &[&Point]) -> Vec<Sphere> {
    let q = s.q();
    let mut out = Vec::new();
    for c in 0..q * q {
        let center = s.point_at(c);
        for lambda in s.field().elements() {
            if pts.iter().all(|p| oracle_distance(p, &center) == lambda) {
                out.push(Sphere::new(center.clone(), lambda).unwrap());
            }
        }
    }
    out
}

/// Determined circles straight from the definition: for each triple, solve
/// by scanning and keep the unique hit.
pub fn oracle_determined(p: &PointSet) -> BTreeSet<Sphere> {
    let pts = p.as_slice();
    let s = p.space();
    let mut out = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let (a, b, c) = (&pts[i], &pts[j], &pts[k]);
                if fq_incidence::collinear(a, b, c).unwrap() {
                    continue;
                }
                let hits = oracle_circles_containing(s, &[a, b, c]);
                assert_eq!(hits.len(), 1);
                out.insert(hits.into_iter().next().unwrap());
            }
        }
    }
    out
}
