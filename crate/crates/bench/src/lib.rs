//! Seeded fixtures shared by the benchmarks.

use fq_incidence::{FieldSpec, PointSet, Space, SphereFamily};
use fq_incidence_cli::{generate, random_spheres, seeded_rng, GeneratorShape};

pub fn space(q: u64, d: usize) -> Space {
    Space::new(FieldSpec::new(q).expect("odd prime"), d).expect("d >= 1")
}

/// `n_points` random points and `n_spheres` random spheres drawn from `seed`.
pub fn instance(q: u64, d: usize, n_points: usize, n_spheres: usize, seed: u64) -> (PointSet, SphereFamily) {
    let s = space(q, d);
    let mut rng = seeded_rng(seed);
    let p = generate(s, &GeneratorShape::Random(n_points), &mut rng).expect("feasible");
    let f = random_spheres(s, n_spheres, &mut rng).expect("feasible");
    (p, f)
}

pub fn random_plane_set(q: u64, n: usize, seed: u64) -> PointSet {
    generate(space(q, 2), &GeneratorShape::Random(n), &mut seeded_rng(seed)).expect("feasible")
}
