//! Point sets, sphere families, incidence counting and representation
//! functions.
//!
//! Incidences can be counted three independent ways (see [`Engine`]). The
//! lifted engine uses the identity
//!
//! ```text
//! p lies on S(alpha, lambda)  <=>  (p, 0) - (alpha, -lambda) lies on A
//! ```
//!
//! where `A = {(a, a_1^2 + ... + a_d^2)}` is the paraboloid in `F_q^(d+1)`.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{LiftedVector, Point, Space, Sphere};

/// A duplicate-free set of points of one space. Iteration follows insertion
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    space: Space,
    points: Vec<Point>,
    members: HashSet<Point>,
}

impl PointSet {
    /// Fails on the first duplicate or on a point from another space.
    pub fn new(space: Space, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut list = Vec::new();
        let mut members = HashSet::new();
        for (i, p) in points.into_iter().enumerate() {
            space.same(p.space())?;
            if !members.insert(p.clone()) {
                return Err(Error::DuplicatePoint(i));
            }
            list.push(p);
        }
        Ok(PointSet {
            space,
            points: list,
            members,
        })
    }

    pub fn empty(space: Space) -> Self {
        PointSet {
            space,
            points: Vec::new(),
            members: HashSet::new(),
        }
    }

    /// All of `F_q^d`.
    pub fn full(space: Space, budget: u64) -> Result<Self> {
        PointSet::new(space, space.points(budget)?)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.members.contains(p)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Point> {
        self.points.iter()
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.points
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// A duplicate-free family of spheres, keyed by `(center, lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereFamily {
    space: Space,
    spheres: Vec<Sphere>,
    members: HashSet<Sphere>,
}

impl SphereFamily {
    pub fn new(space: Space, spheres: impl IntoIterator<Item = Sphere>) -> Result<Self> {
        let mut list = Vec::new();
        let mut members = HashSet::new();
        for (i, s) in spheres.into_iter().enumerate() {
            space.same(s.space())?;
            if !members.insert(s.clone()) {
                return Err(Error::DuplicateSphere(i));
            }
            list.push(s);
        }
        Ok(SphereFamily {
            space,
            spheres: list,
            members,
        })
    }

    /// All `q^(d+1)` spheres, `lambda = 0` included.
    pub fn all(space: Space, budget: u64) -> Result<Self> {
        SphereFamily::new(space, space.spheres(budget)?)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn len(&self) -> usize {
        self.spheres.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spheres.is_empty()
    }

    pub fn contains(&self, s: &Sphere) -> bool {
        self.members.contains(s)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Sphere> {
        self.spheres.iter()
    }

    pub fn as_slice(&self) -> &[Sphere] {
        &self.spheres
    }
}

impl<'a> IntoIterator for &'a SphereFamily {
    type Item = &'a Sphere;
    type IntoIter = std::slice::Iter<'a, Sphere>;

    fn into_iter(self) -> Self::IntoIter {
        self.spheres.iter()
    }
}

/// Strategy for [`count_incidences`]. All engines return identical counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Tests every `(point, sphere)` pair.
    Naive,
    /// Groups spheres by center and histograms the distances from each
    /// center to the whole point set once.
    Bucketed,
    /// Counts pairs `(b, c)` with `b = (p, 0)`, `c = (alpha, -lambda)` and
    /// `b - c` on the paraboloid.
    Lifted,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Naive, Engine::Bucketed, Engine::Lifted];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Naive => "naive",
            Engine::Bucketed => "bucketed",
            Engine::Lifted => "lifted",
        }
    }
}

/// `I(P, S)`: the number of pairs `(p, s)` with `p` on `s`.
pub fn count_incidences(points: &PointSet, spheres: &SphereFamily, engine: Engine) -> Result<u64> {
    points.space.same(spheres.space)?;
    if points.is_empty() || spheres.is_empty() {
        return Ok(0);
    }
    Ok(match engine {
        Engine::Naive => naive(points, spheres),
        Engine::Bucketed => bucketed(points, spheres),
        Engine::Lifted => {
            let b = lift_points(points);
            let c = lift_spheres(spheres);
            paraboloid_pair_count(&b, &c)
        }
    })
}

fn naive(points: &PointSet, spheres: &SphereFamily) -> u64 {
    spheres
        .as_slice()
        .par_iter()
        .map(|s| points.iter().filter(|p| s.contains_raw(p)).count() as u64)
        .sum()
}

fn bucketed(points: &PointSet, spheres: &SphereFamily) -> u64 {
    let mut by_center: HashMap<&Point, Vec<u64>> = HashMap::new();
    for s in spheres {
        by_center.entry(s.center()).or_default().push(s.lambda_raw());
    }
    let q = points.space.q() as usize;
    let groups: Vec<_> = by_center.into_iter().collect();
    groups
        .par_iter()
        .map(|(center, lambdas)| {
            let hist = distance_histogram(points, center, q);
            lambdas.iter().map(|&l| hist[l as usize]).sum::<u64>()
        })
        .sum()
}

/// Number of points of `points` at each distance `0..q` from `center`.
pub(crate) fn distance_histogram(points: &PointSet, center: &Point, q: usize) -> Vec<u64> {
    let mut hist = vec![0u64; q];
    for p in points {
        hist[center.distance_raw(p) as usize] += 1;
    }
    hist
}

/// The set `B = {(p, 0) : p in P}`.
pub fn lift_points(points: &PointSet) -> Vec<LiftedVector> {
    points.iter().map(LiftedVector::embed).collect()
}

/// The set `C = {(alpha, -lambda) : S(alpha, lambda) in S}`.
pub fn lift_spheres(spheres: &SphereFamily) -> Vec<LiftedVector> {
    spheres.iter().map(Sphere::lift).collect()
}

/// `|{(b, c) in B x C : b - c in A}|`.
pub fn paraboloid_pair_count(b: &[LiftedVector], c: &[LiftedVector]) -> u64 {
    b.par_iter()
        .map(|bv| c.iter().filter(|cv| bv.difference_on_paraboloid(cv)).count() as u64)
        .sum()
}

/// A representation function `x -> r(x)` stored sparsely: only vectors with
/// a positive count are present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepFunction {
    space: Space,
    counts: BTreeMap<Point, u64>,
}

impl RepFunction {
    pub fn space(&self) -> Space {
        self.space
    }

    pub fn get(&self, x: &Point) -> u64 {
        self.counts.get(x).copied().unwrap_or(0)
    }

    /// `sum_x r(x)`.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `sum_x r(x)^2`.
    pub fn sum_of_squares(&self) -> u64 {
        self.counts.values().map(|&v| v * v).sum()
    }

    /// `sum_x self(x) * other(x)`.
    pub fn inner_product(&self, other: &RepFunction) -> u64 {
        let (small, large) = if self.counts.len() <= other.counts.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .counts
            .iter()
            .map(|(x, &v)| v * large.get(x))
            .sum()
    }

    /// Number of vectors with a positive count.
    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, u64)> {
        self.counts.iter().map(|(x, &v)| (x, v))
    }
}

fn combine(a: &PointSet, b: &PointSet, subtract: bool) -> Result<RepFunction> {
    if a.space.dim() != b.space.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.space.dim(),
            found: b.space.dim(),
        });
    }
    a.space.same(b.space)?;
    let space = a.space;
    let f = space.field();
    let mut counts: BTreeMap<Point, u64> = BTreeMap::new();
    let mut buf = vec![0u64; space.dim()];
    for x in a {
        for y in b {
            for (out, (&u, &v)) in buf.iter_mut().zip(x.coords().iter().zip(y.coords())) {
                *out = if subtract { f.sub_raw(u, v) } else { f.add_raw(u, v) };
            }
            let key = space.point(&buf).expect("canonical residues");
            *counts.entry(key).or_insert(0) += 1;
        }
    }
    Ok(RepFunction { space, counts })
}

/// `r_{A+B}(x) = |{(a, b) in A x B : a + b = x}|`.
pub fn rep_sum(a: &PointSet, b: &PointSet) -> Result<RepFunction> {
    combine(a, b, false)
}

/// `r_{A-B}(x) = |{(a, b) in A x B : a - b = x}|`.
pub fn rep_difference(a: &PointSet, b: &PointSet) -> Result<RepFunction> {
    combine(a, b, true)
}

/// Which side of the energy identity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergySide {
    /// `sum_x r_{A+B}(x)^2`
    Lhs,
    /// `sum_x r_{A-A}(x) r_{B-B}(x)`
    Rhs,
}

/// Additive energy of `A` and `B`; both sides agree.
pub fn additive_energy(a: &PointSet, b: &PointSet, side: EnergySide) -> Result<u64> {
    match side {
        EnergySide::Lhs => Ok(rep_sum(a, b)?.sum_of_squares()),
        EnergySide::Rhs => {
            a.space.same(b.space)?;
            let raa = rep_difference(a, a)?;
            let rbb = rep_difference(b, b)?;
            Ok(raa.inner_product(&rbb))
        }
    }
}

/// How to evaluate [`paraboloid_difference_count`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    /// Closed form from the linear equation `2 a.x' - |x'|^2 = x_{d+1}`.
    Closed,
    /// Enumerates the paraboloid.
    Brute,
}

/// `r_{A-A}(x)` for the paraboloid `A` of `F_q^d`, where `x` has `d+1`
/// coordinates.
///
/// Closed form: `q^d` at zero, `0` when `x' = 0` but `x_{d+1} != 0`, and
/// `q^(d-1)` otherwise. With `x' != 0` the equation is a nontrivial linear
/// constraint on `a`, so its solution set is an affine hyperplane of
/// `F_q^d`.
pub fn paraboloid_difference_count(x: &LiftedVector, mode: CountMode, budget: u64) -> Result<u64> {
    let d = x.base_dim();
    let q = x.field().order();
    match mode {
        CountMode::Closed => {
            let (last, head) = x.coords().split_last().expect("non-empty");
            Ok(if head.iter().all(|&c| c == 0) {
                if *last == 0 {
                    q.pow(d as u32)
                } else {
                    0
                }
            } else {
                q.pow(d as u32 - 1)
            })
        }
        CountMode::Brute => {
            let base = Space::new(x.field(), d)?;
            let mut count = 0;
            for a in base.points(budget)? {
                // a - b = x  <=>  b = a - x; b must be on the paraboloid.
                if a.lift().sub_unchecked(x).on_paraboloid() {
                    count += 1;
                }
            }
            Ok(count)
        }
    }
}
