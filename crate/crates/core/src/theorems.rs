//! Checkers that evaluate each incidence statement on concrete inputs.
//!
//! Every verdict is decided with exact integer arithmetic. Wherever a bound
//! carries a square root it is compared in squared form; the only float in
//! this module is [`IncidenceReport::theta`], which is for display.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::geometry::{collinear_raw, solve_circle_raw, Point, Space, Sphere};
use crate::incidence::{count_incidences, distance_histogram, Engine, PointSet, SphereFamily};

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// The statement was checked and is true.
    Holds,
    /// The statement says nothing about this input (empty families, unmet
    /// hypothesis).
    Vacuous,
    /// The statement failed. Since every statement here is a theorem, this
    /// always means a bug.
    Violated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Vacuous => "vacuous",
            Status::Violated => "violated",
        }
    }

    /// Worst of two statuses: `Violated > Holds > Vacuous`.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Violated, _) | (_, Violated) => Violated,
            (Holds, _) | (_, Holds) => Holds,
            _ => Vacuous,
        }
    }
}

/// Both sides of the point-sphere incidence bound
///
/// ```text
/// |P||S|/q - sqrt(|P||S|) q^(d/2)  <  I(P, S)  <  |P||S|/q + sqrt(|P||S|) q^(d/2)
/// ```
///
/// evaluated as `(q I - |P||S|)^2 < |P||S| q^(d+2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IncidenceReport {
    pub q: u64,
    pub d: usize,
    pub point_count: u64,
    pub sphere_count: u64,
    pub incidences: u64,
    /// `|P||S|`; the main term is this over `q`.
    pub main_term_num: BigInt,
    pub main_term_den: u64,
    /// `q I - |P||S|`.
    pub scaled_deviation: BigInt,
    /// `|P||S| q^(d+2)`.
    pub error_bound_sq: BigInt,
    /// `(I - |P||S|/q) / (sqrt(|P||S|) q^(d/2))`; zero for empty inputs.
    pub theta: f64,
    pub status: Status,
}

impl IncidenceReport {
    fn from_counts(space: Space, point_count: u64, sphere_count: u64, incidences: u64) -> Self {
        let q = space.q();
        let d = space.dim();
        let product = BigInt::from(point_count) * BigInt::from(sphere_count);
        let scaled_deviation = BigInt::from(q) * BigInt::from(incidences) - &product;
        let error_bound_sq = &product * BigInt::from(q).pow(d as u32 + 2);
        let status = if product.is_zero() {
            Status::Vacuous
        } else if &scaled_deviation * &scaled_deviation < error_bound_sq {
            Status::Holds
        } else {
            Status::Violated
        };
        let theta = if product.is_zero() {
            0.0
        } else {
            // theta = (qI - |P||S|) / sqrt(|P||S| q^(d+2))
            let num = scaled_deviation.to_f64().unwrap_or(f64::NAN);
            let den = error_bound_sq.to_f64().unwrap_or(f64::NAN).sqrt();
            num / den
        };
        IncidenceReport {
            q,
            d,
            point_count,
            sphere_count,
            incidences,
            main_term_num: product,
            main_term_den: q,
            scaled_deviation,
            error_bound_sq,
            theta,
            status,
        }
    }
}

/// Checks the incidence bound using the bucketed engine.
pub fn check_main(points: &PointSet, spheres: &SphereFamily) -> Result<IncidenceReport> {
    check_main_with(points, spheres, Engine::Bucketed)
}

pub fn check_main_with(
    points: &PointSet,
    spheres: &SphereFamily,
    engine: Engine,
) -> Result<IncidenceReport> {
    let incidences = count_incidences(points, spheres, engine)?;
    Ok(IncidenceReport::from_counts(
        points.space(),
        points.len() as u64,
        spheres.len() as u64,
        incidences,
    ))
}

/// `Delta_y(P) = {||x - y|| : x in P}`.
pub fn pinned_set(points: &PointSet, pin: &Point) -> Result<BTreeSet<FieldElement>> {
    points.space().same(pin.space())?;
    let f = points.space().field();
    Ok(points.iter().map(|x| f.elem(x.distance_raw(pin))).collect())
}

fn pinned_size(points: &PointSet, pin: &Point) -> u64 {
    let q = points.space().q() as usize;
    distance_histogram(points, pin, q)
        .iter()
        .filter(|&&c| c > 0)
        .count() as u64
}

/// The concentric spheres around `pin` that cover `points` with no waste:
/// one sphere per realized distance.
pub fn pinned_cover(points: &PointSet, pin: &Point) -> Result<SphereFamily> {
    let distances = pinned_set(points, pin)?;
    SphereFamily::new(
        points.space(),
        distances
            .into_iter()
            .map(|lambda| Sphere::from_raw(pin.clone(), lambda.value())),
    )
}

/// Which pinned-distance statement a [`PinnedReport`] answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PinnedKind {
    /// Average pinned-distance count exceeds `(1 - eps) q` once
    /// `|P| >= eps^-1 (1 - eps)^(1/2) q^((d+1)/2)`.
    Average,
    /// At least `(1 - alpha)|P|` pins see more than `(1 - alpha) q`
    /// distances once `|P| >= alpha^-2 (1 - alpha^2)^(1/2) q^((d+1)/2)`.
    Fraction,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PinnedReport {
    pub kind: PinnedKind,
    pub q: u64,
    pub d: usize,
    pub point_count: u64,
    /// `|Delta_p(P)|` for every `p`, in the point set's order.
    pub pin_sizes: Vec<(Point, u64)>,
    /// `sum_p |Delta_p(P)|`.
    pub total: u64,
    /// `total / |P|`, absent for empty `P`.
    pub average: Option<Ratio<u64>>,
    /// `eps` or `alpha`.
    pub parameter: Ratio<u64>,
    /// Pins with `|Delta_p(P)| > (1 - parameter) q`.
    pub qualifying_pins: u64,
    pub hypothesis_met: bool,
    pub conclusion_holds: bool,
}

impl PinnedReport {
    pub fn status(&self) -> Status {
        match (self.hypothesis_met, self.conclusion_holds) {
            (true, true) => Status::Holds,
            (true, false) => Status::Violated,
            (false, _) => Status::Vacuous,
        }
    }
}

fn check_unit_interval(name: &str, r: Ratio<u64>) -> Result<()> {
    if r.numer().is_zero() || r >= Ratio::from_integer(1) {
        return Err(Error::ParameterOutOfRange(format!("{name} = {r}")));
    }
    Ok(())
}

fn pinned_base(points: &PointSet, kind: PinnedKind, parameter: Ratio<u64>) -> PinnedReport {
    let space = points.space();
    let slice = points.as_slice();
    let sizes: Vec<u64> = slice.par_iter().map(|p| pinned_size(points, p)).collect();
    let total: u64 = sizes.iter().sum();
    let n = points.len() as u64;
    let q = space.q();
    // |Delta| > (1 - r) q  <=>  den |Delta| > (den - num) q
    let (num, den) = (*parameter.numer(), *parameter.denom());
    let qualifying_pins = sizes.iter().filter(|&&s| den * s > (den - num) * q).count() as u64;
    PinnedReport {
        kind,
        q,
        d: space.dim(),
        point_count: n,
        pin_sizes: slice.iter().cloned().zip(sizes).collect(),
        total,
        average: (n > 0).then(|| Ratio::new(total, n)),
        parameter,
        qualifying_pins,
        hypothesis_met: false,
        conclusion_holds: false,
    }
}

/// Average pinned-distance statement at `eps`.
///
/// Hypothesis in squared form: `|P|^2 eps^2 >= (1 - eps) q^(d+1)`.
/// Conclusion: `sum_p |Delta_p(P)| > (1 - eps) q |P|`.
pub fn check_pinned_average(points: &PointSet, epsilon: Ratio<u64>) -> Result<PinnedReport> {
    check_unit_interval("epsilon", epsilon)?;
    let mut report = pinned_base(points, PinnedKind::Average, epsilon);
    let (num, den) = (BigInt::from(*epsilon.numer()), BigInt::from(*epsilon.denom()));
    let n = BigInt::from(report.point_count);
    let q = BigInt::from(report.q);
    let q_pow = q.pow(report.d as u32 + 1);
    // |P|^2 n^2 / m^2 >= (m - n)/m q^(d+1)  <=>  |P|^2 n^2 >= (m - n) m q^(d+1)
    report.hypothesis_met = &n * &n * &num * &num >= (&den - &num) * &den * q_pow;
    // total > (m - n)/m q |P|  <=>  m total > (m - n) q |P|
    report.conclusion_holds = &den * BigInt::from(report.total) > (&den - &num) * &q * &n;
    Ok(report)
}

/// Pinned-fraction statement at `alpha`.
///
/// Hypothesis in squared form: `|P|^2 alpha^4 >= (1 - alpha^2) q^(d+1)`.
/// Conclusion: `|{p : |Delta_p(P)| > (1 - alpha) q}| >= (1 - alpha) |P|`.
pub fn check_pinned_fraction(points: &PointSet, alpha: Ratio<u64>) -> Result<PinnedReport> {
    check_unit_interval("alpha", alpha)?;
    let mut report = pinned_base(points, PinnedKind::Fraction, alpha);
    let (num, den) = (BigInt::from(*alpha.numer()), BigInt::from(*alpha.denom()));
    let n = BigInt::from(report.point_count);
    let q_pow = BigInt::from(report.q).pow(report.d as u32 + 1);
    // |P|^2 n^4 / m^4 >= (m^2 - n^2)/m^2 q^(d+1)
    //   <=>  |P|^2 n^4 >= (m^2 - n^2) m^2 q^(d+1)
    let num2 = &num * &num;
    let den2 = &den * &den;
    report.hypothesis_met = &n * &n * &num2 * &num2 >= (&den2 - &num2) * &den2 * q_pow;
    // good >= (m - n)/m |P|  <=>  m good >= (m - n) |P|
    report.conclusion_holds = &den * BigInt::from(report.qualifying_pins) >= (&den - &num) * &n;
    Ok(report)
}

fn require_plane(space: Space) -> Result<()> {
    if space.dim() != 2 {
        return Err(Error::RequiresPlane(space.dim()));
    }
    Ok(())
}

fn plane_coords(points: &PointSet) -> Vec<(u64, u64)> {
    points
        .iter()
        .map(|p| (p.coords()[0], p.coords()[1]))
        .collect()
}

fn triple_count(n: usize) -> u128 {
    let n = n as u128;
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Every circle through some three distinct non-collinear points of `P`.
pub fn determined_circles(points: &PointSet, budget: u64) -> Result<BTreeSet<Sphere>> {
    let space = points.space();
    require_plane(space)?;
    Space::check_budget(triple_count(points.len()), budget)?;
    let f = space.field();
    let coords = plane_coords(points);
    let n = coords.len();
    let found: Vec<BTreeSet<(u64, u64, u64)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut local = BTreeSet::new();
            for j in i + 1..n {
                for k in j + 1..n {
                    if let Some(c) = solve_circle_raw(f, coords[i], coords[j], coords[k]) {
                        local.insert(c);
                    }
                }
            }
            local
        })
        .collect();
    let mut merged = BTreeSet::new();
    for set in found {
        merged.extend(set);
    }
    Ok(merged
        .into_iter()
        .map(|(a, b, lambda)| {
            let center = space.point(&[a, b]).expect("canonical residues");
            Sphere::from_raw(center, lambda)
        })
        .collect())
}

/// One circle from the full `q^3` scan together with the indices (into
/// `P`) of the points it contains.
struct ScannedCircle {
    sphere: Sphere,
    members: Vec<u32>,
}

/// Runs `visit` on every circle of the plane, grouping `P` by distance to
/// each center once.
fn scan_circles<T: Send>(
    points: &PointSet,
    budget: u64,
    visit: impl Fn(ScannedCircle) -> Option<T> + Sync,
) -> Result<Vec<T>> {
    let space = points.space();
    require_plane(space)?;
    Space::check_budget(space.sphere_count(), budget)?;
    let q = space.q();
    let slice = points.as_slice();
    let centers: Vec<Point> = space.points(u64::MAX)?.collect();
    let per_center: Vec<Vec<T>> = centers
        .par_iter()
        .map(|center| {
            let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); q as usize];
            for (i, p) in slice.iter().enumerate() {
                buckets[center.distance_raw(p) as usize].push(i as u32);
            }
            buckets
                .into_iter()
                .enumerate()
                .filter_map(|(lambda, members)| {
                    visit(ScannedCircle {
                        sphere: Sphere::from_raw(center.clone(), lambda as u64),
                        members,
                    })
                })
                .collect()
        })
        .collect();
    Ok(per_center.into_iter().flatten().collect())
}

/// All circles containing at least `t` points of `P`, in center-major order.
pub fn rich_circles(points: &PointSet, t: usize, budget: u64) -> Result<Vec<Sphere>> {
    scan_circles(points, budget, |c| (c.members.len() >= t).then_some(c.sphere))
}

/// The incidence-based view of circles used by [`check_beck`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleCensus {
    /// Circles with at most 2 points of `P`.
    pub poor: u64,
    /// Circles with at least 3 points of `P`.
    pub rich: u64,
    /// Rich circles whose points of `P` contain a non-collinear triple.
    pub rich_spanning: BTreeSet<Sphere>,
    /// Rich circles whose points of `P` are all collinear.
    pub rich_collinear: Vec<Sphere>,
}

/// Classifies every circle of the plane by how it meets `P`.
pub fn circle_census(points: &PointSet, budget: u64) -> Result<CircleCensus> {
    let f = points.space().field();
    let coords = plane_coords(points);
    enum Class {
        Poor,
        Spanning(Sphere),
        Collinear(Sphere),
    }
    let classes = scan_circles(points, budget, |c| {
        if c.members.len() <= 2 {
            return Some(Class::Poor);
        }
        let pts: Vec<(u64, u64)> = c.members.iter().map(|&i| coords[i as usize]).collect();
        // Members are distinct, so the set is collinear iff every point is
        // collinear with the first two.
        let all_collinear = pts[2..]
            .iter()
            .all(|&r| collinear_raw(f, pts[0], pts[1], r));
        Some(if all_collinear {
            Class::Collinear(c.sphere)
        } else {
            Class::Spanning(c.sphere)
        })
    })?;
    let mut census = CircleCensus {
        poor: 0,
        rich: 0,
        rich_spanning: BTreeSet::new(),
        rich_collinear: Vec::new(),
    };
    for class in classes {
        match class {
            Class::Poor => census.poor += 1,
            Class::Spanning(s) => {
                census.rich += 1;
                census.rich_spanning.insert(s);
            }
            Class::Collinear(s) => {
                census.rich += 1;
                census.rich_collinear.push(s);
            }
        }
    }
    Ok(census)
}

/// Determined-circle count against the `4q^3/9` lower bound for `|P| >= 5q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeckReport {
    pub q: u64,
    pub point_count: u64,
    /// `q^3`, every `(center, lambda)` including `lambda = 0`.
    pub total_circles: u64,
    /// `q^2 (q - 1)`, circles with `lambda != 0`.
    pub total_nondegenerate_circles: u64,
    pub determined_count: u64,
    /// Determined circles with `lambda != 0`.
    pub determined_nondegenerate: u64,
    /// `ceil(4 q^3 / 9)`.
    pub bound: u64,
    /// Circles with at most 2 points of `P`.
    pub poor_circle_count: u64,
    /// `9 * poor < 5 q^3`, the intermediate bound behind the main one.
    pub poor_bound_holds: bool,
    /// Circles with at least 3 points of `P`.
    pub rich_count: u64,
    /// Rich circles whose points of `P` are collinear (always `lambda = 0`).
    pub rich_collinear_count: u64,
    /// The triple enumeration and the incidence scan found the same set.
    pub cross_check_agrees: bool,
    pub hypothesis_met: bool,
    pub conclusion_holds: bool,
}

impl BeckReport {
    pub fn status(&self) -> Status {
        if !self.cross_check_agrees {
            return Status::Violated;
        }
        if !self.hypothesis_met {
            return Status::Vacuous;
        }
        if self.conclusion_holds && self.poor_bound_holds {
            Status::Holds
        } else {
            Status::Violated
        }
    }
}

/// `ceil(4 q^3 / 9)`.
pub fn beck_bound(q: u64) -> u64 {
    (4 * q.pow(3)).div_ceil(9)
}

/// Counts circles determined by `P` by triple enumeration and cross-checks
/// the result against a full scan of all `q^3` circles.
pub fn check_beck(points: &PointSet, budget: u64) -> Result<BeckReport> {
    let space = points.space();
    require_plane(space)?;
    let q = space.q();
    let determined = determined_circles(points, budget)?;
    let census = circle_census(points, budget)?;
    let total = q.pow(3);
    let determined_count = determined.len() as u64;
    let collinear_only_degenerate = census
        .rich_collinear
        .iter()
        .all(|s| s.lambda().is_zero());
    let poor_circle_count = census.poor;
    Ok(BeckReport {
        q,
        point_count: points.len() as u64,
        total_circles: total,
        total_nondegenerate_circles: q * q * (q - 1),
        determined_count,
        determined_nondegenerate: determined
            .iter()
            .filter(|s| !s.lambda().is_zero())
            .count() as u64,
        bound: beck_bound(q),
        poor_circle_count,
        poor_bound_holds: 9 * poor_circle_count < 5 * total,
        rich_count: census.rich,
        rich_collinear_count: census.rich_collinear.len() as u64,
        cross_check_agrees: determined == census.rich_spanning && collinear_only_degenerate,
        hypothesis_met: points.len() as u64 >= 5 * q,
        conclusion_holds: determined_count >= beck_bound(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::geometry::DEFAULT_BUDGET;

    fn space(q: u64, d: usize) -> Space {
        Space::new(FieldSpec::new(q).unwrap(), d).unwrap()
    }

    fn full(q: u64, d: usize) -> PointSet {
        PointSet::full(space(q, d), DEFAULT_BUDGET).unwrap()
    }

    fn r(n: u64, d: u64) -> Ratio<u64> {
        Ratio::new(n, d)
    }

    #[test]
    fn main_check_on_full_plane_has_zero_deviation() {
        let s = space(3, 2);
        let report =
            check_main(&full(3, 2), &SphereFamily::all(s, DEFAULT_BUDGET).unwrap()).unwrap();
        assert_eq!(report.incidences, 81);
        assert_eq!(report.main_term_num, BigInt::from(243));
        assert_eq!(report.main_term_den, 3);
        assert!(report.scaled_deviation.is_zero());
        assert_eq!(report.theta, 0.0);
        assert_eq!(report.status, Status::Holds);
    }

    #[test]
    fn empty_input_is_vacuous() {
        let s = space(5, 2);
        let all = SphereFamily::all(s, DEFAULT_BUDGET).unwrap();
        let report = check_main(&PointSet::empty(s), &all).unwrap();
        assert_eq!(report.status, Status::Vacuous);
        assert_eq!(report.incidences, 0);
    }

    #[test]
    fn single_sphere_through_its_own_points() {
        // Worst case for the bound: every point lies on the one sphere.
        let s = space(7, 2);
        let c = Sphere::new(s.origin(), s.field().one()).unwrap();
        let p = PointSet::new(s, c.points(DEFAULT_BUDGET).unwrap()).unwrap();
        let report = check_main(&p, &SphereFamily::new(s, [c]).unwrap()).unwrap();
        assert_eq!(report.incidences, 8);
        assert_eq!(report.status, Status::Holds);
        assert!(report.theta > 0.0 && report.theta < 1.0);
    }

    #[test]
    fn status_combination() {
        use Status::*;
        assert_eq!(Holds.combine(Vacuous), Holds);
        assert_eq!(Vacuous.combine(Vacuous), Vacuous);
        assert_eq!(Holds.combine(Violated), Violated);
    }

    #[test]
    fn pinned_set_examples() {
        let s = space(3, 2);
        let p = full(3, 2);
        for y in p.iter() {
            assert_eq!(pinned_set(&p, y).unwrap().len(), 3);
        }
        let y = s.point(&[1, 2]).unwrap();
        let single = PointSet::new(s, [y.clone()]).unwrap();
        let only = pinned_set(&single, &y).unwrap();
        assert_eq!(only.into_iter().map(|e| e.value()).collect::<Vec<_>>(), vec![0]);

        let s5 = space(5, 2);
        let axis = PointSet::new(s5, (0..5).map(|t| s5.point(&[t, 0]).unwrap())).unwrap();
        let set: Vec<u64> = pinned_set(&axis, &s5.origin())
            .unwrap()
            .into_iter()
            .map(|e| e.value())
            .collect();
        assert_eq!(set, vec![0, 1, 4]);
    }

    #[test]
    fn pinned_cover_examples() {
        let s = space(3, 2);
        let p = full(3, 2);
        let cover = pinned_cover(&p, &s.origin()).unwrap();
        assert_eq!(cover.len(), 3);
        assert_eq!(count_incidences(&p, &cover, Engine::Naive).unwrap(), 9);

        let y = s.point(&[2, 2]).unwrap();
        let single = PointSet::new(s, [y.clone()]).unwrap();
        let cover = pinned_cover(&single, &y).unwrap();
        assert_eq!(cover.len(), 1);
        assert!(cover.iter().next().unwrap().lambda().is_zero());

        let s5 = space(5, 2);
        let axis = PointSet::new(s5, (0..5).map(|t| s5.point(&[t, 0]).unwrap())).unwrap();
        let cover = pinned_cover(&axis, &s5.origin()).unwrap();
        assert_eq!(cover.len(), 3);
        let per: Vec<u64> = cover
            .iter()
            .map(|c| axis.iter().filter(|p| c.contains(p).unwrap()).count() as u64)
            .collect();
        assert_eq!(per, vec![1, 2, 2]);
        assert_eq!(count_incidences(&axis, &cover, Engine::Bucketed).unwrap(), 5);
    }

    #[test]
    fn pinned_average_full_space() {
        for (q, d) in [(3, 2), (5, 2), (5, 3)] {
            let report = check_pinned_average(&full(q, d), r(1, 2)).unwrap();
            assert_eq!(report.average, Some(Ratio::from_integer(q)));
            assert!(report.hypothesis_met);
            assert!(report.conclusion_holds);
            assert_eq!(report.status(), Status::Holds);
        }
    }

    #[test]
    fn pinned_average_threshold_is_exact() {
        // |P| >= 2 (1/2)^(1/2) 13^(3/2) ~ 66.29 at eps = 1/2, q = 13, d = 2.
        let s = space(13, 2);
        let take = |n| PointSet::new(s, s.points(DEFAULT_BUDGET).unwrap().take(n)).unwrap();
        assert!(!check_pinned_average(&take(66), r(1, 2)).unwrap().hypothesis_met);
        assert!(check_pinned_average(&take(67), r(1, 2)).unwrap().hypothesis_met);
        let small = check_pinned_average(&take(5), r(1, 2)).unwrap();
        assert!(!small.hypothesis_met);
        assert_eq!(small.status(), Status::Vacuous);
    }

    #[test]
    fn pinned_fraction_examples() {
        let report = check_pinned_fraction(&full(5, 2), r(4, 5)).unwrap();
        assert!(report.hypothesis_met);
        assert!(report.conclusion_holds);
        assert_eq!(report.qualifying_pins, 25);

        let s = space(13, 2);
        let few = PointSet::new(s, s.points(DEFAULT_BUDGET).unwrap().take(10)).unwrap();
        assert!(!check_pinned_fraction(&few, r(1, 2)).unwrap().hypothesis_met);
    }

    #[test]
    fn pinned_fraction_threshold_is_exact() {
        // alpha = 1/2, q = 13, d = 2: |P|^2 >= 12 * 13^3 = 26364, so |P| >= 163.
        let s = space(13, 2);
        let take = |n| PointSet::new(s, s.points(DEFAULT_BUDGET).unwrap().take(n)).unwrap();
        assert!(!check_pinned_fraction(&take(162), r(1, 2)).unwrap().hypothesis_met);
        assert!(check_pinned_fraction(&take(163), r(1, 2)).unwrap().hypothesis_met);
    }

    #[test]
    fn pinned_parameters_must_be_proper_fractions() {
        let p = full(3, 2);
        assert!(matches!(
            check_pinned_average(&p, r(3, 2)),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(check_pinned_average(&p, r(1, 1)).is_err());
        assert!(check_pinned_fraction(&p, r(0, 1)).is_err());
    }

    #[test]
    fn empty_point_set_pinned_report() {
        let report = check_pinned_average(&PointSet::empty(space(5, 2)), r(1, 2)).unwrap();
        assert_eq!(report.average, None);
        assert_eq!(report.status(), Status::Vacuous);
    }

    #[test]
    fn determined_circles_of_a_line_is_empty() {
        let s = space(7, 2);
        let line = PointSet::new(s, (0..7).map(|t| s.point(&[t, (3 * t + 1) % 7]).unwrap()))
            .unwrap();
        assert!(determined_circles(&line, DEFAULT_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn determined_circles_of_a_circle_is_itself() {
        let s = space(7, 2);
        let c = Sphere::new(s.point(&[2, 3]).unwrap(), s.field().elem(5)).unwrap();
        let p = PointSet::new(s, c.points(DEFAULT_BUDGET).unwrap()).unwrap();
        assert_eq!(p.len(), 8);
        let found = determined_circles(&p, DEFAULT_BUDGET).unwrap();
        assert_eq!(found.into_iter().collect::<Vec<_>>(), vec![c]);
    }

    #[test]
    fn full_plane_determines_everything_at_five() {
        let found = determined_circles(&full(5, 2), DEFAULT_BUDGET).unwrap();
        assert_eq!(found.len(), 125);
    }

    #[test]
    fn plane_only_checks_reject_space() {
        let p = full(3, 3);
        assert_eq!(determined_circles(&p, DEFAULT_BUDGET), Err(Error::RequiresPlane(3)));
        assert_eq!(rich_circles(&p, 3, DEFAULT_BUDGET), Err(Error::RequiresPlane(3)));
        assert_eq!(check_beck(&p, DEFAULT_BUDGET), Err(Error::RequiresPlane(3)));
    }

    #[test]
    fn determined_circles_respects_budget() {
        let p = full(5, 2);
        assert!(matches!(
            determined_circles(&p, 100),
            Err(Error::BudgetExceeded { needed: 2300, budget: 100 })
        ));
    }

    #[test]
    fn rich_circle_examples() {
        let p = full(5, 2);
        assert_eq!(rich_circles(&p, 0, DEFAULT_BUDGET).unwrap().len(), 125);
        assert_eq!(rich_circles(&p, 3, DEFAULT_BUDGET).unwrap().len(), 125);
        assert_eq!(rich_circles(&p, 10, DEFAULT_BUDGET).unwrap().len(), 0);
        let empty = PointSet::empty(space(5, 2));
        assert_eq!(rich_circles(&empty, 0, DEFAULT_BUDGET).unwrap().len(), 125);
        assert_eq!(rich_circles(&empty, 1, DEFAULT_BUDGET).unwrap().len(), 0);
    }

    #[test]
    fn beck_bound_values() {
        assert_eq!(beck_bound(5), 56);
        assert_eq!(beck_bound(7), 153);
        assert_eq!(beck_bound(3), 12);
    }

    #[test]
    fn beck_full_planes() {
        let r5 = check_beck(&full(5, 2), DEFAULT_BUDGET).unwrap();
        assert_eq!((r5.determined_count, r5.bound), (125, 56));
        assert_eq!(r5.status(), Status::Holds);
        let r7 = check_beck(&full(7, 2), DEFAULT_BUDGET).unwrap();
        assert_eq!((r7.determined_count, r7.bound), (294, 153));
        assert_eq!(r7.determined_nondegenerate, 294);
        assert!(r7.cross_check_agrees);
        assert_eq!(r7.status(), Status::Holds);
    }

    #[test]
    fn beck_small_set_is_vacuous() {
        let s = space(5, 2);
        let p = PointSet::new(s, s.points(DEFAULT_BUDGET).unwrap().step_by(2).take(10)).unwrap();
        let report = check_beck(&p, DEFAULT_BUDGET).unwrap();
        assert!(!report.hypothesis_met);
        assert_eq!(report.point_count, 10);
        assert_eq!(report.status(), Status::Vacuous);
    }

    #[test]
    fn collinear_rich_circles_are_degenerate() {
        // Five points of the isotropic line y = 2x through the origin at
        // q = 5: every lambda = 0 circle centered on that line holds them
        // all, yet none is determined.
        let s = space(5, 2);
        let line = PointSet::new(s, (0..5).map(|t| s.point(&[t, (2 * t) % 5]).unwrap())).unwrap();
        let report = check_beck(&line, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.determined_count, 0);
        assert_eq!(report.rich_collinear_count, 5);
        assert!(report.cross_check_agrees);
    }
}
