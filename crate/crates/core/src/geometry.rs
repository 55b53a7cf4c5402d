//! Points, the quadratic distance, spheres, and the lifted paraboloid.
//!
//! The distance between `x` and `y` in `F_q^d` is the quadratic form
//! `(x_1 - y_1)^2 + ... + (x_d - y_d)^2`. It is not a metric: it can vanish
//! for distinct points. A sphere is identified by its parameters
//! `(center, lambda)`; `lambda = 0` is a sphere like any other.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Default cap on the number of items a single exhaustive enumeration may
/// visit.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// The ambient space `F_q^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Space {
    field: FieldSpec,
    dim: usize,
}

impl Space {
    pub fn new(field: FieldSpec, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Space { field, dim })
    }

    /// The plane `F_q^2`.
    pub fn plane(field: FieldSpec) -> Self {
        Space { field, dim: 2 }
    }

    #[inline]
    pub fn field(self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.dim
    }

    #[inline]
    pub fn q(self) -> u64 {
        self.field.order()
    }

    /// `q^d`, exact.
    pub fn point_count(self) -> u128 {
        (self.q() as u128).pow(self.dim as u32)
    }

    /// `q^(d+1)`: the number of spheres, counting every `(center, lambda)`.
    pub fn sphere_count(self) -> u128 {
        self.point_count() * self.q() as u128
    }

    /// The space `F_q^(d+1)` that holds lifted vectors.
    pub fn lifted(self) -> Space {
        Space {
            field: self.field,
            dim: self.dim + 1,
        }
    }

    pub(crate) fn check_budget(needed: u128, budget: u64) -> Result<()> {
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(())
    }

    pub(crate) fn same(self, other: Space) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch {
                q1: self.q(),
                d1: self.dim,
                q2: other.q(),
                d2: other.dim,
            });
        }
        Ok(())
    }

    /// Builds a point from canonical residues.
    pub fn point(self, coords: &[u64]) -> Result<Point> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        for &c in coords {
            self.field.canonical(c)?;
        }
        Ok(Point {
            space: self,
            coords: coords.to_vec(),
        })
    }

    /// Builds a point, reducing arbitrary signed integers mod `q`.
    pub fn point_reduced(self, coords: &[i64]) -> Result<Point> {
        let reduced: Vec<u64> = coords
            .iter()
            .map(|&c| self.field.elem_i64(c).value())
            .collect();
        self.point(&reduced)
    }

    pub fn origin(self) -> Point {
        Point {
            space: self,
            coords: vec![0; self.dim],
        }
    }

    /// The point with lexicographic index `index` (first coordinate most
    /// significant).
    pub fn point_at(self, mut index: u64) -> Point {
        let q = self.q();
        let mut coords = vec![0; self.dim];
        for c in coords.iter_mut().rev() {
            *c = index % q;
            index /= q;
        }
        Point {
            space: self,
            coords,
        }
    }

    /// Every point of the space in lexicographic order.
    pub fn points(self, budget: u64) -> Result<impl Iterator<Item = Point>> {
        let n = self.point_count();
        Self::check_budget(n, budget)?;
        Ok((0..n as u64).map(move |i| self.point_at(i)))
    }

    /// Every sphere `(center, lambda)`, centers in lexicographic order and
    /// `lambda` varying fastest.
    pub fn spheres(self, budget: u64) -> Result<impl Iterator<Item = Sphere>> {
        Self::check_budget(self.sphere_count(), budget)?;
        let q = self.q();
        Ok(self.points(u64::MAX)?.flat_map(move |center| {
            (0..q).map(move |lambda| Sphere {
                center: center.clone(),
                lambda,
            })
        }))
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.q(), self.dim)
    }
}

/// A point of `F_q^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    space: Space,
    coords: Vec<u64>,
}

impl Point {
    #[inline]
    pub fn space(&self) -> Space {
        self.space
    }

    #[inline]
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> FieldElement {
        self.space.field.elem(self.coords[i])
    }

    /// Lexicographic index, the inverse of [`Space::point_at`].
    pub fn index(&self) -> u64 {
        let q = self.space.q();
        self.coords.iter().fold(0, |acc, &c| acc * q + c)
    }

    /// `||self - other||`.
    pub fn distance(&self, other: &Point) -> Result<FieldElement> {
        self.space.same(other.space)?;
        Ok(self.space.field.elem(self.distance_raw(other)))
    }

    #[inline]
    pub(crate) fn distance_raw(&self, other: &Point) -> u64 {
        distance_raw(self.space.field, &self.coords, &other.coords)
    }

    /// `(x_1, ..., x_d, x_1^2 + ... + x_d^2)`.
    pub fn lift(&self) -> LiftedVector {
        let f = self.space.field;
        let norm = self
            .coords
            .iter()
            .fold(0, |acc, &c| f.add_raw(acc, f.mul_raw(c, c)));
        let mut coords = self.coords.clone();
        coords.push(norm);
        LiftedVector { field: f, coords }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[inline]
pub(crate) fn distance_raw(f: FieldSpec, x: &[u64], y: &[u64]) -> u64 {
    x.iter().zip(y).fold(0, |acc, (&a, &b)| {
        let diff = f.sub_raw(a, b);
        f.add_raw(acc, f.mul_raw(diff, diff))
    })
}

/// The sphere `{x : ||x - center|| = lambda}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sphere {
    center: Point,
    lambda: u64,
}

impl Sphere {
    pub fn new(center: Point, lambda: FieldElement) -> Result<Self> {
        let f = center.space.field;
        if lambda.field() != f {
            return Err(Error::FieldMismatch {
                left: f.order(),
                right: lambda.field().order(),
            });
        }
        Ok(Sphere {
            center,
            lambda: lambda.value(),
        })
    }

    pub(crate) fn from_raw(center: Point, lambda: u64) -> Self {
        debug_assert!(lambda < center.space.q());
        Sphere { center, lambda }
    }

    #[inline]
    pub fn center(&self) -> &Point {
        &self.center
    }

    #[inline]
    pub fn lambda(&self) -> FieldElement {
        self.center.space.field.elem(self.lambda)
    }

    #[inline]
    pub(crate) fn lambda_raw(&self) -> u64 {
        self.lambda
    }

    #[inline]
    pub fn space(&self) -> Space {
        self.center.space
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        self.center.space.same(p.space)?;
        Ok(self.contains_raw(p))
    }

    #[inline]
    pub(crate) fn contains_raw(&self, p: &Point) -> bool {
        self.center.distance_raw(p) == self.lambda
    }

    /// Materializes the sphere by scanning all of `F_q^d`.
    pub fn points(&self, budget: u64) -> Result<Vec<Point>> {
        Ok(self
            .space()
            .points(budget)?
            .filter(|p| self.contains_raw(p))
            .collect())
    }

    /// The vector `(center, -lambda)` of `F_q^(d+1)`. A point `p` lies on the
    /// sphere iff `(p, 0)` minus this vector lies on the paraboloid.
    pub fn lift(&self) -> LiftedVector {
        let f = self.center.space.field;
        let mut coords = self.center.coords.clone();
        coords.push(f.neg_raw(self.lambda));
        LiftedVector { field: f, coords }
    }
}

impl fmt::Display for Sphere {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({}, {})", self.center, self.lambda)
    }
}

/// A vector of `F_q^(d+1)`, the ambient group of the paraboloid
/// `A = {(a, a_1^2 + ... + a_d^2)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiftedVector {
    field: FieldSpec,
    coords: Vec<u64>,
}

impl LiftedVector {
    /// Needs at least two coordinates (`d >= 1`).
    pub fn new(field: FieldSpec, coords: &[u64]) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: coords.len(),
            });
        }
        for &c in coords {
            field.canonical(c)?;
        }
        Ok(LiftedVector {
            field,
            coords: coords.to_vec(),
        })
    }

    /// `(p, 0)` for a point `p`.
    pub fn embed(p: &Point) -> Self {
        let mut coords = p.coords.clone();
        coords.push(0);
        LiftedVector {
            field: p.space.field,
            coords,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// The base dimension `d` (one less than the vector length).
    pub fn base_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Membership in the paraboloid: last coordinate equals the sum of
    /// squares of the others.
    pub fn on_paraboloid(&self) -> bool {
        let (last, head) = self.coords.split_last().expect("non-empty");
        paraboloid_raw(self.field, head, *last)
    }

    pub fn try_sub(&self, other: &LiftedVector) -> Result<LiftedVector> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.order(),
                right: other.field.order(),
            });
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.len(),
                found: other.coords.len(),
            });
        }
        Ok(self.sub_unchecked(other))
    }

    pub(crate) fn sub_unchecked(&self, other: &LiftedVector) -> LiftedVector {
        let f = self.field;
        LiftedVector {
            field: f,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.sub_raw(a, b))
                .collect(),
        }
    }

    /// Whether `self - other` lies on the paraboloid, without allocating.
    #[inline]
    pub(crate) fn difference_on_paraboloid(&self, other: &LiftedVector) -> bool {
        let f = self.field;
        let d = self.coords.len() - 1;
        let norm = distance_raw(f, &self.coords[..d], &other.coords[..d]);
        norm == f.sub_raw(self.coords[d], other.coords[d])
    }
}

#[inline]
fn paraboloid_raw(f: FieldSpec, head: &[u64], last: u64) -> bool {
    let norm = head.iter().fold(0, |acc, &c| f.add_raw(acc, f.mul_raw(c, c)));
    norm == last
}

fn plane_coords(p: &Point) -> Result<(u64, u64)> {
    if p.space.dim != 2 {
        return Err(Error::RequiresPlane(p.space.dim));
    }
    Ok((p.coords[0], p.coords[1]))
}

/// Collinearity in the plane: `(x2-x1)(y3-y1) - (x3-x1)(y2-y1) = 0`.
///
/// A triple with a repeated point counts as collinear.
pub fn collinear(p1: &Point, p2: &Point, p3: &Point) -> Result<bool> {
    let a = plane_coords(p1)?;
    let b = plane_coords(p2)?;
    let c = plane_coords(p3)?;
    p1.space.same(p2.space)?;
    p1.space.same(p3.space)?;
    Ok(collinear_raw(p1.space.field, a, b, c))
}

#[inline]
pub(crate) fn collinear_raw(f: FieldSpec, a: (u64, u64), b: (u64, u64), c: (u64, u64)) -> bool {
    let lhs = f.mul_raw(f.sub_raw(b.0, a.0), f.sub_raw(c.1, a.1));
    let rhs = f.mul_raw(f.sub_raw(c.0, a.0), f.sub_raw(b.1, a.1));
    lhs == rhs
}

/// The unique circle through three distinct non-collinear points, or `None`
/// when the points are collinear or repeated.
pub fn circle_through(p1: &Point, p2: &Point, p3: &Point) -> Result<Option<Sphere>> {
    let a = plane_coords(p1)?;
    let b = plane_coords(p2)?;
    let c = plane_coords(p3)?;
    p1.space.same(p2.space)?;
    p1.space.same(p3.space)?;
    let space = p1.space;
    Ok(
        solve_circle_raw(space.field, a, b, c).map(|(cx, cy, lambda)| Sphere {
            center: Point {
                space,
                coords: vec![cx, cy],
            },
            lambda,
        }),
    )
}

/// Solves for `(a, b, lambda)` by subtracting the first circle equation from
/// the other two and applying Cramer's rule to the resulting 2x2 system
///
/// ```text
/// 2(x1-x2) a + 2(y1-y2) b = x1^2 + y1^2 - x2^2 - y2^2
/// 2(x1-x3) a + 2(y1-y3) b = x1^2 + y1^2 - x3^2 - y3^2
/// ```
///
/// whose determinant vanishes exactly on collinear (or repeated) triples.
pub(crate) fn solve_circle_raw(
    f: FieldSpec,
    (x1, y1): (u64, u64),
    (x2, y2): (u64, u64),
    (x3, y3): (u64, u64),
) -> Option<(u64, u64, u64)> {
    let two = 2 % f.order();
    let a11 = f.mul_raw(two, f.sub_raw(x1, x2));
    let a12 = f.mul_raw(two, f.sub_raw(y1, y2));
    let a21 = f.mul_raw(two, f.sub_raw(x1, x3));
    let a22 = f.mul_raw(two, f.sub_raw(y1, y3));
    let det = f.sub_raw(f.mul_raw(a11, a22), f.mul_raw(a12, a21));
    let det_inv = f.inv_raw(det)?;

    let norm = |x: u64, y: u64| f.add_raw(f.mul_raw(x, x), f.mul_raw(y, y));
    let n1 = norm(x1, y1);
    let r1 = f.sub_raw(n1, norm(x2, y2));
    let r2 = f.sub_raw(n1, norm(x3, y3));

    let a = f.mul_raw(f.sub_raw(f.mul_raw(r1, a22), f.mul_raw(a12, r2)), det_inv);
    let b = f.mul_raw(f.sub_raw(f.mul_raw(a11, r2), f.mul_raw(r1, a21)), det_inv);
    let lambda = distance_raw(f, &[x1, y1], &[a, b]);
    Some((a, b, lambda))
}
