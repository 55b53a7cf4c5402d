//! Seeded point-set and sphere-family generators.
//!
//! All randomness comes from ChaCha8 seeded with the run's 64-bit seed, and
//! sampling without replacement goes through `rand::seq::index::sample`,
//! which uses 32-bit indices whenever the population fits. Generated sets
//! are therefore identical across platforms for a given seed.

use std::fmt;
use std::str::FromStr;

use fq_incidence::{PointSet, Space, Sphere, SphereFamily, DEFAULT_BUDGET};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

/// The generator used for every seeded run.
pub type RunRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> RunRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of a generated point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorShape {
    /// `n` points sampled uniformly without replacement.
    Random(usize),
    /// Every point of `F_q^d`.
    Full,
    /// The `q` points of a randomly chosen line (plane only).
    Line,
    /// `n` points of a randomly chosen circle with `lambda != 0` (plane
    /// only).
    CircleSubset(usize),
    /// `{0..a} x {0..b}` (plane only).
    Grid(u64, u64),
}

impl FromStr for GeneratorShape {
    type Err = CliError;

    /// Accepts `random:N`, `full`, `line`, `circle:N` and `grid:AxB`.
    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("unrecognized shape {s:?}"));
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let count = |a: Option<&str>| -> Result<usize, CliError> {
            a.ok_or_else(bad)?.parse().map_err(|_| bad())
        };
        match name {
            "full" if arg.is_none() => Ok(GeneratorShape::Full),
            "line" if arg.is_none() => Ok(GeneratorShape::Line),
            "random" => Ok(GeneratorShape::Random(count(arg)?)),
            "circle" => Ok(GeneratorShape::CircleSubset(count(arg)?)),
            "grid" => {
                let (a, b) = arg.and_then(|a| a.split_once('x')).ok_or_else(bad)?;
                Ok(GeneratorShape::Grid(
                    a.parse().map_err(|_| bad())?,
                    b.parse().map_err(|_| bad())?,
                ))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GeneratorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorShape::Random(n) => write!(f, "random:{n}"),
            GeneratorShape::Full => write!(f, "full"),
            GeneratorShape::Line => write!(f, "line"),
            GeneratorShape::CircleSubset(n) => write!(f, "circle:{n}"),
            GeneratorShape::Grid(a, b) => write!(f, "grid:{a}x{b}"),
        }
    }
}

fn require_plane(space: Space, shape: &GeneratorShape) -> Result<(), CliError> {
    if space.dim() != 2 {
        return Err(CliError::Usage(format!(
            "shape {shape} requires d = 2, got d = {}",
            space.dim()
        )));
    }
    Ok(())
}

fn infeasible(what: impl fmt::Display) -> CliError {
    CliError::Usage(format!("infeasible size: {what}"))
}

/// Draws `n` distinct indices below `total`.
fn sample_indices(rng: &mut RunRng, total: u128, n: usize) -> Result<Vec<u64>, CliError> {
    if n as u128 > total {
        return Err(infeasible(format!("{n} items requested from {total}")));
    }
    if total > DEFAULT_BUDGET as u128 {
        return Err(CliError::Usage(format!(
            "population of {total} exceeds the enumeration budget"
        )));
    }
    Ok(sample(rng, total as usize, n)
        .iter()
        .map(|i| i as u64)
        .collect())
}

/// Builds a point set. Deterministic in `(rng state, shape, space)`.
pub fn generate(
    space: Space,
    shape: &GeneratorShape,
    rng: &mut RunRng,
) -> Result<PointSet, CliError> {
    let q = space.q();
    let points = match shape {
        GeneratorShape::Random(n) => {
            let idx = sample_indices(rng, space.point_count(), *n)?;
            PointSet::new(space, idx.into_iter().map(|i| space.point_at(i)))?
        }
        GeneratorShape::Full => PointSet::full(space, DEFAULT_BUDGET)?,
        GeneratorShape::Line => {
            require_plane(space, shape)?;
            let base = (rng.random_range(0..q), rng.random_range(0..q));
            // q + 1 directions: (1, k) for k < q, and (0, 1).
            let k = rng.random_range(0..=q);
            let dir = if k < q { (1, k) } else { (0, 1) };
            let f = space.field();
            PointSet::new(
                space,
                (0..q).map(|t| {
                    let x = f.elem(base.0 + t * dir.0).value();
                    let y = f.elem(base.1 + t * dir.1).value();
                    space.point(&[x, y]).expect("canonical")
                }),
            )?
        }
        GeneratorShape::CircleSubset(n) => {
            require_plane(space, shape)?;
            let center = space.point_at(rng.random_range(0..q * q));
            let lambda = space.field().elem(rng.random_range(1..q));
            let circle = Sphere::new(center, lambda)?;
            let members = circle.points(DEFAULT_BUDGET)?;
            let mut idx = sample_indices(rng, members.len() as u128, *n)
                .map_err(|_| infeasible(format!("{n} points requested from {circle} of size {}", members.len())))?;
            idx.sort_unstable();
            PointSet::new(space, idx.into_iter().map(|i| members[i as usize].clone()))?
        }
        GeneratorShape::Grid(a, b) => {
            require_plane(space, shape)?;
            if *a > q || *b > q {
                return Err(infeasible(format!("grid {a}x{b} exceeds q = {q}")));
            }
            PointSet::new(
                space,
                (0..*a).flat_map(|x| (0..*b).map(move |y| space.point(&[x, y]).expect("canonical"))),
            )?
        }
    };
    Ok(points)
}

/// `n` spheres sampled uniformly without replacement from all `q^(d+1)`.
pub fn random_spheres(space: Space, n: usize, rng: &mut RunRng) -> Result<SphereFamily, CliError> {
    let q = space.q();
    let idx = sample_indices(rng, space.sphere_count(), n)?;
    let f = space.field();
    Ok(SphereFamily::new(
        space,
        idx.into_iter()
            .map(|i| Sphere::new(space.point_at(i / q), f.elem(i % q)).expect("same field")),
    )?)
}
