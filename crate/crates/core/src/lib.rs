//! Exact point-sphere incidence geometry over odd prime fields.
//!
//! The crate provides prime-field arithmetic ([`field`]), points and spheres
//! under the quadratic distance ([`geometry`]), three independent incidence
//! counters together with representation functions and additive energy
//! ([`incidence`]), and exact checkers for the incidence bound, the pinned
//! distance statements and the circle-determination bound ([`theorems`]).

pub mod error;
pub mod field;
pub mod geometry;
pub mod incidence;
pub mod theorems;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use geometry::{circle_through, collinear, LiftedVector, Point, Space, Sphere, DEFAULT_BUDGET};
pub use incidence::{
    additive_energy, count_incidences, paraboloid_difference_count, rep_difference, rep_sum,
    CountMode, EnergySide, Engine, PointSet, RepFunction, SphereFamily,
};
pub use theorems::{
    beck_bound, check_beck, check_main, check_main_with, check_pinned_average,
    check_pinned_fraction, circle_census, determined_circles, pinned_cover, pinned_set,
    rich_circles, BeckReport, CircleCensus, IncidenceReport, PinnedKind, PinnedReport, Status,
};

pub use num_bigint::BigInt;
pub use num_rational::Ratio;
