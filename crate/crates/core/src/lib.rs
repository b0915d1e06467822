//! Kunz–Waldi numerical semigroups: construction, principal matrices,
//! presentations, minimal free resolutions and the three-dimensional family.

pub mod cli;
pub mod error;
pub mod intmat;
pub mod kw2d;
pub mod kw3d;
pub mod poly;
pub mod presentation;
pub mod principal;
pub mod resolution;
pub mod semigroup;

pub use error::{Error, Result};
pub use kw2d::{KwCorners, KwMember, KwParams};
pub use semigroup::{GeneratorSet, NumericalSemigroup};
