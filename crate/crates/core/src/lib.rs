//! Computational engine for central measures on Littelmann-path graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootdata`]: Cartan data, weights and the Weyl group, in exact arithmetic.
//! * [`chars`]: characters as weight multisets and their evaluations.
//! * [`paths`]: piecewise-linear paths, crystals, growth graphs and Pitman transforms.
//! * [`polytope`]: the weight polytope, its dominant faces and point location.
//! * [`boundary`]: boundary parameters, drifts, central measures and harmonicity.
//! * [`montecarlo`]: samplers, law-of-large-numbers checks and exact equality in law.
//! * [`verify`]: the acceptance checks shared by the test-suite and the CLI.

pub mod boundary;
pub mod chars;
mod error;
pub mod lp;
pub mod model;
pub mod montecarlo;
pub mod paths;
pub mod polytope;
pub mod rational;
pub mod rootdata;
pub mod verify;
mod weight;

pub use error::{Error, Result};
pub use model::{Caps, Model};
pub use rational::Q;
pub use weight::{RatWeight, Weight, MAX_RANK};
