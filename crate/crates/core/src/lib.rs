//! Exact computations around the minimal nilpotent orbit of so₈, its quiver
//! presentation, triality and the Gelfand–Graev action.

pub mod affinize;
pub mod bridge;
pub mod error;
pub mod exact_linalg;
pub mod orthogonal;
pub mod quiver;
pub mod suites;
pub mod trialgebra;
pub mod weylact;

pub use affinize::BPoint;
pub use bridge::IsoMap;
pub use error::{Error, Result};
pub use exact_linalg::{FourVector, Mat, Scalar, Vector};
pub use orthogonal::Bivector;
pub use quiver::{HElement, QuiverPoint};
pub use suites::Report;
pub use trialgebra::{Perm3, WindowElement};

/// The seeded generator used by every sampler.
pub type Rng = rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
