//! Kronecker rank-k approximation of linear operators on matrix spaces.
//!
//! Provides the rearrangement/SVD baseline in Frobenius norm, an alternating
//! convex solver that targets the spectral norm directly, an implicit mode
//! for approximating operator inverses, and a seeded experiment harness with
//! text/CSV/JSON I/O behind a CLI.

pub mod asdp;
pub mod error;
pub mod experiments;
pub mod inverse;
pub mod io;
pub mod linalg;
pub mod rearrange;
pub mod rng;
pub mod subproblem;
pub mod svd_baseline;

pub use error::{Error, Result};
pub use linalg::{DMat, DVec};
pub use rearrange::KronSum;
