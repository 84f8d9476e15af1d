//! Exact combinatorics and geometry around the simplex category Δ.
//!
//! * [`simplex`]: ordinals, monotone maps, composition and enumeration.
//! * [`promonoidal`]: the Cartesian kernel `P`, unit `J`, `η`, `δ`, `Θ`,
//!   and coherence instances.
//! * [`hadamard`]: pointwise products `α ⊠ β` and the contraction `H^n`.
//! * [`realization`]: exact barycentric geometry of `|H^n|` on prism cells.
//! * [`suites`]: exhaustive verification suites producing [`report`]s.

pub mod error;
pub mod hadamard;
pub mod promonoidal;
pub mod rational;
pub mod realization;
pub mod report;
pub mod simplex;
pub mod suites;

pub use error::{Error, Result};
pub use rational::Rational;
pub use simplex::{MonotoneMap, Ordinal};
