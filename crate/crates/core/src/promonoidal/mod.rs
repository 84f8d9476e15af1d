//! The Cartesian promonoidal structure on Δ: kernel `P`, unit `J`, the
//! identification `η`, the Hadamard-induced maps `δ` and `Θ`, and
//! instance-level coherence.

pub mod coherence;
pub mod day;
pub mod kernel;
pub mod truncation;

pub use coherence::{
    associator_instance, hexagon_check, pentagon_check, triangle_check, unitor_instance,
    AssociatorReport, Bracket, UnitorReport,
};
pub use day::{day_from_pair, day_level, day_to_pair, normalize_day, theta, DayClass};
pub use kernel::{
    delta, delta_naturality_check, eta, eta_inverse, kernel_act, normalize_kernel,
    relation_check, symmetry_instance, unit_element, KernelClass, UnitElement,
};
pub use truncation::{truncation_stability, TruncationReport};
