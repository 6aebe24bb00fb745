//! Simplicity, equivalence and modular-group membership of the classified
//! representations, with brute-force oracles.

mod modular;
mod oracles;
mod qpoly;
pub mod sampling;
mod simplicity;

pub use modular::{deligne_check, delta, sl2z_flags, westbury_dims, DeligneOutcome, WestburyDims};
pub use oracles::{burnside_oracle, generated_algebra_dim, hom_space_dim};
pub use qpoly::{p_poly, p_value, q_closed, q_corner, q_oracle};
pub use simplicity::{classify, is_simple, vanishing_factors, ClassificationReport, ClassifyOptions, VanishingFactor};
