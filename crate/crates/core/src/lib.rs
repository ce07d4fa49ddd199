//! Microwave-to-optical frequency conversion in metastable hydrogen.
//!
//! A microwave field at the 2s₁/₂–2p₃/₂ fine-structure splitting (or the
//! 2s₁/₂–2p₁/₂ Lamb shift) transfers stored 2s excitation into a 2p mode,
//! which radiates at ~122 nm. The crate carries the chain from hydrogenic
//! dipole matrix elements, through the single-atom stimulated intensity, to
//! the orientation-averaged conversion efficiency of a gas-filled vessel.
//!
//! Everything is evaluated in Gaussian CGS; [`units`] converts at the edges.

pub mod config;
pub mod coupling;
pub mod dynamics;
pub mod ensemble;
pub mod error;
pub mod hydrogen;
pub mod quadrature;
pub mod scenario;
pub mod table;
pub mod units;

pub use error::{Error, Result};
