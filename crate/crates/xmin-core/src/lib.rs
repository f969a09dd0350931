//! Exact verification engine for the associative Grassmannian X_min of the
//! split octonions: Gaussian-rational arithmetic, the octonion algebra and its
//! calibration forms, Plücker geometry of Gr(3,7), the torus action and its
//! Białynicki-Birula decomposition.

pub mod actions;
pub mod error;
pub mod fixtures;
pub mod grassmann;
pub mod octonion;
pub mod report;
pub mod sample;
pub mod scalars;
pub mod torus;
pub mod verify;
pub mod xmin;

pub use error::XminError;
