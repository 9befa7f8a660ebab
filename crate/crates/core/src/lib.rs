//! Exact symbolic engine for the Cartan-invariance operators of spherical
//! principal series.
//!
//! The pipeline runs over split `sl_n`:
//!
//! * [`lie`]: Chevalley basis, Killing form, roots, Weyl group;
//! * [`uea`]: PBW normal ordering in `U(𝔤_ℂ)` with coefficients in `ℚ(i)[ν]`,
//!   center elements;
//! * [`hc`]: projection to `U(𝔞)`, Harish-Chandra image, the correction
//!   `b(z)` and the annihilating pair `(H_part, J)`;
//! * [`model`]: the `SL₂(ℝ)` spherical principal series on Fourier modes of
//!   the circle, used to check annihilation of `φ₀ ⊗ δ` end to end.

pub mod cli;
pub mod context;
pub mod error;
pub mod hc;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod nupoly;
pub mod scalar;
pub mod uea;

pub use error::{Error, Result};
pub use lie::{LieAlgebra, SpectralParameter};
pub use nupoly::NuPolynomial;
pub use uea::{PbwOrder, UeaElement};
