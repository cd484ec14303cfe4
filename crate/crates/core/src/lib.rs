//! Tree-level QED helicity amplitudes at fixed momenta, the nonlinear
//! post-selection map they induce on two-helicity-qubit states, and the
//! spectral machinery that characterizes the resulting entanglement
//! dynamics.
//!
//! The crate is organized bottom-up:
//!
//! * [`kinematics`] — center-of-mass momenta and Mandelstam invariants,
//! * [`dirac`] — explicit Dirac-matrix evaluation of the sixteen helicity
//!   amplitudes of each process (the numerical oracle everything else is
//!   assembled from),
//! * [`matrix`] — the real 4x4 amplitude matrix in the (RR, RL, LR, LL)
//!   basis, its structural parameters, and the associated POVM element,
//! * [`state`] — density operators, pure states, Bell states, concurrence,
//! * [`map`] — the normalized map `rho -> M rho M^T / tr` and its iteration,
//! * [`spectral`] — eigenstructure, closed-form Bhabha/Moller spectra,
//!   asymptote prediction, and the spectral-gap convergence bound,
//! * [`compton`] — oscillation diagnostics for the fermion-photon process.

pub mod compton;
pub mod dirac;
pub mod error;
pub mod kinematics;
pub mod map;
pub mod matrix;
pub mod spectral;
pub mod state;

pub use error::{Error, Result};
pub use kinematics::{ComConfiguration, FourVector, KinematicPoint, ProcessKind, MUON_MASS};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
/// Complex 4x4 matrix.
pub type CMat4 = nalgebra::Matrix4<C64>;
/// Complex 4-component vector.
pub type CVec4 = nalgebra::Vector4<C64>;
/// Real 4x4 matrix.
pub type RMat4 = nalgebra::Matrix4<f64>;
/// Real 4-component vector.
pub type RVec4 = nalgebra::Vector4<f64>;
