use thiserror::Error;

/// Errors produced by kinematics construction, matrix assembly, the
/// post-selection map, and spectral analysis.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("scattering angle theta = {theta} lies outside the open interval (0, pi)")]
    InvalidAngle { theta: f64 },
    #[error("momentum parameter mu = {mu} must be finite and positive")]
    InvalidMu { mu: f64 },
    #[error("center-of-mass energy {sqrt_s} is below the production threshold {threshold}")]
    BelowThreshold { sqrt_s: f64, threshold: f64 },
    #[error("momentum is off shell: |E^2 - p^2 - m^2| = {residual:.3e}")]
    OffShell { residual: f64 },
    #[error("photon momentum is not lightlike: k^2 = {k_squared:.3e}")]
    NotLightlike { k_squared: f64 },
    #[error("amplitude matrix is not real after global phase removal: residual {residual:.3e}")]
    RealnessViolation { residual: f64 },
    #[error("amplitude matrix violates its structural template: {detail}")]
    TemplateViolation { detail: String },
    #[error("invalid helicity state: {reason}")]
    InvalidState { reason: String },
    #[error("post-selected branch has vanishing probability (weight {weight:.3e})")]
    NullOutcome { weight: f64, step: Option<usize> },
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("structural parameter B = {b:.3e} is too small for the closed-form eigenvectors")]
    BSingular { b: f64 },
    #[error("no strictly dominant eigenvalue modulus")]
    DegenerateSpectrum,
    #[error("eigenvector basis is ill-conditioned (condition number {cond:.3e})")]
    IllConditioned { cond: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
