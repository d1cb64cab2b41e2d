use thiserror::Error;

/// Failures raised by the matrix calculus. Offending values are carried as `f64`
/// regardless of the scalar type the computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not unimodular: det = {det}")]
    NotUnimodular { det: f64 },
    #[error("similarity transform is singular: det = {det}")]
    SingularTransform { det: f64 },
    #[error("equi-diagonalization is numerically degenerate")]
    DegenerateEquidiagonalization,
    #[error("matrix is not equi-diagonal: |a11 - a22| = {diff}")]
    NotEquidiagonal { diff: f64 },
    #[error("off-diagonal signs contradict the trace class (a12*a21 = {product})")]
    InconsistentSigns { product: f64 },
    #[error("mirror radius must be nonzero")]
    ZeroRadius,
    #[error("mirror separation must be positive: d = {d}")]
    NonPositiveSeparation { d: f64 },
    #[error("cavity is unstable: d = {d} is not below 2R = {two_r}")]
    UnstableCavity { d: f64, two_r: f64 },
    #[error("conjugated chain keeps an imaginary part of {residual}")]
    ResidualImaginary { residual: f64 },
    #[error("mass must be positive: m = {m}")]
    NonPositiveMass { m: f64 },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotUnimodular { .. } => "NotUnimodular",
            Error::SingularTransform { .. } => "SingularTransform",
            Error::DegenerateEquidiagonalization => "DegenerateEquidiagonalization",
            Error::NotEquidiagonal { .. } => "NotEquidiagonal",
            Error::InconsistentSigns { .. } => "InconsistentSigns",
            Error::ZeroRadius => "ZeroRadius",
            Error::NonPositiveSeparation { .. } => "NonPositiveSeparation",
            Error::UnstableCavity { .. } => "UnstableCavity",
            Error::ResidualImaginary { .. } => "ResidualImaginary",
            Error::NonPositiveMass { .. } => "NonPositiveMass",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
