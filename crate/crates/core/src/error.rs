use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |H - H†| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (max |U†U - I| = {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("state is not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("path is not closed: end point is {distance:.3e} away from the start")]
    OpenPath { distance: f64 },

    #[error("path is discontinuous at segment {segment}: {detail}")]
    Discontinuous { segment: usize, detail: String },

    #[error("segment {segment} reaches the south pole (|alpha| >= pi), which the extended chart does not cover")]
    SouthPole { segment: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("imaginary part of G2 too large ({0:.3e})")]
    ComplexG2(f64),
}
