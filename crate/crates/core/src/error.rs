//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("sigma must be positive and finite, got {0}")]
    InvalidSigma(f64),

    #[error("kernel must have odd length, got {0}")]
    EvenKernel(usize),

    #[error("kernel radius {radius} does not fit a {width}x{height} image")]
    KernelTooLarge {
        radius: usize,
        width: usize,
        height: usize,
    },

    #[error("image too small: {width}x{height}, need at least {min}x{min}")]
    ImageTooSmall {
        width: usize,
        height: usize,
        min: usize,
    },

    /// The plane has (near-)zero standard deviation, so its z-score is
    /// undefined. The detector treats this as "skip the scale".
    #[error("plane is statistically degenerate (std {std:.3e})")]
    DegeneratePlane { std: f64 },

    #[error("invalid detector config: {0}")]
    InvalidConfig(String),

    #[error("homography is singular or near-singular (det {det:.3e})")]
    SingularHomography { det: f64 },

    #[error("unsupported image format: {0}")]
    UnsupportedFormat(String),

    #[error("failed to decode image: {0}")]
    Decode(String),

    #[error("malformed keypoint file: {0}")]
    MalformedKeypointFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by user-supplied input (files, formats,
    /// configuration) as opposed to internal invariant violations. The CLI
    /// maps the two classes to distinct exit codes.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedFormat(_)
                | Error::Decode(_)
                | Error::MalformedKeypointFile(_)
                | Error::InvalidConfig(_)
                | Error::ImageTooSmall { .. }
                | Error::Io(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
