//! HarrisZ and HarrisZ⁺ corner detection.
//!
//! The detector computes multi-scale corner responses as the difference of
//! z-score normalized determinant and squared-trace maps of the gradient
//! second-moment matrix, gates candidates by a smoothed edge mask, selects
//! keypoints with a response-ordered greedy distance sweep, refines them to
//! subpixel precision, and ranks them either scale-major (classic) or
//! response-major with spatially uniform budgeting (plus).
//!
//! Modules follow the pipeline stages:
//!
//! - [`image`] — rasters, Gaussian kernels, separable convolution, Lanczos doubling
//! - [`scale_space`] — gradients, gradient fusion, edge masks, enhanced derivatives
//! - [`response`] — second-moment maps, z-scored responses, eigen analysis
//! - [`selection`] — candidate extraction, greedy NMS, subpixel refinement, ranking
//! - [`detector`] — per-scale orchestration and configuration
//! - [`eval`] — synthetic scenes, homography warps, repeatability scoring
//! - [`io`] — image loading, keypoint serialization, overlay rendering
//!
//! All numeric code is generic over the scalar type through [`Real`];
//! `f64` is the reference instantiation used by the CLI and the aliases
//! below.

pub mod detector;
pub mod error;
pub mod eval;
pub mod image;
pub mod io;
pub mod num;
pub mod response;
pub mod scale_space;
pub mod selection;

pub use detector::{DetectionResult, Detector, DetectorConfig, Mode, Ranking};
pub use error::{Error, Result};
pub use num::Real;
pub use selection::{Keypoint, RankedKeypoints};

pub type ImagePlaneF32 = image::ImagePlane<f32>;
pub type ImagePlaneF64 = image::ImagePlane<f64>;
pub type ImageRgbF32 = image::ImageRgb<f32>;
pub type ImageRgbF64 = image::ImageRgb<f64>;
pub type KeypointF32 = selection::Keypoint<f32>;
pub type KeypointF64 = selection::Keypoint<f64>;
pub type DetectionResultF32 = detector::DetectionResult<f32>;
pub type DetectionResultF64 = detector::DetectionResult<f64>;
