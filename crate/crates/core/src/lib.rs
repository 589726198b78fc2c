//! Goodness-of-fit testing for model-based clustering.
//!
//! A fitted mixture model is judged by the distribution of its posterior
//! classification probabilities: under the tested model, any functional
//! moment of the posteriors has the same expectation as under the data
//! distribution. The test turns a growing family of such moments into
//! empirical-likelihood estimating equations, splits the sample into blocks
//! to absorb the parameter-estimation error, and rejects when the maximum
//! per-block log-likelihood-ratio statistic exceeds a chi-square quantile
//! calibrated so the overall asymptotic level is exact.
//!
//! The crate is organized along the pipeline:
//!
//! * [`numerics`] — special functions and seeded, addressable RNG streams;
//! * [`mixtures`] — mixture families, densities, posteriors, sampling, EM, BIC;
//! * [`basis`] — moment functions on the simplex (Bernstein, indicator/PCA);
//! * [`el`] — the per-block empirical-likelihood solver;
//! * [`gof`] — tuning rules, block splitting, Monte Carlo centering, the test;
//! * [`sim`] — scenario catalog and the replicated simulation harness;
//! * [`io`] — delimited-text and JSON document formats.

pub mod basis;
pub mod el;
mod error;
pub mod gof;
pub mod io;
pub mod mixtures;
pub mod numerics;
pub mod sim;

pub use basis::{BasisKind, BasisSet};
pub use el::{ElSolution, ElStatus, MomentMatrix};
pub use error::{Error, Result};
pub use gof::{BlockPartition, GofConfig, GofReport, McExpectation, Tuning};
pub use mixtures::{
    ComponentParams, Dataset, EmOptions, Family, FitResult, MixtureParams, MixtureSpec, Model,
    PosteriorMatrix,
};
pub use numerics::rng::{RngSeedSpec, StreamRng};
pub use sim::{RunOptions, Scenario, SimResult};
