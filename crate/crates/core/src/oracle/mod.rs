//! Independent checks: Monte-Carlo sampling, chi-square goodness of fit and
//! reference evaluations that share no code path with the closed forms.

mod gof;
pub mod reference;
mod sampling;

pub use gof::{chi_square_gof, GofBin, GofReport, MIN_SAMPLES, TARGET_BINS};
pub use sampling::{sample_composite, sample_eta_mu_power, sample_gamma, sample_multipath_power, SampleBatch, SampleSource};
