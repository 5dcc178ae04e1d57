pub mod avp;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod inequalities;
pub mod report;
pub mod riesz1d;
pub mod special;
pub mod spectra_numeric;
pub mod spectra_exact;
pub mod verify;

pub use error::{Error, Result};
