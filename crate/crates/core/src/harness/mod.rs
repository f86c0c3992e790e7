//! Run reports and the reproduction bundles behind `geodometer reproduce`.

mod report;
pub mod reproduce;

pub use report::{Assertion, RunReport};
pub use reproduce::{reproduce, Bundle};
