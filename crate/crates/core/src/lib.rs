pub mod cyclotomic;
pub mod error;
pub mod grid;
pub mod laurent;
pub mod partitions;
pub mod qseries;
pub mod report;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use qseries::{CrankSpec, QSeries};
pub use report::{Counterexample, Report, Status};
