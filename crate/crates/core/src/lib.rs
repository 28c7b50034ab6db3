pub mod audit;
pub mod coeffs;
pub mod error;
pub mod heisenberg;
pub mod oracle;
pub mod partitions;
pub mod vertex;
pub mod report;
pub mod symfunc;

pub use coeffs::{cf, Coeff, Symbol};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use report::{Report, Status};
pub use symfunc::{Basis, EpsSequence, SymFunc};
