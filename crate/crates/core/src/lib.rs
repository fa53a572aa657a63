pub mod error;
pub mod exact;
pub mod mf;
pub mod orbifold;
pub mod orbit;
pub mod qmodular;
pub mod stability;
pub mod table;

pub use error::{Error, Result};
pub use table::DegreeTable;
