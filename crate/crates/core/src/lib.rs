#![no_std]
extern crate alloc;

pub mod bisym;
pub mod error;
pub mod hassett;
pub mod oracle;
pub mod partition;
pub mod ps;
pub mod sym;
pub mod uvpoly;

pub use error::{Error, Result};
pub use partition::Partition;
pub use uvpoly::{UVPoly, Q};
