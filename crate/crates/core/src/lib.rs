#![no_std]

extern crate alloc;

pub mod atlas;
pub mod error;
pub mod graded_ring;
pub mod magic;
pub mod oracle;
pub mod potion;
pub mod standard;
pub mod zlattice;

pub use error::{Error, Result};
