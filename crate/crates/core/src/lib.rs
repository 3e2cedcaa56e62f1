pub mod error;
pub mod actions;
pub mod exact;
pub mod lamination;
pub mod sample;
pub mod skein;
pub mod sphere;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
