//! Fenchel–Nielsen style coordinates for representations of surface groups
//! into SL(3,ℂ).
#![no_std]
extern crate alloc;

pub mod error;
pub mod gluing;
pub mod linalg;
pub mod pants;
pub mod real_forms;
pub mod sample;
pub mod sl2;
pub mod trace_algebra;

pub use error::{Error, Result};
