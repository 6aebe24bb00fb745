#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod error;
pub mod rep;
pub mod tensor_dims;
