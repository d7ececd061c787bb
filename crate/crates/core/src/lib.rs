//! Exact computer algebra for plane projective curves: Gröbner bases and
//! syzygies over `k[x,y,z]`, Bourbaki ideals of Jacobian syzygy modules,
//! global and local Bourbaki degrees, Tjurina numbers, and brute-force
//! linear-algebra verifiers for all of them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bourbaki;
pub mod error;
pub mod groebner;
pub mod oracle;
pub mod polyring;

pub use error::{Error, Result};
