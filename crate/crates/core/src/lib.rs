//! Exact commutative algebra for homological indices of 1-forms on
//! hypersurface germs.
//!
//! The crate is `no_std` (it needs `alloc`). Layers, bottom up:
//!
//! * [`arith`]: rationals, monomials, block orders, sparse polynomials and
//!   free-module vectors, exterior-algebra indices.
//! * [`bases`]: normal forms and standard bases under mixed global/local
//!   orders, syzygies, colon and saturation, elimination, resolutions and
//!   local quotient dimensions.
//! * [`nash`]: the Nash transform ideal, the modules of exterior powers of
//!   the dual Nash bundle, and wedge differentials.
//! * [`cech`]: twist bounds, truncated Cech strands and totalization.
//! * [`index`]: homology over the local ring and the homological index.
//! * [`oracles`]: Milnor numbers and branch counts used as cross-checks.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod bases;
pub mod cech;
pub mod error;
pub mod index;
pub mod nash;
pub mod oracles;

pub use error::{Error, Result};
