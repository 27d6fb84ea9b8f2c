pub mod exterior;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod ring;
pub mod vector;

pub use exterior::{binomial, subsets, wedge, ExtIndex};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{Block, BlockKind, MonomialOrder, TermOrder};
pub use parse::parse_poly;
pub use poly::{poly_arith, ArithOp, Poly};
pub use rat::Rat;
pub use ring::Ring;
pub use vector::{Term, Vector};
