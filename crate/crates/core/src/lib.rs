//! Exact combinatorics of minimal factorizations of the cycle
//! (1 2 ... n) into cycles, up to reordering of commuting factors:
//! permutation plumbing, the bijection with rooted plane trees, exhaustive
//! and generating-function counting, and the cactus picture of which
//! factor multisets occur at all.

pub mod bijection;
pub mod cactus;
pub mod enumeration;
mod error;
pub mod genfunc;
pub mod perm;
pub mod selftest;
pub mod tree;

pub use error::{Error, Result};

/// Coefficient ring for series and counters: any exact integer-like type.
pub trait Coeff:
    Clone
    + Eq
    + std::fmt::Debug
    + std::fmt::Display
    + num_traits::Zero
    + num_traits::One
    + std::ops::AddAssign
    + std::ops::SubAssign
    + std::ops::Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + std::fmt::Debug
        + std::fmt::Display
        + num_traits::Zero
        + num_traits::One
        + std::ops::AddAssign
        + std::ops::SubAssign
        + std::ops::Mul<Output = Self>
{
}

/// Default exact coefficient type.
pub type Int = num_bigint::BigInt;

/// Default counting series.
pub type Series = genfunc::MultiSeries<Int>;
