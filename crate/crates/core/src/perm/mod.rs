//! Cycles, permutations, factorization words and their trace-monoid
//! structure: products, types, commutation, canonical forms, heads/tails.

mod cycle;
mod factorization;
pub mod text;
mod typevec;

pub use cycle::{Cycle, Permutation};
pub use factorization::{commute, Factorization};
pub use typevec::{HeadTailProfile, TypeVector};
