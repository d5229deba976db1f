//! Exact arithmetic over the rationals and cyclotomic fields.

mod cyclotomic;
pub mod rational;

pub use cyclotomic::{cyclotomic_polynomial, euler_totient, CyclotomicNumber};
pub use rational::Rational;
