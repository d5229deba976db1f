//! Exact computations around the McKay correspondence for finite subgroups
//! of SL(2, C): groups, characters, McKay graphs, Kleinian singularities,
//! their spectra, Coxeter elements and orbifold sector data.

pub mod ade;
pub mod arith;
pub mod character;
pub mod emit;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod group;
pub mod orbifold;
pub mod poly;
pub mod quiver;
pub mod roots;
pub mod spectrum;
pub mod verify;

mod modp;

pub use ade::{AdeType, Family};
pub use error::{Error, Result};
