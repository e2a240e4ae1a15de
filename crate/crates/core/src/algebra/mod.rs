//! Exact arithmetic: integers, rationals, finite fields and polynomial rings.

mod finite_field;
mod integers;
mod linalg;
mod mpoly;
pub mod primes;
mod ratfunc;
mod ring;
mod upoly;
mod zpoly;

pub use finite_field::{Embedding, FiniteField, Fq, MAX_FIELD_SIZE, TABLE_LIMIT};
pub use integers::{rational_mod_p, Integers, Rationals};
pub(crate) use linalg::determinant;
pub use mpoly::{MPoly, MPolyRing, Monomial};
pub use ratfunc::{RatFn, RationalFunctions};
pub use ring::{DisplayElement, Domain, El, Field, PerfectField, Ring};
pub use upoly::{PolyRing, UPoly};
pub use zpoly::{content_primitive, reduce_mod_p, ZLambdaX};
