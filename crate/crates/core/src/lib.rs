//! Tooling for the epimorphism partial order on knot groups.
//!
//! Knots enter as Wirtinger presentations. A pair `(K1, K2)` is decided by
//! verifying an explicit surjection `G(K1) -> G(K2)` with replayable
//! certificates, or refuting one through Alexander-polynomial divisibility
//! and twisted Alexander polynomials of `SL(2, F_p)` representations.

pub mod ring;
pub mod words;

pub use ring::{CoeffRing, IntRing, PrimeField};
pub use words::{GroupWord, KnotTable, WirtingerPresentation};
