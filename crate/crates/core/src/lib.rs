//! Cyclic codes over the ring `R = F2 + uF2 + u^2F2` with `u^3 = u`.
//!
//! The crate builds cyclic codes of odd length from generator triples
//! `(g1, a1, g2)` through the decomposition `R = F2 x (F2 + wF2)`, computes
//! Gray images, Lee distances and duals, decides whether a code contains
//! its dual, and derives the parameters of the resulting CSS quantum codes.
//!
//! Module map:
//!
//! * [`poly`]: polynomials over F2, factorization of `x^n + 1`
//! * [`ring`]: arithmetic in `R` and `F2 + wF2`, Gray map, Lee weights, CRT
//! * [`linalg`]: F2 row reduction on packed words
//! * [`codes`]: cyclic codes, duals, dual containment, Lee distance
//! * [`quantum`]: CSS parameters and exhaustive generator search
//! * [`oracle`]: brute-force referees for the statements above
//! * [`report`]: result records and the reproduction report used by the CLI

pub mod codes;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod quantum;
pub mod report;
pub mod ring;

pub use codes::{CodeSpec, ContainmentEvidence, Distance, LinearCode};
pub use error::{Error, Result};
pub use poly::BinPoly;
pub use quantum::{QuantumParams, SearchRecord};

pub use ring::{GrayWord, RElem, RPoly, RwElem, F2};
