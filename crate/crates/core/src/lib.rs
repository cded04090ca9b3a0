//! Exact computer algebra for order-3 jet differentials.
//!
//! * [`poly`]: sparse rational polynomials with two gradings and derivations.
//! * [`linalg`]: fraction-free exact rank.
//! * [`rep`]: signatures, Weyl dimensions, decomposition index sets.
//! * [`invariants`]: the jet ring, reparametrization derivations, invariant
//!   generators, and brute-force kernel oracles.
//! * [`intersection`]: truncated Chow rings of threefolds, Chern characters of
//!   Schur bundles, Todd class, Riemann–Roch.
//! * [`asymptotics`]: Euler characteristics of jet bundles and their leading
//!   coefficients in the jet degree.
//! * [`cli`]: the `jetdiff` command line and its JSON/CSV/text reports.

pub mod asymptotics;
pub mod check;
pub mod cli;
pub mod error;
pub mod exec;
pub mod interp;
pub mod intersection;
pub mod invariants;
pub mod known;
pub mod linalg;
pub mod poly;
pub mod rep;

pub use error::{Error, Result};
