//! Generalized parking functions, descent numbers and chain polytopes of
//! ribbon posets, computed with exact arithmetic.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinatorics`]: compositions, descent sets, `β_n(S)`, Euler numbers,
//!   the dominance sets `Κ_γ` and multinomials.
//! * [`parking`]: `ā`-parking functions and the sum enumerator `I_ā(q)`.
//! * [`trees`]: labeled rooted trees and the inversion enumerator `I_n(q)`.
//! * [`strips`]: properly filled horizontal strips and the sign-reversing
//!   involution `ψ` whose fixed points are counted by `β_n(S)`.
//! * [`polynomials`]: exact univariate and sparse multivariate polynomials,
//!   including definite integration with polynomial upper limits.
//! * [`polytope`]: volumes of the polytopes `Z_S(d)` by three independent
//!   routes, and the parking function polytope of Pitman and Stanley.
//! * [`verify`]: batch verification of the identities tying these together.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod parking;
pub mod polynomials;
pub mod polytope;
pub mod strips;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Upper bound on the size `n` accepted by exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cap(pub usize);

impl Cap {
    pub const DEFAULT: Cap = Cap(8);
    /// Default cap for full strip/involution sweeps.
    pub const INVOLUTION: Cap = Cap(6);

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::CapExceeded { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap::DEFAULT
    }
}
