//! Exact computer algebra for finite rngs and rings given by structure
//! constants over a finite abelian carrier group.
//!
//! The crate builds ideal extensions `E(R,I)` and trivial extensions
//! `R ∝ M`, computes annihilators, Hom-sets, subring and ideal lattices,
//! and classifies minimal ring extensions of prime rings into five types
//! (P, PI, SR, SI, N), verifying every finitely checkable statement by
//! exhaustive search.

pub mod abelian;
pub mod algebra;
pub mod bimodule;
pub mod catalog;
pub mod classify;
pub mod extensions;
pub mod substructure;

mod error;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;

/// Enumeration caps for desk-scale guarantees.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Max order for operations that enumerate all elements.
    pub enumeration: usize,
    /// Max order for operations that enumerate subsets by closure.
    pub closure: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { enumeration: 65536, closure: 4096 }
    }
}

impl Caps {
    pub fn check_enumeration(&self, order: usize) -> Result<()> {
        if order > self.enumeration {
            Err(Error::OrderCapExceeded { order, cap: self.enumeration })
        } else {
            Ok(())
        }
    }

    pub fn check_closure(&self, order: usize) -> Result<()> {
        if order > self.closure {
            Err(Error::OrderCapExceeded { order, cap: self.closure })
        } else {
            Ok(())
        }
    }
}
