//! Exact Poincaré series for the bifunctor cohomology of `GL` with
//! coefficients in symmetric and divided powers of `gl`.
//!
//! Two independent routes compute `H*_P(GL, S^{μ(r)} gl)`:
//!
//! - [`coinvariants`]: orbit counting for the diagonal action of the Young
//!   subgroup `S_μ` on the elementary bimodules of [`model`];
//! - [`sandwich`]: exact linear algebra over `F_p` (or `Q`) computing the
//!   images of sign-twisted invariants in coinvariants, summed over tuples of
//!   partitions refining `μ`.
//!
//! [`formulas`] derives the divided-power results from the symmetric ones.
//! [`verify`] runs the cross-checks between all of these, and [`cli`] is the
//! command-line front end.

pub mod action;
pub mod cli;
pub mod coinvariants;
pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod linalg;
pub mod model;
pub mod poincare;
pub mod sandwich;
pub mod verify;

pub use error::{Error, Result};
pub use poincare::PoincareSeries;
