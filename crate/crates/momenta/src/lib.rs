//! Exact-arithmetic moment sequences of classical orthogonal polynomials.
//!
//! Everything runs over arbitrary-precision rationals (or multivariate
//! polynomials over them): moment recurrences for the Wilson, continuous
//! dual Hahn, Hahn and Askey-Wilson families, S- and J-fraction expansion
//! and inversion, truncated power series with the coefficientwise `n!`
//! transform, and a registry of mechanical identity checks relating all of
//! these to the Genocchi, median Genocchi and Bernoulli numbers.

pub mod contfrac;
pub mod families;
pub mod fps;
pub mod momentlab;
pub mod mpoly;
pub mod qmoments;
pub mod random;
pub mod report;
pub mod ring;
pub mod verify;

pub use contfrac::{CfError, JFrac, SFrac};
pub use fps::{FpsError, TruncSeries};
pub use momentlab::{MomentError, MomentFunctional, ThreeTermRecurrence, UnivPoly};
pub use mpoly::{MPoly, VarSet};
pub use report::Report;
pub use ring::{Rat, Ring};
