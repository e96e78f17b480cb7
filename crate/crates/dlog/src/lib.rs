//! Exact truncated power series, the inverse-logarithmic-derivative operator
//! 𝔗f = f/f′, binomial-type polynomial sequences, and high-precision series
//! built around the Ramanujan–Soldner constant.
//!
//! The crate is organized in three layers:
//!
//! * exact algebra — [`scalar`], [`poly`], [`series`]: arbitrary-precision
//!   rationals, dense polynomials, and truncated power series with explicit
//!   order bookkeeping;
//! * operator calculus — [`binomial`], [`chain`], [`family`], [`pyramid`]:
//!   binomial-type sequences from their generating series, the 𝔗 operator
//!   and its iteration, a one-parameter family of deformed exponentials, and
//!   the three-dimensional coefficient pyramid attached to repeated
//!   differentiation;
//! * analysis — [`num`], [`soldner`], [`mfun`]: correctly-rounded big-float
//!   constants and special functions, the series expansion at the
//!   Ramanujan–Soldner point, and the Mellin-type interpolation M(s) of the
//!   partial exponential sums.
//!
//! [`report`] and [`verify`] provide the structured check-suite layer the
//! command-line tool and the examples share.

pub mod binomial;
pub mod catalog;
pub mod chain;
pub mod family;
pub mod mfun;
pub mod num;
pub mod poly;
pub mod pyramid;
pub mod report;
pub mod scalar;
pub mod series;
pub mod soldner;
pub mod verify;

pub use poly::{AlphaPoly, Poly};
pub use scalar::{Rat, Ring};
pub use series::{SeriesError, TruncSeries};
