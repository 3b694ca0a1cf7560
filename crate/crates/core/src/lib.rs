//! Numerical toolkit for Gaussian sign-correlation functionals
//! `Phi_{F,G}(t) = E[sign F(X) sign G(Y)]` and the rotation family that beats
//! the Krivine threshold `(2/pi) ln(1 + sqrt 2)` at `t = i`.

// NaN-rejecting guards are written as `!(x > 0.0)` on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod mc;
pub mod optimize;
mod parallel;
pub mod phi;
pub mod quad;
pub mod series;
pub mod specfun;

pub use error::{Error, Result};
