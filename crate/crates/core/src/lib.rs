//! Extended real numbers built from Dedekind cuts.
//!
//! The lower halves of cuts (ℒ) and the upper halves (𝒰) carry the same
//! order but different additions once the two non-ordinary cuts `(∅, ℚ)` and
//! `(ℚ, ∅)` are admitted: ℒ yields sup-addition, 𝒰 inf-addition. This crate
//! implements both, their residuals (pseudodifferences), nonnegative
//! scaling, and convex-analysis operations that rely on inf-addition.
//!
//! * [`qnum`]: exact rationals.
//! * [`cutmodel`]: symbolic lower/upper sets, the set-level model and oracle.
//! * [`extreal`]: the user-facing [`ExtReal`] and its two arithmetics.
//! * [`convexfn`]: extended-real functions on rational grids.
//! * [`scalarize`]: polyhedral set-valued functions and their scalarizations.
//! * [`expr`]: a small expression language over extended reals.
//! * [`tables`]: the infinity sum/difference table, computed.

pub mod convexfn;
pub mod cutmodel;
pub mod error;
pub mod expr;
pub mod extreal;
pub mod qnum;
pub mod scalarize;
pub mod tables;

pub use error::{Error, Result};
pub use extreal::{ArithMode, ExtReal};
pub use qnum::Rational;
