//! Exact computation of chromatic symmetric functions and their expansions in
//! quasi-symmetric and symmetric-function bases.
//!
//! The polynomial types ([`SymPoly`], [`QSymPoly`]) are generic over a
//! coefficient [`Scalar`]. All combinatorial data (partitions, transition
//! matrices, counts) is computed exactly with arbitrary-precision integers and
//! rationals; the coefficient type only decides how results are stored. The
//! exact aliases [`SymFn`] and [`QSymFn`] are what the verification routines
//! use, while the `f64` aliases are handy for quick numeric evaluation.
//!
//! Module map:
//!
//! * [`partitions`]: integer and set partitions, `r_λ!`, signs, Doubilet
//!   coefficients `λ(π,σ)!` and `c_{μ,ν}`.
//! * [`symfunc`]: the symmetric function ring in the bases `m`, `m̃`, `p`,
//!   `e`, `h`, `s` and `ξ`, with exact basis changes and the involution ω.
//! * [`qsym`]: fundamental and monomial quasi-symmetric functions.
//! * [`combin`]: graphs, posets, sequencings, labellings, orientations and
//!   their descent statistics.
//! * [`expansions`]: the sequencing expansions of `X_G` as executable
//!   identities.
//! * [`tableaux`]: standard Young tableaux, P-tableaux and the
//!   Sundquist–Wagner–West insertion algorithm.
//! * [`io`]: text and JSON formats plus built-in fixtures.

pub mod combin;
pub mod error;
pub mod expansions;
pub mod io;
pub mod partitions;
pub mod qsym;
pub mod scalar;
pub mod symfunc;
pub mod tableaux;

pub use crate::error::{Error, Result};
pub use crate::partitions::{IntPartition, SetPartition};
pub use crate::qsym::{DescentClass, QBasis, QSymPoly};
pub use crate::scalar::Scalar;
pub use crate::symfunc::{Basis, SymPoly};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Exact rational coefficients.
pub type Rational = BigRational;

/// Symmetric function with exact rational coefficients.
pub type SymFn = SymPoly<Rational>;
/// Quasi-symmetric function with exact rational coefficients.
pub type QSymFn = QSymPoly<Rational>;

/// Symmetric function with `f64` coefficients.
pub type SymFnF64 = SymPoly<f64>;
/// Quasi-symmetric function with `f64` coefficients.
pub type QSymFnF64 = QSymPoly<f64>;
