//! Exact graded exterior calculus on formal power series, and the formal
//! Poisson homology of the Jacobi-Poisson structure attached to the real
//! Lefschetz map `(x1^2 - x2^2 + x3^2 - x4^2, 2(x1 x2 + x3 x4))` on `R^4`.
//!
//! Everything is computed slice by slice: every operator used here
//! (de Rham, contraction with the bivector, the Koszul-Brylinski
//! differential) preserves the scaling weight, so each weight is a finite
//! exact linear-algebra problem over the rationals.
//!
//! The crate is `no_std` (it needs `alloc`). The `parallel` feature fans
//! independent weight slices out to a rayon pool.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod catalog;
pub mod division;
pub mod error;
pub mod exterior;
pub mod homology;
pub mod linalg;
pub mod normal_form;
pub mod poisson;
pub mod rational;
pub mod series;

pub use error::{AlgebraError, Result};
pub use exterior::{ExteriorIndex, GradedElement, Kind, Monomial, Polynomial, WeightSliceBasis};
pub use linalg::ExactMatrix;
pub use rational::Rational;
pub use series::RationalSeries;
