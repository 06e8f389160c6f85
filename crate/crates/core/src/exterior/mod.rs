//! Polynomial ring and the exterior algebras of forms and multivector
//! fields on `R^n`: wedge, interior products, de Rham, the volume star,
//! and the scaling-weight grading.

mod basis;
mod element;
mod index;
mod monomial;
mod polynomial;

pub use basis::{enumerate_basis, WeightSliceBasis};
pub use element::{contract, differential, lie_derivative, GradedElement, GradedForm, GradedMultivector};
pub use index::{indices_of_degree, wedge_sign, ExteriorIndex, Kind};
pub use monomial::{binomial, count_of_degree, monomial_cmp, monomials_of_degree, Monomial};
pub use polynomial::{coordinates, Polynomial};
