//! Jacobi-Poisson bivectors, the Schouten bracket, and the two Poisson
//! differentials: `d_pi = [pi, .]` on multivectors and the Koszul-Brylinski
//! `delta_pi = i_pi d - d i_pi` on forms.

mod identities;

use alloc::vec::Vec;

use num_traits::{One, Zero};

pub use identities::{verify_identity_suite, IdentityCheck, IdentityReport};

use crate::error::{AlgebraError, Result};
use crate::exterior::{differential, wedge_sign, ExteriorIndex, GradedElement, Kind, Polynomial};
use crate::rational::Rational;

/// A Poisson bivector together with the functions and volume defining it.
#[derive(Clone, Debug)]
pub struct PoissonStructure {
    pub bivector: GradedElement,
    pub casimirs: Vec<Polynomial>,
    pub volume: GradedElement,
}

/// The Jacobi-Poisson bivector of `f_1, ..., f_{n-2}`: the unique `pi` with
/// `pi(dx_a, dx_b) mu = dx_a ^ dx_b ^ df_1 ^ ... ^ df_{n-2}`.
pub fn jacobi_poisson(functions: &[Polynomial], n: usize) -> Result<PoissonStructure> {
    if n < 2 || functions.len() != n - 2 {
        return Err(AlgebraError::WrongFunctionCount { expected: n.saturating_sub(2), got: functions.len() });
    }
    for f in functions {
        if f.dim() != n {
            return Err(AlgebraError::DimensionMismatch { left: f.dim(), right: n });
        }
        if !f.constant_term().is_zero() {
            return Err(AlgebraError::ConstantTerm(alloc::format!("{}", f)));
        }
    }
    let mut casimir_form = GradedElement::scalar(Kind::Form, Polynomial::one(n));
    for f in functions {
        casimir_form = casimir_form.wedge(&differential(f))?;
    }
    let top = ExteriorIndex::full(n);
    let mut bivector = GradedElement::zero(Kind::Multivector, n, 2);
    for a in 0..n {
        for b in a + 1..n {
            let pair = GradedElement::dx(n, a).wedge(&GradedElement::dx(n, b))?;
            let coeff = pair.wedge(&casimir_form)?.component(top);
            bivector.add_component(ExteriorIndex::from_axes(&[a, b]).expect("sorted"), &coeff);
        }
    }
    Ok(PoissonStructure { bivector, casimirs: functions.to_vec(), volume: GradedElement::volume_form(n) })
}

/// Right derivative of a multivector with respect to the odd variable of
/// axis `i` (coordinate vector field `d_i` moved to the far right).
fn odd_right_derivative(p: &GradedElement, axis: usize) -> GradedElement {
    let mut out = GradedElement::zero(Kind::Multivector, p.dim(), p.degree().saturating_sub(1));
    for (idx, c) in p.components() {
        if !idx.contains(axis) {
            continue;
        }
        let rest = idx.minus(ExteriorIndex::single(axis));
        let s = wedge_sign(rest, ExteriorIndex::single(axis)).expect("disjoint");
        out.add_component(rest, &c.scale(&Rational::from_integer(s.into())));
    }
    out
}

/// Schouten-Nijenhuis bracket of multivector fields.
///
/// Sign convention: `[X, g] = X(g)`, `[X, Y]` is the Lie bracket,
/// `[P, Q] = -(-1)^{(p-1)(q-1)} [Q, P]`, and the Leibniz rule acts on the
/// left slot: `[P ^ Q, R] = [P, R] ^ Q + (-1)^{p(r-1)} P ^ [Q, R]`.
/// With this choice `star(d_pi V) = delta_pi(star V)` holds in every degree.
pub fn schouten(a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
    let out = schouten_right(a, b)?;
    let (p, q) = (a.degree() as i64, b.degree() as i64);
    if ((p - 1) * (q - 1)).rem_euclid(2) == 1 {
        Ok(out.scale(&-Rational::one()))
    } else {
        Ok(out)
    }
}

/// The opposite convention, Leibniz in the right slot. Equals `-[b, a]`
/// in the convention of [`schouten`].
fn schouten_right(a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
    if a.kind() != Kind::Multivector || b.kind() != Kind::Multivector {
        return Err(AlgebraError::KindMismatch);
    }
    if a.dim() != b.dim() {
        return Err(AlgebraError::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    let n = a.dim();
    let (p, q) = (a.degree() as i64, b.degree() as i64);
    let degree = (p + q - 1).max(0) as usize;
    if p + q == 0 {
        return Ok(GradedElement::zero(Kind::Multivector, n, 0));
    }
    if degree > n {
        return Ok(GradedElement::zero(Kind::Multivector, n, n));
    }
    let mut out = GradedElement::zero(Kind::Multivector, n, degree);
    let sign = if ((p - 1) * (q - 1)).rem_euclid(2) == 0 { -Rational::one() } else { Rational::one() };
    for i in 0..n {
        let da = odd_right_derivative(a, i);
        if !da.is_zero() {
            let db = b.map_coefficients(|c| c.derivative(i));
            out.add_scaled(&da.wedge(&db)?, &Rational::one())?;
        }
        let db_odd = odd_right_derivative(b, i);
        if !db_odd.is_zero() {
            let da_even = a.map_coefficients(|c| c.derivative(i));
            out.add_scaled(&db_odd.wedge(&da_even)?, &sign)?;
        }
    }
    Ok(out)
}

impl PoissonStructure {
    pub fn dim(&self) -> usize {
        self.bivector.dim()
    }

    /// Lichnerowicz differential `[pi, v]`.
    pub fn d_pi(&self, v: &GradedElement) -> Result<GradedElement> {
        schouten(&self.bivector, v)
    }

    /// Koszul-Brylinski differential `i_pi d - d i_pi`.
    pub fn delta_pi(&self, a: &GradedElement) -> Result<GradedElement> {
        delta_with(&self.bivector, a)
    }

    pub fn modular_field(&self) -> Result<GradedElement> {
        modular_field(&self.bivector)
    }
}

/// `i_pi d a - d i_pi a` for an arbitrary bivector `pi`.
pub fn delta_with(bivector: &GradedElement, a: &GradedElement) -> Result<GradedElement> {
    if a.kind() != Kind::Form {
        return Err(AlgebraError::KindMismatch);
    }
    let n = a.dim();
    if a.degree() == 0 {
        return Ok(GradedElement::zero(Kind::Form, n, 0));
    }
    let da = a.de_rham()?;
    let first = if da.degree() >= 2 && !da.is_zero() {
        bivector.contract_into(&da)?
    } else {
        GradedElement::zero(Kind::Form, n, a.degree() - 1)
    };
    let second = if a.degree() >= 2 {
        bivector.contract_into(a)?.de_rham()?
    } else {
        GradedElement::zero(Kind::Form, n, a.degree() - 1)
    };
    first.try_sub(&second)
}

/// The modular vector field of a bivector against the standard volume:
/// `star(X) = d star(pi)`.
pub fn modular_field(bivector: &GradedElement) -> Result<GradedElement> {
    bivector.star()?.de_rham()?.star_inv()
}

#[cfg(test)]
mod tests;
