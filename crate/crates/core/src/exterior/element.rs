use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::index::{wedge_sign, ExteriorIndex, Kind};
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{AlgebraError, Result};
use crate::rational::Rational;

/// A homogeneous-degree element of `Omega^k` (forms) or `X^k`
/// (multivector fields) with polynomial coefficients.
///
/// Components with a zero coefficient are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedElement {
    kind: Kind,
    degree: usize,
    dim: usize,
    components: BTreeMap<ExteriorIndex, Polynomial>,
}

pub type GradedForm = GradedElement;
pub type GradedMultivector = GradedElement;

impl GradedElement {
    pub fn zero(kind: Kind, dim: usize, degree: usize) -> Self {
        GradedElement { kind, degree, dim, components: BTreeMap::new() }
    }

    /// A degree-0 element with coefficient `p`.
    pub fn scalar(kind: Kind, p: Polynomial) -> Self {
        Self::monomial_element(kind, ExteriorIndex::EMPTY, p)
    }

    /// `p dx_I` or `p d_I`.
    pub fn monomial_element(kind: Kind, index: ExteriorIndex, p: Polynomial) -> Self {
        let mut out = Self::zero(kind, p.dim(), index.degree());
        if !p.is_zero() {
            out.components.insert(index, p);
        }
        out
    }

    /// `dx_{i+1}`.
    pub fn dx(dim: usize, axis: usize) -> Self {
        Self::monomial_element(Kind::Form, ExteriorIndex::single(axis), Polynomial::one(dim))
    }

    /// The coordinate vector field along axis `i`.
    pub fn partial(dim: usize, axis: usize) -> Self {
        Self::monomial_element(Kind::Multivector, ExteriorIndex::single(axis), Polynomial::one(dim))
    }

    /// The standard volume form `dx_1 ^ ... ^ dx_n`.
    pub fn volume_form(dim: usize) -> Self {
        Self::monomial_element(Kind::Form, ExteriorIndex::full(dim), Polynomial::one(dim))
    }

    /// `d_1 ^ ... ^ d_n`.
    pub fn volume_multivector(dim: usize) -> Self {
        Self::monomial_element(Kind::Multivector, ExteriorIndex::full(dim), Polynomial::one(dim))
    }

    /// A 1-form `sum_i c_i dx_i` or vector field `sum_i c_i d_i`.
    pub fn from_coefficients(kind: Kind, coeffs: &[Polynomial]) -> Self {
        let dim = coeffs.first().map_or(0, Polynomial::dim);
        let mut out = Self::zero(kind, dim, 1);
        for (i, c) in coeffs.iter().enumerate() {
            out.add_component(ExteriorIndex::single(i), c);
        }
        out
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&ExteriorIndex, &Polynomial)> {
        self.components.iter()
    }

    pub fn component(&self, index: ExteriorIndex) -> Polynomial {
        self.components.get(&index).cloned().unwrap_or_else(|| Polynomial::zero(self.dim))
    }

    /// Coefficient of a degree-0 element.
    pub fn scalar_part(&self) -> Polynomial {
        self.component(ExteriorIndex::EMPTY)
    }

    /// Coefficients along axes of a degree-1 element.
    pub fn axis_coefficients(&self) -> Vec<Polynomial> {
        (0..self.dim).map(|i| self.component(ExteriorIndex::single(i))).collect()
    }

    pub fn add_component(&mut self, index: ExteriorIndex, p: &Polynomial) {
        self.add_scaled_component(index, p, &Rational::one());
    }

    fn add_scaled_component(&mut self, index: ExteriorIndex, p: &Polynomial, c: &Rational) {
        debug_assert_eq!(index.degree(), self.degree);
        if p.is_zero() || c.is_zero() {
            return;
        }
        let entry = self.components.entry(index).or_insert_with(|| Polynomial::zero(p.dim()));
        entry.add_scaled(p, c);
        if entry.is_zero() {
            self.components.remove(&index);
        }
    }

    fn check_compatible(&self, other: &GradedElement) -> Result<()> {
        if self.kind != other.kind {
            return Err(AlgebraError::KindMismatch);
        }
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// `self + c * other`. Degrees must agree unless one side is zero.
    pub fn add_scaled(&mut self, other: &GradedElement, c: &Rational) -> Result<()> {
        self.check_compatible(other)?;
        if other.is_zero() {
            return Ok(());
        }
        if self.is_zero() {
            self.degree = other.degree;
        }
        if self.degree != other.degree {
            return Err(AlgebraError::InvalidArgument(alloc::format!(
                "adding degree {} to degree {}",
                other.degree,
                self.degree
            )));
        }
        for (idx, p) in &other.components {
            self.add_scaled_component(*idx, p, c);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GradedElement) -> Result<GradedElement> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one())?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &GradedElement) -> Result<GradedElement> {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> GradedElement {
        self.map_coefficients(|p| p.scale(c))
    }

    /// Multiply every coefficient by the function `g`.
    pub fn mul_poly(&self, g: &Polynomial) -> GradedElement {
        self.map_coefficients(|p| p * g)
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&Polynomial) -> Polynomial) -> GradedElement {
        let mut out = Self::zero(self.kind, self.dim, self.degree);
        for (idx, p) in &self.components {
            let q = f(p);
            if !q.is_zero() {
                out.components.insert(*idx, q);
            }
        }
        out
    }

    /// Exterior product; degree overflow yields zero of degree `dim`.
    pub fn wedge(&self, other: &GradedElement) -> Result<GradedElement> {
        self.check_compatible(other)?;
        let degree = self.degree + other.degree;
        if degree > self.dim {
            return Ok(Self::zero(self.kind, self.dim, self.dim));
        }
        let mut out = Self::zero(self.kind, self.dim, degree);
        for (ia, pa) in &self.components {
            for (ib, pb) in &other.components {
                if let Some(s) = wedge_sign(*ia, *ib) {
                    let prod = pa * pb;
                    out.add_scaled_component(ia.union(*ib), &prod, &Rational::from_integer(s.into()));
                }
            }
        }
        Ok(out)
    }

    /// Scaling weight of one term: coefficient degree plus `k` for forms,
    /// minus `k` for multivectors.
    pub fn term_weight(&self, coefficient_degree: u32) -> i64 {
        match self.kind {
            Kind::Form => coefficient_degree as i64 + self.degree as i64,
            Kind::Multivector => coefficient_degree as i64 - self.degree as i64,
        }
    }

    /// The distinct weights present, ascending.
    pub fn weights(&self) -> Vec<i64> {
        let mut set = BTreeSet::new();
        for p in self.components.values() {
            for (m, _) in p.terms() {
                set.insert(self.term_weight(m.degree()));
            }
        }
        set.into_iter().collect()
    }

    /// The component of scaling weight exactly `w`.
    pub fn weight_slice(&self, w: i64) -> GradedElement {
        let shift = self.term_weight(0);
        let d = w - shift;
        if d < 0 {
            return Self::zero(self.kind, self.dim, self.degree);
        }
        self.map_coefficients(|p| p.homogeneous(d as u32))
    }

    /// Drop all terms of weight above `w`.
    pub fn truncate_weight(&self, w: i64) -> GradedElement {
        let d = w - self.term_weight(0);
        if d < 0 {
            return Self::zero(self.kind, self.dim, self.degree);
        }
        self.map_coefficients(|p| p.truncate(d as u32))
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.weights().len() <= 1
    }

    /// de Rham differential of a form.
    pub fn de_rham(&self) -> Result<GradedElement> {
        if self.kind != Kind::Form {
            return Err(AlgebraError::KindMismatch);
        }
        if self.degree >= self.dim {
            return Ok(Self::zero(Kind::Form, self.dim, self.dim));
        }
        let mut out = Self::zero(Kind::Form, self.dim, self.degree + 1);
        for (idx, p) in &self.components {
            for axis in 0..self.dim {
                let s = match wedge_sign(ExteriorIndex::single(axis), *idx) {
                    Some(s) => s,
                    None => continue,
                };
                let dp = p.derivative(axis);
                out.add_scaled_component(idx.insert(axis), &dp, &Rational::from_integer(s.into()));
            }
        }
        Ok(out)
    }

    /// Interior product `i_self(target)` where `self` and `target` have
    /// opposite kinds: slots of `target` are filled in order, so
    /// `i_{X ^ Y} a = a(X, Y, ...)`.
    pub fn contract_into(&self, target: &GradedElement) -> Result<GradedElement> {
        if self.kind == target.kind {
            return Err(AlgebraError::KindMismatch);
        }
        if self.dim != target.dim {
            return Err(AlgebraError::DimensionMismatch { left: self.dim, right: target.dim });
        }
        if self.degree > target.degree {
            return Err(AlgebraError::DegreeTooLarge { inner: self.degree, outer: target.degree });
        }
        let mut out = Self::zero(target.kind, self.dim, target.degree - self.degree);
        for (ia, pa) in &self.components {
            for (ib, pb) in &target.components {
                if !ia.is_subset(*ib) {
                    continue;
                }
                let rest = ib.minus(*ia);
                let s = wedge_sign(*ia, rest).expect("disjoint by construction");
                out.add_scaled_component(rest, &(pa * pb), &Rational::from_integer(s.into()));
            }
        }
        Ok(out)
    }

    /// Hodge-type star against the standard volume: `X -> i_X(mu)` on
    /// multivectors of degree `k`, giving `(n-k)`-forms.
    pub fn star(&self) -> Result<GradedElement> {
        if self.kind != Kind::Multivector {
            return Err(AlgebraError::KindMismatch);
        }
        let mut out = Self::zero(Kind::Form, self.dim, self.dim - self.degree);
        for (idx, p) in &self.components {
            let rest = idx.complement(self.dim);
            let s = wedge_sign(*idx, rest).expect("complement is disjoint");
            out.add_scaled_component(rest, p, &Rational::from_integer(s.into()));
        }
        Ok(out)
    }

    /// Inverse of [`GradedElement::star`].
    pub fn star_inv(&self) -> Result<GradedElement> {
        if self.kind != Kind::Form {
            return Err(AlgebraError::KindMismatch);
        }
        let mut out = Self::zero(Kind::Multivector, self.dim, self.dim - self.degree);
        for (idx, p) in &self.components {
            let rest = idx.complement(self.dim);
            let s = wedge_sign(rest, *idx).expect("complement is disjoint");
            out.add_scaled_component(rest, p, &Rational::from_integer(s.into()));
        }
        Ok(out)
    }

    /// Apply a vector field to a function: `X(g) = sum_i X^i d_i g`.
    pub fn apply_to(&self, g: &Polynomial) -> Result<Polynomial> {
        if self.kind != Kind::Multivector || self.degree != 1 {
            return Err(AlgebraError::InvalidArgument("expected a vector field".into()));
        }
        let mut out = Polynomial::zero(self.dim);
        for (idx, p) in &self.components {
            let axis = idx.axes().next().expect("degree one");
            out = &out + &(p * &g.derivative(axis));
        }
        Ok(out)
    }

    /// Largest coefficient degree present.
    pub fn max_coefficient_degree(&self) -> Option<u32> {
        self.components.values().filter_map(Polynomial::max_degree).max()
    }

    /// All `(index, monomial, coefficient)` triples.
    pub fn terms(&self) -> impl Iterator<Item = (ExteriorIndex, &Monomial, &Rational)> {
        self.components.iter().flat_map(|(idx, p)| p.terms().map(move |(m, c)| (*idx, m, c)))
    }
}

/// `d g`.
pub fn differential(g: &Polynomial) -> GradedElement {
    GradedElement::scalar(Kind::Form, g.clone()).de_rham().expect("scalar form")
}

/// `i_v a` for a multivector `v` and a form `a`; see
/// [`GradedElement::contract_into`] for the slot convention.
pub fn contract(v: &GradedElement, a: &GradedElement) -> Result<GradedElement> {
    if v.kind() != Kind::Multivector || a.kind() != Kind::Form {
        return Err(AlgebraError::KindMismatch);
    }
    v.contract_into(a)
}

/// Lie derivative of a function along a vector field, computed as `i_v dg`.
pub fn lie_derivative(v: &GradedElement, g: &Polynomial) -> Result<Polynomial> {
    if v.kind() != Kind::Multivector || v.degree() != 1 {
        return Err(AlgebraError::InvalidArgument("expected a vector field".into()));
    }
    Ok(v.contract_into(&differential(g))?.scalar_part())
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Text form: `(coefficient)*dx1^dx3 + ...` or with `e1^e2` for multivectors.
impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let atom = match self.kind {
            Kind::Form => "dx",
            Kind::Multivector => "e",
        };
        for (i, (idx, p)) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", p)?;
            if idx.degree() > 0 {
                f.write_str("*[")?;
                for (j, a) in idx.axes().enumerate() {
                    if j > 0 {
                        f.write_str("^")?;
                    }
                    write!(f, "{}{}", atom, a + 1)?;
                }
                f.write_str("]")?;
            }
        }
        Ok(())
    }
}

impl Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        self.try_add(rhs).expect("incompatible graded elements")
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        self.try_sub(rhs).expect("incompatible graded elements")
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(4, i)
    }

    #[test]
    fn repeated_one_form_wedges_to_zero() {
        let a = differential(&(&x(0) * &x(1)));
        assert!(a.wedge(&a).unwrap().is_zero());
    }

    #[test]
    fn wedge_overflow_is_zero() {
        let mu = GradedElement::volume_form(4);
        let w = mu.wedge(&GradedElement::dx(4, 0)).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.degree(), 4);
    }

    #[test]
    fn kind_mismatch() {
        assert_eq!(
            GradedElement::dx(4, 0).wedge(&GradedElement::partial(4, 0)),
            Err(AlgebraError::KindMismatch)
        );
    }

    #[test]
    fn volume_star_is_one() {
        let s = GradedElement::volume_multivector(4).star().unwrap();
        assert_eq!(s, GradedElement::scalar(Kind::Form, Polynomial::one(4)));
    }

    #[test]
    fn contraction_basics() {
        let v = GradedElement::partial(4, 0);
        assert!(v.contract_into(&GradedElement::dx(4, 1)).unwrap().is_zero());
        assert_eq!(v.contract_into(&GradedElement::dx(4, 0)).unwrap().scalar_part(), Polynomial::one(4));
        let two = GradedElement::partial(4, 0).wedge(&GradedElement::partial(4, 1)).unwrap();
        assert!(matches!(
            two.contract_into(&GradedElement::dx(4, 0)),
            Err(AlgebraError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn lie_derivative_of_coordinate() {
        let v = GradedElement::partial(4, 0);
        assert_eq!(lie_derivative(&v, &x(0)).unwrap(), Polynomial::one(4));
    }

    #[test]
    fn de_rham_of_constant_vanishes() {
        let c = GradedElement::scalar(Kind::Form, Polynomial::constant(4, int(7)));
        assert!(c.de_rham().unwrap().is_zero());
    }
}
