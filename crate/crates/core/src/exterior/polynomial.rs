use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::error::{AlgebraError, Result};
use crate::rational::Rational;

/// A polynomial with exact rational coefficients, standing in for a
/// truncation of the formal power series ring `R[[x_1, ..., x_n]]`.
///
/// Terms are kept in a map ordered by the local monomial order, so the
/// leading monomial is the last key. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::term(Monomial::one(dim), c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn var(dim: usize, axis: usize) -> Self {
        Self::term(Monomial::var(dim, axis), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let dim = m.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { dim, terms }
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(dim);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Build from integer coefficients and exponent vectors.
    pub fn from_int_terms(dim: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            dim,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), Rational::from_integer(BigInt::from(*c)))),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending local order (smallest first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.dim))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.dim(), self.dim);
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.dim);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative along axis `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if let Some(low) = m.lower(i) {
                out.add_term(low, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Largest monomial under the local order with its coefficient.
    pub fn leading(&self) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous(&self, d: u32) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.min_degree(), self.max_degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// Product truncated to total degree at most `d`.
    pub fn mul_truncated(&self, other: &Polynomial, d: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > d {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree() <= d {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text: terms greatest first under the local order, `*` between
/// factors, rational coefficients as `p/q`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Coefficient vector of a homogeneous polynomial against an ordered list of
/// monomials; `None` if some term falls outside the list.
pub fn coordinates(p: &Polynomial, basis: &[Monomial]) -> Option<Vec<Rational>> {
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut v = alloc::vec![Rational::zero(); basis.len()];
    for (m, c) in p.terms() {
        v[*index.get(m)?] = c.clone();
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(4, i)
    }

    #[test]
    fn ring_laws_cancel() {
        let p = &x(0) * &(&x(2) + &x(3)) - &x(0) * &x(2);
        assert_eq!(p, &x(0) * &x(3));
    }

    #[test]
    fn printing_order_is_local() {
        let f1 = &(&(&x(0) * &x(0)) - &(&x(1) * &x(1))) + &(&(&x(2) * &x(2)) - &(&x(3) * &x(3)));
        assert_eq!(alloc::format!("{}", f1), "x1^2 - x2^2 + x3^2 - x4^2");
        let q = &Polynomial::one(4) + &x(0);
        assert_eq!(alloc::format!("{}", q), "1 + x1");
        assert_eq!(alloc::format!("{}", Polynomial::zero(4)), "0");
        assert_eq!(alloc::format!("{}", x(1).scale(&crate::rational::frac(-3, 2))), "-3/2*x2");
    }

    #[test]
    fn leading_monomial() {
        let q = &Polynomial::one(4) + &x(0);
        assert!(q.leading().unwrap().0.is_one());
        let r = &x(1) + &x(0);
        assert_eq!(r.leading().unwrap(), (Monomial::var(4, 0), int(1)));
        assert!(Polynomial::zero(4).leading().is_err());
    }

    #[test]
    fn derivative_power_rule() {
        let p = x(0).pow(3).scale(&int(2));
        assert_eq!(p.derivative(0), x(0).pow(2).scale(&int(6)));
        assert!(p.derivative(1).is_zero());
    }
}
