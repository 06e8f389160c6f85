//! Named elements of the Lefschetz case on `R^4`.
//!
//! With `z = x1 + i x2` and `w = x3 + i x4`, `E_1, E_2` and `T_1, T_2` are
//! the real and imaginary parts of `z d_z + w d_w` and `z d_w - w d_z`.

use crate::exterior::{differential, GradedElement, Kind, Polynomial};
use crate::poisson::{jacobi_poisson, PoissonStructure};
use crate::rational::{frac, int, Rational};

pub const DIM: usize = 4;

fn x(i: usize) -> Polynomial {
    Polynomial::var(DIM, i - 1)
}

fn lin(terms: &[(i64, usize)], scale: &Rational) -> Polynomial {
    let mut p = Polynomial::zero(DIM);
    for &(c, i) in terms {
        p.add_scaled(&x(i), &(int(c) * scale));
    }
    p
}

fn field(kind: Kind, coeffs: [Polynomial; 4]) -> GradedElement {
    GradedElement::from_coefficients(kind, &coeffs)
}

/// The distinguished objects of the Lefschetz fibration.
#[derive(Clone, Debug)]
pub struct LefschetzCatalog {
    pub f1: Polynomial,
    pub f2: Polynomial,
    pub df1: GradedElement,
    pub df2: GradedElement,
    pub zeta1: GradedElement,
    pub zeta2: GradedElement,
    pub beta1: GradedElement,
    pub beta2: GradedElement,
    pub e1: GradedElement,
    pub e2: GradedElement,
    pub t1: GradedElement,
    pub t2: GradedElement,
    pub w1: GradedElement,
    pub w2: GradedElement,
    pub eps1: GradedElement,
    pub eps2: GradedElement,
    pub mu: GradedElement,
    pub poisson: PoissonStructure,
}

/// `x1^2 - x2^2 + x3^2 - x4^2`.
pub fn f1() -> Polynomial {
    Polynomial::from_int_terms(DIM, &[(1, &[2, 0, 0, 0]), (-1, &[0, 2, 0, 0]), (1, &[0, 0, 2, 0]), (-1, &[0, 0, 0, 2])])
}

/// `2(x1 x2 + x3 x4)`.
pub fn f2() -> Polynomial {
    Polynomial::from_int_terms(DIM, &[(2, &[1, 1, 0, 0]), (2, &[0, 0, 1, 1])])
}

/// The four quadrics `x1^2 + x2^2, x3^2 + x4^2, x1 x3 + x2 x4, x1 x4 - x2 x3`
/// generating the ideal of coefficients of `df_1 ^ df_2`.
pub fn jacobian_generators() -> [Polynomial; 4] {
    [
        Polynomial::from_int_terms(DIM, &[(1, &[2, 0, 0, 0]), (1, &[0, 2, 0, 0])]),
        Polynomial::from_int_terms(DIM, &[(1, &[0, 0, 2, 0]), (1, &[0, 0, 0, 2])]),
        Polynomial::from_int_terms(DIM, &[(1, &[1, 0, 1, 0]), (1, &[0, 1, 0, 1])]),
        Polynomial::from_int_terms(DIM, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]),
    ]
}

impl LefschetzCatalog {
    pub fn new() -> Self {
        let half = frac(1, 2);
        let (f1, f2) = (f1(), f2());
        let zeta1 = field(
            Kind::Form,
            [lin(&[(-1, 3)], &half), lin(&[(1, 4)], &half), lin(&[(1, 1)], &half), lin(&[(-1, 2)], &half)],
        );
        let zeta2 = field(
            Kind::Form,
            [lin(&[(-1, 4)], &half), lin(&[(-1, 3)], &half), lin(&[(1, 2)], &half), lin(&[(1, 1)], &half)],
        );
        let beta1 = zeta1.de_rham().expect("form");
        let beta2 = zeta2.de_rham().expect("form");
        let e1 = field(
            Kind::Multivector,
            [lin(&[(1, 1)], &half), lin(&[(1, 2)], &half), lin(&[(1, 3)], &half), lin(&[(1, 4)], &half)],
        );
        let e2 = field(
            Kind::Multivector,
            [lin(&[(1, 2)], &half), lin(&[(-1, 1)], &half), lin(&[(1, 4)], &half), lin(&[(-1, 3)], &half)],
        );
        let t1 = field(
            Kind::Multivector,
            [lin(&[(-1, 3)], &half), lin(&[(-1, 4)], &half), lin(&[(1, 1)], &half), lin(&[(1, 2)], &half)],
        );
        let t2 = field(
            Kind::Multivector,
            [lin(&[(-1, 4)], &half), lin(&[(1, 3)], &half), lin(&[(1, 2)], &half), lin(&[(-1, 1)], &half)],
        );
        let w1 = beta1.star_inv().expect("form");
        let w2 = beta2.star_inv().expect("form");
        let eps1 = e1.star().expect("multivector");
        let eps2 = e2.star().expect("multivector");
        let poisson = jacobi_poisson(&[f1.clone(), f2.clone()], DIM).expect("two functions on R^4");
        LefschetzCatalog {
            df1: differential(&f1),
            df2: differential(&f2),
            f1,
            f2,
            zeta1,
            zeta2,
            beta1,
            beta2,
            e1,
            e2,
            t1,
            t2,
            w1,
            w2,
            eps1,
            eps2,
            mu: GradedElement::volume_form(DIM),
            poisson,
        }
    }

    pub fn pi(&self) -> &GradedElement {
        &self.poisson.bivector
    }

    pub fn zeta(&self, i: usize) -> &GradedElement {
        if i == 1 {
            &self.zeta1
        } else {
            &self.zeta2
        }
    }

    pub fn beta(&self, i: usize) -> &GradedElement {
        if i == 1 {
            &self.beta1
        } else {
            &self.beta2
        }
    }

    pub fn df(&self, i: usize) -> &GradedElement {
        if i == 1 {
            &self.df1
        } else {
            &self.df2
        }
    }

    pub fn f(&self, i: usize) -> &Polynomial {
        if i == 1 {
            &self.f1
        } else {
            &self.f2
        }
    }

    /// `f_1^a f_2^b`.
    pub fn f_monomial(&self, a: u32, b: u32) -> Polynomial {
        &self.f1.pow(a) * &self.f2.pow(b)
    }

    /// `x_i` as a polynomial, one-based.
    pub fn x(&self, i: usize) -> Polynomial {
        x(i)
    }

    pub fn scalar_form(&self, g: &Polynomial) -> GradedElement {
        GradedElement::scalar(Kind::Form, g.clone())
    }
}

impl Default for LefschetzCatalog {
    fn default() -> Self {
        Self::new()
    }
}
