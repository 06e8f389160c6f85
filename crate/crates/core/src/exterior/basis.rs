use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::element::GradedElement;
use super::index::{indices_of_degree, ExteriorIndex, Kind};
use super::monomial::{binomial, monomials_of_degree, Monomial};
use super::polynomial::Polynomial;
use crate::error::{AlgebraError, Result};
use crate::rational::Rational;

/// The ordered monomial basis of one `(kind, degree k, weight w)` slice:
/// pairs `(I, x^alpha)` ordered lexicographically on `I`, then greatest
/// monomial first.
#[derive(Clone, Debug)]
pub struct WeightSliceBasis {
    kind: Kind,
    dim: usize,
    degree: usize,
    weight: i64,
    elements: Vec<(ExteriorIndex, Monomial)>,
    lookup: BTreeMap<(ExteriorIndex, Monomial), usize>,
}

impl WeightSliceBasis {
    pub fn enumerate(kind: Kind, dim: usize, degree: usize, weight: i64) -> Self {
        let mut elements = Vec::new();
        if degree <= dim {
            if let Some(d) = coefficient_degree(kind, degree, weight) {
                let monos = monomials_of_degree(dim, d);
                for idx in indices_of_degree(dim, degree) {
                    for m in &monos {
                        elements.push((idx, m.clone()));
                    }
                }
            }
        }
        let lookup = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        WeightSliceBasis { kind, dim, degree, weight, elements, lookup }
    }

    /// `C(n, k) C(n - 1 + d, n - 1)` with `d` the coefficient degree.
    pub fn expected_size(kind: Kind, dim: usize, degree: usize, weight: i64) -> usize {
        if degree > dim {
            return 0;
        }
        match coefficient_degree(kind, degree, weight) {
            Some(d) => {
                (binomial(dim as u64, degree as u64) * binomial(dim as u64 - 1 + d as u64, dim as u64 - 1))
                    as usize
            }
            None => 0,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn entries(&self) -> &[(ExteriorIndex, Monomial)] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> GradedElement {
        let (idx, m) = &self.elements[i];
        GradedElement::monomial_element(self.kind, *idx, Polynomial::term(m.clone(), crate::rational::one()))
    }

    pub fn position(&self, idx: ExteriorIndex, m: &Monomial) -> Option<usize> {
        self.lookup.get(&(idx, m.clone())).copied()
    }

    /// Sparse coordinates of `e`; fails if `e` has terms outside this slice.
    pub fn sparse_coordinates(&self, e: &GradedElement) -> Result<Vec<(usize, Rational)>> {
        if e.is_zero() {
            return Ok(Vec::new());
        }
        if e.kind() != self.kind {
            return Err(AlgebraError::KindMismatch);
        }
        let mut out = Vec::new();
        for (idx, m, c) in e.terms() {
            match self.position(idx, m) {
                Some(i) => out.push((i, c.clone())),
                None => {
                    return Err(AlgebraError::InvalidArgument(alloc::format!(
                        "term {:?}*{} lies outside slice (k={}, w={})",
                        idx,
                        m,
                        self.degree,
                        self.weight
                    )))
                }
            }
        }
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    pub fn coordinates(&self, e: &GradedElement) -> Result<Vec<Rational>> {
        let mut v = alloc::vec![Rational::zero(); self.len()];
        for (i, c) in self.sparse_coordinates(e)? {
            v[i] = c;
        }
        Ok(v)
    }

    pub fn from_coordinates(&self, v: &[Rational]) -> GradedElement {
        let mut out = GradedElement::zero(self.kind, self.dim, self.degree);
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (idx, m) = &self.elements[i];
            out.add_component(*idx, &Polynomial::term(m.clone(), c.clone()));
        }
        out
    }
}

fn coefficient_degree(kind: Kind, degree: usize, weight: i64) -> Option<u32> {
    let d = match kind {
        Kind::Form => weight - degree as i64,
        Kind::Multivector => weight + degree as i64,
    };
    u32::try_from(d).ok()
}

/// Convenience wrapper returning the basis.
pub fn enumerate_basis(k: usize, w: i64, kind: Kind, dim: usize) -> WeightSliceBasis {
    WeightSliceBasis::enumerate(kind, dim, k, w)
}
