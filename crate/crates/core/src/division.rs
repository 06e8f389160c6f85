//! Graded division groups `D^p(a_1, ..., a_k)`, slices of the Jacobian
//! ideal and regular-sequence witnesses.

use alloc::vec::Vec;

use num_traits::One;

use crate::catalog::{jacobian_generators, LefschetzCatalog};
use crate::error::{AlgebraError, Result};
use crate::exterior::{binomial, coordinates, count_of_degree, monomials_of_degree, GradedElement, Kind, Polynomial, WeightSliceBasis};
use crate::linalg::{dense_from_sparse, quotient_dim, rank_of_vectors, sparse_from_dense, ExactMatrix, SparseVec, Subspace};
use crate::normal_form::{ideal_dim, OrderedIdealBasis};
use crate::rational::Rational;

/// `{ b in Omega^p_w : b ^ a_1 ^ ... ^ a_k = 0 } / sum a_i ^ Omega^(p-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionProblem {
    pub forms: Vec<GradedElement>,
    pub degree: usize,
    pub weight: i64,
}

impl DivisionProblem {
    pub fn new(forms: Vec<GradedElement>, degree: usize, weight: i64) -> Result<Self> {
        let dim = forms.first().map_or(0, GradedElement::dim);
        for a in &forms {
            if a.kind() != Kind::Form || a.degree() != 1 {
                return Err(AlgebraError::InvalidArgument("division problems take 1-forms".into()));
            }
            if a.dim() != dim {
                return Err(AlgebraError::DimensionMismatch { left: a.dim(), right: dim });
            }
            if a.is_zero() || !a.is_weight_homogeneous() {
                return Err(AlgebraError::Unsupported("the 1-forms must be nonzero and weight homogeneous".into()));
            }
        }
        if forms.is_empty() {
            return Err(AlgebraError::InvalidArgument("at least one 1-form is needed".into()));
        }
        Ok(DivisionProblem { forms, degree, weight })
    }

    /// `(df1, df2)` in degree `p` with coefficients of degree `d`.
    pub fn lefschetz(c: &LefschetzCatalog, p: usize, d: u32) -> Self {
        Self::new(alloc::vec![c.df1.clone(), c.df2.clone()], p, p as i64 + d as i64).expect("valid forms")
    }

    fn dim(&self) -> usize {
        self.forms[0].dim()
    }

    fn form_weight(a: &GradedElement) -> i64 {
        a.weights()[0]
    }

    fn basis(&self, p: usize, w: i64) -> WeightSliceBasis {
        WeightSliceBasis::enumerate(Kind::Form, self.dim(), p, w)
    }

    /// The slice the group lives in.
    pub fn slice(&self) -> WeightSliceBasis {
        self.basis(self.degree, self.weight)
    }

    /// Matrix of `b -> b ^ a_1 ^ ... ^ a_k` on the slice.
    pub fn wedge_matrix(&self) -> Result<ExactMatrix> {
        let mut product = self.forms[0].clone();
        for a in &self.forms[1..] {
            product = product.wedge(a)?;
        }
        let source = self.slice();
        let k = self.degree + self.forms.len();
        if product.is_zero() || k > self.dim() {
            return Ok(ExactMatrix::zeros(0, source.len()));
        }
        // weights add under the wedge product
        let target = self.basis(k, self.weight + self.forms.iter().map(Self::form_weight).sum::<i64>());
        let columns: Vec<SparseVec> =
            (0..source.len()).map(|j| target.sparse_coordinates(&source.element(j).wedge(&product)?)).collect::<Result<_>>()?;
        ExactMatrix::from_columns(target.len(), columns)
    }

    /// Spanning vectors of `sum a_i ^ Omega^(p-1)` inside the slice.
    pub fn trivial_vectors(&self) -> Result<Vec<SparseVec>> {
        let slice = self.slice();
        let mut out = Vec::new();
        if self.degree == 0 {
            return Ok(out);
        }
        for a in &self.forms {
            let lower = self.basis(self.degree - 1, self.weight - Self::form_weight(a));
            for j in 0..lower.len() {
                let v = slice.sparse_coordinates(&a.wedge(&lower.element(j))?)?;
                if !v.is_empty() {
                    out.push(v);
                }
            }
        }
        Ok(out)
    }
}

/// Dimension of the division group by rank arithmetic:
/// `(dim slice - rank wedge) - rank trivial`.
pub fn division_group_dim(prob: &DivisionProblem) -> Result<usize> {
    let n = prob.slice().len();
    let kernel = n - prob.wedge_matrix()?.rank();
    Ok(kernel - rank_of_vectors(n, &prob.trivial_vectors()?))
}

/// The same dimension through an explicit kernel basis and a quotient.
pub fn division_group_dim_by_quotient(prob: &DivisionProblem) -> Result<usize> {
    let n = prob.slice().len();
    let (_, kernel) = prob.wedge_matrix()?.rank_kernel();
    let sub: Vec<Vec<Rational>> = prob.trivial_vectors()?.iter().map(|v| dense_from_sparse(v, n)).collect();
    quotient_dim(&kernel, &sub)
}

fn is_lefschetz_pair(prob: &DivisionProblem, c: &LefschetzCatalog) -> bool {
    prob.forms.len() == 2 && prob.forms[0] == c.df1 && prob.forms[1] == c.df2
}

/// The images `c beta_1 + (p x1 + q1 x3 + q2) beta_2` of the parameter
/// monomials of `R + R[[x2]] + R[[x2, x4]]^2` of matching degree, for
/// `D^2(df1, df2)`.
pub fn division_group_basis(prob: &DivisionProblem) -> Result<Vec<GradedElement>> {
    let c = LefschetzCatalog::new();
    if prob.degree != 2 || !is_lefschetz_pair(prob, &c) {
        return Err(AlgebraError::Unsupported("a basis is known for D^2(df1, df2) only".into()));
    }
    let d = prob.weight - 2;
    if d < 0 {
        return Ok(Vec::new());
    }
    let d = d as u32;
    let x = |i| c.x(i);
    let xy = |a: u32, b: u32| &x(2).pow(a) * &x(4).pow(b);
    let mut out = Vec::new();
    if d == 0 {
        out.push(c.beta1.clone());
    }
    if d >= 1 {
        out.push(c.beta2.mul_poly(&(&x(1) * &x(2).pow(d - 1))));
        for a in (0..d).rev() {
            out.push(c.beta2.mul_poly(&(&x(3) * &xy(a, d - 1 - a))));
        }
    }
    for a in (0..=d).rev() {
        out.push(c.beta2.mul_poly(&xy(a, d - a)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionBasisVerdict {
    pub count: usize,
    pub in_kernel: bool,
    /// Rank the forms add to the trivial part.
    pub independent_rank: usize,
    pub dim: usize,
}

impl DivisionBasisVerdict {
    pub fn passed(&self) -> bool {
        self.in_kernel && self.independent_rank == self.count && self.count == self.dim
    }
}

pub fn verify_division_basis(prob: &DivisionProblem, forms: &[GradedElement]) -> Result<DivisionBasisVerdict> {
    let slice = prob.slice();
    let m = prob.wedge_matrix()?;
    let mut in_kernel = true;
    let mut vectors = Vec::new();
    for f in forms {
        let v = slice.sparse_coordinates(f)?;
        if !m.mul_sparse(&v).is_empty() {
            in_kernel = false;
        }
        vectors.push(v);
    }
    let mut trivial = Subspace::new(slice.len());
    for v in prob.trivial_vectors()? {
        trivial.insert(&v);
    }
    Ok(DivisionBasisVerdict {
        count: forms.len(),
        in_kernel,
        independent_rank: trivial.rank_increase(&vectors),
        dim: division_group_dim(prob)?,
    })
}

/// Whether `a` and `b` define the same class: both in the kernel of the
/// wedge and their difference trivial.
pub fn same_class(prob: &DivisionProblem, a: &GradedElement, b: &GradedElement) -> Result<bool> {
    let slice = prob.slice();
    let m = prob.wedge_matrix()?;
    let (va, vb) = (slice.sparse_coordinates(a)?, slice.sparse_coordinates(b)?);
    if !m.mul_sparse(&va).is_empty() || !m.mul_sparse(&vb).is_empty() {
        return Ok(false);
    }
    let diff = slice.sparse_coordinates(&(a - b))?;
    let mut trivial = Subspace::new(slice.len());
    for v in prob.trivial_vectors()? {
        trivial.insert(&v);
    }
    Ok(trivial.contains(&diff))
}

/// Degree-`d` slice of the Jacobian ideal: `(dim J_d, dim R_d / J_d)`.
pub fn ideal_slice_dim(d: u32) -> (usize, usize) {
    let j = ideal_dim(&OrderedIdealBasis::lefschetz_jacobian(), d);
    (j, count_of_degree(4, d) - j)
}

/// The closed formula for `dim J_d`, valid for `d >= 2`.
pub fn printed_ideal_dim(d: u32) -> Option<usize> {
    if d < 2 {
        return None;
    }
    let d = d as u64;
    let base = 2 * binomial(d - 1, 1) + 2 * binomial(d + 1, 3);
    let v = if d < 4 { base } else { base - binomial(d - 1, 3) };
    Some(v as usize)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSequenceVerdict {
    /// First failure as `(step, degree)`, steps counted from one.
    pub failure: Option<(usize, u32)>,
}

impl RegularSequenceVerdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn slice_vectors(gens: &[Polynomial], d: u32, monomials: &[crate::exterior::Monomial]) -> Vec<SparseVec> {
    let mut out = Vec::new();
    for g in gens {
        let gd = g.max_degree().unwrap_or(0);
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(4, d - gd) {
            let p = g.mul_monomial(&m, &Rational::one());
            out.push(sparse_from_dense(&coordinates(&p, monomials).expect("degree d")));
        }
    }
    out
}

/// Check degree by degree, up to `w_max`, that `seq[i]` is a
/// non-zero-divisor on `R / <seq[0..i]>`: the `h` of degree `d - deg r`
/// with `r h` in the ideal are exactly the ideal elements.
pub fn regular_sequence_check(seq: &[Polynomial], w_max: u32) -> Result<RegularSequenceVerdict> {
    for r in seq {
        if r.is_zero() || !r.is_homogeneous() || r.dim() != 4 {
            return Err(AlgebraError::InvalidArgument("expected nonzero homogeneous polynomials on R^4".into()));
        }
    }
    for (i, r) in seq.iter().enumerate() {
        let prev = &seq[..i];
        let e_deg = r.max_degree().unwrap_or(0);
        for d in e_deg..=w_max {
            let e = d - e_deg;
            let monomials = monomials_of_degree(4, d);
            let lower = monomials_of_degree(4, e);
            let ideal = slice_vectors(prev, d, &monomials);
            let rank_ideal = rank_of_vectors(monomials.len(), &ideal);
            let mut both = ideal.clone();
            both.extend(slice_vectors(core::slice::from_ref(r), d, &monomials));
            let rank_map = rank_of_vectors(monomials.len(), &both) - rank_ideal;
            let kernel = lower.len() - rank_map;
            let ideal_lower = rank_of_vectors(lower.len(), &slice_vectors(prev, e, &lower));
            if kernel != ideal_lower {
                return Ok(RegularSequenceVerdict { failure: Some((i + 1, d)) });
            }
        }
    }
    Ok(RegularSequenceVerdict { failure: None })
}

/// The two quadrics of the standard example.
pub fn example_sequence() -> [Polynomial; 2] {
    let [_, _, a, b] = jacobian_generators();
    [a, b]
}
