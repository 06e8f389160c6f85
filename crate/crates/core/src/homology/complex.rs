use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::exterior::{GradedElement, Kind, WeightSliceBasis};
use crate::linalg::{span_of, ExactMatrix, SparseVec, Subspace};
use crate::poisson::PoissonStructure;

/// Matrix of `delta_pi` from the `(k, w)` form slice to the `(k-1, w)`
/// slice, columns indexed by the source basis.
pub fn build_delta_matrix(poisson: &PoissonStructure, k: usize, w: i64) -> ExactMatrix {
    let n = poisson.dim();
    let source = WeightSliceBasis::enumerate(Kind::Form, n, k, w);
    let target = WeightSliceBasis::enumerate(Kind::Form, n, k.saturating_sub(1), w);
    delta_matrix_between(poisson, &source, &target)
}

fn delta_matrix_between(poisson: &PoissonStructure, source: &WeightSliceBasis, target: &WeightSliceBasis) -> ExactMatrix {
    if source.degree() == 0 {
        return ExactMatrix::zeros(0, source.len());
    }
    let columns: Vec<SparseVec> = (0..source.len())
        .map(|j| {
            let image = poisson.delta_pi(&source.element(j)).expect("form input");
            target.sparse_coordinates(&image).expect("delta preserves the weight")
        })
        .collect();
    ExactMatrix::from_columns(target.len(), columns).expect("coordinates in range")
}

/// The whole complex `0 -> Omega^4_w -> ... -> Omega^0_w -> 0` at one
/// weight, with the echelonized boundary space of every degree.
#[derive(Clone, Debug)]
pub struct SliceComplex {
    weight: i64,
    bases: Vec<WeightSliceBasis>,
    // deltas[k]: degree k -> degree k-1; deltas[0] has no rows
    deltas: Vec<ExactMatrix>,
    // boundaries[k]: image of deltas[k+1] inside degree k
    boundaries: Vec<Subspace>,
}

impl SliceComplex {
    pub fn build(poisson: &PoissonStructure, weight: i64) -> Self {
        let n = poisson.dim();
        let bases: Vec<WeightSliceBasis> =
            (0..=n).map(|k| WeightSliceBasis::enumerate(Kind::Form, n, k, weight)).collect();
        let deltas: Vec<ExactMatrix> = (0..=n)
            .map(|k| if k == 0 { ExactMatrix::zeros(0, bases[0].len()) } else { delta_matrix_between(poisson, &bases[k], &bases[k - 1]) })
            .collect();
        let boundaries = (0..=n)
            .map(|k| if k < n { span_of(bases[k].len(), deltas[k + 1].columns()) } else { Subspace::new(bases[n].len()) })
            .collect();
        SliceComplex { weight, bases, deltas, boundaries }
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, k: usize) -> &WeightSliceBasis {
        &self.bases[k]
    }

    pub fn delta(&self, k: usize) -> &ExactMatrix {
        &self.deltas[k]
    }

    /// Echelon basis of `im(delta)` inside the degree `k` slice.
    pub fn boundaries(&self, k: usize) -> &Subspace {
        &self.boundaries[k]
    }

    pub fn form_dim(&self, k: usize) -> usize {
        self.bases[k].len()
    }

    /// Rank of `delta` leaving degree `k`.
    pub fn rank(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.boundaries[k - 1].rank()
        }
    }

    pub fn kernel_dim(&self, k: usize) -> usize {
        self.form_dim(k) - self.rank(k)
    }

    pub fn image_dim(&self, k: usize) -> usize {
        self.boundaries[k].rank()
    }

    pub fn homology_dim(&self, k: usize) -> usize {
        self.kernel_dim(k) - self.image_dim(k)
    }

    /// Coordinates of a form of this weight.
    pub fn coordinates(&self, form: &GradedElement) -> Result<SparseVec> {
        if form.kind() != Kind::Form {
            return Err(AlgebraError::KindMismatch);
        }
        self.bases[form.degree()].sparse_coordinates(form)
    }

    pub fn is_cycle(&self, form: &GradedElement) -> Result<bool> {
        let k = form.degree();
        if k == 0 {
            return Ok(true);
        }
        let v = self.coordinates(form)?;
        Ok(self.deltas[k].mul_sparse(&v).is_empty())
    }

    pub fn is_boundary(&self, form: &GradedElement) -> Result<bool> {
        let v = self.coordinates(form)?;
        Ok(self.boundaries[form.degree()].contains(&v))
    }

    /// A form `nu` of degree `k + 1` with `delta(nu) = form`, if one
    /// exists. For many queries in one degree use [`PreimageSolver`].
    pub fn boundary_preimage(&self, form: &GradedElement) -> Result<Option<GradedElement>> {
        let k = form.degree();
        if k >= self.top_degree() {
            let target = self.coordinates(form)?;
            return Ok(target.is_empty().then(|| GradedElement::zero(Kind::Form, form.dim(), k + 1)));
        }
        PreimageSolver::new(self, k).solve(form)
    }

    /// How much the span of `forms` (all of degree `k`) adds to the
    /// boundaries of degree `k`.
    pub fn rank_mod_boundaries(&self, k: usize, forms: &[GradedElement]) -> Result<usize> {
        let vs: Vec<SparseVec> = forms.iter().map(|f| self.coordinates(f)).collect::<Result<_>>()?;
        Ok(self.boundaries[k].rank_increase(&vs))
    }
}

/// Certified solver for `delta(nu) = b` with `b` of degree `k`, one
/// echelon basis per diagonal block of the delta matrix.
#[derive(Clone, Debug)]
pub struct PreimageSolver<'a> {
    slice: &'a SliceComplex,
    degree: usize,
    // block of every row of the delta matrix, None for zero rows
    row_block: Vec<Option<usize>>,
    blocks: Vec<(Subspace, Vec<usize>)>,
}

impl<'a> PreimageSolver<'a> {
    pub fn new(slice: &'a SliceComplex, degree: usize) -> Self {
        assert!(degree < slice.top_degree(), "no preimages above the top degree");
        let m = &slice.deltas[degree + 1];
        let mut row_block = alloc::vec![None; m.rows()];
        let mut blocks = Vec::new();
        for (rows, mut cols) in m.components() {
            if rows.is_empty() {
                continue;
            }
            for &r in &rows {
                row_block[r] = Some(blocks.len());
            }
            cols.sort_by_key(|&j| (m.column(j).len(), j));
            let mut space = Subspace::with_certificates(m.rows());
            for &j in &cols {
                if space.rank() == rows.len() {
                    break;
                }
                space.insert(m.column(j));
            }
            blocks.push((space, cols));
        }
        PreimageSolver { slice, degree, row_block, blocks }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn solve(&self, form: &GradedElement) -> Result<Option<GradedElement>> {
        if form.degree() != self.degree {
            return Err(AlgebraError::InvalidArgument(alloc::format!(
                "expected a {}-form, got degree {}",
                self.degree,
                form.degree()
            )));
        }
        let target = self.slice.coordinates(form)?;
        let mut parts: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (i, x) in target {
            match self.row_block[i] {
                Some(b) => parts.entry(b).or_default().push((i, x)),
                None => return Ok(None),
            }
        }
        let basis = &self.slice.bases[self.degree + 1];
        let mut coeffs = alloc::vec![crate::rational::zero(); basis.len()];
        for (b, part) in parts {
            let (space, cols) = &self.blocks[b];
            let Some(combo) = space.coordinates(&part) else { return Ok(None) };
            for (g, x) in combo {
                coeffs[cols[g]] = x;
            }
        }
        Ok(Some(basis.from_coordinates(&coeffs)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::LefschetzCatalog;

    #[test]
    fn top_form_at_weight_four() {
        let c = LefschetzCatalog::new();
        let m = build_delta_matrix(&c.poisson, 4, 4);
        assert_eq!((m.rows(), m.cols()), (16, 1));
        assert!(m.is_zero());
    }

    #[test]
    fn zeta_in_kernel() {
        let c = LefschetzCatalog::new();
        let m = build_delta_matrix(&c.poisson, 1, 2);
        let basis = WeightSliceBasis::enumerate(Kind::Form, 4, 1, 2);
        for z in [&c.zeta1, &c.zeta2] {
            let v = basis.sparse_coordinates(z).unwrap();
            assert!(m.mul_sparse(&v).is_empty());
        }
    }

    #[test]
    fn consecutive_deltas_compose_to_zero() {
        let c = LefschetzCatalog::new();
        for w in 0..=8 {
            for k in 1..=3 {
                let a = build_delta_matrix(&c.poisson, k, w);
                let b = build_delta_matrix(&c.poisson, k + 1, w);
                assert!(a.mul(&b).unwrap().is_zero(), "k {k} w {w}");
            }
        }
    }

    #[test]
    fn preimages_are_exact() {
        let c = LefschetzCatalog::new();
        let s = SliceComplex::build(&c.poisson, 5);
        let x1mu = c.mu.mul_poly(&c.x(1));
        let b = c.poisson.delta_pi(&x1mu).unwrap();
        let nu = s.boundary_preimage(&b).unwrap().unwrap();
        assert_eq!(c.poisson.delta_pi(&nu).unwrap(), b);
        let x = GradedElement::scalar(Kind::Form, c.x(1));
        let s1 = SliceComplex::build(&c.poisson, 1);
        assert!(s1.boundary_preimage(&x).unwrap().is_none());
    }
}
