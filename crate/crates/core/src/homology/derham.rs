use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::exterior::GradedElement;
use crate::linalg::{ExactMatrix, SparseVec};

use super::representatives::representative_basis;
use super::{HomologyEngine, SliceComplex};

/// The de Rham differential induced on homology, and its cohomology.
#[derive(Clone, Debug)]
pub struct DeRhamTable {
    pub max_weight: i64,
    /// `maps[w][k]`: matrix of `d: H_k -> H_(k+1)` at weight `w` in the
    /// representative bases.
    pub maps: Vec<Vec<ExactMatrix>>,
    /// `dims[w][k]`: cohomology of the induced complex.
    pub dims: Vec<Vec<usize>>,
}

impl DeRhamTable {
    pub fn dim(&self, k: usize, w: i64) -> usize {
        self.dims[w as usize][k]
    }

    /// One-dimensional at `(0, 0)` and zero elsewhere.
    pub fn is_trivial(&self) -> bool {
        self.dims.iter().enumerate().all(|(w, row)| {
            row.iter().enumerate().all(|(k, &d)| d == usize::from(k == 0 && w == 0))
        })
    }
}

/// Matrix of `d` from the degree `k` representatives to the degree
/// `k + 1` ones, found by decomposing `d(rep)` modulo boundaries.
fn induced_map(slice: &SliceComplex, k: usize, source: &[GradedElement], target: &[GradedElement]) -> Result<ExactMatrix> {
    let mut space = slice.boundaries(k + 1).clone();
    let first = space.start_tracking();
    for t in target {
        if !space.insert(&slice.coordinates(t)?) {
            return Err(AlgebraError::Unsupported("representatives dependent modulo boundaries".into()));
        }
    }
    let mut columns: Vec<SparseVec> = Vec::new();
    for s in source {
        let image = s.de_rham()?;
        let combo = space
            .coordinates(&slice.coordinates(&image)?)
            .ok_or_else(|| AlgebraError::Unsupported("representatives do not span the homology".into()))?;
        columns.push(combo.into_iter().map(|(g, x)| (g - first, x)).collect());
    }
    ExactMatrix::from_columns(target.len(), columns)
}

pub fn induced_de_rham(engine: &HomologyEngine) -> Result<DeRhamTable> {
    let c = engine.catalog();
    let mut maps = Vec::new();
    let mut dims = Vec::new();
    for slice in engine.slices() {
        let w = slice.weight();
        let reps: Vec<Vec<GradedElement>> = (0..=4).map(|k| representative_basis(c, k, w)).collect();
        for k in 0..=4 {
            if reps[k].len() != slice.homology_dim(k) {
                return Err(AlgebraError::Unsupported(alloc::format!(
                    "representative count mismatch in degree {k} at weight {w}"
                )));
            }
        }
        let row: Vec<ExactMatrix> =
            (0..4).map(|k| induced_map(slice, k, &reps[k], &reps[k + 1])).collect::<Result<_>>()?;
        let ranks: Vec<usize> = row.iter().map(ExactMatrix::rank).collect();
        let dim_row = (0..=4)
            .map(|k| {
                let out = if k < 4 { ranks[k] } else { 0 };
                let inc = if k > 0 { ranks[k - 1] } else { 0 };
                reps[k].len() - out - inc
            })
            .collect();
        maps.push(row);
        dims.push(dim_row);
    }
    Ok(DeRhamTable { max_weight: engine.max_weight(), maps, dims })
}
