use alloc::vec::Vec;

use crate::catalog::LefschetzCatalog;
use crate::error::{AlgebraError, Result};
use crate::series::{catalog as expected, RationalSeries};

use super::representatives::{verify_representatives, RepresentativeVerdict};
use super::SliceComplex;

/// All weight slices `0..=max_weight` of the Lefschetz complex.
#[derive(Clone, Debug)]
pub struct HomologyEngine {
    catalog: LefschetzCatalog,
    max_weight: i64,
    slices: Vec<SliceComplex>,
}

impl HomologyEngine {
    pub fn new(max_weight: i64) -> Self {
        Self::with_catalog(LefschetzCatalog::new(), max_weight)
    }

    pub fn with_catalog(catalog: LefschetzCatalog, max_weight: i64) -> Self {
        let weights: Vec<i64> = (0..=max_weight.max(-1)).collect();
        #[cfg(feature = "parallel")]
        let slices = {
            use rayon::prelude::*;
            // heaviest slices first so the pool stays busy
            let mut s: Vec<(i64, SliceComplex)> = weights
                .par_iter()
                .rev()
                .map(|&w| (w, SliceComplex::build(&catalog.poisson, w)))
                .collect();
            s.sort_by_key(|(w, _)| *w);
            s.into_iter().map(|(_, s)| s).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let slices = weights.iter().map(|&w| SliceComplex::build(&catalog.poisson, w)).collect();
        HomologyEngine { catalog, max_weight, slices }
    }

    pub fn catalog(&self) -> &LefschetzCatalog {
        &self.catalog
    }

    pub fn max_weight(&self) -> i64 {
        self.max_weight
    }

    pub fn slice(&self, w: i64) -> Result<&SliceComplex> {
        if w < 0 || w > self.max_weight {
            return Err(AlgebraError::InvalidArgument(alloc::format!(
                "weight {w} outside the truncation 0..={}",
                self.max_weight
            )));
        }
        Ok(&self.slices[w as usize])
    }

    pub fn slices(&self) -> &[SliceComplex] {
        &self.slices
    }

    fn check_degree(k: usize) -> Result<()> {
        if k > 4 {
            return Err(AlgebraError::InvalidArgument(alloc::format!("degree {k} outside 0..=4")));
        }
        Ok(())
    }

    pub fn homology_dimension(&self, k: usize, w: i64) -> Result<usize> {
        Self::check_degree(k)?;
        Ok(self.slice(w)?.homology_dim(k))
    }

    pub fn kernel_dimension(&self, k: usize, w: i64) -> Result<usize> {
        Self::check_degree(k)?;
        Ok(self.slice(w)?.kernel_dim(k))
    }

    /// `[dim H_k at weight w]` for `w = 0..=w_max`.
    pub fn hilbert_function(&self, k: usize, w_max: i64) -> Result<Vec<usize>> {
        Self::check_degree(k)?;
        self.slice(w_max.max(0))?;
        Ok((0..=w_max).map(|w| self.slices[w as usize].homology_dim(k)).collect())
    }

    /// `[dim ker delta on degree k at weight w]` for `w = 0..=w_max`.
    pub fn kernel_function(&self, k: usize, w_max: i64) -> Result<Vec<usize>> {
        Self::check_degree(k)?;
        self.slice(w_max.max(0))?;
        Ok((0..=w_max).map(|w| self.slices[w as usize].kernel_dim(k)).collect())
    }

    pub fn verify_representatives(&self, k: usize, w: i64) -> Result<RepresentativeVerdict> {
        Self::check_degree(k)?;
        verify_representatives(&self.catalog, self.slice(w)?, k)
    }

    pub fn report(&self) -> Result<HomologyReport> {
        let mut slices = Vec::new();
        for s in &self.slices {
            for k in 0..=4 {
                slices.push(SliceDims {
                    degree: k,
                    weight: s.weight(),
                    forms: s.form_dim(k),
                    kernel: s.kernel_dim(k),
                    image: s.image_dim(k),
                    homology: s.homology_dim(k),
                });
            }
        }
        let mut series = Vec::new();
        for k in 0..=4 {
            series.push(SeriesComparison::new(
                SeriesKind::Homology,
                k,
                expected::homology(k),
                self.hilbert_function(k, self.max_weight)?,
            ));
        }
        for k in 1..=4 {
            series.push(SeriesComparison::new(
                SeriesKind::Kernel,
                k,
                expected::kernel(k),
                self.kernel_function(k, self.max_weight)?,
            ));
        }
        let mut representatives = Vec::new();
        for w in 0..=self.max_weight {
            for k in 0..=4 {
                representatives.push(self.verify_representatives(k, w)?);
            }
        }
        Ok(HomologyReport { max_weight: self.max_weight, slices, series, representatives })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceDims {
    pub degree: usize,
    pub weight: i64,
    pub forms: usize,
    pub kernel: usize,
    pub image: usize,
    pub homology: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Homology,
    Kernel,
}

/// A computed prefix against the expansion of a closed-form series.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesComparison {
    pub kind: SeriesKind,
    pub degree: usize,
    pub expected: RationalSeries,
    pub computed: Vec<usize>,
    pub expansion: Vec<i64>,
}

impl SeriesComparison {
    pub fn new(kind: SeriesKind, degree: usize, expected: RationalSeries, computed: Vec<usize>) -> Self {
        let expansion = expected.expand_i64(computed.len().saturating_sub(1));
        SeriesComparison { kind, degree, expected, computed, expansion }
    }

    pub fn matches(&self) -> bool {
        self.computed.len() == self.expansion.len()
            && self.computed.iter().zip(&self.expansion).all(|(&a, &b)| a as i64 == b)
    }
}

/// Everything the engine computes up to its truncation.
#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub max_weight: i64,
    pub slices: Vec<SliceDims>,
    pub series: Vec<SeriesComparison>,
    pub representatives: Vec<RepresentativeVerdict>,
}

impl HomologyReport {
    pub fn all_passed(&self) -> bool {
        self.series.iter().all(|s| s.matches()) && self.representatives.iter().all(|r| r.passed())
    }
}
