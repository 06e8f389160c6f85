use crate::error::{AlgebraError, Result};
use crate::exterior::{GradedElement, Kind};
use crate::poisson::PoissonStructure;

/// Send a `delta_pi`-cycle to the `d_pi`-cocycle `star^-1(h)`.
pub fn cohomology_transfer(poisson: &PoissonStructure, h: &GradedElement) -> Result<GradedElement> {
    if h.kind() != Kind::Form {
        return Err(AlgebraError::KindMismatch);
    }
    if !poisson.delta_pi(h)?.is_zero() {
        return Err(AlgebraError::NotACycle);
    }
    let v = h.star_inv()?;
    if !poisson.d_pi(&v)?.is_zero() {
        return Err(AlgebraError::Unsupported("star does not intertwine the differentials".into()));
    }
    Ok(v)
}
