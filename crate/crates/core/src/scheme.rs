//! The full parameter system of one intersection array.

use thiserror::Error;

use crate::array::IntersectionArray;
use crate::eigen::{EigenError, Eigenmatrices};
use crate::krein::{KreinError, KreinTensor};
use crate::ptensor::PTensor;
use crate::spectrum::{Spectrum, SpectrumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Krein(#[from] KreinError),
}

/// Intersection numbers, spectrum, eigenmatrices and the natural-ordering
/// Krein tensor of an array. Arrays that fail feasibility are still
/// analysed; only internal contradictions produce an error.
#[derive(Debug, Clone)]
pub struct Scheme {
    pub array: IntersectionArray,
    pub ptensor: PTensor,
    pub spectrum: Spectrum,
    pub eigenmatrices: Eigenmatrices,
    pub krein: KreinTensor,
}

impl Scheme {
    pub fn new(array: &IntersectionArray) -> Result<Self, SchemeError> {
        let ptensor = PTensor::new(array);
        let spectrum = Spectrum::new(array)?;
        let eigenmatrices = Eigenmatrices::new(array, &spectrum)?;
        let krein = KreinTensor::new(array, &spectrum, &eigenmatrices)?;
        Ok(Scheme {
            array: array.clone(),
            ptensor,
            spectrum,
            eigenmatrices,
            krein,
        })
    }

    pub fn diameter(&self) -> usize {
        self.array.diameter()
    }

    /// Krein tensor under an explicit idempotent ordering.
    pub fn krein_parameters(&self, ordering: &[usize]) -> Result<KreinTensor, KreinError> {
        self.krein.reordered(ordering)
    }
}
