//! Dense complex transfer matrices for optical components and composed stages.
//!
//! Everything in this circuit is at most 8×8, so matrices are stored dense and
//! all checks are done numerically in double precision.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for the unitarity check `‖U†U − I‖_max`.
pub const UNITARITY_TOL: f64 = 1e-12;

/// A dense complex square matrix describing a component or a composed stage.
///
/// The `unitary` flag is determined numerically at construction time, so a
/// lossy matrix (amplitude scale < 1) is never reported as unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferMatrix {
    entries: Array2<Complex64>,
    unitary: bool,
}

impl TransferMatrix {
    /// Wraps a square matrix, computing the unitarity flag.
    pub fn new(entries: Array2<Complex64>) -> Self {
        assert_eq!(entries.nrows(), entries.ncols(), "transfer matrix must be square");
        let unitary = unitarity_defect(&entries) < UNITARITY_TOL;
        Self { entries, unitary }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(Array2::eye(dim))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &Array2<Complex64> {
        &self.entries
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &TransferMatrix) -> TransferMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in composition");
        TransferMatrix::new(self.entries.dot(&rhs.entries))
    }

    /// Applies the matrix to a column vector of amplitudes.
    pub fn apply(&self, amplitudes: &Array1<Complex64>) -> Array1<Complex64> {
        assert_eq!(self.dim(), amplitudes.len(), "dimension mismatch in application");
        self.entries.dot(amplitudes)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> TransferMatrix {
        TransferMatrix::new(self.entries.t().mapv(|z| z.conj()))
    }

    /// Largest entrywise modulus of the difference to `other`.
    pub fn max_abs_diff(&self, other: &TransferMatrix) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Serializes to JSON with row-major `[re, im]` entry pairs.
    pub fn to_json(&self) -> String {
        let repr = MatrixRepr {
            dimension: self.dim(),
            entries: self.entries.iter().map(|z| [z.re, z.im]).collect(),
            unitary: self.unitary,
        };
        serde_json::to_string_pretty(&repr).expect("matrix serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: MatrixRepr = serde_json::from_str(text)
            .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
        let d = repr.dimension;
        if repr.entries.len() != d * d {
            return Err(Error::LengthMismatch { expected: d * d, got: repr.entries.len() });
        }
        let data: Vec<Complex64> = repr.entries.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        let entries = Array2::from_shape_vec((d, d), data).expect("shape checked above");
        Ok(Self::new(entries))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    dimension: usize,
    entries: Vec<[f64; 2]>,
    unitary: bool,
}

/// `‖U†U − I‖_max` for a square matrix.
pub fn unitarity_defect(entries: &Array2<Complex64>) -> f64 {
    let gram = entries.t().mapv(|z| z.conj()).dot(entries);
    let mut defect = 0.0f64;
    for i in 0..gram.nrows() {
        for j in 0..gram.ncols() {
            let expected = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
            defect = defect.max((gram[[i, j]] - expected).norm());
        }
    }
    defect
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_unitary() {
        let m = TransferMatrix::identity(4);
        assert!(m.is_unitary());
        assert_eq!(m.dim(), 4);
    }

    #[test]
    fn scaled_identity_is_not_unitary() {
        let m = TransferMatrix::new(Array2::eye(2).mapv(|z: Complex64| z * 0.9));
        assert!(!m.is_unitary());
    }

    #[test]
    fn json_round_trip_preserves_entries() {
        let mut e = Array2::zeros((2, 2));
        e[[0, 1]] = Complex64::new(0.25, -1.5);
        e[[1, 0]] = Complex64::new(-0.5, 0.75);
        let m = TransferMatrix::new(e);
        let back = TransferMatrix::from_json(&m.to_json()).unwrap();
        assert_eq!(back.max_abs_diff(&m), 0.0);
    }
}
