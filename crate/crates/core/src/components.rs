//! Transfer matrices for the individual optical elements.
//!
//! Components come in ideal and fabrication-parameterized form. An MMI with
//! splitting angle `α` and amplitude scale `β` acts as
//! `β·[[cos α, i sin α], [i sin α, cos α]]`; the ideal device has `α = π/4`,
//! `β = 1`. Waveguide crossings carry a power transmission `T ≤ 1`. Phase
//! shifters are diagonal and always unitary.
//!
//! MZI matrices are produced by explicit multiplication of the factor
//! matrices rather than by transcribing a closed form, which keeps every
//! sign convention in one place.

use ndarray::{linalg::kron, Array1, Array2};
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_4;

use crate::error::{ensure_finite, Error, Result};
use crate::matrix::TransferMatrix;

/// MMI splitting angle and amplitude scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MmiParams {
    /// Splitting angle in radians; the balanced device sits at π/4.
    pub alpha: f64,
    /// Amplitude scale in (0, 1]; powers below 1 model insertion loss.
    pub beta: f64,
}

impl MmiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        ensure_finite(alpha, "alpha")?;
        ensure_finite(beta, "beta")?;
        if alpha <= 0.0 || alpha >= std::f64::consts::FRAC_PI_2 {
            return Err(Error::InvalidParameter(format!("alpha must lie in (0, π/2), got {alpha}")));
        }
        if beta <= 0.0 || beta > 1.0 {
            return Err(Error::InvalidParameter(format!("beta must lie in (0, 1], got {beta}")));
        }
        Ok(Self { alpha, beta })
    }

    /// Balanced lossless splitter.
    pub fn ideal() -> Self {
        Self { alpha: FRAC_PI_4, beta: 1.0 }
    }

    /// Splitting angle from measured normalized output powers
    /// (transmitted, reflected): `α = atan(√(r/t))`, `β = 1`.
    pub fn from_split_powers(transmitted: f64, reflected: f64) -> Result<Self> {
        if transmitted <= 0.0 || reflected <= 0.0 {
            return Err(Error::InvalidParameter("split powers must be positive".into()));
        }
        Self::new((reflected / transmitted).sqrt().atan(), 1.0)
    }
}

/// Power transmission of the crossing network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingParams {
    pub transmission: f64,
}

impl CrossingParams {
    pub fn new(transmission: f64) -> Result<Self> {
        ensure_finite(transmission, "transmission")?;
        if transmission <= 0.0 || transmission > 1.0 {
            return Err(Error::InvalidParameter(format!(
                "transmission must lie in (0, 1], got {transmission}"
            )));
        }
        Ok(Self { transmission })
    }

    pub fn ideal() -> Self {
        Self { transmission: 1.0 }
    }
}

/// Nominal phases plus additive error offsets for a bank of phase shifters.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseBank {
    thetas: Vec<f64>,
    deltas: Vec<f64>,
}

impl PhaseBank {
    /// Nominal phases with zero error offsets.
    pub fn new(thetas: Vec<f64>) -> Result<Self> {
        let deltas = vec![0.0; thetas.len()];
        Self::with_deltas(thetas, deltas)
    }

    pub fn with_deltas(thetas: Vec<f64>, deltas: Vec<f64>) -> Result<Self> {
        if thetas.len() != deltas.len() {
            return Err(Error::LengthMismatch { expected: thetas.len(), got: deltas.len() });
        }
        for (i, v) in thetas.iter().chain(deltas.iter()).enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("phase entry {i} is not finite")));
            }
        }
        Ok(Self { thetas, deltas })
    }

    pub fn zeros(len: usize) -> Self {
        Self { thetas: vec![0.0; len], deltas: vec![0.0; len] }
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn deltas(&self) -> &[f64] {
        &self.deltas
    }

    /// Effective phase `θ(k) + δ(k)`.
    pub fn total(&self, k: usize) -> f64 {
        self.thetas[k] + self.deltas[k]
    }

    /// Returns a copy with `shift` added to the nominal phase at `k`.
    pub fn shifted(&self, k: usize, shift: f64) -> Self {
        let mut thetas = self.thetas.clone();
        thetas[k] += shift;
        Self { thetas, deltas: self.deltas.clone() }
    }

    /// Bank with every phase doubled; MZI internal shifters are traversed in
    /// a configuration where the set phase acts twice.
    pub fn doubled(&self) -> Self {
        Self {
            thetas: self.thetas.iter().map(|t| 2.0 * t).collect(),
            deltas: self.deltas.iter().map(|d| 2.0 * d).collect(),
        }
    }
}

/// 2×2 MMI matrix `β·[[cos α, i sin α], [i sin α, cos α]]`.
pub fn mmi_matrix(p: &MmiParams) -> TransferMatrix {
    let c = Complex64::new(p.beta * p.alpha.cos(), 0.0);
    let s = Complex64::new(0.0, p.beta * p.alpha.sin());
    let entries = Array2::from_shape_vec((2, 2), vec![c, s, s, c]).unwrap();
    TransferMatrix::new(entries)
}

/// Diagonal phase matrix `diag(e^{i(θ(k)+δ(k))})`; always unitary.
pub fn phase_matrix(bank: &PhaseBank) -> TransferMatrix {
    let diag: Array1<Complex64> =
        (0..bank.len()).map(|k| Complex64::from_polar(1.0, bank.total(k))).collect();
    TransferMatrix::new(Array2::from_diag(&diag))
}

/// 2×2 MZI: two MMIs enclosing internal phase shifters set to `2(θ+δ)`.
///
/// For ideal MMIs this equals a global phase times
/// `[[sin Δθ, cos Δθ], [cos Δθ, −sin Δθ]]` with `Δθ = θ(1) − θ(2)`.
pub fn mzi_matrix(theta: &PhaseBank, mmi: &MmiParams) -> Result<TransferMatrix> {
    if theta.len() != 2 {
        return Err(Error::LengthMismatch { expected: 2, got: theta.len() });
    }
    let splitter = mmi_matrix(mmi);
    Ok(splitter.compose(&phase_matrix(&theta.doubled())).compose(&splitter))
}

/// Embeds a 2×2 transformation on waveguides `(k, k+1)` of a `dim`-path
/// structure, identity elsewhere.
pub fn embed_rot(k: usize, u: &TransferMatrix, dim: usize) -> Result<TransferMatrix> {
    if u.dim() != 2 {
        return Err(Error::InvalidParameter("embedded block must be 2×2".into()));
    }
    if k + 1 >= dim {
        return Err(Error::IndexOutOfRange { index: k, dimension: dim });
    }
    let mut entries = Array2::eye(dim);
    for a in 0..2 {
        for b in 0..2 {
            entries[[k + a, k + b]] = u.entries()[[a, b]];
        }
    }
    Ok(TransferMatrix::new(entries))
}

/// Crossing network: `√T` times the permutation exchanging paths 3 and 5
/// (the controlled swap of `|011⟩` and `|101⟩`), identity elsewhere.
pub fn cswap_matrix(c: &CrossingParams) -> TransferMatrix {
    let amp = Complex64::new(c.transmission.sqrt(), 0.0);
    let mut entries = Array2::zeros((8, 8));
    for path in 0..8 {
        let target = match path {
            3 => 5,
            5 => 3,
            other => other,
        };
        entries[[target, path]] = amp;
    }
    TransferMatrix::new(entries)
}

/// Layer of four parallel MMIs on waveguide pairs (0,1), (2,3), (4,5), (6,7):
/// the action `1 ⊗ 1 ⊗ U_MMI` on the three-qubit structure.
pub fn parallel_mmi_layer(mmi: &MmiParams) -> TransferMatrix {
    let block = mmi_matrix(mmi);
    TransferMatrix::new(kron(&Array2::eye(4), block.entries()))
}
