//! Path-encoded qudit states and the qudit ↔ multi-qubit index mapping.
//!
//! A single photon in one of `d` waveguides carries a `d`-level state `|i⟩`.
//! For `d = 8` the path index is read as a three-bit string `|b₂b₁b₀⟩` (MSB
//! first): the first two bits are the data qubits, the last bit is the
//! ancilla. Even paths therefore have the ancilla in `|0⟩`.
//!
//! Global phases are never tracked; states are compared through moduli or
//! overlap magnitudes only.

use ndarray::Array1;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{ensure_finite, Error, Result};

/// Tolerance on `Σ|aᵢ|² − 1` below which a state is flagged normalized.
pub const NORM_TOL: f64 = 1e-12;

/// Bloch-angle pair (Δθ, Δφ) parameterizing one qubit.
///
/// The prepared single-qubit state is `sin Δθ |0⟩ + e^{−iΔφ} cos Δθ |1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitParams {
    pub delta_theta: f64,
    pub delta_phi: f64,
}

impl QubitParams {
    pub fn new(delta_theta: f64, delta_phi: f64) -> Result<Self> {
        ensure_finite(delta_theta, "delta_theta")?;
        ensure_finite(delta_phi, "delta_phi")?;
        Ok(Self { delta_theta, delta_phi })
    }

    /// Angles wrapped to `[0, 2π)`. Used for reporting only, never before
    /// evaluation, since the trigonometric functions accept any real.
    pub fn canonicalized(&self) -> (f64, f64) {
        (self.delta_theta.rem_euclid(TAU), self.delta_phi.rem_euclid(TAU))
    }

    /// Settings that prepare `|0⟩`.
    pub fn ket_zero() -> Self {
        Self { delta_theta: std::f64::consts::FRAC_PI_2, delta_phi: 0.0 }
    }

    /// Settings that prepare `|1⟩`.
    pub fn ket_one() -> Self {
        Self { delta_theta: 0.0, delta_phi: 0.0 }
    }
}

/// Normalized (or intentionally lossy) complex amplitude vector over
/// 2, 4 or 8 waveguide paths.
#[derive(Debug, Clone, PartialEq)]
pub struct QuditState {
    amplitudes: Array1<Complex64>,
    normalized: bool,
}

impl QuditState {
    /// Wraps an amplitude vector; the `normalized` flag is set from the norm.
    pub fn new(amplitudes: Array1<Complex64>) -> Result<Self> {
        let d = amplitudes.len();
        if !matches!(d, 2 | 4 | 8) {
            return Err(Error::InvalidParameter(format!("state dimension must be 2, 4 or 8, got {d}")));
        }
        for (i, a) in amplitudes.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::InvalidParameter(format!("amplitude {i} is not finite")));
            }
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let normalized = (norm_sqr - 1.0).abs() < NORM_TOL;
        Ok(Self { amplitudes, normalized })
    }

    /// Basis vector `|index⟩` in dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dimension: dim });
        }
        let mut v = Array1::zeros(dim);
        v[index] = Complex64::new(1.0, 0.0);
        Self::new(v)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &Array1<Complex64> {
        &self.amplitudes
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Raw per-path powers `|aᵢ|²` (not renormalized).
    pub fn powers(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Per-path powers renormalized to sum to one.
    pub fn powers_normalized(&self) -> Result<Vec<f64>> {
        let total = self.norm_sqr();
        if total <= 0.0 {
            return Err(Error::DegenerateState);
        }
        Ok(self.amplitudes.iter().map(|a| a.norm_sqr() / total).collect())
    }

    /// Serializes to JSON as `[re, im]` pairs plus a dimension field.
    pub fn to_json(&self) -> String {
        let repr = StateRepr {
            dimension: self.dim(),
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
            normalized: self.normalized,
        };
        serde_json::to_string_pretty(&repr).expect("state serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: StateRepr = serde_json::from_str(text)
            .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
        if repr.amplitudes.len() != repr.dimension {
            return Err(Error::LengthMismatch { expected: repr.dimension, got: repr.amplitudes.len() });
        }
        let v: Array1<Complex64> =
            repr.amplitudes.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        Self::new(v)
    }
}

#[derive(Serialize, Deserialize)]
struct StateRepr {
    dimension: usize,
    amplitudes: Vec<[f64; 2]>,
    normalized: bool,
}

/// Bijection between path indices and qubit bitstrings for a power-of-two
/// dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathMap {
    pub dimension: usize,
    pub qubit_count: usize,
}

impl PathMap {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension < 2 || !dimension.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "dimension must be a power of two ≥ 2, got {dimension}"
            )));
        }
        Ok(Self { dimension, qubit_count: dimension.trailing_zeros() as usize })
    }
}

/// Prepares the single-qubit state `(sin Δθ, e^{−iΔφ} cos Δθ)`.
pub fn qubit_from_angles(p: &QubitParams) -> Result<QuditState> {
    ensure_finite(p.delta_theta, "delta_theta")?;
    ensure_finite(p.delta_phi, "delta_phi")?;
    let a0 = Complex64::new(p.delta_theta.sin(), 0.0);
    let a1 = Complex64::from_polar(p.delta_theta.cos(), -p.delta_phi);
    QuditState::new(Array1::from(vec![a0, a1]))
}

/// Tensor-embeds two qubits into the eight-path space with the ancilla fixed
/// to `|0⟩`: the amplitude of `|b_ψ b_ξ 0⟩` lands on path `2·(2·b_ψ + b_ξ)`,
/// and every odd path is exactly zero.
pub fn embed_two_qubit(psi: &QuditState, xi: &QuditState) -> Result<QuditState> {
    if psi.dim() != 2 || xi.dim() != 2 {
        return Err(Error::InvalidParameter("embed_two_qubit expects two 2-level states".into()));
    }
    let mut v = Array1::zeros(8);
    for b_psi in 0..2 {
        for b_xi in 0..2 {
            v[2 * (2 * b_psi + b_xi)] = psi.amplitudes()[b_psi] * xi.amplitudes()[b_xi];
        }
    }
    QuditState::new(v)
}

/// Standard binary expansion of a path index, MSB = first qubit.
pub fn path_to_bits(index: usize, map: &PathMap) -> Result<String> {
    if index >= map.dimension {
        return Err(Error::IndexOutOfRange { index, dimension: map.dimension });
    }
    Ok((0..map.qubit_count)
        .rev()
        .map(|bit| if index >> bit & 1 == 1 { '1' } else { '0' })
        .collect())
}

/// Inverse of [`path_to_bits`].
pub fn bits_to_path(bits: &str, map: &PathMap) -> Result<usize> {
    if bits.len() != map.qubit_count {
        return Err(Error::LengthMismatch { expected: map.qubit_count, got: bits.len() });
    }
    let mut index = 0usize;
    for c in bits.chars() {
        index <<= 1;
        match c {
            '0' => {}
            '1' => index |= 1,
            other => {
                return Err(Error::InvalidParameter(format!("bitstring may contain only 0/1, got '{other}'")))
            }
        }
    }
    Ok(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn angles_for_ket_zero_and_one() {
        let zero = qubit_from_angles(&QubitParams::ket_zero()).unwrap();
        assert_abs_diff_eq!(zero.amplitudes()[0].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(zero.amplitudes()[1].norm(), 0.0, epsilon = 1e-15);

        let one = qubit_from_angles(&QubitParams::ket_one()).unwrap();
        assert_abs_diff_eq!(one.amplitudes()[0].norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(one.amplitudes()[1].re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn equal_superposition_at_quarter_theta() {
        let q = QubitParams::new(FRAC_PI_4, 0.0).unwrap();
        let s = qubit_from_angles(&q).unwrap();
        let r = 1.0 / 2.0f64.sqrt();
        assert_abs_diff_eq!(s.amplitudes()[0].re, r, epsilon = 1e-15);
        assert_abs_diff_eq!(s.amplitudes()[1].re, r, epsilon = 1e-15);
        assert!(s.is_normalized());
    }

    #[test]
    fn non_finite_angles_rejected() {
        assert!(QubitParams::new(f64::NAN, 0.0).is_err());
        assert!(qubit_from_angles(&QubitParams { delta_theta: f64::INFINITY, delta_phi: 0.0 }).is_err());
    }

    #[test]
    fn embed_basis_states() {
        let zero = qubit_from_angles(&QubitParams::ket_zero()).unwrap();
        let one = qubit_from_angles(&QubitParams::ket_one()).unwrap();

        let s00 = embed_two_qubit(&zero, &zero).unwrap();
        assert_abs_diff_eq!(s00.amplitudes()[0].norm(), 1.0, epsilon = 1e-15);

        let s11 = embed_two_qubit(&one, &one).unwrap();
        assert_abs_diff_eq!(s11.amplitudes()[6].norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn embed_superposition_spreads_over_paths_zero_and_four() {
        let plus = qubit_from_angles(&QubitParams::new(FRAC_PI_4, 0.0).unwrap()).unwrap();
        let zero = qubit_from_angles(&QubitParams::ket_zero()).unwrap();
        let s = embed_two_qubit(&plus, &zero).unwrap();
        let r = 1.0 / 2.0f64.sqrt();
        assert_abs_diff_eq!(s.amplitudes()[0].norm(), r, epsilon = 1e-15);
        assert_abs_diff_eq!(s.amplitudes()[4].norm(), r, epsilon = 1e-15);
        for odd in [1, 3, 5, 7] {
            assert_eq!(s.amplitudes()[odd], Complex64::new(0.0, 0.0));
        }
        assert!(s.is_normalized());
    }

    #[test]
    fn path_bit_mapping() {
        let map = PathMap::new(8).unwrap();
        assert_eq!(path_to_bits(5, &map).unwrap(), "101");
        assert_eq!(path_to_bits(0, &map).unwrap(), "000");
        assert_eq!(path_to_bits(3, &map).unwrap(), "011");
        assert!(path_to_bits(8, &map).is_err());
        assert_eq!(bits_to_path("110", &map).unwrap(), 6);
    }

    #[test]
    fn state_json_round_trip() {
        let q = QubitParams::new(0.3, -1.2).unwrap();
        let s = qubit_from_angles(&q).unwrap();
        let back = QuditState::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn canonicalization_wraps_for_reporting_only() {
        let q = QubitParams::new(-FRAC_PI_2, 3.0 * TAU + 0.5).unwrap();
        let (t, p) = q.canonicalized();
        assert_abs_diff_eq!(t, 3.0 * FRAC_PI_2, epsilon = 1e-12);
        assert_abs_diff_eq!(p, 0.5, epsilon = 1e-12);
        // evaluation uses the raw angles
        assert_abs_diff_eq!(q.delta_theta.sin(), -1.0, epsilon = 1e-15);
    }
}
