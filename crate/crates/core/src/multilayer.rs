//! Periodic two-medium stacks.
//!
//! One period, starting from the middle of medium 2, is the complex chain
//! `P(δ2/2)·Q(σ)·P(δ1)·Q(−σ)·P(δ2/2)` of phase matrices `P` and boundary matrices `Q`.
//! Conjugating by `C = C₂C₁` turns every `P(δ)` into `rotation(δ)` and every `Q(σ)`
//! into `squeeze_diag(σ)`, so the period becomes the real chain
//! `R(δ2/2)·B(σ)·R(δ1)·B(−σ)·R(δ2/2)`.
//!
//! Fields in the two media are normalized by `1/√n` so that the transfer matrices
//! act on flux-continuous amplitudes. Deriving `δ` and `σ` from indices, wavelength
//! and thicknesses is left to the caller.

use num_complex::Complex;

use crate::core_form::{compose_core, extract_core_params, CoreParams};
use crate::decomp::{bargmann_decompose, power, BargmannParams};
use crate::error::{Error, Result};
use crate::mat2::{CMat2, Mat2};
use crate::scalar::{Scalar, Tolerances};

/// Largest imaginary residue tolerated when a conjugated chain is read as real.
pub const IMAG_RESIDUE_LIMIT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LayerCycleSpec<T = f64> {
    /// Phase accumulated across medium 1.
    pub delta1: T,
    /// Phase accumulated across medium 2.
    pub delta2: T,
    /// Boundary rapidity for the 1 → 2 interface.
    pub sigma: T,
}

impl<T: Scalar> LayerCycleSpec<T> {
    pub fn new(delta1: T, delta2: T, sigma: T) -> Self {
        Self {
            delta1,
            delta2,
            sigma,
        }
    }
}

fn cx<T: Scalar>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// `P(δ) = diag(e^{−iδ/2}, e^{iδ/2})`.
pub fn phase_matrix<T: Scalar>(delta: T) -> CMat2<T> {
    let (s, c) = (delta * T::half()).sin_cos();
    let zero = cx(T::zero(), T::zero());
    CMat2::new(cx(c, -s), zero, zero, cx(c, s))
}

/// `Q(σ) = [[cosh σ/2, sinh σ/2], [sinh σ/2, cosh σ/2]]`.
pub fn boundary_matrix<T: Scalar>(sigma: T) -> CMat2<T> {
    CMat2::from_real(&Mat2::squeeze_offdiag(sigma))
}

pub fn cycle_matrix<T: Scalar>(spec: &LayerCycleSpec<T>) -> CMat2<T> {
    let half = phase_matrix(spec.delta2 * T::half());
    half * boundary_matrix(spec.sigma)
        * phase_matrix(spec.delta1)
        * boundary_matrix(-spec.sigma)
        * half
}

/// `C₁ = (1/√2)[[1, i], [i, 1]]`.
pub fn similarity_c1<T: Scalar>() -> CMat2<T> {
    let k = T::FRAC_1_SQRT_2();
    let (re, im) = (cx(k, T::zero()), cx(T::zero(), k));
    CMat2::new(re, im, im, re)
}

/// `C₂ = (1/√2)[[1, 1], [−1, 1]]`.
pub fn similarity_c2<T: Scalar>() -> CMat2<T> {
    let k = T::FRAC_1_SQRT_2();
    CMat2::from_real(&Mat2::new(k, k, -k, k))
}

/// `C = C₂C₁ = (1/√2)[[e^{iπ/4}, e^{iπ/4}], [−e^{−iπ/4}, e^{−iπ/4}]]`.
pub fn similarity_c<T: Scalar>() -> CMat2<T> {
    let h = T::half();
    CMat2::new(cx(h, h), cx(h, h), cx(-h, h), cx(h, -h))
}

/// `C⁻¹ = (1/√2)[[e^{−iπ/4}, −e^{iπ/4}], [e^{−iπ/4}, e^{iπ/4}]]`.
pub fn similarity_c_inverse<T: Scalar>() -> CMat2<T> {
    let h = T::half();
    CMat2::new(cx(h, -h), cx(-h, -h), cx(h, -h), cx(h, h))
}

/// Reads a complex matrix as real, failing when any imaginary part exceeds `limit`.
pub fn to_real<T: Scalar>(m: &CMat2<T>, limit: T) -> Result<Mat2<T>> {
    let residual = m.max_imag();
    if residual > limit || !residual.is_finite() {
        return Err(Error::ResidualImaginary {
            residual: residual.as_f64(),
        });
    }
    Ok(m.re())
}

/// `C · m · C⁻¹` for a product of phase and boundary matrices, read as real.
pub fn realify<T: Scalar>(m: &CMat2<T>) -> Result<Mat2<T>> {
    let conj = similarity_c() * *m * similarity_c_inverse();
    to_real(&conj, T::lit(IMAG_RESIDUE_LIMIT))
}

/// The period conjugated by `C`.
pub fn real_chain<T: Scalar>(spec: &LayerCycleSpec<T>) -> Result<Mat2<T>> {
    realify(&cycle_matrix(spec))
}

/// The same period multiplied out from real factors.
pub fn real_chain_direct<T: Scalar>(spec: &LayerCycleSpec<T>) -> Mat2<T> {
    let half = Mat2::rotation(spec.delta2 * T::half());
    half * Mat2::squeeze_diag(spec.sigma)
        * Mat2::rotation(spec.delta1)
        * Mat2::squeeze_diag(-spec.sigma)
        * half
}

/// `B(σ)·R(δ1)·B(−σ)`, the inner three factors of the real chain.
pub fn middle_chain<T: Scalar>(spec: &LayerCycleSpec<T>) -> Mat2<T> {
    Mat2::squeeze_diag(spec.sigma) * Mat2::rotation(spec.delta1) * Mat2::squeeze_diag(-spec.sigma)
}

/// Bargmann parameters of the full period. The outer rotations add `δ2/2` to the
/// angle of the middle chain: `M = R(α + δ2/2)·S(−2χ)·R(α + δ2/2)`.
pub fn chain_bargmann<T: Scalar>(spec: &LayerCycleSpec<T>) -> Result<BargmannParams<T>> {
    bargmann_decompose(&real_chain(spec)?, &Tolerances::default())
}

/// Bargmann parameters of the middle chain from `(δ1, σ)` directly:
/// `sinh χ = sin(δ1/2)·sinh σ`, `α = atan2(sin(δ1/2)·cosh σ, cos(δ1/2))`.
pub fn middle_bargmann_closed_form<T: Scalar>(spec: &LayerCycleSpec<T>) -> BargmannParams<T> {
    let (s, c) = (spec.delta1 * T::half()).sin_cos();
    BargmannParams::new(
        (s * spec.sigma.cosh()).atan2(c),
        (s * spec.sigma.sinh()).asinh(),
    )
}

pub fn chain_wigner<T: Scalar>(spec: &LayerCycleSpec<T>) -> Result<CoreParams<T>> {
    extract_core_params(&real_chain(spec)?, &Tolerances::default())
}

/// `real_chain(spec)^n` through the Wigner parameters of one period.
pub fn n_cycles<T: Scalar>(spec: &LayerCycleSpec<T>, n: u32) -> Result<Mat2<T>> {
    Ok(compose_core(&power(&chain_wigner(spec)?, n)))
}
