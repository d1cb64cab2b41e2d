//! Real and complex 2×2 matrices and the elementary builders used throughout the crate.
//!
//! Rotation and squeeze builders follow the half-angle convention: the entries of
//! `rotation(θ)` are trigonometric functions of `θ/2`, those of the squeezes are
//! hyperbolic functions of `η/2` and `λ/2`. Every other module inherits this.

use std::ops::{Mul, Neg};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Real 2×2 matrix in row-major field order.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Mat2<T = f64> {
    pub a11: T,
    pub a12: T,
    pub a21: T,
    pub a22: T,
}

impl<T: Scalar> Mat2<T> {
    pub const fn new(a11: T, a12: T, a21: T, a22: T) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn diag(d1: T, d2: T) -> Self {
        Self::new(d1, T::zero(), T::zero(), d2)
    }

    /// `R(θ) = [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]]`.
    pub fn rotation(theta: T) -> Self {
        let (s, c) = (theta * T::half()).sin_cos();
        Self::new(c, -s, s, c)
    }

    /// Diagonal squeeze `B(η) = diag(e^{η/2}, e^{−η/2})`.
    pub fn squeeze_diag(eta: T) -> Self {
        let h = eta * T::half();
        Self::diag(h.exp(), (-h).exp())
    }

    /// Symmetric squeeze `S(λ) = [[cosh λ/2, sinh λ/2], [sinh λ/2, cosh λ/2]]`.
    pub fn squeeze_offdiag(lambda: T) -> Self {
        let h = lambda * T::half();
        let (sh, ch) = (h.sinh(), h.cosh());
        Self::new(ch, sh, sh, ch)
    }

    /// Upper shear `[[1, s], [0, 1]]`.
    pub fn shear_upper(s: T) -> Self {
        Self::new(T::one(), s, T::zero(), T::one())
    }

    /// Lower shear `[[1, 0], [s, 1]]`.
    pub fn shear_lower(s: T) -> Self {
        Self::new(T::one(), T::zero(), s, T::one())
    }

    pub fn det(&self) -> T {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn trace(&self) -> T {
        self.a11 + self.a22
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a11, self.a21, self.a12, self.a22)
    }

    /// Adjugate; equals the inverse for unimodular matrices.
    pub fn adjugate(&self) -> Self {
        Self::new(self.a22, -self.a12, -self.a21, self.a11)
    }

    /// General inverse. Entries are non-finite when `det = 0`.
    pub fn inverse(&self) -> Self {
        self.adjugate().scale(self.det().recip())
    }

    pub fn scale(&self, k: T) -> Self {
        Self::new(self.a11 * k, self.a12 * k, self.a21 * k, self.a22 * k)
    }

    /// Similarity transform `t · self · t⁻¹`.
    pub fn conjugate(&self, t: &Self, det_tol: T) -> Result<Self> {
        let det = t.det();
        if !(det.abs() >= det_tol) {
            return Err(Error::SingularTransform { det: det.as_f64() });
        }
        Ok(*t * *self * t.inverse())
    }

    pub fn entries(&self) -> [T; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn max_abs_entry(&self) -> T {
        self.entries().iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        (*self - *other).max_abs_entry()
    }

    /// Entrywise comparison under the max-abs metric.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// `max |Δ| / max(1, max |entry|)`, the scale-aware distance used for long products.
    pub fn rel_diff(&self, other: &Self) -> T {
        let scale = self
            .max_abs_entry()
            .max(other.max_abs_entry())
            .max(T::one());
        self.max_abs_diff(other) / scale
    }

    pub fn is_unimodular(&self, det_tol: T) -> bool {
        (self.det() - T::one()).abs() <= det_tol
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|x| x.is_finite())
    }
}

impl<T: Scalar> Mul for Mat2<T> {
    type Output = Self;

    fn mul(self, r: Self) -> Self {
        Self::new(
            self.a11 * r.a11 + self.a12 * r.a21,
            self.a11 * r.a12 + self.a12 * r.a22,
            self.a21 * r.a11 + self.a22 * r.a21,
            self.a21 * r.a12 + self.a22 * r.a22,
        )
    }
}

impl<T: Scalar> std::ops::Sub for Mat2<T> {
    type Output = Self;

    fn sub(self, r: Self) -> Self {
        Self::new(
            self.a11 - r.a11,
            self.a12 - r.a12,
            self.a21 - r.a21,
            self.a22 - r.a22,
        )
    }
}

impl<T: Scalar> Neg for Mat2<T> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

/// Complex 2×2 matrix, used for the phase/boundary algebra of layered media.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CMat2<T = f64> {
    pub a11: Complex<T>,
    pub a12: Complex<T>,
    pub a21: Complex<T>,
    pub a22: Complex<T>,
}

impl<T: Scalar> CMat2<T> {
    pub const fn new(a11: Complex<T>, a12: Complex<T>, a21: Complex<T>, a22: Complex<T>) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Self::from_real(&Mat2::identity())
    }

    pub fn from_real(m: &Mat2<T>) -> Self {
        let c = |x: T| Complex::new(x, T::zero());
        Self::new(c(m.a11), c(m.a12), c(m.a21), c(m.a22))
    }

    pub fn det(&self) -> Complex<T> {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn trace(&self) -> Complex<T> {
        self.a11 + self.a22
    }

    pub fn inverse(&self) -> Self {
        let k = self.det().inv();
        Self::new(self.a22 * k, -self.a12 * k, -self.a21 * k, self.a11 * k)
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        Self::new(self.a11 * k, self.a12 * k, self.a21 * k, self.a22 * k)
    }

    /// Similarity transform `t · self · t⁻¹`.
    pub fn conjugate(&self, t: &Self, det_tol: T) -> Result<Self> {
        let det = t.det();
        if !(det.norm() >= det_tol) {
            return Err(Error::SingularTransform {
                det: det.norm().as_f64(),
            });
        }
        Ok(*t * *self * t.inverse())
    }

    pub fn entries(&self) -> [Complex<T>; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn re(&self) -> Mat2<T> {
        Mat2::new(self.a11.re, self.a12.re, self.a21.re, self.a22.re)
    }

    pub fn im(&self) -> Mat2<T> {
        Mat2::new(self.a11.im, self.a12.im, self.a21.im, self.a22.im)
    }

    /// Largest |Im| over the four entries.
    pub fn max_imag(&self) -> T {
        self.im().max_abs_entry()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries()
            .iter()
            .zip(other.entries().iter())
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

impl<T: Scalar> Mul for CMat2<T> {
    type Output = Self;

    fn mul(self, r: Self) -> Self {
        Self::new(
            self.a11 * r.a11 + self.a12 * r.a21,
            self.a11 * r.a12 + self.a12 * r.a22,
            self.a21 * r.a11 + self.a22 * r.a21,
            self.a21 * r.a12 + self.a22 * r.a22,
        )
    }
}
