//! Wigner and Bargmann decompositions of a core, and closed-form powers.
//!
//! The Wigner form writes a core as a similarity transform `B(η)·M·B(−η)` around a
//! rotation, squeeze or shear. The Bargmann form writes the same core as
//! `R(α)·S(−2χ)·R(α)`, which is not a similarity transform but exists for every
//! trace class.

use crate::core_form::{
    compose_core, extract_core_params, CoreParams, ShearOrientation, Sign, TraceClass,
};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::scalar::{Scalar, Tolerances};

/// Middle factor of a Wigner decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum WignerMiddle<T = f64> {
    /// `rotation(theta)`.
    Rotation { theta: T },
    /// `squeeze_offdiag(−lambda)`. A hyperbolic core with generator `γ` has `λ = −γ`.
    Squeeze { lambda: T },
    /// The unsigned parabolic core itself; shears admit no squeeze conjugation here.
    Shear {
        gamma: T,
        orientation: ShearOrientation,
    },
}

impl<T: Scalar> WignerMiddle<T> {
    pub fn matrix(&self) -> Mat2<T> {
        match *self {
            WignerMiddle::Rotation { theta } => Mat2::rotation(theta),
            WignerMiddle::Squeeze { lambda } => Mat2::squeeze_offdiag(-lambda),
            WignerMiddle::Shear { gamma, orientation } => {
                compose_core(&CoreParams::parabolic(gamma, orientation))
            }
        }
    }
}

/// `sign · B(η) · middle · B(−η)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WignerFactors<T = f64> {
    pub sign: Sign,
    pub eta: T,
    pub middle: WignerMiddle<T>,
}

impl<T: Scalar> WignerFactors<T> {
    /// The three factors, left to right, without the overall sign.
    pub fn factors(&self) -> [Mat2<T>; 3] {
        [
            Mat2::squeeze_diag(self.eta),
            self.middle.matrix(),
            Mat2::squeeze_diag(-self.eta),
        ]
    }

    pub fn compose(&self) -> Mat2<T> {
        let [l, m, r] = self.factors();
        (l * m * r).scale(self.sign.value())
    }
}

pub fn wigner_decompose<T: Scalar>(p: &CoreParams<T>) -> WignerFactors<T> {
    let (eta, middle) = match p.class {
        TraceClass::Elliptic => (p.eta, WignerMiddle::Rotation { theta: p.gamma }),
        TraceClass::Hyperbolic => (p.eta, WignerMiddle::Squeeze { lambda: -p.gamma }),
        TraceClass::Parabolic => (
            T::zero(),
            WignerMiddle::Shear {
                gamma: p.gamma,
                orientation: p.orientation,
            },
        ),
    };
    WignerFactors {
        sign: p.sign,
        eta,
        middle,
    }
}

/// Rotation angle `α` and squeeze rapidity `χ` of `R(α)·S(−2χ)·R(α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BargmannParams<T = f64> {
    pub alpha: T,
    pub chi: T,
}

impl<T: Scalar> BargmannParams<T> {
    pub fn new(alpha: T, chi: T) -> Self {
        Self { alpha, chi }
    }

    /// `[R(α), S(−2χ), R(α)]`.
    pub fn factors(&self) -> [Mat2<T>; 3] {
        let r = Mat2::rotation(self.alpha);
        [r, Mat2::squeeze_offdiag(-T::two() * self.chi), r]
    }
}

/// Multiplied-out Bargmann product:
/// `[[cosh χ cos α, −sinh χ − cosh χ sin α], [−sinh χ + cosh χ sin α, cosh χ cos α]]`.
pub fn compose_bargmann<T: Scalar>(b: &BargmannParams<T>) -> Mat2<T> {
    let (sa, ca) = b.alpha.sin_cos();
    let (sh, ch) = (b.chi.sinh(), b.chi.cosh());
    Mat2::new(ch * ca, -sh - ch * sa, -sh + ch * sa, ch * ca)
}

/// Inverts [`compose_bargmann`] for any equi-diagonal unimodular core:
/// `sinh χ = −(a12 + a21)/2`, `α = atan2((a21 − a12)/2, a11)`.
pub fn bargmann_decompose<T: Scalar>(
    core: &Mat2<T>,
    tol: &Tolerances<T>,
) -> Result<BargmannParams<T>> {
    let diff = (core.a11 - core.a22).abs();
    if diff > tol.det * core.a11.abs().max(T::one()) {
        return Err(Error::NotEquidiagonal {
            diff: diff.as_f64(),
        });
    }
    let a = (core.a11 + core.a22) * T::half();
    let chi = (-(core.a12 + core.a21) * T::half()).asinh();
    let alpha = ((core.a21 - core.a12) * T::half()).atan2(a);
    Ok(BargmannParams { alpha, chi })
}

/// Wigner parameters of a Bargmann product, by composing and extracting. Total for
/// finite inputs.
pub fn bargmann_to_wigner<T: Scalar>(
    b: &BargmannParams<T>,
    tol: &Tolerances<T>,
) -> Result<CoreParams<T>> {
    extract_core_params(&compose_bargmann(b), tol)
}

/// Closed-form elliptic Wigner parameters `(θ, η)` of a Bargmann product:
/// `cos(θ/2) = cosh χ cos α` and
/// `e^{2η} = (cosh χ sin α + sinh χ)/(cosh χ sin α − sinh χ)`.
///
/// The sign of `θ` follows the sign of `cosh χ sin α − sinh χ`. Returns `None`
/// outside the elliptic regime.
pub fn bargmann_elliptic_closed_form<T: Scalar>(b: &BargmannParams<T>) -> Option<(T, T)> {
    let (sa, ca) = b.alpha.sin_cos();
    let (sh, ch) = (b.chi.sinh(), b.chi.cosh());
    let diag = ch * ca;
    if !(diag.abs() < T::one()) {
        return None;
    }
    let num = ch * sa + sh;
    let den = ch * sa - sh;
    let ratio = num / den;
    if !(ratio > T::zero()) || !ratio.is_finite() {
        return None;
    }
    let half = diag.acos();
    let theta = if den.is_sign_negative() { -half } else { half } * T::two();
    Some((theta, ratio.ln() * T::half()))
}

/// `n`-fold product of a core, as parameters: `γ → nγ`.
///
/// Elliptic generators are wrapped into `(−2π, 2π]`, the period of the elliptic form.
/// `n = 0` yields parameters of the identity.
pub fn power<T: Scalar>(p: &CoreParams<T>, n: u32) -> CoreParams<T> {
    let k = T::from_u32(n).expect("u32 representable");
    let mut gamma = p.gamma * k;
    if p.class == TraceClass::Elliptic {
        gamma = wrap_4pi(gamma);
    }
    CoreParams {
        class: p.class,
        sign: p.sign.pow(n),
        gamma,
        eta: p.eta,
        orientation: p.orientation,
    }
}

fn wrap_4pi<T: Scalar>(g: T) -> T {
    let period = T::lit(4.0) * T::PI();
    let two_pi = T::two() * T::PI();
    if g > -two_pi && g <= two_pi {
        return g;
    }
    let mut w = g - period * (g / period).round();
    if w <= -two_pi {
        w = w + period;
    }
    w
}
