//! Equi-diagonal cores of unimodular ray matrices.
//!
//! Every unimodular 2×2 matrix is similar, through a single rotation, to a matrix
//! whose two diagonal entries coincide. That core depends on two numbers, a
//! generator angle or rapidity `γ` and a squeeze rapidity `η`, and falls into one of
//! three families according to |trace|:
//!
//! ```text
//! elliptic    [[cos γ/2, −e^η sin γ/2], [e^−η sin γ/2, cos γ/2]]     |tr| < 2
//! hyperbolic  [[cosh γ/2, e^η sinh γ/2], [e^−η sinh γ/2, cosh γ/2]]  |tr| > 2
//! parabolic   [[1, −γ], [0, 1]]  (or the lower shear [[1, 0], [−γ, 1]])  |tr| = 2
//! ```
//!
//! An overall sign covers cores with negative trace.

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::scalar::{Scalar, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TraceClass {
    /// |trace| < 2: rotation-like, bounded under iteration.
    Elliptic,
    /// |trace| = 2: shear-like, not diagonalizable unless ±I.
    Parabolic,
    /// |trace| > 2: squeeze-like, grows exponentially under iteration.
    Hyperbolic,
}

/// Overall sign of a core matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn of<T: Scalar>(x: T) -> Self {
        if x.is_sign_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value<T: Scalar>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }

    /// `self^n`.
    pub fn pow(self, n: u32) -> Self {
        if self == Sign::Minus && n % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// Which triangle carries the shear of a parabolic core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ShearOrientation {
    #[default]
    Upper,
    Lower,
}

/// The two-parameter description of an equi-diagonal core.
///
/// `eta` is zero for parabolic cores; `orientation` only matters for them.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoreParams<T = f64> {
    pub class: TraceClass,
    pub sign: Sign,
    pub gamma: T,
    pub eta: T,
    pub orientation: ShearOrientation,
}

impl<T: Scalar> CoreParams<T> {
    pub fn elliptic(gamma: T, eta: T) -> Self {
        Self {
            class: TraceClass::Elliptic,
            sign: Sign::Plus,
            gamma,
            eta,
            orientation: ShearOrientation::Upper,
        }
    }

    pub fn hyperbolic(gamma: T, eta: T) -> Self {
        Self {
            class: TraceClass::Hyperbolic,
            sign: Sign::Plus,
            gamma,
            eta,
            orientation: ShearOrientation::Upper,
        }
    }

    pub fn parabolic(gamma: T, orientation: ShearOrientation) -> Self {
        Self {
            class: TraceClass::Parabolic,
            sign: Sign::Plus,
            gamma,
            eta: T::zero(),
            orientation,
        }
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = sign;
        self
    }
}

/// Classifies the trace of a unimodular matrix. The parabolic band is closed, so
/// boundary values resolve to [`TraceClass::Parabolic`].
pub fn classify<T: Scalar>(m: &Mat2<T>, tol: &Tolerances<T>) -> Result<TraceClass> {
    check_unimodular(m, tol.det)?;
    Ok(classify_trace(m.trace(), tol.class))
}

/// Trace-only classification; no determinant check.
pub fn classify_trace<T: Scalar>(trace: T, class_tol: T) -> TraceClass {
    let excess = trace.abs() - T::two();
    if excess.abs() <= class_tol {
        TraceClass::Parabolic
    } else if excess < T::zero() {
        TraceClass::Elliptic
    } else {
        TraceClass::Hyperbolic
    }
}

pub(crate) fn check_unimodular<T: Scalar>(m: &Mat2<T>, det_tol: T) -> Result<()> {
    let det = m.det();
    if (det - T::one()).abs() <= det_tol {
        Ok(())
    } else {
        Err(Error::NotUnimodular { det: det.as_f64() })
    }
}

fn check_equidiagonal<T: Scalar>(m: &Mat2<T>, tol: T) -> Result<()> {
    let diff = (m.a11 - m.a22).abs();
    if diff <= tol * m.a11.abs().max(T::one()) {
        Ok(())
    } else {
        Err(Error::NotEquidiagonal {
            diff: diff.as_f64(),
        })
    }
}

/// Result of bringing a matrix to equi-diagonal form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equidiagonalized<T = f64> {
    /// `t · m · t⁻¹`.
    pub core: Mat2<T>,
    /// The conjugating rotation, `rotation(phi)`.
    pub transform: Mat2<T>,
    pub phi: T,
}

/// Conjugates `m` by `rotation(φ)`, `φ = atan2(a11 − a22, a12 + a21)`, which equalizes
/// the diagonal while preserving trace and determinant. Inputs whose diagonal is
/// already equal come back unchanged with `φ = 0`.
pub fn equidiagonalize<T: Scalar>(m: &Mat2<T>, tol: &Tolerances<T>) -> Result<Equidiagonalized<T>> {
    check_unimodular(m, tol.det)?;
    if m.a11 == m.a22 {
        return Ok(Equidiagonalized {
            core: *m,
            transform: Mat2::identity(),
            phi: T::zero(),
        });
    }
    let diff = m.a11 - m.a22;
    let sum = m.a12 + m.a21;
    let tiny = T::lit(1e-300).max(T::min_positive_value());
    if diff.abs() < tiny && sum.abs() < tiny {
        return Err(Error::DegenerateEquidiagonalization);
    }
    let phi = diff.atan2(sum);
    let transform = Mat2::rotation(phi);
    let mut core = transform * *m * transform.adjugate();
    // The two diagonal entries agree up to rounding; pin them to their mean.
    let mean = core.trace() * T::half();
    core.a11 = mean;
    core.a22 = mean;
    Ok(Equidiagonalized {
        core,
        transform,
        phi,
    })
}

/// Reads `(class, sign, γ, η)` off an equi-diagonal unimodular core.
///
/// Elliptic cores are always returned with `Sign::Plus` and `γ/2 ∈ (−π, π]`.
pub fn extract_core_params<T: Scalar>(
    core: &Mat2<T>,
    tol: &Tolerances<T>,
) -> Result<CoreParams<T>> {
    check_equidiagonal(core, tol.det)?;
    check_unimodular(core, tol.det)?;
    let a = (core.a11 + core.a22) * T::half();
    let (b, c) = (core.a12, core.a21);
    let class = classify_trace(a * T::two(), tol.class);
    let product = b * c;
    match class {
        TraceClass::Elliptic => {
            if !(product < T::zero()) {
                return Err(Error::InconsistentSigns {
                    product: product.as_f64(),
                });
            }
            let s = (-product).sqrt();
            let s = if c.is_sign_negative() { -s } else { s };
            let half = s.atan2(a);
            Ok(CoreParams::elliptic(
                half * T::two(),
                (-b / c).ln() * T::half(),
            ))
        }
        TraceClass::Hyperbolic => {
            if !(product > T::zero()) {
                return Err(Error::InconsistentSigns {
                    product: product.as_f64(),
                });
            }
            let sign = Sign::of(a);
            let sc = sign.value::<T>() * c;
            let s = product.sqrt();
            let s = if sc.is_sign_negative() { -s } else { s };
            Ok(
                CoreParams::hyperbolic(s.asinh() * T::two(), (b / c).ln() * T::half())
                    .with_sign(sign),
            )
        }
        TraceClass::Parabolic => {
            let sign = Sign::of(a);
            let k = sign.value::<T>();
            let p = if c.abs() <= b.abs() {
                CoreParams::parabolic(-k * b, ShearOrientation::Upper)
            } else {
                CoreParams::parabolic(-k * c, ShearOrientation::Lower)
            };
            Ok(p.with_sign(sign))
        }
    }
}

/// Builds the core matrix described by `p`.
pub fn compose_core<T: Scalar>(p: &CoreParams<T>) -> Mat2<T> {
    let m = match p.class {
        TraceClass::Elliptic => {
            let (s, c) = (p.gamma * T::half()).sin_cos();
            let e = p.eta.exp();
            Mat2::new(c, -e * s, s / e, c)
        }
        TraceClass::Hyperbolic => {
            let h = p.gamma * T::half();
            let (s, c) = (h.sinh(), h.cosh());
            let e = p.eta.exp();
            Mat2::new(c, e * s, s / e, c)
        }
        TraceClass::Parabolic => match p.orientation {
            ShearOrientation::Upper => Mat2::shear_upper(-p.gamma),
            ShearOrientation::Lower => Mat2::shear_lower(-p.gamma),
        },
    };
    match p.sign {
        Sign::Plus => m,
        Sign::Minus => -m,
    }
}

/// Generator `½ [[0, −x−y], [x−y, 0]]` of the exponential form of a core.
pub fn xy_generator<T: Scalar>(x: T, y: T) -> Mat2<T> {
    Mat2::new(
        T::zero(),
        -(x + y) * T::half(),
        (x - y) * T::half(),
        T::zero(),
    )
}

/// Exponentiates the `(x, y)` generator and reports the closed-form core parameters.
///
/// The generator squares to `¼(y² − x²)·I`, so its exponential is `cos`/`cosh` of
/// `½√|x² − y²|` times the identity plus a multiple of the generator. The parameters
/// follow `γ² = |x² − y²|`, `e^{2η} = (x + y)/(x − y)` (elliptic) or `(x + y)/(y − x)`
/// (hyperbolic), with the sign of `γ` chosen so that `compose_core` reproduces the
/// exponential. `x = y` gives the upper shear with `γ = x`, `x = −y` the lower one.
pub fn core_from_xy<T: Scalar>(x: T, y: T) -> (Mat2<T>, CoreParams<T>) {
    let g = xy_generator(x, y);
    let disc = x * x - y * y;
    if disc > T::zero() {
        let gamma = disc.sqrt().copysign(x);
        let half = gamma * T::half();
        let (s, c) = half.sin_cos();
        let k = s / half;
        let m = Mat2::new(c, k * g.a12, k * g.a21, c);
        let eta = ((x + y) / (x - y)).ln() * T::half();
        (m, CoreParams::elliptic(gamma, eta))
    } else if disc < T::zero() {
        let gamma = -(-disc).sqrt().copysign(y);
        let half = gamma * T::half();
        let (s, c) = (half.sinh(), half.cosh());
        let k = s / half;
        let m = Mat2::new(c, k * g.a12, k * g.a21, c);
        let eta = ((x + y) / (y - x)).ln() * T::half();
        (m, CoreParams::hyperbolic(gamma, eta))
    } else {
        let m = Mat2::new(T::one(), g.a12, g.a21, T::one());
        let p = if x == y {
            CoreParams::parabolic(x, ShearOrientation::Upper)
        } else {
            CoreParams::parabolic(-x, ShearOrientation::Lower)
        };
        (m, p)
    }
}
