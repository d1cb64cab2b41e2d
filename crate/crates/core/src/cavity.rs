//! Two identical concave mirrors of radius `R` a distance `d` apart.
//!
//! The round trip `M(R)·T(d)·M(R)·T(d)` factors as `E·C²·E⁻¹` with
//!
//! ```text
//! C = [[1 − d/R, 1 − d/2R], [−2d/R, 1 − d/R]]
//! E = T(−d/2) · diag(√d, 1/√d)
//! ```
//!
//! `C` is equi-diagonal and dimensionless; `E` carries `√d` and so has length units.
//! `d` and `R` must share one length unit.

use crate::core_form::{compose_core, extract_core_params, CoreParams};
use crate::decomp::power;
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::scalar::{Scalar, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CavitySpec<T = f64> {
    /// Mirror separation.
    pub d: T,
    /// Mirror radius of curvature.
    #[cfg_attr(feature = "serde", serde(rename = "R"))]
    pub r: T,
}

impl<T: Scalar> CavitySpec<T> {
    pub fn new(d: T, r: T) -> Self {
        Self { d, r }
    }
}

/// Mirror of radius `r`: `[[1, 0], [−2/r, 1]]`.
pub fn mirror_matrix<T: Scalar>(r: T) -> Result<Mat2<T>> {
    if r == T::zero() {
        return Err(Error::ZeroRadius);
    }
    Ok(Mat2::shear_lower(-T::two() / r))
}

/// Free propagation over `d`: `[[1, d], [0, 1]]`.
pub fn translation_matrix<T: Scalar>(d: T) -> Mat2<T> {
    Mat2::shear_upper(d)
}

pub fn round_trip<T: Scalar>(spec: &CavitySpec<T>) -> Result<Mat2<T>> {
    let m = mirror_matrix(spec.r)?;
    let t = translation_matrix(spec.d);
    Ok(m * t * m * t)
}

/// The `E` and `C` of `round_trip = E·C²·E⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityFactors<T = f64> {
    pub e: Mat2<T>,
    pub c: Mat2<T>,
}

impl<T: Scalar> CavityFactors<T> {
    /// `E · core · E⁻¹`.
    pub fn unfold(&self, core: &Mat2<T>) -> Mat2<T> {
        self.e * *core * self.e.adjugate()
    }
}

pub fn cavity_factorize<T: Scalar>(spec: &CavitySpec<T>) -> Result<CavityFactors<T>> {
    let CavitySpec { d, r } = *spec;
    if !(d > T::zero()) {
        return Err(Error::NonPositiveSeparation { d: d.as_f64() });
    }
    if r == T::zero() {
        return Err(Error::ZeroRadius);
    }
    let k = d / r;
    let diag = T::one() - k;
    let c = Mat2::new(diag, T::one() - k * T::half(), -T::two() * k, diag);
    let sd = d.sqrt();
    let e = translation_matrix(-d * T::half()) * Mat2::diag(sd, sd.recip());
    Ok(CavityFactors { e, c })
}

/// `0 < d < 2R`.
pub fn is_stable<T: Scalar>(spec: &CavitySpec<T>) -> bool {
    spec.d > T::zero() && spec.d < T::two() * spec.r
}

/// Errors unless `0 < d < 2R` and `R ≠ 0`.
pub fn check_stable<T: Scalar>(spec: &CavitySpec<T>) -> Result<()> {
    if !(spec.d > T::zero()) {
        return Err(Error::NonPositiveSeparation { d: spec.d.as_f64() });
    }
    if spec.r == T::zero() {
        return Err(Error::ZeroRadius);
    }
    if !is_stable(spec) {
        return Err(Error::UnstableCavity {
            d: spec.d.as_f64(),
            two_r: (T::two() * spec.r).as_f64(),
        });
    }
    Ok(())
}

/// Canonical elliptic parameters of the half-trip core `C`.
///
/// `C` carries `+e^η sin(γ/2)` in its upper-right entry, so its canonical generator is
/// the negative of the closed-form angle from [`cavity_closed_form`]; `η` agrees.
/// The round-trip core is `power(·, 2)`.
pub fn cavity_core<T: Scalar>(spec: &CavitySpec<T>) -> Result<CoreParams<T>> {
    check_stable(spec)?;
    let f = cavity_factorize(spec)?;
    // C is elliptic throughout the stable range; a zero class band keeps the
    // near-marginal cavities out of the parabolic branch.
    extract_core_params(&f.c, &Tolerances::new(T::DEFAULT_TOL, T::zero()))
}

/// Closed-form angle and rapidity of the half-trip core.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CavityClosedForm<T = f64> {
    /// `γ ∈ (0, 2π)` with `cos(γ/2) = 1 − d/R`.
    pub gamma: T,
    /// `e^η = √((2R − d)/(4d))`.
    pub eta: T,
}

pub fn cavity_closed_form<T: Scalar>(spec: &CavitySpec<T>) -> Result<CavityClosedForm<T>> {
    check_stable(spec)?;
    let CavitySpec { d, r } = *spec;
    let gamma = T::two() * (T::one() - d / r).acos();
    let eta = ((T::two() * r - d) / (T::lit(4.0) * d)).ln() * T::half();
    Ok(CavityClosedForm { gamma, eta })
}

/// `round_trip(spec)^n` in constant time, as `E · C^{2n} · E⁻¹`.
pub fn n_round_trips<T: Scalar>(spec: &CavitySpec<T>, n: u32) -> Result<Mat2<T>> {
    let core = cavity_core(spec)?;
    let f = cavity_factorize(spec)?;
    let twice = n.checked_mul(2).expect("round-trip count overflows u32");
    Ok(f.unfold(&compose_core(&power(&core, twice))))
}

#[cfg(test)]
mod tests {
    use super::*;
    type Spec = CavitySpec<f64>;
    use crate::core_form::{classify, TraceClass};
    use std::f64::consts::{LN_2, PI};

    type M = Mat2<f64>;

    fn iterate(m: &M, n: u32) -> M {
        (0..n).fold(M::identity(), |acc, _| acc * *m)
    }

    #[test]
    fn builders() {
        assert_eq!(mirror_matrix(2.0).unwrap(), M::new(1.0, 0.0, -1.0, 1.0));
        assert_eq!(
            classify(&mirror_matrix(1.0).unwrap(), &Tolerances::default()).unwrap(),
            TraceClass::Parabolic
        );
        assert_eq!(
            mirror_matrix(0.7).unwrap() * mirror_matrix(-0.7).unwrap(),
            M::identity()
        );
        assert_eq!(mirror_matrix(0.0), Err(Error::ZeroRadius));

        assert_eq!(translation_matrix(0.0), M::identity());
        assert_eq!(
            translation_matrix(0.5) * translation_matrix(1.25),
            translation_matrix(1.75)
        );
    }

    #[test]
    fn round_trip_examples() {
        // d = 0 leaves the two mirrors back to back: M(R)² = M(R/2)
        let rt = round_trip(&Spec::new(0.0, 3.0)).unwrap();
        assert!(rt.approx_eq(&mirror_matrix(1.5).unwrap(), 1e-15));
        // the empty cavity limit is reached when the mirrors flatten as well
        assert_eq!(
            round_trip(&Spec::new(0.0, f64::INFINITY)).unwrap(),
            M::identity()
        );
        let m = M::new(1.0, 0.0, -2.0, 1.0);
        let t = M::new(1.0, 1.0, 0.0, 1.0);
        assert_eq!(round_trip(&Spec::new(1.0, 1.0)).unwrap(), m * t * m * t);
        let rt = round_trip(&Spec::new(0.37, 1.9)).unwrap();
        assert!((rt.det() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn factorization() {
        let f = cavity_factorize(&Spec::new(1.0, 1.0)).unwrap();
        assert_eq!(f.c, M::new(0.0, 0.5, -2.0, 0.0));

        let spec = Spec::new(0.5, 1.0);
        let f = cavity_factorize(&spec).unwrap();
        let rt = round_trip(&spec).unwrap();
        assert!(f.unfold(&(f.c * f.c)).rel_diff(&rt) < 1e-14);
        assert_eq!(f.c.det(), 1.0);

        let f = cavity_factorize(&Spec::new(0.3, 1.0)).unwrap();
        assert!((f.c.trace() - 1.4).abs() < 1e-15);

        assert!(matches!(
            cavity_factorize(&Spec::new(0.0, 1.0)),
            Err(Error::NonPositiveSeparation { .. })
        ));
    }

    #[test]
    fn confocal_core() {
        let spec = Spec::new(1.0, 1.0);
        let closed = cavity_closed_form(&spec).unwrap();
        assert!((closed.gamma - PI).abs() < 1e-15);
        assert!((closed.eta + LN_2).abs() < 1e-15);
        let core = cavity_core(&spec).unwrap();
        assert_eq!(core.class, TraceClass::Elliptic);
        assert!((core.gamma + PI).abs() < 1e-15);
        assert!((core.eta + LN_2).abs() < 1e-15);
    }

    #[test]
    fn near_instability_edge() {
        let closed = cavity_closed_form(&Spec::new(2.0 - 1e-9, 1.0)).unwrap();
        assert!(closed.gamma < 2.0 * PI && 2.0 * PI - closed.gamma < 1e-3);
    }

    #[test]
    fn extraction_matches_closed_form() {
        let spec = Spec::new(0.4, 1.0);
        let core = cavity_core(&spec).unwrap();
        let closed = cavity_closed_form(&spec).unwrap();
        assert!((core.gamma + closed.gamma).abs() < 1e-10);
        assert!((core.eta - closed.eta).abs() < 1e-10);
        assert!(((core.gamma / 2.0).cos() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn stability() {
        assert!(is_stable(&Spec::new(1.0, 1.0)));
        assert!(!is_stable(&Spec::new(2.0, 1.0)));
        assert!(!is_stable(&Spec::new(-1.0, 1.0)));
        assert!(!is_stable(&Spec::new(1.0, -1.0)));
        assert!(matches!(
            cavity_core(&Spec::new(3.0, 1.0)),
            Err(Error::UnstableCavity { .. })
        ));
        assert!(matches!(
            cavity_core(&Spec::new(-0.1, 1.0)),
            Err(Error::NonPositiveSeparation { .. })
        ));
    }

    #[test]
    fn powers() {
        let spec = Spec::new(0.5, 1.0);
        let rt = round_trip(&spec).unwrap();
        assert!(n_round_trips(&spec, 1).unwrap().rel_diff(&rt) < 1e-14);
        assert!(
            n_round_trips(&spec, 100)
                .unwrap()
                .rel_diff(&iterate(&rt, 100))
                < 1e-10
        );

        // γ = π at d = R, so two round trips advance the core by 4π
        let spec = Spec::new(1.0, 1.0);
        let two = n_round_trips(&spec, 2).unwrap();
        assert!(two.approx_eq(&M::identity(), 1e-14));
        assert!(iterate(&round_trip(&spec).unwrap(), 2).approx_eq(&M::identity(), 0.0));

        assert!(matches!(
            n_round_trips(&Spec::new(2.5, 1.0), 3),
            Err(Error::UnstableCavity { .. })
        ));
    }
}
