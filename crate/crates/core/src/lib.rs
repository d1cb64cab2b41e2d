//! Matrix calculus of unimodular ABCD ray-transfer matrices.
//!
//! * [`mat2`]: real and complex 2×2 arithmetic, rotation and squeeze builders.
//! * [`core_form`]: equi-diagonal cores, trace classification, `(γ, η)` parameters.
//! * [`decomp`]: Wigner and Bargmann decompositions, closed-form powers.
//! * [`cavity`]: the two-mirror resonator and its `E·C²·E⁻¹` factorization.
//! * [`multilayer`]: periodic two-medium stacks, complex-to-real conjugation.
//! * [`lorentz`]: 4×4 lifts, little-group and gauge-limit checks.
//!
//! Everything is generic over [`Scalar`] (`f32`, `f64`); the aliases below fix `f64`.
//!
//! ```
//! use abcd_core::{core_form, decomp, RayMatrix, Tolerances};
//!
//! let tol = Tolerances::default();
//! let m = RayMatrix::new(2.0, 1.0, 1.0, 1.0);
//! let eq = core_form::equidiagonalize(&m, &tol).unwrap();
//! let p = core_form::extract_core_params(&eq.core, &tol).unwrap();
//! assert_eq!(p.class, core_form::TraceClass::Hyperbolic);
//! let tenth = core_form::compose_core(&decomp::power(&p, 10));
//! let iterated = (0..10).fold(RayMatrix::identity(), |acc, _| acc * eq.core);
//! assert!(tenth.rel_diff(&iterated) < 1e-9);
//! ```

// `!(x > 0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cavity;
pub mod core_form;
pub mod decomp;
pub mod error;
pub mod lorentz;
pub mod mat2;
pub mod multilayer;
pub mod scalar;

pub use core_form::{CoreParams, ShearOrientation, Sign, TraceClass};
pub use decomp::{BargmannParams, WignerFactors, WignerMiddle};
pub use error::{Error, Result};
pub use scalar::{Scalar, Tolerances};

pub type RayMatrix = mat2::Mat2<f64>;
pub type RayMatrixF32 = mat2::Mat2<f32>;
pub type ComplexMatrix = mat2::CMat2<f64>;
pub type ComplexMatrixF32 = mat2::CMat2<f32>;
pub type FourVector = lorentz::Vec4<f64>;
pub type FourVectorF32 = lorentz::Vec4<f32>;
pub type LorentzMatrix = lorentz::Mat4<f64>;
pub type LorentzMatrixF32 = lorentz::Mat4<f32>;
pub type CavitySpec = cavity::CavitySpec<f64>;
pub type LayerCycleSpec = multilayer::LayerCycleSpec<f64>;
