//! Input format.
//!
//! A spec is a JSON object with exactly one key:
//!
//! ```json
//! {"cavity": {"d": 1.0, "R": 1.0}}
//! {"multilayer": {"delta1": 1.5707963267948966, "delta2": 1.5707963267948966, "sigma": 0.0}}
//! {"raw": {"a11": 1, "a12": 0, "a21": 0, "a22": 1}}
//! {"elements": [{"kind": "translation", "param": 0.5}, {"kind": "mirror", "param": 1.0}]}
//! ```
//!
//! Element lists are written in beam order. The list above propagates over `0.5`
//! and then reflects, so its matrix is `mirror(1.0) · translation(0.5)`.

use abcd_core::cavity::{mirror_matrix, translation_matrix, CavitySpec};
use abcd_core::mat2::{CMat2, Mat2};
use abcd_core::multilayer::{boundary_matrix, phase_matrix, realify, LayerCycleSpec};
use abcd_core::Tolerances;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemSpec {
    Elements(Vec<Element>),
    Cavity(CavitySpec<f64>),
    Multilayer(LayerCycleSpec<f64>),
    Raw(Mat2<f64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Element {
    pub kind: ElementKind,
    pub param: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementKind {
    /// Curved mirror, `param` is the radius.
    Mirror,
    /// Free propagation, `param` is the distance.
    Translation,
    /// Medium interface, `param` is the boundary rapidity.
    Boundary,
    /// Propagation phase inside a medium.
    Phase,
}

impl ElementKind {
    fn is_wave(self) -> bool {
        matches!(self, ElementKind::Boundary | ElementKind::Phase)
    }
}

/// Product of an element list: real for ray elements, complex for wave elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ElementProduct {
    Ray(Mat2<f64>),
    Wave(CMat2<f64>),
}

impl ElementProduct {
    /// The real matrix the analysis runs on. Wave products are conjugated to real form.
    pub fn real(&self) -> Result<Mat2<f64>, CliError> {
        match self {
            ElementProduct::Ray(m) => Ok(*m),
            ElementProduct::Wave(m) => Ok(realify(m)?),
        }
    }
}

pub fn parse_spec(text: &str) -> Result<SystemSpec, CliError> {
    let spec: SystemSpec = serde_json::from_str(text)?;
    Ok(spec)
}

/// Checks that do not need any physics: finiteness, list shape, unimodularity of raw input.
pub fn validate(spec: &SystemSpec, tol: &Tolerances<f64>) -> Result<(), CliError> {
    let finite = |name: &str, v: f64| {
        if v.is_finite() {
            Ok(())
        } else {
            Err(CliError::Validation(format!(
                "{name} must be finite, got {v}"
            )))
        }
    };
    match spec {
        SystemSpec::Elements(list) => {
            if list.is_empty() {
                return Err(CliError::Validation("element list is empty".into()));
            }
            for (i, e) in list.iter().enumerate() {
                finite(&format!("elements[{i}].param"), e.param)?;
            }
            let waves = list.iter().filter(|e| e.kind.is_wave()).count();
            if waves != 0 && waves != list.len() {
                return Err(CliError::Validation(
                    "element list mixes ray kinds (mirror, translation) with wave kinds (boundary, phase)".into(),
                ));
            }
        }
        SystemSpec::Cavity(c) => {
            finite("cavity.d", c.d)?;
            finite("cavity.R", c.r)?;
        }
        SystemSpec::Multilayer(l) => {
            finite("multilayer.delta1", l.delta1)?;
            finite("multilayer.delta2", l.delta2)?;
            finite("multilayer.sigma", l.sigma)?;
        }
        SystemSpec::Raw(m) => {
            for (name, v) in ["a11", "a12", "a21", "a22"].iter().zip(m.entries()) {
                finite(&format!("raw.{name}"), v)?;
            }
            let det = m.det();
            if (det - 1.0).abs() > tol.det {
                return Err(CliError::Validation(format!(
                    "raw matrix is not unimodular: det = {det}"
                )));
            }
        }
    }
    Ok(())
}

/// Multiplies an element list in beam order: the first element acts first.
pub fn element_product(list: &[Element]) -> Result<ElementProduct, CliError> {
    if list.iter().any(|e| e.kind.is_wave()) {
        let mut acc = CMat2::identity();
        for e in list {
            let m = match e.kind {
                ElementKind::Boundary => boundary_matrix(e.param),
                ElementKind::Phase => phase_matrix(e.param),
                _ => unreachable!("validated as homogeneous"),
            };
            acc = m * acc;
        }
        Ok(ElementProduct::Wave(acc))
    } else {
        let mut acc = Mat2::identity();
        for e in list {
            let m = match e.kind {
                ElementKind::Mirror => mirror_matrix(e.param)?,
                ElementKind::Translation => translation_matrix(e.param),
                _ => unreachable!("validated as homogeneous"),
            };
            acc = m * acc;
        }
        Ok(ElementProduct::Ray(acc))
    }
}
