use abcd_core::cavity::{
    cavity_closed_form, cavity_core, cavity_factorize, check_stable, n_round_trips, round_trip,
    CavityClosedForm, CavitySpec,
};
use abcd_core::core_form::{compose_core, equidiagonalize, extract_core_params};
use abcd_core::decomp::{bargmann_decompose, power, wigner_decompose};
use abcd_core::lorentz::{
    boost4_x, boost4_z, four_momentum_massive, four_momentum_massless, gauge_limit_matrix,
    is_little_group_element, lift_wigner4, Mat4, Vec4,
};
use abcd_core::mat2::{CMat2, Mat2};
use abcd_core::multilayer::{cycle_matrix, real_chain, LayerCycleSpec};
use abcd_core::{BargmannParams, CoreParams, Tolerances, TraceClass, WignerFactors};
use serde::Serialize;

use crate::error::CliError;
use crate::spec::{element_product, validate, ElementProduct, SystemSpec};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AnalyzeOptions {
    pub tol: Tolerances<f64>,
    /// Raise the system to this power as well.
    pub n: Option<u32>,
    /// Attach the matching Lorentz little-group check.
    pub lorentz: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixReport {
    Real(Mat2<f64>),
    Complex(CMat2<f64>),
}

/// The equi-diagonal core and the rotation `rotation(phi)` that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoreReport {
    pub matrix: Mat2<f64>,
    pub phi: f64,
    pub params: CoreParams<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CavityReport {
    pub e: Mat2<f64>,
    pub c: Mat2<f64>,
    pub half_trip_trace: f64,
    /// Closed-form angle and rapidity; the extracted core angle is `−gamma`.
    pub closed_form: CavityClosedForm<f64>,
    pub stable: bool,
    /// `"stable"`, or `"marginally stable"` when `|trace(C)|` is within the class band of 2.
    pub verdict: String,
    pub round_trip_core: CoreParams<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NCycleReport {
    pub n: u32,
    pub params: CoreParams<f64>,
    pub matrix: Mat2<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentumKind {
    Massive,
    Massless,
    Spacelike,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LorentzReport {
    pub kind: MomentumKind,
    pub matrix: Mat4<f64>,
    pub momentum: Vec4<f64>,
    pub image: Vec4<f64>,
    pub invariant: bool,
    pub metric_defect: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub input: SystemSpec,
    pub matrix: MatrixReport,
    /// The real matrix analysed when `matrix` is complex.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_matrix: Option<Mat2<f64>>,
    pub trace: f64,
    pub det: f64,
    pub class: TraceClass,
    pub core: CoreReport,
    pub wigner: WignerFactors<f64>,
    pub bargmann: BargmannParams<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cavity: Option<CavityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_cycle: Option<NCycleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lorentz: Option<LorentzReport>,
}

pub fn analyze(spec: &SystemSpec, opts: &AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    validate(spec, &opts.tol)?;
    let mut report = match spec {
        SystemSpec::Cavity(c) => analyze_cavity(spec, c, opts)?,
        SystemSpec::Multilayer(l) => analyze_multilayer(spec, l, opts)?,
        SystemSpec::Raw(m) => analyze_real(spec, MatrixReport::Real(*m), None, m, opts)?,
        SystemSpec::Elements(list) => {
            let product = element_product(list)?;
            let real = product.real()?;
            match product {
                ElementProduct::Ray(m) => {
                    analyze_real(spec, MatrixReport::Real(m), None, &real, opts)?
                }
                ElementProduct::Wave(m) => {
                    analyze_real(spec, MatrixReport::Complex(m), Some(real), &real, opts)?
                }
            }
        }
    };
    if opts.lorentz {
        report.lorentz = Some(lorentz_summary(&report.core.params, opts.tol.det)?);
    }
    Ok(report)
}

fn analyze_real(
    spec: &SystemSpec,
    matrix: MatrixReport,
    real_matrix: Option<Mat2<f64>>,
    m: &Mat2<f64>,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport, CliError> {
    let tol = &opts.tol;
    let eq = equidiagonalize(m, tol)?;
    let params = extract_core_params(&eq.core, tol)?;
    let n_cycle = opts.n.map(|n| {
        let p = power(&params, n);
        let matrix = eq.transform.adjugate() * compose_core(&p) * eq.transform;
        NCycleReport {
            n,
            params: p,
            matrix,
        }
    });
    Ok(AnalysisReport {
        input: spec.clone(),
        matrix,
        real_matrix,
        trace: m.trace(),
        det: m.det(),
        class: params.class,
        core: CoreReport {
            matrix: eq.core,
            phi: eq.phi,
            params,
        },
        wigner: wigner_decompose(&params),
        bargmann: bargmann_decompose(&eq.core, tol)?,
        cavity: None,
        n_cycle,
        lorentz: None,
    })
}

/// The decompositions describe the half-trip core `C`; `matrix` is the full round trip.
fn analyze_cavity(
    spec: &SystemSpec,
    c: &CavitySpec<f64>,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport, CliError> {
    check_stable(c)?;
    let tol = &opts.tol;
    let rt = round_trip(c)?;
    let f = cavity_factorize(c)?;
    let params = cavity_core(c)?;
    let half_trip_trace = f.c.trace();
    let marginal = (half_trip_trace.abs() - 2.0).abs() <= tol.class;
    let n_cycle = match opts.n {
        Some(n) if n > u32::MAX / 2 => {
            return Err(CliError::Validation(format!(
                "round-trip count {n} is too large"
            )));
        }
        Some(n) => Some(NCycleReport {
            n,
            params: power(&params, 2 * n),
            matrix: n_round_trips(c, n)?,
        }),
        None => None,
    };
    Ok(AnalysisReport {
        input: spec.clone(),
        matrix: MatrixReport::Real(rt),
        real_matrix: None,
        trace: rt.trace(),
        det: rt.det(),
        class: params.class,
        core: CoreReport {
            matrix: f.c,
            phi: 0.0,
            params,
        },
        wigner: wigner_decompose(&params),
        bargmann: bargmann_decompose(&f.c, tol)?,
        cavity: Some(CavityReport {
            e: f.e,
            c: f.c,
            half_trip_trace,
            closed_form: cavity_closed_form(c)?,
            stable: true,
            verdict: if marginal {
                "marginally stable"
            } else {
                "stable"
            }
            .to_string(),
            round_trip_core: power(&params, 2),
        }),
        n_cycle,
        lorentz: None,
    })
}

fn analyze_multilayer(
    spec: &SystemSpec,
    l: &LayerCycleSpec<f64>,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport, CliError> {
    let tol = &opts.tol;
    // already equi-diagonal, so no conjugation is needed
    let chain = real_chain(l)?;
    let params = extract_core_params(&chain, tol)?;
    let n_cycle = opts.n.map(|n| {
        let p = power(&params, n);
        NCycleReport {
            n,
            params: p,
            matrix: compose_core(&p),
        }
    });
    Ok(AnalysisReport {
        input: spec.clone(),
        matrix: MatrixReport::Complex(cycle_matrix(l)),
        real_matrix: Some(chain),
        trace: chain.trace(),
        det: chain.det(),
        class: params.class,
        core: CoreReport {
            matrix: chain,
            phi: 0.0,
            params,
        },
        wigner: wigner_decompose(&params),
        bargmann: bargmann_decompose(&chain, tol)?,
        cavity: None,
        n_cycle,
        lorentz: None,
    })
}

/// Lifts the Wigner form of a core to a 4×4 transformation and checks which momentum it fixes.
///
/// Rotations fix a massive momentum (unit mass), shears the light-like `(0, 0, 1, 1)`
/// through the gauge-limit matrix, and squeezes the space-like `(0, 0, cosh η, sinh η)`.
pub fn lorentz_summary(p: &CoreParams<f64>, tol: f64) -> Result<LorentzReport, CliError> {
    let (kind, matrix, momentum) = match p.class {
        TraceClass::Elliptic => (
            MomentumKind::Massive,
            lift_wigner4(p.eta, p.gamma),
            four_momentum_massive(1.0, p.eta)?,
        ),
        TraceClass::Parabolic => (
            MomentumKind::Massless,
            gauge_limit_matrix(p.gamma),
            four_momentum_massless(1.0),
        ),
        TraceClass::Hyperbolic => (
            MomentumKind::Spacelike,
            boost4_z(p.eta) * boost4_x(-p.gamma) * boost4_z(-p.eta),
            Vec4::new(0.0, 0.0, p.eta.cosh(), p.eta.sinh()),
        ),
    };
    Ok(check_momentum(kind, matrix, momentum, tol))
}

pub fn check_momentum(
    kind: MomentumKind,
    matrix: Mat4<f64>,
    momentum: Vec4<f64>,
    tol: f64,
) -> LorentzReport {
    LorentzReport {
        kind,
        matrix,
        momentum,
        image: matrix.apply(&momentum),
        invariant: is_little_group_element(&matrix, &momentum, tol),
        metric_defect: matrix.metric_defect(),
    }
}
