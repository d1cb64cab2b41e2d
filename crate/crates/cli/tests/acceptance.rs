//! Acceptance suite. Runs every criterion in sequence, prints one line each,
//! and exits nonzero if any fails.

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use abcd_core::cavity::{cavity_core, cavity_factorize, is_stable, round_trip, CavitySpec};
use abcd_core::core_form::{classify, compose_core, extract_core_params};
use abcd_core::decomp::{
    bargmann_decompose, bargmann_elliptic_closed_form, compose_bargmann, power, wigner_decompose,
};
use abcd_core::lorentz::{
    boost4_x, boost4_z, four_momentum_massless, gauge_limit_matrix, lift_wigner4, rot4_y, rot4_z,
    Mat4, Vec4,
};
use abcd_core::mat2::{CMat2, Mat2};
use abcd_core::multilayer::{
    boundary_matrix, chain_wigner, cycle_matrix, middle_bargmann_closed_form, phase_matrix,
    real_chain_direct, similarity_c, similarity_c1, similarity_c2, similarity_c_inverse,
    LayerCycleSpec,
};
use abcd_core::{
    BargmannParams, CoreParams, Error, ShearOrientation, Sign, Tolerances, TraceClass,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type M = Mat2<f64>;
type C = CMat2<f64>;
type P = CoreParams<f64>;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tol() -> Tolerances<f64> {
    Tolerances::default()
}

fn sign(r: &mut ChaCha8Rng) -> Sign {
    if r.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn signed(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let x = r.gen_range(lo..=hi);
    if r.gen_bool(0.5) {
        x
    } else {
        -x
    }
}

/// Elliptic cores come back with `Sign::Plus` and `γ/2 ∈ (−π, π]`, so they are
/// sampled in that canonical chart. `|γ| ≥ 1e-2` keeps samples out of the parabolic band.
fn random_core(r: &mut ChaCha8Rng, class: TraceClass, gmax: f64) -> P {
    let eta = r.gen_range(-3.0..=3.0);
    match class {
        TraceClass::Elliptic => P::elliptic(signed(r, 1e-2, gmax), eta),
        TraceClass::Hyperbolic => P::hyperbolic(signed(r, 1e-2, gmax), eta).with_sign(sign(r)),
        TraceClass::Parabolic => {
            let o = if r.gen_bool(0.5) {
                ShearOrientation::Upper
            } else {
                ShearOrientation::Lower
            };
            // a lower shear with γ = 0 is the identity, which reads back as upper
            P::parabolic(signed(r, 1e-3, gmax), o).with_sign(sign(r))
        }
    }
}

const CLASSES: [TraceClass; 3] = [
    TraceClass::Elliptic,
    TraceClass::Hyperbolic,
    TraceClass::Parabolic,
];

fn core_sample(seed: u64, n: usize) -> Vec<P> {
    let mut r = rng(seed);
    (0..n)
        .map(|i| random_core(&mut r, CLASSES[i % 3], 3.0))
        .collect()
}

fn criterion_1() -> Outcome {
    let mut worst = 0.0f64;
    for p in core_sample(1, 10_000) {
        let q = match extract_core_params(&compose_core(&p), &tol()) {
            Ok(q) => q,
            Err(e) => return outcome(false, format!("{p:?}: {e}")),
        };
        if q.class != p.class || q.sign != p.sign || q.orientation != p.orientation {
            return outcome(false, format!("{p:?} read back as {q:?}"));
        }
        worst = worst
            .max((q.gamma - p.gamma).abs())
            .max((q.eta - p.eta).abs());
    }
    outcome(
        worst <= 1e-9,
        format!("max parameter error {worst:.2e} (limit 1e-9)"),
    )
}

fn criterion_2() -> Outcome {
    let mut worst = 0.0f64;
    for p in core_sample(1, 10_000) {
        let w = wigner_decompose(&p);
        let [l, m, r] = w.factors();
        let product = (l * m * r).scale(w.sign.value());
        worst = worst.max(product.max_abs_diff(&compose_core(&p)));
    }
    outcome(
        worst <= 1e-10,
        format!("max entry error {worst:.2e} (limit 1e-10)"),
    )
}

fn criterion_3() -> Outcome {
    let (mut product_err, mut inverse_err) = (0.0f64, 0.0f64);
    let steps = 100;
    for i in 0..steps {
        for j in 0..steps {
            let alpha = -1.5 + 3.0 * i as f64 / (steps - 1) as f64;
            let chi = -1.5 + 3.0 * j as f64 / (steps - 1) as f64;
            let b = BargmannParams::new(alpha, chi);
            let m = compose_bargmann(&b);
            // the three factors built independently; R(α) turns by α/2
            let rot = |a: f64| {
                let (s, c) = (a / 2.0).sin_cos();
                M::new(c, -s, s, c)
            };
            let sq = M::new(chi.cosh(), -chi.sinh(), -chi.sinh(), chi.cosh());
            product_err = product_err.max(m.max_abs_diff(&(rot(alpha) * sq * rot(alpha))));
            let [r1, s, r2] = b.factors();
            product_err = product_err.max(m.max_abs_diff(&(r1 * s * r2)));
            match bargmann_decompose(&m, &tol()) {
                Ok(back) => {
                    inverse_err = inverse_err
                        .max((back.alpha - alpha).abs())
                        .max((back.chi - chi).abs());
                }
                Err(e) => return outcome(false, format!("({alpha}, {chi}): {e}")),
            }
        }
    }
    outcome(
        product_err <= 1e-12 && inverse_err <= 1e-9,
        format!("product error {product_err:.2e} (limit 1e-12), inverse error {inverse_err:.2e} (limit 1e-9)"),
    )
}

/// Relative error `max|Δ| / max(1, max|entry|)`: the hyperbolic powers reach `e^{300}`.
fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let mut worst = 0.0f64;
    for n in [2u32, 10, 100, 1000] {
        // keeps N·|γ|/2 ≤ 300 so the iterated product stays finite
        let gmax = 3.0f64.min(600.0 / n as f64);
        for class in CLASSES {
            for _ in 0..100 {
                let p = random_core(&mut r, class, gmax);
                let m = compose_core(&p);
                let iterated = (0..n).fold(M::identity(), |acc, _| acc * m);
                let closed = compose_core(&power(&p, n));
                worst = worst.max(closed.rel_diff(&iterated));
            }
        }
    }
    outcome(
        worst <= 1e-8,
        format!("max relative error {worst:.2e} (limit 1e-8)"),
    )
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    let (mut fact_err, mut cos_err, mut eta_err) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let rr: f64 = r.gen_range(0.1..10.0);
        let d = rr * r.gen_range(1e-3..(2.0 - 1e-3));
        let spec = CavitySpec::new(d, rr);
        let (f, core) = match (cavity_factorize(&spec), cavity_core(&spec)) {
            (Ok(f), Ok(core)) => (f, core),
            _ => return outcome(false, format!("stable cavity rejected: d = {d}, R = {rr}")),
        };
        let rt = round_trip(&spec).unwrap();
        fact_err = fact_err.max(f.unfold(&(f.c * f.c)).rel_diff(&rt));
        cos_err = cos_err.max(((core.gamma / 2.0).cos() - (1.0 - d / rr)).abs());
        let e_eta = ((2.0 * rr - d) / (4.0 * d)).sqrt();
        eta_err = eta_err.max((core.eta - e_eta.ln()).abs());
    }
    let mut flips = true;
    let class_tol = tol().class;
    for rr in [0.25, 1.0, 4.0] {
        let below = CavitySpec::new(2.0 * rr - 10.0 * class_tol, rr);
        let above = CavitySpec::new(2.0 * rr + 10.0 * class_tol, rr);
        flips &= is_stable(&below) && !is_stable(&above);
        flips &= cavity_core(&below).is_ok();
        flips &= matches!(cavity_core(&above), Err(Error::UnstableCavity { .. }));
        flips &= classify(&round_trip(&below).unwrap(), &tol()) == Ok(TraceClass::Elliptic);
        flips &= classify(&round_trip(&above).unwrap(), &tol()) == Ok(TraceClass::Hyperbolic);
    }
    outcome(
        fact_err <= 1e-9 && cos_err <= 1e-10 && eta_err <= 1e-10 && flips,
        format!(
            "factorization {fact_err:.2e} (limit 1e-9), cos(γ/2) {cos_err:.2e}, η {eta_err:.2e} (limit 1e-10), verdict flips at 2R: {flips}"
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    let (mut residue, mut chain_err, mut term_err) = (0.0f64, 0.0f64, 0.0f64);
    let (c1, c2) = (similarity_c1::<f64>(), similarity_c2::<f64>());
    let (c1i, c2i) = (c1.inverse(), c2.inverse());
    for _ in 0..1000 {
        let spec = LayerCycleSpec::new(
            r.gen_range(-PI..=PI),
            r.gen_range(-PI..=PI),
            r.gen_range(-2.0..=2.0),
        );
        let conj = similarity_c() * cycle_matrix(&spec) * similarity_c_inverse();
        residue = residue.max(conj.max_imag());
        chain_err = chain_err.max(conj.re().max_abs_diff(&real_chain_direct(&spec)));

        let (delta, sigma) = (spec.delta1, spec.sigma);
        let rot = C::from_real(&M::new(
            (delta / 2.0).cos(),
            -(delta / 2.0).sin(),
            (delta / 2.0).sin(),
            (delta / 2.0).cos(),
        ));
        let b = C::from_real(&M::new((sigma / 2.0).exp(), 0.0, 0.0, (-sigma / 2.0).exp()));
        let q = boundary_matrix(sigma);
        for diff in [
            (c1 * phase_matrix(delta) * c1i).max_abs_diff(&rot),
            (c1 * q * c1i).max_abs_diff(&q),
            (c2 * q * c2i).max_abs_diff(&b),
            (c2 * rot).max_abs_diff(&(rot * c2)),
        ] {
            term_err = term_err.max(diff);
        }
    }
    outcome(
        residue <= 1e-12 && chain_err <= 1e-12 && term_err <= 1e-13,
        format!(
            "imaginary residue {residue:.2e}, chain error {chain_err:.2e} (limit 1e-12), termwise {term_err:.2e} (limit 1e-13)"
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let (mut theta_err, mut eta_err) = (0.0f64, 0.0f64);
    let mut accepted = 0;
    let mut drawn = 0;
    while accepted < 1000 {
        drawn += 1;
        let spec = LayerCycleSpec::new(
            r.gen_range(-PI..=PI),
            r.gen_range(-PI..=PI),
            r.gen_range(-2.0..=2.0),
        );
        let mid = middle_bargmann_closed_form(&spec);
        let b = BargmannParams::new(mid.alpha + spec.delta2 / 2.0, mid.chi);
        if (b.chi.cosh() * b.alpha.cos()).abs() >= 1.0 - 1e-6 {
            continue;
        }
        accepted += 1;
        let Some((theta, eta)) = bargmann_elliptic_closed_form(&b) else {
            return outcome(false, format!("no closed form for {spec:?}"));
        };
        let p = match chain_wigner(&spec) {
            Ok(p) if p.class == TraceClass::Elliptic => p,
            other => return outcome(false, format!("{spec:?}: {other:?}")),
        };
        theta_err = theta_err.max((p.gamma - theta).abs());
        eta_err = eta_err.max((p.eta - eta).abs());
    }
    outcome(
        theta_err <= 1e-10 && eta_err <= 1e-10,
        format!("θ error {theta_err:.2e}, η error {eta_err:.2e} (limit 1e-10) over {accepted} of {drawn} specs"),
    )
}

fn grid(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> + Clone {
    (0..steps).map(move |i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
}

fn rel_fixed(m: &Mat4<f64>, p: &Vec4<f64>) -> f64 {
    m.apply(p).distance(p) / p.euclid_norm()
}

fn criterion_8() -> Outcome {
    let (mut fixed, mut metric) = (0.0f64, 0.0f64);
    for eta in grid(-3.0, 3.0, 61) {
        for theta in grid(-3.0, 3.0, 61) {
            let w = lift_wigner4(eta, theta);
            for m in [0.1, 1.0, 10.0] {
                let p = Vec4::new(0.0, 0.0, m * eta.sinh(), m * eta.cosh());
                fixed = fixed.max(rel_fixed(&w, &p));
            }
            for l in [
                w,
                rot4_y(theta),
                rot4_z(theta),
                boost4_x(eta),
                boost4_z(eta),
            ] {
                metric = metric.max(l.metric_defect());
            }
        }
    }
    for g in grid(-5.0, 5.0, 101) {
        metric = metric.max(gauge_limit_matrix(g).metric_defect());
    }
    outcome(
        fixed <= 1e-10 && metric <= 1e-10,
        format!("momentum drift {fixed:.2e}, metric defect {metric:.2e} (limit 1e-10)"),
    )
}

fn criterion_9() -> Outcome {
    let (mut fixed, mut additivity) = (0.0f64, 0.0f64);
    for g in grid(-5.0, 5.0, 101) {
        for p in [0.5, 1.0, 7.0] {
            let v = four_momentum_massless(p);
            assert_eq!(v, Vec4::new(0.0, 0.0, p, p));
            fixed = fixed.max(rel_fixed(&gauge_limit_matrix(g), &v));
        }
        for h in grid(-5.0, 5.0, 41) {
            let lhs = gauge_limit_matrix(g) * gauge_limit_matrix(h);
            additivity = additivity.max(lhs.max_abs_diff(&gauge_limit_matrix(g + h)));
        }
    }
    outcome(
        fixed <= 1e-12 && additivity <= 1e-10,
        format!(
            "momentum drift {fixed:.2e} (limit 1e-12), additivity {additivity:.2e} (limit 1e-10)"
        ),
    )
}

fn criterion_10() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_abcd");
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let run = |args: &[&str]| {
        Command::new(exe)
            .args(args)
            .env_remove("ABCD_TOL")
            .output()
            .unwrap()
    };
    for name in ["identity", "cavity_confocal", "multilayer_sigma0"] {
        let input = golden.join(format!("{name}.json"));
        let expected =
            std::fs::read(golden.join(format!("{name}.report.json"))).unwrap_or_default();
        let first = run(&["analyze", input.to_str().unwrap()]);
        let second = run(&["analyze", input.to_str().unwrap()]);
        if !first.status.success() || first.stdout != second.stdout || first.stdout != expected {
            return outcome(
                false,
                format!("{name}: report is not byte-identical to the golden file"),
            );
        }
    }
    let unstable = run(&["cavity", "--d", "3", "--r", "1"]);
    let kind = serde_json::from_slice::<serde_json::Value>(&unstable.stderr)
        .ok()
        .and_then(|v| v["error"]["kind"].as_str().map(str::to_string));
    let ok = unstable.status.code() == Some(2) && kind.as_deref() == Some("UnstableCavity");
    outcome(
        ok,
        format!(
            "3 golden reports identical; unstable cavity exit {:?} {:?}",
            unstable.status.code(),
            kind
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        ("core round trip", criterion_1, Duration::from_secs(1)),
        ("wigner identity", criterion_2, Duration::from_secs(1)),
        ("bargmann identity", criterion_3, Duration::from_secs(1)),
        ("periodic power", criterion_4, Duration::from_secs(2)),
        ("cavity factorization", criterion_5, Duration::from_secs(1)),
        (
            "multilayer conjugation",
            criterion_6,
            Duration::from_secs(1),
        ),
        ("chain bargmann/wigner", criterion_7, Duration::from_secs(1)),
        ("little group", criterion_8, Duration::from_secs(1)),
        ("gauge limit", criterion_9, Duration::from_secs(1)),
        ("cli golden files", criterion_10, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let elapsed = start.elapsed();
        let ok = o.ok && elapsed < *budget;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<24} {}  {}; {:.3}s (budget {}s)",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
