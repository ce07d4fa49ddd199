//! Independent oracles for the integration and acceptance tests. Nothing
//! here calls the library's quadrature or its f(β) evaluation.
#![allow(dead_code)]

use std::f64::consts::PI;

use lamb_conversion::config::ScenarioConfig;
use lamb_conversion::coupling::{coupling_element, MicrowaveDrive, Orientation};
use lamb_conversion::dynamics::{intensity_weak, rho22_at};
use lamb_conversion::hydrogen::TransitionPair;

fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, a, m);
    let right = simpson(fm, frm, fb, m, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Adaptive Simpson with Richardson correction. `rel_tol` is relative to
/// a coarse 16-panel estimate of the integral.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    let panels = 16;
    let h = (b - a) / panels as f64;
    let panel = |i: usize| {
        let lo = a + i as f64 * h;
        let hi = if i == panels - 1 { b } else { lo + h };
        (lo, hi, f(lo), f(0.5 * (lo + hi)), f(hi))
    };
    let coarse: Vec<_> = (0..panels).map(panel).collect();
    let scale: f64 = coarse
        .iter()
        .map(|&(lo, hi, fa, fm, fb)| simpson(fa.abs(), fm.abs(), fb.abs(), lo, hi))
        .sum();
    let tol = rel_tol * scale / panels as f64;
    coarse
        .into_iter()
        .map(|(lo, hi, fa, fm, fb)| {
            refine(&f, lo, hi, fa, fm, fb, simpson(fa, fm, fb, lo, hi), tol, 30)
        })
        .sum()
}

/// f(β) = ∫₀¹ x² e^{−βx²} dx by quadrature.
pub fn f_beta_oracle(beta: f64) -> f64 {
    adaptive_simpson(|x| x * x * (-beta * x * x).exp(), 0.0, 1.0, 1e-14)
}

/// Hydrogenic radial functions written out independently of the library.
pub fn r10(r: f64) -> f64 {
    2.0 * (-r).exp()
}
pub fn r20(r: f64) -> f64 {
    (1.0 - r / 2.0) * (-r / 2.0).exp() / 2.0f64.sqrt()
}
pub fn r21(r: f64) -> f64 {
    r * (-r / 2.0).exp() / (2.0 * 6.0f64.sqrt())
}

/// ∫ R_a R_b r³ dr by quadrature on [0, 80 a₀].
pub fn radial_dipole_oracle(a: fn(f64) -> f64, b: fn(f64) -> f64) -> f64 {
    adaptive_simpson(|r| a(r) * b(r) * r.powi(3), 0.0, 80.0, 1e-13)
}

/// Closed forms from Gamma-function integrals.
pub const RADIAL_1S_2P: f64 = 1.290_266_201_959_863_4; // 128√6/243
pub fn radial_2s_2p() -> f64 {
    3.0 * 3.0f64.sqrt()
}

/// N × (1/2)∫₀^π I(θ) sin θ dθ, with ρ₂₂ depleted per orientation after `t`.
#[allow(clippy::too_many_arguments)]
pub fn orientation_average(
    n_atoms: f64,
    drive: &MicrowaveDrive,
    d32: f64,
    pair31: &TransitionPair,
    ratio: f64,
    lambda: f64,
    rho22_0: f64,
    t: f64,
) -> f64 {
    let integrand = |theta: f64| {
        let o = Orientation::new(theta.clamp(0.0, PI)).unwrap();
        let b = coupling_element(d32, drive, o).unwrap();
        let rho = rho22_at(t, b, pair31.gamma_nk, lambda, rho22_0).unwrap();
        intensity_weak(drive, o, ratio, pair31.omega_nk, lambda, rho).unwrap() * theta.sin()
    };
    n_atoms * 0.5 * adaptive_simpson(integrand, 0.0, PI, 1e-13)
}

pub fn default_config() -> ScenarioConfig {
    ScenarioConfig::with_channel(lamb_conversion::hydrogen::Channel::FineStructure)
}
