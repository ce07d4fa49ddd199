//! Orientation-averaged response of a vessel of randomly oriented atoms:
//! the depletion integral f(β), averaged intensity and cross-section, the
//! depletion time τ and the conversion efficiency η.

use std::f64::consts::PI;

use crate::coupling::MicrowaveDrive;
use crate::error::{Error, Result};
use crate::units::CGS;

/// Below this β the closed form loses digits to cancellation; use the series.
const SERIES_SWITCH: f64 = 0.1;
const SERIES_EPS: f64 = 1e-17;

/// `f(β) = ∫₀¹ x² exp(−βx²) dx`.
///
/// Closed form `√π erf(√β)/(4β^{3/2}) − e^{−β}/(2β)` for β ≥ 0.1, and the
/// alternating series `Σ (−β)^k / (k!(2k+3))` below that.
pub fn f_beta(beta: f64) -> Result<f64> {
    if beta.is_nan() || beta < 0.0 {
        return Err(Error::domain("beta", beta, "must be >= 0"));
    }
    if beta < SERIES_SWITCH {
        return Ok(alternating_series(beta, 3));
    }
    let root = beta.sqrt();
    Ok(PI.sqrt() * libm::erf(root) / (4.0 * beta * root) - (-beta).exp() / (2.0 * beta))
}

/// `Σ_{k≥0} (−β)^k / (k!(2k+offset))`
fn alternating_series(beta: f64, offset: u32) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0; // (−β)^k / k!
    for k in 0u32.. {
        let term = power / (2 * k + offset) as f64;
        sum += term;
        if term.abs() < SERIES_EPS {
            break;
        }
        power *= -beta / (k + 1) as f64;
    }
    sum
}

/// Cumulative depletion integral `∫₀^B f(β) dβ = 1 − √π erf(√B)/(2√B)`.
/// Tends to 1 as B → ∞.
pub fn f_beta_cumulative(b: f64) -> Result<f64> {
    if b.is_nan() || b < 0.0 {
        return Err(Error::domain("beta", b, "must be >= 0"));
    }
    if b < SERIES_SWITCH {
        // Σ_{k≥1} (−1)^{k+1} B^k/(k!(2k+1)) = B · Σ_{k≥0} (−B)^k/((k+1)!(2k+3))
        let mut sum = 0.0;
        let mut power = b;
        for k in 1u32.. {
            let term = power / (2 * k + 1) as f64;
            sum += term;
            if term.abs() < SERIES_EPS {
                break;
            }
            power *= -b / (k + 1) as f64;
        }
        return Ok(sum);
    }
    if b.is_infinite() {
        return Ok(1.0);
    }
    let root = b.sqrt();
    Ok(1.0 - PI.sqrt() * libm::erf(root) / (2.0 * root))
}

/// `(1/3) e^{−β/2}`, the small-β approximation. For comparison tables only.
pub fn f_beta_approx_small(beta: f64) -> f64 {
    (-beta / 2.0).exp() / 3.0
}

/// `(√π/4) β^{−3/2}`, the large-β asymptote. For comparison tables only.
pub fn f_beta_approx_large(beta: f64) -> f64 {
    PI.sqrt() / 4.0 * beta.powf(-1.5)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaPoint {
    pub beta: f64,
    pub f_value: f64,
}

impl BetaPoint {
    pub fn at(beta: f64) -> Result<Self> {
        Ok(BetaPoint {
            beta,
            f_value: f_beta(beta)?,
        })
    }
}

/// Depletion parameter `β = 3E₀²λ₃₁³ ratio λ t / (32π³ħ)`.
///
/// This is the exponent `|b₃₂|²λt/2γ₃₁` of the single-atom depletion for an
/// aligned atom, rewritten through the optical wavelength (cm).
pub fn beta_of(
    drive: &MicrowaveDrive,
    ratio: f64,
    lambda_31: f64,
    lambda: f64,
    t: f64,
) -> Result<f64> {
    Ok(beta_rate(drive, ratio, lambda_31, lambda)? * check_nonneg("t", t)?)
}

/// dβ/dt (1/s).
pub fn beta_rate(drive: &MicrowaveDrive, ratio: f64, lambda_31: f64, lambda: f64) -> Result<f64> {
    check_nonneg("ratio", ratio)?;
    check_nonneg("lambda_31", lambda_31)?;
    check_nonneg("lambda", lambda)?;
    let e0 = drive.e0();
    Ok(3.0 * e0 * e0 * lambda_31.powi(3) * ratio * lambda / (32.0 * PI.powi(3) * CGS.hbar))
}

fn check_nonneg(name: &'static str, v: f64) -> Result<f64> {
    if v.is_nan() || v < 0.0 {
        Err(Error::domain(name, v, "must be >= 0"))
    } else {
        Ok(v)
    }
}

fn check_positive(name: &'static str, v: f64) -> Result<f64> {
    if !v.is_finite() || v <= 0.0 {
        Err(Error::domain(name, v, "must be finite and > 0"))
    } else {
        Ok(v)
    }
}

/// Orientation average of ρ₂₂ cos²θ: `ρ₂₂(0) f(β)`.
pub fn averaged_excitation(beta: f64, rho22_0: f64) -> Result<f64> {
    Ok(rho22_0 * f_beta(beta)?)
}

/// A cylindrical vessel of atomic hydrogen after pumping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleConfig {
    length: f64,
    area: f64,
    density: f64,
    rho22_0: f64,
    ratio: f64,
    lambda_31: f64,
    atom_mass: f64,
}

impl EnsembleConfig {
    /// `length` (cm), `area` (cm²), `density` (g/cm³), `lambda_31` (cm).
    pub fn new(
        length: f64,
        area: f64,
        density: f64,
        rho22_0: f64,
        ratio: f64,
        lambda_31: f64,
    ) -> Result<Self> {
        check_positive("L", length)?;
        check_positive("F", area)?;
        check_positive("rho_H", density)?;
        check_positive("lambda_31", lambda_31)?;
        if !(0.0..=1.0).contains(&rho22_0) {
            return Err(Error::domain("rho22_0", rho22_0, "must lie in [0, 1]"));
        }
        if !ratio.is_finite() || ratio < 0.0 {
            return Err(Error::domain("ratio", ratio, "must be finite and >= 0"));
        }
        Ok(EnsembleConfig {
            length,
            area,
            density,
            rho22_0,
            ratio,
            lambda_31,
            atom_mass: CGS.mu_h,
        })
    }

    /// Overrides the atomic mass (g), e.g. with a rounded textbook value.
    pub fn with_atom_mass(mut self, mass: f64) -> Result<Self> {
        self.atom_mass = check_positive("mu_H", mass)?;
        Ok(self)
    }

    pub fn length(&self) -> f64 {
        self.length
    }
    pub fn area(&self) -> f64 {
        self.area
    }
    pub fn density(&self) -> f64 {
        self.density
    }
    pub fn rho22_0(&self) -> f64 {
        self.rho22_0
    }
    pub fn ratio(&self) -> f64 {
        self.ratio
    }
    pub fn lambda_31(&self) -> f64 {
        self.lambda_31
    }
    pub fn atom_mass(&self) -> f64 {
        self.atom_mass
    }

    /// Number of atoms `ρ_H F L / μ_H`.
    pub fn n_atoms(&self) -> f64 {
        self.density * self.area * self.length / self.atom_mass
    }

    /// Vessel parameter `N₃₁ = ρ_H L λ₃₁² / μ_H`.
    pub fn n31(&self) -> f64 {
        self.density * self.length * self.lambda_31 * self.lambda_31 / self.atom_mass
    }

    /// `(3/2π) N₃₁ ratio`, the efficiency per unit ρ₂₂(0) f(β).
    pub fn eta_prefactor(&self) -> f64 {
        3.0 / (2.0 * PI) * self.n31() * self.ratio
    }

    /// Optical angular frequency 2πc/λ₃₁.
    pub fn omega_31(&self) -> f64 {
        2.0 * PI * CGS.c / self.lambda_31
    }
}

pub fn n31(cfg: &EnsembleConfig) -> f64 {
    cfg.n31()
}

/// Ensemble cross-section `σ_Σ = λN(3/2π)λ₃₁² ratio ρ₂₂(0) f(β)` (cm²).
pub fn sigma_total(cfg: &EnsembleConfig, lambda: f64, beta: f64) -> Result<f64> {
    let l2 = cfg.lambda_31 * cfg.lambda_31;
    Ok(lambda * cfg.n_atoms() * 3.0 / (2.0 * PI) * l2 * cfg.ratio * cfg.rho22_0 * f_beta(beta)?)
}

/// σ_Σ at resonance with λ_max ≈ 1.
pub fn sigma_max(cfg: &EnsembleConfig, beta: f64) -> Result<f64> {
    sigma_total(cfg, 1.0, beta)
}

/// `η_max = σ_max / F`.
pub fn eta_max(cfg: &EnsembleConfig, beta: f64) -> Result<f64> {
    Ok(sigma_max(cfg, beta)? / cfg.area)
}

/// Averaged total intensity `Ī_Σ = σ_Σ S_mw` (erg/s) after driving for `t`.
pub fn total_intensity(
    cfg: &EnsembleConfig,
    drive: &MicrowaveDrive,
    lambda: f64,
    t: f64,
) -> Result<f64> {
    let beta = beta_of(drive, cfg.ratio, cfg.lambda_31, lambda, t)?;
    Ok(sigma_total(cfg, lambda, beta)? * drive.flux())
}

/// Optical energy (erg) radiated between `t0` and `t1`. Over an unbounded
/// window this approaches `N ρ₂₂(0) ħω₃₁`, every stored excitation emitted.
pub fn emitted_energy(
    cfg: &EnsembleConfig,
    drive: &MicrowaveDrive,
    lambda: f64,
    t0: f64,
    t1: f64,
) -> Result<f64> {
    check_nonneg("t0", t0)?;
    if t1.is_nan() || t1 < t0 {
        return Err(Error::domain("t1", t1, "must be >= t0"));
    }
    let rate = beta_rate(drive, cfg.ratio, cfg.lambda_31, lambda)?;
    if rate == 0.0 {
        return Ok(0.0);
    }
    let peak_rate = sigma_total(cfg, lambda, 0.0)? / f_beta(0.0)? * drive.flux();
    let window = f_beta_cumulative(rate * t1)? - f_beta_cumulative(rate * t0)?;
    Ok(peak_rate * window / rate)
}

/// Result of the depletion-time estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Depletion {
    /// Seconds for the emission to drop about tenfold.
    After(f64),
    /// No drive or no coupling: the metastable mode never depletes.
    Never,
}

impl Depletion {
    pub fn seconds(&self) -> Option<f64> {
        match *self {
            Depletion::After(t) => Some(t),
            Depletion::Never => None,
        }
    }
}

/// `τ = 2×10³ ħ / (λ E₀² λ₃₁³ ratio)`.
pub fn depletion_time(
    drive: &MicrowaveDrive,
    ratio: f64,
    lambda_31: f64,
    lambda: f64,
) -> Result<Depletion> {
    check_nonneg("ratio", ratio)?;
    check_positive("lambda_31", lambda_31)?;
    check_positive("lambda", lambda)?;
    let e0 = drive.e0();
    if e0 == 0.0 || ratio == 0.0 {
        return Ok(Depletion::Never);
    }
    Ok(Depletion::After(
        2.0e3 * CGS.hbar / (lambda * e0 * e0 * lambda_31.powi(3) * ratio),
    ))
}
