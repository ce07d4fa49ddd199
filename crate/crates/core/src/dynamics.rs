//! Single-atom response to the drive: depletion of the metastable mode,
//! stimulated optical intensity and the effective cross-section σ = I/S.

use std::f64::consts::PI;

use crate::coupling::{MicrowaveDrive, Orientation};
use crate::error::{Error, Result};
use crate::hydrogen::TransitionPair;
use crate::units::CGS;

/// Populations of the metastable (ρ₂₂) and emitting (ρ₃₃) modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcitationState {
    rho22_0: f64,
    rho33: f64,
}

impl ExcitationState {
    pub fn new(rho22_0: f64, rho33: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&rho22_0) {
            return Err(Error::domain("rho22_0", rho22_0, "must lie in [0, 1]"));
        }
        if !(0.0..=rho22_0).contains(&rho33) {
            return Err(Error::domain("rho33", rho33, "must lie in [0, rho22_0]"));
        }
        Ok(ExcitationState { rho22_0, rho33 })
    }

    /// Weak-excitation state with ρ₃₃ = 0.
    pub fn weak(rho22_0: f64) -> Result<Self> {
        Self::new(rho22_0, 0.0)
    }

    pub fn rho22_0(&self) -> f64 {
        self.rho22_0
    }

    pub fn rho33(&self) -> f64 {
        self.rho33
    }
}

fn check_decrement(lambda: f64) -> Result<()> {
    if lambda.is_nan() || lambda <= 0.0 || lambda > 2.0 {
        return Err(Error::domain("lambda", lambda, "must lie in (0, 2]"));
    }
    Ok(())
}

/// `ρ₂₂(t) = ρ₂₂(0) exp(−|b₃₂|² λ t / 2γ₃₁)`.
pub fn rho22_at(t: f64, b32: f64, gamma_31: f64, lambda: f64, rho22_0: f64) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::domain("t", t, "must be >= 0"));
    }
    if gamma_31.is_nan() || gamma_31 <= 0.0 {
        return Err(Error::domain("gamma_31", gamma_31, "must be > 0"));
    }
    check_decrement(lambda)?;
    if !(0.0..=1.0).contains(&rho22_0) {
        return Err(Error::domain("rho22_0", rho22_0, "must lie in [0, 1]"));
    }
    Ok(rho22_0 * (-b32 * b32 * lambda * t / (2.0 * gamma_31)).exp())
}

/// Stimulated optical power of one atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StimulatedIntensity {
    /// erg/s; negative when ρ₃₃ > ρ₂₂.
    pub power: f64,
    /// Set when the population difference is negative, which lies outside
    /// the weak-excitation model. The power is reported unclamped.
    pub inverted_populations: bool,
}

/// `I = λħω₃₁ (|b₃₂|²/2γ₃₁)(ρ₂₂ − ρ₃₃)`.
pub fn intensity_full(
    pair31: &TransitionPair,
    b32: f64,
    lambda: f64,
    rho22: f64,
    rho33: f64,
) -> Result<StimulatedIntensity> {
    let gamma = pair31.gamma_nk;
    if gamma.is_nan() || gamma <= 0.0 {
        return Err(Error::domain("gamma_31", gamma, "must be > 0"));
    }
    let difference = rho22 - rho33;
    Ok(StimulatedIntensity {
        power: lambda * CGS.hbar * pair31.omega_nk * b32 * b32 / (2.0 * gamma) * difference,
        inverted_populations: difference < 0.0,
    })
}

/// Weak-excitation intensity written through the microwave flux,
/// `I ≈ λ (6πc²/ω₃₁²) ratio cos²θ ρ₂₂ S`, with `ratio = |d₃₂|²/|d₃₁|²`.
pub fn intensity_weak(
    drive: &MicrowaveDrive,
    orient: Orientation,
    ratio: f64,
    omega_31: f64,
    lambda: f64,
    rho22: f64,
) -> Result<f64> {
    if omega_31.is_nan() || omega_31 <= 0.0 {
        return Err(Error::domain("omega_31", omega_31, "must be > 0"));
    }
    if ratio.is_nan() || ratio < 0.0 {
        return Err(Error::domain("ratio", ratio, "must be >= 0"));
    }
    let cos = orient.cos();
    let c = CGS.c;
    Ok(
        lambda * 6.0 * PI * c * c / (omega_31 * omega_31)
            * ratio
            * cos
            * cos
            * rho22
            * drive.flux(),
    )
}

/// σ = I/S_mw (cm²). Independent of the field amplitude.
pub fn single_atom_cross_section(
    drive: &MicrowaveDrive,
    orient: Orientation,
    ratio: f64,
    omega_31: f64,
    lambda: f64,
    rho22: f64,
) -> Result<f64> {
    let flux = drive.flux();
    if flux <= 0.0 {
        return Err(Error::domain(
            "S_mw",
            flux,
            "cross-section needs a nonzero flux",
        ));
    }
    Ok(intensity_weak(drive, orient, ratio, omega_31, lambda, rho22)? / flux)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleAtomResult {
    /// erg/s
    pub intensity: f64,
    /// cm²
    pub sigma: f64,
    pub rho22_t: f64,
}

/// One atom at orientation θ after driving for `t` seconds: the depleted
/// ρ₂₂(t) fed into the weak-excitation intensity. `d32` and `pair31` must
/// come from the same dipole convention as `ratio` implies.
pub fn single_atom_response(
    drive: &MicrowaveDrive,
    orient: Orientation,
    d32: f64,
    pair31: &TransitionPair,
    lambda: f64,
    rho22_0: f64,
    t: f64,
) -> Result<SingleAtomResult> {
    let b32 = crate::coupling::coupling_element(d32, drive, orient)?;
    let rho22_t = rho22_at(t, b32, pair31.gamma_nk, lambda, rho22_0)?;
    let ratio = (d32 / pair31.d_nk).powi(2);
    let intensity = intensity_weak(drive, orient, ratio, pair31.omega_nk, lambda, rho22_t)?;
    let flux = drive.flux();
    let sigma = if flux > 0.0 { intensity / flux } else { 0.0 };
    Ok(SingleAtomResult {
        intensity,
        sigma,
        rho22_t,
    })
}
