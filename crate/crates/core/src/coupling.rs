//! Microwave drive bookkeeping, the coupling element `b = (d·E₀)/ħ` and the
//! double-Lorentzian damping decrement λ(ω).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::units::{self, CGS};

/// A monochromatic microwave field. The flux is always derived from the
/// amplitude, never stored independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MicrowaveDrive {
    e0: f64,
    omega: f64,
}

impl MicrowaveDrive {
    /// From field amplitude (statV/cm) and angular frequency (rad/s).
    pub fn new(e0: f64, omega: f64) -> Result<Self> {
        if !e0.is_finite() || e0 < 0.0 {
            return Err(Error::domain("E0", e0, "must be finite and >= 0"));
        }
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::domain("omega", omega, "must be finite and > 0"));
        }
        Ok(MicrowaveDrive { e0, omega })
    }

    /// From a CGS flux (erg s⁻¹ cm⁻²).
    pub fn from_flux(s_cgs: f64, omega: f64) -> Result<Self> {
        Self::new(units::field_from_flux(s_cgs)?, omega)
    }

    /// From a flux in W/cm².
    pub fn from_flux_w_cm2(s: f64, omega: f64) -> Result<Self> {
        Self::from_flux(units::flux_si_to_cgs(s)?, omega)
    }

    pub fn e0(&self) -> f64 {
        self.e0
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// `S_mw = cE₀²/8π`.
    pub fn flux(&self) -> f64 {
        CGS.c * self.e0 * self.e0 / (8.0 * PI)
    }

    pub fn with_e0(&self, e0: f64) -> Result<Self> {
        Self::new(e0, self.omega)
    }
}

/// Angle between the microwave dipole and the field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Orientation {
    theta: f64,
}

impl Orientation {
    pub const ALIGNED: Orientation = Orientation { theta: 0.0 };

    pub fn new(theta: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::domain("theta", theta, "must lie in [0, pi]"));
        }
        Ok(Orientation { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn cos(&self) -> f64 {
        self.theta.cos()
    }
}

/// `b = |d||E₀| cos θ / ħ` in rad/s. Negative past θ = π/2; every consumer
/// squares it.
pub fn coupling_element(d: f64, drive: &MicrowaveDrive, orient: Orientation) -> Result<f64> {
    if d.is_nan() || d < 0.0 {
        return Err(Error::domain("d", d, "must be >= 0"));
    }
    Ok(d * drive.e0() * orient.cos() / CGS.hbar)
}

/// Damping decrement of the stimulated emission,
///
/// `λ = γ²/(γ² + (ω₃₂ + ω)²) + γ²/(γ² + (ω₃₂ − ω)²)`,
///
/// with the optical decay rate γ₃₁ setting the width.
pub fn damping_decrement(omega: f64, omega_32: f64, gamma_31: f64) -> Result<f64> {
    if gamma_31.is_nan() || gamma_31 <= 0.0 {
        return Err(Error::domain("gamma_31", gamma_31, "must be > 0"));
    }
    if omega.is_nan() || omega < 0.0 {
        return Err(Error::domain("omega", omega, "must be >= 0"));
    }
    let g2 = gamma_31 * gamma_31;
    let sum = omega_32 + omega;
    let diff = omega_32 - omega;
    Ok(g2 / (g2 + sum * sum) + g2 / (g2 + diff * diff))
}

/// λ(ω)/λ(ω₃₂): the decrement normalized to one at resonance.
pub fn relative_decrement(omega: f64, omega_32: f64, gamma_31: f64) -> Result<f64> {
    Ok(damping_decrement(omega, omega_32, gamma_31)?
        / damping_decrement(omega_32, omega_32, gamma_31)?)
}
