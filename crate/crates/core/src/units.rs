//! Gaussian-CGS constants and the handful of boundary conversions the
//! pipeline needs (MHz, wavelength, W/cm²).

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Fundamental constants in Gaussian CGS.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// reduced Planck constant (erg s)
    pub hbar: f64,
    /// speed of light (cm/s)
    pub c: f64,
    /// elementary charge (statC)
    pub e: f64,
    /// Bohr radius (cm)
    pub a0: f64,
    /// atomic mass of hydrogen (g)
    pub mu_h: f64,
}

/// CODATA 2018 values.
pub const CGS: PhysicalConstants = PhysicalConstants {
    hbar: 1.054_571_817e-27,
    c: 2.997_924_58e10,
    e: 4.803_204_712_570_263e-10,
    a0: 5.291_772_109_03e-9,
    mu_h: 1.673_557_5e-24,
};

impl PhysicalConstants {
    /// Atomic unit of electric dipole moment, e·a₀ (statC cm).
    pub fn dipole_unit(&self) -> f64 {
        self.e * self.a0
    }

    /// Fine-structure constant e²/(ħc).
    pub fn alpha(&self) -> f64 {
        self.e * self.e / (self.hbar * self.c)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        CGS
    }
}

/// 1 W = 10⁷ erg/s.
pub const ERG_PER_JOULE: f64 = 1.0e7;
/// 1 nm = 10⁻⁷ cm.
pub const CM_PER_NM: f64 = 1.0e-7;

fn check_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(name, value, "must be finite"))
    }
}

/// Frequency in MHz to angular frequency in rad/s.
pub fn freq_mhz_to_angular(f_mhz: f64) -> Result<f64> {
    check_finite("frequency", f_mhz)?;
    if f_mhz < 0.0 {
        return Err(Error::domain("frequency", f_mhz, "must be >= 0"));
    }
    Ok(2.0 * PI * 1.0e6 * f_mhz)
}

/// Signed variant used for detunings.
pub fn detuning_mhz_to_angular(df_mhz: f64) -> f64 {
    2.0 * PI * 1.0e6 * df_mhz
}

/// ω = 2πc/λ, with λ in cm.
pub fn wavelength_to_angular(lambda_cm: f64) -> Result<f64> {
    check_finite("wavelength", lambda_cm)?;
    if lambda_cm <= 0.0 {
        return Err(Error::domain("wavelength", lambda_cm, "must be > 0"));
    }
    Ok(2.0 * PI * CGS.c / lambda_cm)
}

/// λ = 2πc/ω, in cm.
pub fn angular_to_wavelength(omega: f64) -> Result<f64> {
    check_finite("angular frequency", omega)?;
    if omega <= 0.0 {
        return Err(Error::domain("angular frequency", omega, "must be > 0"));
    }
    Ok(2.0 * PI * CGS.c / omega)
}

/// Power flux from W/cm² to erg s⁻¹ cm⁻².
pub fn flux_si_to_cgs(s_w_cm2: f64) -> Result<f64> {
    check_finite("flux", s_w_cm2)?;
    if s_w_cm2 < 0.0 {
        return Err(Error::domain("flux", s_w_cm2, "must be >= 0"));
    }
    Ok(s_w_cm2 * ERG_PER_JOULE)
}

/// Field amplitude E₀ (statV/cm) carrying a CGS flux S = cE₀²/8π.
pub fn field_from_flux(s_cgs: f64) -> Result<f64> {
    check_finite("flux", s_cgs)?;
    if s_cgs < 0.0 {
        return Err(Error::domain("flux", s_cgs, "must be >= 0"));
    }
    Ok((8.0 * PI * s_cgs / CGS.c).sqrt())
}

/// S = cE₀²/8π (erg s⁻¹ cm⁻²).
pub fn flux_from_field(e0: f64) -> Result<f64> {
    check_finite("field amplitude", e0)?;
    if e0 < 0.0 {
        return Err(Error::domain("field amplitude", e0, "must be >= 0"));
    }
    Ok(CGS.c * e0 * e0 / (8.0 * PI))
}
