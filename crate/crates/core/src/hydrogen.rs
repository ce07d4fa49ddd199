//! Atomic inputs for the n ≤ 2 manifold of hydrogen: the mode catalog,
//! nonrelativistic radial functions, dipole matrix elements and
//! spontaneous decay rates.
//!
//! Level splittings inside n = 2 are catalog data (fine structure 10949 MHz,
//! Lamb shift 1057.77 MHz); nothing here tries to derive them. Radial
//! functions are Schrödinger-level, so 2p₁/₂ and 2p₃/₂ share `R₂₁`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quadrature;
use crate::units::{self, CGS};

/// 2s₁/₂ – 2p₃/₂ splitting (MHz).
pub const FINE_STRUCTURE_MHZ: f64 = 10949.0;
/// 2s₁/₂ – 2p₁/₂ splitting (MHz).
pub const LAMB_SHIFT_MHZ: f64 = 1057.77;
/// Nominal 2p → 1s wavelength (cm).
pub const LYMAN_ALPHA_CM: f64 = 1.22e-5;
/// Nominal lifetime of the metastable 2s₁/₂ mode (s).
pub const METASTABLE_LIFETIME_S: f64 = 1.0 / 7.0;
/// Nominal lifetime of the 2p modes (s).
pub const P_LIFETIME_S: f64 = 1.6e-9;

/// Upper limit of the radial integrals, in a₀. The slowest n ≤ 2 product
/// decays as r⁵e⁻ʳ, whose tail beyond 60 a₀ is below 1e-16.
const RADIAL_CUTOFF: f64 = 60.0;
const RADIAL_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModeLabel {
    S1Half1,
    S1Half2,
    P1Half2,
    P3Half2,
}

impl ModeLabel {
    pub const ALL: [ModeLabel; 4] = [
        ModeLabel::S1Half1,
        ModeLabel::S1Half2,
        ModeLabel::P1Half2,
        ModeLabel::P3Half2,
    ];

    /// (n, l)
    pub fn quantum_numbers(self) -> (u32, u32) {
        match self {
            ModeLabel::S1Half1 => (1, 0),
            ModeLabel::S1Half2 => (2, 0),
            ModeLabel::P1Half2 | ModeLabel::P3Half2 => (2, 1),
        }
    }

    /// Twice the total angular momentum j.
    pub fn two_j(self) -> u32 {
        match self {
            ModeLabel::P3Half2 => 3,
            _ => 1,
        }
    }

    pub fn mode(self) -> HydrogenMode {
        HydrogenMode::from_label(self)
    }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModeLabel::S1Half1 => "1s1/2",
            ModeLabel::S1Half2 => "2s1/2",
            ModeLabel::P1Half2 => "2p1/2",
            ModeLabel::P3Half2 => "2p3/2",
        })
    }
}

impl FromStr for ModeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModeLabel::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::ModePair(format!("unknown mode {s:?}")))
    }
}

/// A catalog mode. `omega` is measured from the 1s₁/₂ eigenfrequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HydrogenMode {
    pub label: ModeLabel,
    pub n: u32,
    pub l: u32,
    pub omega: f64,
    /// `None` for the stable ground state.
    pub nominal_lifetime: Option<f64>,
}

impl HydrogenMode {
    pub fn from_label(label: ModeLabel) -> Self {
        let (n, l) = label.quantum_numbers();
        let two_pi_mhz = 2.0 * PI * 1.0e6;
        let p3 = 2.0 * PI * CGS.c / LYMAN_ALPHA_CM;
        let s2 = p3 - two_pi_mhz * FINE_STRUCTURE_MHZ;
        let (omega, nominal_lifetime) = match label {
            ModeLabel::S1Half1 => (0.0, None),
            ModeLabel::S1Half2 => (s2, Some(METASTABLE_LIFETIME_S)),
            ModeLabel::P1Half2 => (s2 - two_pi_mhz * LAMB_SHIFT_MHZ, Some(P_LIFETIME_S)),
            ModeLabel::P3Half2 => (p3, Some(P_LIFETIME_S)),
        };
        HydrogenMode {
            label,
            n,
            l,
            omega,
            nominal_lifetime,
        }
    }

    /// Orbital degeneracy 2l + 1.
    pub fn orbital_degeneracy(&self) -> u32 {
        2 * self.l + 1
    }
}

/// Normalized hydrogenic radial function `R_nl(r)`, with `r` in a₀ and the
/// result in a₀^(-3/2).
pub fn radial_wavefunction(n: u32, l: u32, r: f64) -> Result<f64> {
    if r.is_nan() || r < 0.0 {
        return Err(Error::domain("r", r, "must be >= 0"));
    }
    match (n, l) {
        (1, 0) => Ok(2.0 * (-r).exp()),
        (2, 0) => Ok((1.0 - 0.5 * r) * (-0.5 * r).exp() / 2.0f64.sqrt()),
        (2, 1) => Ok(r * (-0.5 * r).exp() / 24.0f64.sqrt()),
        _ => Err(Error::ModePair(format!(
            "radial function for (n, l) = ({n}, {l}) is not supported"
        ))),
    }
}

fn check_supported(n: u32, l: u32) -> Result<()> {
    radial_wavefunction(n, l, 0.0).map(|_| ())
}

/// `∫₀^∞ R_a(r) R_b(r) r^(2+power) dr` in units of a₀^power.
pub fn radial_overlap(a: (u32, u32), b: (u32, u32), power: i32) -> Result<f64> {
    check_supported(a.0, a.1)?;
    check_supported(b.0, b.1)?;
    let integrand = |r: f64| {
        // both pairs were validated above
        let ra = radial_wavefunction(a.0, a.1, r).unwrap_or(0.0);
        let rb = radial_wavefunction(b.0, b.1, r).unwrap_or(0.0);
        ra * rb * r.powi(2 + power)
    };
    Ok(quadrature::integrate(integrand, 0.0, RADIAL_CUTOFF, RADIAL_TOL).value)
}

/// Signed radial dipole integral `∫ R_a r R_b r² dr` in a₀.
pub fn radial_dipole_integral(a: (u32, u32), b: (u32, u32)) -> Result<f64> {
    radial_overlap(a, b, 1)
}

/// `|⟨l+1, 0| cos θ |l, 0⟩|`, zero unless the orbital numbers differ by one.
pub fn angular_factor_m0(l_a: u32, l_b: u32) -> f64 {
    let l = l_a.min(l_b) as f64;
    if l_a.abs_diff(l_b) != 1 {
        return 0.0;
    }
    (l + 1.0) / ((2.0 * l + 1.0) * (2.0 * l + 3.0)).sqrt()
}

/// How the scalar |d_nk| fed to the decay-rate formula is built from
/// sublevel matrix elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LineStrength {
    /// z-component between the m = 0 sublevels.
    ZComponent,
    /// `|d|² = 2·S/g_upper`, where `S` sums `|⟨l|r|u⟩|²` over every sublevel
    /// pair and `g_upper = 2l + 1`. With the classical-amplitude prefactor of
    /// the decay-rate formula this reproduces the Einstein coefficient
    /// `A = 4ω³S/(3ħc³g_upper)`, i.e. the 1.6 ns lifetime of 2p.
    #[default]
    SublevelSummed,
}

/// z-component dipole matrix element magnitude between the m = 0 sublevels
/// of two catalog modes (statC·cm). Zero when Δl ≠ ±1.
pub fn dipole_matrix_element(a: &HydrogenMode, b: &HydrogenMode) -> Result<f64> {
    let angular = angular_factor_m0(a.l, b.l);
    if angular == 0.0 {
        return Ok(0.0);
    }
    let radial = radial_dipole_integral((a.n, a.l), (b.n, b.l))?;
    Ok(CGS.dipole_unit() * angular * radial.abs())
}

/// Sublevel-summed orbital line strength `S` in (e·a₀)².
pub fn line_strength(a: &HydrogenMode, b: &HydrogenMode) -> Result<f64> {
    if a.l.abs_diff(b.l) != 1 {
        return Ok(0.0);
    }
    let radial = radial_dipole_integral((a.n, a.l), (b.n, b.l))?;
    Ok(a.l.max(b.l) as f64 * radial * radial)
}

/// Scalar dipole magnitude under the chosen convention (statC·cm). The
/// upper mode is whichever has the larger eigenfrequency.
pub fn effective_dipole(
    a: &HydrogenMode,
    b: &HydrogenMode,
    convention: LineStrength,
) -> Result<f64> {
    match convention {
        LineStrength::ZComponent => dipole_matrix_element(a, b),
        LineStrength::SublevelSummed => {
            let upper = if a.omega >= b.omega { a } else { b };
            let s = line_strength(a, b)?;
            let g = upper.orbital_degeneracy() as f64;
            Ok(CGS.dipole_unit() * (2.0 * s / g).sqrt())
        }
    }
}

/// Spontaneous decay rate `γ = 2ω³|d|²/(3ħc³)` in 1/s.
pub fn decay_rate(omega_nk: f64, d_nk: f64) -> Result<f64> {
    if omega_nk.is_nan() || omega_nk < 0.0 {
        return Err(Error::domain("omega_nk", omega_nk, "must be >= 0"));
    }
    let c = CGS.c;
    Ok(2.0 * omega_nk.powi(3) * d_nk * d_nk / (3.0 * CGS.hbar * c * c * c))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionPair {
    pub upper: HydrogenMode,
    pub lower: HydrogenMode,
    /// ω_upper − ω_lower (rad/s)
    pub omega_nk: f64,
    /// statC·cm
    pub d_nk: f64,
    /// 1/s
    pub gamma_nk: f64,
}

impl TransitionPair {
    /// Wavelength 2πc/ω_nk in cm.
    pub fn wavelength(&self) -> Result<f64> {
        units::angular_to_wavelength(self.omega_nk)
    }

    /// 1/γ, or `None` for a non-radiating pair.
    pub fn lifetime(&self) -> Option<f64> {
        (self.gamma_nk > 0.0).then(|| 1.0 / self.gamma_nk)
    }
}

pub fn make_transition_pair(
    upper: HydrogenMode,
    lower: HydrogenMode,
    convention: LineStrength,
) -> Result<TransitionPair> {
    if upper.label == lower.label {
        return Err(Error::ModePair(format!(
            "{} paired with itself",
            upper.label
        )));
    }
    let omega_nk = upper.omega - lower.omega;
    if omega_nk < 0.0 {
        return Err(Error::ModePair(format!(
            "{} lies below {}; order the pair upper first",
            upper.label, lower.label
        )));
    }
    let d_nk = effective_dipole(&upper, &lower, convention)?;
    let gamma_nk = decay_rate(omega_nk, d_nk)?;
    Ok(TransitionPair {
        upper,
        lower,
        omega_nk,
        d_nk,
        gamma_nk,
    })
}

/// `|d_mw|²/|d_opt|²` from m = 0 z-components. For s–p pairs this equals
/// the ratio under either [`LineStrength`] convention.
pub fn hydrogenic_ratio(
    microwave: (&HydrogenMode, &HydrogenMode),
    optical: (&HydrogenMode, &HydrogenMode),
) -> Result<f64> {
    let d_mw = dipole_matrix_element(microwave.0, microwave.1)?;
    let d_opt = dipole_matrix_element(optical.0, optical.1)?;
    if d_opt == 0.0 {
        return Err(Error::ModePair(
            "optical transition is dipole-forbidden".into(),
        ));
    }
    Ok((d_mw / d_opt).powi(2))
}

/// Which n = 2 splitting the microwave drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    /// 2s₁/₂ → 2p₃/₂ at 10949 MHz.
    FineStructure,
    /// 2s₁/₂ → 2p₁/₂ at 1057.77 MHz.
    LambShift,
}

/// Index assignment of the three-mode model. For the Lamb-shift channel
/// modes 2 and 3 are interchanged, so mode 3 is the metastable 2s₁/₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelModes {
    pub mode1: HydrogenMode,
    pub mode2: HydrogenMode,
    pub mode3: HydrogenMode,
}

impl Channel {
    pub const ALL: [Channel; 2] = [Channel::FineStructure, Channel::LambShift];

    pub fn name(self) -> &'static str {
        match self {
            Channel::FineStructure => "fine_structure",
            Channel::LambShift => "lamb_shift",
        }
    }

    pub fn modes(self) -> ChannelModes {
        let mode1 = ModeLabel::S1Half1.mode();
        match self {
            Channel::FineStructure => ChannelModes {
                mode1,
                mode2: ModeLabel::S1Half2.mode(),
                mode3: ModeLabel::P3Half2.mode(),
            },
            Channel::LambShift => ChannelModes {
                mode1,
                mode2: ModeLabel::P1Half2.mode(),
                mode3: ModeLabel::S1Half2.mode(),
            },
        }
    }

    /// Nominal microwave splitting in MHz.
    pub fn splitting_mhz(self) -> f64 {
        match self {
            Channel::FineStructure => FINE_STRUCTURE_MHZ,
            Channel::LambShift => LAMB_SHIFT_MHZ,
        }
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Channel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fine_structure" => Ok(Channel::FineStructure),
            "lamb_shift" => Ok(Channel::LambShift),
            other => Err(Error::validation(
                "channel",
                format!("expected fine_structure or lamb_shift, got {other:?}"),
            )),
        }
    }
}

impl ChannelModes {
    /// The 2p mode that radiates at ~122 nm.
    pub fn emitter(&self) -> HydrogenMode {
        if self.mode3.l == 1 {
            self.mode3
        } else {
            self.mode2
        }
    }

    /// The metastable 2s mode holding the stored excitation.
    pub fn metastable(&self) -> HydrogenMode {
        if self.mode3.l == 0 {
            self.mode3
        } else {
            self.mode2
        }
    }

    /// Optical emitter → 1s pair ("31" in the fine-structure labelling).
    pub fn optical_pair(&self, convention: LineStrength) -> Result<TransitionPair> {
        make_transition_pair(self.emitter(), self.mode1, convention)
    }

    /// Microwave pair between modes 3 and 2 ("32").
    pub fn microwave_pair(&self, convention: LineStrength) -> Result<TransitionPair> {
        make_transition_pair(self.mode3, self.mode2, convention)
    }

    /// Hydrogenic `|d₃₂|²/|d₃₁|²` for this assignment.
    pub fn hydrogenic_ratio(&self) -> Result<f64> {
        let emitter = self.emitter();
        hydrogenic_ratio((&self.mode3, &self.mode2), (&emitter, &self.mode1))
    }
}
