//! Flat `key = value` scenario documents.
//!
//! ```text
//! # fine-structure channel, paper vessel
//! channel = fine_structure
//! flux = 1.0          # W/cm^2
//! detuning = 0        # MHz from resonance
//! L = 10              # cm
//! F = 1               # cm^2
//! rho_H = 0.9e-4      # g/cm^3
//! rho22_0 = 1e-4
//! ratio = paper_unity # or hydrogenic, or a number
//! lambda_31 = 122     # nm
//! t_start = 0         # s
//! t_stop = 1e-6       # s
//! t_steps = 101
//! output = run.csv
//! ```
//!
//! Only `channel` is required.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::hydrogen::{Channel, LineStrength};
use crate::units::{self, CM_PER_NM};

const KNOWN_KEYS: [&str; 13] = [
    "channel",
    "flux",
    "detuning",
    "L",
    "F",
    "rho_H",
    "rho22_0",
    "ratio",
    "lambda_31",
    "t_start",
    "t_stop",
    "t_steps",
    "output",
];

/// Where `|d₃₂|²/|d₃₁|²` comes from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RatioMode {
    /// The illustrative value 1.
    PaperUnity,
    /// Computed from hydrogenic matrix elements (≈ 16.22).
    Hydrogenic,
    Custom(f64),
}

impl RatioMode {
    pub fn value(&self, channel: Channel) -> Result<f64> {
        match *self {
            RatioMode::PaperUnity => Ok(1.0),
            RatioMode::Hydrogenic => channel.modes().hydrogenic_ratio(),
            RatioMode::Custom(v) => Ok(v),
        }
    }

    fn parse(s: &str, line: usize) -> Result<Self> {
        match s {
            "paper_unity" => Ok(RatioMode::PaperUnity),
            "hydrogenic" => Ok(RatioMode::Hydrogenic),
            other => other
                .parse()
                .map(RatioMode::Custom)
                .map_err(|_| Error::Parse {
                    line,
                    message: format!(
                        "ratio: expected paper_unity, hydrogenic or a number, got {other:?}"
                    ),
                }),
        }
    }
}

/// Linear time grid (s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl TimeGrid {
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let span = self.stop - self.start;
        let last = self.steps - 1;
        (0..self.steps).map(move |i| {
            if i == last {
                self.stop
            } else {
                self.start + span * i as f64 / last as f64
            }
        })
    }
}

/// A validated scenario with every quantity in CGS / rad/s.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub channel: Channel,
    /// erg s⁻¹ cm⁻²
    pub flux: f64,
    /// rad/s from the channel resonance
    pub detuning: f64,
    /// cm
    pub length: f64,
    /// cm²
    pub area: f64,
    /// g/cm³
    pub rho_h: f64,
    pub rho22_0: f64,
    pub ratio: RatioMode,
    /// cm
    pub lambda_31: f64,
    pub time_grid: TimeGrid,
    pub output: Option<PathBuf>,
}

impl ScenarioConfig {
    /// Defaults for everything except the channel.
    pub fn with_channel(channel: Channel) -> Self {
        ScenarioConfig {
            channel,
            flux: 1.0e7,
            detuning: 0.0,
            length: 10.0,
            area: 1.0,
            rho_h: 0.9e-4,
            rho22_0: 1.0e-4,
            ratio: RatioMode::PaperUnity,
            lambda_31: 122.0 * CM_PER_NM,
            time_grid: TimeGrid {
                start: 0.0,
                stop: 1.0e-6,
                steps: 101,
            },
            output: None,
        }
    }

    /// Microwave resonance ω₃₂ of the channel (rad/s).
    pub fn resonance(&self) -> Result<f64> {
        Ok(self
            .channel
            .modes()
            .microwave_pair(LineStrength::SublevelSummed)?
            .omega_nk)
    }

    /// Drive angular frequency, resonance plus detuning.
    pub fn omega_mw(&self) -> Result<f64> {
        Ok(self.resonance()? + self.detuning)
    }

    pub fn validate(&self) -> Result<()> {
        fn require(ok: bool, field: &str, constraint: &str) -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::validation(field, constraint))
            }
        }
        let finite_pos = |v: f64| v.is_finite() && v > 0.0;
        require(
            self.flux.is_finite() && self.flux >= 0.0,
            "flux",
            "must be >= 0",
        )?;
        require(self.detuning.is_finite(), "detuning", "must be finite")?;
        require(finite_pos(self.length), "L", "must be > 0")?;
        require(finite_pos(self.area), "F", "must be > 0")?;
        require(finite_pos(self.rho_h), "rho_H", "must be > 0")?;
        require(
            (0.0..=1.0).contains(&self.rho22_0),
            "rho22_0",
            "must lie in [0, 1]",
        )?;
        if let RatioMode::Custom(v) = self.ratio {
            require(v.is_finite() && v >= 0.0, "ratio", "must be >= 0")?;
        }
        require(finite_pos(self.lambda_31), "lambda_31", "must be > 0")?;
        let g = &self.time_grid;
        require(
            g.start.is_finite() && g.start >= 0.0,
            "t_start",
            "must be >= 0",
        )?;
        require(
            g.stop.is_finite() && g.stop > g.start,
            "t_stop",
            "must exceed t_start",
        )?;
        require(g.steps >= 2, "t_steps", "must be >= 2")?;
        require(
            self.omega_mw()? > 0.0,
            "detuning",
            "drive frequency (resonance + detuning) must be > 0",
        )?;
        Ok(())
    }
}

fn parse_number(key: &str, value: &str, line: usize) -> Result<f64> {
    value.parse::<f64>().map_err(|_| Error::Parse {
        line,
        message: format!("{key}: expected a number, got {value:?}"),
    })
}

/// Parses and validates a scenario document.
pub fn parse_config(text: &str) -> Result<ScenarioConfig> {
    let mut entries: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut unknown = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| Error::Parse {
            line,
            message: format!("expected `key = value`, got {content:?}"),
        })?;
        let key = key.trim();
        let value = value.trim();
        if key.is_empty() {
            return Err(Error::Parse {
                line,
                message: "empty key".into(),
            });
        }
        if !KNOWN_KEYS.contains(&key) {
            unknown.push(key.to_string());
            continue;
        }
        if entries
            .insert(key.to_string(), (line, value.to_string()))
            .is_some()
        {
            return Err(Error::Parse {
                line,
                message: format!("duplicate key {key:?}"),
            });
        }
    }
    if !unknown.is_empty() {
        return Err(Error::UnknownKeys(unknown));
    }

    let (_, channel) = entries
        .get("channel")
        .ok_or_else(|| Error::validation("channel", "is required"))?;
    let mut cfg = ScenarioConfig::with_channel(channel.parse()?);

    for (key, (line, value)) in &entries {
        let line = *line;
        match key.as_str() {
            "channel" => {}
            "flux" => {
                cfg.flux = units::flux_si_to_cgs(parse_number(key, value, line)?)
                    .map_err(|_| Error::validation("flux", "must be >= 0"))?
            }
            "detuning" => {
                cfg.detuning = units::detuning_mhz_to_angular(parse_number(key, value, line)?)
            }
            "L" => cfg.length = parse_number(key, value, line)?,
            "F" => cfg.area = parse_number(key, value, line)?,
            "rho_H" => cfg.rho_h = parse_number(key, value, line)?,
            "rho22_0" => cfg.rho22_0 = parse_number(key, value, line)?,
            "ratio" => cfg.ratio = RatioMode::parse(value, line)?,
            "lambda_31" => cfg.lambda_31 = parse_number(key, value, line)? * CM_PER_NM,
            "t_start" => cfg.time_grid.start = parse_number(key, value, line)?,
            "t_stop" => cfg.time_grid.stop = parse_number(key, value, line)?,
            "t_steps" => {
                cfg.time_grid.steps = value.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("t_steps: expected a non-negative integer, got {value:?}"),
                })?
            }
            "output" => cfg.output = Some(PathBuf::from(value)),
            _ => unreachable!("filtered against KNOWN_KEYS"),
        }
    }
    cfg.validate()?;
    Ok(cfg)
}
