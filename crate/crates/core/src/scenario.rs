//! The computations behind the CLI subcommands: the f(β) table, a driven
//! vessel's time series, and grid sweeps over one design parameter.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::config::ScenarioConfig;
use crate::coupling::{relative_decrement, MicrowaveDrive};
use crate::ensemble::{self, Depletion, EnsembleConfig};
use crate::error::{Error, Result};
use crate::hydrogen::LineStrength;
use crate::table::{fmt_depletion, fmt_num, Record, Table, NO_DEPLETION};
use crate::units::{self, CM_PER_NM};

pub const FIG1_COLUMNS: [&str; 4] = [
    "beta [1]",
    "f_exact [1]",
    "f_small_approx [1]",
    "f_large_approx [1]",
];
pub const SCENARIO_COLUMNS: [&str; 6] = [
    "t [s]",
    "beta [1]",
    "f_beta [1]",
    "I_total [erg/s]",
    "eta [1]",
    "omega_mw [rad/s]",
];
/// Column carrying channel-specific frequency metadata.
pub const FREQUENCY_COLUMN: &str = "omega_mw [rad/s]";

/// One row of the f(β) table at full precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig1Row {
    pub beta: f64,
    pub exact: f64,
    pub small: f64,
    pub large: f64,
}

/// f(β) with both approximations on `steps` evenly spaced points of
/// `[0, beta_max]`. The large-β asymptote is `inf` at β = 0.
pub fn fig1_rows(beta_max: f64, steps: usize) -> Result<Vec<Fig1Row>> {
    if !beta_max.is_finite() || beta_max <= 0.0 {
        return Err(Error::validation("beta-max", "must be finite and > 0"));
    }
    if steps < 2 {
        return Err(Error::validation("steps", "must be >= 2"));
    }
    (0..steps)
        .map(|i| {
            let beta = if i == steps - 1 {
                beta_max
            } else {
                beta_max * i as f64 / (steps - 1) as f64
            };
            Ok(Fig1Row {
                beta,
                exact: ensemble::f_beta(beta)?,
                small: ensemble::f_beta_approx_small(beta),
                large: ensemble::f_beta_approx_large(beta),
            })
        })
        .collect()
}

/// [`fig1_rows`] rendered as a CSV table.
pub fn run_fig1(beta_max: f64, steps: usize) -> Result<Table> {
    let mut table = Table::new(FIG1_COLUMNS);
    for r in fig1_rows(beta_max, steps)? {
        table.push(vec![
            fmt_num(r.beta),
            fmt_num(r.exact),
            fmt_num(r.small),
            fmt_num(r.large),
        ]);
    }
    Ok(table)
}

/// Everything a scenario needs, resolved from a validated config.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioModel {
    pub config: ScenarioConfig,
    pub ensemble: EnsembleConfig,
    pub drive: MicrowaveDrive,
    /// Microwave resonance ω₃₂ (rad/s).
    pub omega_32: f64,
    /// Optical decay rate γ₃₁ of the channel's emitter (1/s).
    pub gamma_31: f64,
    /// λ(ω)/λ(ω₃₂); exactly 1 on resonance.
    pub lambda: f64,
}

impl ScenarioModel {
    pub fn new(config: &ScenarioConfig) -> Result<Self> {
        config.validate()?;
        let modes = config.channel.modes();
        let gamma_31 = modes.optical_pair(LineStrength::SublevelSummed)?.gamma_nk;
        let omega_32 = config.resonance()?;
        let omega = config.omega_mw()?;
        let lambda = relative_decrement(omega, omega_32, gamma_31)?;
        let ratio = config.ratio.value(config.channel)?;
        let ensemble = EnsembleConfig::new(
            config.length,
            config.area,
            config.rho_h,
            config.rho22_0,
            ratio,
            config.lambda_31,
        )?;
        let drive = MicrowaveDrive::from_flux(config.flux, omega)?;
        Ok(ScenarioModel {
            config: config.clone(),
            ensemble,
            drive,
            omega_32,
            gamma_31,
            lambda,
        })
    }

    pub fn beta_at(&self, t: f64) -> Result<f64> {
        ensemble::beta_of(
            &self.drive,
            self.ensemble.ratio(),
            self.ensemble.lambda_31(),
            self.lambda,
            t,
        )
    }

    /// Conversion efficiency Ī_Σ/(F S_mw) after driving for `t`; zero when
    /// there is no incident power.
    pub fn eta_at(&self, t: f64) -> Result<f64> {
        if self.drive.flux() == 0.0 {
            return Ok(0.0);
        }
        Ok(
            ensemble::sigma_total(&self.ensemble, self.lambda, self.beta_at(t)?)?
                / self.ensemble.area(),
        )
    }

    /// η at t = 0, where the emission peaks.
    pub fn eta_peak(&self) -> Result<f64> {
        self.eta_at(0.0)
    }

    pub fn tau(&self) -> Result<Depletion> {
        ensemble::depletion_time(
            &self.drive,
            self.ensemble.ratio(),
            self.ensemble.lambda_31(),
            self.lambda,
        )
    }

    /// Optical energy radiated over the configured time window (erg).
    pub fn pulse_energy(&self) -> Result<f64> {
        let g = &self.config.time_grid;
        ensemble::emitted_energy(&self.ensemble, &self.drive, self.lambda, g.start, g.stop)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioOutput {
    pub table: Table,
    pub summary: Record,
}

/// Time series over the config's grid plus a summary record.
pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioOutput> {
    let model = ScenarioModel::new(config)?;
    let ens = &model.ensemble;
    let flux = model.drive.flux();
    let mut table = Table::new(SCENARIO_COLUMNS);
    for t in config.time_grid.points() {
        let beta = model.beta_at(t)?;
        let sigma = ensemble::sigma_total(ens, model.lambda, beta)?;
        table.push(vec![
            fmt_num(t),
            fmt_num(beta),
            fmt_num(ensemble::f_beta(beta)?),
            fmt_num(sigma * flux),
            fmt_num(model.eta_at(t)?),
            fmt_num(model.drive.omega()),
        ]);
    }

    let mut summary = Record::default();
    summary.push("channel", config.channel.name());
    summary.push("omega_mw_rad_s", fmt_num(model.drive.omega()));
    summary.push("omega_32_rad_s", fmt_num(model.omega_32));
    summary.push("gamma_31_per_s", fmt_num(model.gamma_31));
    summary.push("lambda_decrement", fmt_num(model.lambda));
    summary.push("ratio", fmt_num(ens.ratio()));
    summary.push("flux_erg_s_cm2", fmt_num(flux));
    summary.push("N", fmt_num(ens.n_atoms()));
    summary.push("N31", fmt_num(ens.n31()));
    summary.push("eta_prefactor", fmt_num(ens.eta_prefactor()));
    summary.push("eta_per_f", fmt_num(ens.eta_prefactor() * ens.rho22_0()));
    summary.push(
        "sigma_max_cm2",
        fmt_num(ensemble::sigma_total(ens, model.lambda, 0.0)?),
    );
    summary.push("eta_peak", fmt_num(model.eta_peak()?));
    summary.push("tau_s", fmt_depletion(model.tau()?));
    summary.push("pulse_energy_erg", fmt_num(model.pulse_energy()?));
    Ok(ScenarioOutput { table, summary })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    /// W/cm²
    Flux,
    Rho22_0,
    /// cm
    Length,
    /// g/cm³
    RhoH,
    /// MHz
    Detuning,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::Flux => "flux",
            SweepParam::Rho22_0 => "rho22_0",
            SweepParam::Length => "L",
            SweepParam::RhoH => "rho_H",
            SweepParam::Detuning => "detuning",
        }
    }

    pub fn unit(self) -> &'static str {
        match self {
            SweepParam::Flux => "W/cm2",
            SweepParam::Rho22_0 => "1",
            SweepParam::Length => "cm",
            SweepParam::RhoH => "g/cm3",
            SweepParam::Detuning => "MHz",
        }
    }

    /// Copy of `config` with this parameter set to `value` (user units).
    pub fn apply(self, config: &ScenarioConfig, value: f64) -> Result<ScenarioConfig> {
        let mut cfg = config.clone();
        match self {
            SweepParam::Flux => {
                cfg.flux = units::flux_si_to_cgs(value)
                    .map_err(|_| Error::validation("flux", "must be >= 0"))?
            }
            SweepParam::Rho22_0 => cfg.rho22_0 = value,
            SweepParam::Length => cfg.length = value,
            SweepParam::RhoH => cfg.rho_h = value,
            SweepParam::Detuning => cfg.detuning = units::detuning_mhz_to_angular(value),
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "flux" => Ok(SweepParam::Flux),
            "rho22_0" => Ok(SweepParam::Rho22_0),
            "L" => Ok(SweepParam::Length),
            "rho_H" => Ok(SweepParam::RhoH),
            "detuning" => Ok(SweepParam::Detuning),
            other => Err(Error::validation(
                "param",
                format!("unknown sweep parameter {other:?}; expected flux, rho22_0, L, rho_H or detuning"),
            )),
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    EtaMaxPeak,
    PulseEnergy,
    Tau,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::EtaMaxPeak => "eta_max_peak",
            Objective::PulseEnergy => "pulse_energy",
            Objective::Tau => "tau",
        }
    }

    pub fn unit(self) -> &'static str {
        match self {
            Objective::EtaMaxPeak => "1",
            Objective::PulseEnergy => "erg",
            Objective::Tau => "s",
        }
    }

    pub fn evaluate(self, model: &ScenarioModel) -> Result<ObjectiveValue> {
        Ok(match self {
            Objective::EtaMaxPeak => ObjectiveValue::Finite(model.eta_peak()?),
            Objective::PulseEnergy => ObjectiveValue::Finite(model.pulse_energy()?),
            Objective::Tau => match model.tau()? {
                Depletion::After(t) => ObjectiveValue::Finite(t),
                Depletion::Never => ObjectiveValue::NoDepletion,
            },
        })
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eta_max_peak" => Ok(Objective::EtaMaxPeak),
            "pulse_energy" => Ok(Objective::PulseEnergy),
            "tau" => Ok(Objective::Tau),
            other => Err(Error::validation(
                "objective",
                format!("unknown objective {other:?}; expected eta_max_peak, pulse_energy or tau"),
            )),
        }
    }
}

/// An objective value; `NoDepletion` (unbounded τ) outranks every number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ObjectiveValue {
    Finite(f64),
    NoDepletion,
}

impl ObjectiveValue {
    pub fn finite(&self) -> Option<f64> {
        match *self {
            ObjectiveValue::Finite(v) => Some(v),
            ObjectiveValue::NoDepletion => None,
        }
    }

    fn exceeds(&self, other: &ObjectiveValue) -> bool {
        match (self, other) {
            (ObjectiveValue::Finite(a), ObjectiveValue::Finite(b)) => a > b,
            (ObjectiveValue::NoDepletion, ObjectiveValue::Finite(_)) => true,
            _ => false,
        }
    }

    pub fn render(&self) -> String {
        match *self {
            ObjectiveValue::Finite(v) => fmt_num(v),
            ObjectiveValue::NoDepletion => NO_DEPLETION.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub param: SweepParam,
    pub min: f64,
    pub max: f64,
    pub steps: usize,
    pub log: bool,
    pub objective: Objective,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite()) || self.min >= self.max {
            return Err(Error::validation("min/max", "need finite min < max"));
        }
        if self.steps < 2 {
            return Err(Error::validation("steps", "must be >= 2"));
        }
        if self.log && self.min <= 0.0 {
            return Err(Error::validation("min", "logarithmic grid needs min > 0"));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i == last {
                    return self.max;
                }
                let frac = i as f64 / last as f64;
                if self.log {
                    (self.min.ln() + frac * (self.max.ln() - self.min.ln())).exp()
                } else {
                    self.min + frac * (self.max - self.min)
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub points: Vec<(f64, ObjectiveValue)>,
    /// Index of the first maximal point in grid order.
    pub argmax: usize,
}

impl SweepResult {
    pub fn table(&self) -> Table {
        let mut table = Table::new([
            format!("{} [{}]", self.spec.param.name(), self.spec.param.unit()),
            format!(
                "{} [{}]",
                self.spec.objective.name(),
                self.spec.objective.unit()
            ),
        ]);
        for (x, y) in &self.points {
            table.push(vec![fmt_num(*x), y.render()]);
        }
        table
    }

    pub fn argmax_record(&self) -> Record {
        let (x, y) = self.points[self.argmax];
        let mut r = Record::default();
        r.push("param", self.spec.param.name());
        r.push("objective", self.spec.objective.name());
        r.push("argmax_index", self.argmax.to_string());
        r.push("argmax_value", fmt_num(x));
        r.push("argmax_objective", y.render());
        r
    }
}

/// Exhaustive grid search. Points are evaluated in parallel and merged in
/// grid order, so the result does not depend on scheduling.
pub fn run_sweep(config: &ScenarioConfig, spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let grid = spec.grid();
    let points = grid
        .par_iter()
        .map(|&x| {
            let cfg = spec.param.apply(config, x)?;
            let model = ScenarioModel::new(&cfg)?;
            Ok((x, spec.objective.evaluate(&model)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let argmax = points.iter().enumerate().fold(0, |best, (i, p)| {
        if p.1.exceeds(&points[best].1) {
            i
        } else {
            best
        }
    });
    Ok(SweepResult {
        spec: *spec,
        points,
        argmax,
    })
}

/// Key/value dump of the constants.
pub fn constants_record() -> Record {
    let k = crate::units::CGS;
    let mut r = Record::default();
    r.push("hbar_erg_s", fmt_num(k.hbar));
    r.push("c_cm_s", fmt_num(k.c));
    r.push("e_statC", fmt_num(k.e));
    r.push("a0_cm", fmt_num(k.a0));
    r.push("mu_H_g", fmt_num(k.mu_h));
    r.push("alpha", fmt_num(k.alpha()));
    r
}

/// Key/value description of a channel's optical and microwave transitions.
pub fn transition_record(channel: crate::hydrogen::Channel) -> Result<Record> {
    let modes = channel.modes();
    let summed = modes.optical_pair(LineStrength::SublevelSummed)?;
    let z = modes.optical_pair(LineStrength::ZComponent)?;
    let mw = modes.microwave_pair(LineStrength::ZComponent)?;
    let ea0 = crate::units::CGS.dipole_unit();
    let mut r = Record::default();
    r.push("channel", channel.name());
    r.push("mode1", modes.mode1.label.to_string());
    r.push("mode2", modes.mode2.label.to_string());
    r.push("mode3", modes.mode3.label.to_string());
    r.push(
        "microwave",
        format!("{} - {}", mw.upper.label, mw.lower.label),
    );
    r.push("omega_32_rad_s", fmt_num(mw.omega_nk));
    r.push(
        "f_32_MHz",
        fmt_num(mw.omega_nk / (2.0 * std::f64::consts::PI * 1e6)),
    );
    r.push("d_32_ea0", fmt_num(mw.d_nk / ea0));
    r.push(
        "optical",
        format!("{} - {}", summed.upper.label, summed.lower.label),
    );
    r.push("omega_31_rad_s", fmt_num(summed.omega_nk));
    r.push("lambda_31_nm", fmt_num(summed.wavelength()? / CM_PER_NM));
    r.push("d_31_z_ea0", fmt_num(z.d_nk / ea0));
    r.push("d_31_summed_ea0", fmt_num(summed.d_nk / ea0));
    r.push("gamma_31_per_s", fmt_num(summed.gamma_nk));
    r.push(
        "lifetime_31_s",
        summed
            .lifetime()
            .map(fmt_num)
            .unwrap_or_else(|| "inf".into()),
    );
    r.push("gamma_31_z_per_s", fmt_num(z.gamma_nk));
    r.push("ratio_hydrogenic", fmt_num(modes.hydrogenic_ratio()?));
    Ok(r)
}
