//! Scenario configuration: a JSON document, optionally overridden by flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use squeezelab::{
    peak_nonlinear_phase, Axis, BeamSplitter, MediumParams, Output, PhaseMode, Port, PulseState,
    QuadratureSelector,
};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid config JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Model(#[from] squeezelab::Error),
}

impl ConfigError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    #[default]
    Spectrum,
    Mandel,
    PhotonNumber,
    Figure,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AxisName {
    #[serde(rename = "psi0")]
    Psi0,
    #[serde(rename = "omega")]
    Omega,
    #[serde(rename = "delta_phi")]
    DeltaPhi,
    #[serde(rename = "R")]
    Reflectance,
    #[serde(rename = "t")]
    Time,
    #[serde(rename = "T_over_taup")]
    WindowRatio,
}

impl AxisName {
    pub const ALL: [AxisName; 6] = [
        Self::Psi0,
        Self::Omega,
        Self::DeltaPhi,
        Self::Reflectance,
        Self::Time,
        Self::WindowRatio,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Psi0 => "psi0",
            Self::Omega => "omega",
            Self::DeltaPhi => "delta_phi",
            Self::Reflectance => "R",
            Self::Time => "t",
            Self::WindowRatio => "T_over_taup",
        }
    }
}

impl FromStr for AxisName {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| ConfigError::field("grids.name", format!("unknown axis `{s}`")))
    }
}

impl fmt::Display for AxisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    SX,
    SY,
    SX1,
    SY1,
    SX2,
    SY2,
    MandelQ,
    PhotonSpectrum,
    MeanPhotons,
    PhotonSum,
    TotalPhoton,
    TotalPhotonNumeric,
}

impl Quantity {
    pub const ALL: [Quantity; 12] = [
        Self::SX,
        Self::SY,
        Self::SX1,
        Self::SY1,
        Self::SX2,
        Self::SY2,
        Self::MandelQ,
        Self::PhotonSpectrum,
        Self::MeanPhotons,
        Self::PhotonSum,
        Self::TotalPhoton,
        Self::TotalPhotonNumeric,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::SX => "s_x",
            Self::SY => "s_y",
            Self::SX1 => "s_x1",
            Self::SY1 => "s_y1",
            Self::SX2 => "s_x2",
            Self::SY2 => "s_y2",
            Self::MandelQ => "mandel_q",
            Self::PhotonSpectrum => "photon_spectrum",
            Self::MeanPhotons => "mean_photons",
            Self::PhotonSum => "photon_sum",
            Self::TotalPhoton => "total_photon",
            Self::TotalPhotonNumeric => "total_photon_numeric",
        }
    }

    pub fn selector(&self) -> Option<QuadratureSelector> {
        let (axis, port) = match self {
            Self::SX => (Axis::X, Port::Input),
            Self::SY => (Axis::Y, Port::Input),
            Self::SX1 => (Axis::X, Port::Out1),
            Self::SY1 => (Axis::Y, Port::Out1),
            Self::SX2 => (Axis::X, Port::Out2),
            Self::SY2 => (Axis::Y, Port::Out2),
            _ => return None,
        };
        Some(QuadratureSelector::new(axis, port))
    }

    /// Whether the column label carries the output index, e.g. `mandel_q1`.
    pub fn is_per_port(&self) -> bool {
        matches!(
            self,
            Self::MandelQ
                | Self::PhotonSpectrum
                | Self::MeanPhotons
                | Self::TotalPhoton
                | Self::TotalPhotonNumeric
        )
    }

    /// Column label written to the CSV header.
    pub fn label(&self, port: Output) -> String {
        if self.is_per_port() {
            format!("{}{}", self.as_str(), port.index())
        } else {
            self.as_str().to_owned()
        }
    }

    fn default_for(command: Command) -> Self {
        match command {
            Command::Mandel => Self::MandelQ,
            Command::PhotonNumber => Self::TotalPhoton,
            _ => Self::SX,
        }
    }

    fn allowed_in(&self, command: Command) -> bool {
        match command {
            Command::Spectrum => self.selector().is_some() || *self == Self::PhotonSpectrum,
            Command::Mandel => *self == Self::MandelQ,
            Command::PhotonNumber => matches!(
                self,
                Self::MeanPhotons | Self::PhotonSum | Self::TotalPhoton | Self::TotalPhotonNumeric
            ),
            Command::Figure | Command::Verify => true,
        }
    }
}

impl FromStr for Quantity {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|q| q.as_str() == s)
            .ok_or_else(|| ConfigError::field("quantity", format!("unknown quantity `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridAxis {
    pub name: AxisName,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn new(name: AxisName, start: f64, stop: f64, count: usize) -> Self {
        Self {
            name,
            start,
            stop,
            count,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let field = format!("grids.{}", self.name);
        if self.count < 2 {
            return Err(ConfigError::field(
                field,
                format!("count must be at least 2, got {}", self.count),
            ));
        }
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return Err(ConfigError::field(
                field,
                format!("need finite start < stop, got {}:{}", self.start, self.stop),
            ));
        }
        Ok(())
    }

    /// `i`-th node; the last node is exactly `stop`.
    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            self.stop
        } else {
            self.start + (self.stop - self.start) * i as f64 / (self.count - 1) as f64
        }
    }
}

impl FromStr for GridAxis {
    type Err = ConfigError;

    /// `name=start:stop:count`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad =
            || ConfigError::field("grid", format!("expected name=start:stop:count, got `{s}`"));
        let (name, range) = s.split_once('=').ok_or_else(bad)?;
        let parts: Vec<&str> = range.split(':').collect();
        let [start, stop, count] = parts.as_slice() else {
            return Err(bad());
        };
        Ok(Self {
            name: name.trim().parse()?,
            start: start.trim().parse().map_err(|_| bad())?,
            stop: stop.trim().parse().map_err(|_| bad())?,
            count: count.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl FigureId {
    pub const ALL: [FigureId; 4] = [Self::Fig1, Self::Fig2, Self::Fig3, Self::Fig4];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Fig1 => "fig1",
            Self::Fig2 => "fig2",
            Self::Fig3 => "fig3",
            Self::Fig4 => "fig4",
        }
    }
}

impl FromStr for FigureId {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| ConfigError::field("figure", format!("unknown figure `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowConfig {
    /// `𝒯/τ_p`.
    pub t_over_taup: f64,
}

impl Default for WindowConfig {
    fn default() -> Self {
        Self { t_over_taup: 0.1 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    pub command: Command,
    pub medium: MediumParams,
    pub pulse: PulseState,
    pub splitter: BeamSplitter,
    pub window: WindowConfig,
    pub phase_mode: PhaseMode,
    pub grids: Vec<GridAxis>,
    pub output_path: Option<PathBuf>,
    pub quantity: Option<Quantity>,
    /// Output port 1 or 2 for per-port quantities.
    pub port: u8,
    pub figure: Option<FigureId>,
    /// Peak nonlinear phase. When absent it follows from `medium` and `pulse`.
    pub psi0: Option<f64>,
    pub omega: f64,
    /// `φ₁ − φ₂`. When absent it follows from `pulse`.
    pub delta_phi: Option<f64>,
    pub t: f64,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            command: Command::default(),
            medium: MediumParams::default(),
            pulse: PulseState::default(),
            splitter: BeamSplitter::balanced(),
            window: WindowConfig::default(),
            phase_mode: PhaseMode::default(),
            grids: Vec::new(),
            output_path: None,
            quantity: None,
            port: 1,
            figure: None,
            psi0: None,
            omega: 0.0,
            delta_phi: None,
            t: 0.0,
        }
    }
}

/// Fixed parameters of one grid point before axes are applied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseParams {
    pub psi0: f64,
    pub omega: f64,
    pub delta_phi: f64,
    pub reflectance: f64,
    pub t: f64,
    pub t_over_taup: f64,
}

impl BaseParams {
    pub fn set(&mut self, axis: AxisName, value: f64) {
        match axis {
            AxisName::Psi0 => self.psi0 = value,
            AxisName::Omega => self.omega = value,
            AxisName::DeltaPhi => self.delta_phi = value,
            AxisName::Reflectance => self.reflectance = value,
            AxisName::Time => self.t = value,
            AxisName::WindowRatio => self.t_over_taup = value,
        }
    }
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_owned(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn quantity(&self) -> Quantity {
        self.quantity
            .unwrap_or_else(|| Quantity::default_for(self.command))
    }

    pub fn output(&self) -> Result<Output, ConfigError> {
        Output::try_from(self.port)
            .map_err(|p| ConfigError::field("port", format!("must be 1 or 2, got {p}")))
    }

    pub fn base_params(&self) -> BaseParams {
        BaseParams {
            psi0: self
                .psi0
                .unwrap_or_else(|| peak_nonlinear_phase(&self.medium, &self.pulse)),
            omega: self.omega,
            delta_phi: self.delta_phi.unwrap_or_else(|| self.pulse.delta_phi()),
            reflectance: self.splitter.reflectance(),
            t: self.t,
            t_over_taup: self.window.t_over_taup,
        }
    }

    /// Checks everything a sweep needs; figure and verify runs are checked
    /// by their own drivers.
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.medium.validate()?;
        self.pulse.validate()?;
        self.splitter.validate()?;
        self.output()?;
        let quantity = self.quantity();
        if !quantity.allowed_in(self.command) {
            return Err(ConfigError::field(
                "quantity",
                format!("`{}` is not available for this command", quantity.as_str()),
            ));
        }
        if self.command == Command::Figure && self.figure.is_none() {
            return Err(ConfigError::field(
                "figure",
                "required for the figure command",
            ));
        }
        if matches!(self.command, Command::Verify) {
            return Ok(());
        }
        if self.grids.is_empty() || self.grids.len() > 2 {
            return Err(ConfigError::field(
                "grids",
                format!("need one or two axes, got {}", self.grids.len()),
            ));
        }
        for grid in &self.grids {
            grid.validate()?;
        }
        if self.grids.len() == 2 && self.grids[0].name == self.grids[1].name {
            return Err(ConfigError::field(
                "grids",
                format!("axis `{}` listed twice", self.grids[0].name),
            ));
        }
        let base = self.base_params();
        for (field, value) in [
            ("psi0", base.psi0),
            ("omega", base.omega),
            ("delta_phi", base.delta_phi),
            ("t", base.t),
        ] {
            if !value.is_finite() {
                return Err(ConfigError::field(
                    field,
                    format!("must be finite, got {value}"),
                ));
            }
        }
        if !(base.t_over_taup > 0.0 && base.t_over_taup.is_finite()) {
            return Err(ConfigError::field(
                "window.t_over_taup",
                "must be finite and positive",
            ));
        }
        for grid in &self.grids {
            if grid.name == AxisName::Reflectance && (grid.start < 0.0 || grid.stop > 1.0) {
                return Err(ConfigError::field("grids.R", "must lie within [0, 1]"));
            }
            if grid.name == AxisName::WindowRatio && grid.start <= 0.0 {
                return Err(ConfigError::field("grids.T_over_taup", "must be positive"));
            }
        }
        Ok(())
    }
}

/// Command-line values that take precedence over the config file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub psi0: Option<f64>,
    pub omega0: Option<f64>,
    pub phi1: Option<f64>,
    pub delta_phi: Option<f64>,
    pub reflectance: Option<f64>,
    pub t_over_taup: Option<f64>,
    pub t: Option<f64>,
    pub omega: Option<f64>,
    pub quantity: Option<Quantity>,
    pub port: Option<u8>,
    /// Replaces the axis of the same name, otherwise appended.
    pub grids: Vec<GridAxis>,
    pub output: Option<PathBuf>,
}

impl Overrides {
    pub fn apply(&self, cfg: &mut ScenarioConfig) -> Result<(), ConfigError> {
        if self.omega0.is_some() && self.phi1.is_some() {
            return Err(ConfigError::field(
                "phase_mode",
                "--omega0 and --phi1 are mutually exclusive",
            ));
        }
        if let Some(v) = self.psi0 {
            cfg.psi0 = Some(v);
        }
        if let Some(v) = self.omega0 {
            cfg.phase_mode = PhaseMode::OptimalAt(v);
        }
        if let Some(v) = self.phi1 {
            cfg.phase_mode = PhaseMode::Explicit(v);
        }
        if let Some(v) = self.delta_phi {
            cfg.delta_phi = Some(v);
        }
        if let Some(v) = self.reflectance {
            cfg.splitter = BeamSplitter::new(v)?;
        }
        if let Some(v) = self.t_over_taup {
            cfg.window.t_over_taup = v;
        }
        if let Some(v) = self.t {
            cfg.t = v;
        }
        if let Some(v) = self.omega {
            cfg.omega = v;
        }
        if let Some(q) = self.quantity {
            cfg.quantity = Some(q);
        }
        if let Some(p) = self.port {
            cfg.port = p;
        }
        for grid in &self.grids {
            match cfg.grids.iter_mut().find(|g| g.name == grid.name) {
                Some(existing) => *existing = *grid,
                None => cfg.grids.push(*grid),
            }
        }
        if let Some(path) = &self.output {
            cfg.output_path = Some(path.clone());
        }
        Ok(())
    }
}
