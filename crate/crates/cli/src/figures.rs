//! Pinned grids for the four published figures.

use std::f64::consts::FRAC_PI_2;

use squeezelab::{BeamSplitter, PhaseMode};

use crate::config::{AxisName, Command, FigureId, GridAxis, Overrides, Quantity, ScenarioConfig};
use crate::sweep::{run_sweep, SweepError, SweepTable};

/// Default scenario for a figure before any overrides.
pub fn figure_config(id: FigureId) -> ScenarioConfig {
    let surface = |psi_stop: f64, psi_count: usize| {
        vec![
            GridAxis::new(AxisName::Psi0, 0.0, psi_stop, psi_count),
            GridAxis::new(AxisName::Omega, 0.0, 3.0, 61),
        ]
    };
    let base = ScenarioConfig {
        command: Command::Figure,
        figure: Some(id),
        phase_mode: PhaseMode::OptimalAt(0.0),
        splitter: BeamSplitter::balanced(),
        psi0: Some(0.0),
        t: 0.0,
        ..Default::default()
    };
    match id {
        FigureId::Fig1 => ScenarioConfig {
            quantity: Some(Quantity::SX),
            grids: surface(10.0, 101),
            ..base
        },
        FigureId::Fig2 => ScenarioConfig {
            quantity: Some(Quantity::SY1),
            grids: surface(10.0, 101),
            ..base
        },
        FigureId::Fig3 => {
            let mut cfg = ScenarioConfig {
                quantity: Some(Quantity::MandelQ),
                port: 1,
                delta_phi: Some(FRAC_PI_2),
                grids: surface(6.0, 121),
                ..base
            };
            cfg.window.t_over_taup = 0.1;
            cfg
        }
        FigureId::Fig4 => ScenarioConfig {
            quantity: Some(Quantity::TotalPhoton),
            port: 1,
            delta_phi: Some(0.0),
            grids: vec![GridAxis::new(AxisName::Psi0, 0.0, 30.0, 301)],
            ..base
        },
    }
}

pub fn run_figure(
    id: FigureId,
    overrides: &Overrides,
) -> Result<(ScenarioConfig, SweepTable), SweepError> {
    let mut cfg = figure_config(id);
    overrides.apply(&mut cfg)?;
    let table = run_sweep(&cfg)?;
    Ok((cfg, table))
}
