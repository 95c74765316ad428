//! Grid evaluation. Points are computed in parallel and collected in grid
//! order, outer axis major, so output never depends on scheduling.

use rayon::prelude::*;
use squeezelab::oracle::{total_photon_numeric, QuadratureScheme};
use squeezelab::{
    envelope, mandel_q, mean_photons_windowed, photon_spectrum, quad_spectrum, total_photon_input,
    total_photon_ratio, BeamSplitter, InterferencePoint, MandelTerms, MeasurementWindow, Output,
    SpmPoint,
};

use crate::config::{BaseParams, ConfigError, GridAxis, Quantity, ScenarioConfig};

pub const THREADS_ENV: &str = "SQUEEZELAB_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("evaluation failed at {location}: {source}")]
    Point {
        location: String,
        source: squeezelab::Error,
    },
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Result of a sweep: one row per grid point, axis columns then the quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// Worker count from `SQUEEZELAB_THREADS`; `0` or unset means automatic.
pub fn thread_count() -> Result<usize, ConfigError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            ConfigError::field(
                THREADS_ENV,
                format!("expected a non-negative integer, got `{v}`"),
            )
        }),
        Err(_) => Ok(0),
    }
}

/// Evaluates one configured quantity at arbitrary parameter points.
pub struct Evaluator<'a> {
    config: &'a ScenarioConfig,
    quantity: Quantity,
    port: Output,
    scheme: QuadratureScheme,
    total_photons: f64,
}

impl<'a> Evaluator<'a> {
    pub fn new(config: &'a ScenarioConfig) -> Result<Self, ConfigError> {
        Ok(Self {
            config,
            quantity: config.quantity(),
            port: config.output()?,
            scheme: QuadratureScheme::default(),
            total_photons: total_photon_input(&config.pulse),
        })
    }

    pub fn label(&self) -> String {
        self.quantity.label(self.port)
    }

    pub fn eval(&self, p: &BaseParams) -> squeezelab::Result<f64> {
        let pulse = &self.config.pulse;
        let bs = BeamSplitter::new(p.reflectance)?;
        let psi = p.psi0 * envelope(p.t, pulse) / envelope(0.0, pulse);
        if let Some(selector) = self.quantity.selector() {
            let point = SpmPoint::new(psi, self.config.phase_mode);
            return Ok(quad_spectrum(selector, p.omega, &point, Some(&bs))?.value);
        }
        let point = InterferencePoint {
            psi,
            delta_phi: p.delta_phi,
            mean_rate: pulse.mean_rate(p.t),
            total_photons: self.total_photons,
        };
        let window = MeasurementWindow::from_ratio(p.t_over_taup, pulse)?;
        Ok(match self.quantity {
            Quantity::MandelQ => {
                mandel_q(self.port, p.omega, &point, &window, &bs, MandelTerms::Full)?.q
            }
            Quantity::PhotonSpectrum => photon_spectrum(self.port, p.omega, &point, &window, &bs)?,
            Quantity::MeanPhotons => mean_photons_windowed(self.port, &point, &window, &bs),
            Quantity::PhotonSum => Output::BOTH
                .iter()
                .map(|&port| mean_photons_windowed(port, &point, &window, &bs))
                .sum(),
            Quantity::TotalPhoton => total_photon_ratio(self.port, p.psi0, p.delta_phi, &bs),
            Quantity::TotalPhotonNumeric => {
                let ratio = total_photon_numeric(p.psi0, p.delta_phi, &bs, pulse, &self.scheme)?;
                match self.port {
                    Output::One => ratio,
                    Output::Two => 2.0 - ratio,
                }
            }
            _ => unreachable!("quadrature quantities handled above"),
        })
    }
}

fn grid_points(grids: &[GridAxis]) -> Vec<Vec<f64>> {
    let mut points = vec![Vec::new()];
    for axis in grids {
        points = points
            .into_iter()
            .flat_map(|prefix| {
                (0..axis.count).map(move |i| {
                    let mut p = prefix.clone();
                    p.push(axis.value(i));
                    p
                })
            })
            .collect();
    }
    points
}

/// Evaluates the configured quantity over the configured grid.
pub fn run_sweep(config: &ScenarioConfig) -> Result<SweepTable, SweepError> {
    config.validate()?;
    let evaluator = Evaluator::new(config)?;
    let base = config.base_params();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()?;
    let points = grid_points(&config.grids);
    let values: Vec<Result<f64, SweepError>> = pool.install(|| {
        points
            .par_iter()
            .map(|coords| {
                let mut p = base;
                for (axis, &v) in config.grids.iter().zip(coords) {
                    p.set(axis.name, v);
                }
                evaluator.eval(&p).map_err(|source| SweepError::Point {
                    location: config
                        .grids
                        .iter()
                        .zip(coords)
                        .map(|(a, v)| format!("{}={v}", a.name))
                        .collect::<Vec<_>>()
                        .join(", "),
                    source,
                })
            })
            .collect()
    });
    let mut rows = Vec::with_capacity(points.len());
    for (mut coords, value) in points.into_iter().zip(values) {
        coords.push(value?);
        rows.push(coords);
    }
    let mut columns: Vec<String> = config.grids.iter().map(|g| g.name.to_string()).collect();
    columns.push(evaluator.label());
    Ok(SweepTable { columns, rows })
}
