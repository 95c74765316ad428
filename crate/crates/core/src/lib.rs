//! Quantum noise of ultrashort pulses under self-phase modulation in a
//! medium with a finite (Debye) nonlinear response time.
//!
//! * [`pulse`]: medium and pulse parameters, the nonlinear phase, kernels.
//! * [`quadrature`]: quadrature correlations and spectra at the input and
//!   at both beam-splitter outputs.
//! * [`photon`]: photon-number correlations, Mandel `Q` and pulse totals
//!   after self-interference.
//! * [`oracle`]: numerical Fourier transforms of the correlation functions,
//!   used to cross-check every closed form.

pub mod error;
pub mod oracle;
pub mod photon;
pub mod pulse;
pub mod quadrature;

pub use error::{Error, Result};
pub use photon::{
    mandel_q, mean_photons_windowed, photon_correlation, photon_spectrum, total_photon_input,
    total_photon_out1, total_photon_out2, total_photon_ratio, InterferencePoint, MandelPoint,
    MandelTerms, MeasurementWindow, Output, Regime,
};
pub use pulse::{
    damping_mu, envelope, kernel_g, kernel_h, lorentzian, nonlinear_phase, optimal_phase,
    peak_nonlinear_phase, BeamSplitter, Envelope, MediumParams, PhaseMode, PulseState,
    RegimeWarning,
};
pub use quadrature::{
    mean_quadratures, quad_correlation, quad_spectrum, Axis, Correlation, NoiseSpectrumPoint, Port,
    QuadratureSelector, SpmPoint, VACUUM_LEVEL,
};
