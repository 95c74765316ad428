//! Shared inputs for the benchmarks.

use squeezelab::{BeamSplitter, InterferencePoint, MeasurementWindow, PulseState, SpmPoint};

/// `n` evenly spaced points on `[start, stop]`.
pub fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| start + (stop - start) * i as f64 / (n - 1).max(1) as f64)
        .collect()
}

pub fn spm_point() -> SpmPoint {
    SpmPoint::with_total_phase(2.0, 0.7)
}

pub fn interference_point() -> InterferencePoint {
    let pulse = PulseState::default();
    InterferencePoint {
        psi: 3.5,
        delta_phi: std::f64::consts::FRAC_PI_2,
        mean_rate: pulse.mean_rate(0.0),
        total_photons: squeezelab::total_photon_input(&pulse),
    }
}

pub fn window() -> MeasurementWindow {
    MeasurementWindow::from_ratio(0.1, &PulseState::default()).expect("valid window")
}

pub fn splitter() -> BeamSplitter {
    BeamSplitter::new(0.3).expect("valid reflectance")
}
