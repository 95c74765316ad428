//! Photon-number statistics at the two splitter outputs: correlation
//! functions, windowed spectra, the frequency-resolved Mandel parameter,
//! windowed means and the total photon number.
//!
//! Both inputs carry the same mean rate `n̄₀(t)`. The interference phase is
//! `Φ̃ = ψ + Δφ`.
//!
//! The windowed spectrum is `N̄ + (𝒯/τ_p) ∫ smooth(τ) e^{iωτ} dτ`, the Fourier
//! transform of the correlation below. At `R = T = ½` it reduces term for
//! term to the balanced-splitter expressions; other reflectances follow from
//! the same transform.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pulse::{
    envelope, kernel_g, kernel_h, lorentzian, nonlinear_phase, BeamSplitter, Envelope,
    MediumParams, PulseState, RegimeWarning,
};
use crate::quadrature::Correlation;

/// `|Q|` at or below this is reported as Poissonian.
pub const POISSON_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Output {
    One,
    Two,
}

impl Output {
    pub const BOTH: [Output; 2] = [Output::One, Output::Two];

    pub fn index(self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
        }
    }

    /// `−1` for output 1, `+1` for output 2.
    fn sign(self) -> f64 {
        match self {
            Self::One => -1.0,
            Self::Two => 1.0,
        }
    }

    /// Weight of the `cos Φ̃` cross term: `R` for output 1, `T` for output 2.
    fn cross_weight(self, splitter: &BeamSplitter) -> f64 {
        match self {
            Self::One => splitter.reflectance(),
            Self::Two => splitter.transmittance(),
        }
    }
}

impl TryFrom<u8> for Output {
    type Error = u8;

    fn try_from(value: u8) -> std::result::Result<Self, u8> {
        match value {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            other => Err(other),
        }
    }
}

/// Photon-counting window `𝒯`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementWindow {
    pub t_meas: f64,
    /// `𝒯/τ_p`.
    pub ratio: f64,
}

impl MeasurementWindow {
    pub fn new(t_meas: f64, pulse: &PulseState) -> Result<Self> {
        if !(t_meas.is_finite() && t_meas > 0.0) {
            return Err(Error::InvalidParameter {
                name: "t_meas",
                value: t_meas,
                reason: "must be finite and positive",
            });
        }
        Ok(Self {
            t_meas,
            ratio: t_meas / pulse.tau_p,
        })
    }

    pub fn from_ratio(ratio: f64, pulse: &PulseState) -> Result<Self> {
        Self::new(ratio * pulse.tau_p, pulse)
    }

    pub fn warning(&self) -> Option<RegimeWarning> {
        (self.ratio > 1.0).then_some(RegimeWarning::LongWindow { ratio: self.ratio })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Sub,
    Poisson,
    Super,
}

impl Regime {
    pub fn classify(q: f64) -> Self {
        if q.abs() <= POISSON_THRESHOLD {
            Self::Poisson
        } else if q < 0.0 {
            Self::Sub
        } else {
            Self::Super
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MandelPoint {
    pub omega: f64,
    pub q: f64,
    pub regime: Regime,
}

/// Which bracket terms enter the Mandel parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MandelTerms {
    #[default]
    Full,
    /// Cross term only, as for monochromatic light where the inter-mode
    /// correlation terms are absent.
    Monochromatic,
}

/// Interference state at one instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterferencePoint {
    pub psi: f64,
    pub delta_phi: f64,
    /// `n̄₀(t)`, photons per unit time.
    pub mean_rate: f64,
    /// `N̄`, photons in the whole input pulse.
    pub total_photons: f64,
}

impl InterferencePoint {
    pub fn at_time(t: f64, medium: &MediumParams, pulse: &PulseState) -> Self {
        Self {
            psi: nonlinear_phase(t, medium, pulse),
            delta_phi: pulse.delta_phi(),
            mean_rate: pulse.mean_rate(t),
            total_photons: total_photon_input(pulse),
        }
    }

    /// `Φ̃ = ψ + Δφ`.
    pub fn interference_phase(&self) -> f64 {
        self.psi + self.delta_phi
    }
}

/// Symmetrized photon-number correlation `R_N,j(t, t+τ)`; the `δ(τ)` weight
/// is `n̄₀(t)`.
pub fn photon_correlation(
    port: Output,
    tau: f64,
    point: &InterferencePoint,
    tau_r: f64,
    splitter: &BeamSplitter,
) -> Correlation {
    let rt = splitter.reflectance() * splitter.transmittance();
    let cross = 2.0 * port.cross_weight(splitter) * splitter.mixing_amplitude();
    let phase = point.interference_phase();
    let h = point.psi * kernel_h(tau, tau_r);
    let g = point.psi * point.psi * kernel_g(tau, tau_r);
    let smooth = port.sign() * cross * h * phase.cos()
        + rt * h * (2.0 * phase).sin()
        + rt * g * phase.cos().powi(2);
    Correlation {
        delta_weight: point.mean_rate,
        smooth: point.mean_rate * smooth,
    }
}

fn mandel_bracket(
    port: Output,
    l: f64,
    point: &InterferencePoint,
    splitter: &BeamSplitter,
    terms: MandelTerms,
) -> f64 {
    let rt = splitter.reflectance() * splitter.transmittance();
    let cross = 4.0 * port.cross_weight(splitter) * splitter.mixing_amplitude();
    let phase = point.interference_phase();
    let first = port.sign() * cross * phase.cos();
    match terms {
        MandelTerms::Full => {
            first + 2.0 * rt * (2.0 * phase).sin() + 4.0 * rt * point.psi * l * phase.cos().powi(2)
        }
        MandelTerms::Monochromatic => first,
    }
}

/// Windowed photon-number spectrum `S_𝒯,j(Ω)`.
pub fn photon_spectrum(
    port: Output,
    omega: f64,
    point: &InterferencePoint,
    window: &MeasurementWindow,
    splitter: &BeamSplitter,
) -> Result<f64> {
    let l = lorentzian(omega)?;
    let bracket = mandel_bracket(port, l, point, splitter, MandelTerms::Full);
    Ok(point.total_photons + point.mean_rate * point.psi * l * window.ratio * bracket)
}

/// Extended Mandel parameter `Q_𝒯,j(Ω) = (S_𝒯,j − N̄)/n̄₀(t)`.
pub fn mandel_q(
    port: Output,
    omega: f64,
    point: &InterferencePoint,
    window: &MeasurementWindow,
    splitter: &BeamSplitter,
    terms: MandelTerms,
) -> Result<MandelPoint> {
    if point.mean_rate.is_nan() || point.mean_rate <= 0.0 {
        return Err(Error::UndefinedStatistics {
            rate: point.mean_rate,
        });
    }
    let l = lorentzian(omega)?;
    let q = point.psi * l * window.ratio * mandel_bracket(port, l, point, splitter, terms);
    Ok(MandelPoint {
        omega,
        q,
        regime: Regime::classify(q),
    })
}

/// Mean photon count in the window: `𝒯 n̄₀ [1 ∓ 2√(RT) sin(ψ + Δφ)]`.
pub fn mean_photons_windowed(
    port: Output,
    point: &InterferencePoint,
    window: &MeasurementWindow,
    splitter: &BeamSplitter,
) -> f64 {
    let modulation = 2.0 * splitter.mixing_amplitude() * point.interference_phase().sin();
    window.t_meas * point.mean_rate * (1.0 + port.sign() * modulation)
}

fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// `N̄₁/N̄` for a Gaussian pulse pair with constant `Δφ`, the printed closed
/// form `1 − 2√(RT) sinc(ψ₀/4) sin(ψ₀/4 + Δφ)`.
pub fn total_photon_out1(psi0: f64, delta_phi: f64, splitter: &BeamSplitter) -> f64 {
    total_photon_ratio(Output::One, psi0, delta_phi, splitter)
}

/// `N̄₂/N̄`, the mirror of [`total_photon_out1`] so that `N̄₁ + N̄₂ = 2N̄`.
pub fn total_photon_out2(psi0: f64, delta_phi: f64, splitter: &BeamSplitter) -> f64 {
    total_photon_ratio(Output::Two, psi0, delta_phi, splitter)
}

pub fn total_photon_ratio(port: Output, psi0: f64, delta_phi: f64, splitter: &BeamSplitter) -> f64 {
    let quarter = 0.25 * psi0;
    let modulation =
        2.0 * splitter.mixing_amplitude() * sinc(quarter) * (quarter + delta_phi).sin();
    1.0 + port.sign() * modulation
}

/// `N̄ = ∫ n̄₀(t) dt`: `n̄₀ τ_p √π` for the Gaussian, found numerically for the
/// flat envelope.
pub fn total_photon_input(pulse: &PulseState) -> f64 {
    match pulse.envelope {
        Envelope::Gaussian => pulse.n0_peak * pulse.tau_p * PI.sqrt(),
        Envelope::Flat => {
            // Midpoint rule is exact for a constant on its support.
            let half = pulse.flat_half_width();
            let n = 64;
            let dt = 2.0 * half / n as f64;
            (0..n)
                .map(|i| pulse.n0_peak * envelope(-half + (i as f64 + 0.5) * dt, pulse) * dt)
                .sum()
        }
    }
}
