//! Brute-force cross-checks for the closed forms.
//!
//! Spectra are rebuilt by numerically Fourier-transforming the correlation
//! functions, and photon totals by integrating the windowed means over the
//! pulse. Nothing here calls a closed-form spectrum.

mod audit;
mod integrate;

pub use audit::{
    audit_paper_forms, audit_printed_correlations, AuditGrid, AuditLocation, AuditReport,
    Classification, FamilyAudit, PaperFormAudit, PaperFormFamily,
};
pub use integrate::{integrate, Estimate, Rule};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::photon::{photon_correlation, InterferencePoint, MeasurementWindow, Output};
use crate::pulse::{envelope, kernel_g, kernel_h, BeamSplitter, Envelope, PulseState};
use crate::quadrature::{
    quad_correlation, Correlation, NoiseSpectrumPoint, QuadratureSelector, SpmPoint,
};

/// Numerical settings for every oracle integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureScheme {
    /// Half-range of the lag integral, in units of `τ_r`.
    pub truncation: f64,
    /// Absolute tolerance handed to the integrator.
    pub tol: f64,
    pub rule: Rule,
}

impl Default for QuadratureScheme {
    fn default() -> Self {
        Self {
            truncation: 50.0,
            tol: 1e-9,
            rule: Rule::AdaptiveSimpson,
        }
    }
}

impl QuadratureScheme {
    pub fn new(truncation: f64, tol: f64, rule: Rule) -> Result<Self> {
        let scheme = Self {
            truncation,
            tol,
            rule,
        };
        scheme.validate()?;
        Ok(scheme)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.truncation >= 20.0 && self.truncation.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "truncation",
                value: self.truncation,
                reason: "must be at least 20 relaxation times",
            });
        }
        if !(self.tol > 0.0 && self.tol <= 1e-3) {
            return Err(Error::InvalidParameter {
                name: "tol",
                value: self.tol,
                reason: "must lie in (0, 1e-3]",
            });
        }
        Ok(())
    }

    /// Same scheme, tolerance halved.
    pub fn refined(&self) -> Self {
        Self {
            tol: 0.5 * self.tol,
            ..*self
        }
    }

    fn lag_panels(&self, omega: f64) -> usize {
        // About four panels per oscillation, never fewer than one per τ_r.
        let per_unit = 1.0_f64.max(omega.abs() * 2.0 / std::f64::consts::PI);
        (self.truncation * per_unit).ceil() as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    H,
    G,
    Delta,
}

/// `∫ f(τ) cos(Ωτ/τ_r) dτ` for an even `f`, as `2∫₀^{Tτ_r}`.
pub fn cosine_transform<F>(
    f: F,
    omega: f64,
    tau_r: f64,
    scheme: &QuadratureScheme,
) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    scheme.validate()?;
    let omega = crate::error::ensure_finite("omega", omega)?;
    // Integrate in θ = τ/τ_r.
    let integrand = |theta: f64| f(theta * tau_r) * (omega * theta).cos();
    let half = integrate(
        integrand,
        0.0,
        scheme.truncation,
        scheme.lag_panels(omega),
        scheme.tol / (2.0 * tau_r),
        scheme.rule,
    )?;
    Ok(Estimate {
        value: 2.0 * tau_r * half.value,
        error: 2.0 * tau_r * half.error,
    })
}

/// Numerical transform of a memory kernel at `τ_r = 1`; `δ` is exactly 1.
pub fn ft_kernel(kernel: Kernel, omega: f64, scheme: &QuadratureScheme) -> Result<f64> {
    match kernel {
        Kernel::H => {
            cosine_transform(|tau| kernel_h(tau, 1.0), omega, 1.0, scheme).map(|e| e.value)
        }
        Kernel::G => {
            cosine_transform(|tau| kernel_g(tau, 1.0), omega, 1.0, scheme).map(|e| e.value)
        }
        Kernel::Delta => {
            crate::error::ensure_finite("omega", omega)?;
            Ok(1.0)
        }
    }
}

/// `δ-weight + ∫ smooth(τ) e^{iωτ} dτ` for an arbitrary correlation function.
pub fn transform_correlation<F>(
    correlation: F,
    omega: f64,
    tau_r: f64,
    scheme: &QuadratureScheme,
) -> Result<f64>
where
    F: Fn(f64) -> Result<Correlation>,
{
    let at_zero = correlation(0.0)?;
    let smooth = cosine_transform(
        |tau| correlation(tau).map(|c| c.smooth).unwrap_or(f64::NAN),
        omega,
        tau_r,
        scheme,
    )?;
    Ok(at_zero.delta_weight + smooth.value)
}

/// Quadrature spectrum rebuilt from [`quad_correlation`].
pub fn quad_spectrum_via_ft(
    selector: QuadratureSelector,
    omega: f64,
    point: &SpmPoint,
    tau_r: f64,
    splitter: Option<&BeamSplitter>,
    scheme: &QuadratureScheme,
) -> Result<NoiseSpectrumPoint> {
    let value = transform_correlation(
        |tau| quad_correlation(selector, tau, point, tau_r, splitter),
        omega,
        tau_r,
        scheme,
    )?;
    Ok(NoiseSpectrumPoint { omega, value })
}

/// Windowed photon-number spectrum rebuilt from [`photon_correlation`]:
/// `N̄ + (𝒯/τ_p) ∫ smooth(τ) e^{iωτ} dτ`.
pub fn photon_spectrum_via_ft(
    port: Output,
    omega: f64,
    point: &InterferencePoint,
    window: &MeasurementWindow,
    splitter: &BeamSplitter,
    tau_r: f64,
    scheme: &QuadratureScheme,
) -> Result<f64> {
    let excess = cosine_transform(
        |tau| photon_correlation(port, tau, point, tau_r, splitter).smooth,
        omega,
        tau_r,
        &QuadratureScheme {
            // The smooth part scales with n̄₀; keep the tolerance relative to it.
            tol: scheme.tol * point.mean_rate.max(1.0),
            ..*scheme
        },
    )?;
    Ok(point.total_photons + window.ratio * excess.value)
}

/// `N̄₁/N̄` by direct time integration of the windowed mean over the pulse,
/// `∫ n̄₀(t)[1 − 2√(RT) sin(ψ₀ρ(t)/ρ(0) + Δφ)] dt / ∫ n̄₀(t) dt`.
///
/// The Gaussian is integrated over `|t| ≤ 8τ_p`, the flat envelope over its
/// support.
pub fn total_photon_numeric(
    psi0: f64,
    delta_phi: f64,
    splitter: &BeamSplitter,
    pulse: &PulseState,
    scheme: &QuadratureScheme,
) -> Result<f64> {
    scheme.validate()?;
    let half = match pulse.envelope {
        Envelope::Gaussian => 8.0 * pulse.tau_p,
        Envelope::Flat => pulse.flat_half_width(),
    };
    let peak = envelope(0.0, pulse);
    let mix = 2.0 * splitter.mixing_amplitude();
    let out = |t: f64| {
        let rho = envelope(t, pulse);
        rho * (1.0 - mix * (psi0 * rho / peak + delta_phi).sin())
    };
    let panels = 32;
    let tol = scheme.tol * pulse.tau_p;
    let numerator = integrate(out, -half, half, panels, tol, scheme.rule)?;
    let denominator = integrate(
        |t| envelope(t, pulse),
        -half,
        half,
        panels,
        tol,
        scheme.rule,
    )?;
    Ok(numerator.value / denominator.value)
}
