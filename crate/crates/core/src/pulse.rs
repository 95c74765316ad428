//! Scalar building blocks shared by every spectrum: pulse envelope, nonlinear
//! phase, damping, the Lorentzian filter, the Kerr memory kernels and the
//! optimal-phase rule.
//!
//! Frequencies are always reduced, `Ω = ω τ_r`. Times carry whatever unit the
//! caller picked for `tau_r` and `tau_p`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};

/// Above this Kerr coefficient the `γ ≪ 1` expansion behind every closed form
/// is no longer trustworthy.
pub const WEAK_NONLINEARITY_LIMIT: f64 = 0.1;

/// `τ_r/τ_p` above which the quasi-static treatment is flagged.
pub const QUASI_STATIC_WARN_RATIO: f64 = 0.1;

/// Kerr medium: nonlinearity per photon and relaxation time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MediumParams {
    pub gamma: f64,
    pub tau_r: f64,
}

impl MediumParams {
    pub fn new(gamma: f64, tau_r: f64) -> Result<Self> {
        let medium = Self { gamma, tau_r };
        medium.validate()?;
        Ok(medium)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma.is_finite() && self.gamma >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                value: self.gamma,
                reason: "must be finite and non-negative",
            });
        }
        if !(self.tau_r.is_finite() && self.tau_r > 0.0) {
            return Err(Error::InvalidParameter {
                name: "tau_r",
                value: self.tau_r,
                reason: "must be finite and positive",
            });
        }
        Ok(())
    }

    /// False once `γ ≥ 0.1`.
    pub fn is_weakly_nonlinear(&self) -> bool {
        self.gamma < WEAK_NONLINEARITY_LIMIT
    }
}

impl Default for MediumParams {
    fn default() -> Self {
        Self {
            gamma: 0.01,
            tau_r: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Envelope {
    /// `exp(−t²/2τ_p²)/√2`.
    #[default]
    Gaussian,
    /// Rectangle of height `1/√2` with the same area as the Gaussian, so both
    /// shapes carry the same total photon number.
    Flat,
}

/// Input pulse pair. `n0_peak` is the amplitude `n̄₀` in `n̄₀(t) = n̄₀ ρ(t)`,
/// so the rate at the pulse centre is `n0_peak/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PulseState {
    pub n0_peak: f64,
    pub tau_p: f64,
    /// Linear phase of the pulse entering the Kerr medium.
    #[serde(default)]
    pub phi1: f64,
    /// Phase of the coherent reference pulse.
    #[serde(default)]
    pub phi2: f64,
    #[serde(default)]
    pub envelope: Envelope,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RegimeWarning {
    /// `γ ≥ 0.1`.
    StrongNonlinearity { gamma: f64 },
    /// `τ_r/τ_p > 0.1`.
    SlowMedium { ratio: f64 },
    /// `𝒯/τ_p > 1`.
    LongWindow { ratio: f64 },
}

impl std::fmt::Display for RegimeWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::StrongNonlinearity { gamma } => {
                write!(
                    f,
                    "gamma = {gamma} is not small; closed forms assume gamma << 1"
                )
            }
            Self::SlowMedium { ratio } => {
                write!(
                    f,
                    "tau_r/tau_p = {ratio} is not small; spectra assume tau_r << tau_p"
                )
            }
            Self::LongWindow { ratio } => {
                write!(
                    f,
                    "T/tau_p = {ratio} exceeds 1; short-window factorization is violated"
                )
            }
        }
    }
}

impl PulseState {
    pub fn new(n0_peak: f64, tau_p: f64, phi1: f64, phi2: f64, envelope: Envelope) -> Result<Self> {
        let pulse = Self {
            n0_peak,
            tau_p,
            phi1,
            phi2,
            envelope,
        };
        pulse.validate()?;
        Ok(pulse)
    }

    pub fn gaussian(n0_peak: f64, tau_p: f64) -> Result<Self> {
        Self::new(n0_peak, tau_p, 0.0, 0.0, Envelope::Gaussian)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.n0_peak.is_finite() && self.n0_peak >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "n0_peak",
                value: self.n0_peak,
                reason: "must be finite and non-negative",
            });
        }
        if !(self.tau_p.is_finite() && self.tau_p > 0.0) {
            return Err(Error::InvalidParameter {
                name: "tau_p",
                value: self.tau_p,
                reason: "must be finite and positive",
            });
        }
        ensure_finite("phi1", self.phi1)?;
        ensure_finite("phi2", self.phi2)?;
        Ok(())
    }

    /// Checks the pulse against a medium. Hard failure when `τ_r ≥ τ_p`,
    /// otherwise returns the soft regime warnings that apply.
    pub fn check_regime(&self, medium: &MediumParams) -> Result<Vec<RegimeWarning>> {
        let ratio = medium.tau_r / self.tau_p;
        if ratio >= 1.0 {
            return Err(Error::InvalidParameter {
                name: "tau_r/tau_p",
                value: ratio,
                reason: "relaxation time must be shorter than the pulse",
            });
        }
        let mut warnings = Vec::new();
        if !medium.is_weakly_nonlinear() {
            warnings.push(RegimeWarning::StrongNonlinearity {
                gamma: medium.gamma,
            });
        }
        if ratio > QUASI_STATIC_WARN_RATIO {
            warnings.push(RegimeWarning::SlowMedium { ratio });
        }
        Ok(warnings)
    }

    /// `Δφ = φ₁ − φ₂`.
    pub fn delta_phi(&self) -> f64 {
        self.phi1 - self.phi2
    }

    /// Mean photon rate `n̄₀(t) = n̄₀ ρ(t)`.
    pub fn mean_rate(&self, t: f64) -> f64 {
        self.n0_peak * envelope(t, self)
    }

    /// Half-width of the flat envelope, chosen so its area matches the Gaussian.
    pub fn flat_half_width(&self) -> f64 {
        self.tau_p * (PI / 2.0).sqrt()
    }
}

impl Default for PulseState {
    fn default() -> Self {
        Self {
            n0_peak: 100.0,
            tau_p: 100.0,
            phi1: 0.0,
            phi2: 0.0,
            envelope: Envelope::Gaussian,
        }
    }
}

/// Beam splitter with reflectance `R`; transmittance is always `1 − R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamSplitter {
    pub reflectance: f64,
}

impl BeamSplitter {
    pub fn new(reflectance: f64) -> Result<Self> {
        let splitter = Self { reflectance };
        splitter.validate()?;
        Ok(splitter)
    }

    pub fn balanced() -> Self {
        Self { reflectance: 0.5 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.reflectance) {
            return Err(Error::InvalidParameter {
                name: "reflectance",
                value: self.reflectance,
                reason: "must lie in [0, 1]",
            });
        }
        Ok(())
    }

    pub fn reflectance(&self) -> f64 {
        self.reflectance
    }

    pub fn transmittance(&self) -> f64 {
        1.0 - self.reflectance
    }

    /// `√(RT)`, the interference amplitude between the two inputs.
    pub fn mixing_amplitude(&self) -> f64 {
        (self.reflectance * self.transmittance()).sqrt()
    }
}

impl Default for BeamSplitter {
    fn default() -> Self {
        Self::balanced()
    }
}

/// How the linear phase `φ₁` of the Kerr-arm pulse is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseMode {
    /// Fixed `φ₁` in radians.
    Explicit(f64),
    /// `φ₁` that minimises the X-quadrature noise at reduced frequency `Ω₀`.
    OptimalAt(f64),
}

impl PhaseMode {
    /// Linear phase `φ₁` to use when the nonlinear phase is `psi`.
    pub fn resolve(&self, psi: f64) -> f64 {
        match *self {
            Self::Explicit(phi) => phi,
            Self::OptimalAt(omega0) => optimal_phase(psi, omega0),
        }
    }
}

impl Default for PhaseMode {
    fn default() -> Self {
        Self::OptimalAt(0.0)
    }
}

/// `L(Ω) = 1/(1 + Ω²)`.
pub fn lorentzian(omega: f64) -> Result<f64> {
    ensure_finite("omega", omega)?;
    Ok(lorentzian_unchecked(omega))
}

pub(crate) fn lorentzian_unchecked(omega: f64) -> f64 {
    1.0 / (1.0 + omega * omega)
}

/// Normalized envelope `ρ(t)`, peak value `1/√2`.
pub fn envelope(t: f64, pulse: &PulseState) -> f64 {
    match pulse.envelope {
        Envelope::Gaussian => {
            let x = t / pulse.tau_p;
            (-0.5 * x * x).exp() * FRAC_1_SQRT_2
        }
        Envelope::Flat => {
            if t.abs() <= pulse.flat_half_width() {
                FRAC_1_SQRT_2
            } else {
                0.0
            }
        }
    }
}

/// Self-phase `ψ(t) = 2γ n̄₀(t)`.
pub fn nonlinear_phase(t: f64, medium: &MediumParams, pulse: &PulseState) -> f64 {
    2.0 * medium.gamma * pulse.mean_rate(t)
}

/// Peak self-phase `ψ₀ = ψ(0)`.
pub fn peak_nonlinear_phase(medium: &MediumParams, pulse: &PulseState) -> f64 {
    nonlinear_phase(0.0, medium, pulse)
}

/// `μ(t) = γ ψ(t)/2`.
pub fn damping_mu(t: f64, medium: &MediumParams, pulse: &PulseState) -> f64 {
    0.5 * medium.gamma * nonlinear_phase(t, medium, pulse)
}

/// Linear phase that puts the minor axis of the noise ellipse on X at `Ω₀`:
/// `φ₀ = ½ arctan(1/(ψ L(Ω₀))) − ψ`, continued to `π/4 − ψ` when `ψ L = 0`.
pub fn optimal_phase(psi: f64, omega0: f64) -> f64 {
    let a = psi * lorentzian_unchecked(omega0);
    // atan2(1, a) is the principal arctan(1/a) for a > 0 and π/2 at a = 0.
    let half = if a == 0.0 {
        FRAC_PI_4
    } else {
        0.5 * 1f64.atan2(a)
    };
    half - psi
}

/// Kerr memory kernel `h(τ) = τ_r⁻¹ e^{−|τ|/τ_r}`.
pub fn kernel_h(tau: f64, tau_r: f64) -> f64 {
    (-(tau / tau_r).abs()).exp() / tau_r
}

/// Second-order kernel `g(τ) = τ_r⁻¹ (1 + |τ|/τ_r) e^{−|τ|/τ_r}`.
pub fn kernel_g(tau: f64, tau_r: f64) -> f64 {
    let x = (tau / tau_r).abs();
    (1.0 + x) * (-x).exp() / tau_r
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn lorentzian_reference_points() {
        assert_eq!(lorentzian(0.0).unwrap(), 1.0);
        assert_eq!(lorentzian(1.0).unwrap(), 0.5);
        assert_abs_diff_eq!(lorentzian(2.0).unwrap(), 0.2, epsilon = 1e-15);
        assert_eq!(lorentzian(-2.0).unwrap(), lorentzian(2.0).unwrap());
    }

    #[test]
    fn lorentzian_rejects_non_finite() {
        assert!(matches!(lorentzian(f64::NAN), Err(Error::Domain { .. })));
        assert!(lorentzian(f64::INFINITY).is_err());
    }

    #[test]
    fn envelope_values() {
        let pulse = PulseState::gaussian(1.0, 2.0).unwrap();
        assert_abs_diff_eq!(
            envelope(0.0, &pulse),
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(envelope(2.0, &pulse), 0.428_881_9, epsilon = 1e-7);
        assert!(envelope(200.0, &pulse) < 1e-300);

        let flat = PulseState {
            envelope: Envelope::Flat,
            ..pulse
        };
        assert_eq!(envelope(0.0, &flat), FRAC_1_SQRT_2);
        assert_eq!(envelope(2.4, &flat), FRAC_1_SQRT_2);
        assert_eq!(envelope(2.6, &flat), 0.0);
    }

    #[test]
    fn nonlinear_phase_and_damping() {
        let pulse = PulseState::gaussian(175.0 * 2f64.sqrt(), 1.0).unwrap();
        let none = MediumParams::new(0.0, 0.01).unwrap();
        assert_eq!(nonlinear_phase(0.3, &none, &pulse), 0.0);
        assert_eq!(damping_mu(0.3, &none, &pulse), 0.0);

        // n̄₀(0) = 175 with γ = 0.01.
        let medium = MediumParams::new(0.01, 0.01).unwrap();
        assert_abs_diff_eq!(nonlinear_phase(0.0, &medium, &pulse), 3.5, epsilon = 1e-12);
        assert_abs_diff_eq!(damping_mu(0.0, &medium, &pulse), 0.0175, epsilon = 1e-14);

        // ψ₀ = 2 falls to 2e^{−1/2} one pulse width out.
        let pulse = PulseState::gaussian(100.0 * 2f64.sqrt(), 1.0).unwrap();
        assert_abs_diff_eq!(nonlinear_phase(0.0, &medium, &pulse), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            nonlinear_phase(1.0, &medium, &pulse),
            1.213_061,
            epsilon = 1e-6
        );
    }

    #[test]
    fn optimal_phase_reference_points() {
        assert_eq!(optimal_phase(0.0, 0.0), FRAC_PI_4);
        assert_eq!(optimal_phase(0.0, 3.0), FRAC_PI_4);
        assert_abs_diff_eq!(optimal_phase(1.0, 0.0), -0.607_300_9, epsilon = 1e-7);
        assert_abs_diff_eq!(optimal_phase(2.0, 1.0), -1.607_300_9, epsilon = 1e-7);
    }

    #[test]
    fn optimal_phase_is_continuous_at_zero() {
        // Slope at the origin is −(1 + L/2), so the gap shrinks linearly.
        for psi in [1e-8, 1e-10, 1e-13] {
            let gap = (optimal_phase(psi, 0.0) - optimal_phase(0.0, 0.0)).abs();
            assert!(gap <= 1.5 * psi + 1e-15, "psi={psi} gap={gap}");
        }
        assert!((optimal_phase(1e-13, 0.0) - FRAC_PI_4).abs() <= 1e-12);
    }

    #[test]
    fn kernels_reference_points() {
        assert_eq!(kernel_h(0.0, 1.0), 1.0);
        assert_eq!(kernel_g(0.0, 1.0), 1.0);
        assert_abs_diff_eq!(kernel_h(1.0, 1.0), 0.367_879_4, epsilon = 1e-7);
        assert_abs_diff_eq!(kernel_g(1.0, 1.0), 0.735_758_9, epsilon = 1e-7);
        assert_eq!(kernel_h(0.0, 0.5), 2.0);
    }

    #[test]
    fn parameter_validation() {
        assert!(MediumParams::new(-0.1, 1.0).is_err());
        assert!(MediumParams::new(0.01, 0.0).is_err());
        assert!(!MediumParams::new(0.1, 1.0).unwrap().is_weakly_nonlinear());
        assert!(MediumParams::new(0.099, 1.0).unwrap().is_weakly_nonlinear());
        assert!(PulseState::gaussian(-1.0, 1.0).is_err());
        assert!(PulseState::gaussian(1.0, 0.0).is_err());
        assert!(BeamSplitter::new(1.01).is_err());
        assert!(BeamSplitter::new(-0.01).is_err());
        assert!(BeamSplitter::new(f64::NAN).is_err());
    }

    #[test]
    fn regime_checks() {
        let pulse = PulseState::gaussian(1.0, 1.0).unwrap();
        let slow = MediumParams::new(0.01, 1.0).unwrap();
        assert!(pulse.check_regime(&slow).is_err());

        let borderline = MediumParams::new(0.2, 0.5).unwrap();
        let warnings = pulse.check_regime(&borderline).unwrap();
        assert_eq!(warnings.len(), 2);

        let fine = MediumParams::new(0.01, 0.01).unwrap();
        assert!(pulse.check_regime(&fine).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn lorentzian_even_and_decreasing(a in 0.0f64..50.0, b in 0.0f64..50.0) {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assume!(hi - lo > 1e-9);
            prop_assert_eq!(lorentzian(lo).unwrap(), lorentzian(-lo).unwrap());
            prop_assert!(lorentzian(lo).unwrap() > lorentzian(hi).unwrap());
            prop_assert!(lorentzian(hi).unwrap() > 0.0);
        }

        #[test]
        fn kernels_even_and_positive(tau in -30.0f64..30.0, tau_r in 0.1f64..5.0) {
            prop_assert_eq!(kernel_h(tau, tau_r), kernel_h(-tau, tau_r));
            prop_assert_eq!(kernel_g(tau, tau_r), kernel_g(-tau, tau_r));
            prop_assert!(kernel_h(tau, tau_r) > 0.0);
            prop_assert!(kernel_g(tau, tau_r) >= kernel_h(tau, tau_r));
        }

        #[test]
        fn damping_is_half_gamma_psi(
            gamma in 0.0f64..0.1,
            n0 in 0.0f64..1e3,
            t in -3.0f64..3.0,
        ) {
            let medium = MediumParams::new(gamma, 0.01).unwrap();
            let pulse = PulseState::gaussian(n0, 1.0).unwrap();
            let psi = nonlinear_phase(t, &medium, &pulse);
            let mu = damping_mu(t, &medium, &pulse);
            prop_assert!(psi >= 0.0 && mu >= 0.0);
            prop_assert!((mu - 0.5 * gamma * psi).abs() <= 1e-15 * (1.0 + psi));
        }

        #[test]
        fn splitter_coefficients_sum_to_one(r in 0.0f64..=1.0) {
            let bs = BeamSplitter::new(r).unwrap();
            prop_assert_eq!(bs.reflectance() + bs.transmittance(), 1.0);
        }
    }
}
