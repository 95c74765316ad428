//! Quadrature means, fluctuation correlation functions and their spectra for
//! the self-phase-modulated pulse and for both beam-splitter outputs.
//!
//! Spectral densities use the convention `S(Ω) = ∫ R(τ) e^{iωτ} dτ`, under
//! which `∫h → 2L`, `∫g → 4L²` and `∫δ → 1`. The vacuum level is `1/4`.
//!
//! Output 1 carries the reflected Kerr pulse, whose extra `π/2` swaps the
//! roles of X and Y; output 2 carries the transmitted one unrotated.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pulse::{
    damping_mu, kernel_g, kernel_h, lorentzian, lorentzian_unchecked, nonlinear_phase,
    BeamSplitter, MediumParams, PhaseMode, PulseState,
};

/// Shot-noise / vacuum spectral level.
pub const VACUUM_LEVEL: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Port {
    /// The pulse leaving the Kerr medium, before the splitter.
    Input,
    Out1,
    Out2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadratureSelector {
    pub axis: Axis,
    pub port: Port,
}

impl QuadratureSelector {
    pub const fn new(axis: Axis, port: Port) -> Self {
        Self { axis, port }
    }

    pub const ALL: [QuadratureSelector; 6] = [
        Self::new(Axis::X, Port::Input),
        Self::new(Axis::Y, Port::Input),
        Self::new(Axis::X, Port::Out1),
        Self::new(Axis::Y, Port::Out1),
        Self::new(Axis::X, Port::Out2),
        Self::new(Axis::Y, Port::Out2),
    ];

    /// Short label such as `S_X`, `S_Y1`, `S_X2`.
    pub fn label(&self) -> &'static str {
        match (self.port, self.axis) {
            (Port::Input, Axis::X) => "S_X",
            (Port::Input, Axis::Y) => "S_Y",
            (Port::Out1, Axis::X) => "S_X1",
            (Port::Out1, Axis::Y) => "S_Y1",
            (Port::Out2, Axis::X) => "S_X2",
            (Port::Out2, Axis::Y) => "S_Y2",
        }
    }

    /// Fraction of the Kerr pulse reaching this port: `1`, `R` or `T`.
    fn share(&self, splitter: Option<&BeamSplitter>) -> Result<f64> {
        match self.port {
            Port::Input => Ok(1.0),
            Port::Out1 => Ok(require(self.port, splitter)?.reflectance()),
            Port::Out2 => Ok(require(self.port, splitter)?.transmittance()),
        }
    }
}

fn require(port: Port, splitter: Option<&BeamSplitter>) -> Result<&BeamSplitter> {
    splitter.ok_or(Error::MissingSplitter(port))
}

/// Kerr-arm state at one instant: nonlinear phase `ψ` and linear phase `φ₁`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpmPoint {
    pub psi: f64,
    pub linear_phase: f64,
}

impl SpmPoint {
    pub fn new(psi: f64, mode: PhaseMode) -> Self {
        Self {
            psi,
            linear_phase: mode.resolve(psi),
        }
    }

    /// Point with the total phase `Φ = ψ + φ₁` fixed directly.
    pub fn with_total_phase(psi: f64, total_phase: f64) -> Self {
        Self {
            psi,
            linear_phase: total_phase - psi,
        }
    }

    pub fn at_time(t: f64, medium: &MediumParams, pulse: &PulseState, mode: PhaseMode) -> Self {
        Self::new(nonlinear_phase(t, medium, pulse), mode)
    }

    /// `Φ = ψ + φ₁`.
    pub fn total_phase(&self) -> f64 {
        self.psi + self.linear_phase
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpectrumPoint {
    pub omega: f64,
    pub value: f64,
}

/// A correlation function split into its `δ(τ)` weight and smooth remainder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Correlation {
    pub delta_weight: f64,
    pub smooth: f64,
}

/// Mean quadratures `(⟨X⟩, ⟨Y⟩)` at `port`, using `pulse.phi1`/`pulse.phi2`
/// and equal input amplitudes `|α₀(t)|² = n̄₀(t)`.
pub fn mean_quadratures(
    port: Port,
    t: f64,
    medium: &MediumParams,
    pulse: &PulseState,
    splitter: Option<&BeamSplitter>,
) -> Result<(f64, f64)> {
    let amplitude = pulse.mean_rate(t).sqrt() * (-damping_mu(t, medium, pulse)).exp();
    let big_phi = nonlinear_phase(t, medium, pulse) + pulse.phi1;
    let phi2 = pulse.phi2;
    let (x, y) = match port {
        Port::Input => (big_phi.cos(), big_phi.sin()),
        Port::Out1 => {
            let bs = require(port, splitter)?;
            let (r, t) = (bs.reflectance().sqrt(), bs.transmittance().sqrt());
            (
                t * phi2.cos() - r * big_phi.sin(),
                t * phi2.sin() + r * big_phi.cos(),
            )
        }
        Port::Out2 => {
            let bs = require(port, splitter)?;
            let (r, t) = (bs.reflectance().sqrt(), bs.transmittance().sqrt());
            (
                t * big_phi.cos() - r * phi2.sin(),
                t * big_phi.sin() + r * phi2.cos(),
            )
        }
    };
    Ok((amplitude * x, amplitude * y))
}

/// Symmetrized quadrature correlation `R(t, t+τ)`.
///
/// The printed output-port correlations for `Y1` and `X2` carry `cos²Φ₁` on
/// the `g` term, which does not transform into the printed spectra; this
/// function uses `sin²Φ₁` there. See [`quad_correlation_as_printed`].
pub fn quad_correlation(
    selector: QuadratureSelector,
    tau: f64,
    point: &SpmPoint,
    tau_r: f64,
    splitter: Option<&BeamSplitter>,
) -> Result<Correlation> {
    let share = selector.share(splitter)?;
    let phi = point.total_phase();
    let (sin2, sin_sq, cos_sq) = ((2.0 * phi).sin(), phi.sin().powi(2), phi.cos().powi(2));
    let psi = point.psi;
    let h = psi * kernel_h(tau, tau_r);
    let g = psi * psi * kernel_g(tau, tau_r);

    let smooth = match (selector.port, selector.axis) {
        (Port::Input, Axis::X) => -h * sin2 + g * sin_sq,
        (Port::Input, Axis::Y) => h * sin2 + g * cos_sq,
        (Port::Out1, Axis::X) => share * (h * sin2 + g * cos_sq),
        (Port::Out1, Axis::Y) => share * (-h * sin2 + g * sin_sq),
        (Port::Out2, Axis::X) => share * (-h * sin2 + g * sin_sq),
        (Port::Out2, Axis::Y) => share * (h * sin2 + g * cos_sq),
    };
    Ok(Correlation {
        delta_weight: VACUUM_LEVEL,
        smooth: VACUUM_LEVEL * smooth,
    })
}

/// Output-port correlations exactly as printed, `cos²Φ₁` on every `g` term.
/// Kept only so the audit can show they miss the printed spectra.
pub fn quad_correlation_as_printed(
    selector: QuadratureSelector,
    tau: f64,
    point: &SpmPoint,
    tau_r: f64,
    splitter: Option<&BeamSplitter>,
) -> Result<Correlation> {
    let share = selector.share(splitter)?;
    let phi = point.total_phase();
    let psi = point.psi;
    let h = psi * kernel_h(tau, tau_r) * (2.0 * phi).sin();
    let g = psi * psi * kernel_g(tau, tau_r) * phi.cos().powi(2);
    let smooth = match (selector.port, selector.axis) {
        (Port::Input, _) => return quad_correlation(selector, tau, point, tau_r, splitter),
        (Port::Out1, Axis::X) | (Port::Out2, Axis::Y) => share * (h + g),
        (Port::Out1, Axis::Y) | (Port::Out2, Axis::X) => share * (-h + g),
    };
    Ok(Correlation {
        delta_weight: VACUUM_LEVEL,
        smooth: VACUUM_LEVEL * smooth,
    })
}

/// Closed-form quadrature noise spectrum at reduced frequency `omega`.
pub fn quad_spectrum(
    selector: QuadratureSelector,
    omega: f64,
    point: &SpmPoint,
    splitter: Option<&BeamSplitter>,
) -> Result<NoiseSpectrumPoint> {
    let l = lorentzian(omega)?;
    let share = selector.share(splitter)?;
    let phi = point.total_phase();
    let (sin2, sin_sq, cos_sq) = ((2.0 * phi).sin(), phi.sin().powi(2), phi.cos().powi(2));
    let a = point.psi * l;

    // 1 ± 2cψL sin2Φ + 4cψ²L² {sin²Φ | cos²Φ}
    let bracket = match (selector.port, selector.axis) {
        (Port::Input, Axis::X) | (Port::Out1, Axis::Y) | (Port::Out2, Axis::X) => {
            1.0 - 2.0 * share * a * sin2 + 4.0 * share * a * a * sin_sq
        }
        (Port::Input, Axis::Y) | (Port::Out1, Axis::X) | (Port::Out2, Axis::Y) => {
            1.0 + 2.0 * share * a * sin2 + 4.0 * share * a * a * cos_sq
        }
    };
    Ok(NoiseSpectrumPoint {
        omega,
        value: VACUUM_LEVEL * bracket,
    })
}

/// The printed optimal-phase closed forms, evaluated verbatim.
///
/// At `Ω = Ω₀` these are the minimum-noise expressions; elsewhere the printed
/// "any frequency" corrections are added. Input forms use the exponent `−1/2`
/// on `1 + ψ²L²(Ω)`, output forms use `−1` on `1 + ψ²L²(Ω₀)`, both as printed.
/// The result can be negative; it is not a physical spectrum.
pub fn paper_optimal_forms(
    selector: QuadratureSelector,
    omega: f64,
    omega0: f64,
    psi: f64,
    splitter: Option<&BeamSplitter>,
) -> Result<f64> {
    let l = lorentzian(omega)?;
    let l0 = lorentzian(omega0)?;
    let share = selector.share(splitter)?;
    let a0 = psi * l0;
    let root = (1.0 + a0 * a0).sqrt();

    let at_omega0 = match (selector.port, selector.axis) {
        (Port::Input, Axis::X) => 0.25 * (root - a0).powi(2),
        (Port::Input, Axis::Y) => 0.25 * (root + a0).powi(2),
        (Port::Out1, Axis::X) | (Port::Out2, Axis::Y) => {
            0.25 * ((root + share * a0).powi(2) - (2.0 * share - 1.0).powi(2) * a0 * a0)
        }
        (Port::Out1, Axis::Y) | (Port::Out2, Axis::X) => {
            0.25 * ((root - share * a0).powi(2) - (2.0 * share - 1.0).powi(2) * a0 * a0)
        }
    };

    let numerator = 1.0 + (l + l0) * l0 * psi * psi;
    let tail = match selector.port {
        Port::Input => numerator / (1.0 + psi * psi * l * l).sqrt(),
        Port::Out1 | Port::Out2 => numerator / (1.0 + a0 * a0),
    };
    let sign = match (selector.port, selector.axis) {
        (Port::Input, Axis::X) | (Port::Out1, Axis::Y) | (Port::Out2, Axis::X) => -1.0,
        _ => 1.0,
    };
    let correction = 0.5 * share * psi * (l - l0) * ((l + l0) * psi + sign * tail);
    Ok(at_omega0 + correction)
}

/// Substituting the optimal phase into the general spectrum, written out
/// in closed form: `¼[1 ∓ 2c a s + 2c a²(1 ∓ k)]` with `a = ψL(Ω)`,
/// `s = 1/√(1+a₀²)`, `k = a₀/√(1+a₀²)`.
///
/// Used by tests and the audit as an algebraic cross-check of
/// [`quad_spectrum`] with [`PhaseMode::OptimalAt`].
pub fn optimal_substitution(
    selector: QuadratureSelector,
    omega: f64,
    omega0: f64,
    psi: f64,
    splitter: Option<&BeamSplitter>,
) -> Result<f64> {
    let l = lorentzian(omega)?;
    let share = selector.share(splitter)?;
    let a0 = psi * lorentzian_unchecked(omega0);
    let root = (1.0 + a0 * a0).sqrt();
    let (sin2, cos2) = (1.0 / root, a0 / root);
    let a = psi * l;
    let value = match (selector.port, selector.axis) {
        (Port::Input, Axis::X) | (Port::Out1, Axis::Y) | (Port::Out2, Axis::X) => {
            1.0 - 2.0 * share * a * sin2 + 2.0 * share * a * a * (1.0 - cos2)
        }
        (Port::Input, Axis::Y) | (Port::Out1, Axis::X) | (Port::Out2, Axis::Y) => {
            1.0 + 2.0 * share * a * sin2 + 2.0 * share * a * a * (1.0 + cos2)
        }
    };
    Ok(VACUUM_LEVEL * value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, FRAC_PI_8, PI};

    const X_IN: QuadratureSelector = QuadratureSelector::new(Axis::X, Port::Input);
    const Y_IN: QuadratureSelector = QuadratureSelector::new(Axis::Y, Port::Input);
    const X1: QuadratureSelector = QuadratureSelector::new(Axis::X, Port::Out1);
    const Y1: QuadratureSelector = QuadratureSelector::new(Axis::Y, Port::Out1);
    const X2: QuadratureSelector = QuadratureSelector::new(Axis::X, Port::Out2);
    const Y2: QuadratureSelector = QuadratureSelector::new(Axis::Y, Port::Out2);

    fn spec(sel: QuadratureSelector, omega: f64, p: &SpmPoint, r: f64) -> f64 {
        let bs = BeamSplitter::new(r).unwrap();
        quad_spectrum(sel, omega, p, Some(&bs)).unwrap().value
    }

    #[test]
    fn mean_quadratures_reference_points() {
        let medium = MediumParams::new(0.0, 0.01).unwrap();
        // n0_peak·ρ(0) = 1 so |α₀| = 1.
        let pulse = PulseState::gaussian(2f64.sqrt(), 1.0).unwrap();
        let (x, y) = mean_quadratures(Port::Input, 0.0, &medium, &pulse, None).unwrap();
        assert_abs_diff_eq!(x, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(y, 0.0, epsilon = 1e-15);

        let bs = BeamSplitter::balanced();
        let (x, y) = mean_quadratures(Port::Out1, 0.0, &medium, &pulse, Some(&bs)).unwrap();
        assert_abs_diff_eq!(x, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(y, FRAC_1_SQRT_2, epsilon = 1e-15);

        assert_eq!(
            mean_quadratures(Port::Out2, 0.0, &medium, &pulse, None),
            Err(Error::MissingSplitter(Port::Out2))
        );
    }

    #[test]
    fn correlation_reference_points() {
        let p = SpmPoint::with_total_phase(1.3, 0.0);
        let c = quad_correlation(X_IN, 0.4, &p, 1.0, None).unwrap();
        assert_eq!(c.smooth, 0.0);
        assert_eq!(c.delta_weight, 0.25);

        let p = SpmPoint::with_total_phase(1.0, FRAC_PI_4);
        let c = quad_correlation(X_IN, 0.0, &p, 1.0, None).unwrap();
        assert_abs_diff_eq!(c.smooth, -0.125, epsilon = 1e-15);
    }

    #[test]
    fn full_reflection_swaps_correlation_axes() {
        let full = BeamSplitter::new(1.0).unwrap();
        let p = SpmPoint::with_total_phase(1.7, 0.4);
        for tau in [0.0, 0.3, -2.0] {
            let out = quad_correlation(X1, tau, &p, 1.0, Some(&full)).unwrap();
            let inp = quad_correlation(Y_IN, tau, &p, 1.0, None).unwrap();
            assert_abs_diff_eq!(out.smooth, inp.smooth, epsilon = 1e-15);
        }
    }

    #[test]
    fn printed_correlations_differ_only_where_expected() {
        let bs = BeamSplitter::new(0.3).unwrap();
        let p = SpmPoint::with_total_phase(1.2, 0.7);
        for sel in QuadratureSelector::ALL {
            let fixed = quad_correlation(sel, 0.2, &p, 1.0, Some(&bs)).unwrap();
            let printed = quad_correlation_as_printed(sel, 0.2, &p, 1.0, Some(&bs)).unwrap();
            let same = matches!(sel.label(), "S_X" | "S_Y" | "S_X1" | "S_Y2");
            assert_eq!(fixed == printed, same, "{}", sel.label());
        }
    }

    #[test]
    fn vacuum_level_without_nonlinearity() {
        let p = SpmPoint::new(0.0, PhaseMode::Explicit(0.9));
        for sel in QuadratureSelector::ALL {
            assert_eq!(spec(sel, 0.7, &p, 0.3), 0.25);
        }
    }

    #[test]
    fn optimal_phase_spectra_at_omega0() {
        // ψL(Ω₀) = 1 for ψ = 2, Ω₀ = 1.
        let p = SpmPoint::new(2.0, PhaseMode::OptimalAt(1.0));
        let sx = quad_spectrum(X_IN, 1.0, &p, None).unwrap().value;
        let sy = quad_spectrum(Y_IN, 1.0, &p, None).unwrap().value;
        assert_abs_diff_eq!(sx, 0.042_893_2, epsilon = 1e-7);
        assert_abs_diff_eq!(sy, 1.457_106_8, epsilon = 1e-7);
        assert_abs_diff_eq!(sx * sy, 1.0 / 16.0, epsilon = 1e-15);
    }

    #[test]
    fn balanced_splitter_halves_squeezing_on_y1() {
        let p = SpmPoint::new(1.0, PhaseMode::OptimalAt(0.0));
        assert_abs_diff_eq!(spec(Y1, 0.0, &p, 0.5), 0.146_446_6, epsilon = 1e-7);
    }

    #[test]
    fn missing_splitter_is_an_error() {
        let p = SpmPoint::new(1.0, PhaseMode::OptimalAt(0.0));
        assert_eq!(
            quad_spectrum(Y1, 0.0, &p, None),
            Err(Error::MissingSplitter(Port::Out1))
        );
        assert!(quad_spectrum(X_IN, f64::NAN, &p, None).is_err());
    }

    #[test]
    fn printed_forms_reference_points() {
        // Input, Ω = Ω₀, ψL = 1.
        let v = paper_optimal_forms(X_IN, 0.0, 0.0, 1.0, None).unwrap();
        assert_abs_diff_eq!(v, 0.042_893_2, epsilon = 1e-7);

        // Output 1 at R = 1: ¼[(√2 − 1)² − 1].
        let full = BeamSplitter::new(1.0).unwrap();
        let v = paper_optimal_forms(Y1, 0.0, 0.0, 1.0, Some(&full)).unwrap();
        assert_abs_diff_eq!(
            v,
            0.25 * ((2f64.sqrt() - 1.0).powi(2) - 1.0),
            epsilon = 1e-15
        );
        assert!(v < 0.0);

        for sel in QuadratureSelector::ALL {
            let bs = BeamSplitter::new(0.4).unwrap();
            assert_abs_diff_eq!(
                paper_optimal_forms(sel, 1.3, 0.0, 0.0, Some(&bs)).unwrap(),
                0.25,
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn substitution_matches_general_form() {
        let bs = BeamSplitter::new(0.37).unwrap();
        for psi in [0.0, 0.3, 2.0, 7.5] {
            for (omega, omega0) in [(0.0, 0.0), (1.2, 0.0), (0.5, 1.0), (4.0, 2.5)] {
                let p = SpmPoint::new(psi, PhaseMode::OptimalAt(omega0));
                for sel in QuadratureSelector::ALL {
                    let general = spec(sel, omega, &p, 0.37);
                    let sub = optimal_substitution(sel, omega, omega0, psi, Some(&bs)).unwrap();
                    assert_abs_diff_eq!(general, sub, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn explicit_phase_example() {
        // Φ = π/8 with ψ = 1 is also the Ω₀ = 0 optimum.
        let p = SpmPoint::with_total_phase(1.0, FRAC_PI_8);
        let v = quad_spectrum(X_IN, 0.0, &p, None).unwrap().value;
        assert_abs_diff_eq!(
            v,
            0.25 * (1.0 - 2f64.sqrt() + 4.0 * FRAC_PI_8.sin().powi(2)),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(v, 0.042_893_2, epsilon = 1e-7);
    }

    fn point_strategy() -> impl Strategy<Value = (f64, f64, f64, f64)> {
        (0.0f64..10.0, -PI..PI, 0.0f64..10.0, 0.0f64..=1.0)
    }

    proptest! {
        #[test]
        fn spectra_are_non_negative((psi, phi, omega, r) in point_strategy()) {
            let p = SpmPoint::with_total_phase(psi, phi);
            for sel in QuadratureSelector::ALL {
                prop_assert!(spec(sel, omega, &p, r) >= -1e-13);
            }
        }

        #[test]
        fn vacuum_mixing((psi, phi, omega, r) in point_strategy()) {
            let p = SpmPoint::with_total_phase(psi, phi);
            let t = 1.0 - r;
            let ex = spec(X_IN, omega, &p, r) - 0.25;
            let ey = spec(Y_IN, omega, &p, r) - 0.25;
            let tol = 1e-12 * (1.0 + psi * psi);
            prop_assert!((spec(Y1, omega, &p, r) - 0.25 - r * ex).abs() <= tol);
            prop_assert!((spec(X1, omega, &p, r) - 0.25 - r * ey).abs() <= tol);
            prop_assert!((spec(X2, omega, &p, r) - 0.25 - t * ex).abs() <= tol);
            prop_assert!((spec(Y2, omega, &p, r) - 0.25 - t * ey).abs() <= tol);
        }

        #[test]
        fn excess_noise_is_additive((psi, phi, omega, r) in point_strategy()) {
            let p = SpmPoint::with_total_phase(psi, phi);
            let a2 = (psi * lorentzian(omega).unwrap()).powi(2);
            let tol = 1e-12 * (1.0 + psi * psi);
            prop_assert!((spec(X_IN, omega, &p, r) + spec(Y_IN, omega, &p, r) - 0.5 - a2).abs() <= tol);
            prop_assert!((spec(X1, omega, &p, r) + spec(Y1, omega, &p, r) - 0.5 - r * a2).abs() <= tol);
            prop_assert!((spec(X2, omega, &p, r) + spec(Y2, omega, &p, r) - 0.5 - (1.0 - r) * a2).abs() <= tol);
        }

        #[test]
        fn full_reflection_swaps_axes((psi, phi, omega, _r) in point_strategy()) {
            let p = SpmPoint::with_total_phase(psi, phi);
            prop_assert_eq!(spec(X1, omega, &p, 1.0), spec(Y_IN, omega, &p, 1.0));
            prop_assert_eq!(spec(Y1, omega, &p, 1.0), spec(X_IN, omega, &p, 1.0));
        }

        #[test]
        fn mean_quadrature_power_is_conserved(
            n0 in 0.0f64..500.0,
            t in -2.0f64..2.0,
            phi1 in -PI..PI,
            phi2 in -PI..PI,
            r in 0.0f64..=1.0,
        ) {
            let medium = MediumParams::new(0.01, 0.01).unwrap();
            let pulse = PulseState::new(n0, 1.0, phi1, phi2, Default::default()).unwrap();
            let bs = BeamSplitter::new(r).unwrap();
            let (x1, y1) = mean_quadratures(Port::Out1, t, &medium, &pulse, Some(&bs)).unwrap();
            let (x2, y2) = mean_quadratures(Port::Out2, t, &medium, &pulse, Some(&bs)).unwrap();
            let expected = 2.0 * pulse.mean_rate(t) * (-2.0 * damping_mu(t, &medium, &pulse)).exp();
            prop_assert!((x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2 - expected).abs() <= 1e-12 * (1.0 + expected));
        }
    }
}
