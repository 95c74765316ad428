//! Closed forms against numerical transforms of the correlation functions at
//! seeded random parameter points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use squeezelab::oracle::{
    photon_spectrum_via_ft, quad_spectrum_via_ft, total_photon_numeric, QuadratureScheme, Rule,
};
use squeezelab::{
    photon_spectrum, quad_spectrum, BeamSplitter, Envelope, InterferencePoint, MeasurementWindow,
    Output, PulseState, QuadratureSelector, SpmPoint,
};

const FT_TOL: f64 = 1e-6;

#[test]
fn quadrature_spectra_match_transform() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let scheme = QuadratureScheme::default();
    for _ in 0..40 {
        let psi = rng.random_range(0.0..10.0);
        let phase = rng.random_range(-3.2..3.2);
        let omega = rng.random_range(0.0..5.0);
        let tau_r = rng.random_range(0.2..3.0);
        let bs = BeamSplitter::new(rng.random_range(0.0..=1.0)).unwrap();
        let point = SpmPoint::with_total_phase(psi, phase);
        for sel in QuadratureSelector::ALL {
            let closed = quad_spectrum(sel, omega, &point, Some(&bs)).unwrap().value;
            let ft = quad_spectrum_via_ft(sel, omega, &point, tau_r, Some(&bs), &scheme)
                .unwrap()
                .value;
            assert!(
                (closed - ft).abs() <= FT_TOL,
                "{} psi={psi} phase={phase} omega={omega}: {closed} vs {ft}",
                sel.label()
            );
        }
    }
}

#[test]
fn gauss_legendre_agrees_with_simpson() {
    let simpson = QuadratureScheme::default();
    let gl = QuadratureScheme::new(50.0, 1e-9, Rule::GaussLegendreComposite).unwrap();
    let bs = BeamSplitter::balanced();
    for &(psi, phase, omega) in &[(1.0, 0.3, 0.0), (4.0, -1.2, 2.5), (9.5, 2.0, 4.0)] {
        let point = SpmPoint::with_total_phase(psi, phase);
        for sel in QuadratureSelector::ALL {
            let a = quad_spectrum_via_ft(sel, omega, &point, 1.0, Some(&bs), &simpson).unwrap();
            let b = quad_spectrum_via_ft(sel, omega, &point, 1.0, Some(&bs), &gl).unwrap();
            assert!((a.value - b.value).abs() <= FT_TOL);
        }
    }
}

#[test]
fn photon_spectra_match_transform() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let scheme = QuadratureScheme::default();
    let pulse = PulseState::gaussian(50.0, 20.0).unwrap();
    for _ in 0..30 {
        let point = InterferencePoint {
            psi: rng.random_range(0.0..6.0),
            delta_phi: rng.random_range(-3.2..3.2),
            mean_rate: 50.0,
            total_photons: squeezelab::total_photon_input(&pulse),
        };
        let window = MeasurementWindow::from_ratio(rng.random_range(0.01..0.2), &pulse).unwrap();
        let bs = BeamSplitter::new(rng.random_range(0.0..=1.0)).unwrap();
        let omega = rng.random_range(0.0..3.0);
        for port in Output::BOTH {
            let closed = photon_spectrum(port, omega, &point, &window, &bs).unwrap();
            let ft =
                photon_spectrum_via_ft(port, omega, &point, &window, &bs, 1.0, &scheme).unwrap();
            // Relative to the rate, which sets the scale of the excess.
            assert!(
                (closed - ft).abs() <= FT_TOL * point.mean_rate,
                "{port:?}: {closed} vs {ft}"
            );
        }
    }
}

#[test]
fn refining_the_tolerance_does_not_increase_error() {
    let bs = BeamSplitter::new(0.3).unwrap();
    let point = SpmPoint::with_total_phase(7.0, 0.9);
    let mut scheme = QuadratureScheme::new(50.0, 1e-4, Rule::AdaptiveSimpson).unwrap();
    for sel in QuadratureSelector::ALL {
        let exact = quad_spectrum(sel, 1.5, &point, Some(&bs)).unwrap().value;
        let mut previous = f64::INFINITY;
        for _ in 0..5 {
            let err = (quad_spectrum_via_ft(sel, 1.5, &point, 1.0, Some(&bs), &scheme)
                .unwrap()
                .value
                - exact)
                .abs();
            // Allow roundoff once the error is negligible.
            assert!(
                err <= previous.max(1e-11),
                "{}: {err} > {previous}",
                sel.label()
            );
            assert!(err <= scheme.tol * 10.0);
            previous = err;
            scheme = scheme.refined();
        }
        scheme = QuadratureScheme::new(50.0, 1e-4, Rule::AdaptiveSimpson).unwrap();
    }
}

#[test]
fn flat_envelope_total_is_quasi_static() {
    let pulse = PulseState::new(10.0, 5.0, 0.0, 0.0, Envelope::Flat).unwrap();
    let scheme = QuadratureScheme::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let psi0: f64 = rng.random_range(0.0..30.0);
        let dphi = rng.random_range(-3.2..3.2);
        let bs = BeamSplitter::new(rng.random_range(0.0..=1.0)).unwrap();
        let expected = 1.0 - 2.0 * bs.mixing_amplitude() * (psi0 + dphi).sin();
        let numeric = total_photon_numeric(psi0, dphi, &bs, &pulse, &scheme).unwrap();
        assert!(
            (numeric - expected).abs() <= 1e-9,
            "{numeric} vs {expected}"
        );
    }
}
