//! Audit of the printed optimal-phase closed forms against direct
//! substitution of the optimal phase into the general spectra.

use serde::{Deserialize, Serialize};

use super::{transform_correlation, QuadratureScheme};
use crate::error::Result;
use crate::pulse::{lorentzian, BeamSplitter, PhaseMode};
use crate::quadrature::{
    paper_optimal_forms, quad_correlation_as_printed, quad_spectrum, Axis, Port,
    QuadratureSelector, SpmPoint,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuditLocation {
    pub omega: f64,
    pub psi: f64,
    /// Total phase `Φ`.
    pub phase: f64,
    pub reflectance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub max_abs_err: f64,
    pub argmax_location: Option<AuditLocation>,
    pub tolerance: f64,
    pub pass: bool,
}

impl AuditReport {
    pub fn from_samples<I>(samples: I, tolerance: f64) -> Self
    where
        I: IntoIterator<Item = (f64, AuditLocation)>,
    {
        let mut max_abs_err = 0.0;
        let mut argmax_location = None;
        for (err, loc) in samples {
            // NaN must not hide behind the comparison.
            if err.is_nan() || argmax_location.is_none() || err > max_abs_err {
                max_abs_err = err;
                argmax_location = Some(loc);
                if err.is_nan() {
                    break;
                }
            }
        }
        Self {
            max_abs_err,
            argmax_location,
            tolerance,
            pass: max_abs_err <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditGrid {
    pub psi: Vec<f64>,
    pub omega: Vec<f64>,
    pub omega0: Vec<f64>,
    pub reflectance: Vec<f64>,
}

impl Default for AuditGrid {
    /// `ψ ∈ [0, 10]` in steps of 0.1, a handful of frequencies and
    /// reflectances including the full-reflection case.
    fn default() -> Self {
        Self {
            psi: (0..=100).map(|i| i as f64 * 0.1).collect(),
            omega: vec![0.0, 0.5, 1.0, 2.0, 5.0],
            omega0: vec![0.0, 1.0],
            reflectance: vec![0.0, 0.25, 0.5, 0.75, 1.0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PaperFormFamily {
    /// Minimum-noise input forms at `Ω = Ω₀`.
    InputOptimal,
    /// Input forms continued to any `Ω`.
    InputGeneral,
    Output1,
    Output2,
}

impl PaperFormFamily {
    pub const ALL: [PaperFormFamily; 4] = [
        Self::InputOptimal,
        Self::InputGeneral,
        Self::Output1,
        Self::Output2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::InputOptimal => "input_optimal",
            Self::InputGeneral => "input_general",
            Self::Output1 => "output1",
            Self::Output2 => "output2",
        }
    }

    /// Only the input forms at `Ω₀` survive substitution.
    pub fn expected_to_agree(&self) -> bool {
        matches!(self, Self::InputOptimal)
    }

    fn port(&self) -> Port {
        match self {
            Self::InputOptimal | Self::InputGeneral => Port::Input,
            Self::Output1 => Port::Out1,
            Self::Output2 => Port::Out2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Agree,
    DocumentedDiscrepancy,
    /// Expected agreement was not found.
    Failure,
    /// A known discrepancy vanished; the audit or a formula changed.
    UnexpectedAgreement,
}

impl Classification {
    pub fn of(expected_to_agree: bool, pass: bool) -> Self {
        match (expected_to_agree, pass) {
            (true, true) => Self::Agree,
            (false, false) => Self::DocumentedDiscrepancy,
            (true, false) => Self::Failure,
            (false, true) => Self::UnexpectedAgreement,
        }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, Self::Agree | Self::DocumentedDiscrepancy)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyAudit {
    pub family: String,
    pub classification: Classification,
    pub report: AuditReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaperFormAudit {
    pub grid: AuditGrid,
    pub families: Vec<FamilyAudit>,
}

impl PaperFormAudit {
    pub fn family(&self, family: PaperFormFamily) -> Option<&FamilyAudit> {
        self.families.iter().find(|f| f.family == family.name())
    }
}

fn family_samples(family: PaperFormFamily, grid: &AuditGrid) -> Result<Vec<(f64, AuditLocation)>> {
    let port = family.port();
    let reflectances: &[f64] = if port == Port::Input {
        &[1.0]
    } else {
        &grid.reflectance
    };
    let mut samples = Vec::new();
    for &omega0 in &grid.omega0 {
        let omegas: Vec<f64> = match family {
            PaperFormFamily::InputOptimal => vec![omega0],
            _ => std::iter::once(omega0)
                .chain(grid.omega.iter().copied())
                .collect(),
        };
        for &r in reflectances {
            let bs = BeamSplitter::new(r)?;
            for &psi in &grid.psi {
                let point = SpmPoint::new(psi, PhaseMode::OptimalAt(omega0));
                for &omega in &omegas {
                    for axis in [Axis::X, Axis::Y] {
                        let sel = QuadratureSelector::new(axis, port);
                        let printed = paper_optimal_forms(sel, omega, omega0, psi, Some(&bs))?;
                        let substituted = quad_spectrum(sel, omega, &point, Some(&bs))?.value;
                        samples.push((
                            (printed - substituted).abs(),
                            AuditLocation {
                                omega,
                                psi,
                                phase: point.total_phase(),
                                reflectance: r,
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(samples)
}

/// Tabulates `|printed − substituted|` per family over `grid`.
pub fn audit_paper_forms(grid: &AuditGrid, tolerance: f64) -> Result<PaperFormAudit> {
    let families = PaperFormFamily::ALL
        .iter()
        .map(|&family| {
            let report = AuditReport::from_samples(family_samples(family, grid)?, tolerance);
            Ok(FamilyAudit {
                family: family.name().to_owned(),
                classification: Classification::of(family.expected_to_agree(), report.pass),
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PaperFormAudit {
        grid: grid.clone(),
        families,
    })
}

/// Transforms the as-printed `Y1` and `X2` correlations (with `cos²Φ₁` on
/// the `g` term) and compares with the closed-form spectra. A discrepancy
/// is the expected outcome.
pub fn audit_printed_correlations(
    scheme: &QuadratureScheme,
    tolerance: f64,
) -> Result<FamilyAudit> {
    let selectors = [
        QuadratureSelector::new(Axis::Y, Port::Out1),
        QuadratureSelector::new(Axis::X, Port::Out2),
    ];
    let mut samples = Vec::new();
    for &r in &[0.3, 0.5, 1.0] {
        let bs = BeamSplitter::new(r)?;
        for &psi in &[0.5, 2.0] {
            for &phase in &[0.2, 1.1] {
                let point = SpmPoint::with_total_phase(psi, phase);
                for &omega in &[0.0, 1.0] {
                    lorentzian(omega)?;
                    for sel in selectors {
                        let via_ft = transform_correlation(
                            |tau| quad_correlation_as_printed(sel, tau, &point, 1.0, Some(&bs)),
                            omega,
                            1.0,
                            scheme,
                        )?;
                        let closed = quad_spectrum(sel, omega, &point, Some(&bs))?.value;
                        samples.push((
                            (via_ft - closed).abs(),
                            AuditLocation {
                                omega,
                                psi,
                                phase,
                                reflectance: r,
                            },
                        ));
                    }
                }
            }
        }
    }
    let report = AuditReport::from_samples(samples, tolerance);
    Ok(FamilyAudit {
        family: "printed_correlations".to_owned(),
        classification: Classification::of(false, report.pass),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn default_grid_classification() {
        let audit = audit_paper_forms(&AuditGrid::default(), 1e-12).unwrap();
        let input = audit.family(PaperFormFamily::InputOptimal).unwrap();
        assert_eq!(input.classification, Classification::Agree);
        assert!(input.report.max_abs_err <= 1e-12);
        for family in [
            PaperFormFamily::InputGeneral,
            PaperFormFamily::Output1,
            PaperFormFamily::Output2,
        ] {
            let f = audit.family(family).unwrap();
            assert_eq!(
                f.classification,
                Classification::DocumentedDiscrepancy,
                "{}",
                f.family
            );
        }
    }

    #[test]
    fn single_point_deviation_at_full_reflection() {
        let grid = AuditGrid {
            psi: vec![1.0],
            omega: vec![],
            omega0: vec![0.0],
            reflectance: vec![1.0],
        };
        let audit = audit_paper_forms(&grid, 1e-12).unwrap();
        let out1 = audit.family(PaperFormFamily::Output1).unwrap();
        // printed ¼[(√2−1)² − 1] against substituted ¼(√2−1)².
        assert_abs_diff_eq!(out1.report.max_abs_err, 0.25, epsilon = 1e-12);
        // Output 2 at T = 0 is pure vacuum either way.
        let out2 = audit.family(PaperFormFamily::Output2).unwrap();
        assert!(out2.report.pass);
    }

    #[test]
    fn zero_reflection_output1_agrees() {
        let grid = AuditGrid {
            reflectance: vec![0.0],
            ..AuditGrid::default()
        };
        let audit = audit_paper_forms(&grid, 1e-12).unwrap();
        assert!(audit.family(PaperFormFamily::Output1).unwrap().report.pass);
    }

    #[test]
    fn agreement_only_at_zero_and_two_thirds() {
        for (r, agrees) in [(0.0, true), (2.0 / 3.0, true), (0.5, false), (1.0, false)] {
            let grid = AuditGrid {
                psi: vec![0.4, 1.3, 6.0],
                omega: vec![],
                omega0: vec![0.0, 1.0],
                reflectance: vec![r],
            };
            let audit = audit_paper_forms(&grid, 1e-12).unwrap();
            assert_eq!(
                audit.family(PaperFormFamily::Output1).unwrap().report.pass,
                agrees,
                "R={r}"
            );
        }
    }

    #[test]
    fn printed_correlations_miss_printed_spectra() {
        let audit = audit_printed_correlations(&QuadratureScheme::default(), 1e-6).unwrap();
        assert_eq!(audit.classification, Classification::DocumentedDiscrepancy);
        assert!(audit.report.max_abs_err > 0.1);
    }

    #[test]
    fn report_serializes() {
        let report = AuditReport::from_samples(
            [(
                0.5,
                AuditLocation {
                    omega: 0.0,
                    psi: 1.0,
                    phase: 0.3,
                    reflectance: 1.0,
                },
            )],
            0.1,
        );
        let json = serde_json::to_value(report).unwrap();
        assert_eq!(json["pass"], false);
        assert_eq!(json["argmax_location"]["reflectance"], 1.0);
    }
}
