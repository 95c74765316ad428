//! One-dimensional quadrature used by the oracle.
//!
//! The interval is first cut into `panels` equal pieces so that oscillatory
//! integrands are resolved before any adaptivity kicks in; each panel then
//! receives an equal share of the absolute tolerance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    #[default]
    AdaptiveSimpson,
    GaussLegendreComposite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    /// Estimated absolute error.
    pub error: f64,
}

const MAX_SIMPSON_DEPTH: u32 = 48;
const MAX_GL_DOUBLINGS: u32 = 14;

// Positive half of the 10-point Gauss-Legendre rule on [-1, 1].
const GL10: [(f64, f64); 5] = [
    (0.148_874_338_981_631_22, 0.295_524_224_714_753),
    (0.433_395_394_129_247_2, 0.269_266_719_309_996_5),
    (0.679_409_568_299_024_4, 0.219_086_362_515_982),
    (0.865_063_366_688_984_5, 0.149_451_349_150_580_36),
    (0.973_906_528_517_171_7, 0.066_671_344_308_688_07),
];

pub fn integrate<F>(f: F, a: f64, b: f64, panels: usize, tol: f64, rule: Rule) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    let panels = panels.max(1);
    match rule {
        Rule::AdaptiveSimpson => simpson(&f, a, b, panels, tol),
        Rule::GaussLegendreComposite => gauss_legendre(&f, a, b, panels, tol),
    }
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize, tol: f64) -> Result<Estimate> {
    let width = (b - a) / panels as f64;
    let panel_tol = tol / panels as f64;
    let mut total = Estimate {
        value: 0.0,
        error: 0.0,
    };
    let mut converged = true;
    for i in 0..panels {
        let lo = a + i as f64 * width;
        let hi = if i + 1 == panels { b } else { lo + width };
        let (flo, fhi, fmid) = (f(lo), f(hi), f(0.5 * (lo + hi)));
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        let mut acc = SimpsonAcc::default();
        simpson_step(
            f,
            lo,
            hi,
            flo,
            fmid,
            fhi,
            whole,
            panel_tol,
            MAX_SIMPSON_DEPTH,
            &mut acc,
        );
        total.value += acc.value;
        total.error += acc.error;
        converged &= acc.converged;
    }
    if converged && total.value.is_finite() {
        Ok(total)
    } else {
        Err(Error::NotConverged {
            tol,
            residual: total.error,
        })
    }
}

struct SimpsonAcc {
    value: f64,
    error: f64,
    converged: bool,
}

impl Default for SimpsonAcc {
    fn default() -> Self {
        Self {
            value: 0.0,
            error: 0.0,
            converged: true,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    acc: &mut SimpsonAcc,
) {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if !delta.is_finite() {
        acc.value = f64::NAN;
        acc.error = f64::INFINITY;
        acc.converged = false;
    } else if delta.abs() <= 15.0 * tol {
        acc.value += left + right + delta / 15.0;
        acc.error += delta.abs() / 15.0;
    } else if depth == 0 {
        acc.value += left + right + delta / 15.0;
        acc.error += delta.abs() / 15.0;
        acc.converged = false;
    } else {
        simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, acc);
        simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, acc);
    }
}

fn gl_sum<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let width = (b - a) / panels as f64;
    let half = 0.5 * width;
    (0..panels)
        .map(|i| {
            let centre = a + (i as f64 + 0.5) * width;
            GL10.iter()
                .map(|&(x, w)| w * (f(centre - half * x) + f(centre + half * x)))
                .sum::<f64>()
                * half
        })
        .sum()
}

fn gauss_legendre<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    panels: usize,
    tol: f64,
) -> Result<Estimate> {
    let mut n = panels;
    let mut coarse = gl_sum(f, a, b, n);
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_GL_DOUBLINGS {
        n *= 2;
        let fine = gl_sum(f, a, b, n);
        residual = (fine - coarse).abs();
        if residual <= tol {
            return Ok(Estimate {
                value: fine,
                error: residual,
            });
        }
        coarse = fine;
    }
    Err(Error::NotConverged { tol, residual })
}
