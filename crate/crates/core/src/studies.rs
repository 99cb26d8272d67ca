//! Parameter sweeps and convergence studies built from the core operations.
//! Independent runs are evaluated through an [`Execution`] policy; results
//! always come back in input order.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{moments, ParamCurve};
use crate::liegroup::{act, holonomy, magnus_terms};
use crate::planimeter::lift;

/// `n` equally spaced angles in `[0, 2π)`.
pub fn angle_grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| TAU * k as f64 / n as f64).collect()
}

/// One rod length of an l-sweep over a closed tracer loop.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub l: f64,
    pub theta0: f64,
    pub delta_theta: f64,
    /// Enclosed area from the boundary moments.
    pub area: f64,
    /// `l² Δθ`
    pub area_angle: f64,
    /// `l · d`
    pub area_chord: f64,
    /// `|l d − l² Δθ|`
    pub chord_gap: f64,
    /// `|l² Δθ − A|`
    pub angle_error: f64,
    /// `|Δθ − Δθ_predicted|` for the four-term Magnus prediction.
    pub magnus_residual: f64,
}

pub fn l_sweep(
    curve: &ParamCurve,
    theta0: f64,
    ls: &[f64],
    steps: usize,
    samples: usize,
    exec: Execution,
) -> Result<Vec<SweepRow>> {
    let area = moments(curve, samples)?.area;
    exec.try_map(ls, |&l| {
        let path = lift(curve, theta0, l, steps)?;
        let predicted = magnus_terms(curve, l, samples)?.predicted_delta_theta(theta0);
        let dt = path.delta_theta();
        let (aa, ac) = (path.area_estimate_angle(), path.area_estimate_chord());
        Ok(SweepRow {
            l,
            theta0,
            delta_theta: dt,
            area,
            area_angle: aa,
            area_chord: ac,
            chord_gap: (ac - aa).abs(),
            angle_error: (aa - area).abs(),
            magnus_residual: (dt - predicted).abs(),
        })
    })
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::invalid("a slope needs at least two points"));
    }
    if xs.iter().chain(ys).any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(Error::NonFinite("log-log slope of non-positive data"));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

/// Log-log slopes of the three error columns of a sweep against `l`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSlopes {
    pub chord_gap: f64,
    pub angle_error: f64,
    pub magnus_residual: f64,
}

pub fn sweep_slopes(rows: &[SweepRow]) -> Result<SweepSlopes> {
    let ls: Vec<f64> = rows.iter().map(|r| r.l).collect();
    let col = |f: fn(&SweepRow) -> f64| rows.iter().map(f).collect::<Vec<_>>();
    Ok(SweepSlopes {
        chord_gap: loglog_slope(&ls, &col(|r| r.chord_gap))?,
        angle_error: loglog_slope(&ls, &col(|r| r.angle_error))?,
        magnus_residual: loglog_slope(&ls, &col(|r| r.magnus_residual))?,
    })
}

/// Rod rotation at one initial angle from the lift, the group holonomy and
/// the Magnus prediction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AgreementRow {
    pub theta0: f64,
    pub lift: f64,
    pub holonomy: f64,
    pub magnus: f64,
}

impl AgreementRow {
    /// `|holonomy − lift|`
    pub fn mismatch(&self) -> f64 {
        (self.holonomy - self.lift).abs()
    }
}

pub fn holonomy_agreement(
    curve: &ParamCurve,
    l: f64,
    steps: usize,
    samples: usize,
    angles: &[f64],
    exec: Execution,
) -> Result<Vec<AgreementRow>> {
    let g = holonomy(curve, l, steps)?;
    let terms = magnus_terms(curve, l, samples)?;
    exec.try_map(angles, |&th| {
        Ok(AgreementRow {
            theta0: th,
            lift: lift(curve, th, l, steps)?.delta_theta(),
            holonomy: act(&g, th) - th,
            magnus: terms.predicted_delta_theta(th),
        })
    })
}

/// Errors of the lifted `θ(T)` at each step count against a run with
/// `oracle_steps`.
pub fn lift_errors(
    curve: &ParamCurve,
    theta0: f64,
    l: f64,
    steps: &[usize],
    oracle_steps: usize,
    exec: Execution,
) -> Result<Vec<f64>> {
    let reference = lift(curve, theta0, l, oracle_steps)?.last().theta;
    exec.try_map(steps, |&n| {
        Ok((lift(curve, theta0, l, n)?.last().theta - reference).abs())
    })
}

/// Errors of `act(Γ(T), θ0)` at each step count against a run with
/// `oracle_steps`.
pub fn holonomy_errors(
    curve: &ParamCurve,
    theta0: f64,
    l: f64,
    steps: &[usize],
    oracle_steps: usize,
    exec: Execution,
) -> Result<Vec<f64>> {
    let reference = act(&holonomy(curve, l, oracle_steps)?, theta0);
    exec.try_map(steps, |&n| {
        Ok((act(&holonomy(curve, l, n)?, theta0) - reference).abs())
    })
}

/// Ratios of consecutive errors.
pub fn ratios(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| w[0] / w[1]).collect()
}
