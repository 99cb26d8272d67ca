//! Sub-Riemannian geodesics on the planimeter configuration space and a
//! constructive motion planner.
//!
//! The horizontal fields `X = ∂x + (sin θ / l) ∂θ`, `Y = ∂y − (cos θ / l) ∂θ`
//! are declared orthonormal. With `P_X`, `P_Y` the momenta along them the
//! normal geodesics are the flow of `H = ½ (P_X² + P_Y²)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{CurveSpec, Orientation, ParamCurve, Vec2};
use crate::planimeter::{lift, wrap_angle, Config};

/// A point of the cotangent bundle of configuration space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CotangentState {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub px: f64,
    pub py: f64,
    pub ptheta: f64,
    pub l: f64,
}

impl CotangentState {
    fn to_array(self) -> [f64; 6] {
        [self.x, self.y, self.theta, self.px, self.py, self.ptheta]
    }

    fn from_array(s: [f64; 6], l: f64) -> Self {
        CotangentState {
            x: s[0],
            y: s[1],
            theta: s[2],
            px: s[3],
            py: s[4],
            ptheta: s[5],
            l,
        }
    }

    /// Momenta along the horizontal fields `X` and `Y`.
    pub fn horizontal_momenta(&self) -> (f64, f64) {
        let (s, c) = self.theta.sin_cos();
        (
            self.px + s * self.ptheta / self.l,
            self.py - c * self.ptheta / self.l,
        )
    }

    pub fn config(&self) -> Config {
        Config::new(self.x, self.y, self.theta, self.l)
    }

    /// `θ'` along the flow.
    pub fn theta_rate(&self) -> f64 {
        rhs(&self.to_array(), self.l)[2]
    }
}

/// `H = ½ (p_x² + p_y² + p_θ²/l²) + (sin θ p_x − cos θ p_y) p_θ / l`.
pub fn hamiltonian(s: &CotangentState) -> f64 {
    let (sn, c) = s.theta.sin_cos();
    let l = s.l;
    0.5 * (s.px * s.px + s.py * s.py + s.ptheta * s.ptheta / (l * l))
        + (sn * s.px - c * s.py) * s.ptheta / l
}

/// `H = ½ (P_X² + P_Y²)`.
pub fn hamiltonian_horizontal(s: &CotangentState) -> f64 {
    let (a, b) = s.horizontal_momenta();
    0.5 * (a * a + b * b)
}

fn rhs(s: &[f64; 6], l: f64) -> [f64; 6] {
    let [_, _, th, px, py, pt] = *s;
    let (sn, c) = th.sin_cos();
    [
        px + sn * pt / l,
        py - c * pt / l,
        pt / (l * l) + (sn * px - c * py) / l,
        0.0,
        0.0,
        -(c * px + sn * py) * pt / l,
    ]
}

fn rk4<const N: usize>(y: &[f64; N], h: f64, f: impl Fn(&[f64; N]) -> [f64; N]) -> [f64; N] {
    let add = |a: &[f64; N], k: &[f64; N], s: f64| std::array::from_fn(|i| a[i] + s * k[i]);
    let k1 = f(y);
    let k2 = f(&add(y, &k1, 0.5 * h));
    let k3 = f(&add(y, &k2, 0.5 * h));
    let k4 = f(&add(y, &k3, h));
    std::array::from_fn(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicSample {
    pub t: f64,
    pub state: CotangentState,
}

/// A sampled normal geodesic.
#[derive(Debug, Clone)]
pub struct Trajectory {
    samples: Vec<GeodesicSample>,
}

/// Integrates the Hamiltonian system from `s0` over `[0, duration]` with
/// `steps` RK4 steps.
pub fn geodesic(s0: &CotangentState, duration: f64, steps: usize) -> Result<Trajectory> {
    if steps == 0 {
        return Err(Error::invalid("steps must be at least 1"));
    }
    if !(s0.l.is_finite() && s0.l > 0.0) {
        return Err(Error::invalid("rod length must be positive"));
    }
    if !(duration.is_finite() && duration >= 0.0) {
        return Err(Error::invalid("duration must be non-negative"));
    }
    let h = duration / steps as f64;
    let l = s0.l;
    let mut y = s0.to_array();
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(GeodesicSample { t: 0.0, state: *s0 });
    for k in 1..=steps {
        y = rk4(&y, h, |s| rhs(s, l));
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("geodesic"));
        }
        samples.push(GeodesicSample {
            t: if k == steps { duration } else { k as f64 * h },
            state: CotangentState::from_array(y, l),
        });
    }
    Ok(Trajectory { samples })
}

impl Trajectory {
    pub fn samples(&self) -> &[GeodesicSample] {
        &self.samples
    }

    pub fn last(&self) -> &CotangentState {
        &self.samples[self.samples.len() - 1].state
    }

    /// Largest `|H(t) − H(0)|`.
    pub fn energy_drift(&self) -> f64 {
        let h0 = hamiltonian(&self.samples[0].state);
        self.samples
            .iter()
            .map(|s| (hamiltonian(&s.state) - h0).abs())
            .fold(0.0, f64::max)
    }

    /// Per-step integral of `η(γ')` along the cubic Hermite interpolant of
    /// the configuration, by Simpson. The vector field is horizontal, so the
    /// endpoint terms vanish and only the midpoint remains.
    pub fn horizontality_defects(&self) -> Vec<f64> {
        self.samples
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0].state, w[1].state);
                let l = a.l;
                let h = w[1].t - w[0].t;
                let (ya, yb) = (a.to_array(), b.to_array());
                let (fa, fb) = (rhs(&ya, l), rhs(&yb, l));
                let mid = |i: usize| 0.5 * (ya[i] + yb[i]) + h * (fa[i] - fb[i]) / 8.0;
                let dmid = |i: usize| 1.5 * (yb[i] - ya[i]) / h - 0.25 * (fa[i] + fb[i]);
                let (s, c) = mid(2).sin_cos();
                let eta = -s * dmid(0) + c * dmid(1) + l * dmid(2);
                (h / 6.0 * 4.0 * eta).abs()
            })
            .collect()
    }

    /// Step-doubling estimate of the local RK4 error, in the max norm over
    /// the configuration coordinates.
    pub fn local_error_estimates(&self) -> Vec<f64> {
        self.samples
            .windows(2)
            .map(|w| {
                let l = w[0].state.l;
                let h = w[1].t - w[0].t;
                let f = |s: &[f64; 6]| rhs(s, l);
                let two = rk4(&rk4(&w[0].state.to_array(), 0.5 * h, f), 0.5 * h, f);
                let one = w[1].state.to_array();
                (0..3).map(|i| (two[i] - one[i]).abs()).fold(0.0, f64::max)
            })
            .collect()
    }
}

/// Second derivative of `θ` along a normal geodesic, as a function of `θ`
/// alone: `θ'' = ((p_x² − p_y²) sin 2θ − 2 p_x p_y cos 2θ) / 2l²`.
pub fn reduced_theta_accel(theta: f64, px: f64, py: f64, l: f64) -> f64 {
    let (s2, c2) = (2.0 * theta).sin_cos();
    ((px * px - py * py) * s2 - 2.0 * px * py * c2) / (2.0 * l * l)
}

/// Integrates the reduced second-order equation for `θ` from `θ(0)`,
/// `θ'(0)` with RK4; returns `θ` at every step.
pub fn reduced_theta(
    theta0: f64,
    omega0: f64,
    px: f64,
    py: f64,
    l: f64,
    duration: f64,
    steps: usize,
) -> Result<Vec<f64>> {
    if steps == 0 {
        return Err(Error::invalid("steps must be at least 1"));
    }
    let h = duration / steps as f64;
    let mut y = [theta0, omega0];
    let mut out = Vec::with_capacity(steps + 1);
    out.push(theta0);
    for _ in 0..steps {
        y = rk4(&y, h, |s| [s[1], reduced_theta_accel(s[0], px, py, l)]);
        if !y[0].is_finite() {
            return Err(Error::NonFinite("reduced equation"));
        }
        out.push(y[0]);
    }
    Ok(out)
}

/// Parameters of the motion planner.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanOptions {
    /// Accepted final angle error, radians.
    pub tol: f64,
    pub max_loops: usize,
    /// Lift steps per executed curve.
    pub steps: usize,
}

impl Default for PlanOptions {
    fn default() -> Self {
        PlanOptions {
            tol: 1e-6,
            max_loops: 6,
            steps: 20_000,
        }
    }
}

/// An executed plan: tracer curves in order, lifted one after another.
#[derive(Debug, Clone)]
pub struct Plan {
    pub curves: Vec<ParamCurve>,
    /// Wrapped angle error after each curve.
    pub residuals: Vec<f64>,
    pub final_config: Config,
}

impl Plan {
    pub fn loops(&self) -> usize {
        self.curves
            .iter()
            .filter(|c| matches!(c.shape(), crate::geometry::Shape::Circle { .. }))
            .count()
    }

    pub fn report(&self) -> PlanReport {
        PlanReport {
            curves: self.curves.iter().map(CurveSpec::from).collect(),
            residuals: self.residuals.clone(),
            final_config: self.final_config,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanReport {
    pub curves: Vec<CurveSpec>,
    pub residuals: Vec<f64>,
    pub final_config: Config,
}

/// Lifts `curves` one after another from `from`, as a replay of a plan.
pub fn replay(from: &Config, curves: &[ParamCurve], steps: usize) -> Result<Config> {
    let mut c = *from;
    for curve in curves {
        c = *lift(curve, c.theta, c.l, steps)?.last();
    }
    Ok(c)
}

/// The full-circle tracer loop through `at` used to correct the angle.
fn correction_loop(at: Vec2, radius: f64, orientation: Orientation) -> Result<ParamCurve> {
    ParamCurve::circle_from(at - Vec2::new(radius, 0.0), radius, orientation, 0.0)
}

/// Drives the planimeter from `from` to `to`.
///
/// The tracer first runs straight to the target position. Then full circles
/// through the target position correct the rod angle: the radius of each is
/// found by bracketing and an Illinois false-position iteration on the lifted
/// rotation, starting from the area estimate `r = l √(|D| / π)` for the
/// deficit `D`. Angles are compared modulo `2π`.
pub fn plan(from: &Config, to: &Config, opts: &PlanOptions) -> Result<Plan> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    if from.l != to.l {
        return Err(Error::invalid(
            "rod lengths of the two configurations differ",
        ));
    }
    let l = from.l;
    let target = to.tracer();
    let residual = |c: &Config| wrap_angle(to.theta - c.theta);
    let mut curves = Vec::new();
    let mut residuals = Vec::new();
    let mut cur = *from;
    if from.tracer() != target {
        let seg = ParamCurve::segment(from.tracer(), target)?;
        cur = *lift(&seg, cur.theta, l, opts.steps)?.last();
        curves.push(seg);
        residuals.push(residual(&cur).abs());
    }
    let mut loops = 0;
    while residual(&cur).abs() > opts.tol {
        if loops == opts.max_loops {
            return Err(Error::Convergence {
                loops,
                residual: residual(&cur).abs(),
                best: cur,
            });
        }
        let deficit = residual(&cur);
        let orientation = if deficit > 0.0 {
            Orientation::Ccw
        } else {
            Orientation::Cw
        };
        let rotation = |r: f64| -> Result<(ParamCurve, Config)> {
            let c = correction_loop(target, r, orientation)?;
            let end = *lift(&c, cur.theta, l, opts.steps)?.last();
            Ok((c, end))
        };
        let (curve, end) =
            solve_radius(deficit, cur.theta, l, opts.tol, rotation).map_err(|e| match e {
                Error::Convergence { .. } => Error::Convergence {
                    loops,
                    residual: residual(&cur).abs(),
                    best: cur,
                },
                e => e,
            })?;
        cur = end;
        curves.push(curve);
        residuals.push(residual(&cur).abs());
        loops += 1;
    }
    Ok(Plan {
        curves,
        residuals,
        final_config: cur,
    })
}

/// Finds a loop radius whose lifted rotation equals `deficit`, given the
/// rod angle at the loop start.
fn solve_radius(
    deficit: f64,
    theta_start: f64,
    l: f64,
    tol: f64,
    rotation: impl Fn(f64) -> Result<(ParamCurve, Config)>,
) -> Result<(ParamCurve, Config)> {
    let goal = deficit.abs();
    let sign = deficit.signum();
    let g = |r: f64| -> Result<(f64, ParamCurve, Config)> {
        let (c, end) = rotation(r)?;
        Ok((sign * (end.theta - theta_start) - goal, c, end))
    };
    let failed = || Error::Convergence {
        loops: 0,
        residual: goal,
        best: Config::new(0.0, 0.0, theta_start, l),
    };

    let (mut lo, mut g_lo) = (0.0, -goal);
    let mut hi = l * (goal / PI).sqrt();
    let mut best = g(hi)?;
    let mut g_hi = best.0;
    let limit = 64.0 * l;
    while g_hi < 0.0 {
        lo = hi;
        g_lo = g_hi;
        hi *= 2.0;
        if hi > limit {
            return Err(failed());
        }
        best = g(hi)?;
        g_hi = best.0;
    }
    // Illinois false position
    let mut side = 0;
    for _ in 0..200 {
        if best.0.abs() <= 0.01 * tol || hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
        let r = (lo * g_hi - hi * g_lo) / (g_hi - g_lo);
        let cand = g(r)?;
        if cand.0.abs() < best.0.abs() {
            best = cand.clone();
        }
        if cand.0 > 0.0 {
            hi = r;
            g_hi = cand.0;
            if side == 1 {
                g_lo *= 0.5;
            }
            side = 1;
        } else {
            lo = r;
            g_lo = cand.0;
            if side == -1 {
                g_hi *= 0.5;
            }
            side = -1;
        }
    }
    Ok((best.1, best.2))
}

/// Plans every pair independently.
pub fn plan_batch(
    pairs: &[(Config, Config)],
    opts: &PlanOptions,
    exec: Execution,
) -> Vec<Result<Plan>> {
    exec.map(pairs, |(a, b)| plan(a, b, opts))
}
