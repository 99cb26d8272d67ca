//! Horizontal lift of a tracer curve: the motion of the planimeter.
//!
//! With the tracer at `p = (x, y)` and the rod at angle `θ`, the chisel sits
//! at `q = p + l (cos θ, sin θ)` and may only move along the rod. That is the
//! constraint `η = −sin θ dx + cos θ dy + l dθ = 0`, so along a tracer curve
//!
//! ```text
//! θ' = (sin θ · x' − cos θ · y') / l.
//! ```
//!
//! [`lift`] integrates this with classical RK4 on a grid aligned with the
//! curve's kinks. The tracer position is always read from the curve.

use std::f64::consts::TAU;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{square_loop, Orientation, ParamCurve, Side, Vec2};
use crate::quadrature::simpson;

/// A planimeter configuration: tracer at `(x, y)`, rod angle `theta`
/// (unwrapped, radians), rod length `l`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub l: f64,
}

impl Config {
    pub fn new(x: f64, y: f64, theta: f64, l: f64) -> Self {
        Config { x, y, theta, l }
    }

    pub fn tracer(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    pub fn chisel(&self) -> Vec2 {
        chisel_of(self.tracer(), self.theta, self.l)
    }

    /// `theta` reduced to `(-π, π]`, for display.
    pub fn wrapped_theta(&self) -> f64 {
        wrap_angle(self.theta)
    }
}

pub(crate) fn chisel_of(p: Vec2, theta: f64, l: f64) -> Vec2 {
    Vec2::new(p.x + l * theta.cos(), p.y + l * theta.sin())
}

/// Reduces an angle to `(-π, π]`.
pub fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r > std::f64::consts::PI {
        r - TAU
    } else {
        r
    }
}

/// A tangent vector `dx ∂x + dy ∂y + dθ ∂θ` to configuration space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TangentVector {
    pub dx: f64,
    pub dy: f64,
    pub dtheta: f64,
}

impl TangentVector {
    pub fn new(dx: f64, dy: f64, dtheta: f64) -> Self {
        TangentVector { dx, dy, dtheta }
    }
}

/// The constraint one-form `η = −sin θ dx + cos θ dy + l dθ`.
pub fn eta(v: TangentVector, at: &Config) -> f64 {
    let (s, c) = at.theta.sin_cos();
    -s * v.dx + c * v.dy + at.l * v.dtheta
}

/// Vertical coefficient of the connection projection `Φ(v) = (η(v)/l) ∂θ`.
pub fn horizontal_project(v: TangentVector, at: &Config) -> f64 {
    eta(v, at) / at.l
}

/// `Φ(v)` as a tangent vector. `Φ∘Φ = Φ` and `ker Φ` is the horizontal
/// distribution.
pub fn project(v: TangentVector, at: &Config) -> TangentVector {
    TangentVector::new(0.0, 0.0, horizontal_project(v, at))
}

/// Horizontal lifts `X`, `Y` of `∂x`, `∂y` at a configuration.
pub fn lifted_fields(at: &Config) -> (TangentVector, TangentVector) {
    let (s, c) = at.theta.sin_cos();
    (
        TangentVector::new(1.0, 0.0, s / at.l),
        TangentVector::new(0.0, 1.0, -c / at.l),
    )
}

/// Right-hand side of the lift ODE for tracer velocity `v`.
#[inline]
pub fn theta_rate(theta: f64, v: Vec2, l: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    (s * v.x - c * v.y) / l
}

#[inline]
pub(crate) fn rk4_combine(y: f64, h: f64, k1: f64, k2: f64, k3: f64, k4: f64) -> f64 {
    y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
}

/// Inputs of one fixed RK4 step along a tracer curve.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RkStep {
    pub t0: f64,
    pub t1: f64,
    /// Tracer velocity at `t0` (right limit), midpoint, and `t1` (left limit).
    pub v0: Vec2,
    pub vm: Vec2,
    pub v1: Vec2,
    pub ends_piece: bool,
}

impl RkStep {
    pub fn h(&self) -> f64 {
        self.t1 - self.t0
    }
}

/// Walks the kink-aligned step grid of `curve`.
pub(crate) fn drive(
    curve: &ParamCurve,
    steps: usize,
    mut f: impl FnMut(&RkStep) -> Result<()>,
) -> Result<()> {
    if steps == 0 {
        return Err(Error::invalid("steps must be at least 1"));
    }
    for (piece, n) in curve.step_grid(steps) {
        for i in 0..n {
            let (t0, _) = piece.node(n, i);
            let (t1, _) = piece.node(n, i + 1);
            let tm = t0 + 0.5 * (t1 - t0);
            let step = RkStep {
                t0,
                t1,
                v0: curve.eval_unchecked(t0, Side::After).1,
                vm: curve.eval_unchecked(tm, Side::After).1,
                v1: curve.eval_unchecked(t1, Side::Before).1,
                ends_piece: i + 1 == n,
            };
            f(&step)?;
        }
    }
    Ok(())
}

/// One RK4 step of the lift ODE.
#[inline]
pub(crate) fn lift_step(theta: f64, step: &RkStep, l: f64) -> f64 {
    let h = step.h();
    let k1 = theta_rate(theta, step.v0, l);
    let k2 = theta_rate(theta + 0.5 * h * k1, step.vm, l);
    let k3 = theta_rate(theta + 0.5 * h * k2, step.vm, l);
    let k4 = theta_rate(theta + h * k3, step.v1, l);
    rk4_combine(theta, h, k1, k2, k3, k4)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub config: Config,
}

/// The lifted motion `t ↦ (p(t), θ(t))` along a tracer curve.
#[derive(Debug, Clone)]
pub struct PlanimeterPath {
    curve: Arc<ParamCurve>,
    l: f64,
    samples: Vec<Sample>,
    /// Inclusive sample ranges of the smooth pieces.
    pieces: Vec<(usize, usize)>,
}

/// Lifts `curve` starting from rod angle `theta0`.
///
/// `steps` is the nominal step count over the whole curve; it is split over
/// the smooth pieces (see [`ParamCurve::step_grid`]) so that no step
/// straddles a kink.
pub fn lift(curve: &ParamCurve, theta0: f64, l: f64, steps: usize) -> Result<PlanimeterPath> {
    lift_shared(Arc::new(curve.clone()), theta0, l, steps)
}

pub fn lift_shared(
    curve: Arc<ParamCurve>,
    theta0: f64,
    l: f64,
    steps: usize,
) -> Result<PlanimeterPath> {
    if !(l.is_finite() && l > 0.0) {
        return Err(Error::invalid("rod length must be positive"));
    }
    if !theta0.is_finite() {
        return Err(Error::invalid("initial angle must be finite"));
    }
    let p0 = curve.eval_unchecked(0.0, Side::After).0;
    let mut samples = vec![Sample {
        t: 0.0,
        config: Config::new(p0.x, p0.y, theta0, l),
    }];
    let mut pieces = Vec::new();
    let mut piece_start = 0;
    let mut theta = theta0;
    drive(&curve, steps, |step| {
        theta = lift_step(theta, step, l);
        let p = curve.eval_unchecked(step.t1, Side::After).0;
        if !(theta.is_finite() && p.is_finite()) {
            return Err(Error::NonFinite("lift"));
        }
        samples.push(Sample {
            t: step.t1,
            config: Config::new(p.x, p.y, theta, l),
        });
        if step.ends_piece {
            pieces.push((piece_start, samples.len() - 1));
            piece_start = samples.len() - 1;
        }
        Ok(())
    })?;
    Ok(PlanimeterPath {
        curve,
        l,
        samples,
        pieces,
    })
}

/// Rod angle pointing from `start` towards the boundary's starting point, or
/// 0 when they coincide.
pub fn outward_theta0(boundary: &ParamCurve, start: Vec2) -> f64 {
    let d = boundary.start() - start;
    if d.norm() == 0.0 {
        0.0
    } else {
        d.angle()
    }
}

impl PlanimeterPath {
    pub fn curve(&self) -> &ParamCurve {
        &self.curve
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    /// Number of integration steps actually taken.
    pub fn steps(&self) -> usize {
        self.samples.len() - 1
    }

    pub fn first(&self) -> &Config {
        &self.samples[0].config
    }

    pub fn last(&self) -> &Config {
        &self.samples[self.samples.len() - 1].config
    }

    /// `θ(T) − θ(0)`, with winding.
    pub fn delta_theta(&self) -> f64 {
        self.last().theta - self.first().theta
    }

    /// `l² Δθ`.
    pub fn area_estimate_angle(&self) -> f64 {
        self.l * self.l * self.delta_theta()
    }

    /// `l · ‖q(0) − q(T)‖`.
    pub fn area_estimate_chord(&self) -> f64 {
        self.l * (self.first().chisel() - self.last().chisel()).norm()
    }

    /// Tracer velocity, rod angular velocity and chisel velocity at sample
    /// `j`, read from the side of the piece the sample is integrated on.
    fn velocities(&self, j: usize, side: Side) -> (Vec2, f64, Vec2) {
        let s = &self.samples[j];
        let v = self.curve.eval_unchecked(s.t, side).1;
        let w = theta_rate(s.config.theta, v, self.l);
        let qdot = v + Vec2::from_angle(s.config.theta).perp() * (self.l * w);
        (v, w, qdot)
    }

    /// Composite Simpson over the stored grid of `f(sample, ṗ, θ', q̇)`.
    fn integrate(&self, f: impl Fn(&Config, Vec2, f64, Vec2) -> f64) -> f64 {
        let mut total = 0.0;
        for &(a, b) in &self.pieces {
            let values: Vec<f64> = (a..=b)
                .map(|j| {
                    let side = if j == b { Side::Before } else { Side::After };
                    let (v, w, qd) = self.velocities(j, side);
                    f(&self.samples[j].config, v, w, qd)
                })
                .collect();
            let h = (self.samples[b].t - self.samples[a].t) / (b - a) as f64;
            total += simpson(&values, h);
        }
        total
    }

    /// Signed area swept by the rod from tracer to chisel.
    ///
    /// The rod sweeps the ruled surface `X(t, s) = p + s (q − p)`; integrating
    /// its Jacobian over `s ∈ [0, 1]` gives `A = ∫ ½ det(ṗ + q̇, q − p) dt`.
    /// When the tracer curve is closed, the sweep is completed by pivoting the
    /// rod about `p(0)` back to its initial angle, so that both endpoint
    /// curves are closed and `A = A_p − A_q` holds with `A_q` from
    /// [`PlanimeterPath::chisel_closure_area`]. The pivot contributes
    /// `½ l² Δθ`.
    pub fn swept_area(&self) -> f64 {
        let open = self.integrate(|c, v, _, qd| 0.5 * (v + qd).cross(c.chisel() - c.tracer()));
        if self.curve.is_closed() {
            open + 0.5 * self.l * self.l * self.delta_theta()
        } else {
            open
        }
    }

    /// Signed area of the chisel path closed by the circular arc of radius
    /// `l` about `p(0)` from `q(T)` back to `q(0)`.
    pub fn chisel_closure_area(&self) -> Result<f64> {
        if !self.curve.is_closed() {
            return Err(Error::OpenCurve {
                gap: self.curve.closure_gap(),
            });
        }
        let path = self.integrate(|c, _, _, qd| 0.5 * c.chisel().cross(qd));
        let center = self.first().tracer();
        let (a, b) = (self.last().theta, self.first().theta);
        let l = self.l;
        // ½∮(x dy − y dx) along centre + l(cos φ, sin φ), φ from a to b
        let arc = 0.5
            * (l * center.x * (b.sin() - a.sin()) - l * center.y * (b.cos() - a.cos())
                + l * l * (b - a));
        Ok(path + arc)
    }

    /// Per-step defect of the constraint along the cubic Hermite interpolant
    /// of `θ`: `(θ₁ − θ₀) − ∫ θ'(θ_H(t), ṗ(t)) dt`, with the integral by
    /// Simpson. Vanishes for an exact solution up to `O(h⁵)`.
    pub fn constraint_defects(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.steps());
        for &(a, b) in &self.pieces {
            for j in a..b {
                let (s0, s1) = (&self.samples[j], &self.samples[j + 1]);
                let h = s1.t - s0.t;
                let (_, r0, _) = self.velocities(j, Side::After);
                let (_, r1, _) = self.velocities(j + 1, Side::Before);
                let (th0, th1) = (s0.config.theta, s1.config.theta);
                let thm = 0.5 * (th0 + th1) + h * (r0 - r1) / 8.0;
                let vm = self.curve.eval_unchecked(s0.t + 0.5 * h, Side::After).1;
                let rm = theta_rate(thm, vm, self.l);
                out.push(((th1 - th0) - h / 6.0 * (r0 + 4.0 * rm + r1)).abs());
            }
        }
        out
    }

    /// Step-doubling estimate of the local RK4 error of every step.
    pub fn local_error_estimates(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.steps());
        for &(a, b) in &self.pieces {
            for j in a..b {
                let (s0, s1) = (&self.samples[j], &self.samples[j + 1]);
                let (t0, t1) = (s0.t, s1.t);
                let tm = t0 + 0.5 * (t1 - t0);
                let vel = |t, side| self.curve.eval_unchecked(t, side).1;
                let half = |ta: f64, tb: f64, th: f64| {
                    let step = RkStep {
                        t0: ta,
                        t1: tb,
                        v0: vel(ta, Side::After),
                        vm: vel(ta + 0.5 * (tb - ta), Side::After),
                        v1: vel(tb, Side::Before),
                        ends_piece: false,
                    };
                    lift_step(th, &step, self.l)
                };
                let two = half(tm, t1, half(t0, tm, s0.config.theta));
                out.push((two - s1.config.theta).abs());
            }
        }
        out
    }
}

/// Signed area swept by the segment from `p(t)` to `q(t)` for two curves on
/// the same parameter interval. See [`PlanimeterPath::swept_area`].
pub fn swept_area_between(p: &ParamCurve, q: &ParamCurve, samples: usize) -> Result<f64> {
    let big_t = p.duration();
    if (q.duration() - big_t).abs() > 1e-12 * big_t {
        return Err(Error::invalid("curves must share the parameter interval"));
    }
    let mut cuts: Vec<f64> = p
        .pieces()
        .iter()
        .chain(q.pieces().iter())
        .flat_map(|pc| [pc.t0, pc.t1])
        .collect();
    cuts.push(0.0);
    cuts.push(big_t);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-14 * big_t);
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let piece = crate::geometry::Piece { t0: w[0], t1: w[1] };
        let half = (samples as f64 * piece.width() / (2.0 * big_t)).round() as usize;
        let n = 2 * half.max(1);
        let values: Vec<f64> = (0..=n)
            .map(|i| {
                let (t, side) = piece.node(n, i);
                let (pp, pv) = p.eval_unchecked(t.min(big_t), side);
                let (qp, qv) = q.eval_unchecked(t.min(q.duration()), side);
                0.5 * (pv + qv).cross(qp - pp)
            })
            .collect();
        total += simpson(&values, piece.width() / n as f64);
    }
    Ok(total)
}

/// Rotation of the rod after the tracer runs once counter-clockwise around
/// the square of side `eps` with a corner at the origin.
///
/// For small `eps` this approaches `eps² / l²`, the curvature of the
/// connection times the enclosed area.
pub fn small_square_holonomy(eps: f64, theta0: f64, l: f64) -> Result<f64> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::invalid("square side must be positive"));
    }
    let sq = square_loop(Vec2::ZERO, eps, Orientation::Ccw)?;
    Ok(lift(&sq, theta0, l, 256)?.delta_theta())
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::geometry::{centroid, moments, prytz_loop};

    fn unit_circle() -> ParamCurve {
        ParamCurve::circle(Vec2::ZERO, 1.0, Orientation::Ccw).unwrap()
    }

    #[test]
    fn stationary_tracer_keeps_angle() {
        let c = ParamCurve::segment(Vec2::new(1.0, 2.0), Vec2::new(1.0, 2.0)).unwrap();
        let path = lift(&c, 0.7, 3.0, 100).unwrap();
        assert!(path.samples().iter().all(|s| s.config.theta == 0.7));
        assert_eq!(path.delta_theta(), 0.0);
        assert_eq!(path.area_estimate_angle(), 0.0);
    }

    #[test]
    fn retracing_undoes_the_lift() {
        let s = ParamCurve::star(5, 1.0, 0.4, Vec2::ZERO).unwrap();
        let there_and_back = ParamCurve::composite(vec![s.clone(), s.reversed()]).unwrap();
        let path = lift(&there_and_back, 0.3, 2.0, 20_000).unwrap();
        assert_abs_diff_eq!(path.delta_theta(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(path.area_estimate_chord(), 0.0, epsilon = 1e-11);
    }

    #[test]
    fn rigidity_holds_exactly() {
        let lp = prytz_loop(&unit_circle(), Vec2::new(0.2, 0.1)).unwrap();
        let path = lift(&lp, 0.4, 5.0, 2000).unwrap();
        for s in path.samples() {
            let d = (s.config.chisel() - s.config.tracer()).norm();
            assert!((d - 5.0).abs() <= 4.0 * f64::EPSILON * 5.0);
        }
    }

    #[test]
    fn projection_invariant() {
        let lp = prytz_loop(&unit_circle(), Vec2::new(0.2, 0.1)).unwrap();
        let path = lift(&lp, 0.4, 5.0, 2000).unwrap();
        for s in path.samples() {
            assert_eq!(s.config.tracer(), lp.eval(s.t).unwrap().0);
        }
    }

    #[test]
    fn unwrapped_across_the_seam() {
        // a big circle drags the rod through more than a full turn
        let c = ParamCurve::circle(Vec2::ZERO, 4.0, Orientation::Ccw).unwrap();
        let path = lift(&c, 3.0, 1.0, 20_000).unwrap();
        let dt = path.delta_theta();
        assert!(dt > PI, "Δθ = {dt}");
        for w in path.samples().windows(2) {
            assert!((w[1].config.theta - w[0].config.theta).abs() < 0.1);
        }
    }

    #[test]
    fn circle_from_centroid() {
        // reference from an adaptive 8th-order integrator at rtol 2e-14; the
        // Magnus prediction A/l² + M2/(2l⁴) = 0.126920 differs at O(l⁻⁵)
        let lp = prytz_loop(&unit_circle(), Vec2::ZERO).unwrap();
        let path = lift(&lp, 0.0, 5.0, 100_000).unwrap();
        let predicted = PI / 25.0 + (PI / 2.0) / (2.0 * 625.0);
        assert_abs_diff_eq!(path.delta_theta(), 0.127_292_547_880_549, epsilon = 1e-11);
        assert!((path.delta_theta() - predicted).abs() < 4e-4);
        let rel = (path.area_estimate_angle() - PI).abs() / PI;
        assert!(rel < 0.015, "relative error {rel}");
    }

    #[test]
    fn chord_estimate_gap_bound() {
        let lp = prytz_loop(&unit_circle(), Vec2::ZERO).unwrap();
        let path = lift(&lp, 0.0, 5.0, 100_000).unwrap();
        let l: f64 = 5.0;
        let dt = path.delta_theta();
        let gap = (path.area_estimate_chord() - path.area_estimate_angle()).abs();
        assert!(gap <= l * l * dt.powi(3) / 24.0 * (1.0 + 1e-3));
        // d = 2 l sin(Δθ/2) exactly, up to round-off
        assert_abs_diff_eq!(
            path.area_estimate_chord(),
            2.0 * l * l * (dt / 2.0).sin(),
            epsilon = 1e-13
        );
    }

    #[test]
    fn moving_segment_identity() {
        for curve in [
            unit_circle(),
            ParamCurve::star(5, 1.0, 0.4, Vec2::new(0.3, 0.0)).unwrap(),
        ] {
            let g = centroid(&curve, 4096).unwrap();
            let lp = prytz_loop(&curve, g).unwrap();
            let a_p = moments(&lp, 4096).unwrap().area;
            let path = lift(&lp, 0.9, 5.0, 100_000).unwrap();
            let a_q = path.chisel_closure_area().unwrap();
            assert_abs_diff_eq!(path.swept_area(), a_p - a_q, epsilon = 1e-8);
            assert_abs_diff_eq!(a_p, path.area_estimate_angle() + a_q, epsilon = 1e-8);
        }
    }

    #[test]
    fn swept_area_of_concentric_rotation() {
        let p = ParamCurve::circle(Vec2::ZERO, 2.0, Orientation::Ccw).unwrap();
        let q = ParamCurve::circle(Vec2::ZERO, 1.0, Orientation::Ccw).unwrap();
        assert_abs_diff_eq!(
            swept_area_between(&p, &q, 4096).unwrap(),
            3.0 * PI,
            epsilon = 1e-12
        );
    }

    #[test]
    fn swept_area_of_sliding_rod_is_zero() {
        let p = ParamCurve::segment(Vec2::ZERO, Vec2::new(3.0, 0.0)).unwrap();
        let q = ParamCurve::segment(Vec2::new(1.0, 0.0), Vec2::new(4.0, 0.0)).unwrap();
        assert_eq!(swept_area_between(&p, &q, 64).unwrap(), 0.0);
        // the planimeter lift of a line along the rod: rod keeps sliding
        let path = lift(&p, 0.0, 1.0, 64).unwrap();
        assert_eq!(path.swept_area(), 0.0);
    }

    #[test]
    fn retraced_segment_has_zero_chisel_area() {
        let s = ParamCurve::segment(Vec2::ZERO, Vec2::new(0.5, 0.2)).unwrap();
        let c = ParamCurve::composite(vec![s.clone(), s.reversed()]).unwrap();
        let path = lift(&c, 1.0, 2.0, 1000).unwrap();
        assert_abs_diff_eq!(path.chisel_closure_area().unwrap(), 0.0, epsilon = 1e-13);
    }

    #[test]
    fn chisel_area_vanishes_as_region_shrinks() {
        let mut prev = f64::INFINITY;
        for r in [0.4, 0.2, 0.1, 0.05] {
            let c = ParamCurve::circle(Vec2::ZERO, r, Orientation::Ccw).unwrap();
            let lp = prytz_loop(&c, Vec2::ZERO).unwrap();
            let a_q = lift(&lp, 0.0, 5.0, 20_000)
                .unwrap()
                .chisel_closure_area()
                .unwrap()
                .abs();
            assert!(a_q < prev);
            prev = a_q;
        }
        assert!(prev < 1e-6);
    }

    #[test]
    fn open_tracer_has_no_chisel_closure() {
        let s = ParamCurve::segment(Vec2::ZERO, Vec2::new(1.0, 0.0)).unwrap();
        let path = lift(&s, 1.0, 2.0, 10).unwrap();
        assert!(matches!(
            path.chisel_closure_area(),
            Err(Error::OpenCurve { .. })
        ));
    }

    #[test]
    fn projection_kills_lifted_fields() {
        let at = Config::new(0.3, -1.0, 0.77, 2.5);
        let (x, y) = lifted_fields(&at);
        assert_abs_diff_eq!(horizontal_project(x, &at), 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(horizontal_project(y, &at), 0.0, epsilon = 1e-16);
        assert_eq!(
            horizontal_project(TangentVector::new(0.0, 0.0, 1.0), &at),
            1.0
        );
    }

    #[test]
    fn small_square_rotation_sign_and_scaling() {
        let l = 2.0;
        let eps = 1e-3 * l;
        let ccw = small_square_holonomy(eps, 0.3, l).unwrap();
        let sq = square_loop(Vec2::ZERO, eps, Orientation::Cw).unwrap();
        let cw = lift(&sq, 0.3, l, 256).unwrap().delta_theta();
        assert!(ccw > 0.0 && cw < 0.0);
        assert!((ccw + cw).abs() < 1e-3 * ccw);
        let doubled = small_square_holonomy(eps, 0.3, 2.0 * l).unwrap();
        assert!((ccw / doubled - 4.0).abs() < 0.02);
    }

    #[test]
    fn zero_steps_rejected() {
        assert!(lift(&unit_circle(), 0.0, 1.0, 0).is_err());
        assert!(lift(&unit_circle(), 0.0, 0.0, 10).is_err());
    }
}
