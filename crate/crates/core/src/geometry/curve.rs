use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::Vec2;
use crate::error::{Error, Result};

/// Relative tolerance for deciding that a curve is closed.
const CLOSED_TOL: f64 = 1e-12;
/// Relative tolerance for continuity at composite junctions.
const JUNCTION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    #[default]
    Ccw,
    Cw,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Ccw => 1.0,
            Orientation::Cw => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// Which one-sided limit to take at a kink.
///
/// Velocities of piecewise-smooth curves jump at vertices and junctions;
/// integrators evaluate the start of a step with `After` and its end with
/// `Before` so that every stage sees a single smooth piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Before,
    After,
}

impl Side {
    fn flip(self) -> Self {
        match self {
            Side::Before => Side::After,
            Side::After => Side::Before,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Circle {
        center: Vec2,
        radius: f64,
        orientation: Orientation,
        /// Polar angle (about `center`) of the starting point.
        start_angle: f64,
    },
    /// Regular star: a `2n`-gon with vertices at angles `πk/n`, alternating
    /// between the outer and inner radius, starting on the outer one.
    Star {
        points: usize,
        outer_radius: f64,
        inner_radius: f64,
        center: Vec2,
    },
    /// Closed polygon; the edge from the last vertex back to the first is
    /// implied.
    Polygon {
        vertices: Vec<Vec2>,
    },
    Segment {
        from: Vec2,
        to: Vec2,
    },
    Composite(Vec<ParamCurve>),
    Reversed(Box<ParamCurve>),
}

/// An interval `[t0, t1]` of positive width on which a curve is smooth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub t0: f64,
    pub t1: f64,
}

impl Piece {
    pub fn width(&self) -> f64 {
        self.t1 - self.t0
    }

    /// Node `i` of a uniform `n`-step grid on the piece, with the side to
    /// evaluate from. The last node is exactly `t1` and is read from the left.
    pub fn node(&self, n: usize, i: usize) -> (f64, Side) {
        if i == n {
            (self.t1, Side::Before)
        } else {
            (self.t0 + i as f64 * (self.width() / n as f64), Side::After)
        }
    }
}

/// A piecewise-smooth parametric plane curve `p: [0, T] -> R^2`.
///
/// Every primitive returns its exact analytic derivative. Polygons and
/// composites allocate the parameter interval proportionally to arc length.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamCurve {
    shape: Shape,
    duration: f64,
    /// Vertex ring for polygons and stars, first vertex repeated at the end.
    ring: Vec<Vec2>,
    /// Parameter values of ring vertices or composite child boundaries.
    knots: Vec<f64>,
    length: f64,
    lo: Vec2,
    hi: Vec2,
    closed: bool,
}

fn check_point(p: Vec2, what: &str) -> Result<()> {
    if p.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!("{what} must be finite")))
    }
}

/// Arc-length-proportional knots on `[0, duration]`; equal split when all
/// lengths vanish.
fn allocate(lengths: &[f64], duration: f64) -> Vec<f64> {
    let total: f64 = lengths.iter().sum();
    let n = lengths.len();
    let mut knots = Vec::with_capacity(n + 1);
    knots.push(0.0);
    let mut acc = 0.0;
    for (i, len) in lengths.iter().enumerate() {
        if i + 1 == n {
            knots.push(duration);
        } else if total > 0.0 {
            acc += len;
            knots.push(duration * acc / total);
        } else {
            knots.push(duration * (i + 1) as f64 / n as f64);
        }
    }
    knots
}

/// Index of the interval `[knots[i], knots[i+1]]` (of positive width)
/// selected by `t` and `side`.
fn locate(knots: &[f64], t: f64, side: Side) -> usize {
    let m = knots.len() - 1;
    let width = |i: usize| knots[i + 1] - knots[i];
    // times mapped through a parent composite may miss a knot by round-off
    let snap = 8.0 * f64::EPSILON * (1.0 + knots[m].abs());
    let near = knots.partition_point(|&k| k < t);
    let t = [near.saturating_sub(1), near.min(m)]
        .into_iter()
        .map(|j| knots[j])
        .find(|k| (k - t).abs() <= snap)
        .unwrap_or(t);
    let start = match side {
        Side::After => knots.partition_point(|&k| k <= t),
        Side::Before => knots.partition_point(|&k| k < t),
    };
    let mut i = start.saturating_sub(1).min(m - 1);
    match side {
        Side::After => {
            while width(i) <= 0.0 && i + 1 < m {
                i += 1;
            }
            while width(i) <= 0.0 && i > 0 {
                i -= 1;
            }
        }
        Side::Before => {
            while width(i) <= 0.0 && i > 0 {
                i -= 1;
            }
            while width(i) <= 0.0 && i + 1 < m {
                i += 1;
            }
        }
    }
    i
}

impl ParamCurve {
    fn build(shape: Shape, duration: f64) -> Result<Self> {
        if !(duration.is_finite() && duration > 0.0) {
            return Err(Error::invalid("curve duration must be positive and finite"));
        }
        let mut curve = ParamCurve {
            shape,
            duration,
            ring: Vec::new(),
            knots: Vec::new(),
            length: 0.0,
            lo: Vec2::ZERO,
            hi: Vec2::ZERO,
            closed: false,
        };
        curve.finish()?;
        Ok(curve)
    }

    fn finish(&mut self) -> Result<()> {
        let duration = self.duration;
        match &self.shape {
            Shape::Circle { center, radius, .. } => {
                self.length = TAU * radius;
                let r = Vec2::new(*radius, *radius);
                self.lo = *center - r;
                self.hi = *center + r;
            }
            Shape::Star {
                points,
                outer_radius,
                inner_radius,
                center,
            } => {
                let n = *points;
                let ring: Vec<Vec2> = (0..=2 * n)
                    .map(|k| {
                        let r = if k % 2 == 0 {
                            *outer_radius
                        } else {
                            *inner_radius
                        };
                        if k == 2 * n {
                            *center + Vec2::new(*outer_radius, 0.0)
                        } else {
                            *center + Vec2::from_angle(PI * k as f64 / n as f64) * r
                        }
                    })
                    .collect();
                self.set_ring(ring, duration);
            }
            Shape::Polygon { vertices } => {
                let mut ring = vertices.clone();
                ring.push(vertices[0]);
                self.set_ring(ring, duration);
            }
            Shape::Segment { from, to } => {
                self.length = (*to - *from).norm();
                self.lo = Vec2::new(from.x.min(to.x), from.y.min(to.y));
                self.hi = Vec2::new(from.x.max(to.x), from.y.max(to.y));
            }
            Shape::Composite(children) => {
                let lengths: Vec<f64> = children.iter().map(|c| c.length).collect();
                self.knots = allocate(&lengths, duration);
                self.length = lengths.iter().sum();
                self.lo = children[0].lo;
                self.hi = children[0].hi;
                for c in children {
                    self.lo = Vec2::new(self.lo.x.min(c.lo.x), self.lo.y.min(c.lo.y));
                    self.hi = Vec2::new(self.hi.x.max(c.hi.x), self.hi.y.max(c.hi.y));
                }
                let scale = 1.0 + (self.hi - self.lo).norm();
                for (i, w) in children.windows(2).enumerate() {
                    let gap = (w[0].end() - w[1].start()).norm();
                    if gap > JUNCTION_TOL * scale {
                        return Err(Error::Discontinuous { index: i, gap });
                    }
                }
            }
            Shape::Reversed(child) => {
                self.length = child.length;
                self.lo = child.lo;
                self.hi = child.hi;
            }
        }
        let gap = (self.start() - self.end()).norm();
        self.closed = gap <= CLOSED_TOL * (1.0 + self.diameter());
        Ok(())
    }

    fn set_ring(&mut self, ring: Vec<Vec2>, duration: f64) {
        let lengths: Vec<f64> = ring.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
        self.knots = allocate(&lengths, duration);
        self.length = lengths.iter().sum();
        self.lo = ring[0];
        self.hi = ring[0];
        for p in &ring {
            self.lo = Vec2::new(self.lo.x.min(p.x), self.lo.y.min(p.y));
            self.hi = Vec2::new(self.hi.x.max(p.x), self.hi.y.max(p.y));
        }
        self.ring = ring;
    }

    /// Circle starting at polar angle 0 about `center`.
    pub fn circle(center: Vec2, radius: f64, orientation: Orientation) -> Result<Self> {
        Self::circle_from(center, radius, orientation, 0.0)
    }

    pub fn circle_from(
        center: Vec2,
        radius: f64,
        orientation: Orientation,
        start_angle: f64,
    ) -> Result<Self> {
        check_point(center, "circle center")?;
        if !(radius.is_finite() && radius >= 0.0) || !start_angle.is_finite() {
            return Err(Error::invalid(
                "circle radius must be finite and non-negative",
            ));
        }
        Self::build(
            Shape::Circle {
                center,
                radius,
                orientation,
                start_angle,
            },
            1.0,
        )
    }

    pub fn star(points: usize, outer_radius: f64, inner_radius: f64, center: Vec2) -> Result<Self> {
        check_point(center, "star center")?;
        if points < 2 {
            return Err(Error::invalid("star needs at least 2 points"));
        }
        if !(outer_radius.is_finite() && inner_radius.is_finite())
            || outer_radius < 0.0
            || inner_radius < 0.0
        {
            return Err(Error::invalid("star radii must be finite and non-negative"));
        }
        Self::build(
            Shape::Star {
                points,
                outer_radius,
                inner_radius,
                center,
            },
            1.0,
        )
    }

    pub fn polygon(vertices: Vec<Vec2>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::invalid("polygon needs at least 2 vertices"));
        }
        for v in &vertices {
            check_point(*v, "polygon vertex")?;
        }
        Self::build(Shape::Polygon { vertices }, 1.0)
    }

    pub fn segment(from: Vec2, to: Vec2) -> Result<Self> {
        check_point(from, "segment endpoint")?;
        check_point(to, "segment endpoint")?;
        Self::build(Shape::Segment { from, to }, 1.0)
    }

    /// Concatenation; children must meet continuously.
    pub fn composite(children: Vec<ParamCurve>) -> Result<Self> {
        if children.is_empty() {
            return Err(Error::invalid("composite needs at least one child"));
        }
        Self::build(Shape::Composite(children), 1.0)
    }

    /// The same trace run backwards: `p_rev(t) = p(T - t)`.
    pub fn reversed(self) -> Self {
        let duration = self.duration;
        Self::build(Shape::Reversed(Box::new(self)), duration)
            .expect("reversal of a valid curve is valid")
    }

    /// Rescales the parameter interval to `[0, duration]`.
    pub fn with_duration(self, duration: f64) -> Result<Self> {
        let shape = match self.shape {
            Shape::Reversed(child) => Shape::Reversed(Box::new(child.with_duration(duration)?)),
            other => other,
        };
        Self::build(shape, duration)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn arc_length(&self) -> f64 {
        self.length
    }

    /// Diagonal of the bounding box; an upper bound on the diameter.
    pub fn diameter(&self) -> f64 {
        (self.hi - self.lo).norm()
    }

    pub fn start(&self) -> Vec2 {
        self.eval_unchecked(0.0, Side::After).0
    }

    pub fn end(&self) -> Vec2 {
        self.eval_unchecked(self.duration, Side::Before).0
    }

    /// Distance between the endpoints.
    pub fn closure_gap(&self) -> f64 {
        (self.start() - self.end()).norm()
    }

    /// Position and velocity at `t`; right-sided at kinks.
    pub fn eval(&self, t: f64) -> Result<(Vec2, Vec2)> {
        self.eval_sided(t, Side::After)
    }

    pub fn eval_sided(&self, t: f64, side: Side) -> Result<(Vec2, Vec2)> {
        let slack = 1e-12 * self.duration;
        if !(t >= -slack && t <= self.duration + slack) {
            return Err(Error::Domain {
                t,
                duration: self.duration,
            });
        }
        Ok(self.eval_unchecked(t.clamp(0.0, self.duration), side))
    }

    pub(crate) fn eval_unchecked(&self, t: f64, side: Side) -> (Vec2, Vec2) {
        let big_t = self.duration;
        match &self.shape {
            Shape::Circle {
                center,
                radius,
                orientation,
                start_angle,
            } => {
                let rate = orientation.sign() * TAU / big_t;
                let phi = start_angle + rate * t;
                let (s, c) = phi.sin_cos();
                (
                    *center + Vec2::new(c, s) * *radius,
                    Vec2::new(-s, c) * (rate * radius),
                )
            }
            Shape::Star { .. } | Shape::Polygon { .. } => {
                let i = locate(&self.knots, t, side);
                let (k0, k1) = (self.knots[i], self.knots[i + 1]);
                let w = k1 - k0;
                let edge = self.ring[i + 1] - self.ring[i];
                let u = ((t - k0) / w).clamp(0.0, 1.0);
                (self.ring[i] + edge * u, edge * (1.0 / w))
            }
            Shape::Segment { from, to } => {
                let d = *to - *from;
                (*from + d * (t / big_t), d * (1.0 / big_t))
            }
            Shape::Composite(children) => {
                let i = locate(&self.knots, t, side);
                let (k0, k1) = (self.knots[i], self.knots[i + 1]);
                let child = &children[i];
                let ct = child.duration;
                let tau = ((t - k0) / (k1 - k0) * ct).clamp(0.0, ct);
                let (p, v) = child.eval_unchecked(tau, side);
                (p, v * (ct / (k1 - k0)))
            }
            Shape::Reversed(child) => {
                let (p, v) = child.eval_unchecked(big_t - t, side.flip());
                (p, -v)
            }
        }
    }

    /// Maximal smooth pieces covering `[0, T]`.
    pub fn pieces(&self) -> Vec<Piece> {
        let big_t = self.duration;
        match &self.shape {
            Shape::Circle { .. } | Shape::Segment { .. } => vec![Piece { t0: 0.0, t1: big_t }],
            Shape::Star { .. } | Shape::Polygon { .. } => self
                .knots
                .windows(2)
                .filter(|w| w[1] > w[0])
                .map(|w| Piece { t0: w[0], t1: w[1] })
                .collect(),
            Shape::Composite(children) => {
                let mut out = Vec::new();
                for (i, child) in children.iter().enumerate() {
                    let (k0, k1) = (self.knots[i], self.knots[i + 1]);
                    if k1 <= k0 {
                        continue;
                    }
                    let ct = child.duration;
                    let map = |tau: f64| {
                        if tau <= 0.0 {
                            k0
                        } else if tau >= ct {
                            k1
                        } else {
                            k0 + tau / ct * (k1 - k0)
                        }
                    };
                    for p in child.pieces() {
                        let (a, b) = (map(p.t0), map(p.t1));
                        if b > a {
                            out.push(Piece { t0: a, t1: b });
                        }
                    }
                }
                out
            }
            Shape::Reversed(child) => child
                .pieces()
                .into_iter()
                .rev()
                .map(|p| Piece {
                    t0: if p.t1 >= big_t { 0.0 } else { big_t - p.t1 },
                    t1: if p.t0 <= 0.0 { big_t } else { big_t - p.t0 },
                })
                .filter(|p| p.t1 > p.t0)
                .collect(),
        }
    }

    /// Splits `steps` nominal steps over the smooth pieces in proportion to
    /// their width. Each piece receives an even count of at least 2, so that
    /// grids align with every kink and support composite Simpson sums.
    pub fn step_grid(&self, steps: usize) -> Vec<(Piece, usize)> {
        let big_t = self.duration;
        self.pieces()
            .into_iter()
            .map(|p| {
                let half = (steps as f64 * p.width() / (2.0 * big_t)).round() as usize;
                (p, 2 * half.max(1))
            })
            .collect()
    }

    pub fn translated(&self, d: Vec2) -> Result<Self> {
        self.map_points(&|p| p + d, 0.0, 1.0)
    }

    /// Rotation by `phi` about the origin.
    pub fn rotated(&self, phi: f64) -> Result<Self> {
        self.map_points(&|p| p.rotate(phi), phi, 1.0)
    }

    /// Uniform scaling about the origin (`s > 0`).
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::invalid("scale factor must be positive"));
        }
        self.map_points(&|p| p * s, 0.0, s)
    }

    fn map_points(&self, f: &dyn Fn(Vec2) -> Vec2, phi: f64, s: f64) -> Result<Self> {
        let shape = match &self.shape {
            Shape::Circle {
                center,
                radius,
                orientation,
                start_angle,
            } => Shape::Circle {
                center: f(*center),
                radius: radius * s,
                orientation: *orientation,
                start_angle: start_angle + phi,
            },
            Shape::Star {
                points,
                outer_radius,
                inner_radius,
                center,
            } if phi == 0.0 => Shape::Star {
                points: *points,
                outer_radius: outer_radius * s,
                inner_radius: inner_radius * s,
                center: f(*center),
            },
            Shape::Star { .. } | Shape::Polygon { .. } => Shape::Polygon {
                vertices: self.ring[..self.ring.len() - 1]
                    .iter()
                    .map(|p| f(*p))
                    .collect(),
            },
            Shape::Segment { from, to } => Shape::Segment {
                from: f(*from),
                to: f(*to),
            },
            Shape::Composite(children) => Shape::Composite(
                children
                    .iter()
                    .map(|c| c.map_points(f, phi, s))
                    .collect::<Result<_>>()?,
            ),
            Shape::Reversed(child) => Shape::Reversed(Box::new(child.map_points(f, phi, s)?)),
        };
        Self::build(shape, self.duration)
    }
}

/// The loop used with a Prytz planimeter: straight out from `start` to the
/// boundary's starting point, once around the boundary, and straight back.
pub fn prytz_loop(boundary: &ParamCurve, start: Vec2) -> Result<ParamCurve> {
    if !boundary.is_closed() {
        return Err(Error::OpenCurve {
            gap: boundary.closure_gap(),
        });
    }
    let b0 = boundary.start();
    let out = ParamCurve::segment(start, b0)?;
    let back = out.clone().reversed();
    ParamCurve::composite(vec![out, boundary.clone(), back])
}

/// Axis-aligned square of side `eps` with lower-left corner `corner`.
pub fn square_loop(corner: Vec2, eps: f64, orientation: Orientation) -> Result<ParamCurve> {
    let sq = ParamCurve::polygon(vec![
        corner,
        corner + Vec2::new(eps, 0.0),
        corner + Vec2::new(eps, eps),
        corner + Vec2::new(0.0, eps),
    ])?;
    Ok(match orientation {
        Orientation::Ccw => sq,
        Orientation::Cw => sq.reversed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn unit_circle() -> ParamCurve {
        ParamCurve::circle(Vec2::ZERO, 1.0, Orientation::Ccw).unwrap()
    }

    #[test]
    fn circle_at_zero() {
        let c = unit_circle().with_duration(2.0).unwrap();
        let (p, v) = c.eval(0.0).unwrap();
        assert_eq!(p, Vec2::new(1.0, 0.0));
        assert_abs_diff_eq!(v.x, 0.0);
        assert_abs_diff_eq!(v.y, TAU / 2.0, epsilon = 1e-15);
        assert!(c.is_closed());
    }

    #[test]
    fn domain_error_outside_interval() {
        let c = unit_circle();
        assert!(matches!(c.eval(-0.1), Err(Error::Domain { .. })));
        assert!(matches!(c.eval(1.5), Err(Error::Domain { .. })));
        assert!(c.eval(1.0).is_ok());
    }

    #[test]
    fn reversed_runs_backwards() {
        let c = ParamCurve::star(5, 1.0, 0.4, Vec2::new(0.3, -0.2)).unwrap();
        let r = c.clone().reversed();
        for &t in &[0.05, 0.33, 0.47, 0.71] {
            let (p, v) = c.eval(1.0 - t).unwrap();
            let (pr, vr) = r.eval(t).unwrap();
            assert_abs_diff_eq!(p.x, pr.x, epsilon = 1e-15);
            assert_abs_diff_eq!(p.y, pr.y, epsilon = 1e-15);
            assert_eq!(v, -vr);
        }
    }

    #[test]
    fn composite_is_continuous_at_junctions() {
        let a = ParamCurve::segment(Vec2::ZERO, Vec2::new(1.0, 0.0)).unwrap();
        let b = ParamCurve::segment(Vec2::new(1.0, 0.0), Vec2::new(1.0, 3.0)).unwrap();
        let c = ParamCurve::composite(vec![a, b]).unwrap();
        // arc-length allocation puts the junction at t = 1/4
        let (pb, vb) = c.eval_sided(0.25, Side::Before).unwrap();
        let (pa, va) = c.eval_sided(0.25, Side::After).unwrap();
        assert_abs_diff_eq!((pb - pa).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(vb.x, 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(va.y, 4.0, epsilon = 1e-12);
        assert!(!c.is_closed());
    }

    #[test]
    fn composite_rejects_gaps() {
        let a = ParamCurve::segment(Vec2::ZERO, Vec2::new(1.0, 0.0)).unwrap();
        let b = ParamCurve::segment(Vec2::new(2.0, 0.0), Vec2::new(3.0, 0.0)).unwrap();
        assert!(matches!(
            ParamCurve::composite(vec![a, b]),
            Err(Error::Discontinuous { index: 0, .. })
        ));
    }

    #[test]
    fn velocity_matches_finite_difference() {
        let curves = [
            unit_circle().with_duration(3.0).unwrap(),
            ParamCurve::star(5, 1.0, 0.4, Vec2::ZERO).unwrap(),
            prytz_loop(&unit_circle(), Vec2::new(0.1, 0.2))
                .unwrap()
                .reversed(),
        ];
        for c in &curves {
            for p in c.pieces() {
                let t = 0.5 * (p.t0 + p.t1);
                let h = 1e-6 * p.width();
                let (_, v) = c.eval(t).unwrap();
                let fd = (c.eval(t + h).unwrap().0 - c.eval(t - h).unwrap().0) * (0.5 / h);
                assert!(
                    (fd - v).norm() <= 1e-6 * (1.0 + v.norm()),
                    "{fd:?} vs {v:?}"
                );
            }
        }
    }

    #[test]
    fn star_vertices_alternate() {
        let s = ParamCurve::star(5, 1.0, 0.4, Vec2::ZERO).unwrap();
        assert_eq!(s.pieces().len(), 10);
        assert!(s.is_closed());
        let p = s.pieces()[1];
        let v = s.eval(p.t0).unwrap().0;
        assert_abs_diff_eq!(v.norm(), 0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(v.angle(), PI / 5.0, epsilon = 1e-15);
    }

    #[test]
    fn prytz_loop_with_start_on_boundary_has_degenerate_segments() {
        let c = unit_circle();
        let l = prytz_loop(&c, c.start()).unwrap();
        assert!(l.is_closed());
        assert_eq!(l.pieces().len(), 1);
        for &t in &[0.0, 0.2, 0.9] {
            let (a, va) = l.eval(t).unwrap();
            let (b, vb) = c.eval(t).unwrap();
            assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-15);
            assert_abs_diff_eq!((va - vb).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn prytz_loop_pieces_align_with_junctions() {
        let l = prytz_loop(&unit_circle(), Vec2::ZERO).unwrap();
        let pieces = l.pieces();
        assert_eq!(pieces.len(), 3);
        let total = 2.0 + TAU;
        assert_abs_diff_eq!(pieces[0].t1, 1.0 / total, epsilon = 1e-15);
        assert_eq!(pieces[2].t1, 1.0);
        let grid = l.step_grid(1000);
        assert!(grid.iter().all(|(_, n)| n % 2 == 0));
    }

    #[test]
    fn nested_reversal_pieces() {
        let l = prytz_loop(
            &ParamCurve::star(3, 1.0, 0.5, Vec2::ZERO).unwrap(),
            Vec2::ZERO,
        )
        .unwrap();
        let r = l.clone().reversed();
        let a = l.pieces();
        let b = r.pieces();
        assert_eq!(a.len(), b.len());
        assert_eq!(b[0].t0, 0.0);
        assert_eq!(b.last().unwrap().t1, 1.0);
        for w in b.windows(2) {
            assert!(w[0].t1 <= w[1].t0 + 1e-15);
        }
    }

    #[test]
    fn transforms_move_points() {
        let s = ParamCurve::star(5, 1.0, 0.4, Vec2::ZERO).unwrap();
        let d = Vec2::new(5.0, -1.0);
        let moved = s.translated(d).unwrap();
        let rot = s.rotated(0.7).unwrap();
        let big = s.scaled(2.5).unwrap();
        for &t in &[0.0, 0.13, 0.6] {
            let p = s.eval(t).unwrap().0;
            assert_abs_diff_eq!(
                (moved.eval(t).unwrap().0 - (p + d)).norm(),
                0.0,
                epsilon = 1e-14
            );
            assert_abs_diff_eq!(
                (rot.eval(t).unwrap().0 - p.rotate(0.7)).norm(),
                0.0,
                epsilon = 1e-14
            );
            assert_abs_diff_eq!(
                (big.eval(t).unwrap().0 - p * 2.5).norm(),
                0.0,
                epsilon = 1e-14
            );
        }
    }
}
