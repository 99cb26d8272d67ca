//! The Euclidean-group view of the planimeter: the chisel path as a
//! development of the tracer path, and chains of rods (n-trailers).
//!
//! `se(2)` is represented by 3×3 matrices acting on homogeneous coordinates
//! `(1, x, y)`, with translational generators `e1`, `e2` and rotational
//! generator `e3`:
//!
//! ```text
//!      [0 0 0]        [0 0 0]        [0 0  0]
//! e1 = [1 0 0]   e2 = [0 0 0]   e3 = [0 0 -1]
//!      [0 0 0]        [1 0 0]        [0 1  0]
//! ```

use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::geometry::{ParamCurve, Side, Vec2};
use crate::planimeter::{
    chisel_of, drive, eta, lift_step, rk4_combine, theta_rate, Config, TangentVector,
};

type Mat3 = [[f64; 3]; 3];

fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| (0..3).map(|k| a[r][k] * b[k][c]).sum()))
}

/// An element `c1 e1 + c2 e2 + c3 e3` of `se(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SE2Vector {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl SE2Vector {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Self {
        SE2Vector { c1, c2, c3 }
    }

    pub fn matrix(&self) -> Mat3 {
        [
            [0.0, 0.0, 0.0],
            [self.c1, 0.0, -self.c3],
            [self.c2, self.c3, 0.0],
        ]
    }

    fn from_matrix(m: &Mat3) -> Self {
        SE2Vector::new(m[1][0], m[2][0], 0.5 * (m[2][1] - m[1][2]))
    }

    /// Matrix commutator.
    pub fn bracket(&self, o: &SE2Vector) -> SE2Vector {
        let (a, b) = (self.matrix(), o.matrix());
        let (ab, ba) = (mat3_mul(&a, &b), mat3_mul(&b, &a));
        let m: Mat3 = std::array::from_fn(|r| std::array::from_fn(|c| ab[r][c] - ba[r][c]));
        Self::from_matrix(&m)
    }
}

impl Add for SE2Vector {
    type Output = SE2Vector;
    fn add(self, o: SE2Vector) -> SE2Vector {
        SE2Vector::new(self.c1 + o.c1, self.c2 + o.c2, self.c3 + o.c3)
    }
}

impl Mul<SE2Vector> for f64 {
    type Output = SE2Vector;
    fn mul(self, v: SE2Vector) -> SE2Vector {
        SE2Vector::new(self * v.c1, self * v.c2, self * v.c3)
    }
}

/// A rigid motion: rotation by `phi` followed by translation by `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SE2Element {
    pub phi: f64,
    pub t: Vec2,
}

impl Default for SE2Element {
    fn default() -> Self {
        Self::identity()
    }
}

impl SE2Element {
    pub fn identity() -> Self {
        SE2Element {
            phi: 0.0,
            t: Vec2::ZERO,
        }
    }

    pub fn new(phi: f64, t: Vec2) -> Self {
        SE2Element { phi, t }
    }

    pub fn matrix(&self) -> Mat3 {
        let (s, c) = self.phi.sin_cos();
        [[1.0, 0.0, 0.0], [self.t.x, c, -s], [self.t.y, s, c]]
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &SE2Element) -> SE2Element {
        SE2Element::new(self.phi + o.phi, o.t.rotate(self.phi) + self.t)
    }

    pub fn inverse(&self) -> SE2Element {
        SE2Element::new(-self.phi, -self.t.rotate(-self.phi))
    }

    pub fn act(&self, p: Vec2) -> Vec2 {
        p.rotate(self.phi) + self.t
    }

    pub fn exp(v: &SE2Vector) -> SE2Element {
        let phi = v.c3;
        let (s, c) = phi.sin_cos();
        // V(φ) = [[sin φ, −(1 − cos φ)], [1 − cos φ, sin φ]] / φ
        let (a, b) = if phi.abs() < 1e-6 {
            (1.0 - phi * phi / 6.0, phi / 2.0 - phi * phi * phi / 24.0)
        } else {
            (s / phi, (1.0 - c) / phi)
        };
        SE2Element::new(phi, Vec2::new(a * v.c1 - b * v.c2, b * v.c1 + a * v.c2))
    }
}

/// The `se(2)`-valued pseudoconnection evaluated on a tangent vector.
///
/// The translational lines are the ones printed with the development
/// construction; they carry an extra factor of `l` relative to
/// [`chisel_velocity`] and are exposed for inspection only. The rotational
/// line is the constraint form `η`, so it vanishes on horizontal vectors.
pub fn pseudoconnection(v: TangentVector, at: &Config) -> SE2Vector {
    let (s, c) = at.theta.sin_cos();
    let l = at.l;
    let along = c * v.dx + s * v.dy;
    SE2Vector::new(
        l * c * along - l * s * v.dtheta,
        l * s * along + l * c * v.dtheta,
        eta(v, at),
    )
}

/// Chisel velocity for tracer velocity `v`: the projection of `v` onto the
/// rod direction.
pub fn chisel_velocity(theta: f64, v: Vec2) -> Vec2 {
    let (s, c) = theta.sin_cos();
    Vec2::new(c * c * v.x + s * c * v.y, s * c * v.x + s * s * v.y)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DevelopmentSample {
    pub t: f64,
    pub chisel: Vec2,
    /// Frame rotation `θ(t) − θ(0)`.
    pub rotation: f64,
}

/// Integrates the chisel path from its velocity, together with the rod angle.
pub fn develop(
    curve: &ParamCurve,
    theta0: f64,
    l: f64,
    steps: usize,
) -> Result<Vec<DevelopmentSample>> {
    if !(l.is_finite() && l > 0.0) {
        return Err(Error::invalid("rod length must be positive"));
    }
    let p0 = curve.eval_unchecked(0.0, Side::After).0;
    let mut q = chisel_of(p0, theta0, l);
    let mut theta = theta0;
    let mut out = vec![DevelopmentSample {
        t: 0.0,
        chisel: q,
        rotation: 0.0,
    }];
    drive(curve, steps, |step| {
        let h = step.h();
        let k1 = theta_rate(theta, step.v0, l);
        let k2 = theta_rate(theta + 0.5 * h * k1, step.vm, l);
        let k3 = theta_rate(theta + 0.5 * h * k2, step.vm, l);
        let q1 = chisel_velocity(theta, step.v0);
        let q2 = chisel_velocity(theta + 0.5 * h * k1, step.vm);
        let q3 = chisel_velocity(theta + 0.5 * h * k2, step.vm);
        let q4 = chisel_velocity(theta + h * k3, step.v1);
        q += (q1 + q2 * 2.0 + q3 * 2.0 + q4) * (h / 6.0);
        theta = lift_step(theta, step, l);
        if !(theta.is_finite() && q.is_finite()) {
            return Err(Error::NonFinite("development"));
        }
        out.push(DevelopmentSample {
            t: step.t1,
            chisel: q,
            rotation: theta - theta0,
        });
        Ok(())
    })?;
    Ok(out)
}

/// A chain of rods hitched one behind the other: link `i` runs from joint
/// `i − 1` to joint `i` at angle `angles[i]`, joint 0 being the tracer.
#[derive(Debug, Clone, PartialEq)]
pub struct TrailerChain {
    pub lengths: Vec<f64>,
    pub angles: Vec<f64>,
}

impl TrailerChain {
    pub fn new(lengths: Vec<f64>, angles: Vec<f64>) -> Result<Self> {
        if lengths.is_empty() || lengths.len() != angles.len() {
            return Err(Error::invalid(
                "a chain needs one angle per link and at least one link",
            ));
        }
        if lengths.iter().any(|l| !(l.is_finite() && *l > 0.0)) {
            return Err(Error::invalid("link lengths must be positive"));
        }
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::invalid("link angles must be finite"));
        }
        Ok(TrailerChain { lengths, angles })
    }

    pub fn links(&self) -> usize {
        self.lengths.len()
    }

    /// Joint positions for tracer position `p`.
    pub fn joints(&self, p: Vec2) -> Vec<Vec2> {
        joints(p, &self.lengths, &self.angles)
    }
}

fn joints(p: Vec2, lengths: &[f64], angles: &[f64]) -> Vec<Vec2> {
    let mut out = Vec::with_capacity(lengths.len() + 1);
    out.push(p);
    let mut u = p;
    for (l, th) in lengths.iter().zip(angles) {
        u = chisel_of(u, *th, *l);
        out.push(u);
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainSample {
    pub t: f64,
    pub angles: Vec<f64>,
    /// Joint 0 is the tracer.
    pub joints: Vec<Vec2>,
}

/// Angle rates of every link for tracer velocity `v`.
fn chain_rates(angles: &[f64], lengths: &[f64], v: Vec2, out: &mut [f64]) {
    let mut u = v;
    for i in 0..angles.len() {
        let w = theta_rate(angles[i], u, lengths[i]);
        out[i] = w;
        let (s, c) = angles[i].sin_cos();
        u += Vec2::new(-s, c) * (lengths[i] * w);
    }
}

/// Integrates all link angles of `chain` as one coupled RK4 system along the
/// tracer curve. With a single link this is exactly [`lift`].
///
/// [`lift`]: crate::planimeter::lift
pub fn chain_lift(
    curve: &ParamCurve,
    chain: &TrailerChain,
    steps: usize,
) -> Result<Vec<ChainSample>> {
    let n = chain.links();
    let ls = &chain.lengths;
    let mut th = chain.angles.clone();
    let p0 = curve.eval_unchecked(0.0, Side::After).0;
    let mut out = vec![ChainSample {
        t: 0.0,
        angles: th.clone(),
        joints: joints(p0, ls, &th),
    }];
    let (mut k1, mut k2, mut k3, mut k4) = (vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    let mut stage = vec![0.0; n];
    drive(curve, steps, |step| {
        let h = step.h();
        chain_rates(&th, ls, step.v0, &mut k1);
        for i in 0..n {
            stage[i] = th[i] + 0.5 * h * k1[i];
        }
        chain_rates(&stage, ls, step.vm, &mut k2);
        for i in 0..n {
            stage[i] = th[i] + 0.5 * h * k2[i];
        }
        chain_rates(&stage, ls, step.vm, &mut k3);
        for i in 0..n {
            stage[i] = th[i] + h * k3[i];
        }
        chain_rates(&stage, ls, step.v1, &mut k4);
        for i in 0..n {
            th[i] = rk4_combine(th[i], h, k1[i], k2[i], k3[i], k4[i]);
        }
        let p = curve.eval_unchecked(step.t1, Side::After).0;
        if th.iter().any(|a| !a.is_finite()) || !p.is_finite() {
            return Err(Error::NonFinite("chain"));
        }
        out.push(ChainSample {
            t: step.t1,
            angles: th.clone(),
            joints: joints(p, ls, &th),
        });
        Ok(())
    })?;
    Ok(out)
}
