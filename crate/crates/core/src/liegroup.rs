//! `su(1,1)` and `PSU(1,1)`: the structure group of the planimeter bundle.
//!
//! An algebra element is the trace-free matrix `[[iγ, β], [β̄, −iγ]]`. In the
//! basis used throughout,
//!
//! ```text
//! e1 = [[0, 1], [1, 0]]     e2 = [[0, i], [−i, 0]]     e3 = [[i, 0], [0, −i]]
//! ```
//!
//! so `β = c1 + i c2` and `γ = c3`. The group acts on the circle of rod
//! angles by Möbius maps, and the basis induces the vector fields
//! `e1 ↦ −2 sin θ ∂θ`, `e2 ↦ 2 cos θ ∂θ`, `e3 ↦ 2 ∂θ`.
//!
//! The rod rotation along a tracer curve is the holonomy of the connection
//! `ϖ = (e1 dx + e2 dy) / 2l`, obtained by solving `Γ' = −ξ(t) Γ` with
//! `ξ(t) = ϖ(ṗ(t))` and acting with `Γ(T)` on the initial angle.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{moments, Moments, ParamCurve, Side, Vec2};
use crate::planimeter::wrap_angle;
use crate::quadrature::simpson;

type Mat = [[Complex64; 2]; 2];

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    [
        [
            x[0][0] * y[0][0] + x[0][1] * y[1][0],
            x[0][0] * y[0][1] + x[0][1] * y[1][1],
        ],
        [
            x[1][0] * y[0][0] + x[1][1] * y[1][0],
            x[1][0] * y[0][1] + x[1][1] * y[1][1],
        ],
    ]
}

/// An element of `su(1,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SU11Vector {
    /// Coefficient of `e3`.
    pub gamma: f64,
    /// Off-diagonal entry, `c1 + i c2`.
    pub beta: Complex64,
}

impl SU11Vector {
    pub const ZERO: SU11Vector = SU11Vector {
        gamma: 0.0,
        beta: Complex64 { re: 0.0, im: 0.0 },
    };

    pub fn from_coeffs(c1: f64, c2: f64, c3: f64) -> Self {
        SU11Vector {
            gamma: c3,
            beta: Complex64::new(c1, c2),
        }
    }

    pub fn e1() -> Self {
        Self::from_coeffs(1.0, 0.0, 0.0)
    }

    pub fn e2() -> Self {
        Self::from_coeffs(0.0, 1.0, 0.0)
    }

    pub fn e3() -> Self {
        Self::from_coeffs(0.0, 0.0, 1.0)
    }

    /// `[c1, c2, c3]`.
    pub fn coeffs(&self) -> [f64; 3] {
        [self.beta.re, self.beta.im, self.gamma]
    }

    pub fn matrix(&self) -> Mat {
        [
            [I * self.gamma, self.beta],
            [self.beta.conj(), -I * self.gamma],
        ]
    }

    /// Reads an algebra element off a matrix of the form `[[iγ, β], [β̄, −iγ]]`.
    fn from_matrix(m: &Mat) -> Self {
        SU11Vector {
            gamma: 0.5 * (m[0][0].im - m[1][1].im),
            beta: 0.5 * (m[0][1] + m[1][0].conj()),
        }
    }

    /// Matrix commutator `XY − YX`.
    pub fn bracket(&self, other: &SU11Vector) -> SU11Vector {
        let (x, y) = (self.matrix(), other.matrix());
        let (xy, yx) = (mat_mul(&x, &y), mat_mul(&y, &x));
        let mut m = xy;
        for r in 0..2 {
            for c in 0..2 {
                m[r][c] -= yx[r][c];
            }
        }
        Self::from_matrix(&m)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coeffs().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Value of the induced vector field on the circle at angle `theta`.
    pub fn circle_field(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        2.0 * (-self.beta.re * s + self.beta.im * c + self.gamma)
    }

    pub fn is_finite(&self) -> bool {
        self.gamma.is_finite() && self.beta.re.is_finite() && self.beta.im.is_finite()
    }
}

impl Add for SU11Vector {
    type Output = SU11Vector;
    fn add(self, o: SU11Vector) -> SU11Vector {
        SU11Vector {
            gamma: self.gamma + o.gamma,
            beta: self.beta + o.beta,
        }
    }
}

impl Sub for SU11Vector {
    type Output = SU11Vector;
    fn sub(self, o: SU11Vector) -> SU11Vector {
        self + -o
    }
}

impl Neg for SU11Vector {
    type Output = SU11Vector;
    fn neg(self) -> SU11Vector {
        SU11Vector {
            gamma: -self.gamma,
            beta: -self.beta,
        }
    }
}

impl Mul<SU11Vector> for f64 {
    type Output = SU11Vector;
    fn mul(self, v: SU11Vector) -> SU11Vector {
        SU11Vector {
            gamma: self * v.gamma,
            beta: v.beta * self,
        }
    }
}

impl Serialize for SU11Vector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SU11Vector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [c1, c2, c3] = <[f64; 3]>::deserialize(d)?;
        Ok(SU11Vector::from_coeffs(c1, c2, c3))
    }
}

/// An element `[[a, b], [b̄, ā]]` of `SU(1,1)`, identified with its negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PSU11Element {
    pub a: Complex64,
    pub b: Complex64,
}

impl Default for PSU11Element {
    fn default() -> Self {
        Self::identity()
    }
}

impl PSU11Element {
    pub fn identity() -> Self {
        PSU11Element {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// `|a|² − |b|²`.
    pub fn det(&self) -> f64 {
        self.a.norm_sqr() - self.b.norm_sqr()
    }

    pub fn matrix(&self) -> Mat {
        [[self.a, self.b], [self.b.conj(), self.a.conj()]]
    }

    pub fn compose(&self, o: &PSU11Element) -> PSU11Element {
        PSU11Element {
            a: self.a * o.a + self.b * o.b.conj(),
            b: self.a * o.b + self.b * o.a.conj(),
        }
        .canonical()
    }

    pub fn inverse(&self) -> PSU11Element {
        PSU11Element {
            a: self.a.conj(),
            b: -self.b,
        }
        .canonical()
    }

    /// Rescales to `|a|² − |b|² = 1`.
    pub fn renormalized(&self) -> PSU11Element {
        let k = 1.0 / self.det().sqrt();
        PSU11Element {
            a: self.a * k,
            b: self.b * k,
        }
        .canonical()
    }

    /// Picks the representative with `Re a > 0`, or `Re a = 0` and `Im a > 0`.
    pub fn canonical(&self) -> PSU11Element {
        if self.a.re < 0.0 || (self.a.re == 0.0 && self.a.im < 0.0) {
            PSU11Element {
                a: -self.a,
                b: -self.b,
            }
        } else {
            *self
        }
    }

    /// `Ad_g(X) = g X g⁻¹`.
    pub fn adjoint(&self, x: &SU11Vector) -> SU11Vector {
        let m = mat_mul(
            &mat_mul(&self.matrix(), &x.matrix()),
            &self.inverse().matrix(),
        );
        SU11Vector::from_matrix(&m)
    }

    /// Distance between the two group elements, modulo sign.
    pub fn distance(&self, o: &PSU11Element) -> f64 {
        let d = |s: f64| ((self.a - o.a * s).norm_sqr() + (self.b - o.b * s).norm_sqr()).sqrt();
        d(1.0).min(d(-1.0))
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite()
    }
}

/// Group exponential.
///
/// Every algebra element squares to a multiple of the identity,
/// `X² = Δ I` with `Δ = |β|² − γ²`, hence
/// `exp X = cosh √Δ · I + (sinh √Δ / √Δ) · X`.
pub fn exp(v: &SU11Vector) -> PSU11Element {
    let delta = v.beta.norm_sqr() - v.gamma * v.gamma;
    let (c, s) = if delta.abs() < 1e-8 {
        (
            1.0 + delta / 2.0 + delta * delta / 24.0 + delta * delta * delta / 720.0,
            1.0 + delta / 6.0 + delta * delta / 120.0 + delta * delta * delta / 5040.0,
        )
    } else if delta > 0.0 {
        let r = delta.sqrt();
        (r.cosh(), r.sinh() / r)
    } else {
        let r = (-delta).sqrt();
        (r.cos(), r.sin() / r)
    };
    PSU11Element {
        a: Complex64::new(c, s * v.gamma),
        b: v.beta * s,
    }
    .canonical()
}

/// Möbius action on the circle: the argument of
/// `(a e^{iθ} + b) / (b̄ e^{iθ} + ā)`, unwrapped to lie within `π` of `theta`.
pub fn act(g: &PSU11Element, theta: f64) -> f64 {
    let z = Complex64::from_polar(1.0, theta);
    let w = (g.a * z + g.b) / (g.b.conj() * z + g.a.conj());
    theta + wrap_angle(w.arg() - theta)
}

/// `ϖ(v) = (vx e1 + vy e2) / 2l`.
pub fn connection_form(v: Vec2, l: f64) -> SU11Vector {
    (0.5 / l) * SU11Vector::from_coeffs(v.x, v.y, 0.0)
}

/// `ω(v, X_ξ) = ξ + Ad_{g⁻¹} ϖ(v)` at the point `(p, g)` of the bundle.
pub fn principal_form(v: Vec2, xi: &SU11Vector, g: &PSU11Element, l: f64) -> SU11Vector {
    *xi + g.inverse().adjoint(&connection_form(v, l))
}

/// `Ω̄(u, v) = −(det[u v] / 2l²) e3`.
///
/// With the right-invariant convention `Γ' = −ξ Γ`, the holonomy of a small
/// loop spanned by `u`, `v` is `exp(−Ω̄(u, v))` to leading order.
pub fn curvature_base(u: Vec2, v: Vec2, l: f64) -> SU11Vector {
    -(u.cross(v) / (2.0 * l * l)) * SU11Vector::e3()
}

/// `Ad_{g⁻¹} Ω̄(u, v)`.
pub fn curvature_principal(u: Vec2, v: Vec2, g: &PSU11Element, l: f64) -> SU11Vector {
    g.inverse().adjoint(&curvature_base(u, v, l))
}

/// Gauss–Legendre nodes on `[0, 1]`.
const GAUSS: [f64; 2] = [
    0.5 - 0.288_675_134_594_812_9, // ½ − √3/6
    0.5 + 0.288_675_134_594_812_9,
];

/// Solves `Γ' = −ϖ(ṗ) Γ`, `Γ(0) = I`, along `curve`.
///
/// Each step is the fourth-order two-point Gauss–Magnus update
/// `Ω = −(h/2)(ξ₁ + ξ₂) − (√3 h²/12)[ξ₁, ξ₂]`, `Γ ← exp(Ω) Γ`, on the same
/// kink-aligned grid as the lift.
pub fn holonomy(curve: &ParamCurve, l: f64, steps: usize) -> Result<PSU11Element> {
    if !(l.is_finite() && l > 0.0) {
        return Err(Error::invalid("rod length must be positive"));
    }
    if steps == 0 {
        return Err(Error::invalid("steps must be at least 1"));
    }
    let k = 3f64.sqrt() / 12.0;
    let mut g = PSU11Element::identity();
    for (piece, n) in curve.step_grid(steps) {
        for i in 0..n {
            let (t0, _) = piece.node(n, i);
            let (t1, _) = piece.node(n, i + 1);
            let h = t1 - t0;
            let xi = |c: f64| connection_form(curve.eval_unchecked(t0 + c * h, Side::After).1, l);
            let (x1, x2) = (xi(GAUSS[0]), xi(GAUSS[1]));
            let omega = (-0.5 * h) * (x1 + x2) - (k * h * h) * x1.bracket(&x2);
            g = exp(&omega).compose(&g).renormalized();
            if !g.is_finite() {
                return Err(Error::NonFinite("holonomy"));
            }
        }
    }
    Ok(g)
}

/// The first four terms of the Magnus series of the holonomy of a closed
/// loop, with moments taken about the loop's base point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MagnusTerms {
    #[serde(rename = "U1")]
    pub u1: SU11Vector,
    #[serde(rename = "U2")]
    pub u2: SU11Vector,
    #[serde(rename = "U3")]
    pub u3: SU11Vector,
    #[serde(rename = "U4")]
    pub u4: SU11Vector,
}

impl MagnusTerms {
    /// Terms from region moments about the base point; `U1` vanishes for a
    /// closed loop.
    pub fn from_moments(m: &Moments, l: f64) -> MagnusTerms {
        let (l2, l3, l4) = (l * l, l * l * l, l * l * l * l);
        MagnusTerms {
            u1: SU11Vector::ZERO,
            u2: (m.area / (2.0 * l2)) * SU11Vector::e3(),
            u3: (0.5 / l3) * SU11Vector::from_coeffs(m.my, -m.mx, 0.0),
            u4: (m.m2 / (4.0 * l4)) * SU11Vector::e3(),
        }
    }

    pub fn sum(&self) -> SU11Vector {
        self.u1 + self.u2 + self.u3 + self.u4
    }

    pub fn exp(&self) -> PSU11Element {
        exp(&self.sum())
    }

    /// Rod rotation predicted by `exp(U1 + U2 + U3 + U4)`.
    pub fn predicted_delta_theta(&self, theta0: f64) -> f64 {
        act(&self.exp(), theta0) - theta0
    }
}

/// Magnus terms of a closed tracer loop.
///
/// `U1 = −∫ ϖ(ṗ) dt` is integrated numerically (it is zero up to
/// quadrature error); the others come from the moments about `p(0)`.
pub fn magnus_terms(curve: &ParamCurve, l: f64, samples: usize) -> Result<MagnusTerms> {
    if !(l.is_finite() && l > 0.0) {
        return Err(Error::invalid("rod length must be positive"));
    }
    let m = moments(curve, samples)?.translated(-curve.start());
    let mut terms = MagnusTerms::from_moments(&m, l);
    let mut disp = Vec2::ZERO;
    for (piece, n) in curve.step_grid(samples) {
        let v: Vec<Vec2> = (0..=n)
            .map(|i| {
                let (t, side) = piece.node(n, i);
                curve.eval_unchecked(t, side).1
            })
            .collect();
        let h = piece.width() / n as f64;
        disp += Vec2::new(
            simpson(&v.iter().map(|w| w.x).collect::<Vec<_>>(), h),
            simpson(&v.iter().map(|w| w.y).collect::<Vec<_>>(), h),
        );
    }
    terms.u1 = -1.0 * connection_form(disp, l);
    Ok(terms)
}

/// Rod rotation produced by `g` at each of `count` equally spaced initial
/// angles in `[0, 2π)`.
pub fn delta_theta_at(g: &PSU11Element, count: usize) -> Vec<DeltaThetaAt> {
    (0..count)
        .map(|k| {
            let theta0 = TAU * k as f64 / count as f64;
            DeltaThetaAt {
                theta0,
                dtheta: act(g, theta0) - theta0,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaThetaAt {
    pub theta0: f64,
    pub dtheta: f64,
}

/// Holonomy of one loop together with its Magnus expansion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HolonomyReport {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub delta_theta_at: Vec<DeltaThetaAt>,
    pub magnus: MagnusTerms,
}

impl HolonomyReport {
    pub fn new(g: &PSU11Element, magnus: MagnusTerms, angles: usize) -> Self {
        HolonomyReport {
            a: [g.a.re, g.a.im],
            b: [g.b.re, g.b.im],
            delta_theta_at: delta_theta_at(g, angles),
            magnus,
        }
    }

    pub fn element(&self) -> PSU11Element {
        PSU11Element {
            a: Complex64::new(self.a[0], self.a[1]),
            b: Complex64::new(self.b[0], self.b[1]),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    use super::*;
    use crate::geometry::{prytz_loop, Orientation};
    use crate::planimeter::lift;

    /// Truncated power series `Σ Xᵏ/k!` in plain matrix arithmetic.
    fn series_exp(v: &SU11Vector, terms: usize) -> Mat {
        let x = v.matrix();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let mut sum = [[one, zero], [zero, one]];
        let mut term = sum;
        for k in 1..terms {
            term = mat_mul(&term, &x);
            for row in &mut term {
                for e in row.iter_mut() {
                    *e /= k as f64;
                }
            }
            for r in 0..2 {
                for c in 0..2 {
                    sum[r][c] += term[r][c];
                }
            }
        }
        sum
    }

    fn close(g: &PSU11Element, m: &Mat) -> f64 {
        let h = PSU11Element {
            a: m[0][0],
            b: m[0][1],
        };
        g.distance(&h)
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(exp(&SU11Vector::ZERO), PSU11Element::identity());
    }

    #[test]
    fn exp_of_e3_is_diagonal_phase() {
        let g = exp(&(0.3 * SU11Vector::e3()));
        assert_abs_diff_eq!(g.a.re, 0.3f64.cos(), epsilon = 1e-15);
        assert_abs_diff_eq!(g.a.im, 0.3f64.sin(), epsilon = 1e-15);
        assert_eq!(g.b, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn exp_of_e1_is_hyperbolic() {
        let s: f64 = 0.7;
        let g = exp(&(s * SU11Vector::e1()));
        assert_abs_diff_eq!(g.a.re, s.cosh(), epsilon = 1e-15);
        assert_abs_diff_eq!(g.b.re, s.sinh(), epsilon = 1e-15);
    }

    #[test]
    fn exp_matches_series_on_branches() {
        for v in [
            SU11Vector::from_coeffs(1.2, -0.4, 0.3),
            SU11Vector::from_coeffs(0.1, 0.2, 1.5),
            SU11Vector::from_coeffs(1e-5, 0.0, 1e-5),
            SU11Vector::from_coeffs(0.6, 0.8, 1.0),
        ] {
            assert!(close(&exp(&v), &series_exp(&v, 30)) < 1e-12, "{v:?}");
        }
    }

    #[test]
    fn brackets_of_basis() {
        let (e1, e2, e3) = (SU11Vector::e1(), SU11Vector::e2(), SU11Vector::e3());
        assert_eq!(e1.bracket(&e2), -2.0 * e3);
        assert_eq!(e2.bracket(&e3), 2.0 * e1);
        assert_eq!(e3.bracket(&e1), 2.0 * e2);
    }

    #[test]
    fn act_identity_and_sign() {
        let g = exp(&SU11Vector::from_coeffs(0.3, -0.2, 0.1));
        let minus = PSU11Element { a: -g.a, b: -g.b };
        for th in [0.0, 1.0, 3.0, -2.5, 10.0] {
            assert_eq!(act(&PSU11Element::identity(), th), th);
            assert_abs_diff_eq!(act(&g, th), act(&minus, th), epsilon = 1e-14);
        }
    }

    #[test]
    fn diagonal_rotates_by_twice_the_phase() {
        let alpha = 0.05;
        let g = exp(&(alpha * SU11Vector::e3()));
        for th in [0.0, 1.0, 3.1, 6.0] {
            assert_abs_diff_eq!(act(&g, th), th + 2.0 * alpha, epsilon = 1e-14);
        }
    }

    #[test]
    fn act_is_a_left_action() {
        let g = exp(&SU11Vector::from_coeffs(0.1, 0.05, 0.2));
        let h = exp(&SU11Vector::from_coeffs(-0.2, 0.1, 0.1));
        for th in [0.0, 2.0, 4.0] {
            assert_abs_diff_eq!(
                act(&g.compose(&h), th),
                act(&g, act(&h, th)),
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn connection_field_is_minus_theta_rate() {
        let l = 2.0;
        let v = Vec2::new(0.4, -1.3);
        for th in [0.0, 0.7, 2.0] {
            let field = connection_form(v, l).circle_field(th);
            assert_abs_diff_eq!(
                field,
                -crate::planimeter::theta_rate(th, v, l),
                epsilon = 1e-15
            );
        }
        assert_eq!(
            connection_form(Vec2::new(1.0, 0.0), 1.0),
            0.5 * SU11Vector::e1()
        );
    }

    #[test]
    fn principal_form_reduces() {
        let xi = SU11Vector::from_coeffs(0.1, 0.2, 0.3);
        let v = Vec2::new(1.0, 2.0);
        let id = PSU11Element::identity();
        assert_eq!(
            principal_form(v, &xi, &id, 3.0),
            xi + connection_form(v, 3.0)
        );
        let g = exp(&SU11Vector::from_coeffs(0.3, 0.1, -0.4));
        assert_eq!(principal_form(Vec2::ZERO, &xi, &g, 3.0), xi);
    }

    #[test]
    fn curvature_sign_against_small_square() {
        let l = 2.0;
        let eps = 1e-3 * l;
        let omega = curvature_base(Vec2::new(eps, 0.0), Vec2::new(0.0, eps), l);
        assert_abs_diff_eq!(omega.gamma, -eps * eps / (2.0 * l * l), epsilon = 1e-20);
        let rot = act(&exp(&omega), 0.0);
        assert_abs_diff_eq!(rot, -eps * eps / (l * l), epsilon = 1e-15);
        let square = crate::planimeter::small_square_holonomy(eps, 0.0, l).unwrap();
        assert!((square + rot).abs() < 1e-2 * rot.abs());
    }

    #[test]
    fn constant_curve_has_trivial_holonomy() {
        let c = ParamCurve::segment(Vec2::new(1.0, 1.0), Vec2::new(1.0, 1.0)).unwrap();
        assert_eq!(holonomy(&c, 2.0, 100).unwrap(), PSU11Element::identity());
    }

    #[test]
    fn retraced_curve_has_trivial_holonomy() {
        let s = ParamCurve::star(5, 1.0, 0.4, Vec2::ZERO).unwrap();
        let c = ParamCurve::composite(vec![s.clone(), s.reversed()]).unwrap();
        let g = holonomy(&c, 2.0, 20_000).unwrap();
        assert!(g.distance(&PSU11Element::identity()) < 1e-10);
        assert!((g.det() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn holonomy_matches_lift() {
        let c = ParamCurve::circle(Vec2::ZERO, 1.0, Orientation::Ccw).unwrap();
        let lp = prytz_loop(&c, Vec2::new(0.1, -0.2)).unwrap();
        let g = holonomy(&lp, 5.0, 20_000).unwrap();
        for k in 0..16 {
            let th = TAU * k as f64 / 16.0;
            let lifted = lift(&lp, th, 5.0, 20_000).unwrap().delta_theta();
            assert_abs_diff_eq!(act(&g, th) - th, lifted, epsilon = 1e-6);
        }
    }

    #[test]
    fn centered_circle_magnus_terms() {
        let c = ParamCurve::circle(Vec2::ZERO, 1.0, Orientation::Ccw).unwrap();
        let lp = prytz_loop(&c, Vec2::ZERO).unwrap();
        let m = magnus_terms(&lp, 5.0, 4096).unwrap();
        assert!(m.u1.norm() < 1e-14);
        assert_abs_diff_eq!(m.u2.gamma, PI / 50.0, epsilon = 1e-14);
        assert!(m.u3.norm() < 1e-14);
        assert_abs_diff_eq!(m.u4.gamma, (PI / 2.0) / (4.0 * 625.0), epsilon = 1e-15);
        let predicted = PI / 25.0 + (PI / 2.0) / (2.0 * 625.0);
        assert_abs_diff_eq!(m.predicted_delta_theta(0.4), predicted, epsilon = 1e-14);
    }

    #[test]
    fn report_round_trips() {
        let g = exp(&SU11Vector::from_coeffs(0.1, 0.2, 0.3));
        let m = MagnusTerms::from_moments(
            &Moments {
                area: 1.0,
                mx: 0.1,
                my: 0.2,
                m2: 0.5,
            },
            3.0,
        );
        let r = HolonomyReport::new(&g, m, 4);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"U3\""));
        let back: HolonomyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.element(), g);
    }

    fn vector() -> impl Strategy<Value = SU11Vector> {
        (-1.1f64..1.1, -1.1f64..1.1, -1.1f64..1.1)
            .prop_map(|(a, b, c)| SU11Vector::from_coeffs(a, b, c))
    }

    fn group() -> impl Strategy<Value = PSU11Element> {
        vector().prop_map(|v| exp(&v))
    }

    fn plane() -> impl Strategy<Value = Vec2> {
        (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(x, y)| Vec2::new(x, y))
    }

    proptest! {
        #[test]
        fn exp_agrees_with_series(v in vector()) {
            prop_assume!(v.norm() <= 2.0);
            prop_assert!(close(&exp(&v), &series_exp(&v, 30)) < 1e-12);
        }

        #[test]
        fn exp_lands_on_the_group(v in vector()) {
            let g = exp(&v);
            prop_assert!((g.det() - 1.0).abs() < 1e-12);
            prop_assert!(g.a.re > 0.0 || (g.a.re == 0.0 && g.a.im > 0.0));
        }

        #[test]
        fn act_commutes_with_full_turns(g in group(), th in -10.0f64..10.0) {
            prop_assert!((act(&g, th + TAU) - act(&g, th) - TAU).abs() < 1e-12);
        }

        #[test]
        fn principal_form_is_equivariant(
            g in group(), h in group(), xi in vector(), v in plane(), l in 0.5f64..5.0
        ) {
            // R_h* ω = Ad_{h⁻¹} ω
            let hi = h.inverse();
            let lhs = principal_form(v, &hi.adjoint(&xi), &g.compose(&h), l);
            let rhs = hi.adjoint(&principal_form(v, &xi, &g, l));
            prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
        }

        #[test]
        fn curvature_is_bilinear_and_antisymmetric(
            u in plane(), v in plane(), w in plane(), s in -2.0f64..2.0, l in 0.5f64..5.0
        ) {
            let f = |a, b| curvature_base(a, b, l);
            prop_assert!((f(u, v) + f(v, u)).norm() < 1e-14);
            prop_assert_eq!(f(u, u), SU11Vector::ZERO);
            let lin = f(u * s + w, v) - (s * f(u, v) + f(w, v));
            prop_assert!(lin.norm() < 1e-12 * (1.0 + f(u, v).norm() + f(w, v).norm()));
        }

        #[test]
        fn principal_curvature_is_equivariant(
            g in group(), h in group(), u in plane(), v in plane(), l in 0.5f64..5.0
        ) {
            let lhs = curvature_principal(u, v, &g.compose(&h), l);
            let rhs = h.inverse().adjoint(&curvature_principal(u, v, &g, l));
            prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
            // Ad preserves the Killing form, here −det of the matrix: γ² − |β|²
            let base = curvature_base(u, v, l);
            let kill = |x: SU11Vector| x.gamma * x.gamma - x.beta.norm_sqr();
            prop_assert!((kill(lhs) - kill(base)).abs() < 1e-10 * (1.0 + kill(base).abs()));
        }
    }
}
