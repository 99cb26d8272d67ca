use serde::{Deserialize, Serialize};

use super::{ParamCurve, Vec2};
use crate::error::{Error, Result};
use crate::quadrature::simpson;

/// Area moments of the region bounded by a closed curve.
///
/// All four are signed: a clockwise boundary negates every entry.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Moments {
    /// `∫ dA`
    pub area: f64,
    /// `∫ x dA`
    pub mx: f64,
    /// `∫ y dA`
    pub my: f64,
    /// `∫ (x² + y²) dA`
    pub m2: f64,
}

/// Boundary-integral moments of a closed curve.
///
/// Green's theorem reduces each region integral to a line integral:
///
/// ```text
/// A  = ½ ∮ (x dy − y dx)
/// Mx =   ∮ ½ x² dy
/// My = − ∮ ½ y² dx
/// M2 =   ∮ (x³ dy − y³ dx) / 3
/// ```
///
/// Each smooth piece is integrated with composite Simpson; `samples` nodes
/// are split over the pieces by parameter width. Straight edges are
/// integrated exactly (the integrands are cubic in the parameter).
pub fn moments(curve: &ParamCurve, samples: usize) -> Result<Moments> {
    if !curve.is_closed() {
        return Err(Error::OpenCurve {
            gap: curve.closure_gap(),
        });
    }
    let mut m = Moments::default();
    for (piece, n) in curve.step_grid(samples) {
        let nodes: Vec<[f64; 4]> = (0..=n)
            .map(|i| {
                let (t, side) = piece.node(n, i);
                let (p, v) = curve.eval_unchecked(t, side);
                integrands(p, v)
            })
            .collect();
        let h = piece.width() / n as f64;
        let column = |k: usize| simpson(&nodes.iter().map(|r| r[k]).collect::<Vec<_>>(), h);
        m.area += column(0);
        m.mx += column(1);
        m.my += column(2);
        m.m2 += column(3);
    }
    Ok(m)
}

fn integrands(p: Vec2, v: Vec2) -> [f64; 4] {
    let (x, y) = (p.x, p.y);
    [
        0.5 * (x * v.y - y * v.x),
        0.5 * x * x * v.y,
        -0.5 * y * y * v.x,
        (x * x * x * v.y - y * y * y * v.x) / 3.0,
    ]
}

/// Centroid `(Mx/A, My/A)` of the enclosed region.
pub fn centroid(curve: &ParamCurve, samples: usize) -> Result<Vec2> {
    let m = moments(curve, samples)?;
    let d = curve.diameter();
    if m.area.abs() < 1e-12 * d * d || m.area == 0.0 {
        return Err(Error::DegenerateRegion { area: m.area });
    }
    Ok(Vec2::new(m.mx / m.area, m.my / m.area))
}

impl Moments {
    /// Moments of the same region after translating it by `d`.
    pub fn translated(&self, d: Vec2) -> Moments {
        Moments {
            area: self.area,
            mx: self.mx + d.x * self.area,
            my: self.my + d.y * self.area,
            m2: self.m2 + 2.0 * (d.x * self.mx + d.y * self.my) + d.dot(d) * self.area,
        }
    }

    pub fn centroid(&self) -> Vec2 {
        Vec2::new(self.mx / self.area, self.my / self.area)
    }
}
