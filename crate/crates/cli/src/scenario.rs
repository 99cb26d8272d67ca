//! JSON scenario files: one document per run.

use std::path::PathBuf;

use prytz::geometry::{centroid, prytz_loop, CurveSpec};
use prytz::planimeter::outward_theta0;
use prytz::subriemannian::{CotangentState, PlanOptions};
use prytz::{Config, ParamCurve, Vec2, DEFAULT_SAMPLES, DEFAULT_STEPS};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Tracer curve, or the region boundary when `start` is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveSpec>,
    /// Run out from this point to the boundary, around it, and back.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<Start>,
    /// Rod length.
    pub l: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    /// Quadrature nodes for moments.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holonomy: Option<HolonomyParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geodesic: Option<GeodesicParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<PlanParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainParams>,
    /// Output directory, used when `--out` is not given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Start {
    Named(StartName),
    Point(Vec2),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartName {
    Centroid,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HolonomyParams {
    /// Number of equally spaced initial angles in the agreement table.
    pub angles: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepParams {
    pub l_values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeodesicParams {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub px: f64,
    pub py: f64,
    pub ptheta: f64,
    pub duration: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanParams {
    /// `[x, y, theta]`
    pub from: [f64; 3],
    pub to: [f64; 3],
    pub tol: f64,
    pub max_loops: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainParams {
    pub lengths: Vec<f64>,
    pub angles: Vec<f64>,
}

/// Step count used when the scenario does not set one.
pub fn default_steps() -> Result<usize, CliError> {
    match std::env::var("PRYTZ_STEPS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "PRYTZ_STEPS must be a positive integer, got `{v}`"
            ))),
        },
        Err(_) => Ok(DEFAULT_STEPS),
    }
}

fn missing(key: &str) -> CliError {
    CliError::Usage(format!("scenario is missing key `{key}`"))
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid scenario: {e}")))
    }

    #[cfg(test)]
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    pub fn steps(&self) -> Result<usize, CliError> {
        match self.steps {
            Some(0) => Err(CliError::Usage("`steps` must be at least 1".into())),
            Some(n) => Ok(n),
            None => default_steps(),
        }
    }

    pub fn samples(&self) -> usize {
        self.samples.unwrap_or(DEFAULT_SAMPLES)
    }

    /// The tracer curve and the initial rod angle.
    ///
    /// With `start`, the tracer runs from the start point to the boundary,
    /// around it, and back; the rod then starts along the outward segment
    /// unless `theta0` is given. Without `start`, `theta0` defaults to 0.
    pub fn tracer(&self) -> Result<(ParamCurve, f64), CliError> {
        let spec = self.curve.as_ref().ok_or_else(|| missing("curve"))?;
        let curve = spec.build()?;
        match self.start {
            None => Ok((curve, self.theta0.unwrap_or(0.0))),
            Some(start) => {
                let p = match start {
                    Start::Point(p) => p,
                    Start::Named(StartName::Centroid) => centroid(&curve, self.samples())?,
                };
                let theta0 = self.theta0.unwrap_or_else(|| outward_theta0(&curve, p));
                Ok((prytz_loop(&curve, p)?, theta0))
            }
        }
    }

    pub fn geodesic_start(&self) -> Result<(CotangentState, f64), CliError> {
        let g = self.geodesic.as_ref().ok_or_else(|| missing("geodesic"))?;
        Ok((
            CotangentState {
                x: g.x,
                y: g.y,
                theta: g.theta,
                px: g.px,
                py: g.py,
                ptheta: g.ptheta,
                l: self.l,
            },
            g.duration,
        ))
    }

    pub fn plan_request(&self) -> Result<(Config, Config, PlanOptions), CliError> {
        let p = self.plan.as_ref().ok_or_else(|| missing("plan"))?;
        let c = |v: [f64; 3]| Config::new(v[0], v[1], v[2], self.l);
        let opts = PlanOptions {
            tol: p.tol,
            max_loops: p.max_loops,
            steps: self.steps()?,
        };
        Ok((c(p.from), c(p.to), opts))
    }

    pub fn holonomy_angles(&self) -> usize {
        self.holonomy.as_ref().map_or(16, |h| h.angles)
    }

    pub fn l_values(&self) -> Result<&[f64], CliError> {
        let s = self.sweep.as_ref().ok_or_else(|| missing("sweep"))?;
        if s.l_values.len() < 2 {
            return Err(CliError::Usage(
                "`sweep.l_values` needs at least two entries".into(),
            ));
        }
        Ok(&s.l_values)
    }

    pub fn chain(&self) -> Result<&ChainParams, CliError> {
        self.chain.as_ref().ok_or_else(|| missing("chain"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FULL: &str = r#"{
        "curve": {"kind": "star", "points": 5, "outer_radius": 1.0, "inner_radius": 0.4},
        "start": "centroid",
        "l": 5.0,
        "theta0": 0.1,
        "steps": 1000,
        "samples": 512,
        "holonomy": {"angles": 8},
        "sweep": {"l_values": [4.0, 8.0]},
        "geodesic": {"x": 0.0, "y": 0.0, "theta": 0.3, "px": 0.7, "py": -0.4, "ptheta": 1.1, "duration": 10.0},
        "plan": {"from": [0.0, 0.0, 0.0], "to": [0.0, 0.0, 0.04], "tol": 1e-6, "max_loops": 6},
        "chain": {"lengths": [1.0, 0.5], "angles": [1.5707963267948966, 1.5707963267948966]},
        "output": "out"
    }"#;

    #[test]
    fn round_trips() {
        let s = Scenario::from_json(FULL).unwrap();
        assert_eq!(Scenario::from_json(&s.to_json()).unwrap(), s);
        let p =
            Scenario::from_json(r#"{"l": 0.1, "start": [0.30000000000000004, -1e-300]}"#).unwrap();
        assert_eq!(Scenario::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn unknown_keys_name_the_key() {
        let err = Scenario::from_json(r#"{"l": 1.0, "rod": 2.0}"#).unwrap_err();
        assert!(err.to_string().contains("rod"), "{err}");
        let err = Scenario::from_json(r#"{"l": 1.0, "plan": {"from": [0,0,0], "to": [0,0,0], "tol": 1, "max_loops": 1, "x": 1}}"#)
            .unwrap_err();
        assert!(err.to_string().contains("`x`"), "{err}");
    }

    #[test]
    fn centroid_start_points_outward() {
        let s = Scenario::from_json(
            r#"{"curve": {"kind": "circle", "center": [2.0, 0.0], "radius": 1.0}, "start": "centroid", "l": 5.0}"#,
        )
        .unwrap();
        let (lp, th) = s.tracer().unwrap();
        assert!(lp.is_closed());
        assert!(th.abs() < 1e-12);
    }
}
