//! JSON description of tracer curves.
//!
//! ```json
//! {"kind": "circle", "center": [0, 0], "radius": 1, "orientation": "ccw",
//!  "start_angle": 0, "duration": 1}
//! {"kind": "star", "points": 5, "outer_radius": 1, "inner_radius": 0.4,
//!  "center": [0, 0]}
//! {"kind": "polygon", "vertices": [[0, 0], [1, 0], [0, 1]]}
//! {"kind": "segment", "from": [0, 0], "to": [1, 0]}
//! {"kind": "composite", "children": [ ... ]}
//! {"kind": "reversed", "curve": { ... }}
//! ```
//!
//! `duration` (default 1), `orientation` (default `"ccw"`) and `start_angle`
//! (default 0) are optional. Unknown keys are rejected.

use serde::{Deserialize, Serialize};

use super::{Orientation, ParamCurve, Shape, Vec2};
use crate::error::Result;

fn one() -> f64 {
    1.0
}

fn is_one(x: &f64) -> bool {
    *x == 1.0
}

fn is_zero(x: &f64) -> bool {
    x.to_bits() == 0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CurveSpec {
    Circle {
        center: Vec2,
        radius: f64,
        #[serde(default)]
        orientation: Orientation,
        #[serde(default, skip_serializing_if = "is_zero")]
        start_angle: f64,
        #[serde(default = "one", skip_serializing_if = "is_one")]
        duration: f64,
    },
    Star {
        points: usize,
        outer_radius: f64,
        inner_radius: f64,
        #[serde(default)]
        center: Vec2,
        #[serde(default = "one", skip_serializing_if = "is_one")]
        duration: f64,
    },
    Polygon {
        vertices: Vec<Vec2>,
        #[serde(default = "one", skip_serializing_if = "is_one")]
        duration: f64,
    },
    Segment {
        from: Vec2,
        to: Vec2,
        #[serde(default = "one", skip_serializing_if = "is_one")]
        duration: f64,
    },
    Composite {
        children: Vec<CurveSpec>,
        #[serde(default = "one", skip_serializing_if = "is_one")]
        duration: f64,
    },
    Reversed {
        curve: Box<CurveSpec>,
    },
}

impl CurveSpec {
    pub fn build(&self) -> Result<ParamCurve> {
        match self {
            CurveSpec::Circle {
                center,
                radius,
                orientation,
                start_angle,
                duration,
            } => ParamCurve::circle_from(*center, *radius, *orientation, *start_angle)?
                .with_duration(*duration),
            CurveSpec::Star {
                points,
                outer_radius,
                inner_radius,
                center,
                duration,
            } => ParamCurve::star(*points, *outer_radius, *inner_radius, *center)?
                .with_duration(*duration),
            CurveSpec::Polygon { vertices, duration } => {
                ParamCurve::polygon(vertices.clone())?.with_duration(*duration)
            }
            CurveSpec::Segment { from, to, duration } => {
                ParamCurve::segment(*from, *to)?.with_duration(*duration)
            }
            CurveSpec::Composite { children, duration } => {
                ParamCurve::composite(children.iter().map(|c| c.build()).collect::<Result<_>>()?)?
                    .with_duration(*duration)
            }
            CurveSpec::Reversed { curve } => Ok(curve.build()?.reversed()),
        }
    }
}

impl From<&ParamCurve> for CurveSpec {
    fn from(c: &ParamCurve) -> Self {
        let duration = c.duration();
        match c.shape() {
            Shape::Circle {
                center,
                radius,
                orientation,
                start_angle,
            } => CurveSpec::Circle {
                center: *center,
                radius: *radius,
                orientation: *orientation,
                start_angle: *start_angle,
                duration,
            },
            Shape::Star {
                points,
                outer_radius,
                inner_radius,
                center,
            } => CurveSpec::Star {
                points: *points,
                outer_radius: *outer_radius,
                inner_radius: *inner_radius,
                center: *center,
                duration,
            },
            Shape::Polygon { vertices } => CurveSpec::Polygon {
                vertices: vertices.clone(),
                duration,
            },
            Shape::Segment { from, to } => CurveSpec::Segment {
                from: *from,
                to: *to,
                duration,
            },
            Shape::Composite(children) => CurveSpec::Composite {
                children: children.iter().map(CurveSpec::from).collect(),
                duration,
            },
            Shape::Reversed(child) => CurveSpec::Reversed {
                curve: Box::new(CurveSpec::from(child.as_ref())),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_keys() {
        let s: CurveSpec = serde_json::from_str(
            r#"{"kind":"composite","children":[
                {"kind":"segment","from":[0,0],"to":[1,0]},
                {"kind":"circle","center":[0,0],"radius":1},
                {"kind":"reversed","curve":{"kind":"segment","from":[0,0],"to":[1,0]}}
            ]}"#,
        )
        .unwrap();
        let c = s.build().unwrap();
        assert!(c.is_closed());
        assert_eq!(CurveSpec::from(&c), s);
    }

    #[test]
    fn rejects_unknown_keys() {
        let r: std::result::Result<CurveSpec, _> =
            serde_json::from_str(r#"{"kind":"circle","center":[0,0],"radius":1,"colour":"red"}"#);
        assert!(r.is_err());
        let r: std::result::Result<CurveSpec, _> =
            serde_json::from_str(r#"{"kind":"ellipse","center":[0,0]}"#);
        assert!(r.is_err());
    }

    #[test]
    fn star_defaults() {
        let s: CurveSpec = serde_json::from_str(
            r#"{"kind":"star","points":5,"outer_radius":1,"inner_radius":0.4}"#,
        )
        .unwrap();
        let c = s.build().unwrap();
        assert_eq!(c.duration(), 1.0);
        assert!(c.is_closed());
    }
}
