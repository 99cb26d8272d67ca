//! Parametric plane curves and area moments.

mod curve;
mod moments;
mod spec;
mod vec2;

pub use curve::{prytz_loop, square_loop, Orientation, ParamCurve, Piece, Shape, Side};
pub use moments::{centroid, moments, Moments};
pub use spec::CurveSpec;
pub use vec2::Vec2;
