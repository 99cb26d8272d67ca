//! CSV output. Every float is written with 17 significant digits, which
//! round-trips `f64` exactly.

use std::io::{self, Write};

use crate::development::ChainSample;
use crate::planimeter::PlanimeterPath;
use crate::studies::SweepRow;
use crate::subriemannian::{hamiltonian, Trajectory};

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn row(w: &mut impl Write, values: &[f64]) -> io::Result<()> {
    let cells: Vec<String> = values.iter().map(|v| fmt_f64(*v)).collect();
    writeln!(w, "{}", cells.join(","))
}

/// `t,px,py,qx,qy,theta`
pub fn write_path_csv(w: &mut impl Write, path: &PlanimeterPath) -> io::Result<()> {
    writeln!(w, "t,px,py,qx,qy,theta")?;
    for s in path.samples() {
        let (p, q) = (s.config.tracer(), s.config.chisel());
        row(w, &[s.t, p.x, p.y, q.x, q.y, s.config.theta])?;
    }
    Ok(())
}

/// `t,x,y,theta,px,py,ptheta,H`
pub fn write_trajectory_csv(w: &mut impl Write, traj: &Trajectory) -> io::Result<()> {
    writeln!(w, "t,x,y,theta,px,py,ptheta,H")?;
    for s in traj.samples() {
        let st = &s.state;
        row(
            w,
            &[
                s.t,
                st.x,
                st.y,
                st.theta,
                st.px,
                st.py,
                st.ptheta,
                hamiltonian(st),
            ],
        )?;
    }
    Ok(())
}

/// `t,u0x,u0y,theta1,u1x,u1y,...,thetan,unx,uny`
pub fn write_chain_csv(w: &mut impl Write, samples: &[ChainSample]) -> io::Result<()> {
    let n = samples.first().map_or(0, |s| s.angles.len());
    let mut header = vec!["t".to_string(), "u0x".into(), "u0y".into()];
    for i in 1..=n {
        header.extend([format!("theta{i}"), format!("u{i}x"), format!("u{i}y")]);
    }
    writeln!(w, "{}", header.join(","))?;
    for s in samples {
        let mut values = vec![s.t, s.joints[0].x, s.joints[0].y];
        for i in 0..n {
            values.extend([s.angles[i], s.joints[i + 1].x, s.joints[i + 1].y]);
        }
        row(w, &values)?;
    }
    Ok(())
}

/// `l,theta0,delta_theta,area,area_angle,area_chord,chord_gap,angle_error,magnus_residual`
pub fn write_sweep_csv(w: &mut impl Write, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(
        w,
        "l,theta0,delta_theta,area,area_angle,area_chord,chord_gap,angle_error,magnus_residual"
    )?;
    for r in rows {
        row(
            w,
            &[
                r.l,
                r.theta0,
                r.delta_theta,
                r.area,
                r.area_angle,
                r.area_chord,
                r.chord_gap,
                r.angle_error,
                r.magnus_residual,
            ],
        )?;
    }
    Ok(())
}
