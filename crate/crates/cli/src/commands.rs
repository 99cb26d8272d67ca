use std::f64::consts::FRAC_PI_2;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use prytz::development::{chain_lift, TrailerChain};
use prytz::geometry::{centroid, moments, prytz_loop};
use prytz::io::{fmt_f64, write_chain_csv, write_path_csv, write_sweep_csv, write_trajectory_csv};
use prytz::liegroup::{holonomy as solve_holonomy, magnus_terms, HolonomyReport};
use prytz::planimeter::{lift, outward_theta0};
use prytz::studies::{angle_grid, holonomy_agreement, l_sweep, sweep_slopes};
use prytz::subriemannian::{geodesic as solve_geodesic, plan as solve_plan, CotangentState};
use prytz::{Execution, Orientation, ParamCurve, Vec2};
use serde::Serialize;

use crate::scenario::Scenario;
use crate::CliError;

/// The output directory.
pub struct Out {
    dir: PathBuf,
}

impl Out {
    pub fn new(dir: PathBuf) -> Result<Self, CliError> {
        std::fs::create_dir_all(&dir).map_err(|source| CliError::Io {
            path: dir.clone(),
            source,
        })?;
        Ok(Out { dir })
    }

    fn write(
        &self,
        name: &str,
        f: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
    ) -> Result<(), CliError> {
        let path = self.dir.join(name);
        let io_err = |source| CliError::Io {
            path: path.clone(),
            source,
        };
        let mut w = BufWriter::new(File::create(&path).map_err(io_err)?);
        f(&mut w).map_err(io_err)?;
        w.flush().map_err(io_err)
    }

    fn write_json(&self, name: &str, value: &impl Serialize) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(value).expect("report serializes");
        self.write(name, |w| writeln!(w, "{text}"))
    }
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

#[derive(Serialize)]
struct AreaReport {
    area: f64,
    delta_theta: f64,
    area_angle: f64,
    area_chord: f64,
    chisel_area: f64,
    swept_area: f64,
    /// `area − (l² Δθ + chisel_area)`
    identity_residual: f64,
}

pub fn area(s: &Scenario, out: &Out) -> Result<(), CliError> {
    let (curve, theta0) = s.tracer()?;
    let area = moments(&curve, s.samples())?.area;
    let path = lift(&curve, theta0, s.l, s.steps()?)?;
    let a_q = path.chisel_closure_area()?;
    let report = AreaReport {
        area,
        delta_theta: path.delta_theta(),
        area_angle: path.area_estimate_angle(),
        area_chord: path.area_estimate_chord(),
        chisel_area: a_q,
        swept_area: path.swept_area(),
        identity_residual: area - (path.area_estimate_angle() + a_q),
    };
    out.write("path.csv", |w| write_path_csv(w, &path))?;
    out.write_json("area.json", &report)?;
    print_json(&report);
    Ok(())
}

pub fn holonomy(s: &Scenario, out: &Out) -> Result<(), CliError> {
    let (curve, _) = s.tracer()?;
    let steps = s.steps()?;
    let g = solve_holonomy(&curve, s.l, steps)?;
    let terms = magnus_terms(&curve, s.l, s.samples())?;
    let angles = angle_grid(s.holonomy_angles());
    let rows = holonomy_agreement(
        &curve,
        s.l,
        steps,
        s.samples(),
        &angles,
        Execution::default(),
    )?;
    out.write_json(
        "holonomy.json",
        &HolonomyReport::new(&g, terms, angles.len()),
    )?;
    out.write("agreement.csv", |w| {
        writeln!(w, "theta0,lift,holonomy,magnus")?;
        for r in &rows {
            let cells = [r.theta0, r.lift, r.holonomy, r.magnus].map(fmt_f64);
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    })?;
    println!(
        "{:>10} {:>24} {:>24} {:>24} {:>10}",
        "theta0", "lift", "holonomy", "magnus", "mismatch"
    );
    for r in &rows {
        println!(
            "{:>10.6} {:>24.16e} {:>24.16e} {:>24.16e} {:>10.2e}",
            r.theta0,
            r.lift,
            r.holonomy,
            r.magnus,
            r.mismatch()
        );
    }
    let c = |v: prytz::liegroup::SU11Vector| v.coeffs().map(|x| format!("{x:.6e}")).join(", ");
    println!("U1 = [{}]", c(terms.u1));
    println!("U2 = [{}]", c(terms.u2));
    println!("U3 = [{}]", c(terms.u3));
    println!("U4 = [{}]", c(terms.u4));
    Ok(())
}

pub fn sweep(s: &Scenario, out: &Out) -> Result<(), CliError> {
    let (curve, theta0) = s.tracer()?;
    let rows = l_sweep(
        &curve,
        theta0,
        s.l_values()?,
        s.steps()?,
        s.samples(),
        Execution::default(),
    )?;
    let slopes = sweep_slopes(&rows)?;
    out.write("sweep.csv", |w| write_sweep_csv(w, &rows))?;
    out.write_json("slopes.json", &slopes)?;
    print_json(&slopes);
    Ok(())
}

pub fn geodesic(s: &Scenario, out: &Out) -> Result<(), CliError> {
    let (s0, duration) = s.geodesic_start()?;
    let traj = solve_geodesic(&s0, duration, s.steps()?)?;
    out.write("geodesic.csv", |w| write_trajectory_csv(w, &traj))?;
    println!("energy drift {:.3e}", traj.energy_drift());
    Ok(())
}

pub fn plan(s: &Scenario, out: &Out) -> Result<(), CliError> {
    let (from, to, opts) = s.plan_request()?;
    let p = solve_plan(&from, &to, &opts)?;
    out.write_json("plan.json", &p.report())?;
    println!(
        "{} curves, {} loops, final residual {:.3e}",
        p.curves.len(),
        p.loops(),
        p.residuals.last().copied().unwrap_or(0.0)
    );
    Ok(())
}

pub fn chain(s: &Scenario, out: &Out) -> Result<(), CliError> {
    let (curve, _) = s.tracer()?;
    let params = s.chain()?;
    let chain = TrailerChain::new(params.lengths.clone(), params.angles.clone())?;
    let samples = chain_lift(&curve, &chain, s.steps()?)?;
    out.write("chain.csv", |w| write_chain_csv(w, &samples))?;
    Ok(())
}

/// Circle and star lifts from the centroid, and one geodesic.
pub fn figures(s: &Scenario, out: &Out) -> Result<(), CliError> {
    let steps = s.steps()?;
    let boundaries = [
        (
            "circle.csv",
            ParamCurve::circle(Vec2::ZERO, 1.0, Orientation::Ccw)?,
        ),
        ("star.csv", ParamCurve::star(5, 1.0, 0.4, Vec2::ZERO)?),
    ];
    for (name, b) in boundaries {
        let g = centroid(&b, s.samples())?;
        let theta0 = s.theta0.unwrap_or_else(|| outward_theta0(&b, g));
        let path = lift(&prytz_loop(&b, g)?, theta0, s.l, steps)?;
        out.write(name, |w| write_path_csv(w, &path))?;
    }
    let (s0, duration) = if s.geodesic.is_some() {
        s.geodesic_start()?
    } else {
        let s0 = CotangentState {
            x: 0.0,
            y: 0.0,
            theta: FRAC_PI_2,
            px: 1.0,
            py: 0.0,
            ptheta: 1.0,
            l: s.l,
        };
        (s0, 10.0)
    };
    let traj = solve_geodesic(&s0, duration, steps)?;
    out.write("geodesic.csv", |w| write_trajectory_csv(w, &traj))?;
    Ok(())
}
