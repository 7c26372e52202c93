//! CSV and SVG renderings of run reports.

use std::f64::consts::TAU;
use std::io::Write;

use symplane::{analytic_oscillator, Vec2};

use crate::args::{CrankOpts, IdentitiesOpts, IntersectOpts, OscillatorOpts, TangentsOpts};
use crate::error::CliError;
use crate::report::{CrankResult, IdentitiesResult, OscillatorResult, RunReport, TangentsResult};
use crate::svg::{color, full_panel, stacked_panels, Bounds, Panel, Svg};
use symplane::Intersection;

/// Seventeen significant digits, enough for an exact round trip.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(out)
}

pub fn identities_csv<W: Write>(r: &RunReport<IdentitiesOpts, IdentitiesResult>, out: W) -> Result<(), CliError> {
    let mut w = csv_writer(out);
    w.write_record(["identity", "max_residual"])?;
    for (name, v) in &r.results.max_residuals {
        w.write_record([name.clone(), fmt_f64(*v)])?;
    }
    w.flush()?;
    Ok(())
}

pub const CRANK_HEADER: [&str; 13] = [
    "index", "phi", "t", "status", "s", "psi", "psi_unwrapped", "s_dot", "psi_dot", "s_ddot",
    "psi_ddot", "e_psi_x", "e_psi_y",
];

pub fn crank_csv<W: Write>(r: &RunReport<CrankOpts, CrankResult>, out: W) -> Result<(), CliError> {
    let mut w = csv_writer(out);
    w.write_record(CRANK_HEADER)?;
    for e in &r.results.entries {
        let status = match e.status {
            symplane::SweepStatus::Regular => "regular",
            symplane::SweepStatus::NearSingular => "near_singular",
            symplane::SweepStatus::Singular => "singular",
        };
        let st = e.state.as_ref();
        w.write_record([
            e.index.to_string(),
            fmt_f64(e.phi),
            fmt_opt(e.t),
            status.to_string(),
            fmt_opt(st.map(|s| s.s)),
            fmt_opt(st.map(|s| s.psi)),
            fmt_opt(e.psi_unwrapped),
            fmt_opt(st.map(|s| s.s_dot)),
            fmt_opt(st.map(|s| s.psi_dot)),
            fmt_opt(st.map(|s| s.s_ddot)),
            fmt_opt(st.map(|s| s.psi_ddot)),
            fmt_opt(st.map(|s| s.e_psi.x)),
            fmt_opt(st.map(|s| s.e_psi.y)),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub const OSCILLATOR_HEADER: [&str; 8] =
    ["index", "t", "q", "p", "energy", "ellipse_residual", "analytic_q", "analytic_p"];

pub fn oscillator_csv<W: Write>(r: &RunReport<OscillatorOpts, OscillatorResult>, out: W) -> Result<(), CliError> {
    let mut w = csv_writer(out);
    w.write_record(OSCILLATOR_HEADER)?;
    let tr = &r.results.trajectory;
    let h0 = r.results.energy_initial;
    let s0 = tr.states[0];
    for (i, s) in tr.states.iter().enumerate() {
        let h = symplane::hamiltonian(s, &tr.params);
        let exact = analytic_oscillator(s.t, &s0, &tr.params);
        w.write_record([
            i.to_string(),
            fmt_f64(s.t),
            fmt_f64(s.q),
            fmt_f64(s.p),
            fmt_f64(h),
            fmt_f64(h - h0),
            fmt_f64(exact.q),
            fmt_f64(exact.p),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn pt(v: Vec2) -> (f64, f64) {
    (v.x, v.y)
}

pub fn intersect_svg(opts: &IntersectOpts, hit: &Intersection) -> String {
    let pts = [pt(opts.a), pt(opts.b), pt(hit.point)];
    let bounds = Bounds::of(&pts).expect("finite points").padded(0.3);
    let panel = full_panel(bounds.equal_aspect(710.0, 540.0));
    let mut svg = Svg::new();
    svg.frame(&panel, "line intersection");
    let reach = 2.0 * (bounds.x_max - bounds.x_min).max(bounds.y_max - bounds.y_min);
    for (i, (p, d)) in [(opts.a, opts.u), (opts.b, opts.v)].into_iter().enumerate() {
        let d = d / d.norm();
        svg.line(&panel, pt(p - d * reach), pt(p + d * reach), color(i), false);
        svg.dot(&panel, p.x, p.y, color(i));
    }
    svg.dot(&panel, hit.point.x, hit.point.y, "#000");
    svg.legend(&panel, &["line 1", "line 2"]);
    svg.finish()
}

pub fn tangents_svg(opts: &TangentsOpts, r: &TangentsResult) -> String {
    let mut pts = Vec::new();
    for c in [&opts.c1, &opts.c2] {
        pts.push((c.center.x - c.radius, c.center.y - c.radius));
        pts.push((c.center.x + c.radius, c.center.y + c.radius));
    }
    for t in &r.tangents {
        pts.push(pt(t.touch1));
        pts.push(pt(t.touch2));
    }
    let bounds = Bounds::of(&pts).expect("finite points").padded(0.15);
    let panel = full_panel(bounds.equal_aspect(710.0, 540.0));
    let mut svg = Svg::new();
    svg.frame(&panel, &format!("common tangents ({})", r.count));
    for (i, c) in [&opts.c1, &opts.c2].into_iter().enumerate() {
        svg.circle(&panel, c.center.x, c.center.y, c.radius, color(i));
        svg.dot(&panel, c.center.x, c.center.y, color(i));
    }
    let span = (bounds.x_max - bounds.x_min).max(bounds.y_max - bounds.y_min);
    for t in &r.tangents {
        let dir = t.direction_e.tilde();
        let stroke = match t.kind {
            symplane::TangentKind::Outer => color(2),
            symplane::TangentKind::Inner => color(3),
        };
        svg.line(&panel, pt(t.touch1 - dir * span), pt(t.touch1 + dir * span), stroke, true);
        svg.line(&panel, pt(t.touch1), pt(t.touch2), stroke, false);
        svg.dot(&panel, t.touch1.x, t.touch1.y, "#000");
        svg.dot(&panel, t.touch2.x, t.touch2.y, "#000");
    }
    svg.legend(&panel, &["circle 1", "circle 2", "outer", "inner"]);
    svg.finish()
}

/// Title, series names and the two series of one stacked panel.
type PlotPanel = (String, [&'static str; 2], [Vec<(f64, f64)>; 2]);

pub fn crank_svg(r: &RunReport<CrankOpts, CrankResult>) -> String {
    let entries = &r.results.entries;
    let series = |f: &dyn Fn(&symplane::CrankState, Option<f64>) -> f64| -> Vec<(f64, f64)> {
        entries
            .iter()
            .map(|e| (e.phi, e.state.as_ref().map_or(f64::NAN, |s| f(s, e.psi_unwrapped))))
            .collect()
    };
    let unit = &r.results.angle_unit;
    let panels: [PlotPanel; 3] = [
        (
            format!("position vs phi [{unit}]"),
            ["s", "psi (unwrapped)"],
            [series(&|s, _| s.s), series(&|_, u| u.unwrap_or(f64::NAN))],
        ),
        (
            "velocity".into(),
            ["s_dot", "psi_dot"],
            [series(&|s, _| s.s_dot), series(&|s, _| s.psi_dot)],
        ),
        (
            "acceleration".into(),
            ["s_ddot", "psi_ddot"],
            [series(&|s, _| s.s_ddot), series(&|s, _| s.psi_ddot)],
        ),
    ];
    let mut svg = Svg::new();
    for ((title, names, data), (left, top, width, height)) in panels.iter().zip(stacked_panels(3)) {
        let bounds = Bounds::of(data.iter().flatten())
            .unwrap_or(Bounds { x_min: 0.0, x_max: 1.0, y_min: 0.0, y_max: 1.0 })
            .padded(0.05);
        let panel = Panel { left, top, width, height, bounds };
        svg.frame(&panel, title);
        for (i, d) in data.iter().enumerate() {
            svg.polyline(&panel, d, color(i));
        }
        svg.legend(&panel, names);
    }
    svg.finish()
}

pub fn oscillator_svg(r: &RunReport<OscillatorOpts, OscillatorResult>) -> String {
    let tr = &r.results.trajectory;
    let s0 = tr.states[0];
    let period = TAU / tr.params.omega();
    let ellipse: Vec<(f64, f64)> = (0..=400)
        .map(|i| {
            let s = analytic_oscillator(period * i as f64 / 400.0, &s0, &tr.params);
            (s.q, s.p)
        })
        .collect();
    let path: Vec<(f64, f64)> = tr.states.iter().map(|s| (s.q, s.p)).collect();
    let bounds = Bounds::of(ellipse.iter())
        .expect("finite ellipse")
        .union(Bounds::of(path.iter()).unwrap_or(Bounds { x_min: 0.0, x_max: 0.0, y_min: 0.0, y_max: 0.0 }))
        .padded(0.08);
    let panel = full_panel(bounds.equal_aspect(710.0, 540.0));
    let mut svg = Svg::new();
    svg.frame(&panel, &format!("phase portrait (q, p), {:?}, dt = {}", tr.integrator, tr.dt));
    svg.polyline(&panel, &ellipse, color(0));
    svg.polyline(&panel, &path, color(1));
    svg.dot(&panel, s0.q, s0.p, "#000");
    svg.legend(&panel, &["energy ellipse", "trajectory"]);
    svg.finish()
}
