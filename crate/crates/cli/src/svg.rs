//! Minimal SVG writer: polylines, circles, lines and text on a fixed
//! 800×600 canvas, with data-to-pixel scaling per panel.

use std::fmt::Write;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

pub fn color(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Bounds {
    pub fn of<'a>(points: impl IntoIterator<Item = &'a (f64, f64)>) -> Option<Bounds> {
        let mut it = points.into_iter().filter(|(x, y)| x.is_finite() && y.is_finite());
        let &(x, y) = it.next()?;
        let mut b = Bounds { x_min: x, x_max: x, y_min: y, y_max: y };
        for &(x, y) in it {
            b.x_min = b.x_min.min(x);
            b.x_max = b.x_max.max(x);
            b.y_min = b.y_min.min(y);
            b.y_max = b.y_max.max(y);
        }
        Some(b)
    }

    /// Grow by `frac` of the span on every side; flat spans get a unit pad.
    pub fn padded(self, frac: f64) -> Bounds {
        let pad = |lo: f64, hi: f64| {
            let span = hi - lo;
            if span > 0.0 {
                (lo - frac * span, hi + frac * span)
            } else {
                (lo - 1.0, hi + 1.0)
            }
        };
        let (x_min, x_max) = pad(self.x_min, self.x_max);
        let (y_min, y_max) = pad(self.y_min, self.y_max);
        Bounds { x_min, x_max, y_min, y_max }
    }

    /// Widen the shorter axis so one data unit has the same length on both
    /// axes inside a `w`×`h` pixel box.
    pub fn equal_aspect(self, w: f64, h: f64) -> Bounds {
        let (dx, dy) = (self.x_max - self.x_min, self.y_max - self.y_min);
        let scale = (dx / w).max(dy / h);
        let (cx, cy) = ((self.x_min + self.x_max) / 2.0, (self.y_min + self.y_max) / 2.0);
        let (hw, hh) = (scale * w / 2.0, scale * h / 2.0);
        Bounds { x_min: cx - hw, x_max: cx + hw, y_min: cy - hh, y_max: cy + hh }
    }

    pub fn union(self, o: Bounds) -> Bounds {
        Bounds {
            x_min: self.x_min.min(o.x_min),
            x_max: self.x_max.max(o.x_max),
            y_min: self.y_min.min(o.y_min),
            y_max: self.y_max.max(o.y_max),
        }
    }
}

/// A rectangular region of the canvas mapped onto data bounds.
#[derive(Debug, Clone, Copy)]
pub struct Panel {
    pub left: f64,
    pub top: f64,
    pub width: f64,
    pub height: f64,
    pub bounds: Bounds,
}

impl Panel {
    pub fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let b = &self.bounds;
        let px = self.left + (x - b.x_min) / (b.x_max - b.x_min) * self.width;
        let py = self.top + (b.y_max - y) / (b.y_max - b.y_min) * self.height;
        (px, py)
    }

    /// Pixels per data unit along x.
    pub fn x_scale(&self) -> f64 {
        self.width / (self.bounds.x_max - self.bounds.x_min)
    }
}

pub struct Svg {
    body: String,
}

impl Default for Svg {
    fn default() -> Self {
        Self::new()
    }
}

impl Svg {
    pub fn new() -> Self {
        Svg { body: String::new() }
    }

    pub fn polyline(&mut self, panel: &Panel, points: &[(f64, f64)], stroke: &str) {
        // Split at non-finite samples so gaps stay gaps.
        for run in points.split(|(x, y)| !(x.is_finite() && y.is_finite())) {
            if run.len() < 2 {
                continue;
            }
            let mut pts = String::new();
            for &(x, y) in run {
                let (px, py) = panel.map(x, y);
                let _ = write!(pts, "{px:.2},{py:.2} ");
            }
            let _ = writeln!(
                self.body,
                r#"<polyline fill="none" stroke="{stroke}" stroke-width="1.5" points="{}"/>"#,
                pts.trim_end()
            );
        }
    }

    pub fn circle(&mut self, panel: &Panel, cx: f64, cy: f64, r: f64, stroke: &str) {
        let (px, py) = panel.map(cx, cy);
        let pr = r * panel.x_scale();
        let _ = writeln!(
            self.body,
            r#"<circle cx="{px:.2}" cy="{py:.2}" r="{pr:.2}" fill="none" stroke="{stroke}" stroke-width="1.5"/>"#
        );
    }

    pub fn dot(&mut self, panel: &Panel, x: f64, y: f64, fill: &str) {
        let (px, py) = panel.map(x, y);
        let _ = writeln!(self.body, r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="{fill}"/>"#);
    }

    pub fn line(&mut self, panel: &Panel, from: (f64, f64), to: (f64, f64), stroke: &str, dashed: bool) {
        let (x1, y1) = panel.map(from.0, from.1);
        let (x2, y2) = panel.map(to.0, to.1);
        let dash = if dashed { r#" stroke-dasharray="4 3""# } else { "" };
        let _ = writeln!(
            self.body,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="1"{dash}/>"#
        );
    }

    pub fn text(&mut self, x: f64, y: f64, size: u32, fill: &str, content: &str) {
        let _ = writeln!(
            self.body,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="{size}" fill="{fill}">{}</text>"#,
            escape(content)
        );
    }

    /// Frame, zero axes when in range, bound labels and a title.
    pub fn frame(&mut self, panel: &Panel, title: &str) {
        let b = panel.bounds;
        let _ = writeln!(
            self.body,
            r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#888"/>"##,
            panel.left, panel.top, panel.width, panel.height
        );
        if b.y_min < 0.0 && b.y_max > 0.0 {
            self.line(panel, (b.x_min, 0.0), (b.x_max, 0.0), "#bbb", true);
        }
        if b.x_min < 0.0 && b.x_max > 0.0 {
            self.line(panel, (0.0, b.y_min), (0.0, b.y_max), "#bbb", true);
        }
        let bottom = panel.top + panel.height;
        self.text(panel.left, panel.top - 6.0, 13, "#000", title);
        self.text(panel.left, bottom + 12.0, 10, "#555", &format!("{:.4}", b.x_min));
        self.text(panel.left + panel.width - 50.0, bottom + 12.0, 10, "#555", &format!("{:.4}", b.x_max));
        self.text(panel.left - 48.0, bottom, 10, "#555", &format!("{:.4}", b.y_min));
        self.text(panel.left - 48.0, panel.top + 10.0, 10, "#555", &format!("{:.4}", b.y_max));
    }

    pub fn legend(&mut self, panel: &Panel, names: &[&str]) {
        for (i, name) in names.iter().enumerate() {
            let y = panel.top + 14.0 + 14.0 * i as f64;
            let x = panel.left + panel.width - 110.0;
            let _ = writeln!(
                self.body,
                r#"<rect x="{x:.2}" y="{:.2}" width="10" height="10" fill="{}"/>"#,
                y - 9.0,
                color(i)
            );
            self.text(x + 14.0, y, 11, "#000", name);
        }
    }

    pub fn finish(self) -> String {
        format!(
            concat!(
                r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#,
                "\n",
                r#"<rect width="100%" height="100%" fill="white"/>"#,
                "\n{body}</svg>\n"
            ),
            w = WIDTH,
            h = HEIGHT,
            body = self.body
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// A single full-canvas panel with margins for labels.
pub fn full_panel(bounds: Bounds) -> Panel {
    Panel { left: 60.0, top: 30.0, width: WIDTH - 90.0, height: HEIGHT - 60.0, bounds }
}

/// `n` panels stacked vertically.
pub fn stacked_panels(n: usize) -> Vec<(f64, f64, f64, f64)> {
    let gap = 34.0;
    let h = (HEIGHT - 20.0 - gap * n as f64) / n as f64;
    (0..n)
        .map(|i| (60.0, 24.0 + i as f64 * (h + gap), WIDTH - 90.0, h))
        .collect()
}
